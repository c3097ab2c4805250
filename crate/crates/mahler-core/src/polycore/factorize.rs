//! Integer factorization into certified primes.
//!
//! Trial division by small primes, deterministic Miller-Rabin certification,
//! then Brent-cycle Pollard rho with a bounded work budget. Numbers whose
//! remaining cofactor resists the budget come back as a partial
//! factorization with the composite cofactor flagged explicitly; partial
//! results are not errors, and recomposition is exact either way.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::polycore::numth::{factorize_u64, is_prime, small_primes};

/// Sign plus prime powers, primes strictly increasing. When the work budget
/// runs out, the unfactored composite remainder sits in `cofactor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// -1, 0, or +1.
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
    /// Composite part that resisted factorization, if any (always > 1,
    /// never prime).
    pub cofactor: Option<BigInt>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    /// Recompose sign · ∏ p^e · cofactor exactly.
    pub fn recompose(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            v *= p.pow(*e);
        }
        if let Some(c) = &self.cofactor {
            v *= c;
        }
        v
    }

    /// Exponent of a prime in the factored part (0 if absent).
    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Display like "-2^6 * 23" (sign, then prime powers).
    pub fn to_display(&self) -> String {
        match self.sign {
            0 => return "0".into(),
            _ if self.factors.is_empty() && self.cofactor.is_none() => {
                return if self.sign < 0 { "-1".into() } else { "1".into() }
            }
            _ => {}
        }
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if let Some(c) = &self.cofactor {
            parts.push(format!("{c}?"));
        }
        let body = parts.join(" * ");
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// JSON form: sign listed separately, primes as decimal strings.
#[derive(Serialize)]
pub struct FactorizationJson {
    pub sign: i8,
    pub factors: Vec<(String, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub composite_cofactor: Option<String>,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        FactorizationJson {
            sign: f.sign,
            factors: f.factors.iter().map(|(p, e)| (p.to_string(), *e)).collect(),
            composite_cofactor: f.cofactor.as_ref().map(|c| c.to_string()),
        }
    }
}

/// Rho iteration budget per candidate before the cofactor is declared
/// stubborn. Enough for ~50-bit prime factors, far beyond any value the
/// sequence theorems produce at desk scale.
const RHO_BUDGET: u64 = 1 << 21;

/// Factor an arbitrary-precision integer. Never fails: a too-hard composite
/// is returned in `cofactor`.
pub fn factorize(n: &BigInt) -> Factorization {
    if n.is_zero() {
        return Factorization { sign: 0, factors: vec![], cofactor: None };
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.magnitude().clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for &p in small_primes() {
        if m.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            factors.push((BigInt::from(p), e));
        }
    }
    let mut cofactor = None;
    if !m.is_one() {
        let mut stack = vec![m];
        let mut stubborn = BigUint::one();
        while let Some(v) = stack.pop() {
            if v.is_one() {
                continue;
            }
            if let Some(small) = v.to_u64() {
                for (p, e) in factorize_u64(small) {
                    push_factor(&mut factors, BigInt::from(p), e);
                }
                continue;
            }
            if is_prime(&v) {
                push_factor(&mut factors, BigInt::from(v), 1);
                continue;
            }
            // Perfect powers first: rho degenerates on them.
            if let Some((root, k)) = perfect_power(&v) {
                for _ in 0..k {
                    stack.push(root.clone());
                }
                continue;
            }
            match rho_bigint(&v) {
                Some(d) => {
                    stack.push(&v / &d);
                    stack.push(d);
                }
                None => stubborn *= &v,
            }
        }
        if !stubborn.is_one() {
            cofactor = Some(BigInt::from(stubborn));
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Factorization { sign, factors, cofactor }
}

fn push_factor(factors: &mut Vec<(BigInt, u32)>, p: BigInt, e: u32) {
    match factors.iter_mut().find(|(q, _)| *q == p) {
        Some((_, old)) => *old += e,
        None => factors.push((p, e)),
    }
}

/// Detect v = r^k with k >= 2; returns the smallest such r.
fn perfect_power(v: &BigUint) -> Option<(BigUint, u32)> {
    let bits = v.bits();
    for k in 2..=bits {
        let r = v.nth_root(k as u32);
        if r.pow(k as u32) == *v {
            return Some((r, k as u32));
        }
        if r < BigUint::from(2u32) {
            break;
        }
    }
    None
}

/// Brent-cycle rho over BigUint with a fixed budget; deterministic parameter
/// schedule, None when the budget is exhausted.
fn rho_bigint(n: &BigUint) -> Option<BigUint> {
    let one = BigUint::one();
    for c in 1u64..20 {
        let cbig = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cbig) % n;
        let mut y = BigUint::from(2u32);
        let mut spent = 0u64;
        let mut cycle_len = 1u64;
        let mut x;
        let mut d = one.clone();
        'brent: while d.is_one() {
            x = y.clone();
            for _ in 0..cycle_len {
                y = f(&y);
            }
            let mut k = 0u64;
            while k < cycle_len && d.is_one() {
                let chunk = (cycle_len - k).min(128);
                let mut q = one.clone();
                let ys = y.clone();
                for _ in 0..chunk {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                spent += chunk;
                if spent > RHO_BUDGET {
                    break 'brent;
                }
                d = q.gcd(n);
                if d == *n {
                    // Backtrack one step at a time.
                    let mut yy = ys;
                    d = one.clone();
                    while d.is_one() {
                        yy = f(&yy);
                        let diff = if x > yy { &x - &yy } else { &yy - &x };
                        d = diff.gcd(n);
                    }
                    break;
                }
                k += chunk;
            }
            cycle_len *= 2;
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: i64) -> Factorization {
        factorize(&BigInt::from(n))
    }

    #[test]
    fn paper_values() {
        let u7 = f(705_600);
        assert_eq!(u7.sign, 1);
        assert_eq!(
            u7.factors,
            vec![
                (BigInt::from(2), 6),
                (BigInt::from(3), 2),
                (BigInt::from(5), 2),
                (BigInt::from(7), 2)
            ]
        );
        let d7 = f(-1472);
        assert_eq!(d7.sign, -1);
        assert_eq!(d7.factors, vec![(BigInt::from(2), 6), (BigInt::from(23), 1)]);
        assert_eq!(d7.to_display(), "-2^6 * 23");
    }

    #[test]
    fn units_and_zero() {
        assert_eq!(f(1), Factorization { sign: 1, factors: vec![], cofactor: None });
        assert_eq!(f(-1).sign, -1);
        assert_eq!(f(0).sign, 0);
        assert_eq!(f(0).recompose(), BigInt::zero());
    }

    #[test]
    fn recomposition_medium() {
        // Product of two 11-digit primes: rho must crack it.
        let a: BigInt = "10000000019".parse().unwrap();
        let b: BigInt = "10000000033".parse().unwrap();
        let n = &a * &b;
        let fac = factorize(&n);
        assert!(fac.is_complete());
        assert_eq!(fac.factors, vec![(a, 1), (b, 1)]);
        assert_eq!(fac.recompose(), n);
    }

    #[test]
    fn perfect_power_of_prime() {
        // 2^107 - 1, a Mersenne prime.
        let p: BigInt = "162259276829213363391578010288127".parse().unwrap();
        let n = &p * &p;
        let fac = factorize(&n);
        assert!(fac.is_complete());
        assert_eq!(fac.factors, vec![(p, 2)]);
    }
}
