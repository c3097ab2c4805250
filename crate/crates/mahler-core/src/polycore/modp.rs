//! Polynomial arithmetic over 𝔽_p for word-sized primes.
//!
//! Powers the CRT resultant fast path (Euclidean resultants mod many 62-bit
//! primes) and the small-prime structure queries: gcd, squarefree test,
//! distinct-degree plus Cantor-Zassenhaus factorization, and multiplicative
//! orders. Polynomials are ascending `Vec<u64>` with no trailing zeros,
//! coefficients already reduced mod p.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::polycore::numth::{mulmod, powmod};
use crate::polycore::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    pub coeffs: Vec<u64>,
}

pub fn reduce_mod_p(poly: &IntPoly, p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    FpPoly::new(
        poly.coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

impl FpPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs }
    }

    pub fn zero() -> Self {
        FpPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        FpPoly { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        FpPoly { coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap()
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn scale(&self, c: u64, p: u64) -> FpPoly {
        FpPoly::new(self.coeffs.iter().map(|&a| mulmod(a, c, p)).collect())
    }

    pub fn monic(&self, p: u64) -> FpPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        self.scale(powmod(self.lc(), p - 2, p), p)
    }

    pub fn add(&self, rhs: &FpPoly, p: u64) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new((0..n).map(|k| (self.coeff(k) + rhs.coeff(k)) % p).collect())
    }

    pub fn sub(&self, rhs: &FpPoly, p: u64) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPoly::new(
            (0..n)
                .map(|k| (self.coeff(k) + p - rhs.coeff(k)) % p)
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &FpPoly, p: u64) -> FpPoly {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, p)) % p;
            }
        }
        FpPoly::new(out)
    }

    /// Division with remainder; divisor must be nonzero.
    pub fn divrem(&self, d: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
        debug_assert!(!d.is_zero());
        if self.is_zero() || self.deg() < d.deg() {
            return (FpPoly::zero(), self.clone());
        }
        let dd = d.deg();
        let inv = powmod(d.lc(), p - 2, p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            let q = mulmod(top, inv, p);
            quot[k] = q;
            for j in 0..=dd {
                let t = mulmod(q, d.coeffs[j], p);
                rem[k + j] = (rem[k + j] + p - t) % p;
            }
        }
        (FpPoly::new(quot), FpPoly::new(rem))
    }

    pub fn rem(&self, d: &FpPoly, p: u64) -> FpPoly {
        self.divrem(d, p).1
    }

    pub fn gcd(&self, rhs: &FpPoly, p: u64) -> FpPoly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    pub fn derivative(&self, p: u64) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero();
        }
        FpPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| mulmod(c, (k as u64) % p, p))
                .collect(),
        )
    }

    pub fn is_squarefree(&self, p: u64) -> bool {
        !self.is_zero() && (self.deg() == 0 || self.gcd(&self.derivative(p), p).is_one())
    }

    /// self^e mod (f, p), e an arbitrary-precision exponent.
    pub fn modpow(&self, e: &BigUint, f: &FpPoly, p: u64) -> FpPoly {
        let mut acc = FpPoly::one();
        let mut base = self.rem(f, p);
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base, p).rem(f, p);
            }
            if i + 1 < e.bits() {
                base = base.mul(&base, p).rem(f, p);
            }
        }
        acc
    }
}

// ---- Resultants over F_p ----

/// Res(A, B) mod p by the Euclidean recurrence
/// Res(A,B) = (-1)^{deg A · deg B} lc(B)^{deg A - deg R} Res(B, R).
pub fn resultant_mod_p(a: &FpPoly, b: &FpPoly, p: u64) -> u64 {
    if a.is_zero() || b.is_zero() {
        return 0;
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = 1u64;
    let mut negate = false;
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    while b.deg() > 0 {
        let r = a.rem(&b, p);
        if r.is_zero() {
            return 0;
        }
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            negate = !negate;
        }
        acc = mulmod(acc, powmod(b.lc(), (a.deg() - r.deg()) as u64, p), p);
        a = b;
        b = r;
    }
    acc = mulmod(acc, powmod(b.coeff(0), a.deg() as u64, p), p);
    if negate {
        (p - acc) % p
    } else {
        acc
    }
}

// ---- Factorization over F_p (squarefree input) ----

/// Factor a squarefree polynomial mod p into monic irreducibles, ascending
/// by (degree, coefficients). Deterministic: the Cantor-Zassenhaus splitting
/// elements are drawn from a fixed enumeration rather than an RNG.
pub fn factor_squarefree_mod_p(f: &FpPoly, p: u64) -> Vec<FpPoly> {
    debug_assert!(f.is_squarefree(p));
    let f = f.monic(p);
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    // Distinct-degree stage: peel off the product of all irreducible factors
    // of each degree k via gcd(x^{p^k} - x, f).
    let mut rest = f.clone();
    let mut h = FpPoly::x().rem(&rest, p);
    let mut k = 0usize;
    let pbig = BigUint::from(p);
    while !rest.is_zero() && rest.deg() > 0 {
        k += 1;
        if rest.deg() < 2 * k {
            // Whatever is left is irreducible.
            out.push(rest.monic(p));
            break;
        }
        h = h.modpow(&pbig, &rest, p);
        let hx = h.sub(&FpPoly::x(), p);
        let g = rest.gcd(&hx, p);
        if g.deg() > 0 {
            for piece in equal_degree_split(&g, k, p) {
                out.push(piece);
            }
            rest = rest.divrem(&g, p).0;
            h = h.rem(&rest, p);
        }
    }
    out.sort_by(|a, b| (a.deg(), &a.coeffs).cmp(&(b.deg(), &b.coeffs)));
    out
}

/// Split a product of irreducibles that all have degree k.
fn equal_degree_split(g: &FpPoly, k: usize, p: u64) -> Vec<FpPoly> {
    if g.deg() == k {
        return vec![g.monic(p)];
    }
    let mut pieces = vec![g.monic(p)];
    let mut done = Vec::new();
    // Fixed enumeration of trial elements: x+1, x+2, …, then higher-degree
    // polynomials with counter-encoded coefficients.
    let mut counter = 1u64;
    while let Some(target) = pieces.pop() {
        if target.deg() == k {
            done.push(target);
            continue;
        }
        let trial = trial_element(counter, target.deg(), p);
        counter += 1;
        let splitter = if p == 2 {
            // Trace map over F_2: T(a) = a + a^2 + ... + a^{2^{k-1}}.
            let mut t = trial.rem(&target, p);
            let mut acc = t.clone();
            for _ in 1..k {
                t = t.mul(&t, p).rem(&target, p);
                acc = acc.add(&t, p);
            }
            acc
        } else {
            // a^{(p^k-1)/2} - 1 kills half the factors on average.
            let e = (pbig_pow(p, k as u32) - 1u32) / 2u32;
            let t = trial.modpow(&e, &target, p);
            t.sub(&FpPoly::one(), p)
        };
        let d = target.gcd(&splitter, p);
        if d.deg() == 0 || d.deg() == target.deg() {
            pieces.push(target);
        } else {
            let q = target.divrem(&d, p).0;
            pieces.push(d);
            pieces.push(q);
        }
    }
    done
}

fn pbig_pow(p: u64, k: u32) -> BigUint {
    BigUint::from(p).pow(k)
}

/// Counter-indexed trial element of degree < bound (at least 1 so the gcd
/// has a chance to be proper).
fn trial_element(counter: u64, bound: usize, p: u64) -> FpPoly {
    let mut c = counter;
    let mut coeffs = vec![0u64; bound.max(2)];
    let mut k = 0usize;
    while c > 0 {
        let idx = k % coeffs.len();
        coeffs[idx] = (coeffs[idx] + c % p) % p;
        c /= p.max(2);
        k += 1;
    }
    coeffs[1] = (coeffs[1] + 1) % p;
    FpPoly::new(coeffs)
}

/// Multiplicative order of x modulo (f, p) for f irreducible with f(0) != 0:
/// divides p^{deg f} - 1, computed by descending through the factored group
/// order. Returns None if the group order cannot be fully factored.
pub fn order_of_x_mod(f: &FpPoly, p: u64) -> Option<BigUint> {
    let group = pbig_pow(p, f.deg() as u32) - 1u32;
    let fac = crate::polycore::factorize::factorize(&BigInt::from(group.clone()));
    if !fac.is_complete() {
        return None;
    }
    let mut order = group;
    for (q, _) in &fac.factors {
        let q = q.magnitude();
        loop {
            let cand = &order / q;
            if (&order % q).is_zero() && FpPoly::x().modpow(&cand, f, p).is_one() {
                order = cand;
            } else {
                break;
            }
        }
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let p = 97;
        let a = FpPoly::new(vec![3, 1, 4, 1, 5]);
        let b = FpPoly::new(vec![2, 7, 1]);
        let (q, r) = a.divrem(&b, p);
        let back = q.mul(&b, p).add(&r, p);
        assert_eq!(back, a);
        assert!(r.is_zero() || r.deg() < b.deg());
    }

    #[test]
    fn resultant_matches_hand_value() {
        // Res(x-2, x-3) = -1 over Z; mod 97 that is 96.
        let p = 97;
        let a = FpPoly::new(vec![p - 2, 1]);
        let b = FpPoly::new(vec![p - 3, 1]);
        assert_eq!(resultant_mod_p(&a, &b, p), p - 1);
        // Res(x^2-3x+1, x^2-7x+1) = 16.
        let a = FpPoly::new(vec![1, p - 3, 1]);
        let b = FpPoly::new(vec![1, p - 7, 1]);
        assert_eq!(resultant_mod_p(&a, &b, p), 16);
    }

    #[test]
    fn factor_mod_2_and_mod_5() {
        // x^2+x+1 irreducible mod 2.
        let f = FpPoly::new(vec![1, 1, 1]);
        let fs = factor_squarefree_mod_p(&f, 2);
        assert_eq!(fs, vec![f.clone()]);
        // x^2-1 = (x-1)(x+1) mod 5.
        let g = FpPoly::new(vec![4, 0, 1]);
        let gs = factor_squarefree_mod_p(&g, 5);
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].mul(&gs[1], 5), g);
        // A degree-6 product of mixed-degree irreducibles mod 5:
        // (x+2)(x^2+2)(x^3+x+1); x^2+2 and x^3+x+1 are irreducible mod 5.
        let h = FpPoly::new(vec![2, 1])
            .mul(&FpPoly::new(vec![2, 0, 1]), 5)
            .mul(&FpPoly::new(vec![1, 1, 0, 1]), 5);
        let hs = factor_squarefree_mod_p(&h, 5);
        assert_eq!(hs.len(), 3);
        let back = hs.iter().fold(FpPoly::one(), |acc, f| acc.mul(f, 5));
        assert_eq!(back, h.monic(5));
    }

    #[test]
    fn order_of_x_in_f4() {
        // x^2+x+1 mod 2: quotient is F_4, x has order 3.
        let f = FpPoly::new(vec![1, 1, 1]);
        assert_eq!(order_of_x_mod(&f, 2), Some(BigUint::from(3u32)));
        // x^3+x+1 mod 2 (reverse of x^3-x-1): F_8, order 7.
        let g = FpPoly::new(vec![1, 1, 0, 1]);
        assert_eq!(order_of_x_mod(&g, 2), Some(BigUint::from(7u32)));
    }
}
