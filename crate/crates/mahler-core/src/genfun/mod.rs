//! The generating function f_P(z) = Σ_{n≥1} Δ(P_n) z^n as an explicit
//! rational function.
//!
//! Δ(P_n) is a ℤ-linear combination of n-th powers of monomials in the roots
//! of P, so f_P is rational with simple poles. [`recurrence`] reconstructs
//! it exactly from a Berlekamp-Massey fit verified on held-out terms;
//! [`minton`] rewrites it as an integer combination Σ c_j z u_j'(z)/u_j(z)
//! (possible exactly because the coefficients satisfy the Gauss congruences)
//! and checks the equivalent infinite-product identity
//! ∏ (1-z^n)^{r_n} = ∏ u_j(z)^{-c_j} with r_n = δ_n(P)/n.

pub mod minton;
pub mod recurrence;

pub use minton::{
    minton_decompose, product_identity_check, MintonDecomposition, MintonTerm, MintonTermJson,
    ProductIdentity,
};
pub use recurrence::{berlekamp_massey, rational_fn_of_delta, Recurrence};

use crate::error::{Error, Result};
use crate::polycore::numth::{divisors, moebius};
use crate::polycore::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

/// A rational function in z with integer coefficients, denominator constant
/// term 1, numerator and denominator coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    pub num: IntPoly,
    pub den: IntPoly,
}

#[derive(Serialize)]
pub struct RationalFnJson {
    pub num: String,
    pub den: String,
}

impl RationalFn {
    /// Taylor coefficients s_0, ..., s_nmax at z = 0, exact. The constant
    /// term 1 of the denominator makes every coefficient an integer.
    pub fn taylor(&self, nmax: u64) -> Vec<BigInt> {
        debug_assert!(self.den.coeff(0).is_one());
        let t = nmax as usize;
        let mut s = Vec::with_capacity(t + 1);
        for k in 0..=t {
            let mut v = self.num.coeff(k);
            for i in 1..=self.den.deg().min(k) {
                v -= self.den.coeff(i) * &s[k - i];
            }
            s.push(v);
        }
        s
    }

    pub fn to_json(&self) -> RationalFnJson {
        RationalFnJson { num: self.num.coeff_string(), den: self.den.coeff_string() }
    }
}

/// g_P(z) = Σ b_n z^n = z/(1 + a₁z + a₀z²) for a monic quadratic. Its
/// coefficients do not satisfy the Gauss congruences, which is exactly what
/// blocks a Minton decomposition of g_P.
pub fn g_quadratic(p: &IntPoly) -> Result<RationalFn> {
    p.require_monic("g_quadratic")?;
    if p.deg() != 2 {
        return Err(Error::Domain("g_quadratic needs degree exactly 2".into()));
    }
    let den = IntPoly::new(vec![BigInt::one(), p.coeff(1), p.coeff(0)]);
    Ok(RationalFn { num: IntPoly::x_pow(1), den })
}

/// Upper bound for the linear-recurrence order of Δ(P_n): the monomials are
/// products ∏ α_j^{e_j} with Σ e_j = d(d-1), so there are at most
/// C(d(d-1)+d-1, d-1) of them. Clamped to 2000.
pub fn order_bound(d: usize) -> usize {
    let n = d * (d - 1) + d - 1;
    let k = d - 1;
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
        if acc > 2000 {
            return 2000;
        }
    }
    acc as usize
}

/// Least n with Σ_{m|n} μ(n/m) a_m ≢ 0 mod n, scanning a_1, ..., a_N as
/// given; None when the whole prefix has the Gauss property.
pub fn gauss_property_witness(seq: &[BigInt]) -> Option<u64> {
    for n in 1..=seq.len() as u64 {
        let mut acc = BigInt::zero();
        for m in divisors(n) {
            let mu = moebius(n / m);
            if mu != 0 {
                acc += BigInt::from(mu) * &seq[(m - 1) as usize];
            }
        }
        if !(&acc % BigInt::from(n)).is_zero() {
            return Some(n);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::delta::b_seq_quadratic;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn big_seq(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn taylor_expands_a_geometric_series() {
        let f = RationalFn { num: IntPoly::from_i64(&[0, 1]), den: IntPoly::from_i64(&[1, -2]) };
        assert_eq!(f.taylor(5), big_seq(&[0, 1, 2, 4, 8, 16]));
    }

    #[test]
    fn g_quadratic_generates_b() {
        let p = poly(&[1, -3, 1]);
        let g = g_quadratic(&p).unwrap();
        assert_eq!(g.den, IntPoly::from_i64(&[1, -3, 1]));
        let b = b_seq_quadratic(&p, 6).unwrap();
        assert_eq!(g.taylor(6)[1..], b[..]);
        // x² - x - 1 gives the Fibonacci numbers.
        let fib = g_quadratic(&poly(&[-1, -1, 1])).unwrap().taylor(8);
        assert_eq!(fib, big_seq(&[0, 1, 1, 2, 3, 5, 8, 13, 21]));
    }

    #[test]
    fn order_bound_small_degrees() {
        assert_eq!(order_bound(2), 3);
        assert_eq!(order_bound(3), 28);
        assert_eq!(order_bound(4), 455);
        assert_eq!(order_bound(8), 2000);
    }

    #[test]
    fn gauss_witness_examples() {
        let pow2: Vec<BigInt> = (1..=16u32).map(|n| BigInt::from(2).pow(n)).collect();
        assert_eq!(gauss_property_witness(&pow2), None);
        // a_n = n already fails at n = 2: a_2 - a_1 = 1.
        let linear: Vec<BigInt> = (1..=10i64).map(BigInt::from).collect();
        assert_eq!(gauss_property_witness(&linear), Some(2));
        // b_n fails at n = 3: b_3 - b_1 = 7.
        let b = b_seq_quadratic(&poly(&[1, -3, 1]), 10).unwrap();
        assert_eq!(gauss_property_witness(&b), Some(3));
    }
}
