//! Composed products: given monic A, B with roots α_i, β_j, the monic integer
//! polynomial with roots α_i β_j (all pairs, with multiplicity), and the
//! multiset polynomials built from them.
//!
//! The primary construction is the bivariate resultant
//! Res_y(A(y), y^{deg B} B(x/y)), specialized at enough integer points x = t
//! and recovered by exact rational interpolation; the y-leading coefficient
//! of y^b B(t/y) is B(0), so zero roots are split off first and reattached as
//! a power of x. An independent oracle multiplies power sums pointwise
//! (p_k(A∘B) = p_k(A)·p_k(B)) and runs Newton in reverse.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polycore::poly::IntPoly;
use crate::polycore::powermap::{from_power_sums, power_map, power_sums};
use crate::polycore::resultant::resultant;

/// Split monic P as x^k · Q with Q(0) != 0; returns (k, Q).
fn strip_zero_roots(p: &IntPoly) -> (usize, IntPoly) {
    let k = p
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let q = IntPoly::new(p.coeffs()[k..].to_vec());
    (k, q)
}

/// Monic polynomial whose root multiset is { αβ : A(α) = 0, B(β) = 0 }.
/// Degree is deg A · deg B.
pub fn composed_product(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    a.require_monic("composed_product")?;
    b.require_monic("composed_product")?;
    if a.deg() == 0 || b.deg() == 0 {
        return Ok(IntPoly::one());
    }
    let (ka, a1) = strip_zero_roots(a);
    let (kb, b1) = strip_zero_roots(b);
    // Pairs with at least one zero factor contribute x^{zeros}.
    let zeros = ka * b.deg() + kb * a.deg() - ka * kb;
    let (da, db) = (a1.deg(), b1.deg());
    let core = if da == 0 || db == 0 {
        IntPoly::one()
    } else {
        composed_core(&a1, &b1)?
    };
    Ok(&core * &IntPoly::x_pow(zeros))
}

/// Composed product of monic A, B with A(0), B(0) != 0, via specialization of
/// Res_y(A(y), y^b B(x/y)) at x = t and rational interpolation.
fn composed_core(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    let (da, db) = (a.deg(), b.deg());
    let deg = da * db;
    // D_t(y) = y^b B(t/y) has y-coefficients c_m = b_{b-m} t^{b-m}; its
    // leading coefficient is B(0) != 0, so deg_y D_t = b for every t.
    let eval = |t: &BigInt| -> Result<BigInt> {
        let coeffs: Vec<BigInt> = (0..=db)
            .map(|m| b.coeff(db - m) * t.pow((db - m) as u32))
            .collect();
        let dt = IntPoly::new(coeffs);
        resultant(a, &dt)
    };
    let mut points: Vec<BigInt> = Vec::with_capacity(deg + 1);
    let mut values: Vec<BigInt> = Vec::with_capacity(deg + 1);
    let mut t = BigInt::zero();
    while points.len() <= deg {
        values.push(eval(&t)?);
        points.push(t.clone());
        // 0, 1, -1, 2, -2, ...
        t = if t.is_positive() { -t } else { BigInt::one() - t };
    }
    let out = interpolate_integer(&points, &values)?;
    if out.deg() != deg || !out.is_monic() {
        return Err(Error::Integrity(
            "composed product interpolation is not monic of the right degree".into(),
        ));
    }
    Ok(out)
}

/// Newton-form interpolation over ℚ through (points[i], values[i]), checked
/// to land in ℤ[x].
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> Result<IntPoly> {
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|p| BigRational::from(p.clone())).collect();
    // Divided differences in place.
    let mut dd: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from(v.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Horner expansion of the Newton form into monomial coefficients.
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        for j in (1..n).rev() {
            let t = coeffs[j - 1].clone() - &coeffs[j] * &xs[i];
            coeffs[j] = t;
        }
        coeffs[0] = &dd[i] - &coeffs[0] * &xs[i];
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::Integrity(
                "interpolant has a non-integer coefficient".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(IntPoly::new(out))
}

/// Oracle: composed product by pointwise products of power sums. Shares no
/// code with the resultant construction; for tests.
pub fn composed_product_oracle(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    a.require_monic("composed_product_oracle")?;
    b.require_monic("composed_product_oracle")?;
    if a.deg() == 0 || b.deg() == 0 {
        return Ok(IntPoly::one());
    }
    let deg = a.deg() * b.deg();
    let pa = power_sums(a, deg)?;
    let pb = power_sums(b, deg)?;
    let q: Vec<BigInt> = (0..deg).map(|k| &pa[k] * &pb[k]).collect();
    from_power_sums(deg, &q)
}

/// A finite multiset of positive integers (a sorted list with repeats).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset(Vec<u64>);

impl Multiset {
    pub fn new(mut entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("multiset must be nonempty".into()));
        }
        if entries.iter().any(|&n| n == 0) {
            return Err(Error::Domain("multiset entries must be >= 1".into()));
        }
        entries.sort_unstable();
        Ok(Multiset(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl std::fmt::Display for Multiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

/// P_𝒩 for a multiset 𝒩 = {n_1, ..., n_r}: the monic polynomial of degree
/// d^r whose roots are ∏_i α_{j_i}^{n_i} over all index tuples (j_1, ..., j_r).
/// Built by folding composed products of the power maps P_{n_i}.
pub fn multiset_poly(p: &IntPoly, ns: &Multiset) -> Result<IntPoly> {
    p.require_monic("multiset_poly")?;
    let d = p.deg();
    let r = ns.len() as u32;
    if d > 0 {
        let degree = (d as u64).checked_pow(r).filter(|&x| x <= 1 << 20);
        if degree.is_none() {
            return Err(Error::Resource(format!(
                "multiset polynomial degree {d}^{r} too large"
            )));
        }
    }
    let mut acc: Option<IntPoly> = None;
    for &n in ns.entries() {
        let pn = power_map(p, n)?;
        acc = Some(match acc {
            None => pn,
            Some(cur) => composed_product(&cur, &pn)?,
        });
    }
    Ok(acc.expect("multiset is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn golden_times_golden() {
        // A = x² - 3x + 1 has roots φ², φ⁻²; squares of products:
        // φ⁴, 1, 1, φ⁻⁴ -> (x²-7x+1)(x-1)² ... with A itself:
        // products φ²·φ², φ²·φ⁻², φ⁻²·φ², φ⁻²·φ⁻² = φ⁴, 1, 1, φ⁻⁴.
        let a = p(&[1, -3, 1]);
        let c = composed_product(&a, &a).unwrap();
        let expect = &p(&[1, -7, 1]) * &p(&[1, -2, 1]);
        assert_eq!(c, expect);
    }

    #[test]
    fn matches_oracle() {
        let cases = [
            (p(&[-1, -1, 1]), p(&[1, -3, 1])),
            (p(&[-1, -1, 0, 1]), p(&[-1, -1, 1])),
            (p(&[2, 0, -1, 1]), p(&[1, 1, 1])),
            (p(&[-2, 1]), p(&[5, -3, 1])),
        ];
        for (a, b) in &cases {
            let fast = composed_product(a, b).unwrap();
            let slow = composed_product_oracle(a, b).unwrap();
            assert_eq!(fast, slow, "composed product mismatch for ({a}, {b})");
            let swapped = composed_product(b, a).unwrap();
            assert_eq!(fast, swapped, "composed product should be symmetric");
        }
    }

    #[test]
    fn zero_roots_reattach() {
        // A = x(x-2), B = x(x-3): products {0,0,0,6}; composed = x³(x-6).
        let a = p(&[0, -2, 1]);
        let b = p(&[0, -3, 1]);
        let c = composed_product(&a, &b).unwrap();
        assert_eq!(c, &IntPoly::x_pow(3) * &p(&[-6, 1]));
        let oracle = composed_product_oracle(&a, &b).unwrap();
        assert_eq!(c, oracle);
    }

    #[test]
    fn multiset_singleton_is_power_map() {
        let f = p(&[-1, -1, 0, 1]);
        let m = Multiset::new(vec![4]).unwrap();
        assert_eq!(multiset_poly(&f, &m).unwrap(), power_map(&f, 4).unwrap());
    }

    #[test]
    fn multiset_pair_on_quadratic() {
        // P = x² - 3x + 1, 𝒩 = {1, 2}: roots α_j · α_k² over φ² =: u, u⁻¹.
        // Products: u·u², u·u⁻², u⁻¹·u², u⁻¹·u⁻² = u³, u⁻¹, u, u⁻³.
        // u + u⁻¹ = 7 (wait: u = φ², u + 1/u for x²-3x+1 is 3). Roots of P are
        // u, 1/u with u + 1/u = 3; u³ + u⁻³ = 3³ - 3·3 = 18.
        let f = p(&[1, -3, 1]);
        let m = Multiset::new(vec![1, 2]).unwrap();
        let got = multiset_poly(&f, &m).unwrap();
        let expect = &p(&[1, -18, 1]) * &p(&[1, -3, 1]);
        assert_eq!(got, expect);
    }

    #[test]
    fn multiset_rejects_empty_and_zero() {
        assert!(Multiset::new(vec![]).is_err());
        assert!(Multiset::new(vec![0, 2]).is_err());
    }

    #[test]
    fn interpolation_rejects_non_integer() {
        // f(0) = 0, f(2) = 1 forces a half-integer slope.
        let pts = [BigInt::from(0), BigInt::from(2)];
        let vals = [BigInt::from(0), BigInt::from(1)];
        assert!(interpolate_integer(&pts, &vals).is_err());
    }
}
