//! Minton decomposition f = Σ_j c_j z u_j'(z)/u_j(z) and the product
//! identity ∏_{n≥1} (1-z^n)^{r_n} = ∏_j u_j(z)^{-c_j}.
//!
//! The denominator is factored over ℤ by clustering certified roots:
//! candidate factors are built from subsets of the inverse roots, rounded,
//! and accepted only when exact division succeeds. Minimal subsets give
//! irreducible factors; the float part only proposes, the integer division
//! decides. The weights c_j come from an exact linear solve, and any
//! non-integer weight is a genuine obstruction (the coefficients fail the
//! Gauss congruences), not a numerical artifact.

use super::{order_bound, RationalFn};
use crate::error::{Error, Result};
use crate::polycore::IntPoly;
use crate::roots_mahler::find_roots;
use crate::sequences::delta::delta_seq;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

const FACTOR_DEGREE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MintonTerm {
    /// Irreducible over ℚ, u(0) = 1.
    pub u: IntPoly,
    pub c: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MintonDecomposition {
    pub terms: Vec<MintonTerm>,
}

#[derive(Serialize)]
pub struct MintonTermJson {
    pub u: String,
    pub c: String,
}

impl MintonDecomposition {
    pub fn denominator(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for t in &self.terms {
            acc = &acc * &t.u;
        }
        acc
    }

    pub fn to_json(&self) -> Vec<MintonTermJson> {
        self.terms
            .iter()
            .map(|t| MintonTermJson { u: t.u.coeff_string(), c: t.c.to_string() })
            .collect()
    }
}

/// Factor a squarefree integer polynomial with constant term 1 into its
/// irreducible factors, each normalized with constant term 1.
pub(crate) fn factor_denominator(den: &IntPoly) -> Result<Vec<IntPoly>> {
    debug_assert!(den.coeff(0).is_one());
    if den.deg() > FACTOR_DEGREE_CAP {
        return Err(Error::Resource(format!(
            "denominator degree {} is above the factorization cap {FACTOR_DEGREE_CAP}",
            den.deg()
        )));
    }
    let mut out = Vec::new();
    let mut work = den.clone();
    while work.deg() > 1 {
        let u = split_factor(&work)?;
        work = work.divide_exact(&u).expect("split_factor returns a verified divisor");
        out.push(u);
    }
    if work.deg() == 1 {
        out.push(work);
    }
    Ok(out)
}

fn split_factor(work: &IntPoly) -> Result<IntPoly> {
    let mut eps = 1e-12;
    for _ in 0..3 {
        let rs = find_roots(work, eps)?;
        if rs.roots.iter().all(|r| !r.cluster) {
            let betas: Vec<Complex64> = rs
                .roots
                .iter()
                .map(|r| Complex64::new(r.re.to_f64(), r.im.to_f64()).inv())
                .collect();
            debug_assert_eq!(betas.len(), work.deg());
            if let Some(u) = search_subsets(work, &betas) {
                return Ok(u);
            }
        }
        eps *= 1e-12;
    }
    Err(Error::Resource(format!(
        "no integer factor of {work} could be certified from 1e-36 root enclosures"
    )))
}

/// Smallest subset of the inverse roots containing betas[0] whose product
/// ∏ (1 - β z) rounds to an exact integer divisor. Minimality makes the
/// accepted factor irreducible: the roots of any integer divisor form a
/// union of conjugacy classes, and a proper factorization would have been
/// found at a smaller subset size.
fn search_subsets(work: &IntPoly, betas: &[Complex64]) -> Option<IntPoly> {
    for k in 1..=betas.len() {
        let mut idx = vec![0usize];
        if let Some(u) = extend_subset(work, betas, &mut idx, 1, k) {
            return Some(u);
        }
    }
    None
}

fn extend_subset(
    work: &IntPoly,
    betas: &[Complex64],
    idx: &mut Vec<usize>,
    next: usize,
    k: usize,
) -> Option<IntPoly> {
    if idx.len() == k {
        return try_candidate(work, betas, idx);
    }
    let need = k - idx.len();
    for j in next..=betas.len().saturating_sub(need) {
        idx.push(j);
        let hit = extend_subset(work, betas, idx, j + 1, k);
        idx.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

fn try_candidate(work: &IntPoly, betas: &[Complex64], idx: &[usize]) -> Option<IntPoly> {
    let k = idx.len();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    for (t, &j) in idx.iter().enumerate() {
        for i in (1..=t + 1).rev() {
            coeffs[i] = coeffs[i] - betas[j] * coeffs[i - 1];
        }
    }
    let mut ints = vec![BigInt::one()];
    for c in &coeffs[1..] {
        if !c.re.is_finite() || c.im.abs() > 0.2 || c.re.abs() > 1e14 {
            return None;
        }
        let r = c.re.round();
        if (c.re - r).abs() > 0.25 {
            return None;
        }
        ints.push(BigInt::from(r as i64));
    }
    let cand = IntPoly::new(ints);
    if cand.deg() != k {
        return None;
    }
    work.divide_exact(&cand).map(|_| cand)
}

/// Exact weights c with Σ_j c_j · z u_j' · ∏_{i≠j} u_i = num, solved over ℚ
/// by Gaussian elimination on the coefficient columns.
fn solve_weights(num: &IntPoly, factors: &[IntPoly]) -> Result<Vec<BigInt>> {
    let m = factors.len();
    let mut cols: Vec<IntPoly> = Vec::with_capacity(m);
    for j in 0..m {
        let mut v = factors[j].derivative().shift_up(1);
        for (i, u) in factors.iter().enumerate() {
            if i != j {
                v = &v * u;
            }
        }
        cols.push(v);
    }
    let rows = cols.iter().map(IntPoly::deg).chain(std::iter::once(num.deg())).max().unwrap() + 1;
    let mut aug: Vec<Vec<BigRational>> = (0..rows)
        .map(|k| {
            let mut row: Vec<BigRational> =
                cols.iter().map(|v| BigRational::from_integer(v.coeff(k))).collect();
            row.push(BigRational::from_integer(num.coeff(k)));
            row
        })
        .collect();
    let mut rank = 0usize;
    for col in 0..m {
        let Some(pivot) = (rank..rows).find(|&i| !aug[i][col].is_zero()) else {
            return Err(Error::Integrity(
                "logarithmic-derivative columns are linearly dependent".into(),
            ));
        };
        aug.swap(rank, pivot);
        let inv = aug[rank][col].recip();
        for x in aug[rank].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != rank && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for c2 in col..=m {
                    let sub = &f * &aug[rank][c2];
                    aug[i][c2] -= sub;
                }
            }
        }
        rank += 1;
    }
    for row in aug.iter().skip(rank) {
        if !row[m].is_zero() {
            return Err(Error::Domain(
                "no Minton decomposition: the residues of f are not constant on conjugacy \
                 classes, so its Taylor coefficients violate the Gauss congruences"
                    .into(),
            ));
        }
    }
    let mut out = Vec::with_capacity(m);
    for (j, row) in aug.iter().take(m).enumerate() {
        let q = &row[m];
        if !q.is_integer() {
            return Err(Error::Domain(format!(
                "weight {q} of {} is not an integer: the Taylor coefficients violate the Gauss congruences",
                factors[j]
            )));
        }
        out.push(q.to_integer());
    }
    Ok(out)
}

/// Decompose f = Σ_j c_j z u_j'/u_j with integer c_j and irreducible u_j,
/// u_j(0) = 1. Requires f(0) = 0, the denominator normalized with constant
/// term 1, and simple poles.
pub fn minton_decompose(f: &RationalFn) -> Result<MintonDecomposition> {
    if !f.num.coeff(0).is_zero() {
        return Err(Error::Domain("Minton decomposition needs f(0) = 0".into()));
    }
    if !f.den.coeff(0).is_one() {
        return Err(Error::Domain("denominator must be normalized with constant term 1".into()));
    }
    if f.den.deg() == 0 {
        if f.num.is_zero() {
            return Ok(MintonDecomposition { terms: Vec::new() });
        }
        return Err(Error::Domain("a nonzero polynomial has no Minton decomposition".into()));
    }
    if !f.den.is_squarefree() {
        return Err(Error::Domain("Minton decomposition needs simple poles".into()));
    }
    let factors = factor_denominator(&f.den)?;
    let mut check = IntPoly::one();
    for u in &factors {
        check = &check * u;
    }
    if check != f.den {
        return Err(Error::Integrity(format!(
            "certified factors of {} multiply to {check}",
            f.den
        )));
    }
    let weights = solve_weights(&f.num, &factors)?;
    let terms =
        factors.into_iter().zip(weights).map(|(u, c)| MintonTerm { u, c }).collect();
    Ok(MintonDecomposition { terms })
}

#[derive(Debug, Clone)]
pub struct ProductIdentity {
    pub truncation: u64,
    /// r_n = δ_n(P)/n for n = 1..truncation.
    pub r: Vec<BigInt>,
    pub decomposition: MintonDecomposition,
    /// The common power series of both products, to z^truncation.
    pub series: Vec<BigInt>,
}

/// Verify ∏_{n≤T} (1-z^n)^{r_n} = ∏_j u_j^{-c_j} through order z^T, both
/// sides expanded exactly over ℤ.
pub fn product_identity_check(p: &IntPoly, truncation: u64) -> Result<ProductIdentity> {
    if truncation < 1 {
        return Err(Error::Domain("truncation must be at least 1".into()));
    }
    p.require_monic("product_identity_check")?;
    let d = p.deg();
    if d < 2 {
        return Err(Error::Domain("product identity needs degree at least 2".into()));
    }
    let n = (2 * order_bound(d) + 8) as u64;
    let f = super::rational_fn_of_delta(p, n)?;
    let dec = minton_decompose(&f)?;
    let seq = delta_seq(p, truncation)?;
    let t = truncation as usize;
    let mut r = Vec::with_capacity(t);
    for k in 1..=truncation {
        let delta = seq.small_delta_at(k);
        let (q, rem) = delta.div_rem(&BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::Integrity(format!("delta_{k} = {delta} is not divisible by {k}")));
        }
        r.push(q);
    }
    let mut lhs = one_series(t);
    for (k, rk) in r.iter().enumerate() {
        if !rk.is_zero() {
            lhs = series_mul(&lhs, &binomial_series(k + 1, rk, t), t);
        }
    }
    let mut rhs = one_series(t);
    for term in &dec.terms {
        let c = i64::try_from(&term.c)
            .ok()
            .filter(|c| c.unsigned_abs() <= 1_000_000)
            .ok_or_else(|| Error::Resource(format!("exponent {} is out of range", term.c)))?;
        rhs = series_mul(&rhs, &series_pow(term.u.coeffs(), -c, t), t);
    }
    for k in 0..=t {
        if lhs[k] != rhs[k] {
            return Err(Error::Integrity(format!(
                "product identity fails at z^{k}: {} on the delta side, {} on the Minton side",
                lhs[k], rhs[k]
            )));
        }
    }
    Ok(ProductIdentity { truncation, r, decomposition: dec, series: lhs })
}

fn one_series(t: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); t + 1];
    s[0] = BigInt::one();
    s
}

fn series_mul(a: &[BigInt], b: &[BigInt], t: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); t + 1];
    for i in 0..a.len().min(t + 1) {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..b.len().min(t + 1 - i) {
            if !b[j].is_zero() {
                out[i + j] += &a[i] * &b[j];
            }
        }
    }
    out
}

fn series_inv(a: &[BigInt], t: usize) -> Vec<BigInt> {
    debug_assert!(a[0].is_one());
    let mut out = one_series(t);
    for k in 1..=t {
        let mut acc = BigInt::zero();
        for i in 1..a.len().min(k + 1) {
            if !a[i].is_zero() {
                acc += &a[i] * &out[k - i];
            }
        }
        out[k] = -acc;
    }
    out
}

fn series_pow(base: &[BigInt], e: i64, t: usize) -> Vec<BigInt> {
    let mut acc = one_series(t);
    if e == 0 {
        return acc;
    }
    let mut sq = if e < 0 { series_inv(base, t) } else { base.to_vec() };
    let mut k = e.unsigned_abs();
    loop {
        if k & 1 == 1 {
            acc = series_mul(&acc, &sq, t);
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        sq = series_mul(&sq, &sq, t);
    }
    acc
}

/// (1 - z^n)^r = Σ_k (-1)^k C(r,k) z^{nk}, exact for any integer r.
fn binomial_series(n: usize, r: &BigInt, t: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); t + 1];
    out[0] = BigInt::one();
    let mut c = BigInt::one();
    let mut k = 1usize;
    while n * k <= t {
        let (q, rem) = (&c * (r - BigInt::from(k - 1))).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        c = q;
        out[n * k] = if k % 2 == 1 { -&c } else { c.clone() };
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{g_quadratic, rational_fn_of_delta};

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn sorted_terms(dec: &MintonDecomposition) -> Vec<(String, BigInt)> {
        let mut v: Vec<(String, BigInt)> =
            dec.terms.iter().map(|t| (t.u.coeff_string(), t.c.clone())).collect();
        v.sort();
        v
    }

    #[test]
    fn factors_a_known_product() {
        let den = &(&poly(&[1, -1]) * &poly(&[1, -2])) * &poly(&[1, 1, 1]);
        let mut fs: Vec<String> =
            factor_denominator(&den).unwrap().iter().map(IntPoly::coeff_string).collect();
        fs.sort();
        assert_eq!(fs, vec!["1,-1", "1,-2", "1,1,1"]);
    }

    #[test]
    fn factor_cap_is_enforced() {
        let mut c = vec![0i64; 26];
        c[0] = 1;
        c[25] = -1;
        let err = factor_denominator(&poly(&c)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn single_term_decomposition() {
        let f = RationalFn { num: poly(&[0, -2]), den: poly(&[1, -2]) };
        let dec = minton_decompose(&f).unwrap();
        assert_eq!(sorted_terms(&dec), vec![("1,-2".to_string(), BigInt::from(1))]);
        assert_eq!(dec.denominator(), f.den);
    }

    #[test]
    fn golden_minton_terms() {
        let f = rational_fn_of_delta(&poly(&[1, -3, 1]), 14).unwrap();
        let dec = minton_decompose(&f).unwrap();
        assert_eq!(
            sorted_terms(&dec),
            vec![
                ("1,-1".to_string(), BigInt::from(2)),
                ("1,-7,1".to_string(), BigInt::from(-1)),
            ]
        );
    }

    #[test]
    fn g_fails_the_gauss_congruences() {
        let g = g_quadratic(&poly(&[1, -3, 1])).unwrap();
        let err = minton_decompose(&g).unwrap_err();
        match err {
            Error::Domain(msg) => assert!(msg.contains("Gauss")),
            other => panic!("expected Domain, got {other:?}"),
        }
    }

    #[test]
    fn repeated_pole_rejected() {
        let f = RationalFn { num: poly(&[0, 1]), den: poly(&[1, -2, 1]) };
        let err = minton_decompose(&f).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn golden_product_identity() {
        let rep = product_identity_check(&poly(&[1, -3, 1]), 16).unwrap();
        let r: Vec<BigInt> = rep.r.iter().take(3).cloned().collect();
        assert_eq!(r, vec![BigInt::from(5), BigInt::from(20), BigInt::from(105)]);
        assert_eq!(rep.series[0], BigInt::from(1));
        assert_eq!(rep.series[1], BigInt::from(-5));
        assert_eq!(rep.decomposition.terms.len(), 2);
    }

    #[test]
    fn short_truncation_still_checks() {
        let rep = product_identity_check(&poly(&[1, -3, 1]), 1).unwrap();
        assert_eq!(rep.r, vec![BigInt::from(5)]);
        assert_eq!(rep.series, vec![BigInt::from(1), BigInt::from(-5)]);
    }

    #[test]
    fn series_helpers_are_exact() {
        let t = 6;
        let a = poly(&[1, -1]);
        let inv = series_inv(a.coeffs(), t);
        assert!(inv.iter().all(|c| c.is_one()));
        let sq = series_pow(a.coeffs(), 2, t);
        assert_eq!(sq[0..3], [BigInt::from(1), BigInt::from(-2), BigInt::from(1)]);
        let back = series_mul(&sq, &series_pow(a.coeffs(), -2, t), t);
        assert_eq!(back, one_series(t));
        let b = binomial_series(2, &BigInt::from(-3), t);
        // (1 - z²)^{-3} = 1 + 3z² + 6z⁴ + 10z⁶ + ...
        assert_eq!(b[2], BigInt::from(3));
        assert_eq!(b[4], BigInt::from(6));
        assert_eq!(b[6], BigInt::from(10));
    }
}
