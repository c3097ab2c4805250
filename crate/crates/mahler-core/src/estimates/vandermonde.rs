//! Confluent Vandermonde identity
//! det(A_{n,m_1}(x_1) | ... | A_{n,m_r}(x_r)) = ∏_{j<k} (x_k - x_j)^{m_j m_k}.
//!
//! The block for a point x of multiplicity m has columns k = 0..m-1 with
//! entries C(j,k) x^{j-k} in row j (the k-th Hermite derivative column).
//! Rational points are checked exactly; complex dyadic points through ball
//! arithmetic with precision escalation, asserting equality once both
//! enclosures overlap and are tight.

use crate::error::{Error, Result};
use crate::roots_mahler::ball::CBall;
use crate::roots_mahler::Dy;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub const CONFLUENT_SIZE_CAP: usize = 64;

/// Interpolation points with multiplicities; n = Σ multiplicities.
#[derive(Debug, Clone)]
pub struct ConfluentSpec {
    pub points: Vec<(BigRational, u32)>,
}

#[derive(Debug, Clone)]
pub struct ConfluentCheck {
    pub n: usize,
    pub matrix: Vec<Vec<BigRational>>,
    pub determinant: BigRational,
    pub product: BigRational,
}

fn checked_size(mults: impl Iterator<Item = u32>) -> Result<usize> {
    let mut n = 0usize;
    let mut any = false;
    for m in mults {
        any = true;
        if m == 0 {
            return Err(Error::Domain("multiplicities must be at least 1".into()));
        }
        n += m as usize;
    }
    if !any {
        return Err(Error::Domain("at least one interpolation point is required".into()));
    }
    if n > CONFLUENT_SIZE_CAP {
        return Err(Error::Resource(format!(
            "confluent Vandermonde size {n} is above the cap {CONFLUENT_SIZE_CAP}"
        )));
    }
    Ok(n)
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact check over ℚ: builds the matrix, eliminates with the largest-pivot
/// rule (first index on ties), and compares against the closed form. A
/// mismatch would falsify the identity, hence integrity, but both sides are
/// returned for reporting either way.
pub fn confluent_vandermonde(spec: &ConfluentSpec) -> Result<ConfluentCheck> {
    let n = checked_size(spec.points.iter().map(|&(_, m)| m))?;
    let mut matrix = vec![vec![BigRational::zero(); n]; n];
    let mut col = 0usize;
    for (x, m) in &spec.points {
        for k in 0..*m as usize {
            for j in k..n {
                matrix[j][col] =
                    BigRational::from_integer(binom(j, k)) * x.pow((j - k) as i32);
            }
            col += 1;
        }
    }
    let determinant = det_rational(matrix.clone());
    let mut product = BigRational::one();
    for a in 0..spec.points.len() {
        for b in a + 1..spec.points.len() {
            let diff = &spec.points[b].0 - &spec.points[a].0;
            let e = spec.points[a].1 * spec.points[b].1;
            product *= (&diff).pow(e as i32);
        }
    }
    if determinant != product {
        return Err(Error::Integrity(format!(
            "confluent Vandermonde identity fails: determinant {determinant}, product {product}"
        )));
    }
    Ok(ConfluentCheck { n, matrix, determinant, product })
}

fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let mut pivot = None;
        for (i, row) in m.iter().enumerate().skip(col) {
            if row[col].is_zero() {
                continue;
            }
            let better = match &pivot {
                None => true,
                Some((_, best)) => row[col].abs() > *best,
            };
            if better {
                pivot = Some((i, row[col].abs()));
            }
        }
        let Some((pi, _)) = pivot else {
            return BigRational::zero();
        };
        if pi != col {
            m.swap(pi, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for j in col..n {
                let sub = &f * &m[col][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

#[derive(Debug, Clone)]
pub struct ComplexConfluentCheck {
    pub n: usize,
    pub determinant: CBall,
    pub product: CBall,
}

/// Ball-arithmetic check at exact complex dyadic points. Equality is
/// asserted once the two enclosures overlap with relative half-widths below
/// 2^-67; disjoint enclosures falsify the identity and raise integrity.
pub fn confluent_vandermonde_complex(
    points: &[((Dy, Dy), u32)],
) -> Result<ComplexConfluentCheck> {
    let n = checked_size(points.iter().map(|&(_, m)| m))?;
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            if points[a].0 .0 == points[b].0 .0 && points[a].0 .1 == points[b].0 .1 {
                return Err(Error::Domain("complex interpolation points must be distinct".into()));
            }
        }
    }
    for prec in [128u64, 256, 512, 1024, 2048] {
        let mut matrix = vec![vec![CBall::exact(Dy::zero(), Dy::zero()); n]; n];
        let mut col = 0usize;
        for ((re, im), m) in points {
            let x = CBall::exact(re.clone(), im.clone());
            for k in 0..*m as usize {
                for j in k..n {
                    matrix[j][col] = scale_int(&x.powi((j - k) as u64, prec), &binom(j, k));
                }
                col += 1;
            }
        }
        let Some(determinant) = det_ball(matrix, prec) else {
            continue;
        };
        let mut product = CBall::exact(Dy::one(), Dy::zero());
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                let diff = CBall::exact(
                    points[b].0 .0.sub(&points[a].0 .0),
                    points[b].0 .1.sub(&points[a].0 .1),
                );
                let e = (points[a].1 as u64) * (points[b].1 as u64);
                product = product.mul(&diff.powi(e, prec), prec);
            }
        }
        let gap_re = determinant.re.sub(&product.re).abs();
        let gap_im = determinant.im.sub(&product.im).abs();
        let tol = determinant.rad.add(&product.rad);
        if gap_re.cmp(&tol) == Ordering::Greater || gap_im.cmp(&tol) == Ordering::Greater {
            return Err(Error::Integrity(
                "confluent Vandermonde identity fails: certified enclosures are disjoint".into(),
            ));
        }
        let scale = determinant.center_mod_down(32).mul_pow2(-67);
        if !scale.is_positive() {
            continue;
        }
        if determinant.rad.cmp(&scale) != Ordering::Greater
            && product.rad.cmp(&scale) != Ordering::Greater
        {
            return Ok(ComplexConfluentCheck { n, determinant, product });
        }
    }
    Err(Error::Resource(
        "confluent Vandermonde enclosures do not tighten at 2048 bits".into(),
    ))
}

fn scale_int(z: &CBall, c: &BigInt) -> CBall {
    CBall {
        re: z.re.mul_bigint(c),
        im: z.im.mul_bigint(c),
        rad: z.rad.mul_bigint(c).abs(),
    }
}

fn neg_ball(z: &CBall) -> CBall {
    CBall { re: z.re.neg(), im: z.im.neg(), rad: z.rad.clone() }
}

/// Gaussian elimination determinant; pivot = row whose entry ball has the
/// largest center modulus among those bounded away from zero, first index on
/// ties. None when no usable pivot exists at this precision.
fn det_ball(mut m: Vec<Vec<CBall>>, prec: u64) -> Option<CBall> {
    let n = m.len();
    let mut det = CBall::exact(Dy::one(), Dy::zero());
    for col in 0..n {
        let mut pivot: Option<(usize, Dy)> = None;
        for i in col..n {
            if !m[i][col].mod_down(32).is_positive() {
                continue;
            }
            let size = m[i][col].center_mod_up(32);
            let better = match &pivot {
                None => true,
                Some((_, best)) => size.cmp(best) == Ordering::Greater,
            };
            if better {
                pivot = Some((i, size));
            }
        }
        let (pi, _) = pivot?;
        if pi != col {
            m.swap(pi, col);
            det = neg_ball(&det);
        }
        det = det.mul(&m[col][col], prec);
        for i in col + 1..n {
            let f = m[i][col].div(&m[col][col], prec)?;
            for j in col..n {
                let sub = f.mul(&m[col][j], prec);
                m[i][j] = m[i][j].sub(&sub);
            }
        }
    }
    Some(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn two_simple_points() {
        let spec = ConfluentSpec { points: vec![(rat(1, 2), 1), (rat(3, 1), 1)] };
        let c = confluent_vandermonde(&spec).unwrap();
        assert_eq!(c.n, 2);
        assert_eq!(c.determinant, rat(5, 2));
        assert_eq!(c.determinant, c.product);
    }

    #[test]
    fn single_double_point() {
        let spec = ConfluentSpec { points: vec![(rat(7, 1), 2)] };
        let c = confluent_vandermonde(&spec).unwrap();
        assert_eq!(c.determinant, BigRational::one());
        assert_eq!(c.product, BigRational::one());
    }

    #[test]
    fn zero_and_double_point() {
        let spec = ConfluentSpec { points: vec![(rat(0, 1), 1), (rat(2, 3), 2)] };
        let c = confluent_vandermonde(&spec).unwrap();
        assert_eq!(c.n, 3);
        assert_eq!(c.determinant, rat(4, 9));
    }

    #[test]
    fn mixed_multiplicities() {
        let spec = ConfluentSpec { points: vec![(rat(1, 1), 2), (rat(-2, 1), 3)] };
        let c = confluent_vandermonde(&spec).unwrap();
        assert_eq!(c.n, 5);
        assert_eq!(c.determinant, rat(729, 1));
    }

    #[test]
    fn repeated_point_gives_zero() {
        let spec = ConfluentSpec { points: vec![(rat(2, 1), 1), (rat(2, 1), 1)] };
        let c = confluent_vandermonde(&spec).unwrap();
        assert!(c.determinant.is_zero());
    }

    #[test]
    fn size_cap() {
        let spec = ConfluentSpec { points: vec![(rat(1, 1), 65)] };
        assert!(matches!(confluent_vandermonde(&spec).unwrap_err(), Error::Resource(_)));
        let empty = ConfluentSpec { points: vec![] };
        assert!(matches!(confluent_vandermonde(&empty).unwrap_err(), Error::Domain(_)));
    }

    #[test]
    fn complex_conjugate_pair() {
        // x = i and -i: det = -2i.
        let pts = vec![
            ((Dy::zero(), Dy::one()), 1u32),
            ((Dy::zero(), Dy::from_i64(-1)), 1u32),
        ];
        let c = confluent_vandermonde_complex(&pts).unwrap();
        let err = c.determinant.im.sub(&Dy::from_i64(-2)).abs();
        assert!(err.cmp(&c.determinant.rad) != Ordering::Greater);
        assert!(c.determinant.re.abs().cmp(&c.determinant.rad) != Ordering::Greater);
    }

    #[test]
    fn complex_with_multiplicity() {
        let pts = vec![
            ((Dy::from_i64(1), Dy::one()), 2u32),
            ((Dy::from_i64(1), Dy::from_i64(-1)), 1u32),
            ((Dy::from_i64(2), Dy::zero()), 1u32),
        ];
        let c = confluent_vandermonde_complex(&pts).unwrap();
        assert_eq!(c.n, 4);
        // Tightness was certified; both centers agree within the radii.
        let gap = c.determinant.re.sub(&c.product.re).abs();
        assert!(gap.cmp(&c.determinant.rad.add(&c.product.rad)) != Ordering::Greater);
    }

    #[test]
    fn complex_duplicates_rejected() {
        let pts = vec![((Dy::one(), Dy::zero()), 1u32), ((Dy::one(), Dy::zero()), 1u32)];
        assert!(matches!(
            confluent_vandermonde_complex(&pts).unwrap_err(),
            Error::Domain(_)
        ));
    }
}
