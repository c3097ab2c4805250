//! Finite-N restatements of the limsup theorems for Δ(P_n) and Res(P_n, Q).
//!
//! The provable side is a per-n inequality and is certified with directed
//! rounding for every n up to the bound; a certain violation is an integrity
//! error, an undecidable comparison escalates precision. The asymptotic side
//! (whether max |Δ(P_n)|^{1/n} has reached its limsup target yet) is only
//! reported: at finite N it is evidence, not a theorem.

use crate::error::{Error, Result};
use crate::polycore::numth::log2_bigint;
use crate::polycore::{resultant, IntPoly};
use crate::roots_mahler::{find_roots, is_cyclotomic_product, mahler_measure, Dy};
use crate::polycore::power_map;
use crate::sequences::delta::delta_seq;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone)]
pub struct LimsupDelta {
    pub n_max: u64,
    /// max_{n≤N} |Δ(P_n)|^{1/n}.
    pub e_n: f64,
    /// ∏ |α_j|^{2(d-j)}, moduli sorted descending.
    pub target: f64,
    pub ratio: f64,
}

/// Squared-modulus interval [lo, up] for each certified root; works on
/// |α|² throughout so no square root is needed (every exponent in this
/// module is even).
fn squared_modulus_intervals(p: &IntPoly, eps: f64) -> Result<Option<(Vec<Dy>, Vec<Dy>)>> {
    let rs = find_roots(p, eps)?;
    if rs.roots.iter().any(|r| r.cluster) {
        return Ok(None);
    }
    let mut lows = Vec::with_capacity(rs.roots.len());
    let mut ups = Vec::with_capacity(rs.roots.len());
    for r in &rs.roots {
        let s = r.re.mul(&r.re).add(&r.im.mul(&r.im));
        let u = r.re.abs().add(&r.im.abs());
        let spread = u.mul(&r.radius).mul_pow2(1);
        let up = s.add(&spread).add(&r.radius.mul(&r.radius));
        let lo = s.sub(&spread).max(&Dy::zero());
        for _ in 0..r.multiplicity {
            lows.push(lo.clone());
            ups.push(up.clone());
        }
    }
    lows.sort_by(|a, b| b.cmp(a));
    ups.sort_by(|a, b| b.cmp(a));
    Ok(Some((lows, ups)))
}

/// Certify |Δ(P_n)| ≤ 2^{d(d-1)} ∏_j |α_j|^{2n(d-j)} for every n.
fn certify_power_bound(p: &IntPoly, deltas: &[BigInt]) -> Result<()> {
    let d = p.deg();
    let slack = (d * (d - 1)) as i64;
    let mut eps = 1e-12;
    for _ in 0..4 {
        let Some((lows, ups)) = squared_modulus_intervals(p, eps)? else {
            eps = eps * eps;
            continue;
        };
        let mut undecided = false;
        for (idx, delta) in deltas.iter().enumerate() {
            let n = idx as u64 + 1;
            let lhs = Dy::from_bigint(&delta.abs());
            let bound = |ms: &[Dy], up: bool| -> Dy {
                let mut acc = Dy::one();
                for (j, m2) in ms.iter().enumerate() {
                    let e = n * (d - 1 - j) as u64;
                    let f = if up { m2.pow_up(e, 128) } else { m2.pow_down(e, 128) };
                    acc = acc.mul(&f);
                    acc = if up { acc.round_up(128) } else { acc.round_down(128) };
                }
                acc.mul_pow2(slack)
            };
            if lhs.cmp(&bound(&lows, false)) != Ordering::Greater {
                continue;
            }
            if lhs.cmp(&bound(&ups, true)) == Ordering::Greater {
                return Err(Error::Integrity(format!(
                    "|Delta(P_n)| exceeds 2^(d(d-1)) prod |a_j|^(2n(d-j)) at n = {n} for {p}"
                )));
            }
            undecided = true;
            break;
        }
        if !undecided {
            return Ok(());
        }
        eps = eps * eps;
    }
    Err(Error::Resource("root enclosures too wide to decide the power bound".into()))
}

fn max_nth_root(deltas: &[BigInt]) -> f64 {
    let mut best = 0.0f64;
    for (idx, v) in deltas.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let r = (log2_bigint(&v.abs()) / (idx as f64 + 1.0)).exp2();
        if r > best {
            best = r;
        }
    }
    best
}

/// Finite-N form of limsup |Δ(P_n)|^{1/n} = ∏ |α_j|^{2(d-j)}: certifies the
/// per-n upper bound (with its 2^{d(d-1)} slack) for all n ≤ N and reports
/// how close the running maximum has come to the target.
pub fn limsup_delta_estimate(p: &IntPoly, n_max: u64) -> Result<LimsupDelta> {
    p.require_monic("limsup_delta_estimate")?;
    if p.deg() < 1 || n_max < 1 {
        return Err(Error::Domain("limsup_delta_estimate needs degree >= 1 and N >= 1".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::Domain("limsup_delta_estimate needs distinct roots".into()));
    }
    let d = p.deg();
    let seq = delta_seq(p, n_max)?;
    certify_power_bound(p, seq.values())?;
    let (lows, ups) = squared_modulus_intervals(p, 1e-12)?
        .ok_or_else(|| Error::Resource("clustered roots after certification".into()))?;
    let mut target = 1.0f64;
    for j in 0..d {
        let mid = 0.5 * (lows[j].to_f64() + ups[j].to_f64());
        target *= mid.powi((d - 1 - j) as i32);
    }
    let e_n = max_nth_root(seq.values());
    Ok(LimsupDelta { n_max, e_n, target, ratio: e_n / target })
}

#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub n_max: u64,
    /// Midpoint estimate of M(P).
    pub measure: f64,
    /// max_{n≤N} |Δ(P_n)|^{1/n}.
    pub e_n: f64,
    /// M(P)^{d-1}, the asymptotic lower target.
    pub lower_target: f64,
    /// Whether e_n has already exceeded the lower target; expected for
    /// modest N but not asserted, the bound is asymptotic.
    pub exceeds_lower: bool,
}

/// Certify |Δ(P_n)| ≤ d^d · M(P)^{2nd} for every n ≤ N.
fn certify_hadamard(p: &IntPoly, deltas: &[BigInt]) -> Result<()> {
    let d = p.deg() as u64;
    let dd = Dy::from_bigint(&BigInt::from(d).pow(d as u32));
    let mut prec = 1e-8;
    for _ in 0..4 {
        let m = mahler_measure(p, prec)?;
        let mlo = m.lo().max(&Dy::one());
        let mup = m.up().clone();
        let mut undecided = false;
        for (idx, delta) in deltas.iter().enumerate() {
            let n = idx as u64 + 1;
            let lhs = Dy::from_bigint(&delta.abs());
            let lo = dd.mul(&mlo.pow_down(2 * n * d, 128));
            if lhs.cmp(&lo) != Ordering::Greater {
                continue;
            }
            let up = dd.mul(&mup.pow_up(2 * n * d, 128));
            if lhs.cmp(&up) == Ordering::Greater {
                return Err(Error::Integrity(format!(
                    "|Delta(P_n)| exceeds d^d M(P)^(2nd) at n = {n} for {p}"
                )));
            }
            undecided = true;
            break;
        }
        if !undecided {
            return Ok(());
        }
        prec *= 1e-8;
    }
    Err(Error::Resource("measure enclosure too wide to decide the Hadamard bound".into()))
}

/// The sandwich around M(P): per-n Hadamard upper bound (certified) plus the
/// reported exceedance of the asymptotic lower bound M(P)^{d-1}.
pub fn sandwich_check(p: &IntPoly, n_max: u64) -> Result<SandwichReport> {
    p.require_monic("sandwich_check")?;
    if p.deg() < 1 || n_max < 1 {
        return Err(Error::Domain("sandwich_check needs degree >= 1 and N >= 1".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::Domain("sandwich_check needs distinct roots".into()));
    }
    if is_cyclotomic_product(p)?.is_some() {
        return Err(Error::Domain(
            "sandwich_check needs a noncyclotomic polynomial; M(P) = 1 is degenerate".into(),
        ));
    }
    let seq = delta_seq(p, n_max)?;
    certify_hadamard(p, seq.values())?;
    let m = mahler_measure(p, 1e-12)?;
    let measure = 0.5 * (m.lo().to_f64() + m.up().to_f64());
    let e_n = max_nth_root(seq.values());
    let lower_target = measure.powi(p.deg() as i32 - 1);
    Ok(SandwichReport { n_max, measure, e_n, lower_target, exceeds_lower: e_n > lower_target })
}

#[derive(Debug, Clone)]
pub struct LimsupResultant {
    pub n_max: u64,
    /// max_{n≤N} |Res(P_n, Q)|^{1/n}.
    pub e_n: f64,
    /// M(P)^{deg Q}.
    pub target: f64,
    pub ratio: f64,
}

/// Finite-N trend toward limsup |Res(P_n, Q)|^{1/n} = M(P)^{deg Q}. Purely
/// reported; the theorem gives no clean per-n inequality to certify.
pub fn limsup_resultant_estimate(p: &IntPoly, q: &IntPoly, n_max: u64) -> Result<LimsupResultant> {
    p.require_monic("limsup_resultant_estimate")?;
    q.require_monic("limsup_resultant_estimate")?;
    if p.deg() < 1 || q.deg() < 1 || n_max < 1 {
        return Err(Error::Domain(
            "limsup_resultant_estimate needs degrees >= 1 and N >= 1".into(),
        ));
    }
    if q.coeff(0).is_zero() {
        return Err(Error::Domain("Q(0) = 0 makes Res(P_n, Q) degenerate".into()));
    }
    let one = BigInt::from(1);
    if p.eval(&one).is_zero() && q.eval(&one).is_zero() {
        return Err(Error::Domain("P(1) = Q(1) = 0 forces Res(P_n, Q) = 0".into()));
    }
    let mut values = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let pn = power_map(p, n)?;
        values.push(resultant(&pn, q)?);
    }
    let e_n = max_nth_root(&values);
    let m = mahler_measure(p, 1e-12)?;
    let measure = 0.5 * (m.lo().to_f64() + m.up().to_f64());
    let target = measure.powi(q.deg() as i32);
    Ok(LimsupResultant { n_max, e_n, target, ratio: e_n / target })
}

#[derive(Debug, Clone)]
pub struct EquidistributionReport {
    pub m: usize,
    /// The gap 1/(3m).
    pub delta: f64,
    /// All n ≤ N with min_j ||n x_j|| > 1/(3m).
    pub achieving: Vec<u64>,
}

fn dist_to_nearest_int(y: f64) -> f64 {
    (y - y.round()).abs()
}

/// Scan for n with every ||n x_j|| bounded away from the integers by 1/(3m).
/// Equidistribution guarantees infinitely many such n; at finite N the list
/// is informational (plain f64 arithmetic, no certification).
pub fn equidistribution_delta(angles: &[f64], n_max: u64) -> Result<EquidistributionReport> {
    if angles.is_empty() {
        return Err(Error::Domain("at least one angle is required".into()));
    }
    if angles.iter().any(|x| !x.is_finite()) {
        return Err(Error::Domain("angles must be finite".into()));
    }
    for i in 0..angles.len() {
        for j in i + 1..angles.len() {
            if (angles[i] - angles[j]).fract() == 0.0 {
                return Err(Error::Domain("angles must be distinct mod 1".into()));
            }
        }
    }
    let m = angles.len();
    let delta = 1.0 / (3.0 * m as f64);
    let achieving = (1..=n_max)
        .filter(|&n| angles.iter().all(|x| dist_to_nearest_int(n as f64 * x) > delta))
        .collect();
    Ok(EquidistributionReport { m, delta, achieving })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn golden_limsup_delta() {
        let rep = limsup_delta_estimate(&poly(&[1, -3, 1]), 40).unwrap();
        // T = ((3+sqrt 5)/2)^2
        let t = (1.5f64 + 1.25f64.sqrt()).powi(2);
        assert!((rep.target - t).abs() < 1e-6);
        // Strictly below 1 in exact arithmetic; allow f64 midpoint noise.
        assert!(rep.ratio > 0.8 && rep.ratio <= 1.0 + 1e-12);
    }

    #[test]
    fn unit_circle_roots_stay_bounded() {
        // All roots on the unit circle: T = 1 and |Delta| <= 2^{d(d-1)}.
        let rep = limsup_delta_estimate(&poly(&[1, 1, 1]), 24).unwrap();
        assert!((rep.target - 1.0).abs() < 1e-9);
        assert!(rep.e_n <= 4.0 + 1e-9);
    }

    #[test]
    fn limsup_rejects_multiple_roots() {
        let err = limsup_delta_estimate(&poly(&[1, 2, 1]), 10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn golden_sandwich() {
        let rep = sandwich_check(&poly(&[1, -3, 1]), 40).unwrap();
        assert!((rep.lower_target - 2.618).abs() < 1e-3);
        // |Delta(P_3)|^{1/3} = 320^{1/3} ~ 6.84 already exceeds 2.618.
        assert!(rep.exceeds_lower);
        assert!(rep.e_n > 6.0);
    }

    #[test]
    fn lehmer_sandwich_runs() {
        let lehmer = poly(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let rep = sandwich_check(&lehmer, 24).unwrap();
        assert!((rep.measure - 1.17628081825991).abs() < 1e-9);
        assert!(rep.lower_target > 1.0);
    }

    #[test]
    fn sandwich_rejects_cyclotomic() {
        let err = sandwich_check(&poly(&[1, 1, 1]), 10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn golden_resultant_trend() {
        let rep =
            limsup_resultant_estimate(&poly(&[1, -3, 1]), &poly(&[-1, 1]), 40).unwrap();
        assert!((rep.target - 2.618033988).abs() < 1e-6);
        assert!(rep.ratio > 0.9 && rep.ratio < 1.1);
    }

    #[test]
    fn resultant_preconditions() {
        let p = poly(&[1, -3, 1]);
        let err = limsup_resultant_estimate(&p, &poly(&[0, 1]), 10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        let err =
            limsup_resultant_estimate(&poly(&[-1, 0, 1]), &poly(&[-1, 1]), 10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn equidistribution_examples() {
        let x = 2f64.sqrt() - 1.0;
        let rep = equidistribution_delta(&[x], 100).unwrap();
        assert!(rep.achieving.contains(&1));
        assert!((rep.delta - 1.0 / 3.0).abs() < 1e-12);
        // x = 1/2: exactly the odd n qualify.
        let half = equidistribution_delta(&[0.5], 10).unwrap();
        assert_eq!(half.achieving, vec![1, 3, 5, 7, 9]);
        let two = equidistribution_delta(&[x, 3f64.sqrt() - 1.0], 1000).unwrap();
        assert!(!two.achieving.is_empty());
        let err = equidistribution_delta(&[0.25, 1.25], 10).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }
}
