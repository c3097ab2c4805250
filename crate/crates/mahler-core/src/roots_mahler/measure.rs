//! Mahler measure M(P) = |a_d| ∏ max(1, |α_j|), two independent ways, plus
//! the exact Kronecker test, reciprocity, and the reference bounds.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polycore::cyclotomic::cyclotomic;
use crate::polycore::numth::euler_phi;
use crate::polycore::poly::IntPoly;
use crate::polycore::powermap::power_map;
use crate::roots_mahler::ball::Dy;
use crate::roots_mahler::roots::find_roots;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureMethod {
    Roots,
    Graeffe,
}

/// A certified enclosure [lo, up] of a Mahler measure.
#[derive(Debug, Clone)]
pub struct MeasureResult {
    lo: Dy,
    up: Dy,
    method: MeasureMethod,
}

impl MeasureResult {
    fn new(lo: Dy, up: Dy, method: MeasureMethod) -> MeasureResult {
        debug_assert!(lo.cmp(&up) != Ordering::Greater);
        MeasureResult { lo, up, method }
    }

    /// Midpoint of the enclosure.
    pub fn value(&self) -> f64 {
        self.lo.add(&self.up).mul_pow2(-1).to_f64()
    }

    /// Half-width of the enclosure (true error bound for `value`).
    pub fn error(&self) -> f64 {
        let half = self.up.sub(&self.lo).mul_pow2(-1);
        // Round the f64 conversion away from zero a hair so the printed
        // error never understates the width.
        half.add(&half.mul_pow2(-30)).to_f64()
    }

    pub fn lo(&self) -> &Dy {
        &self.lo
    }

    pub fn up(&self) -> &Dy {
        &self.up
    }

    pub fn method(&self) -> MeasureMethod {
        self.method
    }

    /// log2 of the upper bound, for display.
    pub fn log2_up(&self) -> f64 {
        self.up.to_f64().log2()
    }
}

/// Certified enclosure of M(P) from certified root disks, half-width at most
/// `target_precision`.
pub fn mahler_measure(p: &IntPoly, target_precision: f64) -> Result<MeasureResult> {
    if p.is_zero() {
        return Err(Error::Domain("Mahler measure of the zero polynomial".into()));
    }
    if !(target_precision > 0.0) || !target_precision.is_finite() {
        return Err(Error::Domain("target precision must be positive and finite".into()));
    }
    let lc_abs = p.lc().abs();
    if p.deg() == 0 {
        let v = Dy::from_bigint(&lc_abs);
        return Ok(MeasureResult::new(v.clone(), v, MeasureMethod::Roots));
    }
    let d = p.deg();
    let monic = p.is_monic();
    let mut eps = target_precision / (16.0 * (d as f64 + 1.0));
    for _ in 0..24 {
        let rs = find_roots(p, eps)?;
        if rs.roots.iter().any(|r| r.cluster) {
            eps /= 256.0;
            continue;
        }
        let prec = 128;
        let mut lo = Dy::from_bigint(&lc_abs);
        let mut up = lo.clone();
        for r in &rs.roots {
            let one = Dy::one();
            let m_lo = r.modulus_down(prec).max(&one);
            let m_up = r.modulus_up(prec).max(&one);
            lo = lo.mul(&m_lo.pow_down(r.multiplicity as u64, prec)).round_down(prec);
            up = up.mul(&m_up.pow_up(r.multiplicity as u64, prec)).round_up(prec);
        }
        if monic {
            lo = lo.max(&Dy::one());
        }
        let width = up.sub(&lo);
        if width.cmp(&Dy::from_f64(2.0 * target_precision).unwrap()) != Ordering::Greater {
            return Ok(MeasureResult::new(lo, up, MeasureMethod::Roots));
        }
        eps /= 64.0;
    }
    Err(Error::Resource(
        "mahler_measure enclosure did not reach the requested width".into(),
    ))
}

/// Mantissa budget for Graeffe iterates, in bits.
const GRAEFFE_BIT_BUDGET: u64 = 1 << 26;

/// Enclosure of M(P) by k exact root-squarings and coefficient bounds:
/// max_m |b_{D-m}|/C(D,m) <= M(Q) <= ||Q||₂, taken to the 2^k-th root.
pub fn graeffe_measure(p: &IntPoly, iterations: u32) -> Result<MeasureResult> {
    p.require_monic("graeffe_measure")?;
    if iterations == 0 {
        return Err(Error::Domain("graeffe_measure needs at least one iteration".into()));
    }
    if p.deg() == 0 {
        return Ok(MeasureResult::new(Dy::one(), Dy::one(), MeasureMethod::Graeffe));
    }
    let d = p.deg();
    let mut q = p.clone();
    for _ in 0..iterations {
        let projected = 2 * (q.height().bits() + d as u64 + 2);
        if projected > GRAEFFE_BIT_BUDGET {
            return Err(Error::Resource(format!(
                "graeffe iterate would exceed the {GRAEFFE_BIT_BUDGET}-bit coefficient budget"
            )));
        }
        q = power_map(&q, 2)?;
    }
    let prec = 192u64;
    let (mlo, mup) = if d == 1 {
        // Degree 1 is exact: M(x - c) = max(1, |c|).
        let c = Dy::from_bigint(&q.coeff(0).abs()).max(&Dy::one());
        (c.clone(), c)
    } else {
        let mut lo = Dy::one();
        let mut binom = BigInt::from(1);
        for m in 1..=d {
            // C(d, m) updated incrementally.
            binom = binom * BigInt::from(d - m + 1) / BigInt::from(m);
            let cand = Dy::from_bigint(&q.coeff(d - m).abs())
                .div_down(&Dy::from_bigint(&binom), prec);
            lo = lo.max(&cand);
        }
        let norm2: BigInt = q.coeffs().iter().map(|c| c * c).sum();
        let up = Dy::from_bigint(&norm2).sqrt_up(prec);
        (lo, up)
    };
    let mut lo = mlo;
    let mut up = mup;
    for _ in 0..iterations {
        lo = lo.sqrt_down(prec);
        up = up.sqrt_up(prec);
    }
    lo = lo.max(&Dy::one());
    Ok(MeasureResult::new(lo, up, MeasureMethod::Graeffe))
}

/// Witness for a Kronecker polynomial: P = x^a · ∏ Φ_{n_i}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicWitness {
    pub power_of_x: usize,
    pub indices: Vec<u64>,
}

/// Exact test for P = x^a·∏Φ_{n_i} (equivalently M(P) = 1). The indices are
/// found by dividing out Φ_n for every n with φ(n) ≤ deg P; φ(n) ≥ √(n/2)
/// makes n ≤ 2·d² a safe cap.
pub fn is_cyclotomic_product(p: &IntPoly) -> Result<Option<CyclotomicWitness>> {
    p.require_monic("is_cyclotomic_product")?;
    let coeffs = p.coeffs();
    let a = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("monic polynomial is nonzero");
    let mut rem = IntPoly::new(coeffs[a..].to_vec());
    let d = rem.deg();
    let mut indices = Vec::new();
    let cap = 2 * (d as u64) * (d as u64) + 1;
    for n in 1..=cap {
        if rem.deg() == 0 {
            break;
        }
        if euler_phi(n) > rem.deg() as u64 {
            continue;
        }
        let phi = cyclotomic(n)?;
        while let Some(qq) = rem.divide_exact(&phi) {
            indices.push(n);
            rem = qq;
            if rem.deg() == 0 {
                break;
            }
        }
    }
    if rem == IntPoly::one() {
        Ok(Some(CyclotomicWitness { power_of_x: a, indices }))
    } else {
        Ok(None)
    }
}

/// Coefficient palindrome: P(x) = x^d P(1/x).
pub fn is_reciprocal(p: &IntPoly) -> bool {
    p.is_reciprocal()
}

/// c0·(log log d / log d)³.
pub fn dobrowolski_bound(d: u64, c0: f64) -> Result<f64> {
    if d < 3 {
        return Err(Error::Domain("dobrowolski_bound needs d >= 3".into()));
    }
    if !(c0 >= 0.0) {
        return Err(Error::Domain("c0 must be nonnegative".into()));
    }
    let ld = (d as f64).ln();
    Ok(c0 * (ld.ln() / ld).powi(3))
}

/// The certified upper bound d^d·M(P)^{2nd} for |Δ(P_n)|, as an f64 rounded
/// upward (±inf is a sound answer for out-of-range values).
pub fn hadamard_disc_bound(p: &IntPoly, n: u64) -> Result<f64> {
    p.require_monic("hadamard_disc_bound")?;
    if p.deg() == 0 || !p.is_squarefree() {
        return Err(Error::Domain(
            "hadamard_disc_bound needs a squarefree polynomial of degree >= 1".into(),
        ));
    }
    if n == 0 {
        return Err(Error::Domain("hadamard_disc_bound needs n >= 1".into()));
    }
    let d = p.deg() as u64;
    let m = mahler_measure(p, 1e-6)?;
    let dd = BigInt::from(d).pow(d as u32);
    let bound = m.up().pow_up(2 * n * d, 96).mul_bigint(&dd);
    // Pad before the lossy f64 conversion so the result stays an upper bound.
    let padded = bound.add(&bound.mul_pow2(-20)).round_up(64);
    Ok(padded.to_f64())
}
