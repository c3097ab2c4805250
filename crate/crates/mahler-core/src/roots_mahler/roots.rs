//! Certified root isolation.
//!
//! Floating-point Aberth–Ehrlich iteration (companion-matrix eigenvalues as
//! fallback) supplies approximations; exact dyadic Newton sharpens them; the
//! a-posteriori residual bound deg(f)·|f(z)|/|f'(z)| certifies a disk around
//! each approximation that must contain a root. When the deg(f) disks are
//! pairwise disjoint, each contains exactly one root, and a disk centered on
//! the real axis in a conjugate-symmetric disjoint family can only hold a
//! real root. Working precision doubles until the requested radii are
//! certified, with a hard cap.

use nalgebra::{Complex, DMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polycore::poly::IntPoly;
use crate::roots_mahler::ball::{eval_ball, eval_point, Dy};

const PREC_CAP: u64 = 4096;

type C64 = Complex<f64>;

/// One certified root disk.
#[derive(Debug, Clone)]
pub struct CertifiedRoot {
    /// Disk center, exact dyadic.
    pub re: Dy,
    pub im: Dy,
    /// Certified radius: the disk contains exactly one distinct root.
    pub radius: Dy,
    /// Multiplicity of that root in the source polynomial.
    pub multiplicity: u32,
    /// Rigorously real (center on the axis, see module docs).
    pub is_real: bool,
    /// Set when separation below the requested precision stopped isolation.
    pub cluster: bool,
}

impl CertifiedRoot {
    /// |center|², exact.
    pub fn mod2(&self) -> Dy {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    /// Lower bound for |root|.
    pub fn modulus_down(&self, prec: u64) -> Dy {
        self.mod2()
            .sqrt_down(prec)
            .sub(&self.radius)
            .max(&Dy::zero())
    }

    /// Upper bound for |root|.
    pub fn modulus_up(&self, prec: u64) -> Dy {
        self.mod2().sqrt_up(prec).add(&self.radius).round_up(prec)
    }

    pub fn re_f64(&self) -> f64 {
        self.re.to_f64()
    }

    pub fn im_f64(&self) -> f64 {
        self.im.to_f64()
    }

    pub fn radius_f64(&self) -> f64 {
        self.radius.to_f64()
    }
}

/// All roots of a polynomial, certified, ordered by descending modulus with
/// ties broken by ascending principal argument in (-π, π].
#[derive(Debug, Clone)]
pub struct RootSet {
    pub roots: Vec<CertifiedRoot>,
    pub degree: usize,
}

impl RootSet {
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity as usize).sum()
    }
}

/// Find every root of P with certified radii at most `target_precision`.
pub fn find_roots(p: &IntPoly, target_precision: f64) -> Result<RootSet> {
    if p.is_zero() {
        return Err(Error::Domain("cannot isolate roots of the zero polynomial".into()));
    }
    if p.deg() == 0 {
        return Err(Error::Domain("root isolation needs degree >= 1".into()));
    }
    if !(target_precision > 0.0) || !target_precision.is_finite() {
        return Err(Error::Domain("target precision must be positive and finite".into()));
    }
    let eps = Dy::from_f64(target_precision).expect("finite by the check above");
    let degree = p.deg();

    // Zero roots are exact; split them off.
    let k0 = p
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let core = IntPoly::new(p.coeffs()[k0..].to_vec()).primitive_part();

    let mut factors: Vec<Factor> = Vec::new();
    if core.deg() >= 1 {
        for (g, mult) in core.squarefree_decomposition()? {
            let approx = initial_approximations(&g);
            factors.push(Factor {
                dcoeffs: g.derivative().coeffs().to_vec(),
                deg: g.deg(),
                coeffs: g.coeffs().to_vec(),
                mult: mult as u32,
                approx: approx
                    .into_iter()
                    .map(|z| {
                        (
                            Dy::from_f64(z.re).unwrap_or_else(Dy::zero),
                            Dy::from_f64(z.im).unwrap_or_else(Dy::zero),
                        )
                    })
                    .collect(),
            });
        }
    }

    let mut prec: u64 = 64;
    loop {
        let attempt_result = attempt(&mut factors, prec, &eps);
        if let Some(mut roots) = attempt_result {
            // When 0 is a root it is reported exactly; the other disks must
            // exclude the origin or they would cover two roots of P.
            let origin_clear = k0 == 0
                || roots.iter().all(|r| {
                    r.cluster || r.mod2().cmp(&r.radius.mul(&r.radius)) == Ordering::Greater
                });
            if origin_clear {
                if k0 > 0 {
                    roots.push(CertifiedRoot {
                        re: Dy::zero(),
                        im: Dy::zero(),
                        radius: Dy::zero(),
                        multiplicity: k0 as u32,
                        is_real: true,
                        cluster: false,
                    });
                }
                sort_roots(&mut roots);
                let rs = RootSet { roots, degree };
                debug_assert_eq!(rs.total_multiplicity(), degree);
                return Ok(rs);
            }
        }
        if prec >= PREC_CAP {
            return Err(Error::Resource(format!(
                "root certification did not converge within {PREC_CAP} bits"
            )));
        }
        prec *= 2;
    }
}

struct Factor {
    coeffs: Vec<BigInt>,
    dcoeffs: Vec<BigInt>,
    deg: usize,
    mult: u32,
    approx: Vec<(Dy, Dy)>,
}

/// One pass at working precision `prec`: refine, certify, canonicalize,
/// check separation. None means escalate.
fn attempt(factors: &mut [Factor], prec: u64, eps: &Dy) -> Option<Vec<CertifiedRoot>> {
    let mut disks: Vec<CertifiedRoot> = Vec::new();
    for f in factors.iter_mut() {
        for a in f.approx.iter_mut() {
            let refined = newton_refine(&f.coeffs, &f.dcoeffs, a.clone(), prec);
            *a = refined;
        }
        disks.extend(canonicalize_factor(f, prec)?);
    }
    let radii_ok = disks.iter().all(|d| d.radius.cmp(eps) != Ordering::Greater);
    if pairwise_disjoint(&disks) {
        return if radii_ok { Some(disks) } else { None };
    }
    // Overlapping disks: either the roots are genuinely closer than the
    // requested precision, or we have not looked hard enough yet. Push the
    // radii far below eps (or to the cap) before conceding a cluster.
    let deep = eps.mul_pow2(-12);
    let deep_enough = disks.iter().all(|d| d.radius.cmp(&deep) != Ordering::Greater);
    if radii_ok && (deep_enough || prec >= PREC_CAP) {
        return Some(flag_clusters(disks));
    }
    None
}

fn flag_clusters(mut disks: Vec<CertifiedRoot>) -> Vec<CertifiedRoot> {
    let n = disks.len();
    for i in 0..n {
        for j in i + 1..n {
            if disks_overlap(&disks[i], &disks[j]) {
                disks[i].cluster = true;
                disks[j].cluster = true;
            }
        }
    }
    disks
}

fn disks_overlap(a: &CertifiedRoot, b: &CertifiedRoot) -> bool {
    let dr = a.re.sub(&b.re);
    let di = a.im.sub(&b.im);
    let dist2 = dr.mul(&dr).add(&di.mul(&di));
    let rr = a.radius.add(&b.radius);
    dist2.cmp(&rr.mul(&rr)) != Ordering::Greater
}

fn pairwise_disjoint(disks: &[CertifiedRoot]) -> bool {
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            if disks_overlap(&disks[i], &disks[j]) {
                return false;
            }
        }
    }
    true
}

/// Refine, certify and conjugate-canonicalize the disks of one squarefree
/// factor. None means the configuration is not yet clean at this precision.
fn canonicalize_factor(f: &Factor, prec: u64) -> Option<Vec<CertifiedRoot>> {
    #[derive(Clone)]
    struct Raw {
        re: Dy,
        im: Dy,
        rad: Dy,
    }
    let mut raws: Vec<Raw> = Vec::with_capacity(f.approx.len());
    for (zr, zi) in &f.approx {
        let rad = certify(f, zr, zi, prec)?;
        raws.push(Raw { re: zr.clone(), im: zi.clone(), rad });
    }

    let mut out: Vec<CertifiedRoot> = Vec::new();
    let mut uppers: Vec<Raw> = Vec::new();
    let mut lowers: Vec<Raw> = Vec::new();
    for r in &raws {
        if r.im.abs().cmp(&r.rad) != Ordering::Greater {
            // Candidate real root: re-run Newton on the axis and certify a
            // disk centered there. The stored approximation is untouched.
            let (zr, zi) = newton_refine(
                &f.coeffs,
                &f.dcoeffs,
                (r.re.clone(), Dy::zero()),
                prec,
            );
            debug_assert!(zi.is_zero());
            let rad = certify(f, &zr, &zi, prec)?;
            out.push(CertifiedRoot {
                re: zr,
                im: Dy::zero(),
                radius: rad,
                multiplicity: f.mult,
                is_real: true,
                cluster: false,
            });
        } else if r.im.is_positive() {
            uppers.push(r.clone());
        } else {
            lowers.push(r.clone());
        }
    }
    if uppers.len() != lowers.len() {
        return None;
    }
    // Pair each upper disk with the nearest lower disk and mirror exactly;
    // the residual bound is conjugation-invariant, so the certificate carries
    // over. Ambiguity or reuse sends us back for more precision.
    let mut used = vec![false; lowers.len()];
    for u in &uppers {
        let target_im = u.im.neg();
        let mut best: Option<(usize, Dy)> = None;
        for (i, l) in lowers.iter().enumerate() {
            let dr = l.re.sub(&u.re);
            let di = l.im.sub(&target_im);
            let d2 = dr.mul(&dr).add(&di.mul(&di));
            match &best {
                Some((_, cur)) if d2.cmp(cur) != Ordering::Less => {}
                _ => best = Some((i, d2)),
            }
        }
        let (idx, _) = best?;
        if used[idx] {
            return None;
        }
        used[idx] = true;
        for sign in [1i64, -1] {
            out.push(CertifiedRoot {
                re: u.re.clone(),
                im: if sign == 1 { u.im.clone() } else { u.im.neg() },
                radius: u.rad.clone(),
                multiplicity: f.mult,
                is_real: false,
                cluster: false,
            });
        }
    }
    if out.len() != f.deg {
        return None;
    }
    Some(out)
}

/// Certified residual radius deg(f)·|f(z)|/|f'(z)| at the exact point z,
/// every quantity bounded in the correct direction. None when the derivative
/// bound cannot exclude zero.
fn certify(f: &Factor, zr: &Dy, zi: &Dy, prec: u64) -> Option<Dy> {
    let pb = eval_ball(&f.coeffs, zr, zi, prec);
    let qb = eval_ball(&f.dcoeffs, zr, zi, prec);
    let up = pb.mod_up(64);
    let lo = qb.mod_down(64);
    if !lo.is_positive() {
        return None;
    }
    let rad = up.mul_bigint(&BigInt::from(f.deg)).div_up(&lo, 64);
    Some(rad)
}

/// Plain dyadic Newton from a starting point; stops when the correction is
/// far below the working precision or the iteration budget runs out.
fn newton_refine(
    coeffs: &[BigInt],
    dcoeffs: &[BigInt],
    start: (Dy, Dy),
    prec: u64,
) -> (Dy, Dy) {
    let (mut zr, mut zi) = start;
    for _ in 0..60 {
        let (pr, pi) = eval_point(coeffs, &zr, &zi, prec);
        let (qr, qi) = eval_point(dcoeffs, &zr, &zi, prec);
        let den = qr.mul(&qr).add(&qi.mul(&qi));
        if den.is_zero() {
            break;
        }
        // δ = P(z)·conj(P'(z)) / |P'(z)|².
        let nr = pr.mul(&qr).add(&pi.mul(&qi)).div_approx(&den, prec);
        let ni = pi.mul(&qr).sub(&pr.mul(&qi)).div_approx(&den, prec);
        zr = zr.sub(&nr).round_err(prec).0;
        zi = zi.sub(&ni).round_err(prec).0;
        let corr2 = nr.mul(&nr).add(&ni.mul(&ni));
        let scale2 = zr
            .mul(&zr)
            .add(&zi.mul(&zi))
            .add(&Dy::one())
            .mul_pow2(-(2 * prec as i64) + 8);
        if corr2.cmp(&scale2) == Ordering::Less {
            break;
        }
    }
    (zr, zi)
}

/// Descending modulus, ties by ascending principal argument in (-π, π].
fn sort_roots(roots: &mut [CertifiedRoot]) {
    roots.sort_by(|a, b| {
        match b.mod2().cmp(&a.mod2()) {
            Ordering::Equal => cmp_arg(a, b),
            o => o,
        }
    });
}

/// Argument comparison without transcendentals: quadrant class, then an
/// exact cross product within the open half-planes.
fn cmp_arg(a: &CertifiedRoot, b: &CertifiedRoot) -> Ordering {
    let group = |r: &CertifiedRoot| -> u8 {
        if r.im.is_negative() {
            0
        } else if r.im.is_zero() && !r.re.is_negative() {
            1
        } else if r.im.is_positive() {
            2
        } else {
            3
        }
    };
    let (ga, gb) = (group(a), group(b));
    if ga != gb {
        return ga.cmp(&gb);
    }
    if ga == 1 || ga == 3 {
        return Ordering::Equal;
    }
    // Same open half-plane: arg(a) < arg(b) iff a×b > 0.
    let cross = a.re.mul(&b.im).sub(&a.im.mul(&b.re));
    if cross.is_positive() {
        Ordering::Less
    } else if cross.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

// ---- f64 first approximations ----

/// Aberth–Ehrlich from perturbed-circle starts; companion-matrix eigenvalues
/// when the iteration stalls.
fn initial_approximations(g: &IntPoly) -> Vec<C64> {
    let d = g.deg();
    let lc = g.lc().to_f64().unwrap_or(1.0);
    let a: Vec<f64> = g
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(0.0) / lc)
        .collect();
    if d == 1 {
        return vec![C64::new(-a[0], 0.0)];
    }
    let radius = 1.0 + a.iter().take(d).fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<C64> = (0..d)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64) / (d as f64) + 0.45;
            C64::new(th.cos(), th.sin()) * (radius * 0.7)
        })
        .collect();
    if !aberth(&a, &mut z, 400) {
        if let Some(eig) = companion_eigenvalues(&a) {
            z = eig;
            aberth(&a, &mut z, 80);
        }
    }
    z
}

/// In-place Aberth sweeps; true when converged.
fn aberth(a: &[f64], z: &mut [C64], sweeps: usize) -> bool {
    let d = z.len();
    for _ in 0..sweeps {
        let snapshot = z.to_vec();
        let mut worst = 0.0f64;
        for k in 0..d {
            let zk = snapshot[k];
            let n = newton_term(a, zk);
            if !n.re.is_finite() || !n.im.is_finite() {
                return false;
            }
            let mut s = C64::new(0.0, 0.0);
            for (j, zj) in snapshot.iter().enumerate() {
                if j != k {
                    let diff = zk - zj;
                    if diff.norm_sqr() < 1e-300 {
                        s += C64::new(1e150, 0.0);
                    } else {
                        s += diff.inv();
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - n * s;
            let w = if denom.norm_sqr() > 1e-30 { n / denom } else { n };
            z[k] = zk - w;
            worst = worst.max(w.norm() / (1.0 + zk.norm()));
        }
        if worst < 1e-13 {
            return true;
        }
    }
    false
}

/// P(z)/P'(z) for monic-normalized coefficients, with the reciprocal
/// transform outside the unit disk to dodge overflow.
fn newton_term(a: &[f64], z: C64) -> C64 {
    let d = a.len() - 1;
    if z.norm_sqr() <= 1.0 {
        let mut p = C64::new(0.0, 0.0);
        let mut dp = C64::new(0.0, 0.0);
        for &c in a.iter().rev() {
            dp = dp * z + p;
            p = p * z + C64::new(c, 0.0);
        }
        if dp.norm_sqr() == 0.0 {
            return C64::new(f64::NAN, 0.0);
        }
        p / dp
    } else {
        // w = 1/z, Q(w) = w^d P(1/w): P/P' = z·Q/(d·Q - w·Q').
        let w = z.inv();
        let mut q = C64::new(0.0, 0.0);
        let mut dq = C64::new(0.0, 0.0);
        for &c in a.iter() {
            dq = dq * w + q;
            q = q * w + C64::new(c, 0.0);
        }
        let den = q * (d as f64) - w * dq;
        if den.norm_sqr() == 0.0 {
            return C64::new(f64::NAN, 0.0);
        }
        z * q / den
    }
}

fn companion_eigenvalues(a: &[f64]) -> Option<Vec<C64>> {
    let d = a.len() - 1;
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -a[i];
    }
    let eig = m.complex_eigenvalues();
    let v: Vec<C64> = eig.iter().copied().collect();
    if v.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
        Some(v)
    } else {
        None
    }
}
