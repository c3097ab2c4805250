//! Exact reconstruction of f_P from initial Δ(P_n) values.
//!
//! Berlekamp-Massey over ℚ finds the minimal connection polynomial of the
//! prefix; the fit is then re-verified on eight held-out terms before any
//! value is trusted. The connection polynomial must come out integral with
//! constant term 1, squarefree, and coprime to the numerator: each of these
//! is a theorem for Δ(P_n), so a failure is reported as an integrity error
//! rather than repaired.

use super::{order_bound, RationalFn};
use crate::error::{Error, Result};
use crate::polycore::IntPoly;
use crate::sequences::delta::delta_seq;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Minimal linear recurrence Σ_{i=0}^{order} connection[i] · s_{n-i} = 0,
/// with connection[0] = 1. `confirmed` records whether the input was long
/// enough (2·order terms) for the minimality to be meaningful.
#[derive(Debug, Clone)]
pub struct Recurrence {
    pub connection: Vec<BigRational>,
    pub order: usize,
    pub confirmed: bool,
}

/// Berlekamp-Massey over the rationals. Deterministic; returns the unique
/// minimal-order connection polynomial fitting the whole input.
pub fn berlekamp_massey(seq: &[BigRational]) -> Recurrence {
    let mut c: Vec<BigRational> = vec![BigRational::one()];
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = BigRational::one();
    for n in 0..seq.len() {
        let mut delta = seq[n].clone();
        for i in 1..c.len().min(n + 1) {
            delta += &c[i] * &seq[n - i];
        }
        if delta.is_zero() {
            m += 1;
            continue;
        }
        let coef = &delta / &last;
        let shifted_len = b.len() + m;
        if c.len() < shifted_len {
            c.resize(shifted_len, BigRational::zero());
        }
        if 2 * l <= n {
            let keep = c.clone();
            for (i, bi) in b.iter().enumerate() {
                c[i + m] -= &coef * bi;
            }
            l = n + 1 - l;
            b = keep;
            last = delta;
            m = 1;
        } else {
            for (i, bi) in b.iter().enumerate() {
                c[i + m] -= &coef * bi;
            }
            m += 1;
        }
    }
    c.truncate(l + 1);
    c.resize(l + 1, BigRational::zero());
    Recurrence { connection: c, order: l, confirmed: 2 * l <= seq.len() }
}

fn satisfies(connection: &[BigRational], vals: &[BigInt]) -> bool {
    let l = connection.len() - 1;
    for k in l..vals.len() {
        let mut acc = BigRational::zero();
        for (i, ci) in connection.iter().enumerate() {
            acc += ci * &BigRational::from_integer(vals[k - i].clone());
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// f_P(z) = Σ_{n≥1} Δ(P_n) z^n as an exact rational function, reconstructed
/// from the first `n` sequence values. Needs n ≥ 2(d(d-1)+1)+8 so that even
/// a full-order recurrence leaves eight terms for verification; if the true
/// order is larger than the prefix can confirm, the error names the length
/// that is guaranteed to suffice.
pub fn rational_fn_of_delta(p: &IntPoly, n: u64) -> Result<RationalFn> {
    p.require_monic("rational_fn_of_delta")?;
    let d = p.deg();
    if d < 2 {
        return Err(Error::Domain("f_P needs degree at least 2".into()));
    }
    if !p.is_squarefree() {
        return Err(Error::Domain("f_P needs a squarefree polynomial".into()));
    }
    let min_n = 2 * (d * (d - 1) + 1) as u64 + 8;
    if n < min_n {
        return Err(Error::Domain(format!(
            "f_P for degree {d} needs at least {min_n} sequence terms, got {n}"
        )));
    }
    let seq = delta_seq(p, n)?;
    let vals = seq.values();
    let held = 8usize;
    let train: Vec<BigRational> =
        vals[..vals.len() - held].iter().map(|v| BigRational::from_integer(v.clone())).collect();
    let rec = berlekamp_massey(&train);
    if !rec.confirmed || !satisfies(&rec.connection, vals) {
        let needed = 2 * order_bound(d) + 8;
        if n >= needed as u64 {
            return Err(Error::Integrity(format!(
                "no linear recurrence of order at most {} fits Delta(P_n) for {}",
                order_bound(d),
                p
            )));
        }
        return Err(Error::OrderTooLow { needed });
    }
    let l = rec.order;
    // Numerator of C(z) · Σ s_n z^n; the recurrence kills every coefficient
    // past degree l (s_0 = 0).
    let mut numq = vec![BigRational::zero(); l + 1];
    for (k, nk) in numq.iter_mut().enumerate() {
        let mut acc = BigRational::zero();
        for (i, ci) in rec.connection.iter().enumerate().take(k + 1) {
            if k - i >= 1 {
                acc += ci * &BigRational::from_integer(vals[k - i - 1].clone());
            }
        }
        *nk = acc;
    }
    let mut scale = BigInt::one();
    for q in rec.connection.iter().chain(numq.iter()) {
        scale = scale.lcm(q.denom());
    }
    if !scale.is_one() {
        return Err(Error::Integrity(format!(
            "connection polynomial of Delta(P_n) for {p} is not integral (denominator {scale})"
        )));
    }
    let den = IntPoly::new(rec.connection.iter().map(|q| q.to_integer()).collect());
    let num = IntPoly::new(numq.iter().map(|q| q.to_integer()).collect());
    if !den.is_squarefree() {
        return Err(Error::Integrity(format!("f_P for {p} has a repeated pole")));
    }
    if num.gcd(&den).deg() > 0 {
        return Err(Error::Integrity(format!(
            "f_P for {p}: minimal numerator and denominator share a factor"
        )));
    }
    Ok(RationalFn { num, den })
}
