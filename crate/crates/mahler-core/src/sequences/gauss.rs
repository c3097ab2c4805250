//! Gauss congruences for the integer sequences attached to P.
//!
//! A sequence {c_n} satisfies the Gauss congruences when
//! n | Σ_{m|n} μ(n/m) c_m for every n. Three families are checked here: the
//! coefficients of P_n, the discriminants Δ(P_n) (whose Möbius transform is
//! δ_n itself), and resultants Res(P_n, Q) against a fixed companion Q. All
//! three reports share one record shape so the command line can render them
//! uniformly.

use crate::error::{Error, Result};
use crate::polycore::factorize::FactorizationJson;
use crate::polycore::numth::{divisors, is_prime_u64, moebius};
use crate::polycore::powermap::{from_power_sums, power_sum_table};
use crate::polycore::{factorize, power_map, resultant, IntPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// One index of a congruence family. `value` is the integer whose
/// divisibility is asserted (for the coefficient family, the worst
/// coefficient sum); `quotient` is value divided by the asserted modulus
/// when the verdict holds.
#[derive(Debug, Clone)]
pub struct GaussRecord {
    pub n: u64,
    pub value: BigInt,
    pub quotient: Option<BigInt>,
    pub verdict: bool,
}

#[derive(Debug, Clone)]
pub struct GaussReport {
    pub polynomial: String,
    pub family: String,
    pub range: [u64; 2],
    pub records: Vec<GaussRecord>,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct GaussRecordJson {
    pub n: u64,
    pub value: String,
    pub factorization: FactorizationJson,
    pub verdict: bool,
}

#[derive(Serialize)]
pub struct GaussReportJson {
    pub polynomial: String,
    pub family: String,
    pub range: [u64; 2],
    pub records: Vec<GaussRecordJson>,
    pub pass: bool,
}

impl GaussReport {
    pub fn to_json(&self) -> GaussReportJson {
        GaussReportJson {
            polynomial: self.polynomial.clone(),
            family: self.family.clone(),
            range: self.range,
            records: self
                .records
                .iter()
                .map(|r| GaussRecordJson {
                    n: r.n,
                    value: r.value.to_string(),
                    factorization: FactorizationJson::from(&factorize(&r.value)),
                    verdict: r.verdict,
                })
                .collect(),
            pass: self.pass,
        }
    }

    fn finish(polynomial: String, family: String, range: [u64; 2], records: Vec<GaussRecord>) -> GaussReport {
        let pass = records.iter().all(|r| r.verdict);
        GaussReport { polynomial, family, range, records, pass }
    }
}

/// The polynomials P_1..P_nmax via one power-sum pass.
fn power_polys(p: &IntPoly, nmax: u64) -> Result<Vec<IntPoly>> {
    let d = p.deg();
    power_sum_table(p, nmax)?
        .iter()
        .map(|row| from_power_sums(d, row))
        .collect()
}

/// Coefficientwise congruence: n | Σ_{m|n} μ(n/m)·a_k(P_m) for every
/// coefficient index k < d. The record keeps the largest-magnitude sum.
pub fn gauss_check_coefficients(p: &IntPoly, nmax: u64) -> Result<GaussReport> {
    p.require_monic("gauss_check_coefficients")?;
    if p.deg() < 1 || nmax < 2 {
        return Err(Error::Domain("gauss_check_coefficients needs degree >= 1 and nmax >= 2".into()));
    }
    let d = p.deg();
    let polys = power_polys(p, nmax)?;
    let mut records = Vec::new();
    for n in 2..=nmax {
        let nb = BigInt::from(n);
        let mut worst = BigInt::zero();
        let mut all_div = true;
        for k in 0..d {
            let mut acc = BigInt::zero();
            for m in divisors(n) {
                match moebius(n / m) {
                    1 => acc += polys[(m - 1) as usize].coeff(k),
                    -1 => acc -= polys[(m - 1) as usize].coeff(k),
                    _ => {}
                }
            }
            if !(&acc % &nb).is_zero() {
                all_div = false;
            }
            if acc.abs() > worst.abs() {
                worst = acc;
            }
        }
        let quotient = all_div.then(|| &worst / &nb);
        records.push(GaussRecord { n, value: worst, quotient, verdict: all_div });
    }
    Ok(GaussReport::finish(p.coeff_string(), "coefficients".into(), [2, nmax], records))
}

/// Discriminant congruence: n | δ_n(P) where δ_n = Σ_{m|n} μ(n/m) Δ(P_m).
pub fn gauss_check_delta(p: &IntPoly, nmax: u64) -> Result<GaussReport> {
    let seq = super::delta::delta_seq(p, nmax)?;
    let mut records = Vec::new();
    for n in 1..=nmax {
        let nb = BigInt::from(n);
        let value = seq.small_delta_at(n);
        let verdict = (&value % &nb).is_zero();
        let quotient = verdict.then(|| &value / &nb);
        records.push(GaussRecord { n, value, quotient, verdict });
    }
    Ok(GaussReport::finish(p.coeff_string(), "delta".into(), [1, nmax], records))
}

/// Resultant congruence: with c_m = Res(P_m, Q), n | Σ_{m|n} μ(n/m) c_m.
pub fn gauss_check_resultant(p: &IntPoly, q: &IntPoly, nmax: u64) -> Result<GaussReport> {
    p.require_monic("gauss_check_resultant")?;
    if p.deg() < 1 || q.is_zero() || nmax < 1 {
        return Err(Error::Domain("gauss_check_resultant needs degree >= 1, Q != 0 and nmax >= 1".into()));
    }
    let polys = power_polys(p, nmax)?;
    let c: Vec<BigInt> = polys.iter().map(|pn| resultant(pn, q)).collect::<Result<_>>()?;
    let mut records = Vec::new();
    for n in 1..=nmax {
        let nb = BigInt::from(n);
        let mut value = BigInt::zero();
        for m in divisors(n) {
            match moebius(n / m) {
                1 => value += &c[(m - 1) as usize],
                -1 => value -= &c[(m - 1) as usize],
                _ => {}
            }
        }
        let verdict = (&value % &nb).is_zero();
        let quotient = verdict.then(|| &value / &nb);
        records.push(GaussRecord { n, value, quotient, verdict });
    }
    let family = format!("resultant({})", q.coeff_string());
    Ok(GaussReport::finish(p.coeff_string(), family, [1, nmax], records))
}

/// Res(P_q, P) for each listed prime q: divisible by q^d for every monic P,
/// because Res(P_q, P) = Π_j P(α_j^q) and P(α^q) ≡ P(α)^q ≡ 0 modulo q. The
/// value vanishes only when some root ratio is a root of unity, so a zero
/// here for an irreducible non-cyclotomic P would falsify the theorem.
pub fn dobrowolski_check(p: &IntPoly, primes: &[u64]) -> Result<GaussReport> {
    p.require_monic("dobrowolski_check")?;
    if p.deg() < 1 || primes.is_empty() {
        return Err(Error::Domain("dobrowolski_check needs degree >= 1 and at least one prime".into()));
    }
    let d = p.deg();
    let mut records = Vec::new();
    for &q in primes {
        if !is_prime_u64(q) {
            return Err(Error::Domain(format!("{q} is not prime")));
        }
        let value = resultant(&power_map(p, q)?, p)?;
        let modulus = BigInt::from(q).pow(d as u32);
        let verdict = (&value % &modulus).is_zero();
        let quotient = verdict.then(|| &value / &modulus);
        records.push(GaussRecord { n: q, value, quotient, verdict });
    }
    let lo = *primes.iter().min().unwrap();
    let hi = *primes.iter().max().unwrap();
    let pass = records.iter().all(|r| r.verdict);
    Ok(GaussReport { polynomial: p.coeff_string(), family: "dobrowolski".into(), range: [lo, hi], records, pass })
}
