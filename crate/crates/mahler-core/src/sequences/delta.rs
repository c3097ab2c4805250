//! The discriminant sequence Δ(P_n) and the sequences derived from it.
//!
//! For monic P with roots α_1,…,α_d, P_n is the monic polynomial whose roots
//! are the n-th powers α_j^n, and Δ(P_n) its discriminant. Everything here is
//! exact integer arithmetic: the sequence itself, the Möbius transform
//! δ_n(P) = Σ_{m|n} μ(n/m) Δ(P_m), the essential factors Ψ_n(P) with
//! Δ(P_n) = Π_{m|n} Ψ_m(P), characteristic prime factors, and the quadratic
//! square-root sequence b_n with b_n²·Δ(P) = Δ(P_n).
//!
//! Sign and monotonicity verdicts hinge on whether Δ(P_n) ever vanishes.
//! Vanishing happens exactly when some ratio α_j/α_k of distinct roots is a
//! root of unity (or a root repeats), and every such ratio satisfies an
//! integer polynomial of degree d(d-1), so the possible torsion orders t are
//! bounded by φ(t) ≤ d(d-1). [`torsion_zero`] scans that finite range and
//! thereby either finds the least zero or proves there is none at any n.

use crate::error::{Error, Result};
use crate::polycore::numth::{divisors, euler_phi, is_prime_u64, log2_bigint, moebius, perfect_square, sign_of};
use crate::polycore::powermap::{from_power_sums, power_sum_table};
use crate::polycore::{discriminant, factorize, power_map, resultant, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Δ(P_n) for n = 1..=nmax, computed from one Newton power-sum pass.
#[derive(Debug, Clone)]
pub struct DeltaSequence {
    p: IntPoly,
    values: Vec<BigInt>,
}

pub fn delta_seq(p: &IntPoly, nmax: u64) -> Result<DeltaSequence> {
    p.require_monic("delta_seq")?;
    if p.deg() < 1 {
        return Err(Error::Domain("delta_seq needs degree >= 1".into()));
    }
    if nmax < 1 {
        return Err(Error::Domain("delta_seq needs nmax >= 1".into()));
    }
    let d = p.deg();
    let table = power_sum_table(p, nmax)?;
    let mut values = Vec::with_capacity(nmax as usize);
    for row in &table {
        let pn = from_power_sums(d, row)?;
        values.push(discriminant(&pn)?);
    }
    Ok(DeltaSequence { p: p.clone(), values })
}

impl DeltaSequence {
    pub fn poly(&self) -> &IntPoly {
        &self.p
    }

    pub fn nmax(&self) -> u64 {
        self.values.len() as u64
    }

    /// Δ(P_n), 1-indexed.
    pub fn delta(&self, n: u64) -> &BigInt {
        assert!(n >= 1 && n <= self.nmax(), "delta index {n} out of range");
        &self.values[(n - 1) as usize]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// δ_n(P) = Σ_{m|n} μ(n/m) Δ(P_m).
    pub fn small_delta_at(&self, n: u64) -> BigInt {
        assert!(n >= 1 && n <= self.nmax(), "small delta index {n} out of range");
        let mut acc = BigInt::zero();
        for m in divisors(n) {
            match moebius(n / m) {
                1 => acc += self.delta(m),
                -1 => acc -= self.delta(m),
                _ => {}
            }
        }
        acc
    }
}

/// Least n with Δ(P_n) = 0, or None as a proof that Δ(P_n) ≠ 0 for every n.
///
/// The scan range is the largest t with φ(t) ≤ d(d-1) (φ(t) ≥ √(t/2) bounds
/// it by 2(d(d-1))² + 1). A zero beyond the requested nmax of a caller is
/// still a zero; callers report it as the order at which the sequence
/// degenerates.
pub fn torsion_zero(p: &IntPoly) -> Result<Option<u64>> {
    p.require_monic("torsion_zero")?;
    if p.deg() < 1 {
        return Err(Error::Domain("torsion_zero needs degree >= 1".into()));
    }
    let d = p.deg() as u64;
    if d == 1 {
        return Ok(None);
    }
    let cap = d * (d - 1);
    if cap > 1024 {
        return Err(Error::Resource(format!(
            "torsion scan for degree {d} would cover orders up to {}",
            2 * cap * cap
        )));
    }
    let t_bound = (1..=2 * cap * cap + 1)
        .filter(|&t| euler_phi(t) <= cap)
        .max()
        .expect("t = 1 always qualifies");
    let seq = delta_seq(p, t_bound)?;
    Ok((1..=t_bound).find(|&t| seq.delta(t).is_zero()))
}

/// Whether the sign theorems for Δ(P_n) and δ_n(P) apply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignVerdict {
    /// No Δ(P_n) vanishes; every nonzero Δ(P_n) and δ_n carries this sign.
    Constant { sign: i8 },
    /// Δ(P_t) = 0 at this order (possibly beyond the inspected range).
    Inapplicable { zero_at: u64 },
}

#[derive(Debug, Clone)]
pub struct SmallDeltaReport {
    /// δ_1..δ_N.
    pub deltas: Vec<BigInt>,
    /// n | δ_n for every n ≤ N.
    pub n_divides: bool,
    pub sign: SignVerdict,
    /// |Δ(P_n)| = Σ_{m|n} |δ_m| for every n ≤ N; None when the sign verdict
    /// is inapplicable (the identity needs sign constancy).
    pub abs_identity: Option<bool>,
    /// Least n₀ with 12 | δ_n for all n₀ < n ≤ N; None if 12 ∤ δ_N.
    pub div12_from: Option<u64>,
}

pub fn small_delta(p: &IntPoly, nmax: u64) -> Result<SmallDeltaReport> {
    let seq = delta_seq(p, nmax)?;
    let torsion = torsion_zero(p)?;
    let deltas: Vec<BigInt> = (1..=nmax).map(|n| seq.small_delta_at(n)).collect();
    let n_divides = deltas
        .iter()
        .zip(1u64..)
        .all(|(v, n)| (v % BigInt::from(n)).is_zero());
    let sign = match torsion {
        Some(t) => SignVerdict::Inapplicable { zero_at: t },
        None => {
            let s = sign_of(seq.delta(1));
            for (i, v) in deltas.iter().enumerate() {
                let sv = sign_of(v);
                if sv != 0 && sv != s {
                    return Err(Error::Integrity(format!(
                        "delta_{} has sign {sv} against the constant sign {s}",
                        i + 1
                    )));
                }
            }
            SignVerdict::Constant { sign: s }
        }
    };
    let abs_identity = match sign {
        SignVerdict::Constant { .. } => Some((1..=nmax).all(|n| {
            let total: BigInt = divisors(n)
                .iter()
                .map(|&m| deltas[(m - 1) as usize].abs())
                .sum();
            total == seq.delta(n).abs()
        })),
        SignVerdict::Inapplicable { .. } => None,
    };
    let twelve = BigInt::from(12);
    let div12_from = match (1..=nmax)
        .rev()
        .find(|&n| !(&deltas[(n - 1) as usize] % &twelve).is_zero())
    {
        Some(n) if n == nmax => None,
        Some(n) => Some(n),
        None => Some(0),
    };
    Ok(SmallDeltaReport { deltas, n_divides, sign, abs_identity, div12_from })
}

/// The essential factors Ψ_n(P) with Δ(P_n) = Π_{m|n} Ψ_m(P), plus the
/// integer square roots witnessing that Ψ_n is a square for n > 1.
#[derive(Debug, Clone)]
pub struct EssentialFactors {
    /// Ψ_1..Ψ_N.
    pub psi: Vec<BigInt>,
    /// Entry m-1 holds r with r² = Ψ_m for m ≥ 2; None at m = 1.
    pub square_witness: Vec<Option<BigInt>>,
}

pub fn essential_factors(seq: &DeltaSequence) -> Result<EssentialFactors> {
    let nmax = seq.nmax();
    let mut psi: Vec<BigInt> = Vec::with_capacity(nmax as usize);
    let mut square_witness = Vec::with_capacity(nmax as usize);
    for n in 1..=nmax {
        let mut prod = BigInt::one();
        for m in divisors(n) {
            if m < n {
                prod *= &psi[(m - 1) as usize];
            }
        }
        if prod.is_zero() {
            // An earlier Ψ_m with m | n already vanished (a root ratio of
            // order m), so Ψ_n would be 0/0.
            let zero_at = (1..n).find(|&m| psi[(m - 1) as usize].is_zero()).unwrap();
            return Err(Error::Domain(format!(
                "psi_{n} is undefined: psi_{zero_at} = 0 because a root ratio has order {zero_at}"
            )));
        }
        let (q, r) = seq.delta(n).div_rem(&prod);
        if !r.is_zero() {
            return Err(Error::Integrity(format!(
                "essential factor recurrence does not divide at n = {n}"
            )));
        }
        let witness = if n == 1 {
            None
        } else {
            match perfect_square(&q) {
                Some(w) => Some(w),
                None => {
                    return Err(Error::Integrity(format!("psi_{n} = {q} is not a perfect square")))
                }
            }
        };
        psi.push(q);
        square_witness.push(witness);
    }
    Ok(EssentialFactors { psi, square_witness })
}

/// One characteristic prime factor of Δ(P_n): a prime dividing Δ(P_n) but no
/// Δ(P_m) for a proper divisor m of n.
#[derive(Debug, Clone)]
pub struct CharPrime {
    pub prime: BigInt,
    /// Exact exponent: prime^exponent ‖ Δ(P_n).
    pub exponent: u32,
    /// prime^exponent ≡ 1 (mod n).
    pub residue_ok: bool,
    /// prime | Ψ_n(P).
    pub divides_psi: bool,
}

#[derive(Debug, Clone)]
pub struct CharacteristicPrimes {
    pub n: u64,
    pub delta_n: BigInt,
    pub primes: Vec<CharPrime>,
    /// Composite part of Δ(P_n) the factorizer could not split; any
    /// characteristic primes hiding in it are unreported.
    pub unknown_cofactor: Option<BigInt>,
    /// n = 1 or Δ(P_n) = 0: the notion carries no content.
    pub degenerate: bool,
    pub pass: bool,
}

pub fn characteristic_primes(p: &IntPoly, n: u64) -> Result<CharacteristicPrimes> {
    let seq = delta_seq(p, n)?;
    let delta_n = seq.delta(n).clone();
    if n == 1 || delta_n.is_zero() {
        return Ok(CharacteristicPrimes {
            n,
            delta_n,
            primes: Vec::new(),
            unknown_cofactor: None,
            degenerate: true,
            pass: true,
        });
    }
    // Ψ along the divisor lattice of n only. Δ(P_n) ≠ 0 forces Δ(P_m) ≠ 0
    // for every m | n, so the recurrence stays well-defined.
    let divs = divisors(n);
    let mut psi_of: BTreeMap<u64, BigInt> = BTreeMap::new();
    for &m in &divs {
        let mut prod = BigInt::one();
        for &k in &divs {
            if k < m && m % k == 0 {
                prod *= &psi_of[&k];
            }
        }
        let (q, r) = seq.delta(m).div_rem(&prod);
        if !r.is_zero() {
            return Err(Error::Integrity(format!(
                "essential factor recurrence does not divide at m = {m}"
            )));
        }
        psi_of.insert(m, q);
    }
    let psi_n = &psi_of[&n];
    let fac = factorize(&delta_n);
    let nb = BigInt::from(n);
    let mut primes = Vec::new();
    for (q, e) in &fac.factors {
        let characteristic = divs
            .iter()
            .filter(|&&m| m < n)
            .all(|&m| !(seq.delta(m) % q).is_zero());
        if !characteristic {
            continue;
        }
        let residue_ok = q.modpow(&BigInt::from(*e), &nb).is_one();
        let divides_psi = (psi_n % q).is_zero();
        primes.push(CharPrime { prime: q.clone(), exponent: *e, residue_ok, divides_psi });
    }
    let pass = primes.iter().all(|c| c.residue_ok && c.divides_psi);
    Ok(CharacteristicPrimes {
        n,
        delta_n,
        primes,
        unknown_cofactor: fac.cofactor.clone(),
        degenerate: false,
        pass,
    })
}

/// One index of the p^k comparison: the exact identity
/// δ_{n·p^k}(P) = δ_n(P_{p^k}) - δ_n(P_{p^{k-1}}) for p ∤ n, and the sign of
/// the difference when the sign theorem applies.
#[derive(Debug, Clone)]
pub struct PkRecord {
    pub n: u64,
    /// δ_{n·p^k}(P).
    pub lhs: BigInt,
    /// δ_n(P_{p^k}) - δ_n(P_{p^{k-1}}).
    pub rhs: BigInt,
    pub identity_ok: bool,
    /// |δ_n(P_{p^k})| ≥ |δ_n(P_{p^{k-1}})| in the signed sense; None when the
    /// sign verdict is inapplicable.
    pub monotone_ok: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct PkMonotonicity {
    pub prime: u64,
    pub k: u32,
    pub sign: SignVerdict,
    pub records: Vec<PkRecord>,
    pub pass: bool,
}

pub fn delta_pk_monotonicity(p: &IntPoly, pr: u64, k: u32, nmax: u64) -> Result<PkMonotonicity> {
    if !is_prime_u64(pr) {
        return Err(Error::Domain(format!("{pr} is not prime")));
    }
    if k < 1 || nmax < 1 {
        return Err(Error::Domain("delta_pk_monotonicity needs k >= 1 and nmax >= 1".into()));
    }
    let pk = pr
        .checked_pow(k)
        .ok_or_else(|| Error::Resource(format!("{pr}^{k} overflows")))?;
    let big_n = nmax
        .checked_mul(pk)
        .ok_or_else(|| Error::Resource(format!("nmax·{pr}^{k} overflows")))?;
    let seq = delta_seq(p, big_n)?;
    let seq_hi = delta_seq(&power_map(p, pk)?, nmax)?;
    let seq_lo = delta_seq(&power_map(p, pk / pr)?, nmax)?;
    let sign = match torsion_zero(p)? {
        Some(t) => SignVerdict::Inapplicable { zero_at: t },
        None => SignVerdict::Constant { sign: sign_of(seq.delta(1)) },
    };
    let mut records = Vec::new();
    for n in (1..=nmax).filter(|n| n % pr != 0) {
        let lhs = seq.small_delta_at(n * pk);
        let rhs = seq_hi.small_delta_at(n) - seq_lo.small_delta_at(n);
        let identity_ok = lhs == rhs;
        let monotone_ok = match sign {
            SignVerdict::Constant { sign } => {
                let sl = sign_of(&lhs);
                Some(sl == 0 || sl == sign)
            }
            SignVerdict::Inapplicable { .. } => None,
        };
        records.push(PkRecord { n, lhs, rhs, identity_ok, monotone_ok });
    }
    let pass = records.iter().all(|r| r.identity_ok && r.monotone_ok.unwrap_or(true));
    Ok(PkMonotonicity { prime: pr, k, sign, records, pass })
}

/// Lehmer's Δ_n = Π_j (α_j^n - 1) = Res(P_n, x - 1), whose n-th root tends
/// to the Mahler measure when no α_j lies on the unit circle.
#[derive(Debug, Clone)]
pub struct LehmerDelta {
    pub values: Vec<BigInt>,
    /// max over the range of |Δ_n|^{1/n} (0 when every value vanishes).
    pub max_nth_root: f64,
}

pub fn lehmer_delta(p: &IntPoly, nmax: u64) -> Result<LehmerDelta> {
    p.require_monic("lehmer_delta")?;
    if p.deg() < 1 || nmax < 1 {
        return Err(Error::Domain("lehmer_delta needs degree >= 1 and nmax >= 1".into()));
    }
    let d = p.deg();
    let table = power_sum_table(p, nmax)?;
    let x_minus_1 = IntPoly::linear_root(1);
    let mut values = Vec::with_capacity(nmax as usize);
    let mut max_nth_root = 0.0f64;
    for (i, row) in table.iter().enumerate() {
        let pn = from_power_sums(d, row)?;
        let v = resultant(&pn, &x_minus_1)?;
        if !v.is_zero() {
            let r = (log2_bigint(&v.abs()) / (i as f64 + 1.0)).exp2();
            max_nth_root = max_nth_root.max(r);
        }
        values.push(v);
    }
    Ok(LehmerDelta { values, max_nth_root })
}

/// The integer sequence b_n with b_n²·Δ(P) = Δ(P_n) for quadratic P, via the
/// linear recurrence b_{n+1} = -a_1·b_n - a_0·b_{n-1}; each term is verified
/// against the discriminant sequence.
pub fn b_seq_quadratic(p: &IntPoly, nmax: u64) -> Result<Vec<BigInt>> {
    p.require_monic("b_seq_quadratic")?;
    if p.deg() != 2 {
        return Err(Error::Domain("b_seq_quadratic needs a quadratic".into()));
    }
    if nmax < 1 {
        return Err(Error::Domain("b_seq_quadratic needs nmax >= 1".into()));
    }
    let disc = discriminant(p)?;
    if disc.is_zero() {
        return Err(Error::Domain("b_seq_quadratic needs distinct roots".into()));
    }
    let a1 = p.coeff(1);
    let a0 = p.coeff(0);
    let seq = delta_seq(p, nmax)?;
    let mut b: Vec<BigInt> = Vec::with_capacity(nmax as usize);
    for n in 1..=nmax as usize {
        let next = match n {
            1 => BigInt::one(),
            2 => -&a1,
            _ => -&a1 * &b[n - 2] - &a0 * &b[n - 3],
        };
        if &next * &next * &disc != *seq.delta(n as u64) {
            return Err(Error::Integrity(format!("b_{n}^2·Δ(P) disagrees with Δ(P_{n})")));
        }
        b.push(next);
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn delta_values_for_the_golden_quadratic() {
        let seq = delta_seq(&poly(&[1, -3, 1]), 12).unwrap();
        let want: Vec<BigInt> = [
            5i64, 45, 320, 2205, 15125, 103680, 710645, 4870845, 33385280, 228826125,
            1568397605, 10749957120,
        ]
        .iter()
        .map(|&v| big(v))
        .collect();
        assert_eq!(seq.values(), &want[..]);
    }

    #[test]
    fn delta_spot_values() {
        let cubic = delta_seq(&poly(&[-1, -1, 0, 1]), 7).unwrap();
        assert_eq!(*cubic.delta(1), big(-23));
        assert_eq!(*cubic.delta(7), big(-1472));
        let quartic = delta_seq(&poly(&[1, 1, -1, 1, 1]), 5).unwrap();
        assert_eq!(*quartic.delta(1), big(-507));
        assert_eq!(*quartic.delta(2), big(-4563));
        assert_eq!(*quartic.delta(4), big(-369603));
        assert_eq!(*quartic.delta(5), big(-33226752));
        let sqrt2 = delta_seq(&poly(&[-2, 0, 1]), 3).unwrap();
        assert_eq!(*sqrt2.delta(2), BigInt::zero());
        assert_eq!(*sqrt2.delta(3), big(32));
    }

    #[test]
    fn small_delta_full_report() {
        let report = small_delta(&poly(&[1, -3, 1]), 12).unwrap();
        let want: Vec<BigInt> = [
            5i64, 40, 315, 2160, 15120, 103320, 710640, 4868640, 33384960, 228810960,
            1568397600, 10749851280,
        ]
        .iter()
        .map(|&v| big(v))
        .collect();
        assert_eq!(report.deltas, want);
        assert!(report.n_divides);
        assert_eq!(report.sign, SignVerdict::Constant { sign: 1 });
        assert_eq!(report.abs_identity, Some(true));
        assert_eq!(report.div12_from, Some(3));
    }

    #[test]
    fn torsion_scan_finds_and_rules_out_zeros() {
        assert_eq!(torsion_zero(&poly(&[1, -3, 1])).unwrap(), None);
        assert_eq!(torsion_zero(&poly(&[-2, 0, 1])).unwrap(), Some(2));
        // Φ6: the ratio of the two primitive sixth roots has order 3.
        assert_eq!(torsion_zero(&poly(&[1, -1, 1])).unwrap(), Some(3));
        // Repeated root: zero at n = 1.
        assert_eq!(torsion_zero(&poly(&[1, 2, 1])).unwrap(), Some(1));
        assert_eq!(torsion_zero(&poly(&[-5, 1])).unwrap(), None);
    }

    #[test]
    fn torsion_beyond_range_is_still_reported() {
        let report = small_delta(&poly(&[1, -1, 1]), 2).unwrap();
        assert_eq!(report.sign, SignVerdict::Inapplicable { zero_at: 3 });
        assert_eq!(report.abs_identity, None);
    }

    #[test]
    fn essential_factors_and_square_witnesses() {
        let seq = delta_seq(&poly(&[1, -3, 1]), 6).unwrap();
        let ess = essential_factors(&seq).unwrap();
        let want: Vec<BigInt> = [5i64, 9, 64, 49, 3025, 36].iter().map(|&v| big(v)).collect();
        assert_eq!(ess.psi, want);
        let roots: Vec<Option<BigInt>> = vec![
            None,
            Some(big(3)),
            Some(big(8)),
            Some(big(7)),
            Some(big(55)),
            Some(big(6)),
        ];
        assert_eq!(ess.square_witness, roots);

        let quartic = delta_seq(&poly(&[1, 1, -1, 1, 1]), 5).unwrap();
        let ess = essential_factors(&quartic).unwrap();
        let want: Vec<BigInt> = [-507i64, 9, 9, 81, 65536].iter().map(|&v| big(v)).collect();
        assert_eq!(ess.psi, want);
        assert_eq!(ess.square_witness[4], Some(big(256)));
    }

    #[test]
    fn essential_factors_degenerate_after_torsion() {
        let seq = delta_seq(&poly(&[-2, 0, 1]), 3).unwrap();
        let ess = essential_factors(&seq).unwrap();
        assert_eq!(ess.psi, vec![big(8), big(0), big(4)]);
        assert_eq!(ess.square_witness[1], Some(BigInt::zero()));

        let seq = delta_seq(&poly(&[-2, 0, 1]), 4).unwrap();
        let err = essential_factors(&seq).unwrap_err();
        assert!(err.to_string().contains("psi_2"), "{err}");
    }

    #[test]
    fn characteristic_primes_of_the_paper_examples() {
        // x^4+x^3-x^2+x+1: Δ(P_5) = -2^16·3·13^2 with characteristic prime 2.
        let report = characteristic_primes(&poly(&[1, 1, -1, 1, 1]), 5).unwrap();
        assert!(!report.degenerate);
        assert_eq!(report.primes.len(), 1);
        let cp = &report.primes[0];
        assert_eq!(cp.prime, big(2));
        assert_eq!(cp.exponent, 16);
        assert!(cp.residue_ok && cp.divides_psi && report.pass);

        // x^3-x-1: Δ(P_7) = -2^6·23 with characteristic prime 2, 2^6 ≡ 1 mod 7.
        let report = characteristic_primes(&poly(&[-1, -1, 0, 1]), 7).unwrap();
        assert_eq!(report.primes.len(), 1);
        assert_eq!(report.primes[0].prime, big(2));
        assert_eq!(report.primes[0].exponent, 6);
        assert!(report.pass);

        assert!(characteristic_primes(&poly(&[1, -3, 1]), 1).unwrap().degenerate);
    }

    #[test]
    fn pk_identity_and_monotonicity() {
        let report = delta_pk_monotonicity(&poly(&[1, -3, 1]), 2, 1, 3).unwrap();
        assert_eq!(report.sign, SignVerdict::Constant { sign: 1 });
        assert_eq!(report.records.len(), 2); // n = 1 and n = 3
        assert_eq!(report.records[0].lhs, big(40));
        assert_eq!(report.records[0].rhs, big(40));
        assert_eq!(report.records[1].lhs, big(103320));
        assert_eq!(report.records[1].rhs, big(103320));
        assert!(report.pass);
    }

    #[test]
    fn lehmer_delta_matches_the_resultant_values() {
        let ld = lehmer_delta(&poly(&[1, -3, 1]), 8).unwrap();
        let want: Vec<BigInt> = [-1i64, -5, -16, -45, -121, -320, -841, -2205]
            .iter()
            .map(|&v| big(v))
            .collect();
        assert_eq!(ld.values, want);
        assert!(ld.max_nth_root > 1.0);
    }

    #[test]
    fn b_sequence_squares_the_discriminant_ratio() {
        assert_eq!(
            b_seq_quadratic(&poly(&[1, -3, 1]), 5).unwrap(),
            vec![big(1), big(3), big(8), big(21), big(55)]
        );
        assert_eq!(
            b_seq_quadratic(&poly(&[-2, 0, 1]), 6).unwrap(),
            vec![big(1), big(0), big(2), big(0), big(4), big(0)]
        );
        assert!(b_seq_quadratic(&poly(&[1, 2, 1]), 3).is_err());
    }
}
