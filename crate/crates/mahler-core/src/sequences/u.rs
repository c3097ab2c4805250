//! The resultant sequence U(n) and its divisibility and growth properties.
//!
//! For n with l distinct prime factors split the divisors of n by the Möbius
//! value of the cofactor, 𝒟₊ = {m | n : μ(n/m) = 1} and 𝒟₋ likewise with -1;
//! both halves have r = 2^{l-1} elements. Then
//!
//!   U(n) = Res(P_𝒟₊, P_𝒟₋),
//!
//! an integer built from two multiset polynomials of degree d^r. It packages
//! the cyclotomic-like structure of the Δ(P_n) sequence: n^{d^r} always
//! divides U(n), the constant coefficient contributes a certified power of
//! a₀, the size is controlled by the Mahler measure, and orders in residue
//! rings predict which small primes divide which U(n).

use crate::error::{Error, Result};
use crate::polycore::compose::{multiset_poly, Multiset};
use crate::polycore::factorize::{factorize, Factorization};
use crate::polycore::numth::{divisor_table, euler_phi, is_prime_u64, DivisorTable};
use crate::polycore::resultant::resultant;
use crate::polycore::IntPoly;
use crate::roots_mahler::ball::Dy;
use crate::roots_mahler::measure::mahler_measure;
use crate::sequences::orders::order_in_quotient;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Largest multiset-polynomial degree d^r the U(n) routines accept by
/// default. Resultants of two degree-64 polynomials with power-map
/// coefficients stay comfortably in memory; past that the caller must opt
/// in explicitly.
pub const DEFAULT_DEGREE_CAP: u64 = 64;

fn u_setup(p: &IntPoly, n: u64, cap: u64) -> Result<(DivisorTable, u64)> {
    p.require_monic("u_of_n")?;
    if p.deg() < 1 {
        return Err(Error::Domain("U(n) needs degree >= 1".into()));
    }
    if n < 2 {
        return Err(Error::Domain("U(n) is defined for n >= 2".into()));
    }
    let table = divisor_table(n);
    let r = 1u64 << (table.num_primes - 1);
    let d = p.deg() as u64;
    let dr = r
        .try_into()
        .ok()
        .and_then(|r32| d.checked_pow(r32))
        .filter(|&dr| dr <= cap)
        .ok_or_else(|| {
            Error::Resource(format!(
                "U({n}) works at degree d^r = {d}^{r}, above the cap {cap}"
            ))
        })?;
    Ok((table, dr))
}

/// U(n) with the default degree cap.
pub fn u_of_n(p: &IntPoly, n: u64) -> Result<BigInt> {
    u_of_n_capped(p, n, DEFAULT_DEGREE_CAP)
}

/// U(n) = Res(P_𝒟₊, P_𝒟₋), exact.
pub fn u_of_n_capped(p: &IntPoly, n: u64, cap: u64) -> Result<BigInt> {
    let (table, _) = u_setup(p, n, cap)?;
    let plus = multiset_poly(p, &Multiset::new(table.d_plus.clone())?)?;
    let minus = multiset_poly(p, &Multiset::new(table.d_minus.clone())?)?;
    resultant(&plus, &minus)
}

/// The unconditional n^{d^r} | U(n), plus m^{d^r} | U(n) for the proper
/// divisors m of n that are coprime to the constant coefficient.
#[derive(Debug, Clone)]
pub struct UDivisibility {
    pub n: u64,
    pub u: BigInt,
    /// d^r, the exponent in every modulus below.
    pub exponent: u64,
    pub main_ok: bool,
    /// (m, m^{d^r} | U(n)) for 2 <= m < n, m | n, gcd(m, a₀) = 1.
    pub divisor_checks: Vec<(u64, bool)>,
    pub factorization: Factorization,
    pub pass: bool,
}

pub fn u_divisibility_check(p: &IntPoly, n: u64) -> Result<UDivisibility> {
    let (table, dr) = u_setup(p, n, DEFAULT_DEGREE_CAP)?;
    let u = u_of_n(p, n)?;
    let e = u32::try_from(dr).expect("capped at 64");
    let main_ok = (&u % BigInt::from(n).pow(e)).is_zero();
    let a0 = p.coeff(0);
    let mut divisor_checks = Vec::new();
    for &(m, _) in &table.entries {
        if m >= 2 && m < n && BigInt::from(m).gcd(&a0).is_one() {
            let ok = (&u % BigInt::from(m).pow(e)).is_zero();
            divisor_checks.push((m, ok));
        }
    }
    let pass = main_ok && divisor_checks.iter().all(|&(_, ok)| ok);
    let factorization = factorize(&u);
    Ok(UDivisibility { n, u, exponent: dr, main_ok, divisor_checks, factorization, pass })
}

/// a₀^{n'·4^{l-1}·d^{2^l - 2}} | U(n), where n' = n / rad(n).
#[derive(Debug, Clone)]
pub struct A0PowerDivisibility {
    pub n: u64,
    pub u: BigInt,
    /// The certified exponent; `None` when the claim is trivial.
    pub exponent: Option<u64>,
    /// a₀ ∈ {-1, 0, 1}, where any power statement is vacuous.
    pub trivial: bool,
    pub holds: bool,
}

pub fn a0_power_divisibility(p: &IntPoly, n: u64) -> Result<A0PowerDivisibility> {
    let (table, _) = u_setup(p, n, DEFAULT_DEGREE_CAP)?;
    let u = u_of_n(p, n)?;
    let a0 = p.coeff(0);
    if a0.is_zero() {
        // x divides P, so zero is a root of both halves and U(n) = 0.
        let holds = u.is_zero();
        return Ok(A0PowerDivisibility { n, u, exponent: None, trivial: true, holds });
    }
    if a0.abs().is_one() {
        return Ok(A0PowerDivisibility { n, u, exponent: None, trivial: true, holds: true });
    }
    let l = table.num_primes;
    let d = p.deg() as u64;
    let radical: u64 = crate::polycore::numth::factorize_u64(n).iter().map(|&(q, _)| q).product();
    let exponent = (n / radical)
        .checked_mul(1u64 << (2 * (l - 1)))
        .and_then(|x| (1u32 << l).checked_sub(2).and_then(|e2| d.checked_pow(e2)).and_then(|dp| x.checked_mul(dp)))
        .filter(|&e| e <= 1 << 20)
        .ok_or_else(|| Error::Resource(format!("a0-power exponent at n = {n} exceeds the certification budget")))?;
    let holds = (&u % a0.pow(exponent as u32)).is_zero();
    Ok(A0PowerDivisibility { n, u, exponent: Some(exponent), trivial: false, holds })
}

/// |U(n)| <= 2^A · M(P)^B with A = d^{2^l} and B = A·Σ_{m ∈ 𝒟₊} m, decided
/// against a certified Mahler-measure enclosure.
#[derive(Debug, Clone)]
pub struct UUpperBound {
    pub n: u64,
    /// Bit length of |U(n)|.
    pub u_bits: u64,
    /// log2 of the certified upper bound for the right-hand side.
    pub log2_bound: f64,
    pub holds: bool,
}

pub fn u_upper_bound_check(p: &IntPoly, n: u64) -> Result<UUpperBound> {
    let (table, dr) = u_setup(p, n, DEFAULT_DEGREE_CAP)?;
    let u = u_of_n(p, n)?;
    let a = dr
        .checked_mul(dr)
        .ok_or_else(|| Error::Resource("2^A overflows".into()))?;
    let sum_plus: u64 = table.d_plus.iter().sum();
    let b = a
        .checked_mul(sum_plus)
        .filter(|&b| b <= 1 << 30)
        .ok_or_else(|| Error::Resource(format!("bound exponent at n = {n} exceeds the budget")))?;
    let ua = Dy::from_bigint(&u.abs());
    let mut eps = 1e-6;
    for _ in 0..5 {
        let meas = mahler_measure(p, eps)?;
        let rhs_lo = meas.lo().max(&Dy::one()).pow_down(b, 128).mul_pow2(a as i64);
        let rhs_up = meas.up().pow_up(b, 128).mul_pow2(a as i64);
        let log2_bound = a as f64 + b as f64 * meas.log2_up();
        if ua.cmp(&rhs_lo) != std::cmp::Ordering::Greater {
            return Ok(UUpperBound { n, u_bits: u.bits(), log2_bound, holds: true });
        }
        if ua.cmp(&rhs_up) == std::cmp::Ordering::Greater {
            return Ok(UUpperBound { n, u_bits: u.bits(), log2_bound, holds: false });
        }
        eps *= 1e-24;
    }
    Err(Error::Resource(format!(
        "|U({n})| sits inside the enclosure of its own bound at every tried precision"
    )))
}

/// One small-prime divisibility claim: `ok` is the implication
/// predicted => divides, and `note` records why a claim is inapplicable.
#[derive(Debug, Clone)]
pub struct USmallPrimeClaim {
    pub predicted: bool,
    pub divides: bool,
    pub ok: bool,
    pub note: Option<String>,
}

impl USmallPrimeClaim {
    fn inapplicable(note: String) -> USmallPrimeClaim {
        USmallPrimeClaim { predicted: false, divides: false, ok: true, note: Some(note) }
    }

    fn new(predicted: bool, divides: bool) -> USmallPrimeClaim {
        USmallPrimeClaim { predicted, divides, ok: !predicted || divides, note: None }
    }
}

/// Small-prime divisibility of U(n) from orders in ℤ[x]/(k, P).
#[derive(Debug, Clone)]
pub struct USmallPrimeReport {
    pub n: u64,
    pub k: u64,
    pub u: BigInt,
    pub phi: u64,
    /// ord(x) | φ(n) forces k^d | U(n); sound because x ↦ α_j is a ring map
    /// into R/kR for every j, so the d diagonal factors of U(n) all land in
    /// kR.
    pub phi_multiple: USmallPrimeClaim,
    /// For k prime with P squarefree mod k: one factor order dividing φ(n)
    /// forces k | U(n), one prime of R above k being enough.
    pub single_root: USmallPrimeClaim,
    /// For |a₀| = 1: P(1) | U(n) always, and U(n) = 0 when P(1) = 0.
    pub p1_divides: USmallPrimeClaim,
    pub pass: bool,
}

pub fn u_small_prime_divisibility(p: &IntPoly, k: u64, n: u64) -> Result<USmallPrimeReport> {
    let u = u_of_n(p, n)?;
    let phi = euler_phi(n);
    let phi_big = BigUint::from(phi);
    let d = p.deg() as u32;

    let (phi_multiple, single_root);
    match order_in_quotient(p, k) {
        Ok(q) => {
            let predicted = (&phi_big % &q.order).is_zero();
            let divides = (&u % BigInt::from(k).pow(d)).is_zero();
            phi_multiple = USmallPrimeClaim::new(predicted, divides);
            if is_prime_u64(k) {
                let predicted = q.components[0]
                    .factor_orders
                    .iter()
                    .any(|o| (&phi_big % o).is_zero());
                let divides = (&u % BigInt::from(k)).is_zero();
                single_root = USmallPrimeClaim::new(predicted, divides);
            } else {
                single_root =
                    USmallPrimeClaim::inapplicable(format!("{k} is not prime"));
            }
        }
        Err(Error::Domain(msg)) => {
            phi_multiple = USmallPrimeClaim::inapplicable(msg.clone());
            single_root = USmallPrimeClaim::inapplicable(msg);
        }
        Err(e) => return Err(e),
    }

    let a0 = p.coeff(0);
    let p1_divides = if !a0.abs().is_one() {
        USmallPrimeClaim::inapplicable("needs |a0| = 1".into())
    } else {
        let p1 = p.eval(&BigInt::one());
        if p1.is_zero() {
            USmallPrimeClaim::new(true, u.is_zero())
        } else {
            USmallPrimeClaim::new(true, (&u % &p1).is_zero())
        }
    };

    let pass = phi_multiple.ok && single_root.ok && p1_divides.ok;
    Ok(USmallPrimeReport { n, k, u, phi, phi_multiple, single_root, p1_divides, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn u_values_for_the_golden_quadratic() {
        let p = poly(&[1, -3, 1]);
        let want: &[(u64, i64)] = &[
            (2, 16),
            (3, 225),
            (4, 1600),
            (5, 14400),
            (6, 0),
            (7, 705600),
            (12, 0),
            (13, 73679673600),
        ];
        for &(n, v) in want {
            assert_eq!(u_of_n(&p, n).unwrap(), big(v), "U({n})");
        }
        assert_eq!(
            u_of_n(&p, 10).unwrap(),
            "1902164692577431222550937600000000".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn u_rejects_bad_input() {
        let p = poly(&[1, -3, 1]);
        assert!(matches!(u_of_n(&p, 1), Err(Error::Domain(_))));
        // 210 has four prime factors, so d^r = 2^8 > 64.
        assert!(matches!(u_of_n(&p, 210), Err(Error::Resource(_))));
        assert!(matches!(u_of_n(&poly(&[1, -3, 2]), 4), Err(Error::Domain(_))));
    }

    #[test]
    fn main_divisibility_for_the_golden_quadratic() {
        let p = poly(&[1, -3, 1]);
        for n in [2u64, 3, 4, 5, 6, 7, 10, 12, 13] {
            let rep = u_divisibility_check(&p, n).unwrap();
            assert!(rep.pass, "n = {n}");
            let dr = if divisor_table(n).num_primes == 1 { 2 } else { 4 };
            assert_eq!(rep.exponent, dr, "n = {n}");
        }
        // n = 10 checks both proper divisors 2 and 5 at exponent 4.
        let rep = u_divisibility_check(&p, 10).unwrap();
        assert_eq!(rep.divisor_checks, vec![(2, true), (5, true)]);
    }

    #[test]
    fn divisor_checks_skip_noncoprime_divisors() {
        // a0 = 3: the divisor 3 of 6 is not coprime to a0 and is skipped.
        let p = poly(&[3, -5, 1]);
        let rep = u_divisibility_check(&p, 6).unwrap();
        assert_eq!(rep.divisor_checks.iter().map(|&(m, _)| m).collect::<Vec<_>>(), vec![2]);
        assert!(rep.pass);
    }

    #[test]
    fn a0_power_for_nontrivial_constant() {
        let p = poly(&[3, -5, 1]);
        let rep = a0_power_divisibility(&p, 4).unwrap();
        assert_eq!(u_of_n(&p, 4).unwrap(), big(506736));
        assert_eq!(rep.exponent, Some(2));
        assert!(!rep.trivial && rep.holds);
        // n = 6: two prime factors, exponent n'·4·d^2 = 16, and U(6) < 0.
        let rep = a0_power_divisibility(&p, 6).unwrap();
        assert_eq!(rep.exponent, Some(16));
        assert!(rep.holds);
        assert!(rep.u.is_negative());

        let rep = a0_power_divisibility(&poly(&[-2, 0, 1]), 4).unwrap();
        assert_eq!(rep.exponent, Some(2));
        assert!(rep.holds);
        assert_eq!(rep.u, big(16));

        let rep = a0_power_divisibility(&poly(&[1, -3, 1]), 12).unwrap();
        assert!(rep.trivial && rep.holds);
    }

    #[test]
    fn cubic_prime_values_are_prime_cubes() {
        let p = poly(&[-1, -1, 0, 1]);
        for q in [2u64, 3, 5, 7] {
            assert_eq!(u_of_n(&p, q).unwrap(), BigInt::from(q).pow(3), "U({q})");
        }
    }

    #[test]
    fn seven_divides_u_p_on_the_mod_8_pattern() {
        let p = poly(&[1, -3, 1]);
        for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
            let u = u_of_n(&p, q).unwrap();
            let divisible = (&u % big(7)).is_zero();
            let want = q % 8 == 1 || q % 8 == 7;
            assert_eq!(divisible, want, "7 | U({q})");
        }
    }

    #[test]
    fn small_prime_claims_for_the_golden_quadratic() {
        let p = poly(&[1, -3, 1]);
        // ord(x) mod (7, P) = 8 divides φ(17) = 16, so 49 | U(17).
        let rep = u_small_prime_divisibility(&p, 7, 17).unwrap();
        assert_eq!(rep.u, big(162614524161600));
        assert!(rep.phi_multiple.predicted && rep.phi_multiple.divides);
        assert!(rep.single_root.predicted && rep.single_root.divides);
        assert!(rep.p1_divides.divides);
        assert!(rep.pass);
        // φ(5) = 4 is not a multiple of 8: nothing predicted, still pass.
        let rep = u_small_prime_divisibility(&p, 7, 5).unwrap();
        assert!(!rep.phi_multiple.predicted && rep.pass);
        // P(1) = -1 divides everything.
        assert!(rep.p1_divides.predicted && rep.p1_divides.divides);
    }

    #[test]
    fn small_prime_claims_handle_inapplicable_parts() {
        // a0 = 3: k = 3 makes x a non-unit, parts (i)/(ii) inapplicable,
        // and |a0| > 1 turns off part (iii).
        let p = poly(&[3, -5, 1]);
        let rep = u_small_prime_divisibility(&p, 3, 4).unwrap();
        assert!(rep.phi_multiple.note.is_some());
        assert!(rep.single_root.note.is_some());
        assert!(rep.p1_divides.note.is_some());
        assert!(rep.pass);
        // Composite k: part (ii) inapplicable, part (i) still decided.
        let p = poly(&[1, -3, 1]);
        let rep = u_small_prime_divisibility(&p, 4, 3).unwrap();
        assert!(rep.single_root.note.is_some());
        assert!(rep.phi_multiple.note.is_none());
        assert!(rep.pass);
    }

    #[test]
    fn p1_claim_on_a_quartic() {
        // P(1) = 3 divides U(2) = 1296.
        let p = poly(&[1, 1, -1, 1, 1]);
        let rep = u_small_prime_divisibility(&p, 5, 2).unwrap();
        assert_eq!(rep.u, big(1296));
        assert!(rep.p1_divides.predicted && rep.p1_divides.divides && rep.pass);
    }

    #[test]
    fn upper_bound_certifies() {
        let p = poly(&[1, -3, 1]);
        for n in [2u64, 5, 10] {
            let rep = u_upper_bound_check(&p, n).unwrap();
            assert!(rep.holds, "n = {n}");
            assert!(rep.log2_bound > rep.u_bits as f64 - 1.0, "n = {n}");
        }
    }
}
