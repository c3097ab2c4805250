//! Resultants and discriminants over ℤ, three ways.
//!
//! The workhorse is the subresultant PRS (Cohen's algorithm 3.3.7), which is
//! fraction-free and fast at small degree. A Bareiss fraction-free
//! elimination of the Sylvester matrix serves as an independent oracle, and a
//! CRT-modular path (Euclidean resultants mod many 62-bit primes, recombined
//! under a Hadamard bound) takes over when degrees or coefficient sizes make
//! the PRS intermediate swell dominate. [`resultant`] dispatches; every
//! theorem downstream is an exact divisibility claim, so no floating point
//! anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::modp::{reduce_mod_p, resultant_mod_p};
use crate::polycore::numth::{crt_centered, log2_bigint, modular_primes};
use crate::polycore::poly::IntPoly;

/// Res(A, B) with the convention Res = lc(A)^{deg B} lc(B)^{deg A} ∏(α_i-β_j);
/// for monic A, B this is ∏(α_i - β_j). Zero input is a domain error.
pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Domain("resultant of the zero polynomial".into()));
    }
    let (da, db) = (a.deg(), b.deg());
    if da == 0 {
        return Ok(a.lc().pow(db as u32));
    }
    if db == 0 {
        return Ok(b.lc().pow(da as u32));
    }
    // Crossover: the PRS wins while the Sylvester matrix is small and the
    // entries short; the modular path wins once intermediate growth kicks in.
    let bits = db as f64 * log2_bigint(&(a.height() + 1)) + da as f64 * log2_bigint(&(b.height() + 1));
    if da.min(db) >= 2 && (da * db > 64 || bits > 1024.0) {
        Ok(resultant_modular(a, b))
    } else {
        Ok(resultant_subresultant(a, b))
    }
}

/// Discriminant of a monic polynomial: ∏_{j<k}(α_j-α_k)², equal to
/// (-1)^{d(d-1)/2} Res(P, P') for monic P. Degree 1 gives the empty product.
pub fn discriminant(p: &IntPoly) -> Result<BigInt> {
    p.require_monic("discriminant")?;
    let d = p.deg();
    if d == 0 {
        return Err(Error::Domain("discriminant needs degree >= 1".into()));
    }
    if d == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(p, &p.derivative())?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -r } else { r })
}

// ---- Subresultant PRS (Cohen 3.3.7) ----

pub fn resultant_subresultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let mut s = 1i8;
    let (mut a, mut b) = (a.clone(), b.clone());
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        let r = b.lc().pow(a.deg() as u32);
        return if s < 0 { -r } else { r };
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.deg(), b.deg());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        // Divide by g·h^delta, exactly (subresultant theory).
        let divisor = &g * h.pow(delta as u32);
        b = match r.divide_exact(&IntPoly::constant(divisor)) {
            Some(q) => q,
            None => unreachable!("subresultant division is exact"),
        };
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            num.div_rem(&den).0
        };
        if b.is_zero() {
            return BigInt::zero();
        }
        if b.deg() == 0 {
            break;
        }
    }
    let da = a.deg();
    let num = b.lc().pow(da as u32);
    let den = h.pow(da as u32 - 1);
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    if s < 0 {
        -q
    } else {
        q
    }
}

// ---- Bareiss fraction-free Sylvester determinant (oracle) ----

/// Res(A, B) as the determinant of the Sylvester matrix, computed by Bareiss
/// one-step fraction-free elimination with row pivoting. O((dA+dB)³) exact
/// integer ops; used to cross-validate the other two paths.
pub fn resultant_sylvester(a: &IntPoly, b: &IntPoly) -> BigInt {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let (da, db) = (a.deg(), b.deg());
    if da == 0 {
        return a.lc().pow(db as u32);
    }
    if db == 0 {
        return b.lc().pow(da as u32);
    }
    let n = da + db;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for row in 0..db {
        for k in 0..=da {
            m[row][row + k] = a.coeff(da - k);
        }
    }
    for row in 0..da {
        for k in 0..=db {
            m[db + row][row + k] = b.coeff(db - k);
        }
    }
    bareiss_determinant(&mut m)
}

/// In-place Bareiss elimination; consumes the matrix.
pub fn bareiss_determinant(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

// ---- CRT-modular path ----

/// Res(A, B) by Euclidean resultants modulo enough 62-bit primes to clear a
/// Hadamard bound on the Sylvester determinant, recombined by centered CRT.
/// Primes dividing either leading coefficient are skipped (degree drop).
pub fn resultant_modular(a: &IntPoly, b: &IntPoly) -> BigInt {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let (da, db) = (a.deg(), b.deg());
    // |Res|² <= (Σ a_i²)^{db} (Σ b_i²)^{da}; count 61-bit primes to exceed
    // twice the bound.
    let norm2 = |p: &IntPoly| -> BigInt {
        p.coeffs().iter().map(|c| c * c).sum::<BigInt>()
    };
    let bound_bits = db as f64 * log2_bigint(&norm2(a)) / 2.0
        + da as f64 * log2_bigint(&norm2(b)) / 2.0;
    let want = (bound_bits / 61.0).ceil() as usize + 1;
    let (la, lb) = (a.lc(), b.lc());
    let mut residues = Vec::with_capacity(want);
    let mut moduli = Vec::with_capacity(want);
    let mut offset = 0usize;
    while residues.len() < want {
        let supply = modular_primes(offset + want - residues.len());
        for &p in &supply[offset..] {
            offset += 1;
            let pb = BigInt::from(p);
            if (&la % &pb).is_zero() || (&lb % &pb).is_zero() {
                continue;
            }
            let ra = reduce_mod_p(a, p);
            let rb = reduce_mod_p(b, p);
            residues.push(resultant_mod_p(&ra, &rb, p));
            moduli.push(p);
        }
    }
    crt_centered(&residues, &moduli)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn frozen_small_values() {
        // Single factor (2-3).
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])).unwrap(), BigInt::from(-1));
        // Sylvester determinant expanded by hand.
        assert_eq!(resultant(&p(&[1, -3, 1]), &p(&[1, -7, 1])).unwrap(), BigInt::from(16));
        // Shared roots.
        assert_eq!(resultant(&p(&[1, -3, 1]), &p(&[1, -3, 1])).unwrap(), BigInt::zero());
    }

    #[test]
    fn three_paths_agree() {
        let cases = [
            (p(&[1, -3, 1]), p(&[1, -7, 1])),
            (p(&[2, 0, -5, 1]), p(&[-1, 4, 1])),
            (p(&[1, 1, 1, 1, 1]), p(&[-3, 0, 0, 2])),
            (p(&[7, -2]), p(&[5, 3, -1, 11])),
            (p(&[4, 0, 1]), p(&[0, 1])),
        ];
        for (a, b) in &cases {
            let prs = resultant_subresultant(a, b);
            let syl = resultant_sylvester(a, b);
            let modular = resultant_modular(a, b);
            assert_eq!(prs, syl, "PRS vs Sylvester on ({a}, {b})");
            assert_eq!(prs, modular, "PRS vs modular on ({a}, {b})");
        }
    }

    #[test]
    fn swap_sign_convention() {
        // Res(A,B) = (-1)^{deg A deg B} Res(B,A).
        let cases = [
            (p(&[1, -3, 1]), p(&[-2, 0, 0, 1])), // 2·3 even: symmetric
            (p(&[7, -2, 0, 1]), p(&[-5, 1])),    // 3·1 odd: antisymmetric
        ];
        for (a, b) in &cases {
            let ab = resultant(a, b).unwrap();
            let ba = resultant(b, a).unwrap();
            if (a.deg() * b.deg()) % 2 == 1 {
                assert_eq!(ab, -ba);
            } else {
                assert_eq!(ab, ba);
            }
            assert!(!ab.is_zero());
        }
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&p(&[1, -3, 1])).unwrap(), BigInt::from(5));
        assert_eq!(discriminant(&p(&[-1, -1, 0, 1])).unwrap(), BigInt::from(-23));
        assert_eq!(discriminant(&p(&[1, 1, -1, 1, 1])).unwrap(), BigInt::from(-507));
        assert_eq!(discriminant(&p(&[-1, 1])).unwrap(), BigInt::one());
        assert!(discriminant(&p(&[1, -3, 2])).is_err());
        assert!(discriminant(&IntPoly::zero()).is_err());
    }

    #[test]
    fn resultant_of_linear_is_evaluation() {
        // Res(P, x - c) = P(c) for monic x - c in the second slot.
        let q = p(&[3, -1, 0, 2, 1]);
        for c in [-3i64, -1, 0, 1, 2, 5] {
            let lin = IntPoly::linear_root(c);
            let r = resultant(&q, &lin).unwrap();
            // Res(P, x-c) = lc(P)^1 · ∏(α_i - c) = (-1)^{deg P} P(c) for the
            // convention ∏(α_i - β_j); with monic P and root c:
            // ∏(α_i - c) = (-1)^d ∏(c - α_i) = (-1)^d P(c).
            let expect = if q.deg() % 2 == 1 { -q.eval(&BigInt::from(c)) } else { q.eval(&BigInt::from(c)) };
            assert_eq!(r, expect);
        }
    }

    #[test]
    fn zero_inputs_rejected() {
        assert!(resultant(&IntPoly::zero(), &p(&[1, 1])).is_err());
        assert!(resultant(&p(&[1, 1]), &IntPoly::zero()).is_err());
    }
}
