//! Power maps P ↦ P_n: the monic integer polynomial whose roots are the n-th
//! powers of the roots of P, with multiplicity.
//!
//! Construction runs through Newton's identities over ℤ: the power sums
//! p_k = Σ α_j^k of an algebraic-integer multiset are rational integers, the
//! recurrence from elementary symmetric functions to power sums is
//! division-free, and the inverse direction divides by k, which is exact
//! because the answer is again a polynomial in ℤ[x]. An independent oracle,
//! Res_y(P(y), x - y^n), is kept alongside for tests: it is slower but shares
//! no code with the Newton path.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polycore::poly::IntPoly;

/// Power sums p_1, ..., p_count of the roots of monic P, by Newton's
/// identities. p_0 = deg P is not included.
pub fn power_sums(p: &IntPoly, count: usize) -> Result<Vec<BigInt>> {
    p.require_monic("power_sums")?;
    let d = p.deg();
    // e_i = (-1)^i a_{d-i}, the elementary symmetric functions.
    let e: Vec<BigInt> = (1..=d)
        .map(|i| {
            let c = p.coeff(d - i);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut ps: Vec<BigInt> = Vec::with_capacity(count + 1);
    ps.push(BigInt::from(d)); // p_0, used by the recurrence offsets
    for k in 1..=count {
        // p_k = Σ_{i=1}^{min(k-1,d)} (-1)^{i-1} e_i p_{k-i}  [+ (-1)^{k-1} k e_k if k <= d]
        let mut acc = BigInt::zero();
        for i in 1..=k.saturating_sub(1).min(d) {
            let term = &e[i - 1] * &ps[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if k <= d {
            let term = BigInt::from(k) * &e[k - 1];
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        ps.push(acc);
    }
    ps.remove(0);
    Ok(ps)
}

/// Monic degree-d polynomial with prescribed power sums q[0] = p_1, ...,
/// q[d-1] = p_d. Errors if the inverse Newton divisions do not come out
/// integral, which cannot happen for power sums of algebraic integers.
pub fn from_power_sums(d: usize, q: &[BigInt]) -> Result<IntPoly> {
    if q.len() < d {
        return Err(Error::Domain(format!(
            "need {d} power sums, got {}",
            q.len()
        )));
    }
    if d == 0 {
        return Ok(IntPoly::one());
    }
    let mut e: Vec<BigInt> = Vec::with_capacity(d);
    for k in 1..=d {
        // k e_k = (-1)^{k-1} p_k + Σ_{i=1}^{k-1} (-1)^{k-1+i} e_i p_{k-i}
        // rearranged from the same identity as in power_sums.
        let mut acc = q[k - 1].clone();
        for i in 1..k {
            let term = &e[i - 1] * &q[k - i - 1];
            if i % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if k % 2 == 0 {
            acc = -acc;
        }
        let kk = BigInt::from(k);
        let (quot, rem) = num_integer::Integer::div_rem(&acc, &kk);
        if !rem.is_zero() {
            return Err(Error::Integrity(format!(
                "inverse Newton division by {k} not exact"
            )));
        }
        e.push(quot);
    }
    // a_{d-k} = (-1)^k e_k, a_d = 1.
    let mut coeffs = vec![BigInt::zero(); d + 1];
    coeffs[d] = BigInt::one();
    for k in 1..=d {
        coeffs[d - k] = if k % 2 == 1 { -e[k - 1].clone() } else { e[k - 1].clone() };
    }
    Ok(IntPoly::new(coeffs))
}

/// P_n: monic with roots α_j^n. Degree is preserved; P_1 = P.
pub fn power_map(p: &IntPoly, n: u64) -> Result<IntPoly> {
    p.require_monic("power_map")?;
    if n == 0 {
        return Err(Error::Domain("power_map needs n >= 1".into()));
    }
    let d = p.deg();
    if d == 0 {
        return Ok(IntPoly::one());
    }
    if n == 1 {
        return Ok(p.clone());
    }
    let nd = (n as usize)
        .checked_mul(d)
        .ok_or_else(|| Error::Resource("power_map exponent overflow".into()))?;
    let ps = power_sums(p, nd)?;
    let q: Vec<BigInt> = (1..=d).map(|k| ps[k * n as usize - 1].clone()).collect();
    from_power_sums(d, &q)
}

/// Power sums of P_n for n = 1..=nmax, all read off one Newton table.
/// Row n-1 holds p_n·1, p_n·2, ..., p_n·d of P (i.e. the first d power sums
/// of P_n), enough to reconstruct each P_n.
pub fn power_sum_table(p: &IntPoly, nmax: u64) -> Result<Vec<Vec<BigInt>>> {
    p.require_monic("power_sum_table")?;
    let d = p.deg();
    if d == 0 {
        return Ok(vec![Vec::new(); nmax as usize]);
    }
    let total = (nmax as usize)
        .checked_mul(d)
        .ok_or_else(|| Error::Resource("power sum table too large".into()))?;
    let ps = power_sums(p, total)?;
    Ok((1..=nmax as usize)
        .map(|n| (1..=d).map(|k| ps[k * n - 1].clone()).collect())
        .collect())
}

/// Oracle: P_n as Res_y(P(y), x - y^n), a determinant over ℤ[x] evaluated by
/// Bareiss elimination with polynomial entries. Independent of the Newton
/// path; for tests.
pub fn power_map_resultant_oracle(p: &IntPoly, n: u64) -> Result<IntPoly> {
    p.require_monic("power_map_resultant_oracle")?;
    if n == 0 {
        return Err(Error::Domain("power_map needs n >= 1".into()));
    }
    let d = p.deg();
    if d == 0 {
        return Ok(IntPoly::one());
    }
    let n = n as usize;
    // Sylvester matrix of A(y) = P(y) (degree d) and B(y) = x - y^n
    // (degree n in y), entries in ℤ[x]. Res_y = ∏_j (x - α_j^n) up to sign:
    // lc_y(B) = -1, so Res = (-1)^d ∏ B(α_j) = (-1)^d ∏ (x - α_j^n)·... sign
    // handled below by normalizing the leading coefficient.
    let size = d + n;
    let zero = IntPoly::zero();
    let mut m = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for k in 0..=d {
            m[row][row + k] = IntPoly::constant(p.coeff(d - k));
        }
    }
    for row in 0..d {
        // B(y) = -y^n + x, descending in y: [-1, 0, ..., 0, x].
        m[n + row][row] = IntPoly::constant(BigInt::from(-1));
        m[n + row][row + n] = IntPoly::new(vec![BigInt::zero(), BigInt::one()]);
    }
    let det = bareiss_poly_determinant(&mut m);
    // The resultant is ± ∏ (x - α_j^n); normalize to monic.
    let out = if det.lc().is_negative() { -&det } else { det };
    if !out.is_monic() || out.deg() != d {
        return Err(Error::Integrity("power map oracle lost monicity".into()));
    }
    Ok(out)
}

/// Bareiss elimination over ℤ[x]: same one-step fraction-free scheme as the
/// integer version, with exact polynomial division by the previous pivot.
fn bareiss_poly_determinant(m: &mut [Vec<IntPoly>]) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign = 1i8;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .divide_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn power_sums_golden_ratio() {
        // x² - x - 1: p_k are the Lucas numbers 1, 3, 4, 7, 11, 18.
        let f = p(&[-1, -1, 1]);
        let ps = power_sums(&f, 6).unwrap();
        let lucas: Vec<BigInt> = [1i64, 3, 4, 7, 11, 18].iter().map(|&v| v.into()).collect();
        assert_eq!(ps, lucas);
    }

    #[test]
    fn newton_roundtrip() {
        let f = p(&[3, -2, 0, 5, 1]);
        let ps = power_sums(&f, 4).unwrap();
        assert_eq!(from_power_sums(4, &ps).unwrap(), f);
    }

    #[test]
    fn square_map_of_quadratic() {
        // Roots φ, ψ of x² - 3x + 1 square to roots of x² - 7x + 1.
        let f = p(&[1, -3, 1]);
        assert_eq!(power_map(&f, 2).unwrap(), p(&[1, -7, 1]));
        // And n = 1 is the identity.
        assert_eq!(power_map(&f, 1).unwrap(), f);
    }

    #[test]
    fn power_map_matches_oracle() {
        let polys = [
            p(&[-1, -1, 1]),
            p(&[1, -3, 1]),
            p(&[-1, -1, 0, 1]),
            p(&[2, 0, -1, 1]),
            p(&[1, 1, -1, 1, 1]),
        ];
        for f in &polys {
            for n in 1..=5u64 {
                let fast = power_map(f, n).unwrap();
                let slow = power_map_resultant_oracle(f, n).unwrap();
                assert_eq!(fast, slow, "power map mismatch for {f}, n = {n}");
            }
        }
    }

    #[test]
    fn power_map_of_cyclotomic_collapses() {
        // Roots of x² + x + 1 are primitive cube roots of unity; cubes are 1.
        let f = p(&[1, 1, 1]);
        assert_eq!(power_map(&f, 3).unwrap(), p(&[1, -2, 1]));
    }

    #[test]
    fn table_rows_match_direct() {
        let f = p(&[-1, -1, 0, 1]);
        let table = power_sum_table(&f, 6).unwrap();
        for n in 1..=6u64 {
            let pn = power_map(&f, n).unwrap();
            let direct = power_sums(&pn, 3).unwrap();
            assert_eq!(table[(n - 1) as usize], direct, "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(power_map(&p(&[1, 2]), 2).is_err()); // not monic
        assert!(power_map(&p(&[-1, -1, 1]), 0).is_err());
    }
}
