//! Univariate polynomials over ℤ with arbitrary-precision coefficients.
//!
//! Coefficients are stored ascending (constant term first) with no trailing
//! zeros; the zero polynomial is the empty list and its degree is undefined
//! (`degree()` returns `None`). Operations documented as monic-only check
//! `is_monic()` and reject other input rather than adopting sign conventions
//! the thesis does not use.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

// ---- Construction and basic queries ----

impl IntPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial x^k.
    pub fn x_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// x - c, the degree-1 polynomial with root c.
    pub fn linear_root(c: i64) -> Self {
        IntPoly::new(vec![BigInt::from(-c), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient; zero polynomial has none.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Reject non-monic input with a uniform error message.
    pub fn require_monic(&self, op: &str) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::Domain(format!("{op} requires a monic polynomial")))
        }
    }

    /// Largest |coefficient| (the height); zero for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

// ---- Arithmetic ----

impl IntPoly {
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// x^d · P(1/x): the coefficient list reversed. P must be nonzero.
    pub fn reversal(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// True iff the coefficient list is a palindrome (a_j = a_{d-j}).
    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && *self == self.reversal()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Content: the gcd of all coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient; zero stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division over ℤ: returns the quotient when `d · q = self` has an
    /// integer polynomial solution, `None` otherwise.
    pub fn divide_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (ds, dd) = (self.deg(), d.deg());
        if ds < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ds - dd + 1];
        let dlc = d.lc();
        for k in (0..=ds - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&dlc);
            if !r.is_zero() {
                return None;
            }
            for j in 0..dd {
                rem[k + j] -= &q * &d.coeffs[j];
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Pseudo-remainder: the R in lc(d)^{deg s - deg d + 1} · s = q·d + R.
    /// Requires deg(self) ≥ deg(d), d nonzero.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        debug_assert!(!d.is_zero() && !self.is_zero() && self.deg() >= d.deg());
        let dd = d.deg();
        let dlc = d.lc();
        let mut rem = self.coeffs.clone();
        // Multiply through by lc(d) once per elimination step instead of by
        // lc(d)^{delta+1} up front; steps skipped on a vanishing leading term
        // are padded at the end so the result matches the textbook
        // pseudo-remainder exactly (the subresultant PRS relies on it).
        let total = self.deg() - dd + 1;
        let mut scalings = 0usize;
        while rem.len() > dd {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            for c in rem.iter_mut() {
                *c *= &dlc;
            }
            scalings += 1;
            let off = rem.len() - dd;
            for j in 0..dd {
                rem[off + j] -= &top * &d.coeffs[j];
            }
        }
        let mut r = IntPoly::new(rem);
        for _ in scalings..total {
            r = r.scale(&dlc);
        }
        r
    }

    /// Polynomial gcd over ℤ (primitive subresultant PRS), normalized to
    /// positive leading coefficient. gcd(0, b) = ±b.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content()).abs_lc();
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content()).abs_lc();
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() && b.deg() > 0 {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
            if !b.is_zero() && a.deg() < b.deg() {
                std::mem::swap(&mut a, &mut b);
            }
        }
        if !b.is_zero() {
            // A nonzero constant remainder means the primitive parts are
            // coprime.
            return IntPoly::constant(cont);
        }
        a.primitive_part().scale(&cont).abs_lc()
    }

    fn abs_lc(self) -> IntPoly {
        if self.lc().is_negative() {
            -&self
        } else {
            self
        }
    }

    /// Squarefree part: P / gcd(P, P'), primitive, positive leading
    /// coefficient. For monic P the result is monic.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree part of zero polynomial".into()));
        }
        if self.deg() == 0 {
            return Ok(IntPoly::one());
        }
        let g = self.gcd(&self.derivative());
        let q = self
            .primitive_part()
            .divide_exact(&g)
            .ok_or_else(|| Error::Integrity("gcd does not divide its argument".into()))?;
        Ok(q.primitive_part())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && (self.deg() == 0 || self.gcd(&self.derivative()).deg() == 0)
    }

    /// Yun squarefree decomposition of a nonzero primitive polynomial:
    /// returns [(S_1, 1), (S_2, 2), …] with P = ±∏ S_i^i and each S_i
    /// squarefree, pairwise coprime (trivial factors S_i = 1 omitted).
    pub fn squarefree_decomposition(&self) -> Result<Vec<(IntPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree decomposition of zero".into()));
        }
        let p = self.primitive_part();
        if p.deg() == 0 {
            return Ok(vec![]);
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.deg() == 0 {
            return Ok(vec![(p, 1)]);
        }
        let mut out = vec![];
        let mut c = p.divide_exact(&g).expect("gcd divides");
        let mut d = &dp.divide_exact(&g).expect("gcd divides P'") - &c.derivative();
        let mut i = 1;
        loop {
            let a = c.gcd(&d);
            if a.deg() > 0 {
                out.push((a.clone(), i));
            }
            c = c.divide_exact(&a).expect("gcd divides");
            if c.deg() == 0 {
                break;
            }
            d = &d.divide_exact(&a).expect("gcd divides") - &c.derivative();
            i += 1;
        }
        Ok(out)
    }
}

// ---- Operator impls (reference-based to avoid clones) ----

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

// ---- Display ----

impl IntPoly {
    /// Ascending comma-separated coefficient string, the canonical external
    /// format ("1,-3,1" for x²-3x+1).
    pub fn coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for IntPoly {
    /// Human expression form, highest power first: "x^2 - 3x + 1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn monic_query() {
        assert!(p(&[1, -3, 1]).is_monic());
        assert!(!p(&[1, -3, 2]).is_monic());
        assert!(!IntPoly::zero().is_monic());
    }

    #[test]
    fn mul_and_divide_exact_roundtrip() {
        let a = p(&[1, -3, 1]);
        let b = p(&[-1, 1, 0, 2]);
        let c = &a * &b;
        assert_eq!(c.divide_exact(&a).unwrap(), b);
        assert_eq!(c.divide_exact(&b).unwrap(), a);
        assert!(c.divide_exact(&p(&[1, 1])).is_none());
    }

    #[test]
    fn gcd_of_product_with_common_factor() {
        let g = p(&[-1, 0, 1]);
        let a = &g * &p(&[3, 1]);
        let b = &g * &p(&[-2, 5, 7]);
        assert_eq!(a.gcd(&b), g);
    }

    #[test]
    fn squarefree_decomposition_recomposes() {
        // (x-1)^2 (x+2)^3 x
        let q = &(&p(&[-1, 1]).pow(2) * &p(&[2, 1]).pow(3)) * &p(&[0, 1]);
        let dec = q.squarefree_decomposition().unwrap();
        let mut rec = IntPoly::one();
        for (s, m) in &dec {
            rec = &rec * &s.pow(*m as u32);
        }
        assert_eq!(rec, q);
        assert_eq!(dec.len(), 3);
        assert_eq!(q.squarefree_part().unwrap(), &(&p(&[-1, 1]) * &p(&[2, 1])) * &p(&[0, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2 - 3x + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[5]).to_string(), "5");
        assert_eq!(p(&[1, -3, 1]).coeff_string(), "1,-3,1");
    }
}
