//! Polynomial text input.
//!
//! Two grammars are accepted:
//! - the canonical coefficient list, ascending from the constant term:
//!   `1,-3,1` is x²-3x+1;
//! - a convenience expression form with integer coefficients, `^` powers,
//!   implicit coefficient 1 and optional `*`: `x^2-3x+1`, `2*x^3 - x + 4`.
//!
//! [`parse_poly`] dispatches on the presence of `x`. Both parsers are total:
//! any byte sequence either parses or returns [`Error::Parse`], never panics.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::poly::IntPoly;

/// Exponents above this are rejected up front so hostile input cannot force
/// absurd allocations.
pub const MAX_EXPONENT: usize = 65_535;

/// Parse either grammar: expression form when the input mentions `x`,
/// coefficient list otherwise.
pub fn parse_poly(s: &str) -> Result<IntPoly> {
    if s.contains('x') {
        parse_expression(s)
    } else {
        parse_coeff_list(s)
    }
}

/// Parse the ascending comma-separated coefficient form.
pub fn parse_coeff_list(s: &str) -> Result<IntPoly> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs = Vec::new();
    for (idx, piece) in s.split(',').enumerate() {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Parse(format!("empty coefficient at position {idx}")));
        }
        let c: BigInt = piece
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {piece:?} at position {idx}")))?;
        coeffs.push(c);
    }
    Ok(IntPoly::new(coeffs))
}

/// Parse the expression form.
pub fn parse_expression(s: &str) -> Result<IntPoly> {
    let mut p = Scanner { b: s.as_bytes(), i: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut sign = p.take_sign().unwrap_or(1);
    loop {
        p.skip_ws();
        let (coeff, exp) = p.term()?;
        let exp_slot = exp;
        if coeffs.len() <= exp_slot {
            coeffs.resize(exp_slot + 1, BigInt::zero());
        }
        if sign > 0 {
            coeffs[exp_slot] += coeff;
        } else {
            coeffs[exp_slot] -= coeff;
        }
        p.skip_ws();
        if p.at_end() {
            break;
        }
        sign = p
            .take_sign()
            .ok_or_else(|| p.err("expected '+' or '-' between terms"))?;
    }
    Ok(IntPoly::new(coeffs))
}

struct Scanner<'a> {
    b: &'a [u8],
    i: usize,
}

impl<'a> Scanner<'a> {
    fn at_end(&self) -> bool {
        self.i >= self.b.len()
    }

    fn peek(&self) -> Option<u8> {
        self.b.get(self.i).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.i += 1;
        }
    }

    fn take_sign(&mut self) -> Option<i32> {
        match self.peek() {
            Some(b'+') => {
                self.i += 1;
                Some(1)
            }
            Some(b'-') => {
                self.i += 1;
                Some(-1)
            }
            _ => None,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.i))
    }

    /// Unsigned decimal integer.
    fn uint(&mut self) -> Result<BigInt> {
        let start = self.i;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.i += 1;
        }
        if self.i == start {
            return Err(self.err("expected a digit"));
        }
        // The slice is pure ASCII digits, so both conversions are infallible.
        let text = std::str::from_utf8(&self.b[start..self.i]).unwrap();
        Ok(text.parse().unwrap())
    }

    /// One term: `coeff`, `x`, `coeff x^e`, `coeff * x^e`, … Returns the
    /// (unsigned) coefficient and the exponent.
    fn term(&mut self) -> Result<(BigInt, usize)> {
        let coeff = if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            Some(self.uint()?)
        } else {
            None
        };
        self.skip_ws();
        let mut star = false;
        if self.peek() == Some(b'*') {
            if coeff.is_none() {
                return Err(self.err("'*' without a coefficient"));
            }
            star = true;
            self.i += 1;
            self.skip_ws();
        }
        if self.peek() != Some(b'x') {
            if star {
                return Err(self.err("expected 'x' after '*'"));
            }
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.err("expected a term")),
            };
        }
        self.i += 1;
        let coeff = coeff.unwrap_or_else(BigInt::one);
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok((coeff, 1));
        }
        self.i += 1;
        self.skip_ws();
        let e = self.uint()?;
        let e: usize = e
            .try_into()
            .map_err(|_| Error::Parse("exponent too large".into()))?;
        if e > MAX_EXPONENT {
            return Err(Error::Parse(format!("exponent {e} exceeds {MAX_EXPONENT}")));
        }
        Ok((coeff, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coeff_list_forms() {
        assert_eq!(parse_poly("1,-3,1").unwrap(), IntPoly::from_i64(&[1, -3, 1]));
        assert_eq!(parse_poly(" 1 , -3 , 1 ").unwrap(), IntPoly::from_i64(&[1, -3, 1]));
        assert!(parse_poly("1,,1").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("1,a,1").is_err());
    }

    #[test]
    fn expression_forms() {
        let want = IntPoly::from_i64(&[1, -3, 1]);
        assert_eq!(parse_poly("x^2-3x+1").unwrap(), want);
        assert_eq!(parse_poly("x^2 - 3x + 1").unwrap(), want);
        assert_eq!(parse_poly("x^2 - 3*x + 1").unwrap(), want);
        assert_eq!(parse_poly("-x").unwrap(), IntPoly::from_i64(&[0, -1]));
        assert_eq!(parse_poly("x").unwrap(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(parse_poly("x + x").unwrap(), IntPoly::from_i64(&[0, 2]));
        assert_eq!(parse_poly("x^2 - x^2").unwrap(), IntPoly::zero());
        assert_eq!(
            parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1").unwrap().coeff_string(),
            "1,1,0,-1,-1,-1,-1,-1,0,1,1"
        );
    }

    #[test]
    fn expression_rejects() {
        for bad in ["x^", "x^-2", "3*", "*x", "x^999999999999", "x^70000", "1+", "+", "x y", "3..2"] {
            assert!(parse_poly(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
