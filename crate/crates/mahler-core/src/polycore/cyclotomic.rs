//! Cyclotomic polynomials Φ_n, by the defining recursion
//! x^n - 1 = ∏_{d | n} Φ_d(x).

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polycore::numth::divisors;
use crate::polycore::poly::IntPoly;

/// Φ_n(x), monic of degree φ(n); n = 0 is a domain error.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Domain("cyclotomic index must be >= 1".into()));
    }
    // Build Φ_d for the divisors of n in increasing order; each step divides
    // x^d - 1 by the product of the earlier ones.
    let divs = divisors(n);
    let mut known: Vec<(u64, IntPoly)> = Vec::with_capacity(divs.len());
    for &d in &divs {
        let mut num = x_pow_minus_one(d);
        for (e, phi) in &known {
            if d % e == 0 {
                num = num
                    .divide_exact(phi)
                    .expect("cyclotomic division is exact");
            }
        }
        known.push((d, num));
    }
    Ok(known.pop().expect("divisor list includes n").1)
}

fn x_pow_minus_one(d: u64) -> IntPoly {
    let mut coeffs = vec![BigInt::from(0); d as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[d as usize] = BigInt::one();
    IntPoly::new(coeffs)
}
