//! Shared fixtures for the integration suites: the fixed corpus and the
//! exhaustive monic enumerations.

use mahler_core::IntPoly;

/// The named polynomials every suite refers back to.
pub fn golden() -> IntPoly {
    IntPoly::from_i64(&[1, -3, 1])
}

pub fn fibonacci() -> IntPoly {
    IntPoly::from_i64(&[-1, -1, 1])
}

pub fn smyth_cubic() -> IntPoly {
    IntPoly::from_i64(&[-1, -1, 0, 1])
}

pub fn paper_quartic() -> IntPoly {
    IntPoly::from_i64(&[1, 1, -1, 1, 1])
}

pub fn lehmer() -> IntPoly {
    IntPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// The fixed corpus: the named polynomials, a spread of small monic shapes,
/// and twenty members x^d - c with |constant| >= 2 for the constant-power
/// divisibility checks.
pub fn corpus() -> Vec<IntPoly> {
    let mut out = vec![
        golden(),
        fibonacci(),
        smyth_cubic(),
        paper_quartic(),
        lehmer(),
        IntPoly::from_i64(&[1, 1, 1]),      // cyclotomic, exercises torsion paths
        IntPoly::from_i64(&[1, -1, -1, 1, 1]),
        IntPoly::from_i64(&[-1, -1, 0, 0, 1]),
        IntPoly::from_i64(&[-1, -1, 0, 0, 0, 1]),
        IntPoly::from_i64(&[3, 2, 1, 1]),
        IntPoly::from_i64(&[2, 0, -2, 1]),
        IntPoly::from_i64(&[-3, -3, 0, 1]),
    ];
    for d in 2..=6usize {
        for c in [2i64, 3, -2, -3] {
            let mut coeffs = vec![0i64; d + 1];
            coeffs[0] = -c;
            coeffs[d] = 1;
            out.push(IntPoly::from_i64(&coeffs));
        }
    }
    out
}

/// Every monic polynomial of exactly this degree with coefficient height at
/// most `height`, in lexicographic coefficient order.
pub fn monic_of_degree(degree: usize, height: i64) -> Vec<IntPoly> {
    let base = (2 * height + 1) as u64;
    let count = base.pow(degree as u32);
    (0..count)
        .map(|mut idx| {
            let mut coeffs = vec![0i64; degree + 1];
            coeffs[degree] = 1;
            for c in coeffs.iter_mut().take(degree) {
                *c = (idx % base) as i64 - height;
                idx /= base;
            }
            IntPoly::from_i64(&coeffs)
        })
        .collect()
}

/// All monic polynomials with 1 <= degree <= cap and height at most h.
pub fn monic_up_to(cap: usize, height: i64) -> Vec<IntPoly> {
    (1..=cap).flat_map(|d| monic_of_degree(d, height)).collect()
}
