//! Certified root isolation and Mahler measure.
//!
//! Everything here is built on dyadic ball arithmetic with directed rounding
//! ([`ball::Dy`]); no floating-point result is trusted without an exact
//! residual certificate.

pub mod ball;
pub mod measure;
pub mod roots;

pub use ball::Dy;
pub use measure::{
    dobrowolski_bound, graeffe_measure, hadamard_disc_bound, is_cyclotomic_product,
    is_reciprocal, mahler_measure, CyclotomicWitness, MeasureMethod, MeasureResult,
};
pub use roots::{find_roots, CertifiedRoot, RootSet};
