//! The analytic layer: the confluent Vandermonde identity, the Hadamard
//! sandwich between Δ(P_n) and the Mahler measure, limsup targets for
//! Δ(P_n) and Res(P_n, Q), and the equidistribution gap of the torsion-free
//! angle argument.
//!
//! Limsup statements are asymptotic, so nothing here asserts a limit. The
//! per-n inequalities that carry the proofs are checked with certified ball
//! arithmetic for every n up to the requested bound (a genuine violation is
//! an integrity error), while the asymptotic side is reported as a ratio or
//! an exceedance flag and left to the caller to read.

pub mod limsup;
pub mod vandermonde;

pub use limsup::{
    equidistribution_delta, limsup_delta_estimate, limsup_resultant_estimate, sandwich_check,
    EquidistributionReport, LimsupDelta, LimsupResultant, SandwichReport,
};
pub use vandermonde::{
    confluent_vandermonde, confluent_vandermonde_complex, ComplexConfluentCheck, ConfluentCheck,
    ConfluentSpec, CONFLUENT_SIZE_CAP,
};
