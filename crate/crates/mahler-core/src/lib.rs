//! Exact arithmetic for the integer sequences attached to a monic integer
//! polynomial P: the discriminant sequence Δ(P_n), the resultant sequence
//! U(n), the Möbius transform δ_n(P), the essential factors Ψ_n(P), and the
//! generating function f_P(z) = Σ Δ(P_n) z^n, together with certified
//! Mahler-measure numerics and the inequality layer that connects them.
//!
//! Layout:
//! - [`polycore`]: integer polynomials, resultants, discriminants, the power
//!   map P ↦ P_n, composed products, cyclotomics, integer factorization.
//! - [`roots_mahler`]: certified root disks, Mahler measure by roots and by
//!   Graeffe root-squaring, Kronecker cyclotomic detection.
//! - [`sequences`]: the sequences themselves and every congruence,
//!   divisibility, sign and factorization check they satisfy.
//! - [`genfun`]: Berlekamp-Massey reconstruction of f_P as a rational
//!   function, the Minton logarithmic-derivative decomposition, and the
//!   infinite-product identity.
//! - [`estimates`]: confluent Vandermonde identity, Hadamard sandwich,
//!   finite-range limsup proxies, equidistribution scans.
//!
//! Everything that feeds a verdict is computed in exact integer or rational
//! arithmetic; floating point appears only inside certified enclosures.

pub mod error;
pub mod polycore;
pub mod roots_mahler;
pub mod sequences;
pub mod genfun;
pub mod estimates;

pub use error::{Error, Result};
pub use polycore::poly::IntPoly;
