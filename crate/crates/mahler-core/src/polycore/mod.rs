//! Exact polynomial arithmetic kernel.
//!
//! Everything downstream (sequences, generating functions, estimates) reduces
//! to the operations in this module: resultants and discriminants computed
//! fraction-free, the power map P ↦ P_n via Newton power sums, composed
//! products, the multiset polynomial P_𝒩, cyclotomic polynomials, and the
//! elementary number-theoretic helpers (Möbius, totient, divisor tables,
//! integer factorization).

pub mod poly;
pub mod parse;
pub mod numth;
pub mod factorize;
pub mod modp;
pub mod resultant;
pub mod powermap;
pub mod compose;
pub mod cyclotomic;

pub use compose::{composed_product, multiset_poly, Multiset};
pub use cyclotomic::cyclotomic;
pub use factorize::{factorize, Factorization};
pub use numth::{divisor_table, DivisorTable};
pub use parse::{parse_coeff_list, parse_expression, parse_poly};
pub use poly::IntPoly;
pub use powermap::power_map;
pub use resultant::{discriminant, resultant};
