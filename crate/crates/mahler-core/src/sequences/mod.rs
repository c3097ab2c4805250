//! The integer sequences attached to P and every theorem they satisfy.
//!
//! - [`delta`]: Δ(P_n), the Möbius transform δ_n, the essential factors Ψ_n,
//!   characteristic primes, torsion detection, sign constancy, Lehmer's Δ_n,
//!   and the quadratic b_n.
//! - [`gauss`]: Gauss-congruence reports for coefficients, Δ(P_n), resultant
//!   families, and the Dobrowolski divisibility p^d | Res(P_p, P).
//! - [`u`]: the resultant sequence U(n) with its divisibility, a₀-power,
//!   upper-bound, and small-prime checks.
//! - [`partitions`]: the factorization U(n) = ∏_𝒫 U(n, 𝒫) over set
//!   partitions of the tuple slots.
//! - [`orders`]: ord(x) in ℤ[x]/(m, P) and the Δ(P_n) divisibility it
//!   predicts.

pub mod delta;
pub mod gauss;
pub mod orders;
pub mod partitions;
pub mod u;

pub use delta::{
    b_seq_quadratic, characteristic_primes, delta_pk_monotonicity, delta_seq, essential_factors,
    lehmer_delta, small_delta, torsion_zero, CharPrime, CharacteristicPrimes, DeltaSequence,
    EssentialFactors, LehmerDelta, PkMonotonicity, PkRecord, SignVerdict, SmallDeltaReport,
};
pub use gauss::{
    dobrowolski_check, gauss_check_coefficients, gauss_check_delta, gauss_check_resultant,
    GaussRecord, GaussRecordJson, GaussReport, GaussReportJson,
};
pub use orders::{
    order_in_quotient, predicted_disc_divisibility, DiscDivisibilityPrediction, PrimeComponent,
    QuotientOrders,
};
pub use partitions::{
    set_partitions, u_partition_factors, Partition, PartitionFactor, PartitionFactorization,
};
pub use u::{
    a0_power_divisibility, u_divisibility_check, u_of_n, u_of_n_capped,
    u_small_prime_divisibility, u_upper_bound_check, A0PowerDivisibility, UDivisibility,
    USmallPrimeClaim, USmallPrimeReport, UUpperBound, DEFAULT_DEGREE_CAP,
};
