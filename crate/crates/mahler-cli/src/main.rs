//! `mahler`: command-line driver for the mahler-core library.
//!
//! Every numeric claim printed here is computed by the library in exact
//! integer arithmetic or with certified directed rounding; this binary only
//! parses arguments and formats reports.
//!
//! Exit codes: 0 every check passed, 1 a checked claim failed or an internal
//! identity broke, 2 unusable input, 3 a resource cap was hit.

mod report;
mod scan;

use clap::{Parser, Subcommand};
use mahler_core::Error;

#[derive(Parser)]
#[command(
    name = "mahler",
    version,
    about = "Integer sequences and Mahler measures of monic integer polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure, the Delta/delta/Psi table, congruence and sign checks
    Analyze {
        /// Polynomial: ascending coefficients "1,-3,1" or an expression "x^2-3x+1"
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Largest index n in the sequence tables
        #[arg(long, default_value_t = 12)]
        n: u64,
        /// Half-width target for the measure enclosure
        #[arg(long, default_value_t = 1e-10)]
        precision: f64,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Gauss-congruence families: coefficients, Delta, resultants, Dobrowolski
    Gauss {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Verify the congruences for every index up to this bound
        #[arg(long, default_value_t = 24)]
        n: u64,
        /// Extra resultant partner Q (monic, Q(0) != 0)
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// U(n): value, factorization, divisibility checks, partition factors
    U {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// The index n >= 2
        #[arg(long)]
        n: u64,
        /// Cap on the multiset-polynomial degree d^r
        #[arg(long, default_value_t = 64)]
        degree_cap: u64,
        /// Small modulus: test the order-based predictions for k | U(n)
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// f_P(z) as a rational function, its Minton decomposition, the product identity
    Genfun {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Sequence terms fed to the reconstruction (default: certified bound)
        #[arg(long)]
        n: Option<u64>,
        /// Truncation order for the product identity
        #[arg(long, default_value_t = 16)]
        range: u64,
        /// Also report the quadratic g_P and its Gauss-violation witness
        #[arg(long)]
        g: bool,
        #[arg(long)]
        json: bool,
    },
    /// Confluent Vandermonde determinant identity at rational points
    Vandermonde {
        /// Points with multiplicities, like "1/2:1,3:2"
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate monic polynomials and report small noncyclotomic measures
    Scan {
        /// Largest degree enumerated
        #[arg(long, default_value_t = 10)]
        degree_cap: u32,
        /// Coefficient height bound
        #[arg(long, default_value_t = 1)]
        height: i64,
        /// Keep only measures strictly below this value
        #[arg(long, default_value_t = 1.18)]
        threshold: f64,
        /// Restrict to reciprocal (palindromic) polynomials
        #[arg(long)]
        reciprocal_only: bool,
        /// Worker threads (default: all cores)
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Finite-N growth of |Delta(P_n)|^(1/n) against the measure targets
    Estimate {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Largest index N
        #[arg(long, default_value_t = 40)]
        n: u64,
        /// Also track Res(P_n, Q) against M(P)^deg Q
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Comma-separated angles for the equidistribution gap check
        #[arg(long, allow_hyphen_values = true)]
        angles: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze { poly, n, precision, json } => {
            report::analyze(&poly, n, precision, json)
        }
        Command::Gauss { poly, n, q, json } => report::gauss(&poly, n, q.as_deref(), json),
        Command::U { poly, n, degree_cap, k, json } => report::u(&poly, n, degree_cap, k, json),
        Command::Genfun { poly, n, range, g, json } => report::genfun(&poly, n, range, g, json),
        Command::Vandermonde { points, json } => report::vandermonde(&points, json),
        Command::Scan { degree_cap, height, threshold, reciprocal_only, threads, json } => {
            scan::run(degree_cap, height, threshold, reciprocal_only, threads, json)
        }
        Command::Estimate { poly, n, q, angles, json } => {
            report::estimate(&poly, n, q.as_deref(), angles.as_deref(), json)
        }
    };
    match outcome {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Domain(_) => 2,
        Error::Resource(_) => 3,
        Error::Integrity(_) | Error::OrderTooLow { .. } => 1,
    }
}
