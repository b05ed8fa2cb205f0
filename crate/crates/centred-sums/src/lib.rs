//! Exact evaluation of centred binomial sums by every route that exists for
//! them, cross-validated bit-for-bit.
//!
//! The object of study is the sum U_r(n) = sum_k C(n,k) |n/2 - k|^r (and its
//! even-argument specialisation S_r(n) = U_r(2n)), a dyadic rational for all
//! r, n >= 0. The crate evaluates it by independent routes:
//!
//! - the defining sum and its half-range form ([`direct`]),
//! - order-lowering recurrences with memoization ([`recurrence`]),
//! - four polynomial families times a power of two or a central binomial
//!   coefficient ([`family`]),
//! - bridges through the symmetric trivariate polynomials F_r(x,y,z)
//!   ([`dumont_foata`]),
//! - nine explicit summation formulas ([`closed_form`]),
//! - coefficient extraction from exponential generating functions
//!   ([`series`]),
//!
//! plus a floating-point large-argument approximation ([`asymptotic`]) and a
//! seeded Monte Carlo random-walk oracle. All exact routes must agree
//! exactly; [`closed_form::cross_validate`] runs the whole matrix.
//!
//! Each capability has a runnable example under `examples/`; the `centred-sums`
//! binary exposes the same functionality as subcommands.

pub mod asymptotic;
pub mod cli;
pub mod closed_form;
pub mod direct;
pub mod dumont_foata;
pub mod error;
pub mod family;
pub mod numeric;
pub mod recurrence;
pub mod report;
pub mod series;

pub use direct::{s_direct, u_direct, u_direct_halfrange, walk_moment_mc, Method, SumValue};
pub use error::{Error, Result};
pub use family::{family_poly, u_from_family, FamilyId, IntPolynomial};
pub use recurrence::{s_recurrence, u_recurrence, RecurrenceTable, SumKind};

/// Crate version embedded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
