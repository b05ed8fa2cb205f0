//! Error type shared by every evaluator in the crate.
//!
//! Domain errors are part of the library contract: formulas with a stated
//! validity range reject arguments outside it instead of silently extending,
//! and the message names the range so callers know which evaluator to use
//! instead.

use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Binomial coefficients are defined here only for non-negative upper index.
    #[error("binomial coefficient undefined for negative upper index n = {0}")]
    NegativeUpperIndex(BigInt),

    /// The half-range form of the defining sum is stated only for r > 0.
    #[error("half-range evaluation requires r >= 1 (got r = 0); use the full defining sum")]
    HalfRangeOrderZero,

    /// Dumont-Foata polynomials start at F_1.
    #[error("Dumont-Foata polynomial F_r is undefined for r = {0}; requires r >= 1")]
    DumontFoataUndefined(i64),

    /// Carlitz's explicit double sum needs a non-vanishing Pochhammer symbol.
    #[error("Carlitz formula invalid: Pochhammer factor {factor} vanishes")]
    VanishingPochhammer { factor: String },

    /// A closed-form evaluator was asked for arguments outside its stated range.
    #[error("{formula} is valid only for {required} (got r = {r}, n = {n})")]
    OutsideValidity {
        formula: String,
        required: String,
        r: i64,
        n: i64,
    },

    /// Carlitz's generating function carries a 1/(xy) prefactor.
    #[error("Carlitz generating function requires x != 0 and y != 0")]
    ZeroPrefactor,

    /// Unknown sequence name passed to the sequence emitter.
    #[error("unknown sequence '{name}'; valid names: {valid}")]
    UnknownSequence { name: String, valid: String },

    /// Output format not supported by the requested command.
    #[error("{0}")]
    Usage(String),
}
