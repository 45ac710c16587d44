use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The defining series diverges; carries the violated conditions.
    #[error("divergent {what}: violated {}", .violated.join(", "))]
    Divergent { what: String, violated: Vec<String> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("the sum of the linear forms is identically zero")]
    ZeroSumForm,

    #[error("exponent {0} is not a positive integer")]
    NonPositiveExponent(i64),

    #[error("unsupported regularized symbol {0}")]
    UnsupportedRegularization(String),

    /// A formal T coefficient survived; a reduction step is inconsistent.
    #[error("divergent residue: {0}")]
    DivergentResidue(String),

    #[error("requested error {requested:e} unreachable; best bound {achieved:e}")]
    Precision { requested: f64, achieved: f64 },
}
