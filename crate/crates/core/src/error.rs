//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the library.
///
/// `Parse` and `InvalidInput` are caller errors; `Consistency` means two
/// independent computations of the same quantity disagreed, and `Internal`
/// means an arithmetic invariant (e.g. integrality of a final coefficient)
/// was violated. The latter two always indicate a bug and map to a distinct
/// process exit code in the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// A partition or bipartition literal could not be parsed.
    #[error("cannot parse {kind} from token `{token}`")]
    Parse { kind: &'static str, token: String },

    /// An argument violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two independent routes to the same value disagreed.
    #[error("consistency failure: {0}")]
    Consistency(String),

    /// An internal arithmetic invariant was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
