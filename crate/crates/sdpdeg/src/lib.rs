//! Command-line front end for the algebraic degree of semidefinite
//! programming: single values, full tables and verification suites.

pub mod record;
pub mod table;
pub mod verify;

use sdpdeg_core::Error;

/// Process exit codes; stable across releases.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    /// A verification suite found a counterexample, or an unexpected failure.
    pub const FAILURE: u8 = 1;
    /// The triple is outside the Pataki range, or other invalid input.
    pub const INVALID_INPUT: u8 = 2;
    /// Two routes disagreed, or duality failed across a table.
    pub const DISAGREEMENT: u8 = 3;
}

/// Maps an error chain to its exit code.
pub fn exit_code_for(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<table::DualityError>().is_some() {
        return exit::DISAGREEMENT;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::CrossCheckMismatch { .. }) => exit::DISAGREEMENT,
        Some(
            Error::UnsupportedRank { .. }
            | Error::BelowPatakiLower { .. }
            | Error::AbovePatakiUpper { .. }
            | Error::CoincidentPoints(..)
            | Error::ClosedFormNotApplicable
            | Error::UnknownMethod(_),
        ) => exit::INVALID_INPUT,
        _ => exit::FAILURE,
    }
}
