//! Exit codes.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | generic failure |
//! | 2 | parse error or malformed input |
//! | 3 | a mathematical invariant was violated (including method disagreement) |
//! | 4 | inconclusive: a cap or cutoff was hit, or a hypothesis could not be certified |

use homkit_core::Error;

pub const OK: i32 = 0;
pub const GENERIC: i32 = 1;
pub const PARSE: i32 = 2;
pub const INVARIANT: i32 = 3;
pub const INCONCLUSIVE: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("methods disagree: {0}")]
    Discrepancy(String),
    #[error("{0}")]
    Usage(String),
}

/// How a command that ran to completion should exit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Failed,
    Inconclusive,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Ok => OK,
            Outcome::Failed => INVARIANT,
            Outcome::Inconclusive => INCONCLUSIVE,
        }
    }
}

fn core_code(e: &Error) -> i32 {
    match e {
        Error::InvalidField(_)
        | Error::Parse(_)
        | Error::MalformedQuiver(_)
        | Error::MalformedRelation(_)
        | Error::NonAdmissible(_)
        | Error::InvalidModule(_)
        | Error::InvalidMap(_)
        | Error::InvalidComplex(_)
        | Error::InvalidPair(_)
        | Error::AlgebraMismatch => PARSE,
        Error::InvariantViolation(_) | Error::BadCertificate(_) => INVARIANT,
        Error::PreenvelopeDidNotConverge { .. }
        | Error::ReplacementFailed { .. }
        | Error::HypothesisNotCertified(_)
        | Error::CapExceeded(_) => INCONCLUSIVE,
        _ => GENERIC,
    }
}

/// Maps an error chain to the exit code table above.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return core_code(e);
        }
        if let Some(e) = cause.downcast_ref::<CliError>() {
            return match e {
                CliError::Discrepancy(_) => INVARIANT,
                CliError::Usage(_) => PARSE,
            };
        }
        if cause.downcast_ref::<serde_json::Error>().is_some() {
            return PARSE;
        }
    }
    GENERIC
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_follow_the_chain() {
        let e = anyhow::Error::new(Error::Parse("x".into())).context("loading");
        assert_eq!(exit_code(&e), PARSE);
        let e = anyhow::Error::new(Error::CapExceeded("x".into()));
        assert_eq!(exit_code(&e), INCONCLUSIVE);
        let e = anyhow::Error::new(CliError::Discrepancy("x".into()));
        assert_eq!(exit_code(&e), INVARIANT);
        assert_eq!(exit_code(&anyhow::anyhow!("boom")), GENERIC);
    }
}
