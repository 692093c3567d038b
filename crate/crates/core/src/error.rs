use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    /// Rational slopes sit on a Farey fraction; the caller has to pick a side.
    #[error("lambda = {0} is rational; use the sided variant (lambda+ or lambda-)")]
    RationalLambda(String),

    #[error("denominator {den} exceeds the Farey order {order}")]
    DenominatorExceedsOrder { den: i64, order: i64 },

    #[error("points are collinear; the circumradius is infinite")]
    Collinear,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("value {value} outside the admissible range {range}")]
    OutOfRange { value: String, range: &'static str },

    #[error("domain {domain} does not converge to curve {curve}")]
    MismatchedPairing { domain: String, curve: String },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
