use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::quasitoric::ValidationReport;

/// Errors raised by the algebraic and combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated an operation's precondition.
    Argument(String),
    /// A truncated series was asked for a coefficient beyond its known order.
    Truncation { requested: i64, order: i64 },
    /// Quasitoric input data failed validation.
    Invalid(ValidationReport),
    /// The input is structurally valid but does not define an oriented
    /// quasitoric manifold (e.g. torsion or wrong rank in top degree).
    Integrity(String),
    /// The characteristic matrix is not surjective over the integers.
    NotSurjective { invariants: Vec<BigInt> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Argument(msg) => write!(f, "argument error: {msg}"),
            Error::Truncation { requested, order } => {
                write!(f, "coefficient of exponent {requested} requested from a series known only to order {order}")
            }
            Error::Invalid(report) => write!(f, "invalid quasitoric data: {report}"),
            Error::Integrity(msg) => write!(f, "integrity error: {msg}"),
            Error::NotSurjective { invariants } => {
                write!(f, "characteristic matrix is not surjective over Z; invariant factors [")?;
                for (i, d) in invariants.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
