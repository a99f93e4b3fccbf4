use std::fmt;

/// Errors produced by parsing, validation, and the randomized gin search.
///
/// Precondition violations on core algebra (dimension mismatches, degree
/// overflow, invalid indices) panic instead: they are programming errors,
/// not recoverable conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Text input could not be parsed; `position` is a byte offset into the
    /// input string.
    Parse { position: usize, message: String },
    /// A variable name not declared in the ambient ring.
    UnknownVariable { position: usize, name: String },
    /// Ring construction or ring text was invalid.
    InvalidRing(String),
    /// Order construction or order text was invalid.
    InvalidOrder(String),
    /// Ideal construction was invalid (empty list, zero or constant
    /// generator, dimension mismatch).
    InvalidIdeal(String),
    /// A generator that must be homogeneous is not. `index` is its position
    /// in the generator list.
    NonHomogeneous { index: usize },
    /// A square matrix that must be invertible has determinant zero.
    SingularMatrix,
    /// An operation that requires a Borel-fixed ideal received one that is
    /// not.
    NotBorelFixed,
    /// Invalid randomized-search configuration.
    InvalidConfig(String),
    /// The randomized gin search did not stabilize. If `agreed_non_borel`
    /// is true, consecutive trials agreed on an ideal that failed the
    /// Borel-fixedness check; otherwise the trial budget ran out without
    /// the required agreement.
    StabilizationFailure {
        trials: u32,
        agreed_non_borel: bool,
    },
    /// Construction parameters out of range (e.g. a variable index that
    /// does not fit the ring).
    IndexOutOfRange { what: String },
    /// Two orders agreed on every monomial of every degree up to the scan
    /// bound, so no distinguishing ideal exists within it.
    NoDisagreement { dmax: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::UnknownVariable { position, name } => {
                write!(f, "unknown variable `{name}` at byte {position}")
            }
            Error::InvalidRing(msg) => write!(f, "invalid ring: {msg}"),
            Error::InvalidOrder(msg) => write!(f, "invalid order: {msg}"),
            Error::InvalidIdeal(msg) => write!(f, "invalid ideal: {msg}"),
            Error::NonHomogeneous { index } => {
                write!(f, "generator {index} is not homogeneous")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NotBorelFixed => write!(f, "ideal is not Borel-fixed"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::StabilizationFailure {
                trials,
                agreed_non_borel,
            } => {
                if *agreed_non_borel {
                    write!(
                        f,
                        "gin search failed: {trials} trials agreed on an ideal that is not \
                         Borel-fixed (coordinates insufficiently generic)"
                    )
                } else {
                    write!(
                        f,
                        "gin search failed: no stable ideal after {trials} trials"
                    )
                }
            }
            Error::IndexOutOfRange { what } => write!(f, "out of range: {what}"),
            Error::NoDisagreement { dmax } => {
                write!(f, "the orders agree on all monomials up to degree {dmax}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
