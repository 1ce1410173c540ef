//! Error type shared by every module of this crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in monomial arithmetic, enumeration, or
/// classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands have different numbers of variables.
    DimensionMismatch { left: usize, right: usize },
    /// Lex comparison or interval construction across different total degrees.
    DegreeMismatch { left: u64, right: u64 },
    /// The unit monomial has no variable indices.
    UnitMonomial,
    /// An index or iteration count lies outside its valid range.
    RangeError { value: u64, limit: u64 },
    /// Componentwise division would produce a negative exponent.
    NotDivisible,
    /// Malformed monomial text; `position` is a byte offset into the input.
    ParseError { position: usize, message: String },
    /// A variable index outside `1..=nvars`.
    IndexOutOfRange { index: usize, nvars: usize },
    /// Checked 64-bit arithmetic overflowed.
    Overflow,
    /// `successor` of the lex-smallest monomial of its degree.
    NoSuccessor,
    /// `predecessor` of the lex-largest monomial of its degree.
    NoPredecessor,
    /// Materializing a set would exceed the configured element cap.
    /// `needed` is the exact size when it is known up front.
    EnumerationCapExceeded { needed: Option<u64>, cap: u64 },
    /// Interval endpoints given in the wrong lex order.
    OrderViolation,
    /// An operation that needs a nonempty set received an empty one.
    EmptySet,
    /// A documented precondition does not hold.
    PreconditionViolation(&'static str),
    /// Two routes that must agree disagreed; always an implementation bug.
    InternalInconsistency(&'static str),
    /// No closed form exists for this number of variables.
    UnsupportedDimension { nvars: usize },
    /// A bounded search ran out of budget before finding a witness.
    NotFoundWithinCap { cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right} variables")
            }
            Error::DegreeMismatch { left, right } => {
                write!(f, "degree mismatch: {left} vs {right}")
            }
            Error::UnitMonomial => write!(f, "operation undefined on the unit monomial"),
            Error::RangeError { value, limit } => {
                write!(f, "value {value} out of range (limit {limit})")
            }
            Error::NotDivisible => write!(f, "monomial is not divisible by the divisor"),
            Error::ParseError { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range 1..={nvars}")
            }
            Error::Overflow => write!(f, "arithmetic overflow in 64-bit computation"),
            Error::NoSuccessor => write!(f, "the lex-smallest monomial has no successor"),
            Error::NoPredecessor => write!(f, "the lex-largest monomial has no predecessor"),
            Error::EnumerationCapExceeded { needed, cap } => match needed {
                Some(n) => write!(f, "enumeration needs {n} elements, cap is {cap}"),
                None => write!(f, "enumeration exceeded the cap of {cap} elements"),
            },
            Error::OrderViolation => write!(f, "interval endpoints are not lex-ordered"),
            Error::EmptySet => write!(f, "operation undefined on the empty set"),
            Error::PreconditionViolation(what) => write!(f, "precondition violated: {what}"),
            Error::InternalInconsistency(what) => {
                write!(f, "internal inconsistency: {what}")
            }
            Error::UnsupportedDimension { nvars } => {
                write!(f, "no closed form for {nvars} variables; use the oracle")
            }
            Error::NotFoundWithinCap { cap } => {
                write!(f, "not found within the search cap {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
