use core::fmt;

use crate::lti::Verdict;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime number.
    NotPrime(u64),
    /// The modulus does not fit the word-sized arithmetic (p < 2^31).
    ModulusTooLarge(u64),
    /// A field element value is outside `[0, p)`.
    ValueOutOfRange { value: u64, modulus: u32 },
    /// Operands live in different fields.
    FieldMismatch { left: u32, right: u32 },
    /// A vector or matrix had the wrong length.
    LengthMismatch { expected: usize, found: usize },
    /// A section (symbol alphabet) of dimension zero.
    EmptySection { time: usize },
    /// The rows of a generator matrix are linearly dependent.
    DependentRows,
    /// A basis was used where a certified shortest basis is required.
    Uncertified,
    /// An interval is empty or leaves the time axis.
    InvalidInterval { start: usize, end: usize, len: usize },
    /// A realization would exceed the configured state cap.
    StateCapExceeded { time: usize, states: u128, cap: u64 },
    /// An enumeration (paths, codewords, transitions) would exceed its cap.
    EnumerationCapExceeded { count: u128, cap: u64 },
    /// A zero column where a nonzero generator is required.
    ZeroColumn { column: usize },
    /// A polynomial denominator with zero constant term.
    BadDenominator { row: usize, column: usize },
    /// More columns than rows, or columns dependent over the rational functions.
    RankDeficient,
    /// A minimal polynomial matrix was required.
    NotMinimal(Verdict),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "modulus {p} is not prime"),
            Error::ModulusTooLarge(p) => write!(f, "modulus {p} must be below 2^31"),
            Error::ValueOutOfRange { value, modulus } => {
                write!(f, "value {value} is not in [0, {modulus})")
            }
            Error::FieldMismatch { left, right } => {
                write!(f, "operands in different fields GF({left}) and GF({right})")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected length {expected}, found {found}")
            }
            Error::EmptySection { time } => write!(f, "section at time {time} has dimension 0"),
            Error::DependentRows => f.write_str("generator rows are linearly dependent"),
            Error::Uncertified => f.write_str("basis does not have the predictable span property"),
            Error::InvalidInterval { start, end, len } => {
                write!(f, "interval [{start},{end}] is not inside [0,{len})")
            }
            Error::StateCapExceeded { time, states, cap } => {
                write!(f, "{states} states at time {time} exceed the cap of {cap}")
            }
            Error::EnumerationCapExceeded { count, cap } => {
                write!(f, "{count} items exceed the enumeration cap of {cap}")
            }
            Error::ZeroColumn { column } => write!(f, "column {column} is zero"),
            Error::BadDenominator { row, column } => {
                write!(f, "denominator at ({row},{column}) is zero or has zero constant term")
            }
            Error::RankDeficient => f.write_str("matrix does not have full column rank"),
            Error::NotMinimal(v) => write!(f, "matrix is not minimal ({v})"),
        }
    }
}

impl core::error::Error for Error {}
