use thiserror::Error;

/// Errors raised by the group, representation and basis machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("sign vector {0:?} has entries other than +1/-1")]
    InvalidSigns([i8; 4]),
    #[error("{0:?} is not a permutation of {{0,1,2,3}}")]
    InvalidPerm([u8; 4]),
    #[error("cannot parse cycle notation {0:?}")]
    CycleSyntax(String),
    #[error("cannot parse word {0:?}")]
    WordSyntax(String),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("closure exceeded the bound of {0} elements")]
    ClosureBound(usize),
    #[error("unknown Weyl generator index {0}")]
    UnknownGenerator(u8),
    #[error("word has {0} Weyl letters; only even words lift to SU(2)xSU(2)")]
    OddWord(usize),
    #[error("element is orientation reversing and has no SU(2)xSU(2) lift")]
    NotLiftable,
    #[error("unknown face pair {0:?}")]
    UnknownFacePair(String),
    #[error("table mismatch: {0}")]
    TableMismatch(String),
    #[error("argument is not special unitary (deviation {0:.3e})")]
    NonUnitary(f64),
    #[error("quadrature resolution too low: {0}")]
    Resolution(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("character sum {0} is not an integer multiple of the group order")]
    NonIntegral(f64),
    #[error("irrep census check failed: {0}")]
    Census(String),
}

pub type Result<T> = std::result::Result<T, Error>;
