use thiserror::Error;

/// Errors raised by construction, parsing, and precondition checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("component index must be positive")]
    ZeroComponent,
    #[error("generator s({n},{index}) is out of range: index must lie in 1..={n}")]
    LetterOutOfRange { n: u32, index: u32 },
    #[error("level {level} is below existing nu-length {existing} in component {n}")]
    LevelTooLow { n: u32, level: usize, existing: usize },
    #[error("element has support in component {found}, expected only component {expected}")]
    WrongComponent { expected: u64, found: u64 },
    #[error("component {n} is not in the submonoid")]
    OutsideSubmonoid { n: u64 },
    #[error("component {n} lies in the generated submonoid; expected a component of the complement")]
    InsideSubmonoid { n: u64 },
    #[error("{0} is not a prime number")]
    NotPrime(u64),
    #[error("zero is not an element of the multiplicative monoid")]
    ZeroNatural,
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid set specification: {0}")]
    SetSpec(String),
    #[error("malformed serialized line {line}: {msg}")]
    Serial { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
