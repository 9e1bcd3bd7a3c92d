use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("empty pattern")]
    EmptyPattern,
    #[error("symbol {symbol} outside alphabet 1..={alphabet}")]
    SymbolOutOfRange { symbol: u32, alphabet: u32 },
    #[error("invalid bounds: {0}")]
    Bounds(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} exceeded (limit {limit})")]
    CapExceeded { what: &'static str, limit: u64 },
    #[error("tree was built without a stride")]
    StrideMissing,
    #[error("malformed automaton: {0}")]
    MalformedAutomaton(String),
}

pub type Result<T> = std::result::Result<T, Error>;
