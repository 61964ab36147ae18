use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),

    #[error("length must be at least 1, got {0}")]
    InvalidLength(u64),

    #[error("closed form for base {base}, length {k} produced {value}, whose length is {actual}")]
    LambdaSelfCheck {
        base: u32,
        k: u64,
        value: BigInt,
        actual: u64,
    },

    #[error("generating set is empty")]
    EmptyGeneratingSet,

    #[error("invalid generating set descriptor `{0}`")]
    InvalidDescriptor(String),

    #[error("window [{lo}, {hi}] must contain 0")]
    WindowExcludesZero { lo: i64, hi: i64 },

    #[error("margin must be at least 1")]
    InvalidMargin,

    #[error("exploration interval of radius {radius} is too large for a dense search")]
    ExplorationTooLarge { radius: u64 },

    #[error("{n} was not reached from 0 within exploration radius {radius} (margin {margin})")]
    Unreached { n: i64, radius: u64, margin: u32 },

    #[error("input must be nonzero")]
    ZeroInput,

    #[error("expected an integer >= {min}, got {value}")]
    OutOfRange { value: BigInt, min: BigInt },

    #[error("{0} is not an even integer >= 4")]
    NotGoldbachInput(BigInt),

    #[error("{0} is not an odd integer > 5")]
    NotTernaryInput(BigInt),

    #[error("no decomposition found for {0}")]
    NotFound(BigInt),

    #[error("pollard rho exhausted its budget of {budget} iterations while splitting {n}")]
    RhoBudgetExhausted { n: BigInt, budget: u64 },

    #[error("sieve bounds must be odd with lo <= hi, got [{lo}, {hi}]")]
    InvalidSieveRange { lo: u64, hi: u64 },

    #[error("malformed input on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// The caller asked for something outside an operation's domain, as
    /// opposed to a search or computation that gave up.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::LambdaSelfCheck { .. }
                | Error::ExplorationTooLarge { .. }
                | Error::Unreached { .. }
                | Error::NotFound(_)
                | Error::RhoBudgetExhausted { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
