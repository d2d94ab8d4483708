use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubError {
    #[error("empty operand")]
    EmptyInput,
    #[error("invalid digit at position {position}")]
    InvalidDigit { position: usize },
    #[error("limb {index} is outside [0, 10^18)")]
    LimbOutOfRange { index: usize },
    #[error("minuend is smaller than subtrahend")]
    NegativeResult,
    #[error("borrow ran past the most-significant limb")]
    BorrowExhausted,
    #[error("cannot pad {have} limbs down to {want}")]
    LengthUnderflow { have: usize, want: usize },
    #[error("borrow resolution did not settle within {limit} passes")]
    PassLimitExceeded { limit: usize },
    #[error("at least one worker is required")]
    NoWorkers,
    #[error("failed to start worker pool: {0}")]
    WorkerPool(String),
}

pub type Result<T, E = SubError> = std::result::Result<T, E>;
