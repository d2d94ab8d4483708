//! Subtraction of large unsigned decimal integers held as base-10^18 limbs.
//!
//! Two kernels compute the same difference:
//!
//! * [`subtract_sequential`] walks the limbs right to left and, when a limb
//!   underflows, borrows from the nearest nonzero limb on its left.
//! * [`subtract_parallel`] hands each worker a contiguous range of limbs,
//!   subtracts every pair at once assuming any needed borrow is available,
//!   and then runs synchronized passes that repay those borrows until none
//!   remain.
//!
//! Both are generic over the machine word holding a limb ([`LimbWord`]);
//! [`Magnitude`] is the `u64` instantiation used by default.
//!
//! [`oracle`] holds an independent digit-at-a-time implementation used to
//! check both kernels.

pub mod error;
pub mod magnitude;
pub mod oracle;
pub mod parallel;
pub mod sequential;
pub mod word;

pub use error::{Result, SubError};
pub use magnitude::{compare_magnitude, format_magnitude, pad_to_length, parse_magnitude, DecimalMagnitude};
pub use parallel::{
    borrow_pass, has_pending_borrows, initial_pass, partition_limbs, subtract_parallel, BoardSegment,
    BorrowBoard, ChunkAssignment, IterationStats, ParallelSubtractor,
};
pub use sequential::{borrow_from_left, subtract_sequential, subtract_sequential_with_stats, SequentialStats};
pub use word::{LimbWord, LIMB_DIGITS};

/// Limbs in unsigned 64-bit words.
pub type Magnitude = DecimalMagnitude<u64>;
/// Limbs in signed 64-bit words, the classic `long` token layout.
pub type SignedMagnitude = DecimalMagnitude<i64>;
/// Limbs in 128-bit words.
pub type WideMagnitude = DecimalMagnitude<u128>;
