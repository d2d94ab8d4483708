//! Machine words that can hold one base-10^18 limb.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, PrimInt};

/// Number of decimal digits stored in one limb.
pub const LIMB_DIGITS: usize = 18;

/// An integer word wide enough to hold a limb plus one borrow, i.e. every
/// value in `[0, 2·10^18)`.
///
/// Signed 64-bit words mirror the classic `long` token layout; unsigned
/// 64-bit words are the default. Anything narrower than 63 value bits is
/// rejected at compile time by simply not implementing this trait.
pub trait LimbWord:
    PrimInt + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// `10^18`, the limb radix.
    const BASE: Self;
    /// `10^18 - 1`, the largest stored limb.
    const MAX_LIMB: Self;
    /// The word `10`.
    const TEN: Self;

    /// Lifts a single decimal digit (0..=9) into the word type.
    fn from_digit(d: u8) -> Self;
}

macro_rules! limb_word {
    ($($t:ty),*) => {$(
        impl LimbWord for $t {
            const BASE: Self = 1_000_000_000_000_000_000;
            const MAX_LIMB: Self = 999_999_999_999_999_999;
            const TEN: Self = 10;

            #[inline]
            fn from_digit(d: u8) -> Self {
                d as $t
            }
        }
    )*};
}

limb_word!(u64, i64, u128, i128);
