//! Single-worker schoolbook subtraction with left-scan borrow resolution.

use std::cmp::Ordering;

use crate::error::{Result, SubError};
use crate::magnitude::{compare_magnitude, padded, DecimalMagnitude};
use crate::word::LimbWord;

/// Counters gathered during one sequential subtraction.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SequentialStats {
    /// Limb subtractions executed; equals the limb count of the minuend.
    pub limb_subtractions: usize,
    /// Borrows taken from the left.
    pub borrows: usize,
    /// Limbs visited by the left scans, including the lender.
    pub scanned_limbs: usize,
}

/// Computes `a - b` for `a >= b`.
pub fn subtract_sequential<W: LimbWord>(
    a: &DecimalMagnitude<W>,
    b: &DecimalMagnitude<W>,
) -> Result<DecimalMagnitude<W>> {
    subtract_sequential_with_stats(a, b).map(|(m, _)| m)
}

/// Same as [`subtract_sequential`], also reporting operation counts.
pub fn subtract_sequential_with_stats<W: LimbWord>(
    a: &DecimalMagnitude<W>,
    b: &DecimalMagnitude<W>,
) -> Result<(DecimalMagnitude<W>, SequentialStats)> {
    if compare_magnitude(a, b) == Ordering::Less {
        return Err(SubError::NegativeResult);
    }
    let n = a.limb_count();
    let b = padded(b.limbs(), n)?;
    let mut work = a.limbs().to_vec();
    let mut stats = SequentialStats::default();

    for i in (0..n).rev() {
        if work[i] < b[i] {
            stats.scanned_limbs += borrow_from_left(&mut work, i)?;
            stats.borrows += 1;
        }
        work[i] = work[i] - b[i];
        stats.limb_subtractions += 1;
    }
    Ok((DecimalMagnitude::from_limbs_unchecked(work), stats))
}

/// Moves one unit from the nearest nonzero limb left of `i` down to `i`.
///
/// The lender is decremented, every zero limb it skipped becomes
/// `10^18 - 1`, and `work[i]` gains `10^18`. The value of the sequence is
/// unchanged. Returns the number of limbs scanned.
pub fn borrow_from_left<W: LimbWord>(work: &mut [W], i: usize) -> Result<usize> {
    let lender = work[..i]
        .iter()
        .rposition(|l| !l.is_zero())
        .ok_or(SubError::BorrowExhausted)?;
    work[lender] = work[lender] - W::one();
    work[lender + 1..i].fill(W::MAX_LIMB);
    work[i] = work[i] + W::BASE;
    Ok(i - lender)
}
