//! Multi-worker subtraction with speculative borrows.
//!
//! Every worker owns one contiguous range of limbs. The first pass subtracts
//! each limb pair independently; a limb that would underflow takes a borrow
//! on credit and raises a flag for its left neighbour. Each later pass
//! settles the flags raised by the pass before it. A settled limb that was
//! zero wraps to `10^18 - 1` and raises a new flag further left. The run
//! stops once a pass raises no flags.
//!
//! Flags live on two boards. Workers read one and write the other, and the
//! boards swap between passes. A limb at index `i` only ever raises the
//! flag at `i - 1`, so the write board splits into per-worker segments
//! shifted one cell left of the limb ranges. Each cell therefore has
//! exactly one writer.

use std::cmp::Ordering;
use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Result, SubError};
use crate::magnitude::{compare_magnitude, padded, DecimalMagnitude};
use crate::word::LimbWord;

/// The contiguous limb range owned by one worker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChunkAssignment {
    pub worker_id: usize,
    pub limb_range: Range<usize>,
}

/// Splits `limb_count` limbs into at most `workers` contiguous ranges whose
/// sizes differ by at most one. Earlier ranges take the remainder. When
/// there are more workers than limbs, each limb gets its own range.
pub fn partition_limbs(limb_count: usize, workers: usize) -> Vec<ChunkAssignment> {
    let parts = workers.max(1).min(limb_count);
    if parts == 0 {
        return Vec::new();
    }
    let (size, extra) = (limb_count / parts, limb_count % parts);
    let mut start = 0;
    (0..parts)
        .map(|worker_id| {
            let len = size + usize::from(worker_id < extra);
            let range = start..start + len;
            start += len;
            ChunkAssignment {
                worker_id,
                limb_range: range,
            }
        })
        .collect()
}

/// Pending-borrow flags, one per limb. A set flag at `i` means limb `i`
/// owes one unit to the limb on its right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorrowBoard {
    flags: Vec<bool>,
}

impl BorrowBoard {
    pub fn new(limb_count: usize) -> Self {
        Self {
            flags: vec![false; limb_count],
        }
    }

    pub fn from_flags(flags: Vec<bool>) -> Self {
        Self { flags }
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn is_set(&self, i: usize) -> bool {
        self.flags[i]
    }

    pub fn raised(&self) -> usize {
        self.flags.iter().filter(|&&f| f).count()
    }

    pub fn clear(&mut self) {
        self.flags.fill(false);
    }

    /// Hands out the write segment for each chunk. The segment of a chunk
    /// covering limbs `[s, e)` is the board range `[s - 1, e - 1)`, clipped
    /// at zero.
    pub fn segments(&mut self, chunks: &[ChunkAssignment]) -> Vec<BoardSegment<'_>> {
        let mut rest = self.flags.as_mut_slice();
        let mut segments = Vec::with_capacity(chunks.len());
        for chunk in chunks {
            let Range { start, end } = chunk.limb_range.clone();
            let first = start.saturating_sub(1);
            let taken = std::mem::take(&mut rest);
            let (head, tail) = taken.split_at_mut(end - 1 - first);
            rest = tail;
            segments.push(BoardSegment {
                limbs: chunk.limb_range.clone(),
                flags: head,
                first,
            });
        }
        segments
    }
}

/// True iff any borrow is still pending on `board`.
pub fn has_pending_borrows(board: &BorrowBoard) -> bool {
    board.flags.iter().any(|&f| f)
}

/// The slice of a write board a single worker may touch.
#[derive(Debug)]
pub struct BoardSegment<'a> {
    limbs: Range<usize>,
    flags: &'a mut [bool],
    first: usize,
}

impl BoardSegment<'_> {
    /// Records that limb `limb` took a borrow from its left neighbour.
    pub fn raise(&mut self, limb: usize) -> Result<()> {
        debug_assert!(self.limbs.contains(&limb));
        if limb == 0 {
            return Err(SubError::BorrowExhausted);
        }
        self.flags[limb - 1 - self.first] = true;
        Ok(())
    }

    /// Board indices this segment may write.
    pub fn board_range(&self) -> Range<usize> {
        self.first..self.first + self.flags.len()
    }
}

/// First pass over one chunk: subtract limb pairs, borrowing on credit.
///
/// `a` and `b` are the full, equal-length operand limbs; `result` is the
/// chunk's slice of the output.
pub fn initial_pass<W: LimbWord>(
    chunk: &ChunkAssignment,
    a: &[W],
    b: &[W],
    result: &mut [W],
    write: &mut BoardSegment<'_>,
) -> Result<()> {
    let range = chunk.limb_range.clone();
    for ((i, out), (&x, &y)) in range
        .clone()
        .zip(result.iter_mut())
        .zip(a[range.clone()].iter().zip(&b[range]))
    {
        *out = if x < y {
            write.raise(i)?;
            x + W::BASE - y
        } else {
            x - y
        };
    }
    Ok(())
}

/// Later pass over one chunk: settle every borrow flagged on `read`.
/// Limbs without a pending borrow are left alone.
pub fn borrow_pass<W: LimbWord>(
    chunk: &ChunkAssignment,
    result: &mut [W],
    read: &BorrowBoard,
    write: &mut BoardSegment<'_>,
) -> Result<()> {
    let range = chunk.limb_range.clone();
    for ((i, out), _) in range
        .clone()
        .zip(result.iter_mut())
        .zip(&read.flags[range])
        .filter(|(_, &pending)| pending)
    {
        if out.is_zero() {
            write.raise(i)?;
            *out = W::MAX_LIMB;
        } else {
            *out = *out - W::one();
        }
    }
    Ok(())
}

/// Telemetry for one parallel subtraction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IterationStats {
    /// Synchronized passes executed, the initial one included.
    pub iterations: usize,
    pub limb_count: usize,
    /// Chunks actually used, at most the configured worker count.
    pub workers: usize,
    /// Flags raised by each pass, in order.
    pub borrows_per_pass: Vec<usize>,
}

impl IterationStats {
    /// Passes spent settling borrows after the initial one.
    pub fn resolution_passes(&self) -> usize {
        self.iterations.saturating_sub(1)
    }
}

/// A worker pool sized for one subtraction strategy, reusable across calls.
pub struct ParallelSubtractor {
    pool: rayon::ThreadPool,
    workers: usize,
}

impl ParallelSubtractor {
    pub fn new(workers: usize) -> Result<Self> {
        if workers == 0 {
            return Err(SubError::NoWorkers);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .thread_name(|i| format!("bigsub-worker-{i}"))
            .build()
            .map_err(|e| SubError::WorkerPool(e.to_string()))?;
        Ok(Self { pool, workers })
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Computes `a - b` for `a >= b`.
    pub fn subtract<W: LimbWord>(
        &self,
        a: &DecimalMagnitude<W>,
        b: &DecimalMagnitude<W>,
    ) -> Result<(DecimalMagnitude<W>, IterationStats)> {
        if compare_magnitude(a, b) == Ordering::Less {
            return Err(SubError::NegativeResult);
        }
        let n = a.limb_count();
        let a_limbs = a.limbs();
        let b_limbs = padded(b.limbs(), n)?;
        let chunks = partition_limbs(n, self.workers);

        let mut result = vec![W::zero(); n];
        let mut read = BorrowBoard::new(n);
        let mut write = BorrowBoard::new(n);
        let mut stats = IterationStats {
            iterations: 1,
            limb_count: n,
            workers: chunks.len(),
            borrows_per_pass: Vec::new(),
        };

        self.pool.install(|| {
            run_pass(&chunks, &mut result, &mut write, |chunk, out, seg| {
                initial_pass(chunk, a_limbs, &b_limbs, out, seg)
            })?;
            stats.borrows_per_pass.push(write.raised());

            while has_pending_borrows(&write) {
                if stats.iterations >= n {
                    return Err(SubError::PassLimitExceeded { limit: n });
                }
                std::mem::swap(&mut read, &mut write);
                write.clear();
                let pending = &read;
                run_pass(&chunks, &mut result, &mut write, |chunk, out, seg| {
                    borrow_pass(chunk, out, pending, seg)
                })?;
                stats.iterations += 1;
                stats.borrows_per_pass.push(write.raised());
            }
            Ok(())
        })?;

        Ok((DecimalMagnitude::from_limbs_unchecked(result), stats))
    }
}

/// Computes `a - b` with a fresh pool of `workers` threads.
pub fn subtract_parallel<W: LimbWord>(
    a: &DecimalMagnitude<W>,
    b: &DecimalMagnitude<W>,
    workers: usize,
) -> Result<(DecimalMagnitude<W>, IterationStats)> {
    ParallelSubtractor::new(workers)?.subtract(a, b)
}

/// Runs one pass: each chunk gets its slice of `result` and its write
/// segment of `board`; the call returns once every chunk is done.
fn run_pass<W, F>(
    chunks: &[ChunkAssignment],
    result: &mut [W],
    board: &mut BorrowBoard,
    work: F,
) -> Result<()>
where
    W: LimbWord,
    F: Fn(&ChunkAssignment, &mut [W], &mut BoardSegment<'_>) -> Result<()> + Sync,
{
    let mut slices = Vec::with_capacity(chunks.len());
    let mut rest = result;
    for chunk in chunks {
        let (head, tail) = std::mem::take(&mut rest).split_at_mut(chunk.limb_range.len());
        slices.push(head);
        rest = tail;
    }
    let segments = board.segments(chunks);

    chunks
        .par_iter()
        .zip(slices)
        .zip(segments)
        .try_for_each(|((chunk, out), mut seg)| work(chunk, out, &mut seg))
}
