//! Quick correctness sweep run by the `selftest` command.

use bigsub_core::oracle::subtract_digitwise;
use bigsub_core::{
    format_magnitude, parse_magnitude, subtract_sequential, Magnitude, ParallelSubtractor, SubError,
};
use thiserror::Error;

use crate::operands::gen_ordered_pair;
use crate::rng::SplitMix64;

#[derive(Debug, Error)]
pub enum SelftestError {
    #[error("{kernel} kernel disagrees with the oracle on {a} - {b}")]
    Mismatch { kernel: String, a: String, b: String },
    #[error("worst case with {limbs} limbs took {got} passes, expected {want}")]
    IterationBound { limbs: usize, got: usize, want: usize },
    #[error(transparent)]
    Subtraction(#[from] SubError),
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct SelftestReport {
    pub pairs_checked: usize,
    pub bound_cases: usize,
}

pub const WORKER_COUNTS: [usize; 5] = [1, 2, 3, 4, 8];

/// Operand pairs that force long borrow chains, `a >= b` in each.
pub fn directed_pairs() -> Vec<(String, String)> {
    let mut pairs = Vec::new();
    for k in [1usize, 17, 18, 19, 35, 36, 37, 54, 90, 181] {
        let ten_k = format!("1{}", "0".repeat(k));
        pairs.push((ten_k.clone(), "1".to_string()));
        pairs.push(("9".repeat(k), "9".repeat(k)));
        pairs.push(("9".repeat(k), "0".to_string()));
        pairs.push((ten_k.clone(), "9".repeat(k)));
        pairs.push((format!("5{}3", "0".repeat(k)), "4".to_string()));
        pairs.push((format!("1{}1", "0".repeat(k)), format!("9{}", "0".repeat(k.max(1) - 1))));
    }
    pairs.push(("0".to_string(), "0".to_string()));
    pairs.push(("12345678909876543211234567890987654321".to_string(), "0".to_string()));
    pairs
}

fn check_pair(a: &str, b: &str, pools: &[ParallelSubtractor]) -> Result<(), SelftestError> {
    let want = subtract_digitwise(a, b)?;
    let ma: Magnitude = parse_magnitude(a)?;
    let mb: Magnitude = parse_magnitude(b)?;
    let seq = subtract_sequential(&ma, &mb)?;
    let mismatch = |kernel: String| SelftestError::Mismatch {
        kernel,
        a: a.to_string(),
        b: b.to_string(),
    };
    if format_magnitude(&seq) != want {
        return Err(mismatch("sequential".into()));
    }
    for pool in pools {
        let (par, _) = pool.subtract(&ma, &mb)?;
        if par.limbs() != seq.limbs() {
            return Err(mismatch(format!("parallel/{}", pool.workers())));
        }
    }
    Ok(())
}

pub fn run(seed: u64, random_pairs: usize, max_digits: usize) -> Result<SelftestReport, SelftestError> {
    let pools = WORKER_COUNTS
        .iter()
        .map(|&w| ParallelSubtractor::new(w))
        .collect::<Result<Vec<_>, _>>()?;
    let mut report = SelftestReport::default();

    for (a, b) in directed_pairs() {
        check_pair(&a, &b, &pools)?;
        report.pairs_checked += 1;
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..random_pairs {
        let da = 1 + (rng.next_u64() % max_digits as u64) as usize;
        let db = 1 + (rng.next_u64() % da as u64) as usize;
        let (a, b) = gen_ordered_pair(da, db, &mut rng);
        check_pair(&a, &b, &pools)?;
        report.pairs_checked += 1;
    }

    for limbs in [2usize, 4, 16, 256] {
        let mut top = vec![0u64; limbs];
        top[0] = 1;
        let a = Magnitude::from_limbs(top)?;
        let b = Magnitude::from_limbs(vec![1u64])?;
        for pool in &pools {
            let (r, stats) = pool.subtract(&a, &b)?;
            if stats.iterations != limbs || format_magnitude(&r) != "9".repeat(18 * (limbs - 1)) {
                return Err(SelftestError::IterationBound {
                    limbs,
                    got: stats.iterations,
                    want: limbs,
                });
            }
        }
        report.bound_cases += 1;
    }
    Ok(report)
}
