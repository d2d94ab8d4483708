//! Timed runs of both kernels on generated operands.
//!
//! Only the limb subtraction is timed; parsing, formatting, hashing and
//! verification happen outside the measured window.

use std::fmt;
use std::io::{self, Write};
use std::time::Instant;

use bigsub_core::oracle::subtract_digitwise;
use bigsub_core::{
    format_magnitude, parse_magnitude, subtract_sequential, Magnitude, ParallelSubtractor, SubError,
};
use thiserror::Error;

use crate::operands::gen_ordered_pair;
use crate::rng::SplitMix64;

/// Operand lengths of the standard suite.
pub const DEFAULT_DIGITS: [usize; 4] = [20_000, 100_000, 500_000, 1_000_000];
pub const DEFAULT_RUNS: usize = 5;

pub const CSV_HEADER: &str = "algo,digits,workers,run,seconds,iterations,result_hash";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub digits_a: usize,
    pub digits_b: usize,
    pub runs: usize,
    pub workers: usize,
    pub seed: u64,
}

impl BenchCase {
    pub fn square(digits: usize, runs: usize, workers: usize, seed: u64) -> Self {
        Self {
            digits_a: digits,
            digits_b: digits,
            runs,
            workers,
            seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Sequential,
    Parallel,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Sequential => "sequential",
            Algo::Parallel => "parallel",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub algo: Algo,
    pub digits: usize,
    pub workers: usize,
    pub run_index: usize,
    pub seconds: f64,
    /// Passes used by the parallel kernel; 0 for sequential rows.
    pub iterations: usize,
    pub result_hash: Option<String>,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.9},{},{}",
            self.algo,
            self.digits,
            self.workers,
            self.run_index,
            self.seconds,
            self.iterations,
            self.result_hash.as_deref().unwrap_or("")
        )
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BenchOptions {
    pub verify: bool,
    pub emit_hash: bool,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{algo} result disagrees with the digit-wise oracle (seed {seed}, {digits_a}/{digits_b} digits)")]
    VerificationFailure {
        algo: Algo,
        seed: u64,
        digits_a: usize,
        digits_b: usize,
    },
    #[error("invalid bench case: {0}")]
    InvalidCase(&'static str),
    #[error(transparent)]
    Subtraction(#[from] SubError),
}

/// 64-bit FNV-1a over `bytes`, as 16 lowercase hex characters.
pub fn fnv1a_hex(bytes: &[u8]) -> String {
    let hash = bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    });
    format!("{hash:016x}")
}

/// Runs `case.runs` sequential then `case.runs` parallel subtractions of one
/// generated operand pair.
pub fn run_bench(case: &BenchCase, opts: BenchOptions) -> Result<Vec<BenchRow>, BenchError> {
    if case.runs == 0 {
        return Err(BenchError::InvalidCase("runs must be at least 1"));
    }
    if case.digits_a == 0 || case.digits_b == 0 {
        return Err(BenchError::InvalidCase("operands need at least one digit"));
    }
    let subtractor = ParallelSubtractor::new(case.workers)?;
    let mut rng = SplitMix64::new(case.seed);
    let (a_str, b_str) = gen_ordered_pair(case.digits_a, case.digits_b, &mut rng);
    let a: Magnitude = parse_magnitude(&a_str)?;
    let b: Magnitude = parse_magnitude(&b_str)?;
    let expected = if opts.verify {
        Some(subtract_digitwise(&a_str, &b_str)?)
    } else {
        None
    };

    let mut rows = Vec::with_capacity(2 * case.runs);
    for algo in [Algo::Sequential, Algo::Parallel] {
        for run_index in 0..case.runs {
            let start = Instant::now();
            let (result, iterations) = match algo {
                Algo::Sequential => (subtract_sequential(&a, &b)?, 0),
                Algo::Parallel => {
                    let (r, stats) = subtractor.subtract(&a, &b)?;
                    (r, stats.iterations)
                }
            };
            let seconds = start.elapsed().as_secs_f64();

            let needs_text = expected.is_some() || opts.emit_hash;
            let text = needs_text.then(|| format_magnitude(&result));
            if let (Some(want), Some(got)) = (&expected, &text) {
                if want != got {
                    return Err(BenchError::VerificationFailure {
                        algo,
                        seed: case.seed,
                        digits_a: case.digits_a,
                        digits_b: case.digits_b,
                    });
                }
            }
            rows.push(BenchRow {
                algo,
                digits: case.digits_a.max(case.digits_b),
                workers: match algo {
                    Algo::Sequential => 1,
                    Algo::Parallel => case.workers,
                },
                run_index,
                seconds,
                iterations,
                result_hash: text.filter(|_| opts.emit_hash).map(|t| fnv1a_hex(t.as_bytes())),
            });
        }
    }
    Ok(rows)
}

pub fn write_csv<'a>(mut out: impl Write, rows: impl IntoIterator<Item = &'a BenchRow>) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.csv_line())?;
    }
    Ok(())
}

pub fn median(values: &mut [f64]) -> f64 {
    assert!(!values.is_empty(), "median of nothing");
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    }
}

/// Per-length summary: median sequential and parallel seconds and their ratio.
pub fn summarize(rows: &[BenchRow]) -> Vec<(usize, f64, f64, f64)> {
    let mut digits: Vec<usize> = rows.iter().map(|r| r.digits).collect();
    digits.dedup();
    digits
        .into_iter()
        .map(|d| {
            let times = |algo| -> Vec<f64> {
                rows.iter()
                    .filter(|r| r.digits == d && r.algo == algo)
                    .map(|r| r.seconds)
                    .collect()
            };
            let seq = median(&mut times(Algo::Sequential));
            let par = median(&mut times(Algo::Parallel));
            (d, seq, par, seq / par)
        })
        .collect()
}
