use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use bigsub_cli::bench::{summarize, write_csv, DEFAULT_DIGITS, DEFAULT_RUNS};
use bigsub_cli::{run_bench, selftest, BenchCase, BenchOptions};
use bigsub_core::oracle::subtract_digitwise;
use bigsub_core::{format_magnitude, parse_magnitude, subtract_sequential, Magnitude, ParallelSubtractor, SubError};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bigsub", version, about = "Big-integer decimal subtraction kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a - b. Operands are digit strings, or @path to read one from a file.
    Sub {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        parallel: bool,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        /// Check the result against the digit-wise oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Time both kernels on generated operands and emit CSV.
    Bench {
        /// Comma-separated operand lengths in digits.
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_DIGITS)]
        digits: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_RUNS)]
        runs: usize,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write CSV here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        emit_hash: bool,
    },
    /// Check both kernels against the oracle and the pass-count bounds.
    Selftest {
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 2_000)]
        pairs: usize,
        #[arg(long, default_value_t = 2_000)]
        max_digits: usize,
    },
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn read_operand(arg: &str) -> anyhow::Result<String> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok(arg.to_string());
    };
    let mut text = fs::read_to_string(path).with_context(|| format!("reading operand file {path}"))?;
    if text.ends_with('\n') {
        text.pop();
        if text.ends_with('\r') {
            text.pop();
        }
    }
    Ok(text)
}

fn sub(a: &str, b: &str, parallel: bool, workers: usize, verify: bool) -> anyhow::Result<()> {
    let (a_text, b_text) = (read_operand(a)?, read_operand(b)?);
    let a: Magnitude = parse_magnitude(&a_text).context("operand a")?;
    let b: Magnitude = parse_magnitude(&b_text).context("operand b")?;
    let result = if parallel {
        ParallelSubtractor::new(workers)?.subtract(&a, &b)?.0
    } else {
        subtract_sequential(&a, &b)?
    };
    let text = format_magnitude(&result);
    if verify && subtract_digitwise(&a_text, &b_text)? != text {
        bail!("result disagrees with the digit-wise oracle");
    }
    println!("{text}");
    Ok(())
}

fn bench_cmd(
    digits: &[usize],
    runs: usize,
    workers: usize,
    seed: u64,
    csv: Option<PathBuf>,
    opts: BenchOptions,
) -> anyhow::Result<()> {
    let mut rows = Vec::new();
    for &d in digits {
        rows.extend(run_bench(&BenchCase::square(d, runs, workers, seed), opts)?);
    }
    match csv {
        Some(path) => {
            let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            write_csv(BufWriter::new(file), &rows)?;
        }
        None => write_csv(io::stdout().lock(), &rows)?,
    }

    let mut err = io::stderr().lock();
    writeln!(err, "{:>10}  {:>14}  {:>14}  {:>8}", "digits", "sequential s", "parallel s", "speedup")?;
    for (d, seq, par, speedup) in summarize(&rows) {
        writeln!(err, "{d:>10}  {seq:>14.6}  {par:>14.6}  {speedup:>8.2}")?;
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<SubError>() {
        Some(SubError::NegativeResult) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let outcome = match cli.command {
        Command::Sub {
            a,
            b,
            parallel,
            workers,
            verify,
        } => sub(&a, &b, parallel, workers, verify),
        Command::Bench {
            digits,
            runs,
            workers,
            seed,
            csv,
            verify,
            emit_hash,
        } => bench_cmd(&digits, runs, workers, seed, csv, BenchOptions { verify, emit_hash }),
        Command::Selftest {
            seed,
            pairs,
            max_digits,
        } => selftest::run(seed, pairs, max_digits.max(1))
            .map(|report| {
                println!(
                    "selftest ok: {} operand pairs, {} iteration-bound cases",
                    report.pairs_checked, report.bound_cases
                );
            })
            .map_err(Into::into),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
