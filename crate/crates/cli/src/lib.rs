//! Benchmark harness and command-line plumbing around `bigsub-core`.

pub mod bench;
pub mod operands;
pub mod rng;
pub mod selftest;

pub use bench::{run_bench, Algo, BenchCase, BenchError, BenchOptions, BenchRow};
pub use operands::{gen_operand, gen_ordered_pair};
pub use rng::SplitMix64;
