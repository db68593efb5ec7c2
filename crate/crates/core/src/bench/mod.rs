//! Measurement harness: the dataset grid, ratio summaries, and per-subproblem
//! replay timing.

mod grid;
mod record;

pub use grid::{
    grid_sizes, read_timing_csv, run_grid, run_grid_with, summarize_ratios, write_summary_csv,
    write_timing_csv, GridConfig, SummaryRow, TimingRow, TIMING_HEADER,
};
pub use record::{
    compare_subproblem, record_subproblems, time_subproblem, write_subproblem_csv, Recording,
    Replay, Solver, SubproblemRecord, SubproblemTiming, TimedReplay, SUBPROBLEM_HEADER,
};

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::bos::sort_bos;
use crate::dc::sort_dc;
use crate::error::Error;
use crate::hybrid::{sort_hybrid, SwitchPolicy};
use crate::oracle::sort_naive;
use crate::point::{PointSet, RankAssignment};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Naive,
    Bos,
    Dc,
    Hybrid,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Naive,
        Algorithm::Bos,
        Algorithm::Dc,
        Algorithm::Hybrid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Naive => "naive",
            Algorithm::Bos => "bos",
            Algorithm::Dc => "dc",
            Algorithm::Hybrid => "hybrid",
        }
    }

    pub fn run(self, points: &PointSet, policy: &SwitchPolicy) -> RankAssignment {
        match self {
            Algorithm::Naive => sort_naive(points),
            Algorithm::Bos => sort_bos(points),
            Algorithm::Dc => sort_dc(points),
            Algorithm::Hybrid => sort_hybrid(points, policy),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("unknown algorithm `{s}`"),
            })
    }
}

/// Runs `algo` once and returns its wall time and ranks.
pub fn time_algorithm(
    algo: Algorithm,
    points: &PointSet,
    policy: &SwitchPolicy,
) -> (Duration, RankAssignment) {
    let start = Instant::now();
    let ranks = algo.run(points, policy);
    (start.elapsed(), ranks)
}

/// Median of `k` timed runs, after one untimed warm-up run.
pub fn median_time(
    algo: Algorithm,
    points: &PointSet,
    policy: &SwitchPolicy,
    k: usize,
) -> Duration {
    std::hint::black_box(algo.run(points, policy));
    let mut times: Vec<Duration> = (0..k.max(1))
        .map(|_| time_algorithm(algo, points, policy).0)
        .collect();
    times.sort();
    times[times.len() / 2]
}

/// Derives a dataset seed from grid coordinates with the SplitMix64 finalizer.
pub fn derive_seed(n: usize, m: usize, levels: usize, trial: usize) -> u64 {
    [n, m, levels, trial]
        .into_iter()
        .fold(0x6a09_e667_f3bc_c908u64, |h, x| splitmix64(h ^ x as u64))
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
