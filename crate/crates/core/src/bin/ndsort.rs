use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ndsort::bench::{
    self, compare_subproblem, grid_sizes, record_subproblems, summarize_ratios, Algorithm,
    GridConfig,
};
use ndsort::datagen::{generate, read_dataset, write_dataset, DatasetSpec};
use ndsort::{build_point_set, DMode, SwitchPolicy};

#[derive(Parser)]
#[command(
    name = "ndsort",
    about = "Non-dominated sorting and its benchmark harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded dataset file.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// 0 for a uniform cube, otherwise the exact number of levels.
        #[arg(long, default_value_t = 0)]
        levels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rank a dataset file; prints one rank per line in input order.
    Sort {
        #[arg(long, default_value = "hybrid")]
        algo: Algorithm,
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Time algorithms over the dataset grid.
    Grid {
        /// Inclusive exponent range; N = floor(10^(n/4)).
        #[arg(long, default_value = "8:20")]
        n_range: String,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,10,15")]
        m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,5,10,20")]
        levels: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, value_delimiter = ',', default_value = "bos,dc,hybrid")]
        algos: Vec<Algorithm>,
        /// Use M in {3, 5, 7, 10, 15, 20, 25, 30} regardless of --m.
        #[arg(long)]
        full: bool,
        /// Also write every generated dataset into this directory.
        #[arg(long)]
        persist: Option<PathBuf>,
        /// Also write the per-cell ratio summary.
        #[arg(long)]
        summary: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Record divide-and-conquer subproblems and time both solvers on each.
    Record {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
}

#[derive(Args)]
struct PolicyArgs {
    /// Never hand subproblems to Best Order Sort.
    #[arg(long)]
    switch_off: bool,
    #[arg(long)]
    c_left: Option<f64>,
    #[arg(long)]
    c_right: Option<f64>,
    #[arg(long)]
    exponent: Option<f64>,
    #[arg(long)]
    offset: Option<f64>,
    /// `m` (subproblem objectives) or `M` (dataset objectives).
    #[arg(long, default_value = "m")]
    d_mode: DMode,
}

impl PolicyArgs {
    fn policy(&self) -> ndsort::Result<SwitchPolicy> {
        let d = SwitchPolicy::default();
        let policy = SwitchPolicy {
            c_left: self.c_left.unwrap_or(d.c_left),
            c_right: self.c_right.unwrap_or(d.c_right),
            exponent: self.exponent.unwrap_or(d.exponent),
            offset: self.offset.unwrap_or(d.offset),
            d_mode: self.d_mode,
            enabled: !self.switch_off,
        };
        policy.validate()?;
        Ok(policy)
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: u32 = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: u32 = hi.parse().map_err(|e| format!("{e}"))?;
    if lo == 0 || lo > hi || hi > 36 {
        return Err(format!("bad range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn read_points(path: &PathBuf) -> ndsort::Result<ndsort::PointSet> {
    let (_, rows) = read_dataset(BufReader::new(File::open(path)?))?;
    build_point_set(&rows)
}

fn run(cli: Cli) -> Result<(), Box<dyn std::error::Error>> {
    match cli.command {
        Command::Generate {
            n,
            m,
            levels,
            seed,
            out,
        } => {
            let spec = DatasetSpec::new(n, m, levels, seed);
            let points = generate(&spec)?;
            write_dataset(BufWriter::new(File::create(out)?), &spec, &points)?;
        }
        Command::Sort {
            algo,
            input,
            policy,
        } => {
            let policy = policy.policy()?;
            let points = read_points(&input)?;
            let ranks = algo.run(&points, &policy);
            let mut out = BufWriter::new(io::stdout().lock());
            for r in ranks.iter() {
                writeln!(out, "{r}")?;
            }
            out.flush()?;
        }
        Command::Grid {
            n_range,
            m,
            levels,
            trials,
            algos,
            full,
            persist,
            summary,
            out,
            policy,
        } => {
            let (lo, hi) = parse_range(&n_range)?;
            let config = GridConfig {
                sizes: grid_sizes(lo, hi),
                objectives: if full {
                    GridConfig::full().objectives
                } else {
                    m
                },
                levels,
                trials,
                algorithms: algos,
                policy: policy.policy()?,
                persist,
            };
            let rows = bench::run_grid_with(&config, |r| {
                eprintln!(
                    "N={} M={} L={} trial={} {} {} ns",
                    r.n, r.m, r.levels, r.trial, r.algo, r.time_ns
                );
            })?;
            bench::write_timing_csv(BufWriter::new(File::create(out)?), &rows)?;
            if let Some(path) = summary {
                let ratios = summarize_ratios(&rows)?;
                bench::write_summary_csv(BufWriter::new(File::create(path)?), &ratios)?;
            }
        }
        Command::Record { input, out, trials } => {
            let points = read_points(&input)?;
            let recording = record_subproblems(&points);
            eprintln!("{} subproblems recorded", recording.records.len());
            let rows = (0..recording.records.len())
                .map(|i| compare_subproblem(&recording, i, trials))
                .collect::<ndsort::Result<Vec<_>>>()?;
            bench::write_subproblem_csv(BufWriter::new(File::create(out)?), &rows)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
