use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufWriter, Write};
use std::path::PathBuf;

use crate::bench::{derive_seed, time_algorithm, Algorithm};
use crate::datagen::{generate, write_dataset, DatasetSpec};
use crate::error::{Error, Result};
use crate::hybrid::SwitchPolicy;

pub const TIMING_HEADER: &str = "N,M,L,trial,algo,time_ns,checksum";

/// `⌊10^(n/4)⌋` for every `n` in `lo..=hi`, computed exactly as the
/// integer fourth root of `10^n`.
pub fn grid_sizes(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi)
        .map(|n| {
            let target = 10u128.pow(n);
            let mut k = 10f64.powf(n as f64 / 4.0) as u128;
            while (k + 1).pow(4) <= target {
                k += 1;
            }
            while k.pow(4) > target {
                k -= 1;
            }
            k as usize
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct GridConfig {
    pub sizes: Vec<usize>,
    pub objectives: Vec<usize>,
    pub levels: Vec<usize>,
    pub trials: usize,
    pub algorithms: Vec<Algorithm>,
    pub policy: SwitchPolicy,
    /// When set, every generated dataset is also written here.
    pub persist: Option<PathBuf>,
}

impl Default for GridConfig {
    /// The desk-scale grid: N up to 10^5 and M up to 15.
    fn default() -> Self {
        Self {
            sizes: grid_sizes(8, 20),
            objectives: vec![3, 5, 7, 10, 15],
            levels: vec![1, 2, 3, 5, 10, 20],
            trials: 10,
            algorithms: vec![Algorithm::Bos, Algorithm::Dc, Algorithm::Hybrid],
            policy: SwitchPolicy::default(),
            persist: None,
        }
    }
}

impl GridConfig {
    /// The full grid with M up to 30.
    pub fn full() -> Self {
        Self {
            objectives: vec![3, 5, 7, 10, 15, 20, 25, 30],
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimingRow {
    pub n: usize,
    pub m: usize,
    pub levels: usize,
    pub trial: usize,
    pub algo: Algorithm,
    pub time_ns: u64,
    pub checksum: u64,
}

pub fn run_grid(config: &GridConfig) -> Result<Vec<TimingRow>> {
    run_grid_with(config, |_| {})
}

/// Like [`run_grid`], reporting each row once its trial passes the
/// cross-algorithm checksum comparison.
pub fn run_grid_with(
    config: &GridConfig,
    mut on_row: impl FnMut(&TimingRow),
) -> Result<Vec<TimingRow>> {
    let mut rows = Vec::new();
    for &n in &config.sizes {
        for &m in &config.objectives {
            for &levels in &config.levels {
                for trial in 0..config.trials {
                    let spec = DatasetSpec::new(n, m, levels, derive_seed(n, m, levels, trial));
                    let points = generate(&spec)?;
                    if let Some(dir) = &config.persist {
                        let path = dir.join(format!("dataset_{n}_{m}_{levels}_{trial}.txt"));
                        write_dataset(BufWriter::new(File::create(path)?), &spec, &points)?;
                    }
                    if trial == 0 {
                        for &algo in &config.algorithms {
                            std::hint::black_box(algo.run(&points, &config.policy));
                        }
                    }
                    let mut trial_rows: Vec<TimingRow> =
                        Vec::with_capacity(config.algorithms.len());
                    for &algo in &config.algorithms {
                        let (elapsed, ranks) = time_algorithm(algo, &points, &config.policy);
                        let checksum = ranks.checksum();
                        if let Some(first) = trial_rows.first() {
                            if first.checksum != checksum {
                                return Err(Error::CorrectnessFailure {
                                    spec,
                                    first: first.algo.to_string(),
                                    second: algo.to_string(),
                                });
                            }
                        }
                        trial_rows.push(TimingRow {
                            n,
                            m,
                            levels,
                            trial,
                            algo,
                            time_ns: elapsed.as_nanos() as u64,
                            checksum,
                        });
                    }
                    for row in &trial_rows {
                        on_row(row);
                    }
                    rows.extend(trial_rows);
                }
            }
        }
    }
    Ok(rows)
}

pub fn write_timing_csv<W: Write>(mut out: W, rows: &[TimingRow]) -> Result<()> {
    writeln!(out, "{TIMING_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n, r.m, r.levels, r.trial, r.algo, r.time_ns, r.checksum
        )?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_timing_csv<R: BufRead>(input: R) -> Result<Vec<TimingRow>> {
    let mut rows = Vec::new();
    for (no, line) in input.lines().enumerate() {
        let line = line?;
        let err = |message: String| Error::Parse {
            line: no + 1,
            message,
        };
        if no == 0 {
            if line != TIMING_HEADER {
                return Err(err(format!("expected header `{TIMING_HEADER}`")));
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(err(format!("expected 7 fields, got {}", f.len())));
        }
        let int = |s: &str| s.parse::<u64>().map_err(|e| err(format!("`{s}`: {e}")));
        rows.push(TimingRow {
            n: int(f[0])? as usize,
            m: int(f[1])? as usize,
            levels: int(f[2])? as usize,
            trial: int(f[3])? as usize,
            algo: f[4]
                .parse()
                .map_err(|_| err(format!("unknown algorithm `{}`", f[4])))?,
            time_ns: int(f[5])?,
            checksum: int(f[6])?,
        });
    }
    Ok(rows)
}

/// One bar of the ratio plots: an algorithm's times in one cell divided by
/// the cell's mean divide-and-conquer time.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub m: usize,
    pub levels: usize,
    pub algo: Algorithm,
    pub avg: f64,
    pub min: f64,
    pub max: f64,
}

/// Ratios per `(N, M, L)` cell, cells in first-seen order and algorithms in
/// [`Algorithm::ALL`] order.
pub fn summarize_ratios(rows: &[TimingRow]) -> Result<Vec<SummaryRow>> {
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    let mut times: BTreeMap<(usize, usize, usize), BTreeMap<Algorithm, Vec<f64>>> = BTreeMap::new();
    for r in rows {
        let key = (r.n, r.m, r.levels);
        if !times.contains_key(&key) {
            cells.push(key);
        }
        times
            .entry(key)
            .or_default()
            .entry(r.algo)
            .or_default()
            .push(r.time_ns as f64);
    }

    let mut out = Vec::new();
    for key @ (n, m, levels) in cells {
        let per_algo = &times[&key];
        let dc = per_algo
            .get(&Algorithm::Dc)
            .ok_or(Error::MissingCell { n, m, levels })?;
        let mean_dc = dc.iter().sum::<f64>() / dc.len() as f64;
        for (&algo, ts) in per_algo {
            let ratios: Vec<f64> = ts.iter().map(|t| t / mean_dc).collect();
            out.push(SummaryRow {
                n,
                m,
                levels,
                algo,
                avg: ratios.iter().sum::<f64>() / ratios.len() as f64,
                min: ratios.iter().copied().fold(f64::INFINITY, f64::min),
                max: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            });
        }
    }
    Ok(out)
}

pub fn write_summary_csv<W: Write>(mut out: W, rows: &[SummaryRow]) -> Result<()> {
    writeln!(out, "N,M,L,algo,avg,min,max")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n, r.m, r.levels, r.algo, r.avg, r.min, r.max
        )?;
    }
    out.flush()?;
    Ok(())
}
