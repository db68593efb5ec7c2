//! Seeded benchmark datasets.
//!
//! All generators draw from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`, so a spec reproduces the same bytes everywhere.
//!
//! * `n_levels == 0`: uniform points in `[0, 1)^M`.
//! * `n_levels == 1`: points on the simplex `Σ x_i = 1`, all mutually
//!   non-dominated.
//! * `n_levels == L >= 2`: `L` sheets. Sheet 0 is a simplex sample; every
//!   point of sheet `k` is a point of sheet `k - 1` plus a positive vector of
//!   total `1 / L`. Each point is therefore dominated by a chain of `k`
//!   points below it, and no point of a sheet with a larger total can
//!   dominate it, which pins its rank to exactly `k`.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::point::{build_point_set, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DatasetSpec {
    pub n_points: usize,
    pub n_objectives: usize,
    /// 0 for an unconstrained uniform cube.
    pub n_levels: usize,
    pub seed: u64,
}

impl DatasetSpec {
    pub fn new(n_points: usize, n_objectives: usize, n_levels: usize, seed: u64) -> Self {
        Self {
            n_points,
            n_objectives,
            n_levels,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_objectives < 2 {
            return Err(Error::TooFewObjectives(self.n_objectives));
        }
        if self.n_points == 0 {
            return Err(Error::InfeasibleSpec("n_points must be positive".into()));
        }
        if self.n_points < self.n_levels {
            return Err(Error::InfeasibleSpec(format!(
                "{} levels need at least as many points, got {}",
                self.n_levels, self.n_points
            )));
        }
        Ok(())
    }
}

impl fmt::Display for DatasetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N={} M={} L={} seed={}",
            self.n_points, self.n_objectives, self.n_levels, self.seed
        )
    }
}

/// Dispatches on `n_levels`.
pub fn generate(spec: &DatasetSpec) -> Result<PointSet> {
    match spec.n_levels {
        0 => generate_uniform(spec),
        1 => generate_hyperplane(spec),
        _ => generate_leveled(spec),
    }
}

pub fn generate_uniform(spec: &DatasetSpec) -> Result<PointSet> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = spec.n_objectives;
    let mut rows = Rows::new(spec.n_points);
    while rows.len() < spec.n_points {
        let p: Vec<f64> = (0..m).map(|_| rng.random::<f64>()).collect();
        rows.push(p);
    }
    rows.finish()
}

pub fn generate_hyperplane(spec: &DatasetSpec) -> Result<PointSet> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows = Rows::new(spec.n_points);
    while rows.len() < spec.n_points {
        rows.push(simplex_point(&mut rng, spec.n_objectives, 1.0));
    }
    rows.finish()
}

pub fn generate_leveled(spec: &DatasetSpec) -> Result<PointSet> {
    spec.validate()?;
    let levels = spec.n_levels;
    if levels <= 1 {
        return generate_hyperplane(spec);
    }
    let m = spec.n_objectives;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let step = 1.0 / levels as f64;
    let size = |k: usize| spec.n_points / levels + usize::from(k < spec.n_points % levels);

    let mut rows = Rows::new(spec.n_points);
    let mut previous: Vec<Vec<f64>> = Vec::new();
    for k in 0..levels {
        let mut sheet = Vec::with_capacity(size(k));
        while sheet.len() < size(k) {
            let p = if k == 0 {
                simplex_point(&mut rng, m, 1.0)
            } else {
                let parent = &previous[sheet.len() % previous.len()];
                let shift = simplex_point(&mut rng, m, step);
                parent.iter().zip(&shift).map(|(a, b)| a + b).collect()
            };
            if rows.push(p.clone()) {
                sheet.push(p);
            }
        }
        previous = sheet;
    }
    rows.finish()
}

/// A point with positive coordinates summing to `total` (exponential
/// spacings normalized).
fn simplex_point(rng: &mut ChaCha8Rng, m: usize, total: f64) -> Vec<f64> {
    loop {
        let mut p: Vec<f64> = (0..m).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
        let sum: f64 = p.iter().sum();
        if sum > 0.0 && p.iter().all(|&x| x > 0.0) {
            for x in &mut p {
                *x *= total / sum;
            }
            return p;
        }
    }
}

/// Collects rows, rejecting exact duplicates.
struct Rows {
    rows: Vec<Vec<f64>>,
    seen: HashSet<Vec<u64>>,
}

impl Rows {
    fn new(capacity: usize) -> Self {
        Self {
            rows: Vec::with_capacity(capacity),
            seen: HashSet::with_capacity(capacity),
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    fn push(&mut self, p: Vec<f64>) -> bool {
        let key = p.iter().map(|v| (v + 0.0).to_bits()).collect();
        if self.seen.insert(key) {
            self.rows.push(p);
            true
        } else {
            false
        }
    }

    fn finish(self) -> Result<PointSet> {
        build_point_set(&self.rows)
    }
}

/// Writes the text dataset format: a `N M L seed` header followed by one
/// line per point with values at 17 significant digits.
pub fn write_dataset<W: Write>(mut out: W, spec: &DatasetSpec, points: &PointSet) -> Result<()> {
    writeln!(
        out,
        "{} {} {} {}",
        points.original_len(),
        points.dim(),
        spec.n_levels,
        spec.seed
    )?;
    let mut line = String::new();
    for i in 0..points.original_len() {
        line.clear();
        for (k, v) in points.original(i).iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            line.push_str(&format!("{v:.16e}"));
        }
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads the format written by [`write_dataset`]. Returns the header and the
/// rows in file order.
pub fn read_dataset<R: BufRead>(input: R) -> Result<(DatasetSpec, Vec<Vec<f64>>)> {
    let mut lines = input.lines().enumerate();
    let parse_err = |line: usize, message: String| Error::Parse {
        line: line + 1,
        message,
    };

    let (_, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing header".into()))?;
    let header = header?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(parse_err(
            0,
            format!("expected `N M L seed`, got `{header}`"),
        ));
    }
    let int = |s: &str| {
        s.parse::<u64>()
            .map_err(|e| parse_err(0, format!("bad header field `{s}`: {e}")))
    };
    let spec = DatasetSpec {
        n_points: int(fields[0])? as usize,
        n_objectives: int(fields[1])? as usize,
        n_levels: int(fields[2])? as usize,
        seed: int(fields[3])?,
    };

    let mut rows = Vec::with_capacity(spec.n_points);
    for (no, line) in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|s| {
                s.parse::<f64>()
                    .map_err(|e| parse_err(no, format!("bad value `{s}`: {e}")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != spec.n_objectives {
            return Err(parse_err(
                no,
                format!("expected {} values, got {}", spec.n_objectives, row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != spec.n_points {
        return Err(parse_err(
            0,
            format!(
                "header promises {} points, found {}",
                spec.n_points,
                rows.len()
            ),
        ));
    }
    Ok((spec, rows))
}
