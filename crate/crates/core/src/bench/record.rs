use std::io::Write;
use std::time::{Duration, Instant};

use crate::bos::{bos_helper_a, bos_helper_b};
use crate::dc::{self, Decision, NoHook, RecursionHook, Subproblem, SubproblemKind, WorkingState};
use crate::error::{Error, Result};
use crate::point::PointSet;
use crate::sorted::SortedPoints;

pub const SUBPROBLEM_HEADER: &str = "n,m,kind,t_dc_ns,t_bos_ns,rel_gap";

/// A divide-and-conquer subproblem captured on entry.
///
/// Indices are positions in the recording's [`SortedPoints`]. For kind A,
/// `left` is the set and `right` is empty. `bounds` holds the ranks of
/// `left` then `right` at capture time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubproblemRecord {
    pub kind: SubproblemKind,
    pub m: usize,
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub bounds: Vec<usize>,
}

impl SubproblemRecord {
    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Points whose ranks the subproblem determines.
    pub fn targets(&self) -> &[u32] {
        match self.kind {
            SubproblemKind::A => &self.left,
            SubproblemKind::B => &self.right,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Recording {
    pub points: SortedPoints,
    pub records: Vec<SubproblemRecord>,
    /// Final ranks by sorted position.
    pub final_ranks: Vec<usize>,
}

#[derive(Default)]
struct Recorder {
    records: Vec<SubproblemRecord>,
}

impl RecursionHook for Recorder {
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        _: &SortedPoints,
        ranks: &mut [usize],
    ) -> Decision {
        if m > 2 {
            let (left, right): (&[usize], &[usize]) = match sub {
                Subproblem::A { set } => (set, &[]),
                Subproblem::B { left, right } => (left, right),
            };
            self.records.push(SubproblemRecord {
                kind: sub.kind(),
                m,
                left: left.iter().map(|&i| i as u32).collect(),
                right: right.iter().map(|&i| i as u32).collect(),
                bounds: left.iter().chain(right).map(|&i| ranks[i]).collect(),
            });
        }
        Decision::Declined
    }
}

/// Runs plain divide-and-conquer, capturing every helper entry with more
/// than two active objectives.
pub fn record_subproblems(points: &PointSet) -> Recording {
    let mut state = WorkingState::new(points);
    let mut recorder = Recorder::default();
    state.solve(&mut recorder);
    Recording {
        points: state.points,
        records: recorder.records,
        final_ranks: state.ranks,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    Dc,
    Bos,
}

/// A record copied into its own compact storage so it can be solved in
/// isolation, repeatedly.
#[derive(Debug, Clone)]
pub struct Replay {
    kind: SubproblemKind,
    m: usize,
    points: SortedPoints,
    left: Vec<usize>,
    right: Vec<usize>,
    bounds: Vec<usize>,
}

impl Replay {
    pub fn new(recording: &Recording, record: &SubproblemRecord) -> Self {
        let dim = recording.points.dim();
        // Merge by global position so local positions stay lexicographic.
        let mut tagged: Vec<(u32, bool, usize)> = Vec::with_capacity(record.size());
        for (k, &g) in record.left.iter().enumerate() {
            tagged.push((g, true, record.bounds[k]));
        }
        for (k, &g) in record.right.iter().enumerate() {
            tagged.push((g, false, record.bounds[record.left.len() + k]));
        }
        tagged.sort_unstable_by_key(|t| t.0);

        let mut values = Vec::with_capacity(tagged.len() * dim);
        let (mut left, mut right, mut bounds) = (Vec::new(), Vec::new(), Vec::new());
        for (local, &(g, is_left, b)) in tagged.iter().enumerate() {
            values.extend_from_slice(recording.points.point(g as usize));
            if is_left {
                left.push(local);
            } else {
                right.push(local);
            }
            bounds.push(b);
        }
        Self {
            kind: record.kind,
            m: record.m,
            points: SortedPoints::from_sorted_rows(values, dim),
            left,
            right,
            bounds,
        }
    }

    pub fn solve(&self, solver: Solver, ranks: &mut [usize]) {
        ranks.copy_from_slice(&self.bounds);
        match (self.kind, solver) {
            (SubproblemKind::A, Solver::Dc) => {
                dc::helper_a(&self.points, &self.left, self.m, ranks, NoHook)
            }
            (SubproblemKind::A, Solver::Bos) => {
                bos_helper_a(&self.points, &self.left, self.m, ranks)
            }
            (SubproblemKind::B, Solver::Dc) => {
                dc::helper_b(&self.points, &self.left, &self.right, self.m, ranks, NoHook)
            }
            (SubproblemKind::B, Solver::Bos) => {
                bos_helper_b(&self.points, &self.left, &self.right, self.m, ranks)
            }
        }
    }

    /// Ranks of the target points, in the record's target order.
    pub fn target_ranks(&self, ranks: &[usize]) -> Vec<usize> {
        match self.kind {
            SubproblemKind::A => self.left.iter().map(|&i| ranks[i]).collect(),
            SubproblemKind::B => self.right.iter().map(|&i| ranks[i]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimedReplay {
    /// Median time of one solve.
    pub time: Duration,
    /// Final ranks of the record's targets.
    pub ranks: Vec<usize>,
}

/// Smallest batch time worth reading off the clock.
const MIN_BATCH: Duration = Duration::from_micros(20);

/// Times `solver` on the record: median over `trials` batches, each batch
/// long enough for the clock and starting every solve from fresh bounds.
pub fn time_subproblem(replay: &Replay, solver: Solver, trials: usize) -> TimedReplay {
    let mut ranks = vec![0; replay.len()];
    let start = Instant::now();
    replay.solve(solver, &mut ranks);
    let single = start.elapsed().max(Duration::from_nanos(1));
    let reps = (MIN_BATCH.as_nanos() / single.as_nanos()).clamp(1, 10_000) as u32;

    let mut samples: Vec<Duration> = (0..trials.max(1))
        .map(|_| {
            let start = Instant::now();
            for _ in 0..reps {
                replay.solve(solver, &mut ranks);
                std::hint::black_box(&ranks);
            }
            start.elapsed() / reps
        })
        .collect();
    samples.sort();
    TimedReplay {
        time: samples[samples.len() / 2],
        ranks: replay.target_ranks(&ranks),
    }
}

/// One row of the per-subproblem scatter.
#[derive(Debug, Clone, PartialEq)]
pub struct SubproblemTiming {
    pub n: usize,
    pub m: usize,
    pub kind: SubproblemKind,
    pub t_dc_ns: u64,
    pub t_bos_ns: u64,
    /// `(t_bos − t_dc) / max(t_bos, t_dc)`; negative when Best Order Sort wins.
    pub rel_gap: f64,
}

/// Times both solvers on record `index`, failing if their ranks differ.
pub fn compare_subproblem(
    recording: &Recording,
    index: usize,
    trials: usize,
) -> Result<SubproblemTiming> {
    let record = &recording.records[index];
    let replay = Replay::new(recording, record);
    let dc = time_subproblem(&replay, Solver::Dc, trials);
    let bos = time_subproblem(&replay, Solver::Bos, trials);
    if dc.ranks != bos.ranks {
        return Err(Error::ReplayMismatch { index });
    }
    let t_dc = dc.time.as_nanos() as u64;
    let t_bos = bos.time.as_nanos() as u64;
    let top = t_dc.max(t_bos).max(1) as f64;
    Ok(SubproblemTiming {
        n: record.size(),
        m: record.m,
        kind: record.kind,
        t_dc_ns: t_dc,
        t_bos_ns: t_bos,
        rel_gap: (t_bos as f64 - t_dc as f64) / top,
    })
}

pub fn write_subproblem_csv<W: Write>(mut out: W, rows: &[SubproblemTiming]) -> Result<()> {
    writeln!(out, "{SUBPROBLEM_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.m,
            r.kind.as_str(),
            r.t_dc_ns,
            r.t_bos_ns,
            r.rel_gap
        )?;
    }
    out.flush()?;
    Ok(())
}
