//! Divide-and-conquer non-dominated sorting.
//!
//! Every point carries a lower bound on its rank, raised as comparisons are
//! made. [`helper_a`] finalizes a set on its first `m` objectives; it splits
//! on the median of objective `m` and recurses. [`helper_b`] raises the
//! ranks of one set using another, finalized set. Two objectives are
//! handled by the sweeps [`sweep_a`] and [`sweep_b`].
//!
//! Point sets are ascending slices of positions into a [`SortedPoints`].
//! Every helper leaves the slices it was given in ascending order, so
//! lexicographic order is restored on return without re-sorting.

mod median;
mod tree;

pub use median::split_by_median;
pub use tree::{LevelRepresentativeTree, Representative};

use median::{median_of, merge_runs, partition3};

use crate::point::{dominates_weak, PointSet, RankAssignment};
use crate::sorted::SortedPoints;

/// A subproblem about to be solved.
#[derive(Debug, Clone, Copy)]
pub enum Subproblem<'s> {
    /// Finalize the ranks of `set`.
    A { set: &'s [usize] },
    /// Raise the ranks of `right` from the finalized `left`.
    B {
        left: &'s [usize],
        right: &'s [usize],
    },
}

impl Subproblem<'_> {
    pub fn kind(&self) -> SubproblemKind {
        match self {
            Subproblem::A { .. } => SubproblemKind::A,
            Subproblem::B { .. } => SubproblemKind::B,
        }
    }

    /// Total number of points involved.
    pub fn size(&self) -> usize {
        match self {
            Subproblem::A { set } => set.len(),
            Subproblem::B { left, right } => left.len() + right.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubproblemKind {
    A,
    B,
}

impl SubproblemKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SubproblemKind::A => "A",
            SubproblemKind::B => "B",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Handled,
    Declined,
}

/// Consulted on entry to every helper call.
///
/// A hook that returns [`Decision::Handled`] must leave every point of the
/// subproblem with the ranks the helper would have produced.
pub trait RecursionHook {
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        points: &SortedPoints,
        ranks: &mut [usize],
    ) -> Decision;

    /// Called whenever the first `m` objectives of `dominator` and `target`
    /// are compared to decide whether `dominator` raises `target`.
    fn on_compare(&mut self, _dominator: usize, _target: usize, _m: usize, _ranks: &[usize]) {}
}

/// Never handles anything.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoHook;

impl RecursionHook for NoHook {
    #[inline]
    fn before(
        &mut self,
        _: Subproblem<'_>,
        _: usize,
        _: &SortedPoints,
        _: &mut [usize],
    ) -> Decision {
        Decision::Declined
    }
}

impl<H: RecursionHook + ?Sized> RecursionHook for &mut H {
    #[inline]
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        points: &SortedPoints,
        ranks: &mut [usize],
    ) -> Decision {
        (**self).before(sub, m, points, ranks)
    }

    #[inline]
    fn on_compare(&mut self, dominator: usize, target: usize, m: usize, ranks: &[usize]) {
        (**self).on_compare(dominator, target, m, ranks)
    }
}

/// One `(kind, size, m)` entry per helper entry, in call order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TraceHook {
    pub calls: Vec<(SubproblemKind, usize, usize)>,
}

impl RecursionHook for TraceHook {
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        _: &SortedPoints,
        _: &mut [usize],
    ) -> Decision {
        self.calls.push((sub.kind(), sub.size(), m));
        Decision::Declined
    }
}

/// Ranks plus the sorted storage they refer to.
#[derive(Debug, Clone)]
pub struct WorkingState {
    pub points: SortedPoints,
    pub ranks: Vec<usize>,
}

impl WorkingState {
    pub fn new(points: &PointSet) -> Self {
        let points = SortedPoints::from_point_set(points);
        let ranks = vec![0; points.len()];
        Self { points, ranks }
    }

    /// Runs the full recursion over every point on all objectives.
    pub fn solve<H: RecursionHook>(&mut self, hook: H) {
        let set: Vec<usize> = (0..self.points.len()).collect();
        let m = self.points.dim();
        Engine::new(&self.points, &mut self.ranks, hook, set).helper_a(0, self.points.len(), m);
    }
}

pub fn sort_dc(points: &PointSet) -> RankAssignment {
    sort_dc_with_hook(points, NoHook)
}

pub fn sort_dc_with_hook<H: RecursionHook>(points: &PointSet, hook: H) -> RankAssignment {
    let mut state = WorkingState::new(points);
    state.solve(hook);
    state.points.scatter(&state.ranks, points)
}

/// Finalizes `set` on the first `m` objectives. `set` must be ascending,
/// its points equal above `m`, and outside dominators already applied.
pub fn helper_a<H: RecursionHook>(
    points: &SortedPoints,
    set: &[usize],
    m: usize,
    ranks: &mut [usize],
    hook: H,
) {
    let n = set.len();
    Engine::new(points, ranks, hook, set.to_vec()).helper_a(0, n, m);
}

/// Raises `right` from the finalized `left` on the first `m` objectives.
/// Both must be ascending, and every left point must weakly dominate every
/// right point above `m`.
pub fn helper_b<H: RecursionHook>(
    points: &SortedPoints,
    left: &[usize],
    right: &[usize],
    m: usize,
    ranks: &mut [usize],
    hook: H,
) {
    let mut ids = left.to_vec();
    ids.extend_from_slice(right);
    let (l, n) = (left.len(), ids.len());
    Engine::new(points, ranks, hook, ids).helper_b(0, l, l, n, m);
}

/// Two-objective sweep finalizing an ascending `set`.
pub fn sweep_a(points: &SortedPoints, set: &[usize], ranks: &mut [usize]) {
    let n = set.len();
    Engine::new(points, ranks, NoHook, set.to_vec()).sweep_a(0, n);
}

/// Two-objective sweep raising `right` from the finalized `left`.
pub fn sweep_b(points: &SortedPoints, left: &[usize], right: &[usize], ranks: &mut [usize]) {
    let mut ids = left.to_vec();
    ids.extend_from_slice(right);
    let (l, n) = (left.len(), ids.len());
    Engine::new(points, ranks, NoHook, ids).sweep_b(0, l, l, n);
}

struct Engine<'a, H> {
    points: &'a SortedPoints,
    ranks: &'a mut [usize],
    hook: H,
    ids: Vec<usize>,
    scratch: Vec<usize>,
    values: Vec<f64>,
}

impl<'a, H: RecursionHook> Engine<'a, H> {
    fn new(points: &'a SortedPoints, ranks: &'a mut [usize], hook: H, ids: Vec<usize>) -> Self {
        let n = ids.len();
        Self {
            points,
            ranks,
            hook,
            ids,
            scratch: vec![0; n],
            values: Vec::with_capacity(n),
        }
    }

    #[inline]
    fn raise(&mut self, from: usize, to: usize, m: usize) {
        self.hook.on_compare(from, to, m, self.ranks);
        if dominates_weak(self.points.point(from), self.points.point(to), m) {
            let r = self.ranks[from] + 1;
            if self.ranks[to] < r {
                self.ranks[to] = r;
            }
        }
    }

    fn min_max(&self, from: usize, to: usize, objective: usize) -> (f64, f64) {
        self.ids[from..to]
            .iter()
            .map(|&i| self.points.value(i, objective))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            })
    }

    fn median(&mut self, ranges: &[(usize, usize)], objective: usize) -> f64 {
        self.values.clear();
        for &(from, to) in ranges {
            let points = self.points;
            self.values.extend(
                self.ids[from..to]
                    .iter()
                    .map(|&i| points.value(i, objective)),
            );
        }
        median_of(&mut self.values)
    }

    /// Returns absolute boundaries of the low/mid/high parts of `[from, to)`.
    fn split(&mut self, from: usize, to: usize, objective: usize, pivot: f64) -> (usize, usize) {
        let points = self.points;
        let (a, b) = partition3(
            &mut self.ids[from..to],
            &mut self.scratch[from..to],
            |i| points.value(i, objective),
            pivot,
        );
        (from + a, from + b)
    }

    fn merge(&mut self, from: usize, split: usize, to: usize) {
        merge_runs(
            &mut self.ids[from..to],
            split - from,
            &mut self.scratch[from..to],
        );
    }

    fn helper_a(&mut self, from: usize, to: usize, m: usize) {
        let n = to - from;
        if n < 2 {
            return;
        }
        let sub = Subproblem::A {
            set: &self.ids[from..to],
        };
        if self.hook.before(sub, m, self.points, self.ranks) == Decision::Handled {
            return;
        }
        if n == 2 {
            let (p, q) = (self.ids[from], self.ids[from + 1]);
            self.raise(p, q, m);
            return;
        }
        if m == 2 {
            self.sweep_a(from, to);
            return;
        }
        let objective = m - 1;
        let (lo, hi) = self.min_max(from, to, objective);
        if lo == hi {
            self.helper_a(from, to, m - 1);
            return;
        }
        let pivot = self.median(&[(from, to)], objective);
        let (a, b) = self.split(from, to, objective, pivot);
        self.helper_a(from, a, m);
        self.helper_b(from, a, a, b, m - 1);
        self.helper_a(a, b, m - 1);
        self.merge(from, a, b);
        self.helper_b(from, b, b, to, m - 1);
        self.helper_a(b, to, m);
        self.merge(from, b, to);
    }

    fn helper_b(&mut self, lf: usize, lt: usize, hf: usize, ht: usize, m: usize) {
        if lf == lt || hf == ht {
            return;
        }
        let sub = Subproblem::B {
            left: &self.ids[lf..lt],
            right: &self.ids[hf..ht],
        };
        if self.hook.before(sub, m, self.points, self.ranks) == Decision::Handled {
            return;
        }
        if lt - lf == 1 || ht - hf == 1 {
            for li in lf..lt {
                for hi in hf..ht {
                    let (l, h) = (self.ids[li], self.ids[hi]);
                    self.raise(l, h, m);
                }
            }
            return;
        }
        if m == 2 {
            self.sweep_b(lf, lt, hf, ht);
            return;
        }
        let objective = m - 1;
        let (_, left_max) = self.min_max(lf, lt, objective);
        let (right_min, _) = self.min_max(hf, ht, objective);
        if left_max <= right_min {
            self.helper_b(lf, lt, hf, ht, m - 1);
            return;
        }
        let pivot = self.median(&[(lf, lt), (hf, ht)], objective);
        let (la, lb) = self.split(lf, lt, objective, pivot);
        let (ha, hb) = self.split(hf, ht, objective, pivot);
        self.helper_b(lf, la, hf, ha, m);
        self.helper_b(lf, la, ha, hb, m - 1);
        self.helper_b(la, lb, ha, hb, m - 1);
        self.merge(lf, la, lb);
        self.helper_b(lf, lb, hb, ht, m - 1);
        self.helper_b(lb, lt, hb, ht, m);
        self.merge(lf, lb, lt);
        self.merge(hf, ha, hb);
        self.merge(hf, hb, ht);
    }

    fn sweep_a(&mut self, from: usize, to: usize) {
        let mut tree = LevelRepresentativeTree::new();
        for k in from..to {
            let p = self.ids[k];
            let y = self.points.value(p, 1);
            if let Some(rep) = tree.query(y) {
                self.hook.on_compare(rep.point, p, 2, self.ranks);
                if self.ranks[p] <= rep.level {
                    self.ranks[p] = rep.level + 1;
                }
            }
            tree.insert(y, self.ranks[p], p);
        }
    }

    fn sweep_b(&mut self, lf: usize, lt: usize, hf: usize, ht: usize) {
        let mut tree = LevelRepresentativeTree::new();
        let (mut li, mut hi) = (lf, hf);
        while hi < ht {
            if li < lt && self.ids[li] < self.ids[hi] {
                let l = self.ids[li];
                tree.insert(self.points.value(l, 1), self.ranks[l], l);
                li += 1;
            } else {
                let h = self.ids[hi];
                if let Some(rep) = tree.query(self.points.value(h, 1)) {
                    self.hook.on_compare(rep.point, h, 2, self.ranks);
                    if self.ranks[h] <= rep.level {
                        self.ranks[h] = rep.level + 1;
                    }
                }
                hi += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sort_naive;
    use crate::point::build_point_set;

    fn sorted(raw: &[&[f64]]) -> SortedPoints {
        SortedPoints::from_point_set(&build_point_set(raw).unwrap())
    }

    fn dc(raw: &[&[f64]]) -> Vec<usize> {
        sort_dc(&build_point_set(raw).unwrap()).into_vec()
    }

    #[test]
    fn small_sorts() {
        assert_eq!(dc(&[&[0.0, 0.0, 0.0]]), [0]);
        assert_eq!(
            dc(&[&[0.0, 0.0, 0.0], &[1.0, 1.0, 1.0], &[2.0, 2.0, 2.0]]),
            [0, 1, 2]
        );
        assert_eq!(
            dc(&[&[2.0, 2.0, 2.0], &[1.0, 1.0, 1.0], &[0.0, 0.0, 0.0]]),
            [2, 1, 0]
        );
    }

    #[test]
    fn pairwise_base_case() {
        let sp = sorted(&[&[1.0, 2.0, 3.0], &[2.0, 2.0, 3.0]]);
        let mut ranks = vec![3, 0];
        helper_a(&sp, &[0, 1], 3, &mut ranks, NoHook);
        assert_eq!(ranks, [3, 4]);
    }

    #[test]
    fn constant_objective_reduces_dimension() {
        let raw: Vec<[f64; 3]> = (0..12)
            .map(|i| [(i * 7 % 12) as f64, (i * 5 % 12) as f64, 4.0])
            .collect();
        let ps = build_point_set(&raw).unwrap();
        let sp = SortedPoints::from_point_set(&ps);
        let set: Vec<usize> = (0..sp.len()).collect();
        let mut three = vec![0; sp.len()];
        let mut two = vec![0; sp.len()];
        helper_a(&sp, &set, 3, &mut three, NoHook);
        helper_a(&sp, &set, 2, &mut two, NoHook);
        assert_eq!(three, two);
        assert_eq!(sp.scatter(&three, &ps), sort_naive(&ps));
    }

    #[test]
    fn helper_b_pairwise() {
        let sp = sorted(&[&[1.0, 1.0], &[2.0, 2.0]]);
        let mut ranks = vec![0, 0];
        helper_b(&sp, &[0], &[1], 2, &mut ranks, NoHook);
        assert_eq!(ranks, [0, 1]);

        let sp = sorted(&[&[0.0, 0.0], &[3.0, 3.0]]);
        let mut ranks = vec![0, 5];
        helper_b(&sp, &[1], &[0], 2, &mut ranks, NoHook);
        assert_eq!(ranks, [0, 5]);
    }

    #[test]
    fn sweep_a_examples() {
        let sp = sorted(&[&[1.0, 5.0], &[2.0, 3.0], &[3.0, 4.0]]);
        let mut ranks = vec![0; 3];
        sweep_a(&sp, &[0, 1, 2], &mut ranks);
        assert_eq!(ranks, [0, 0, 1]);

        let sp = sorted(&[&[1.0, 1.0], &[2.0, 2.0], &[3.0, 3.0]]);
        let mut ranks = vec![0; 3];
        sweep_a(&sp, &[0, 1, 2], &mut ranks);
        assert_eq!(ranks, [0, 1, 2]);

        let sp = sorted(&[&[1.0, 1.0], &[1.0, 2.0]]);
        let mut ranks = vec![0; 2];
        sweep_a(&sp, &[0, 1], &mut ranks);
        assert_eq!(ranks, [0, 1]);
    }

    #[test]
    fn sweep_a_respects_lower_bounds() {
        let sp = sorted(&[&[1.0, 1.0], &[2.0, 2.0], &[3.0, 3.0]]);
        let mut ranks = vec![4, 0, 0];
        sweep_a(&sp, &[0, 1, 2], &mut ranks);
        assert_eq!(ranks, [4, 5, 6]);
    }

    #[test]
    fn sweep_b_examples() {
        // Positions: (1,1) -> 0, (2,0) -> 1.
        let sp = sorted(&[&[1.0, 1.0], &[2.0, 0.0]]);
        let mut ranks = vec![0, 0];
        sweep_b(&sp, &[0], &[1], &mut ranks);
        assert_eq!(ranks, [0, 0]);

        let sp = sorted(&[&[1.0, 1.0], &[2.0, 0.0], &[3.0, 2.0]]);
        let mut ranks = vec![0, 0, 0];
        sweep_b(&sp, &[0, 1], &[2], &mut ranks);
        assert_eq!(ranks, [0, 0, 1]);

        let mut ranks = vec![0, 0, 7];
        sweep_b(&sp, &[], &[2], &mut ranks);
        assert_eq!(ranks, [0, 0, 7]);
    }

    #[test]
    fn sweep_b_rank_gap() {
        let sp = sorted(&[&[1.0, 1.0], &[2.0, 0.5], &[3.0, 2.0]]);
        let mut ranks = vec![9, 2, 0];
        sweep_b(&sp, &[0, 1], &[2], &mut ranks);
        assert_eq!(ranks, [9, 2, 10]);
    }

    #[test]
    fn trace_records_every_entry() {
        let ps = build_point_set(&[
            [0.0, 3.0, 1.0],
            [1.0, 2.0, 2.0],
            [2.0, 1.0, 0.0],
            [3.0, 0.0, 3.0],
        ])
        .unwrap();
        let mut trace = TraceHook::default();
        let ranks = sort_dc_with_hook(&ps, &mut trace);
        assert_eq!(ranks, sort_naive(&ps));
        assert_eq!(trace.calls[0], (SubproblemKind::A, 4, 3));
    }
}
