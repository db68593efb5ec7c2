use ndsort::bench::{record_subproblems, time_subproblem, Replay, Solver};
use ndsort::dc::{
    Decision, LevelRepresentativeTree, RecursionHook, Subproblem, SubproblemKind, WorkingState,
};
use ndsort::{build_point_set, dominates_weak, sort_naive, PointSet, SortedPoints};
use proptest::prelude::*;

fn point_set(max_dim: usize, max_n: usize) -> impl Strategy<Value = PointSet> {
    (2..=max_dim, prop_oneof![Just(3u32), Just(1000)]).prop_flat_map(move |(dim, alphabet)| {
        prop::collection::vec(prop::collection::vec(0..alphabet, dim), 1..=max_n).prop_map(|rows| {
            let rows: Vec<Vec<f64>> = rows
                .into_iter()
                .map(|r| r.into_iter().map(f64::from).collect())
                .collect();
            build_point_set(&rows).unwrap()
        })
    })
}

/// Checks helper contracts on entry and the two invariants of every
/// comparison: objectives above `m` are already settled in the dominator's
/// favour, and the dominator's rank is final.
struct Auditor {
    points: SortedPoints,
    previous: Vec<usize>,
    final_ranks: Vec<usize>,
    problems: Vec<String>,
}

impl Auditor {
    fn above_m_settled(&self, l: usize, h: usize, m: usize) -> bool {
        let (a, b) = (self.points.point(l), self.points.point(h));
        (m..self.points.dim()).all(|k| a[k] <= b[k])
    }
}

impl RecursionHook for Auditor {
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        _: &SortedPoints,
        ranks: &mut [usize],
    ) -> Decision {
        for (i, (&now, &before)) in ranks.iter().zip(&self.previous).enumerate() {
            if now < before || now > self.final_ranks[i] {
                self.problems
                    .push(format!("rank of {i} moved {before} -> {now}"));
            }
        }
        self.previous.copy_from_slice(ranks);
        let ascending = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        match sub {
            Subproblem::A { set } => {
                if !ascending(set) {
                    self.problems.push("A set out of order".into());
                }
                let first = set[0];
                let flat = set.iter().all(|&p| {
                    (m..self.points.dim())
                        .all(|k| self.points.value(p, k) == self.points.value(first, k))
                });
                if !flat {
                    self.problems.push(format!("A set differs above m={m}"));
                }
            }
            Subproblem::B { left, right } => {
                if !ascending(left) || !ascending(right) {
                    self.problems.push("B set out of order".into());
                }
                if !left
                    .iter()
                    .all(|&l| right.iter().all(|&h| self.above_m_settled(l, h, m)))
                {
                    self.problems
                        .push(format!("B left does not cover right above m={m}"));
                }
            }
        }
        Decision::Declined
    }

    fn on_compare(&mut self, dominator: usize, target: usize, m: usize, ranks: &[usize]) {
        if !self.above_m_settled(dominator, target, m) {
            self.problems.push(format!(
                "compared {dominator} with {target} unsettled above m={m}"
            ));
        }
        if ranks[dominator] != self.final_ranks[dominator] {
            self.problems
                .push(format!("{dominator} used before its rank was final"));
        }
    }
}

fn audit(points: &PointSet) -> Vec<String> {
    let mut first = WorkingState::new(points);
    first.solve(ndsort::dc::NoHook);
    let mut state = WorkingState::new(points);
    let mut auditor = Auditor {
        points: state.points.clone(),
        previous: vec![0; state.points.len()],
        final_ranks: first.ranks.clone(),
        problems: Vec::new(),
    };
    state.solve(&mut auditor);
    if state.ranks != first.ranks {
        auditor.problems.push("run not deterministic".into());
    }
    auditor.problems
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recursion_invariants_hold(points in point_set(6, 80)) {
        let problems = audit(&points);
        prop_assert!(problems.is_empty(), "{:?}", &problems[..problems.len().min(3)]);
    }

    /// The tree answers a query with the highest level inserted at or left
    /// of it, however many entries were pruned on the way.
    #[test]
    fn tree_keeps_a_staircase(ops in prop::collection::vec((0u8..20, 0usize..6, 0u8..20), 1..60)) {
        let mut tree = LevelRepresentativeTree::new();
        let mut inserted: Vec<(f64, usize)> = Vec::new();
        for (k, &(y, level, q)) in ops.iter().enumerate() {
            tree.insert(f64::from(y), level, k);
            inserted.push((f64::from(y), level));
            prop_assert!(tree.is_staircase());
            let q = f64::from(q);
            let expected = inserted.iter().filter(|e| e.0 <= q).map(|e| e.1).max();
            prop_assert_eq!(tree.query(q).map(|r| r.level), expected);
        }
    }

    #[test]
    fn replays_agree_and_finalize(points in point_set(5, 40)) {
        let recording = record_subproblems(&points);
        prop_assert_eq!(
            recording.points.scatter(&recording.final_ranks, &points),
            sort_naive(&points)
        );
        for record in &recording.records {
            prop_assert!(record.m > 2);
            let replay = Replay::new(&recording, record);
            let mut dc = vec![0; replay.len()];
            let mut bos = vec![0; replay.len()];
            replay.solve(Solver::Dc, &mut dc);
            replay.solve(Solver::Bos, &mut bos);
            prop_assert_eq!(replay.target_ranks(&dc), replay.target_ranks(&bos));
            let targets = record.targets();
            let offset = if record.kind == SubproblemKind::A { 0 } else { record.left.len() };
            for (k, &r) in replay.target_ranks(&dc).iter().enumerate() {
                prop_assert!(r >= record.bounds[offset + k]);
                prop_assert!(r <= recording.final_ranks[targets[k] as usize]);
                if record.kind == SubproblemKind::A {
                    prop_assert_eq!(r, recording.final_ranks[targets[k] as usize]);
                }
            }
        }
    }
}

#[test]
fn chain_of_points_is_audited_clean() {
    let rows: Vec<[f64; 4]> = (0..30).map(|i| [i as f64; 4]).collect();
    let points = build_point_set(&rows).unwrap();
    assert!(audit(&points).is_empty());
}

#[test]
fn every_sweep_comparison_dominates() {
    // On two objectives every reported comparison comes from a sweep query,
    // whose representative must actually dominate.
    struct Sweeps(SortedPoints, usize);
    impl RecursionHook for Sweeps {
        fn before(
            &mut self,
            _: Subproblem<'_>,
            _: usize,
            _: &SortedPoints,
            _: &mut [usize],
        ) -> Decision {
            Decision::Declined
        }
        fn on_compare(&mut self, d: usize, t: usize, m: usize, _: &[usize]) {
            if m == 2 && !dominates_weak(self.0.point(d), self.0.point(t), 2) {
                self.1 += 1;
            }
        }
    }
    let rows: Vec<[f64; 2]> = (0..200u32)
        .map(|i| [(i * 37 % 101) as f64, (i * 53 % 97) as f64])
        .collect();
    let points = build_point_set(&rows).unwrap();
    let mut state = WorkingState::new(&points);
    let mut hook = Sweeps(state.points.clone(), 0);
    state.solve(&mut hook);
    assert_eq!(hook.1, 0);
}

#[test]
fn timed_replay_reports_targets() {
    let rows: Vec<[f64; 3]> = (0..50u32)
        .map(|i| {
            [
                (i * 7 % 11) as f64,
                (i * 5 % 13) as f64,
                (i * 3 % 17) as f64,
            ]
        })
        .collect();
    let points = build_point_set(&rows).unwrap();
    let recording = record_subproblems(&points);
    let record = recording.records.iter().max_by_key(|r| r.size()).unwrap();
    let replay = Replay::new(&recording, record);
    let timed = time_subproblem(&replay, Solver::Bos, 3);
    assert_eq!(timed.ranks.len(), record.targets().len());
    assert!(timed.time.as_nanos() > 0);
}
