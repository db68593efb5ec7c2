//! Divide-and-conquer that hands suitable subproblems to Best Order Sort.
//!
//! Best Order Sort wins on subproblems that are neither too small nor too
//! large. For a subproblem with `n` points and `m` active objectives the
//! hybrid switches when
//!
//! ```text
//! c_left · m · ln(m + 1)  <=  n  <=  c_right · m · (ln(d + 1)^exponent − offset)
//! ```
//!
//! with defaults `c_left = 1`, `c_right = 150`, `exponent = 0.9`,
//! `offset = 1.5`. `d` is `m` by default, or the original objective count.

use std::fmt;
use std::str::FromStr;

use crate::bos::BosScratch;
use crate::dc::{sort_dc_with_hook, Decision, NoHook, RecursionHook, Subproblem, SubproblemKind};
use crate::error::{Error, Result};
use crate::point::{PointSet, RankAssignment};
use crate::sorted::SortedPoints;

/// Which objective count stands in for `d` in the right bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DMode {
    /// The subproblem's active objective count `m`.
    #[default]
    Subproblem,
    /// The dataset's objective count `M`.
    Original,
}

impl FromStr for DMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(DMode::Subproblem),
            "M" => Ok(DMode::Original),
            other => Err(Error::InvalidPolicy(format!(
                "d mode must be `m` or `M`, got `{other}`"
            ))),
        }
    }
}

impl fmt::Display for DMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DMode::Subproblem => "m",
            DMode::Original => "M",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwitchPolicy {
    pub c_left: f64,
    pub c_right: f64,
    pub exponent: f64,
    pub offset: f64,
    pub d_mode: DMode,
    pub enabled: bool,
}

impl Default for SwitchPolicy {
    fn default() -> Self {
        Self {
            c_left: 1.0,
            c_right: 150.0,
            exponent: 0.9,
            offset: 1.5,
            d_mode: DMode::Subproblem,
            enabled: true,
        }
    }
}

impl SwitchPolicy {
    pub fn disabled() -> Self {
        Self {
            enabled: false,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("c_left", self.c_left),
            ("c_right", self.c_right),
            ("exponent", self.exponent),
            ("offset", self.offset),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidPolicy(format!("{name} is not finite")));
            }
        }
        if !(self.exponent > 0.0 && self.exponent <= 2.0) {
            return Err(Error::InvalidPolicy(format!(
                "exponent must lie in (0, 2], got {}",
                self.exponent
            )));
        }
        Ok(())
    }
}

/// `(n_min, n_max)` for a subproblem on `m` objectives, both clamped at zero.
pub fn switch_interval(m: usize, policy: &SwitchPolicy, m_original: usize) -> (f64, f64) {
    let mf = m as f64;
    let d = match policy.d_mode {
        DMode::Subproblem => mf,
        DMode::Original => m_original as f64,
    };
    let n_min = policy.c_left * mf * (mf + 1.0).ln();
    let n_max = policy.c_right * mf * ((d + 1.0).ln().powf(policy.exponent) - policy.offset);
    (n_min.max(0.0), n_max.max(0.0))
}

pub fn should_switch(n: usize, m: usize, policy: &SwitchPolicy, m_original: usize) -> bool {
    if !policy.enabled || m < 3 {
        return false;
    }
    let (lo, hi) = switch_interval(m, policy, m_original);
    in_interval(n, lo, hi)
}

#[inline]
fn in_interval(n: usize, lo: f64, hi: f64) -> bool {
    let n = n as f64;
    lo <= n && n <= hi
}

/// Decides, per subproblem, whether Best Order Sort takes over.
pub trait SwitchRule {
    fn should_switch(&mut self, kind: SubproblemKind, n: usize, m: usize) -> bool;
}

/// [`SwitchPolicy`] with its thresholds memoized per `m`.
#[derive(Debug, Clone)]
pub struct PolicyRule {
    policy: SwitchPolicy,
    m_original: usize,
    thresholds: Vec<Option<(f64, f64)>>,
}

impl PolicyRule {
    pub fn new(policy: SwitchPolicy, m_original: usize) -> Self {
        Self {
            policy,
            m_original,
            thresholds: vec![None; m_original + 1],
        }
    }
}

impl SwitchRule for PolicyRule {
    fn should_switch(&mut self, _: SubproblemKind, n: usize, m: usize) -> bool {
        if !self.policy.enabled || m < 3 {
            return false;
        }
        if m >= self.thresholds.len() {
            self.thresholds.resize(m + 1, None);
        }
        let (lo, hi) = *self.thresholds[m]
            .get_or_insert_with(|| switch_interval(m, &self.policy, self.m_original));
        in_interval(n, lo, hi)
    }
}

impl<F: FnMut(SubproblemKind, usize, usize) -> bool> SwitchRule for F {
    fn should_switch(&mut self, kind: SubproblemKind, n: usize, m: usize) -> bool {
        self(kind, n, m)
    }
}

/// Counts of subproblems handed to Best Order Sort.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HybridStats {
    pub delegated_a: usize,
    pub delegated_b: usize,
}

/// The recursion hook behind [`sort_hybrid`]. Subproblems the rule declines
/// are passed on to `inner`.
pub struct HybridHook<R, H = NoHook> {
    rule: R,
    inner: H,
    scratch: BosScratch,
    pub stats: HybridStats,
}

impl<R: SwitchRule> HybridHook<R> {
    pub fn new(rule: R) -> Self {
        Self::with_inner(rule, NoHook)
    }
}

impl<R: SwitchRule, H: RecursionHook> HybridHook<R, H> {
    pub fn with_inner(rule: R, inner: H) -> Self {
        Self {
            rule,
            inner,
            scratch: BosScratch::new(),
            stats: HybridStats::default(),
        }
    }
}

impl<R: SwitchRule, H: RecursionHook> RecursionHook for HybridHook<R, H> {
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        points: &SortedPoints,
        ranks: &mut [usize],
    ) -> Decision {
        // Sweeps beat Best Order Sort on two objectives.
        if m >= 3 && self.rule.should_switch(sub.kind(), sub.size(), m) {
            match sub {
                Subproblem::A { set } => {
                    self.stats.delegated_a += 1;
                    self.scratch.helper_a(points, set, m, ranks);
                }
                Subproblem::B { left, right } => {
                    self.stats.delegated_b += 1;
                    self.scratch.helper_b(points, left, right, m, ranks);
                }
            }
            return Decision::Handled;
        }
        self.inner.before(sub, m, points, ranks)
    }

    fn on_compare(&mut self, dominator: usize, target: usize, m: usize, ranks: &[usize]) {
        self.inner.on_compare(dominator, target, m, ranks);
    }
}

pub fn sort_hybrid(points: &PointSet, policy: &SwitchPolicy) -> RankAssignment {
    sort_hybrid_with_stats(points, policy).0
}

pub fn sort_hybrid_with_stats(
    points: &PointSet,
    policy: &SwitchPolicy,
) -> (RankAssignment, HybridStats) {
    sort_hybrid_with(points, PolicyRule::new(*policy, points.dim()), NoHook)
}

/// Runs the hybrid with an arbitrary switch rule and an inner hook that
/// sees every subproblem the rule declines.
pub fn sort_hybrid_with<R: SwitchRule, H: RecursionHook>(
    points: &PointSet,
    rule: R,
    inner: H,
) -> (RankAssignment, HybridStats) {
    let mut hook = HybridHook::with_inner(rule, inner);
    let ranks = sort_dc_with_hook(points, &mut hook);
    (ranks, hook.stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dc::{sort_dc_with_hook, TraceHook};
    use crate::oracle::sort_naive;
    use crate::point::build_point_set;

    #[test]
    fn interval_for_ten_objectives() {
        let (lo, hi) = switch_interval(10, &SwitchPolicy::default(), 10);
        assert!((lo - 23.978_952_727_983_705).abs() < 1e-6, "{lo}");
        assert!((hi - 1_045.630_014_089_255_8).abs() < 1e-6, "{hi}");
    }

    #[test]
    fn interval_clamps_for_three_objectives() {
        let (lo, hi) = switch_interval(3, &SwitchPolicy::default(), 3);
        assert!((lo - 4.158_883_083_359_672).abs() < 1e-9);
        assert_eq!(hi, 0.0);
    }

    #[test]
    fn original_mode_uses_dataset_dimension() {
        let policy = SwitchPolicy {
            d_mode: DMode::Original,
            ..SwitchPolicy::default()
        };
        let (_, hi) = switch_interval(3, &policy, 10);
        // 150 * 3 * (ln(11)^0.9 - 1.5)
        assert!((hi - 313.689_004_226_776_7).abs() < 1e-6, "{hi}");
    }

    #[test]
    fn switch_decisions() {
        let p = SwitchPolicy::default();
        assert!(should_switch(100, 10, &p, 10));
        assert!(!should_switch(100_000, 10, &p, 10));
        assert!(!should_switch(100, 2, &p, 10));
        assert!(!should_switch(100, 10, &SwitchPolicy::disabled(), 10));
        assert!(!should_switch(20, 10, &p, 10));
    }

    #[test]
    fn policy_rule_matches_free_function() {
        let p = SwitchPolicy::default();
        let mut rule = PolicyRule::new(p, 12);
        for m in 2..=12 {
            for n in [1, 5, 10, 24, 100, 500, 1000, 1046, 5000] {
                assert_eq!(
                    rule.should_switch(SubproblemKind::A, n, m),
                    should_switch(n, m, &p, 12),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn validation() {
        assert!(SwitchPolicy::default().validate().is_ok());
        let bad = SwitchPolicy {
            exponent: 0.0,
            ..SwitchPolicy::default()
        };
        assert!(bad.validate().is_err());
        let bad = SwitchPolicy {
            c_right: f64::NAN,
            ..SwitchPolicy::default()
        };
        assert!(bad.validate().is_err());
        assert_eq!("M".parse::<DMode>().unwrap(), DMode::Original);
        assert!("x".parse::<DMode>().is_err());
    }

    #[test]
    fn chain() {
        let ps = build_point_set(&[[0.0, 0.0, 0.0], [1.0, 1.0, 1.0], [2.0, 2.0, 2.0]]).unwrap();
        assert_eq!(
            sort_hybrid(&ps, &SwitchPolicy::default()).into_vec(),
            [0, 1, 2]
        );
    }

    #[test]
    fn disabled_policy_traces_like_dc() {
        let raw: Vec<[f64; 4]> = (0..60u64)
            .map(|i| {
                let h = |k: u64| ((i * 0x9E37_79B9 + k * 7919) % 101) as f64;
                [h(1), h(2), h(3), h(4)]
            })
            .collect();
        let ps = build_point_set(&raw).unwrap();
        let mut plain = TraceHook::default();
        let expected = sort_dc_with_hook(&ps, &mut plain);
        let mut through = TraceHook::default();
        let (ranks, stats) = sort_hybrid_with(
            &ps,
            PolicyRule::new(SwitchPolicy::disabled(), 4),
            &mut through,
        );
        assert_eq!(ranks, expected);
        assert_eq!(stats, HybridStats::default());
        assert_eq!(plain, through);
        assert_eq!(ranks, sort_naive(&ps));
    }
}
