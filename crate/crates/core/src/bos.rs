//! Best Order Sort.
//!
//! Every point is sorted by every objective. The lists are then walked in
//! round-robin order by position (all first entries, then all second
//! entries, ...) until each point has been seen once. A point seen for the
//! first time in objective `j`'s list can only be dominated by points that
//! precede it there, and those are exactly the points already filed in
//! objective `j`'s rank lists.
//!
//! Besides the standalone sort, two adapted entry points solve
//! divide-and-conquer subproblems on [`SortedPoints`]: [`bos_helper_a`]
//! honours incoming rank lower bounds, and [`bos_helper_b`] updates one set
//! from another, already finalized set. [`BosScratch`] runs both while
//! reusing its buffers across calls.

use crate::point::{PointSet, RankAssignment};
use crate::sorted::SortedPoints;

/// For each active objective, the local point ids sorted by that objective.
///
/// Ties are broken by local id. Callers number points in lexicographic
/// order, so ties fall back to full lexicographic comparison and a point
/// never precedes one of its dominators.
#[derive(Debug, Clone, Default)]
pub struct ObjectiveSortedLists {
    n: usize,
    m: usize,
    ids: Vec<u32>,
    keys: Vec<u128>,
}

/// Maps `v` to an integer with the same order as `f64::total_cmp`.
#[inline]
fn ordered_bits(v: f64) -> u64 {
    let bits = v.to_bits();
    if bits >> 63 == 1 {
        !bits
    } else {
        bits | 1 << 63
    }
}

impl ObjectiveSortedLists {
    /// `coords` is row-major with `m` values per point.
    pub fn build(coords: &[f64], m: usize) -> Self {
        let mut lists = Self::default();
        lists.rebuild(coords, m);
        lists
    }

    fn rebuild(&mut self, coords: &[f64], m: usize) {
        let n = coords.len() / m;
        self.n = n;
        self.m = m;
        self.ids.clear();
        // Objective 0 is already ordered: lexicographic order sorts by it first.
        self.ids.extend(0..n as u32);
        for j in 1..m {
            // Value and id packed into one key, so ties fall back to the id.
            self.keys.clear();
            self.keys.extend(
                (0..n).map(|p| (ordered_bits(coords[p * m + j]) as u128) << 32 | p as u128),
            );
            self.keys.sort_unstable();
            self.ids.extend(self.keys.iter().map(|&k| k as u32));
        }
        debug_assert!((1..n).all(|i| coords[(i - 1) * m] <= coords[i * m]));
    }

    pub fn list(&self, objective: usize) -> &[u32] {
        &self.ids[objective * self.n..(objective + 1) * self.n]
    }

    pub fn objectives(&self) -> usize {
        self.m
    }
}

/// Per point, the objectives still needed when testing whether that point
/// dominates a point seen later. Stored as one bit per objective.
#[derive(Debug, Clone, Default)]
pub struct ObjectiveConsiderSet {
    words: usize,
    bits: Vec<u64>,
}

impl ObjectiveConsiderSet {
    pub fn full(n: usize, m: usize) -> Self {
        let mut set = Self::default();
        set.reset(n, m);
        set
    }

    fn reset(&mut self, n: usize, m: usize) {
        self.words = m.div_ceil(64);
        let mut row = vec![u64::MAX; self.words];
        if !m.is_multiple_of(64) {
            row[self.words - 1] = (1u64 << (m % 64)) - 1;
        }
        self.bits.clear();
        for _ in 0..n {
            self.bits.extend_from_slice(&row);
        }
    }

    /// Remaining objectives of `p`, ascending.
    pub fn objectives(&self, p: u32) -> impl Iterator<Item = u32> + '_ {
        let start = p as usize * self.words;
        self.bits[start..start + self.words]
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| {
                (0..64)
                    .filter(move |b| word >> b & 1 == 1)
                    .map(move |b| (w * 64 + b) as u32)
            })
    }

    /// Drops `objective` from the set of `p`; a no-op if already absent.
    #[inline]
    pub fn remove(&mut self, p: u32, objective: u32) {
        let o = objective as usize;
        self.bits[p as usize * self.words + o / 64] &= !(1u64 << (o % 64));
    }

    /// Whether `q` weakly dominates `query`, looking only at the objectives
    /// left in `q`'s set. `coords` rows have `query.len()` values.
    #[inline]
    pub fn dominates(&self, coords: &[f64], q: u32, query: &[f64]) -> bool {
        let m = query.len();
        let row = &coords[q as usize * m..(q as usize + 1) * m];
        let words = &self.bits[q as usize * self.words..(q as usize + 1) * self.words];
        for (w, &word) in words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let k = w * 64 + bits.trailing_zeros() as usize;
                if row[k] > query[k] {
                    return false;
                }
                bits &= bits - 1;
            }
        }
        true
    }
}

/// Already-processed points of one objective, filed by rank.
#[derive(Debug, Clone, Default)]
pub struct RankLists {
    base: usize,
    levels: Vec<Vec<u32>>,
    used: usize,
}

impl RankLists {
    /// Lists for ranks `base` and above.
    pub fn with_base(base: usize) -> Self {
        Self {
            base,
            ..Self::default()
        }
    }

    /// Empties the lists, keeping their allocations.
    fn reset(&mut self, base: usize) {
        for level in &mut self.levels[..self.used] {
            level.clear();
        }
        self.used = 0;
        self.base = base;
    }

    pub fn insert(&mut self, rank: usize, p: u32) {
        debug_assert!(rank >= self.base);
        let slot = rank - self.base;
        if slot >= self.used {
            if slot >= self.levels.len() {
                self.levels.resize_with(slot + 1, Vec::new);
            }
            self.used = slot + 1;
        }
        self.levels[slot].push(p);
    }

    /// Points filed at `rank`.
    #[inline]
    pub fn level(&self, rank: usize) -> &[u32] {
        match rank.checked_sub(self.base) {
            Some(slot) if slot < self.used => &self.levels[slot],
            _ => &[],
        }
    }

    /// Highest rank with a non-empty list, if any.
    pub fn top(&self) -> Option<usize> {
        self.levels[..self.used]
            .iter()
            .rposition(|l| !l.is_empty())
            .map(|slot| slot + self.base)
    }
}

/// Smallest rank `r >= start` such that no point filed at `r` dominates
/// `query` on its remaining objectives.
pub fn find_rank(
    query: &[f64],
    start: usize,
    lists: &RankLists,
    coords: &[f64],
    consider: &ObjectiveConsiderSet,
) -> usize {
    let mut rank = start;
    while lists
        .level(rank)
        .iter()
        .any(|&q| consider.dominates(coords, q, query))
    {
        rank += 1;
    }
    rank
}

/// `max(start, 1 + r)` where `r` is the highest rank holding a dominator of
/// `query`; ranks below `start` are never inspected.
///
/// The two-set update needs this top-down form: the finalized set's ranks
/// may come from points outside it, so a dominator at rank `r` does not imply
/// dominators at every rank below `r`.
fn raise_rank(
    query: &[f64],
    start: usize,
    lists: &RankLists,
    coords: &[f64],
    consider: &ObjectiveConsiderSet,
) -> usize {
    let Some(top) = lists.top() else {
        return start;
    };
    let mut rank = top;
    while rank >= start && rank >= lists.base {
        if lists
            .level(rank)
            .iter()
            .any(|&q| consider.dominates(coords, q, query))
        {
            return rank + 1;
        }
        if rank == 0 {
            break;
        }
        rank -= 1;
    }
    start
}

/// Counters from one run of the round-robin scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BosStats {
    /// Points that were processed for the first time.
    pub new_points: usize,
    /// List entries visited before the scan stopped.
    pub visits: usize,
}

/// Buffers for the scan, reusable across calls.
#[derive(Debug, Clone, Default)]
pub struct BosScratch {
    m: usize,
    coords: Vec<f64>,
    sorted: ObjectiveSortedLists,
    consider: ObjectiveConsiderSet,
    rank_lists: Vec<RankLists>,
    ranks: Vec<usize>,
    seen: Vec<bool>,
    merged: Vec<usize>,
    is_left: Vec<bool>,
}

impl BosScratch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Copies the first `m` objectives and the ranks of `ids` into local
    /// storage and prepares the lists.
    fn load(
        &mut self,
        points: &SortedPoints,
        ids: &[usize],
        m: usize,
        ranks: &[usize],
        base: usize,
    ) {
        let n = ids.len();
        self.m = m;
        self.coords.clear();
        self.ranks.clear();
        for &i in ids {
            self.coords.extend_from_slice(&points.point(i)[..m]);
            self.ranks.push(ranks[i]);
        }
        self.sorted.rebuild(&self.coords, m);
        self.consider.reset(n, m);
        if self.rank_lists.len() < m {
            self.rank_lists.resize_with(m, RankLists::default);
        }
        for lists in &mut self.rank_lists[..m] {
            lists.reset(base);
        }
        self.seen.clear();
        self.seen.resize(n, false);
    }

    #[inline]
    fn row(coords: &[f64], m: usize, p: u32) -> &[f64] {
        let p = p as usize;
        &coords[p * m..(p + 1) * m]
    }

    /// Single-set scan over the loaded points; `self.ranks` holds lower
    /// bounds on entry and final ranks on exit.
    fn scan_single(&mut self, stats: &mut BosStats) {
        let n = self.ranks.len();
        let m = self.m;
        let mut remaining = n;
        'scan: for pos in 0..n {
            for j in 0..m {
                let p = self.sorted.list(j)[pos];
                stats.visits += 1;
                self.consider.remove(p, j as u32);
                let pu = p as usize;
                if !self.seen[pu] {
                    self.seen[pu] = true;
                    stats.new_points += 1;
                    self.ranks[pu] = find_rank(
                        Self::row(&self.coords, m, p),
                        self.ranks[pu],
                        &self.rank_lists[j],
                        &self.coords,
                        &self.consider,
                    );
                    remaining -= 1;
                    if remaining == 0 {
                        break 'scan;
                    }
                }
                self.rank_lists[j].insert(self.ranks[pu], p);
            }
        }
    }

    /// Two-set scan: left points go straight into the rank lists; right
    /// points only look up.
    fn scan_pair(&mut self, right_count: usize) {
        let n = self.ranks.len();
        let m = self.m;
        let mut remaining = right_count;
        'scan: for pos in 0..n {
            for j in 0..m {
                let p = self.sorted.list(j)[pos];
                let pu = p as usize;
                if self.is_left[pu] {
                    self.consider.remove(p, j as u32);
                    self.rank_lists[j].insert(self.ranks[pu], p);
                } else if !self.seen[pu] {
                    self.seen[pu] = true;
                    self.ranks[pu] = raise_rank(
                        Self::row(&self.coords, m, p),
                        self.ranks[pu],
                        &self.rank_lists[j],
                        &self.coords,
                        &self.consider,
                    );
                    remaining -= 1;
                    if remaining == 0 {
                        break 'scan;
                    }
                }
            }
        }
    }

    /// Same contract as [`bos_helper_a`].
    pub fn helper_a(
        &mut self,
        points: &SortedPoints,
        set: &[usize],
        m: usize,
        ranks: &mut [usize],
    ) -> BosStats {
        let mut stats = BosStats::default();
        if set.len() < 2 {
            return stats;
        }
        let base = set.iter().map(|&i| ranks[i]).min().unwrap_or(0);
        self.load(points, set, m, ranks, base);
        self.scan_single(&mut stats);
        for (&i, &r) in set.iter().zip(&self.ranks) {
            ranks[i] = r;
        }
        stats
    }

    /// Same contract as [`bos_helper_b`].
    pub fn helper_b(
        &mut self,
        points: &SortedPoints,
        left: &[usize],
        right: &[usize],
        m: usize,
        ranks: &mut [usize],
    ) {
        if left.is_empty() || right.is_empty() {
            return;
        }
        let mut merged = std::mem::take(&mut self.merged);
        merged.clear();
        self.is_left.clear();
        let (mut a, mut b) = (0, 0);
        while a < left.len() || b < right.len() {
            if b == right.len() || (a < left.len() && left[a] < right[b]) {
                merged.push(left[a]);
                self.is_left.push(true);
                a += 1;
            } else {
                merged.push(right[b]);
                self.is_left.push(false);
                b += 1;
            }
        }
        let base = left.iter().map(|&i| ranks[i]).min().unwrap_or(0);
        self.load(points, &merged, m, ranks, base);
        self.scan_pair(right.len());
        for (k, &i) in merged.iter().enumerate() {
            if !self.is_left[k] {
                ranks[i] = self.ranks[k];
            }
        }
        self.merged = merged;
    }
}

/// Sorts distinct points standalone.
pub fn sort_bos(points: &PointSet) -> RankAssignment {
    sort_bos_with_stats(points).0
}

/// [`sort_bos`] plus scan counters.
pub fn sort_bos_with_stats(points: &PointSet) -> (RankAssignment, BosStats) {
    let sorted = SortedPoints::from_point_set(points);
    let all: Vec<usize> = (0..sorted.len()).collect();
    let mut ranks = vec![0; sorted.len()];
    let mut stats = BosStats::default();
    if sorted.len() == 1 {
        stats = BosStats {
            new_points: 1,
            visits: 1,
        };
    } else if !all.is_empty() {
        stats = BosScratch::new().helper_a(&sorted, &all, sorted.dim(), &mut ranks);
    }
    (sorted.scatter(&ranks, points), stats)
}

/// Finalizes the ranks of `set` using the first `m` objectives.
///
/// `set` must be ascending (lexicographic), its points equal on every
/// objective above `m`, and `ranks` must already reflect every dominator
/// outside `set`. Lookups start at each incoming bound.
pub fn bos_helper_a(points: &SortedPoints, set: &[usize], m: usize, ranks: &mut [usize]) {
    BosScratch::new().helper_a(points, set, m, ranks);
}

pub fn bos_helper_a_with_stats(
    points: &SortedPoints,
    set: &[usize],
    m: usize,
    ranks: &mut [usize],
) -> BosStats {
    BosScratch::new().helper_a(points, set, m, ranks)
}

/// Raises the ranks of `right` using the finalized points of `left` and the
/// first `m` objectives.
///
/// Both slices must be ascending, and every left point must weakly dominate
/// every right point on the objectives above `m`. Under that contract weak
/// dominance on the first `m` objectives means dominance overall.
pub fn bos_helper_b(
    points: &SortedPoints,
    left: &[usize],
    right: &[usize],
    m: usize,
    ranks: &mut [usize],
) {
    BosScratch::new().helper_b(points, left, right, m, ranks);
}
