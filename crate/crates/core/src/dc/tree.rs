use std::collections::BTreeMap;

use ordered_float::OrderedFloat;

/// The sweep-line summary: for each non-domination level, the last point
/// of that level still able to decide a rank on its own.
///
/// Entries are keyed by the representative's second objective. Levels
/// strictly increase with the key (a staircase), so the entry with the
/// greatest key not exceeding a query's second objective carries the
/// greatest level that dominates the query.
#[derive(Debug, Clone, Default)]
pub struct LevelRepresentativeTree {
    entries: BTreeMap<OrderedFloat<f64>, Representative>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Representative {
    pub level: usize,
    pub point: usize,
}

impl LevelRepresentativeTree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The highest-level representative whose second objective is at most `y`.
    pub fn query(&self, y: f64) -> Option<Representative> {
        self.entries
            .range(..=OrderedFloat(y))
            .next_back()
            .map(|(_, r)| *r)
    }

    /// Makes `point` the representative of `level`, evicting every entry it
    /// renders useless. Returns false, leaving the tree unchanged, when an
    /// existing entry already covers it.
    pub fn insert(&mut self, y: f64, level: usize, point: usize) -> bool {
        if self.query(y).is_some_and(|r| r.level >= level) {
            return false;
        }
        let key = OrderedFloat(y);
        while let Some((&k, r)) = self.entries.range(key..).next() {
            if r.level > level {
                break;
            }
            self.entries.remove(&k);
        }
        self.entries.insert(key, Representative { level, point });
        true
    }

    /// `(second objective, level)` pairs in key order.
    pub fn staircase(&self) -> impl Iterator<Item = (f64, usize)> + '_ {
        self.entries.iter().map(|(k, r)| (k.0, r.level))
    }

    pub fn is_staircase(&self) -> bool {
        let levels: Vec<usize> = self.entries.values().map(|r| r.level).collect();
        levels.windows(2).all(|w| w[0] < w[1])
    }
}
