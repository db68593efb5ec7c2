//! Points, dominance predicates, and duplicate grouping.
//!
//! All objectives are minimized. Comparisons are exact; there is no epsilon.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::Deref;

use crate::error::{Error, Result};

/// One point's objective values.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveVector(Vec<f64>);

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewObjectives(values.len()));
        }
        check_finite(0, &values)?;
        Ok(Self(values))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for ObjectiveVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl AsRef<[f64]> for ObjectiveVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// `a ≺ b` on the first `m` objectives.
#[inline]
pub fn dominates_strict(a: &[f64], b: &[f64], m: usize) -> bool {
    let mut strict = false;
    for (x, y) in a[..m].iter().zip(&b[..m]) {
        if x > y {
            return false;
        }
        strict |= x < y;
    }
    strict
}

/// `a ⪯ b` on the first `m` objectives.
#[inline]
pub fn dominates_weak(a: &[f64], b: &[f64], m: usize) -> bool {
    a[..m].iter().zip(&b[..m]).all(|(x, y)| x <= y)
}

/// Lexicographic order over all objectives, first objective most significant.
///
/// Values must be finite; NaN compares as equal.
#[inline]
pub fn lex_compare(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => {}
            Some(ord) => return ord,
        }
    }
    a.len().cmp(&b.len())
}

fn check_finite(index: usize, values: &[f64]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(objective) => Err(Error::InvalidValue {
            index,
            objective,
            value: values[objective],
        }),
        None => Ok(()),
    }
}

/// Distinct points in first-occurrence order, plus the map from every input
/// index to its representative.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    values: Vec<f64>,
    dim: usize,
    group_of: Vec<usize>,
}

impl PointSet {
    /// Number of objectives.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of distinct points.
    pub fn len(&self) -> usize {
        self.values.len().checked_div(self.dim).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Number of points in the original input, duplicates included.
    pub fn original_len(&self) -> usize {
        self.group_of.len()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.dim.max(1))
    }

    /// Coordinates of all distinct points, row-major.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn group_of(&self) -> &[usize] {
        &self.group_of
    }

    /// The input vector at original index `i`.
    pub fn original(&self, i: usize) -> &[f64] {
        self.point(self.group_of[i])
    }

    /// Broadcasts one rank per distinct point to one rank per original point.
    pub fn expand_ranks(&self, unique_ranks: &[usize]) -> RankAssignment {
        debug_assert_eq!(unique_ranks.len(), self.len());
        RankAssignment(self.group_of.iter().map(|&g| unique_ranks[g]).collect())
    }
}

/// Groups equal points. Unique points keep their first-occurrence order.
pub fn build_point_set<P: AsRef<[f64]>>(raw: &[P]) -> Result<PointSet> {
    let Some(first) = raw.first() else {
        return Ok(PointSet {
            values: Vec::new(),
            dim: 0,
            group_of: Vec::new(),
        });
    };
    let dim = first.as_ref().len();
    if dim < 2 {
        return Err(Error::TooFewObjectives(dim));
    }

    let mut values = Vec::with_capacity(raw.len() * dim);
    let mut group_of = Vec::with_capacity(raw.len());
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::with_capacity(raw.len());
    for (index, p) in raw.iter().enumerate() {
        let p = p.as_ref();
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                index,
                expected: dim,
                found: p.len(),
            });
        }
        check_finite(index, p)?;
        // + 0.0 folds -0.0 into 0.0 so both hash alike.
        let key: Vec<u64> = p.iter().map(|v| (v + 0.0).to_bits()).collect();
        let next = seen.len();
        let group = *seen.entry(key).or_insert(next);
        if group == next {
            values.extend(p.iter().map(|v| v + 0.0));
        }
        group_of.push(group);
    }
    Ok(PointSet {
        values,
        dim,
        group_of,
    })
}

/// One non-negative rank per original input point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankAssignment(Vec<usize>);

impl RankAssignment {
    pub fn new(ranks: Vec<usize>) -> Self {
        Self(ranks)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// FNV-1a over the ranks as little-endian `u64`s.
    pub fn checksum(&self) -> u64 {
        let mut hash = 0xcbf2_9ce4_8422_2325u64;
        for &r in &self.0 {
            for byte in (r as u64).to_le_bytes() {
                hash ^= u64::from(byte);
                hash = hash.wrapping_mul(0x0100_0000_01b3);
            }
        }
        hash
    }
}

impl Deref for RankAssignment {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_dominance() {
        assert!(dominates_strict(&[1.0, 2.0], &[1.0, 3.0], 2));
        assert!(!dominates_strict(&[1.0, 2.0], &[1.0, 2.0], 2));
        assert!(!dominates_strict(&[1.0, 3.0], &[2.0, 2.0], 2));
    }

    #[test]
    fn weak_dominance() {
        assert!(dominates_weak(&[1.0, 2.0], &[1.0, 2.0], 2));
        assert!(dominates_weak(&[1.0, 2.0], &[2.0, 3.0], 2));
        assert!(!dominates_weak(&[2.0, 1.0], &[1.0, 2.0], 2));
    }

    #[test]
    fn dominance_respects_prefix() {
        // Third objective ignored when m = 2.
        assert!(dominates_strict(&[0.0, 0.0, 9.0], &[1.0, 1.0, 0.0], 2));
        assert!(!dominates_strict(&[0.0, 0.0, 9.0], &[1.0, 1.0, 0.0], 3));
    }

    #[test]
    fn lexicographic() {
        assert_eq!(lex_compare(&[1.0, 5.0], &[2.0, 0.0]), Ordering::Less);
        assert_eq!(lex_compare(&[1.0, 5.0], &[1.0, 3.0]), Ordering::Greater);
        assert_eq!(lex_compare(&[1.0, 5.0], &[1.0, 5.0]), Ordering::Equal);
    }

    #[test]
    fn dedup_groups() {
        let ps = build_point_set(&[[1.0, 1.0], [2.0, 2.0], [1.0, 1.0]]).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps.group_of(), &[0, 1, 0]);

        let ps = build_point_set(&[[0.0, 0.0]]).unwrap();
        assert_eq!(ps.len(), 1);

        let ps = build_point_set(&[[1.0, 2.0], [2.0, 1.0]]).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps.group_of(), &[0, 1]);
    }

    #[test]
    fn negative_zero_is_zero() {
        let ps = build_point_set(&[[0.0, 1.0], [-0.0, 1.0]]).unwrap();
        assert_eq!(ps.len(), 1);
        assert!(ps.point(0)[0].is_sign_positive());
    }

    #[test]
    fn rejects_bad_input() {
        let err = build_point_set(&[vec![1.0, 2.0], vec![1.0, 2.0, 3.0]]).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                index: 1,
                expected: 2,
                found: 3
            }
        ));
        let err = build_point_set(&[[1.0, f64::NAN]]).unwrap_err();
        assert!(matches!(err, Error::InvalidValue { objective: 1, .. }));
        let err = build_point_set(&[[f64::INFINITY, 0.0]]).unwrap_err();
        assert!(matches!(err, Error::InvalidValue { objective: 0, .. }));
        assert!(matches!(
            build_point_set(&[[1.0]]).unwrap_err(),
            Error::TooFewObjectives(1)
        ));
        assert!(ObjectiveVector::new(vec![1.0]).is_err());
        assert!(ObjectiveVector::new(vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn empty_input() {
        let ps = build_point_set::<[f64; 2]>(&[]).unwrap();
        assert!(ps.is_empty());
        assert_eq!(ps.original_len(), 0);
    }

    #[test]
    fn strict_is_irreflexive_and_transitive_on_small_grid() {
        let alphabet = [0.0, 1.0, 2.0];
        let mut all = Vec::new();
        for a in alphabet {
            for b in alphabet {
                for c in alphabet {
                    all.push([a, b, c]);
                }
            }
        }
        for p in &all {
            assert!(!dominates_strict(p, p, 3));
            for q in &all {
                let pq = dominates_strict(p, q, 3);
                let qp = dominates_strict(q, p, 3);
                assert!(!(pq && qp));
                if pq {
                    assert!(dominates_weak(p, q, 3));
                }
                for r in &all {
                    if pq && dominates_strict(q, r, 3) {
                        assert!(dominates_strict(p, r, 3));
                    }
                }
            }
        }
    }
}
