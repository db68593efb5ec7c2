//! Quadratic reference implementation of non-dominated sorting.

use crate::point::{dominates_strict, lex_compare, PointSet, RankAssignment};

/// Ranks every point straight from the definition: zero when undominated,
/// otherwise one plus the largest rank among its dominators.
///
/// Points are visited in lexicographic order, which places every dominator
/// before the points it dominates, so each rank is final when computed.
pub fn sort_naive(points: &PointSet) -> RankAssignment {
    let n = points.len();
    let m = points.dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| lex_compare(points.point(a), points.point(b)));

    let mut ranks = vec![0usize; n];
    for (pos, &p) in order.iter().enumerate() {
        let target = points.point(p);
        let mut rank = 0;
        for &q in &order[..pos] {
            if ranks[q] + 1 > rank && dominates_strict(points.point(q), target, m) {
                rank = ranks[q] + 1;
            }
        }
        ranks[p] = rank;
    }
    points.expand_ranks(&ranks)
}

/// Number of non-domination levels: one plus the largest rank.
pub fn count_levels(ranks: &[usize]) -> usize {
    ranks.iter().max().map_or(0, |r| r + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::build_point_set;

    fn ranks(raw: &[&[f64]]) -> Vec<usize> {
        sort_naive(&build_point_set(raw).unwrap()).into_vec()
    }

    #[test]
    fn small_cases() {
        assert_eq!(ranks(&[&[0.0, 0.0]]), [0]);
        assert_eq!(ranks(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]]), [0, 1, 2]);
        assert_eq!(ranks(&[&[0.0, 2.0], &[1.0, 1.0], &[2.0, 0.0]]), [0, 0, 0]);
        assert_eq!(ranks(&[&[1.0, 1.0], &[1.0, 1.0], &[2.0, 2.0]]), [0, 0, 1]);
    }

    #[test]
    fn reversed_chain() {
        assert_eq!(ranks(&[&[2.0, 2.0], &[1.0, 1.0], &[0.0, 0.0]]), [2, 1, 0]);
    }

    #[test]
    fn level_counts() {
        assert_eq!(count_levels(&[0, 0, 0]), 1);
        assert_eq!(count_levels(&[0, 1, 2]), 3);
        assert_eq!(count_levels(&[0, 1, 1, 0]), 2);
        assert_eq!(count_levels(&[]), 0);
    }
}
