use crate::point::{lex_compare, PointSet, RankAssignment};

/// Distinct points stored in lexicographic order.
///
/// Position order equals lexicographic order, so an ascending slice of
/// positions is a lexicographically sorted subset. Both the
/// divide-and-conquer recursion and the adapted Best Order Sort address
/// points by position.
#[derive(Debug, Clone)]
pub struct SortedPoints {
    values: Vec<f64>,
    dim: usize,
    origin: Vec<usize>,
}

impl SortedPoints {
    pub fn from_point_set(points: &PointSet) -> Self {
        let dim = points.dim();
        let mut origin: Vec<usize> = (0..points.len()).collect();
        origin.sort_unstable_by(|&a, &b| lex_compare(points.point(a), points.point(b)));
        let mut values = Vec::with_capacity(points.values().len());
        for &i in &origin {
            values.extend_from_slice(points.point(i));
        }
        Self {
            values,
            dim,
            origin,
        }
    }

    /// Builds from rows that the caller guarantees to be distinct and
    /// lexicographically ascending.
    pub(crate) fn from_sorted_rows(values: Vec<f64>, dim: usize) -> Self {
        let n = values.len().checked_div(dim).unwrap_or(0);
        debug_assert!((1..n).all(|i| {
            lex_compare(
                &values[(i - 1) * dim..i * dim],
                &values[i * dim..(i + 1) * dim],
            )
            .is_lt()
        }));
        Self {
            values,
            dim,
            origin: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.origin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origin.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.values[i * self.dim..(i + 1) * self.dim]
    }

    #[inline]
    pub fn value(&self, i: usize, objective: usize) -> f64 {
        self.values[i * self.dim + objective]
    }

    /// Index into the originating [`PointSet`] of the point at position `i`.
    pub fn origin(&self, i: usize) -> usize {
        self.origin[i]
    }

    /// Maps ranks by sorted position back to one rank per original input point.
    pub fn scatter(&self, sorted_ranks: &[usize], points: &PointSet) -> RankAssignment {
        let mut unique = vec![0; self.len()];
        for (pos, &r) in sorted_ranks.iter().enumerate() {
            unique[self.origin[pos]] = r;
        }
        points.expand_ranks(&unique)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::build_point_set;

    #[test]
    fn sorts_and_scatters() {
        let ps = build_point_set(&[[2.0, 0.0], [1.0, 5.0], [1.0, 3.0], [2.0, 0.0]]).unwrap();
        let sp = SortedPoints::from_point_set(&ps);
        assert_eq!(sp.point(0), &[1.0, 3.0]);
        assert_eq!(sp.point(1), &[1.0, 5.0]);
        assert_eq!(sp.point(2), &[2.0, 0.0]);
        let ranks = sp.scatter(&[10, 11, 12], &ps);
        assert_eq!(ranks.as_slice(), &[12, 11, 10, 12]);
    }
}
