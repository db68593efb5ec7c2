use crate::sorted::SortedPoints;

/// The value at index `n / 2` of the sorted values (the upper middle for
/// even counts). Reorders `values`.
pub(crate) fn median_of(values: &mut [f64]) -> f64 {
    let mid = values.len() / 2;
    *values.select_nth_unstable_by(mid, f64::total_cmp).1
}

/// Stable three-way partition of `ids` by `key` against `pivot`.
///
/// On return `ids` holds the keys below, equal to, and above the pivot, in
/// that order and each in original order. Returns the two boundaries.
pub(crate) fn partition3(
    ids: &mut [usize],
    scratch: &mut [usize],
    key: impl Fn(usize) -> f64,
    pivot: f64,
) -> (usize, usize) {
    let mut low = 0;
    let mut mid = 0;
    for &i in ids.iter() {
        let k = key(i);
        if k < pivot {
            low += 1;
        } else if k == pivot {
            mid += 1;
        }
    }
    let (mut l, mut e, mut h) = (0, low, low + mid);
    for &i in ids.iter() {
        let k = key(i);
        let slot = if k < pivot {
            &mut l
        } else if k == pivot {
            &mut e
        } else {
            &mut h
        };
        scratch[*slot] = i;
        *slot += 1;
    }
    ids.copy_from_slice(&scratch[..ids.len()]);
    (low, low + mid)
}

/// Merges the ascending runs `ids[..split]` and `ids[split..]`.
pub(crate) fn merge_runs(ids: &mut [usize], split: usize, scratch: &mut [usize]) {
    if split == 0 || split == ids.len() || ids[split - 1] < ids[split] {
        return;
    }
    let (mut a, mut b, mut w) = (0, split, 0);
    while a < split && b < ids.len() {
        if ids[a] < ids[b] {
            scratch[w] = ids[a];
            a += 1;
        } else {
            scratch[w] = ids[b];
            b += 1;
        }
        w += 1;
    }
    scratch[w..w + split - a].copy_from_slice(&ids[a..split]);
    w += split - a;
    scratch[w..w + ids.len() - b].copy_from_slice(&ids[b..]);
    ids.copy_from_slice(&scratch[..ids.len()]);
}

/// Splits `set` by the median of `objective` into points below, at, and
/// above it, each part keeping the order of `set`.
pub fn split_by_median(
    points: &SortedPoints,
    set: &[usize],
    objective: usize,
) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    if set.is_empty() {
        return Default::default();
    }
    let mut values: Vec<f64> = set.iter().map(|&i| points.value(i, objective)).collect();
    let pivot = median_of(&mut values);
    let mut ids = set.to_vec();
    let mut scratch = vec![0; ids.len()];
    let (a, b) = partition3(
        &mut ids,
        &mut scratch,
        |i| points.value(i, objective),
        pivot,
    );
    let high = ids.split_off(b);
    let mid = ids.split_off(a);
    (ids, mid, high)
}
