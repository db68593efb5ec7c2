//! Rank a small set of points with every algorithm.
//!
//! `cargo run --example basic_sort`

use ndsort::{
    build_point_set, count_levels, sort_bos, sort_dc, sort_hybrid, sort_naive, SwitchPolicy,
};

pub fn run_example() -> ndsort::Result<Vec<usize>> {
    // Two copies of (1, 4, 2): equal points always share a rank.
    let rows = [
        [1.0, 4.0, 2.0],
        [2.0, 2.0, 2.0],
        [1.0, 4.0, 2.0],
        [3.0, 5.0, 3.0],
        [0.5, 6.0, 1.0],
        [4.0, 4.0, 4.0],
    ];
    let points = build_point_set(&rows)?;
    println!(
        "{} points, {} distinct",
        points.original_len(),
        points.len()
    );

    let ranks = sort_naive(&points);
    for (row, rank) in rows.iter().zip(ranks.iter()) {
        println!("{row:?} -> {rank}");
    }
    assert_eq!(sort_bos(&points), ranks);
    assert_eq!(sort_dc(&points), ranks);
    assert_eq!(sort_hybrid(&points, &SwitchPolicy::default()), ranks);
    println!("{} levels", count_levels(&ranks));
    Ok(ranks.into_vec())
}

fn main() -> ndsort::Result<()> {
    run_example().map(drop)
}
