//! A miniature timing grid and its ratio summary.
//!
//! `cargo run --release --example benchmark_grid`

use ndsort::bench::{
    grid_sizes, run_grid, summarize_ratios, write_summary_csv, write_timing_csv, Algorithm,
    GridConfig,
};

pub fn run_example() -> ndsort::Result<()> {
    let config = GridConfig {
        sizes: grid_sizes(8, 10),
        objectives: vec![3, 7],
        levels: vec![1, 5],
        trials: 3,
        algorithms: vec![Algorithm::Bos, Algorithm::Dc, Algorithm::Hybrid],
        ..GridConfig::default()
    };
    let rows = run_grid(&config)?;
    assert_eq!(rows.len(), 3 * 2 * 2 * 3 * 3);

    let mut timing = Vec::new();
    write_timing_csv(&mut timing, &rows[..6])?;
    println!("first timing rows:\n{}", String::from_utf8_lossy(&timing));

    let mut summary = Vec::new();
    write_summary_csv(&mut summary, &summarize_ratios(&rows)?)?;
    println!(
        "ratios to mean divide-and-conquer time:\n{}",
        String::from_utf8_lossy(&summary)
    );
    Ok(())
}

fn main() -> ndsort::Result<()> {
    run_example()
}
