//! Record the divide-and-conquer subproblems of one run and time both
//! solvers on a sample of them.
//!
//! `cargo run --release --example subproblem_scatter`

use ndsort::bench::{compare_subproblem, record_subproblems, write_subproblem_csv};
use ndsort::datagen::{generate, DatasetSpec};

pub fn run_example() -> ndsort::Result<usize> {
    let points = generate(&DatasetSpec::new(1000, 6, 1, 3))?;
    let recording = record_subproblems(&points);
    println!("{} subproblems with m > 2", recording.records.len());

    let step = (recording.records.len() / 40).max(1);
    let rows = (0..recording.records.len())
        .step_by(step)
        .map(|i| compare_subproblem(&recording, i, 3))
        .collect::<ndsort::Result<Vec<_>>>()?;
    let faster = rows.iter().filter(|r| r.rel_gap < 0.0).count();
    println!(
        "{faster} of {} sampled subproblems are faster with Best Order Sort",
        rows.len()
    );

    let mut csv = Vec::new();
    write_subproblem_csv(&mut csv, &rows[..rows.len().min(5)])?;
    print!("{}", String::from_utf8_lossy(&csv));
    Ok(rows.len())
}

fn main() -> ndsort::Result<()> {
    run_example().map(drop)
}
