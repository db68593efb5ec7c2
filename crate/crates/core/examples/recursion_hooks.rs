//! Watching the divide-and-conquer recursion through a hook.
//!
//! `cargo run --example recursion_hooks`

use ndsort::dc::{
    sort_dc_with_hook, Decision, RecursionHook, Subproblem, SubproblemKind, TraceHook,
};
use ndsort::{build_point_set, sort_naive, SortedPoints};

/// Counts entries and pairwise comparisons per active objective count.
#[derive(Default)]
struct Census {
    entries: Vec<(usize, usize)>,
    compares: usize,
}

impl RecursionHook for Census {
    fn before(
        &mut self,
        sub: Subproblem<'_>,
        m: usize,
        _: &SortedPoints,
        _: &mut [usize],
    ) -> Decision {
        if self.entries.len() <= m {
            self.entries.resize(m + 1, (0, 0));
        }
        match sub.kind() {
            SubproblemKind::A => self.entries[m].0 += 1,
            SubproblemKind::B => self.entries[m].1 += 1,
        }
        Decision::Declined
    }

    fn on_compare(&mut self, _: usize, _: usize, _: usize, _: &[usize]) {
        self.compares += 1;
    }
}

pub fn run_example() -> ndsort::Result<()> {
    let rows: Vec<[f64; 4]> = (0..64u32)
        .map(|i| {
            let h = |k: u32| (i.wrapping_mul(2654435761).rotate_left(k) % 101) as f64;
            [h(1), h(9), h(17), h(25)]
        })
        .collect();
    let points = build_point_set(&rows)?;

    let mut trace = TraceHook::default();
    let ranks = sort_dc_with_hook(&points, &mut trace);
    assert_eq!(ranks, sort_naive(&points));
    for (kind, size, m) in trace.calls.iter().take(8) {
        println!("{} n={size} m={m}", kind.as_str());
    }
    println!("... {} helper entries in total", trace.calls.len());

    let mut census = Census::default();
    sort_dc_with_hook(&points, &mut census);
    for (m, (a, b)) in census.entries.iter().enumerate().skip(2) {
        println!("m={m}: {a} A-calls, {b} B-calls");
    }
    println!("{} comparisons or tree queries", census.compares);
    Ok(())
}

fn main() -> ndsort::Result<()> {
    run_example()
}
