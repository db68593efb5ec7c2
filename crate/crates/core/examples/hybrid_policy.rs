//! The switch interval, and how the policy changes what gets delegated.
//!
//! `cargo run --example hybrid_policy`

use ndsort::datagen::{generate, DatasetSpec};
use ndsort::dc::NoHook;
use ndsort::hybrid::{sort_hybrid_with, sort_hybrid_with_stats, switch_interval, PolicyRule};
use ndsort::{sort_dc, DMode, SwitchPolicy};

pub fn run_example() -> ndsort::Result<()> {
    let defaults = SwitchPolicy::default();
    for m in 3..=10 {
        let (lo, hi) = switch_interval(m, &defaults, 10);
        let (_, hi_orig) = switch_interval(
            m,
            &SwitchPolicy {
                d_mode: DMode::Original,
                ..defaults
            },
            10,
        );
        println!("m={m:2}  n_min={lo:7.2}  n_max={hi:8.2}  (d=M: {hi_orig:8.2})");
    }

    let points = generate(&DatasetSpec::new(2000, 7, 1, 42))?;
    let expected = sort_dc(&points);

    let (ranks, stats) = sort_hybrid_with_stats(&points, &defaults);
    assert_eq!(ranks, expected);
    println!("default policy: {stats:?}");

    let wide = SwitchPolicy {
        c_right: 400.0,
        ..defaults
    };
    wide.validate()?;
    let (ranks, stats) = sort_hybrid_with_stats(&points, &wide);
    assert_eq!(ranks, expected);
    println!("c_right=400:   {stats:?}");

    let (ranks, stats) = sort_hybrid_with(
        &points,
        PolicyRule::new(
            SwitchPolicy {
                d_mode: DMode::Original,
                ..defaults
            },
            points.dim(),
        ),
        NoHook,
    );
    assert_eq!(ranks, expected);
    println!("d = M:          {stats:?}");

    // Any closure works as a rule; this one hands over everything small.
    let (ranks, stats) = sort_hybrid_with(&points, |_, n: usize, _| n <= 64, NoHook);
    assert_eq!(ranks, expected);
    println!("n <= 64:        {stats:?}");
    Ok(())
}

fn main() -> ndsort::Result<()> {
    run_example()
}
