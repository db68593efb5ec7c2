//! # ndsort
//!
//! Non-dominated sorting for minimization problems. Four interchangeable
//! algorithms assign every point its Pareto rank:
//!
//! - [`sort_naive`]: quadratic reference, straight from the definition.
//! - [`sort_bos`]: Best Order Sort.
//! - [`sort_dc`]: divide-and-conquer with median splits and sweep-line base
//!   cases.
//! - [`sort_hybrid`]: divide-and-conquer that delegates mid-sized
//!   subproblems to an adapted Best Order Sort.
//!
//! ```
//! use ndsort::{build_point_set, sort_hybrid, SwitchPolicy};
//!
//! let points = build_point_set(&[[1.0, 2.0, 3.0], [2.0, 3.0, 4.0], [3.0, 1.0, 2.0]])?;
//! let ranks = sort_hybrid(&points, &SwitchPolicy::default());
//! assert_eq!(ranks.as_slice(), &[0, 1, 0]);
//! # Ok::<(), ndsort::Error>(())
//! ```
//!
//! Equal points share one entry internally and always get equal ranks.
//! [`datagen`] builds seeded benchmark datasets; [`bench`] times the
//! algorithms on a grid and replays individual subproblems.

pub mod bench;
pub mod bos;
pub mod datagen;
pub mod dc;
mod error;
pub mod hybrid;
pub mod oracle;
mod point;
mod sorted;

pub use bos::sort_bos;
pub use dc::sort_dc;
pub use error::{Error, Result};
pub use hybrid::{sort_hybrid, DMode, SwitchPolicy};
pub use oracle::{count_levels, sort_naive};
pub use point::{
    build_point_set, dominates_strict, dominates_weak, lex_compare, ObjectiveVector, PointSet,
    RankAssignment,
};
pub use sorted::SortedPoints;
