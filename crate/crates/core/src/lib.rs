//! Strong monochromatic clique covers of multicolored complete graphs.
//!
//! A family of t-intervals (or t-subtrees of a tree) is the same thing as a
//! multicoloring of `K_n` in which color `i` is the intersection graph on
//! track `i`. Piercing the family with at most one point per track is the
//! same as covering vertices with monochromatic cliques of distinct colors.
//! This crate provides the colorings, the chordal-graph tools, the cover
//! algorithms, exact search oracles, and the extremal constructions.

pub mod chordal;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod covers;
pub mod error;
pub mod graph;

pub use coloring::{
    coloring_from_intervals, coloring_from_subtrees, is_kwise_intersecting, is_tk_coloring,
    kfold_min_colors, piercing_points, verify_cover, CoverReport, Interval, IntervalFamily,
    MultiColoring, StrongCover, SubtreeFamily,
};
pub use error::{Error, Result};
pub use graph::Graph;
