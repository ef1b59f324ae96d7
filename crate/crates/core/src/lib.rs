//! Overlap classes of a set family in `O(n + |F|)` time.
//!
//! Two sets overlap when they intersect and neither contains the other. The
//! overlap classes are the connected components of the overlap graph, which
//! can have quadratically many edges. This crate computes them without
//! building that graph:
//!
//! * [`maxcomp`] finds, for every set `X`, the first set `Max(X)` in
//!   decreasing-size order that overlaps `X` and is no smaller, using three
//!   passes of [`partition`] refinement;
//! * [`dgraph`] builds Dahlhaus's graph from those values, a graph with at
//!   most `|F|` edges and the same components as the overlap graph;
//! * [`subgraph`] builds instead a subgraph of the overlap graph itself, still
//!   of linear size, and spanning trees of every class.
//!
//! [`oracle`] holds the quadratic definitions used for differential testing,
//! and [`verify`] compares a run against them.
//!
//! ```
//! use overlap::{Analysis, SetFamily};
//!
//! let f = SetFamily::parse("1 2\n2 3\n3 4\n1 2 3 4\n").unwrap();
//! let a = Analysis::run(&f);
//! assert_eq!(a.classes.classes(), &[vec![0, 1, 2], vec![3]]);
//! assert_eq!(a.max.get(2), Some(1));
//! ```

pub mod dgraph;
pub mod family;
pub mod gen;
pub mod graph;
pub mod maxcomp;
pub mod oracle;
pub mod partition;
pub mod pipeline;
pub mod subgraph;
pub mod verify;

pub use dgraph::DahlhausGraph;
pub use family::{FamilyError, LfOrder, SetFamily, SlLists};
pub use graph::ComponentLabeling;
pub use maxcomp::{MaxAssignment, MaxComputation};
pub use partition::OrderedPartition;
pub use pipeline::{overlap_classes, Analysis};
pub use subgraph::{OverlapSubgraph, SpanningForest};

// Code listings in the guide are compiled and run as doc tests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/partition.md")]
    mod partition {}
    #[doc = include_str!("../../../book/src/max.md")]
    mod max {}
    #[doc = include_str!("../../../book/src/dahlhaus.md")]
    mod dahlhaus {}
    #[doc = include_str!("../../../book/src/subgraph.md")]
    mod subgraph {}
    #[doc = include_str!("../../../book/src/testing.md")]
    mod testing {}
}
