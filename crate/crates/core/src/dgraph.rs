//! Dahlhaus's graph: a graph on the sets with at most `|F|` edges and the
//! same connected components as the overlap graph.
//!
//! Each SL list is scanned from the smallest set up while keeping `T`, the
//! largest `|Max(X)|` among the sets already passed. The current set is
//! joined to its predecessor whenever its size is at most `T`. Edges of this
//! graph need not be overlapping pairs.

use crate::family::{SetFamily, SlLists};
use crate::graph::{self, ComponentLabeling, Edge};
use crate::maxcomp::MaxAssignment;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DahlhausGraph {
    m: usize,
    raw_edges: usize,
    edges: Vec<Edge>,
}

impl DahlhausGraph {
    /// Number of edges created before deduplication.
    pub fn raw_edge_count(&self) -> usize {
        self.raw_edges
    }

    /// Deduplicated edges, `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn components(&self) -> ComponentLabeling {
        graph::components(self.m, &self.edges)
    }

    pub fn to_dot(&self) -> String {
        graph::to_dot("dahlhaus", self.m, &self.edges)
    }
}

pub fn build_dgraph(f: &SetFamily, sl: &SlLists, max: &MaxAssignment) -> DahlhausGraph {
    // (|X|, |Max(X)|) side by side: one lookup per list entry
    let info: Vec<(u32, u32)> = (0..f.m()).map(|x| (f.size(x) as u32, max.max_size(f, x) as u32)).collect();
    let mut raw = Vec::new();
    for v in 0..sl.len() {
        let list = sl.get(v);
        let mut threshold = 0;
        let Some(&first) = list.first() else { continue };
        let mut prev = first;
        for &cur in &list[1..] {
            threshold = threshold.max(info[prev as usize].1);
            if info[cur as usize].0 <= threshold {
                raw.push((prev as usize, cur as usize));
            }
            prev = cur;
        }
    }
    assert!(
        raw.len() <= f.total_size(),
        "{} edges created for |F| = {}",
        raw.len(),
        f.total_size()
    );
    let edges = graph::normalize_edges(f.m(), &raw);
    DahlhausGraph { m: f.m(), raw_edges: raw.len(), edges }
}
