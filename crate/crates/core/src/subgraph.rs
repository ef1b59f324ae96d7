//! A linear-size subgraph of the overlap graph with the same components, and
//! spanning forests of the overlap classes drawn from it.
//!
//! Instead of chaining consecutive SL entries like Dahlhaus's graph does, the
//! scan links every `X` to `Max(X)` and records, for each set `Y` covered by
//! an interval headed by `X`, a [`Quintuple`]. Checking whether `Y` contains
//! the elements at `left(X)` and `right(X)` then tells whether `Y` overlaps
//! `X` or `Max(X)`, so every emitted edge is a true overlap.

use crate::family::{SetFamily, SlLists};
use crate::graph::{self, ComponentLabeling, Edge, UnionFind};
use crate::maxcomp::{Bounds, MaxAssignment, PfOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quintuple {
    pub left: usize,
    pub right: usize,
    pub x: usize,
    pub y: usize,
    pub max: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuintupleScan {
    /// `(X, Max(X))` for every `X` with a defined `Max`.
    pub base_edges: Vec<Edge>,
    pub quintuples: Vec<Quintuple>,
}

/// What the scan needs to know about one set, packed into one record.
#[derive(Clone, Copy)]
struct Head {
    size: u32,
    // |Max(X)|, 0 when undefined
    reach: u32,
    max: u32,
    left: u32,
    right: u32,
}

/// Scans every SL list. Within a list, each set `Z` is attached to the
/// latest earlier set `X` whose interval still covers it (`Max(X)` defined
/// and `|Z| <= |Max(X)|`).
pub fn build_quintuples(f: &SetFamily, sl: &SlLists, max: &MaxAssignment, bounds: &Bounds) -> QuintupleScan {
    let base_edges = (0..f.m()).filter_map(|x| max.get(x).map(|y| (x, y))).collect();
    let info: Vec<Head> = (0..f.m())
        .map(|x| Head {
            size: f.size(x) as u32,
            reach: max.max_size(f, x) as u32,
            max: max.get(x).map_or(u32::MAX, |y| y as u32),
            left: bounds.left(x) as u32,
            right: bounds.right(x) as u32,
        })
        .collect();
    let mut quintuples = Vec::new();
    // heads by list position, with reach strictly decreasing from bottom to top
    let mut heads: Vec<(usize, Head)> = Vec::new();
    for v in 0..sl.len() {
        heads.clear();
        for &z in sl.get(v) {
            let zi = info[z as usize];
            while heads.last().is_some_and(|(_, h)| h.reach < zi.size) {
                heads.pop();
            }
            if let Some(&(x, h)) = heads.last() {
                if z != h.max {
                    quintuples.push(Quintuple {
                        left: h.left as usize,
                        right: h.right as usize,
                        x,
                        y: z as usize,
                        max: h.max as usize,
                    });
                }
            }
            if zi.reach > 0 {
                while heads.last().is_some_and(|(_, h)| h.reach <= zi.reach) {
                    heads.pop();
                }
                heads.push((z as usize, zi));
            }
        }
    }
    debug_assert!(quintuples.len() <= f.total_size());
    QuintupleScan { base_edges, quintuples }
}

/// Turns each quintuple into an overlap edge: `(X, Y)` when `Y` misses the
/// element at `left(X)` or at `right(X)`, `(Y, Max(X))` otherwise.
///
/// Runs in two bucketed passes, by `left` and then by `right` for the
/// quintuples whose `Y` contains the left element. Membership is tested by
/// stamping the sets of one SL list at a time.
pub fn resolve_quintuples(quintuples: &[Quintuple], f: &SetFamily, pf: &PfOrder, sl: &SlLists) -> Vec<Edge> {
    let mut stamp = vec![0u32; f.m()];
    let mut generation = 0;
    let mut edges = Vec::with_capacity(quintuples.len());

    // pass 1 keyed by left; survivors carry their right position along
    let (by_left, start) = bucket_by(f.n(), quintuples.iter().map(|q| (q.left, [q.x, q.y, q.max, q.right].map(|v| v as u32))));
    let mut second = Vec::new();
    for pos in (1..=f.n()).filter(|&p| start[p] < start[p + 1]) {
        generation += 1;
        for &s in sl.get(pf.elem_at(pos)) {
            stamp[s as usize] = generation;
        }
        for &[x, y, max, right] in &by_left[start[pos]..start[pos + 1]] {
            if stamp[y as usize] != generation {
                edges.push((x as usize, y as usize));
            } else {
                second.push((right as usize, [x, y, max, 0]));
            }
        }
    }

    let (by_right, start) = bucket_by(f.n(), second.iter().copied());
    for pos in (1..=f.n()).filter(|&p| start[p] < start[p + 1]) {
        generation += 1;
        for &s in sl.get(pf.elem_at(pos)) {
            stamp[s as usize] = generation;
        }
        for &[x, y, max, _] in &by_right[start[pos]..start[pos + 1]] {
            if stamp[y as usize] != generation {
                edges.push((x as usize, y as usize));
            } else {
                edges.push((y as usize, max as usize));
            }
        }
    }
    edges
}

/// Counting sort of `[x, y, max, extra]` records by a 1-based position key.
/// Bucket `p` is `sorted[start[p]..start[p + 1]]`. `O(n + len)`.
fn bucket_by(n: usize, records: impl Iterator<Item = (usize, [u32; 4])> + Clone) -> (Vec<[u32; 4]>, Vec<usize>) {
    let mut start = vec![0usize; n + 2];
    for (key, _) in records.clone() {
        start[key + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let mut sorted = vec![[0u32; 4]; start[n + 1]];
    let mut cursor = start.clone();
    for (key, r) in records {
        sorted[cursor[key]] = r;
        cursor[key] += 1;
    }
    (sorted, start)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapSubgraph {
    m: usize,
    edges: Vec<Edge>,
    quintuple_count: usize,
}

impl OverlapSubgraph {
    pub fn from_edges(m: usize, edges: &[Edge]) -> Self {
        OverlapSubgraph { m, edges: graph::normalize_edges(m, edges), quintuple_count: 0 }
    }

    /// Deduplicated edges, `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn quintuple_count(&self) -> usize {
        self.quintuple_count
    }

    pub fn components(&self) -> ComponentLabeling {
        graph::components(self.m, &self.edges)
    }

    pub fn to_dot(&self) -> String {
        graph::to_dot("overlap_subgraph", self.m, &self.edges)
    }
}

pub fn build_subgraph(f: &SetFamily, sl: &SlLists, max: &MaxAssignment, bounds: &Bounds, pf: &PfOrder) -> OverlapSubgraph {
    let scan = build_quintuples(f, sl, max, bounds);
    let mut edges = scan.base_edges;
    edges.extend(resolve_quintuples(&scan.quintuples, f, pf, sl));
    OverlapSubgraph {
        m: f.m(),
        edges: graph::normalize_edges(f.m(), &edges),
        quintuple_count: scan.quintuples.len(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    /// Smallest set of the class.
    pub root: usize,
    pub edges: Vec<Edge>,
}

/// One spanning tree per overlap class, in class-id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    m: usize,
    trees: Vec<SpanningTree>,
}

impl SpanningForest {
    pub fn trees(&self) -> &[SpanningTree] {
        &self.trees
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.trees.iter().flat_map(|t| t.edges.iter().copied()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.trees.iter().map(|t| t.edges.len()).sum()
    }

    pub fn to_dot(&self) -> String {
        graph::to_dot("spanning_forest", self.m, &self.edges())
    }
}

pub fn spanning_forest(g: &OverlapSubgraph) -> SpanningForest {
    let m = g.vertex_count();
    let mut uf = UnionFind::new(m);
    let tree_edges: Vec<Edge> = g.edges().iter().copied().filter(|&(a, b)| uf.union(a, b)).collect();
    let labels = ComponentLabeling::from_union_find(m, &mut uf);
    let mut trees: Vec<SpanningTree> =
        labels.classes().iter().map(|c| SpanningTree { root: c[0], edges: Vec::new() }).collect();
    for (a, b) in tree_edges {
        trees[labels.class_of(a)].edges.push((a, b));
    }
    SpanningForest { m, trees }
}
