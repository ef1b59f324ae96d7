//! Text, JSON and DOT output. Sets are printed 1-based as `X<i>`.

use std::fmt::{self, Write as _};
use std::time::Duration;

use overlap::pipeline::StageTimings;
use overlap::{Analysis, SetFamily};
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum View {
    Classes,
    Max,
    Subgraph,
    Forest,
}

#[derive(Serialize)]
struct Json {
    classes: Vec<Vec<usize>>,
    max: Vec<Option<usize>>,
    edges: Vec<[usize; 2]>,
}

fn edges_for(a: &Analysis, view: View) -> Vec<(usize, usize)> {
    match view {
        View::Classes | View::Max => a.dgraph.edges().to_vec(),
        View::Subgraph => a.subgraph.edges().to_vec(),
        View::Forest => a.forest.edges(),
    }
}

pub fn json(a: &Analysis, view: View) -> String {
    let doc = Json {
        classes: a.classes.classes().iter().map(|c| c.iter().map(|x| x + 1).collect()).collect(),
        max: a.max.as_slice().iter().map(|m| m.map(|y| y + 1)).collect(),
        edges: edges_for(a, view).into_iter().map(|(x, y)| [x + 1, y + 1]).collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn text(a: &Analysis, view: View) -> String {
    let mut out = String::new();
    match view {
        View::Classes => {
            for (x, c) in a.classes.labels().iter().enumerate() {
                let _ = writeln!(out, "X{} {c}", x + 1);
            }
        }
        View::Max => {
            for (x, m) in a.max.as_slice().iter().enumerate() {
                match m {
                    Some(y) => writeln!(out, "X{} -> X{}", x + 1, y + 1),
                    None => writeln!(out, "X{} -> none", x + 1),
                }
                .unwrap();
            }
        }
        View::Subgraph => {
            for (x, y) in a.subgraph.edges() {
                let _ = writeln!(out, "X{} -- X{}", x + 1, y + 1);
            }
        }
        View::Forest => {
            for (i, tree) in a.forest.trees().iter().enumerate() {
                let _ = writeln!(out, "tree {i} root X{}", tree.root + 1);
                for (x, y) in &tree.edges {
                    let _ = writeln!(out, "  X{} -- X{}", x + 1, y + 1);
                }
            }
        }
    }
    out
}

pub fn dot(a: &Analysis, view: View) -> String {
    match view {
        View::Classes => a.dgraph.to_dot(),
        View::Subgraph => a.subgraph.to_dot(),
        View::Forest => a.forest.to_dot(),
        View::Max => {
            let mut out = String::from("digraph max {\n");
            for (x, m) in a.max.as_slice().iter().enumerate() {
                let _ = writeln!(out, "  X{};", x + 1);
                if let Some(y) = m {
                    let _ = writeln!(out, "  X{} -> X{};", x + 1, y + 1);
                }
            }
            out.push_str("}\n");
            out
        }
    }
}

/// Sizes, output counts and stage times of one run.
pub struct RunReport {
    pub n: usize,
    pub m: usize,
    pub total_size: usize,
    pub classes: usize,
    pub dgraph_edges: usize,
    pub dgraph_raw_edges: usize,
    pub subgraph_edges: usize,
    pub forest_edges: usize,
    pub timings: StageTimings,
}

impl RunReport {
    pub fn new(f: &SetFamily, a: &Analysis) -> Self {
        RunReport {
            n: f.n(),
            m: f.m(),
            total_size: f.total_size(),
            classes: a.classes.class_count(),
            dgraph_edges: a.dgraph.edges().len(),
            dgraph_raw_edges: a.dgraph.raw_edge_count(),
            subgraph_edges: a.subgraph.edges().len(),
            forest_edges: a.forest.edge_count(),
            timings: a.timings,
        }
    }
}

pub fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "total_size={}", self.total_size)?;
        writeln!(f, "classes={}", self.classes)?;
        writeln!(f, "dgraph_edges={} (created {})", self.dgraph_edges, self.dgraph_raw_edges)?;
        writeln!(f, "subgraph_edges={}", self.subgraph_edges)?;
        writeln!(f, "forest_edges={}", self.forest_edges)?;
        for (name, d) in StageTimings::NAMES.iter().zip(self.timings.as_array()) {
            writeln!(f, "time_{name}_ms={:.3}", millis(d))?;
        }
        writeln!(f, "time_total_ms={:.3}", millis(self.timings.total()))
    }
}
