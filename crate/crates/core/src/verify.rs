//! Differential check of a pipeline run against the quadratic oracle.

use std::fmt;

use crate::family::SetFamily;
use crate::graph::{ComponentLabeling, UnionFind};
use crate::oracle::{self, OracleError};
use crate::pipeline::Analysis;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// First counterexample found, if any.
    pub failure: Option<String>,
    /// Sets involved in the counterexample.
    pub witness: Vec<usize>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// The sets named by failing checks, without repeats, in first-mention
    /// order.
    pub fn witnesses(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for x in self.checks.iter().flat_map(|c| c.witness.iter().copied()) {
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "PASS {}", c.name)?,
                Some(why) => writeln!(f, "FAIL {}: {}", c.name, why)?,
            }
        }
        Ok(())
    }
}

fn describe(f: &SetFamily, x: usize) -> String {
    let elems: Vec<&str> = f.set(x).iter().map(|&v| f.token(v)).collect();
    format!("X{} {{{}}}", x + 1, elems.join(" "))
}

fn name(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_owned(), |y| format!("X{}", y + 1))
}

/// Smallest pair on which two labelings disagree about sharing a class.
fn partition_diff(f: &SetFamily, got: &ComponentLabeling, want: &ComponentLabeling) -> Option<(String, Vec<usize>)> {
    for x in 0..f.m() {
        let g = got.classes()[got.class_of(x)][0];
        let w = want.classes()[want.class_of(x)][0];
        if g != w {
            let other = g.min(w);
            let together = g < w;
            let why = format!(
                "{} and {} are {} but should {}",
                describe(f, other),
                describe(f, x),
                if together { "in one class" } else { "in different classes" },
                if together { "not be" } else { "be together" },
            );
            return Some((why, vec![other, x]));
        }
    }
    None
}

fn check(name: &'static str, failure: Option<(String, Vec<usize>)>) -> Check {
    match failure {
        Some((why, witness)) => Check { name, failure: Some(why), witness },
        None => Check { name, failure: None, witness: Vec::new() },
    }
}

pub fn verify(f: &SetFamily, a: &Analysis, cap: usize) -> Result<VerifyReport, OracleError> {
    let full = oracle::overlap_graph_full(f, cap)?;
    let max = oracle::max_oracle(f, &a.lf, cap)?;
    let mut checks = Vec::new();

    checks.push(check("classes", partition_diff(f, &a.classes, &full.labeling)));

    let max_failure = (0..f.m()).find(|&x| a.max.get(x) != max.get(x)).map(|x| {
        let why = format!("Max({}) is {} but should be {}", describe(f, x), name(a.max.get(x)), name(max.get(x)));
        let witness = [Some(x), a.max.get(x), max.get(x)].into_iter().flatten().collect();
        (why, witness)
    });
    checks.push(check("max", max_failure));

    let raw = a.dgraph.raw_edge_count();
    checks.push(check(
        "dgraph-edge-bound",
        (raw > f.total_size()).then(|| (format!("{raw} edges created, |F| = {}", f.total_size()), Vec::new())),
    ));

    let bad_edge = a.subgraph.edges().iter().find(|&&(x, y)| !oracle::overlaps(f.set(x), f.set(y)));
    checks.push(check(
        "subgraph-sound",
        bad_edge.map(|&(x, y)| (format!("{} and {} do not overlap", describe(f, x), describe(f, y)), vec![x, y])),
    ));

    checks.push(check("subgraph-components", partition_diff(f, &a.subgraph.components(), &full.labeling)));

    let limit = f.m() + f.total_size();
    let count = a.subgraph.edges().len();
    checks.push(check(
        "subgraph-size",
        (count > limit).then(|| (format!("{count} edges, limit m + |F| = {limit}"), Vec::new())),
    ));

    checks.push(check("forest", forest_failure(a)));

    Ok(VerifyReport { checks })
}

fn forest_failure(a: &Analysis) -> Option<(String, Vec<usize>)> {
    let m = a.classes.labels().len();
    let mut uf = UnionFind::new(m);
    let classes = a.subgraph.components();
    for tree in a.forest.trees() {
        let class = classes.class_of(tree.root);
        let size = classes.classes()[class].len();
        if tree.edges.len() + 1 != size {
            let why = format!("tree rooted at X{} has {} edges for a class of {size}", tree.root + 1, tree.edges.len());
            return Some((why, vec![tree.root]));
        }
        for &(x, y) in &tree.edges {
            if a.subgraph.edges().binary_search(&(x.min(y), x.max(y))).is_err() {
                return Some((format!("edge X{}-X{} is not a subgraph edge", x + 1, y + 1), vec![x, y]));
            }
            if classes.class_of(x) != class || classes.class_of(y) != class {
                return Some((format!("edge X{}-X{} leaves the class of X{}", x + 1, y + 1, tree.root + 1), vec![x, y]));
            }
            if !uf.union(x, y) {
                return Some((format!("edge X{}-X{} closes a cycle", x + 1, y + 1), vec![x, y]));
            }
        }
    }
    if a.forest.trees().len() != classes.class_count() {
        return Some((format!("{} trees for {} classes", a.forest.trees().len(), classes.class_count()), Vec::new()));
    }
    None
}
