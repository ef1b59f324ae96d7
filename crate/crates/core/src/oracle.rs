//! Quadratic reference implementations, straight from the definitions. They
//! refuse families with more than a configurable number of sets.

use std::collections::HashSet;

use thiserror::Error;

use crate::family::{LfOrder, SetFamily};
use crate::graph::{ComponentLabeling, Edge, UnionFind};
use crate::maxcomp::MaxAssignment;

pub const DEFAULT_ORACLE_CAP: usize = 5000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("family has {m} sets, above the oracle cap of {cap}")]
    CapExceeded { m: usize, cap: usize },
}

fn check_cap(f: &SetFamily, cap: usize) -> Result<(), OracleError> {
    if f.m() > cap {
        return Err(OracleError::CapExceeded { m: f.m(), cap });
    }
    Ok(())
}

/// `A ∩ B ≠ ∅`, `A \ B ≠ ∅` and `B \ A ≠ ∅`.
pub fn overlaps(a: &[usize], b: &[usize]) -> bool {
    let a: HashSet<usize> = a.iter().copied().collect();
    let b: HashSet<usize> = b.iter().copied().collect();
    let common = a.intersection(&b).count();
    common > 0 && common < a.len() && common < b.len()
}

/// Overlap tests between sets of one family using a stamped mark array.
struct Marks<'a> {
    f: &'a SetFamily,
    mark: Vec<usize>,
    current: usize,
}

impl<'a> Marks<'a> {
    fn new(f: &'a SetFamily) -> Self {
        Marks { f, mark: vec![usize::MAX; f.n()], current: usize::MAX }
    }

    fn select(&mut self, x: usize) {
        self.current = x;
        for &v in self.f.set(x) {
            self.mark[v] = x;
        }
    }

    fn overlaps_selected(&self, y: usize) -> bool {
        let common = self.f.set(y).iter().filter(|&&v| self.mark[v] == self.current).count();
        common > 0 && common < self.f.size(self.current) && common < self.f.size(y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapGraphFull {
    pub edges: Vec<Edge>,
    pub labeling: ComponentLabeling,
}

/// Every overlapping pair `(i, j)` with `i < j`, in lexicographic order.
pub fn overlap_graph_full(f: &SetFamily, cap: usize) -> Result<OverlapGraphFull, OracleError> {
    check_cap(f, cap)?;
    let mut marks = Marks::new(f);
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(f.m());
    for i in 0..f.m() {
        marks.select(i);
        for j in i + 1..f.m() {
            if marks.overlaps_selected(j) {
                edges.push((i, j));
                uf.union(i, j);
            }
        }
    }
    let labeling = ComponentLabeling::from_union_find(f.m(), &mut uf);
    Ok(OverlapGraphFull { edges, labeling })
}

/// For each `X`, the first `Y` in LF order with `|Y| >= |X|` overlapping `X`.
pub fn max_oracle(f: &SetFamily, lf: &LfOrder, cap: usize) -> Result<MaxAssignment, OracleError> {
    check_cap(f, cap)?;
    let mut marks = Marks::new(f);
    let max = (0..f.m())
        .map(|x| {
            marks.select(x);
            lf.order()
                .iter()
                .copied()
                .take_while(|&y| f.size(y) >= f.size(x))
                .find(|&y| marks.overlaps_selected(y))
        })
        .collect();
    Ok(MaxAssignment::new(max))
}
