//! Small graph utilities shared by the Dahlhaus graph, the overlap subgraph
//! and the oracle: union-find, edge normalization and DOT output.

use std::fmt::Write as _;

/// Disjoint sets with path compression and union by size, over fewer than
/// `2^32` items.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        assert!(n <= u32::MAX as usize, "union-find over {n} items");
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut v = v as u32;
        let mut root = v;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[v as usize] != root {
            let next = self.parent[v as usize];
            self.parent[v as usize] = root;
            v = next;
        }
        root as usize
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
        true
    }
}

pub type Edge = (usize, usize);

/// Orders each pair as `(min, max)`, drops self-loops, then sorts and
/// deduplicates with two counting-sort passes in `O(m + |edges|)`.
pub fn normalize_edges(m: usize, edges: &[Edge]) -> Vec<Edge> {
    let pairs = || edges.iter().filter(|(a, b)| a != b).map(|&(a, b)| (a.min(b), a.max(b)));
    // smaller ends bucketed by larger end
    let (by_hi, hi_start) = bucket(m, pairs().map(|(a, b)| (b, a as u32)));
    // reading those buckets in order leaves every `a` bucket sorted by `b`
    let (by_lo, lo_start) = bucket(
        m,
        (0..m).flat_map(|b| by_hi[hi_start[b]..hi_start[b + 1]].iter().map(move |&a| (a as usize, b as u32))),
    );
    let mut out = Vec::with_capacity(by_lo.len());
    for a in 0..m {
        let mut last = None;
        for &b in &by_lo[lo_start[a]..lo_start[a + 1]] {
            if last != Some(b) {
                out.push((a, b as usize));
                last = Some(b);
            }
        }
    }
    out
}

/// Counting sort of `(key, value)` pairs with keys in `0..m`. Bucket `k` is
/// `values[start[k]..start[k + 1]]`, in input order.
fn bucket(m: usize, items: impl Iterator<Item = (usize, u32)> + Clone) -> (Vec<u32>, Vec<usize>) {
    let mut start = vec![0usize; m + 1];
    for (k, _) in items.clone() {
        start[k + 1] += 1;
    }
    for k in 1..=m {
        start[k] += start[k - 1];
    }
    let mut cursor = start.clone();
    let mut values = vec![0u32; start[m]];
    for (k, v) in items {
        values[cursor[k]] = v;
        cursor[k] += 1;
    }
    (values, start)
}

/// Connected components of a graph on `0..m`.
///
/// Class ids are dense and numbered by smallest member, so two labelings of
/// the same partition are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl ComponentLabeling {
    pub fn from_union_find(m: usize, uf: &mut UnionFind) -> Self {
        let mut id_of_root = vec![usize::MAX; m];
        let mut class_of = vec![0; m];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, slot) in class_of.iter_mut().enumerate() {
            let r = uf.find(x);
            if id_of_root[r] == usize::MAX {
                id_of_root[r] = classes.len();
                classes.push(Vec::new());
            }
            *slot = id_of_root[r];
            classes[id_of_root[r]].push(x);
        }
        ComponentLabeling { class_of, classes }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Members of every class, each in increasing set order.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }
}

pub fn components(m: usize, edges: &[Edge]) -> ComponentLabeling {
    let mut uf = UnionFind::new(m);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    ComponentLabeling::from_union_find(m, &mut uf)
}

/// Renders an undirected graph on `m` vertices named `X1..Xm`.
pub fn to_dot(name: &str, m: usize, edges: &[Edge]) -> String {
    let mut out = format!("graph {name} {{\n");
    for x in 0..m {
        let _ = writeln!(out, "  X{};", x + 1);
    }
    for &(a, b) in edges {
        let _ = writeln!(out, "  X{} -- X{};", a + 1, b + 1);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_sorts_and_dedups() {
        let e = normalize_edges(5, &[(3, 1), (1, 3), (0, 4), (2, 2), (1, 0), (0, 1)]);
        assert_eq!(e, vec![(0, 1), (0, 4), (1, 3)]);
        assert!(normalize_edges(0, &[]).is_empty());
    }

    #[test]
    fn components_basic() {
        let c = components(3, &[]);
        assert_eq!(c.class_count(), 3);
        let c = components(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(c.class_count(), 1);
        let c = components(4, &[(3, 1)]);
        assert_eq!(c.labels(), &[0, 1, 2, 1]);
        assert_eq!(c.classes(), &[vec![0], vec![1, 3], vec![2]]);
    }

    #[test]
    fn dot_lists_every_vertex() {
        let d = to_dot("G", 3, &[(0, 2)]);
        assert_eq!(d, "graph G {\n  X1;\n  X2;\n  X3;\n  X1 -- X3;\n}\n");
    }
}
