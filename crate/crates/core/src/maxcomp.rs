//! Linear-time computation of `Max(X)` for every set by partition refinement.
//!
//! `Max(X)` is the earliest set in LF order that overlaps `X` and is at least
//! as large as `X`. Three passes compute it for the whole family:
//!
//! 1. refine the trivial partition by every set in LF order; the final table
//!    `P_f` orders the elements like the lexicographically sorted columns of
//!    the (never built) set/element incidence matrix;
//! 2. record `left(X)` and `right(X)`, the extreme `P_f` positions of each
//!    set, and file every set under `right(X)` sorted by `left(X)`;
//! 3. replay the refinements on the frozen `P_f` table. When `Y` splits a
//!    part at boundary `l`, every still-filed `X` with `right(X)` in the new
//!    suffix part and `left(X) <= l` gets `Max(X) = Y`.
//!
//! After the last set of a given size has been replayed, all sets of that
//! size leave the structure, so `Y` is only ever assigned to sets no larger
//! than itself.

use crate::family::{LfOrder, SetFamily};
use crate::partition::OrderedPartition;

const NIL: usize = usize::MAX;

/// The element order of the final refined partition, with 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfOrder {
    elem_at: Vec<usize>,
    pos_f: Vec<u32>,
}

impl PfOrder {
    pub fn from_order(order: Vec<usize>) -> Self {
        let mut elem_at = Vec::with_capacity(order.len() + 1);
        elem_at.push(NIL);
        elem_at.extend(order);
        let mut pos_f = vec![0; elem_at.len() - 1];
        for (pos, &v) in elem_at.iter().enumerate().skip(1) {
            pos_f[v] = pos as u32;
        }
        PfOrder { elem_at, pos_f }
    }

    pub fn elem_at(&self, pos: usize) -> usize {
        self.elem_at[pos]
    }

    pub fn pos(&self, v: usize) -> usize {
        self.pos_f[v] as usize
    }

    pub fn order(&self) -> &[usize] {
        &self.elem_at[1..]
    }

    pub fn len(&self) -> usize {
        self.pos_f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos_f.is_empty()
    }
}

pub fn compute_pf(f: &SetFamily, lf: &LfOrder) -> PfOrder {
    let mut p = OrderedPartition::new(f.n()).expect("a family has a non-empty universe");
    for &x in lf.order() {
        p.refine(f.set(x));
    }
    PfOrder::from_order(p.snapshot_order())
}

/// `left(X)` and `right(X)`: the smallest and largest `P_f` position of an
/// element of `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Bounds {
    pub fn left(&self, x: usize) -> usize {
        self.left[x]
    }

    pub fn right(&self, x: usize) -> usize {
        self.right[x]
    }
}

pub fn compute_bounds(f: &SetFamily, pf: &PfOrder) -> Bounds {
    let (left, right) = f
        .sets()
        .map(|set| {
            set.iter().fold((usize::MAX, 0), |(lo, hi), &v| {
                let p = pf.pos(v);
                (lo.min(p), hi.max(p))
            })
        })
        .unzip();
    Bounds { left, right }
}

/// Per `P_f` position `i`, an intrusive doubly linked list of the sets with
/// `right(X) = i`, in non-decreasing `left(X)` order.
#[derive(Debug, Clone)]
pub struct AmStructure {
    // links are u32 set ids, END terminates a list
    head: Vec<u32>,
    next: Vec<u32>,
    prev: Vec<u32>,
    linked: Vec<bool>,
    left: Vec<u32>,
    right: Vec<u32>,
    // sets grouped by size, offsets indexed by size
    size_offsets: Vec<usize>,
    by_size: Vec<usize>,
    pops: usize,
}

const END: u32 = u32::MAX;

pub fn build_am(f: &SetFamily, lf: &LfOrder, bounds: &Bounds) -> AmStructure {
    let n = f.n();
    let m = f.m();

    // bucket sets by left, then append to AM[right] in that order
    let mut left_start = vec![0usize; n + 2];
    for x in 0..m {
        left_start[bounds.left(x) + 1] += 1;
    }
    for i in 1..left_start.len() {
        left_start[i] += left_start[i - 1];
    }
    let mut by_left = vec![0; m];
    for x in 0..m {
        let slot = &mut left_start[bounds.left(x)];
        by_left[*slot] = x;
        *slot += 1;
    }

    let mut head = vec![END; n + 1];
    let mut tail = vec![END; n + 1];
    let mut next = vec![END; m];
    let mut prev = vec![END; m];
    for &x in &by_left {
        let r = bounds.right(x);
        if tail[r] == END {
            head[r] = x as u32;
        } else {
            next[tail[r] as usize] = x as u32;
            prev[x] = tail[r];
        }
        tail[r] = x as u32;
    }

    // LF order lists sizes in decreasing order, so each size is a run
    let max_size = lf.order().first().map_or(0, |&x| f.size(x));
    let mut size_offsets = vec![0usize; max_size + 2];
    for x in 0..m {
        size_offsets[f.size(x) + 1] += 1;
    }
    for s in 1..size_offsets.len() {
        size_offsets[s] += size_offsets[s - 1];
    }
    let mut cursor = size_offsets.clone();
    let mut by_size = vec![0; m];
    for x in 0..m {
        by_size[cursor[f.size(x)]] = x;
        cursor[f.size(x)] += 1;
    }

    AmStructure {
        head,
        next,
        prev,
        linked: vec![true; m],
        left: (0..m).map(|x| bounds.left(x) as u32).collect(),
        right: (0..m).map(|x| bounds.right(x) as u32).collect(),
        size_offsets,
        by_size,
        pops: 0,
    }
}

impl AmStructure {
    pub fn list(&self, pos: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut x = self.head[pos];
        while x != END {
            out.push(x as usize);
            x = self.next[x as usize];
        }
        out
    }

    pub fn front(&self, pos: usize) -> Option<usize> {
        Some(self.head[pos]).filter(|&x| x != END).map(|x| x as usize)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.linked[x]
    }

    /// Unlinks `x` in O(1). Removing an absent set is a no-op.
    pub fn remove(&mut self, x: usize) {
        if !std::mem::replace(&mut self.linked[x], false) {
            return;
        }
        let (p, nx) = (self.prev[x], self.next[x]);
        if p == END {
            self.head[self.right[x] as usize] = nx;
        } else {
            self.next[p as usize] = nx;
        }
        if nx != END {
            self.prev[nx as usize] = p;
        }
        self.prev[x] = END;
        self.next[x] = END;
    }

    pub fn remove_all_of_size(&mut self, size: usize) {
        if size + 1 >= self.size_offsets.len() {
            return;
        }
        for i in self.size_offsets[size]..self.size_offsets[size + 1] {
            self.remove(self.by_size[i]);
        }
    }

    /// Pops the front of `AM[pos]` if its `left` is at most `boundary`.
    fn pop_if_left_at_most(&mut self, pos: usize, boundary: usize) -> Option<usize> {
        let x = self.front(pos)?;
        if self.left[x] as usize > boundary {
            return None;
        }
        self.remove(x);
        self.pops += 1;
        Some(x)
    }

    /// Number of sets popped by [`compute_max`] so far.
    pub fn pops(&self) -> usize {
        self.pops
    }
}

/// `Max(X)` for every set, `None` when no larger-or-equal set overlaps `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxAssignment {
    max: Vec<Option<usize>>,
}

impl MaxAssignment {
    pub fn new(max: Vec<Option<usize>>) -> Self {
        MaxAssignment { max }
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.max[x]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.max
    }

    /// `|Max(X)|`, or 0 when undefined.
    pub fn max_size(&self, f: &SetFamily, x: usize) -> usize {
        self.max[x].map_or(0, |y| f.size(y))
    }
}

pub fn compute_max(f: &SetFamily, lf: &LfOrder, pf: &PfOrder, am: &mut AmStructure) -> MaxAssignment {
    let mut max = vec![None; f.m()];
    let mut p = OrderedPartition::from_order(pf.order().to_vec()).expect("non-empty universe");
    let order = lf.order();
    for (i, &y) in order.iter().enumerate() {
        for &split in p.refine_presorted(f.set(y)) {
            for pos in split.new_slots() {
                while let Some(x) = am.pop_if_left_at_most(pos, split.boundary) {
                    max[x] = Some(y);
                }
            }
        }
        let size = f.size(y);
        if order.get(i + 1).is_none_or(|&z| f.size(z) != size) {
            am.remove_all_of_size(size);
        }
    }
    debug_assert!(am.pops() <= f.m());
    MaxAssignment { max }
}

/// All three passes in one go.
#[derive(Debug, Clone)]
pub struct MaxComputation {
    pub pf: PfOrder,
    pub bounds: Bounds,
    pub max: MaxAssignment,
}

impl MaxComputation {
    pub fn run(f: &SetFamily, lf: &LfOrder) -> Self {
        let pf = compute_pf(f, lf);
        let bounds = compute_bounds(f, &pf);
        let mut am = build_am(f, lf, &bounds);
        let max = compute_max(f, lf, &pf, &mut am);
        MaxComputation { pf, bounds, max }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::lf_order;

    fn fam_a() -> SetFamily {
        SetFamily::parse("1 2\n2 3\n3 4\n1 2 3 4\n").unwrap()
    }

    #[test]
    fn pf_fam_a() {
        let f = fam_a();
        let pf = compute_pf(&f, &lf_order(&f));
        // tokens 4,3,1,2 are element indices 3,2,0,1
        assert_eq!(pf.order(), &[3, 2, 0, 1]);
        assert_eq!(pf.pos(1), 4);
        assert_eq!(pf.elem_at(2), 2);
    }

    #[test]
    fn pf_single_set_puts_complement_first() {
        let f = SetFamily::parse("!universe a b c\nb\n").unwrap();
        let pf = compute_pf(&f, &lf_order(&f));
        assert_eq!(*pf.order().last().unwrap(), 1);
    }

    #[test]
    fn bounds_fam_a() {
        let f = fam_a();
        let pf = compute_pf(&f, &lf_order(&f));
        let b = compute_bounds(&f, &pf);
        assert_eq!((b.left(1), b.right(1)), (2, 4));
        assert_eq!((b.left(0), b.right(0)), (3, 4));
        assert_eq!((b.left(2), b.right(2)), (1, 2));
        assert_eq!((b.left(3), b.right(3)), (1, 4));
    }

    #[test]
    fn bounds_singleton() {
        let f = SetFamily::parse("a b c\nb\n").unwrap();
        let pf = compute_pf(&f, &lf_order(&f));
        let b = compute_bounds(&f, &pf);
        assert_eq!(b.left(1), b.right(1));
        assert_eq!((b.left(0), b.right(0)), (1, 3));
    }

    #[test]
    fn am_fam_a() {
        let f = fam_a();
        let lf = lf_order(&f);
        let pf = compute_pf(&f, &lf);
        let b = compute_bounds(&f, &pf);
        let mut am = build_am(&f, &lf, &b);
        assert_eq!(am.list(4), vec![3, 1, 0]);
        assert_eq!(am.list(2), vec![2]);
        assert!(am.list(1).is_empty());
        assert!(am.list(3).is_empty());
        am.remove(3);
        assert_eq!(am.list(4), vec![1, 0]);
        am.remove(1);
        assert_eq!(am.list(4), vec![0]);
        assert!(!am.contains(1));
        am.remove(1);
        assert_eq!(am.list(4), vec![0]);
        am.remove_all_of_size(2);
        assert!(am.list(4).is_empty() && am.list(2).is_empty());
    }

    #[test]
    fn max_fam_a() {
        let f = fam_a();
        let lf = lf_order(&f);
        let r = MaxComputation::run(&f, &lf);
        assert_eq!(r.max.as_slice(), &[Some(1), Some(0), Some(1), None]);
    }

    #[test]
    fn max_disjoint_and_equal_sets() {
        let f = SetFamily::parse("a b\nc d\ne\n").unwrap();
        let r = MaxComputation::run(&f, &lf_order(&f));
        assert!(r.max.as_slice().iter().all(Option::is_none));
        let f = SetFamily::parse("a b\nb a\n").unwrap();
        let r = MaxComputation::run(&f, &lf_order(&f));
        assert_eq!(r.max.as_slice(), &[None, None]);
    }

    #[test]
    fn max_mutual_pair() {
        let f = SetFamily::parse("1 2\n2 3\n").unwrap();
        let r = MaxComputation::run(&f, &lf_order(&f));
        assert_eq!(r.max.as_slice(), &[Some(1), Some(0)]);
    }
}
