//! Ordered partitions of `0..n` stored as a bounds table.
//!
//! The elements live in a table of `n` slots. Every part is a contiguous
//! interval of slots, identified by its bounds. Refining by a set `X` moves
//! the elements of `X` to the end of each part they hit and splits that part
//! in two, in `O(|X|)` time. Positions are 1-based throughout.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("a partition needs at least one element")]
    Empty,
    #[error("blocks do not partition 0..{n}")]
    NotAPartition { n: usize },
}

pub type PartId = usize;

/// Inclusive slot interval `[lo, hi]` of one part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartBounds {
    pub lo: usize,
    pub hi: usize,
}

impl PartBounds {
    pub fn len(&self) -> usize {
        self.hi + 1 - self.lo
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.lo <= pos && pos <= self.hi
    }
}

/// A part `C` was replaced by `C' C''`. `C'` keeps the id `part` and the
/// slots `[lo, boundary]`; `C''` gets the id `new_part` and the slots
/// `[boundary + 1, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitEvent {
    pub part: PartId,
    pub new_part: PartId,
    pub boundary: usize,
    pub hi: usize,
}

impl SplitEvent {
    /// Slots of the new part `C''`.
    pub fn new_slots(&self) -> std::ops::RangeInclusive<usize> {
        self.boundary + 1..=self.hi
    }
}

/// Position and part of one element, packed so a lookup touches one cache
/// line.
#[derive(Debug, Clone, Copy, Default)]
struct Slot {
    pos: u32,
    part: u32,
}

#[derive(Debug, Clone, Copy)]
struct Part {
    lo: u32,
    hi: u32,
    // elements of the current refiner seen in this part
    hits: u32,
    // smallest slot among them, for the presorted check
    first_hit: u32,
}

/// Ids are stored as `u32` to halve the memory traffic, so a partition holds
/// fewer than `2^32 - 1` elements.
#[derive(Debug, Clone)]
pub struct OrderedPartition {
    // slot 0 is unused so slot numbers are positions
    table: Vec<u32>,
    elems: Vec<Slot>,
    parts: Vec<Part>,
    touched: Vec<u32>,
    // reused by every refinement
    events: Vec<SplitEvent>,
}

impl OrderedPartition {
    /// The single-part partition with the identity table.
    pub fn new(n: usize) -> Result<Self, PartitionError> {
        Self::from_order((0..n).collect())
    }

    /// A single part whose table holds `order` (a permutation of `0..n`).
    pub fn from_order(order: Vec<usize>) -> Result<Self, PartitionError> {
        let n = order.len();
        Self::from_blocks(n, &[order])
    }

    /// Builds the partition whose parts are `blocks`, in order.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, PartitionError> {
        if n == 0 {
            return Err(PartitionError::Empty);
        }
        assert!(n < u32::MAX as usize, "partition of {n} elements is too large");
        let mut table = Vec::with_capacity(n + 1);
        table.push(u32::MAX);
        let mut elems = vec![Slot::default(); n];
        let mut parts = Vec::new();
        for block in blocks.iter().filter(|b| !b.is_empty()) {
            let id = parts.len() as u32;
            let lo = table.len() as u32;
            for &v in block {
                if v >= n || elems[v].pos != 0 {
                    return Err(PartitionError::NotAPartition { n });
                }
                elems[v] = Slot { pos: table.len() as u32, part: id };
                table.push(v as u32);
            }
            parts.push(Part { lo, hi: table.len() as u32 - 1, hits: 0, first_hit: u32::MAX });
        }
        if table.len() != n + 1 {
            return Err(PartitionError::NotAPartition { n });
        }
        Ok(OrderedPartition { table, elems, parts, touched: Vec::new(), events: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn bounds(&self, p: PartId) -> PartBounds {
        let Part { lo, hi, .. } = self.parts[p];
        PartBounds { lo: lo as usize, hi: hi as usize }
    }

    pub fn part_of(&self, v: usize) -> PartId {
        self.elems[v].part as usize
    }

    pub fn position(&self, v: usize) -> usize {
        self.elems[v].pos as usize
    }

    pub fn element_at(&self, pos: usize) -> usize {
        self.table[pos] as usize
    }

    /// Refines every part by `x`: each part `C` with `∅ ⊂ C ∩ X ⊂ C` has the
    /// elements of `X` moved to its suffix, which becomes a new part. Parts
    /// inside or disjoint from `X` are unchanged.
    ///
    /// # Panics
    ///
    /// If an element of `x` is out of range.
    pub fn refine(&mut self, x: &[usize]) -> &[SplitEvent] {
        for &v in x {
            assert!(v < self.len(), "element {v} out of range");
            let Slot { pos: from, part: p } = self.elems[v];
            let part = &mut self.parts[p as usize];
            if part.hits == 0 {
                self.touched.push(p);
            }
            let target = part.hi - part.hits;
            part.hits += 1;
            debug_assert!(from <= target, "duplicate element {v} in refiner");
            let other = self.table[target as usize];
            self.table.swap(from as usize, target as usize);
            self.elems[other as usize].pos = from;
            self.elems[v].pos = target;
        }
        self.split_touched()
    }

    /// Like [`refine`](Self::refine) for a table that is already in its final
    /// refined order: the elements of `x` must form the suffix of every part
    /// they hit, so nothing moves. Only bounds and part ids are updated.
    ///
    /// # Panics
    ///
    /// If some part hit by `x` does not have `x`'s elements as its suffix.
    pub fn refine_presorted(&mut self, x: &[usize]) -> &[SplitEvent] {
        for &v in x {
            let Slot { pos, part: p } = self.elems[v];
            let part = &mut self.parts[p as usize];
            if part.hits == 0 {
                self.touched.push(p);
            }
            part.hits += 1;
            part.first_hit = part.first_hit.min(pos);
        }
        for &p in &self.touched {
            let part = &mut self.parts[p as usize];
            // the hits fill the suffix iff the first one is that far right
            assert!(
                part.first_hit > part.hi - part.hits,
                "slot {} is not in the suffix of part [{}, {}]",
                part.first_hit,
                part.lo,
                part.hi
            );
            part.first_hit = u32::MAX;
        }
        self.split_touched()
    }

    fn split_touched(&mut self) -> &[SplitEvent] {
        self.events.clear();
        let mut touched = std::mem::take(&mut self.touched);
        for &p in &touched {
            let part = &mut self.parts[p as usize];
            let Part { lo, hi, hits, .. } = *part;
            part.hits = 0;
            if hits == hi + 1 - lo {
                continue;
            }
            let boundary = hi - hits;
            part.hi = boundary;
            let new_part = self.parts.len() as u32;
            self.parts.push(Part { lo: boundary + 1, hi, hits: 0, first_hit: u32::MAX });
            for &v in &self.table[boundary as usize + 1..=hi as usize] {
                self.elems[v as usize].part = new_part;
            }
            self.events.push(SplitEvent {
                part: p as usize,
                new_part: new_part as usize,
                boundary: boundary as usize,
                hi: hi as usize,
            });
        }
        touched.clear();
        self.touched = touched;
        &self.events
    }

    /// Copy of the table, element at position 1 first.
    pub fn snapshot_order(&self) -> Vec<usize> {
        self.table[1..].iter().map(|&v| v as usize).collect()
    }

    /// Parts in table order, each listing its elements in slot order.
    pub fn parts_in_order(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut pos = 1;
        while pos <= self.len() {
            let b = self.bounds(self.part_of(self.element_at(pos)));
            out.push((b.lo..=b.hi).map(|slot| self.element_at(slot)).collect());
            pos = b.hi + 1;
        }
        out
    }

    /// Checks the structural invariants. Used by tests and debug builds.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.len();
        for pos in 1..=n {
            let v = self.element_at(pos);
            if v >= n || self.position(v) != pos {
                return Err(format!("table and position disagree at slot {pos}"));
            }
            if !self.bounds(self.part_of(v)).contains(pos) {
                return Err(format!("element {v} at slot {pos} outside its part"));
            }
        }
        let mut bounds: Vec<PartBounds> = (0..self.part_count()).map(|p| self.bounds(p)).collect();
        bounds.sort_by_key(|b| b.lo);
        let mut next = 1;
        for b in bounds {
            if b.lo != next || b.hi < b.lo {
                return Err(format!("parts do not tile the table near slot {next}"));
            }
            next = b.hi + 1;
        }
        if next != n + 1 {
            return Err("parts do not cover the table".into());
        }
        Ok(())
    }
}
