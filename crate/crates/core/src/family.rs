//! Set families, the LF order and the per-element SL lists.
//!
//! A [`SetFamily`] is a list of `m` subsets of a universe of `n` interned
//! elements. Elements are dense indices in `0..n`; sets are dense indices in
//! `0..m` following input order.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("line {line}: empty set")]
    EmptyLine { line: usize },
    #[error("set {index} is empty")]
    EmptySet { index: usize },
    #[error("set {set}: element {element} out of range for universe of size {n}")]
    ElementOutOfRange { set: usize, element: usize, n: usize },
    #[error("no sets")]
    NoSets,
    #[error("{count} {what} do not fit in 32-bit ids")]
    TooLarge { what: &'static str, count: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A family of non-empty subsets of an interned universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    tokens: Vec<String>,
    // set x is elements[offsets[x]..offsets[x + 1]]
    offsets: Vec<usize>,
    elements: Vec<usize>,
}

impl SetFamily {
    /// Builds a family over the universe `0..n`, naming element `i` by its
    /// decimal index. Duplicate elements inside a set are dropped.
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self, FamilyError> {
        let tokens = (0..n).map(|i| i.to_string()).collect();
        Self::with_tokens(tokens, sets)
    }

    pub fn with_tokens(tokens: Vec<String>, sets: Vec<Vec<usize>>) -> Result<Self, FamilyError> {
        if sets.is_empty() {
            return Err(FamilyError::NoSets);
        }
        let n = tokens.len();
        for (what, count) in [("elements", n), ("sets", sets.len())] {
            if count >= u32::MAX as usize {
                return Err(FamilyError::TooLarge { what, count });
            }
        }
        let mut seen = vec![usize::MAX; n];
        let mut offsets = Vec::with_capacity(sets.len() + 1);
        offsets.push(0);
        let mut elements = Vec::with_capacity(sets.iter().map(Vec::len).sum());
        for (index, set) in sets.into_iter().enumerate() {
            for element in set {
                if element >= n {
                    return Err(FamilyError::ElementOutOfRange { set: index, element, n });
                }
                if seen[element] != index {
                    seen[element] = index;
                    elements.push(element);
                }
            }
            if elements.len() == *offsets.last().unwrap() {
                return Err(FamilyError::EmptySet { index });
            }
            offsets.push(elements.len());
        }
        Ok(SetFamily { tokens, offsets, elements })
    }

    /// Parses the line-oriented text format: one set per line, elements are
    /// whitespace-separated tokens, `#` starts a comment line and
    /// `!universe tok ...` declares elements that may appear in no set.
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let mut interner = Interner::default();
        let mut sets = Vec::new();
        for (i, line) in text.lines().enumerate() {
            interner.line(i + 1, line, &mut sets)?;
        }
        Self::with_tokens(interner.tokens, sets)
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self, FamilyError> {
        let mut interner = Interner::default();
        let mut sets = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            interner.line(i + 1, &line?, &mut sets)?;
        }
        Self::with_tokens(interner.tokens, sets)
    }

    /// Serializes back to the text format. Elements that appear in no set
    /// are emitted on a `!universe` header so the universe round-trips.
    pub fn to_text(&self) -> String {
        let mut used = vec![false; self.n()];
        for &v in &self.elements {
            used[v] = true;
        }
        let mut out = String::new();
        if used.iter().any(|u| !u) {
            out.push_str("!universe");
            for (v, tok) in self.tokens.iter().enumerate() {
                if !used[v] {
                    let _ = write!(out, " {tok}");
                }
            }
            out.push('\n');
        }
        for set in self.sets() {
            let line: Vec<&str> = set.iter().map(|&v| self.tokens[v].as_str()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn n(&self) -> usize {
        self.tokens.len()
    }

    pub fn m(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn total_size(&self) -> usize {
        self.elements.len()
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.elements[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Sets in input order.
    pub fn sets(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.offsets.windows(2).map(|w| &self.elements[w[0]..w[1]])
    }

    pub fn size(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn token(&self, v: usize) -> &str {
        &self.tokens[v]
    }
}

#[derive(Default)]
struct Interner {
    tokens: Vec<String>,
    index: HashMap<String, usize>,
}

impl Interner {
    fn intern(&mut self, tok: &str) -> usize {
        if let Some(&i) = self.index.get(tok) {
            return i;
        }
        let i = self.tokens.len();
        self.tokens.push(tok.to_owned());
        self.index.insert(tok.to_owned(), i);
        i
    }

    fn line(&mut self, lineno: usize, line: &str, sets: &mut Vec<Vec<usize>>) -> Result<(), FamilyError> {
        let trimmed = line.trim_start();
        if trimmed.starts_with('#') {
            return Ok(());
        }
        if let Some(rest) = trimmed.strip_prefix("!universe") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                for tok in rest.split_whitespace() {
                    self.intern(tok);
                }
                return Ok(());
            }
        }
        let set: Vec<usize> = line.split_whitespace().map(|tok| self.intern(tok)).collect();
        if set.is_empty() {
            return Err(FamilyError::EmptyLine { line: lineno });
        }
        sets.push(set);
        Ok(())
    }
}

/// Sets sorted by non-increasing size, ties broken by input index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfOrder {
    order: Vec<usize>,
    rank: Vec<usize>,
}

impl LfOrder {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of set `x` in the LF order.
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }
}

/// Bucket sort on set sizes; O(n + m).
pub fn lf_order(f: &SetFamily) -> LfOrder {
    let max_size = f.sets().map(<[usize]>::len).max().unwrap_or(0);
    let mut buckets = vec![0usize; max_size + 2];
    for set in f.sets() {
        buckets[max_size - set.len() + 1] += 1;
    }
    for s in 1..buckets.len() {
        buckets[s] += buckets[s - 1];
    }
    let mut order = vec![0; f.m()];
    for (x, set) in f.sets().enumerate() {
        let slot = &mut buckets[max_size - set.len()];
        order[*slot] = x;
        *slot += 1;
    }
    let mut rank = vec![0; f.m()];
    for (r, &x) in order.iter().enumerate() {
        rank[x] = r;
    }
    LfOrder { order, rank }
}

/// For every element, the sets containing it in reverse LF order (sizes
/// non-decreasing). Stored as one flat array with per-element offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlLists {
    offsets: Vec<usize>,
    // set ids fit in 32 bits, see `SetFamily::with_tokens`
    entries: Vec<u32>,
}

impl SlLists {
    pub fn get(&self, v: usize) -> &[u32] {
        &self.entries[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn total_len(&self) -> usize {
        self.entries.len()
    }
}

pub fn build_sl_lists(f: &SetFamily, lf: &LfOrder) -> SlLists {
    let n = f.n();
    let mut offsets = vec![0usize; n + 1];
    for set in f.sets() {
        for &v in set {
            offsets[v + 1] += 1;
        }
    }
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    let mut cursor = offsets[..n].to_vec();
    let mut entries = vec![0; f.total_size()];
    for &x in lf.order().iter().rev() {
        for &v in f.set(x) {
            entries[cursor[v]] = x as u32;
            cursor[v] += 1;
        }
    }
    SlLists { offsets, entries }
}
