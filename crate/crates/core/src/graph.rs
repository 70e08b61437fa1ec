//! Immutable simple graphs stored as one bit-row per vertex.
//!
//! Rows are `u64` words, `ceil(order / 64)` words per vertex, so every
//! adjacency query is a word load and the set operations the detectors and
//! lemma checkers need (common neighborhoods, induced subgraphs,
//! complements) are straight bitwise loops. Graphs of order <= 64 keep one
//! word per row; larger constructions simply use more words. The search
//! kernel in [`crate::search`] has its own single-word fast path and
//! converts to [`Graph`] only at emission points.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::Range;

pub(crate) const WORD_BITS: usize = 64;

/// Hard ceiling on the order of any constructed graph. Large enough for
/// every construction the CLI exposes, small enough that an adjacency
/// matrix never silently eats the machine.
pub const CONSTRUCTION_ORDER_CAP: usize = 4096;

pub(crate) fn words_for(order: usize) -> usize {
    order.div_ceil(WORD_BITS)
}

/// Mask of the bits a final word may use for a set over `order` vertices.
fn tail_mask(order: usize) -> u64 {
    let rem = order % WORD_BITS;
    if rem == 0 {
        !0
    } else {
        (1u64 << rem) - 1
    }
}

// ===================================================================
// Graph
// ===================================================================

/// An immutable simple graph on vertices `0..order`.
///
/// Invariants: the adjacency relation is symmetric, irreflexive, and no row
/// has bits at positions `>= order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    row_words: usize,
    bits: Box<[u64]>,
}

impl Graph {
    // ----- constructors -----

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Graph {
        assert!(order <= CONSTRUCTION_ORDER_CAP, "order {order} over cap");
        let row_words = words_for(order).max(1);
        Graph {
            order,
            row_words,
            bits: vec![0; order.max(1) * row_words].into_boxed_slice(),
        }
    }

    /// The complete graph on `order` vertices.
    pub fn complete(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for v in 0..order {
            let row = g.row_mut(v);
            for w in row.iter_mut() {
                *w = !0;
            }
            row[words_for(order) - 1] &= tail_mask(order);
            // no self loop
            row[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        }
        debug_assert!(g.debug_validate());
        g
    }

    /// Builds a graph from an edge list. Panics on self loops or vertices
    /// out of range; duplicate edges are harmless.
    pub fn from_edges<I>(order: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            assert!(u < order && v < order, "edge ({u},{v}) out of range");
            assert!(u != v, "self loop at {u}");
            g.set_edge(u, v);
        }
        debug_assert!(g.debug_validate());
        g
    }

    /// Builds a graph by querying `f(u, v)` for every pair `u < v`.
    pub fn from_fn<F>(order: usize, mut f: F) -> Graph
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in (u + 1)..order {
                if f(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        debug_assert!(g.debug_validate());
        g
    }

    /// Builds a graph of order `rows.len() <= 64` from single-word bit rows
    /// (bit `v` of `rows[u]` set iff `u ~ v`). Rows must be symmetric and
    /// loop-free.
    pub fn from_bitrows64(rows: &[u64]) -> Graph {
        let order = rows.len();
        assert!(order <= WORD_BITS, "order {order} needs multi-word rows");
        let mut g = Graph::empty(order);
        for (v, &row) in rows.iter().enumerate() {
            g.row_mut(v)[0] = row;
        }
        assert!(g.debug_validate_always(), "rows not a simple graph");
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        let rw = self.row_words;
        self.bits[u * rw + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
        self.bits[v * rw + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        let rw = self.row_words;
        self.bits[u * rw + v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        self.bits[v * rw + u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
    }

    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        let rw = self.row_words;
        &mut self.bits[v * rw..(v + 1) * rw]
    }

    fn debug_validate_always(&self) -> bool {
        for v in 0..self.order {
            let row = self.row(v);
            if row[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0 {
                return false;
            }
            if self.order % WORD_BITS != 0 && row[self.row_words - 1] & !tail_mask(self.order) != 0
            {
                return false;
            }
            for u in 0..v {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return false;
                }
            }
        }
        true
    }

    fn debug_validate(&self) -> bool {
        self.debug_validate_always()
    }

    // ----- basic queries -----

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> Range<usize> {
        0..self.order
    }

    /// Row of `v` as a word slice.
    pub fn row(&self, v: usize) -> &[u64] {
        debug_assert!(v < self.order);
        &self.bits[v * self.row_words..(v + 1) * self.row_words]
    }

    /// Row of `v` as a single word; only valid when `order <= 64`.
    pub fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.order <= WORD_BITS);
        self.bits[v * self.row_words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.bits[u * self.row_words + v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.order).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Minimum degree; 0 for the graph on no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the graph on no vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `N(u) ∩ N(v)` as a set.
    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        let words: Vec<u64> = self
            .row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| a & b)
            .collect();
        VertexSet {
            order: self.order,
            words: words.into_boxed_slice(),
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            order: self.order,
            words: self.row(v).to_vec().into_boxed_slice(),
        }
    }

    pub fn neighbors_iter(&self, v: usize) -> BitIter<'_> {
        BitIter::new(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors_iter(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    // ----- derived graphs -----

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        let tail = tail_mask(self.order);
        for v in 0..self.order {
            let rw = self.row_words;
            for w in 0..rw {
                let mut word = !self.bits[v * rw + w];
                if w == rw - 1 {
                    word &= tail;
                }
                g.bits[v * rw + w] = word;
            }
            g.bits[v * rw + v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
        }
        debug_assert!(g.debug_validate());
        g
    }

    /// The subgraph induced by `set`, relabelled by ascending original
    /// index: the i-th smallest member of `set` becomes vertex i.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        assert_eq!(set.order(), self.order, "vertex set order mismatch");
        let members = set.to_vec();
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        debug_assert!(g.debug_validate());
        g
    }

    /// Disjoint union: vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order + other.order;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.order, v + self.order);
        }
        debug_assert!(g.debug_validate());
        g
    }

    /// Relabels the graph: `perm[new] = old`, i.e. `perm` lists the old
    /// vertices in their new order.
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        Graph::from_fn(self.order, |i, j| self.has_edge(perm[i], perm[j]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges=", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

// ===================================================================
// VertexSet
// ===================================================================

/// A subset of the vertices of a graph of a fixed order, as a bitset.
///
/// Invariant: no bits at positions `>= order`. Serializes as the sorted
/// list of members.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    order: usize,
    words: Box<[u64]>,
}

impl VertexSet {
    pub fn empty(order: usize) -> VertexSet {
        VertexSet {
            order,
            words: vec![0; words_for(order).max(1)].into_boxed_slice(),
        }
    }

    pub fn full(order: usize) -> VertexSet {
        let mut words = vec![!0u64; words_for(order).max(1)];
        if order == 0 {
            words[0] = 0;
        } else {
            let last = words_for(order) - 1;
            words[last] &= tail_mask(order);
        }
        VertexSet {
            order,
            words: words.into_boxed_slice(),
        }
    }

    pub fn from_iter<I>(order: usize, members: I) -> VertexSet
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = VertexSet::empty(order);
        for v in members {
            s.insert(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.order);
        self.words[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range");
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range");
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_new<F: Fn(u64, u64) -> u64>(&self, other: &VertexSet, f: F) -> VertexSet {
        assert_eq!(self.order, other.order, "vertex set order mismatch");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(&a, &b)| f(a, b))
            .collect();
        VertexSet {
            order: self.order,
            words: words.into_boxed_slice(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_new(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_new(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_new(other, |a, b| a & !b)
    }

    /// Complement within `0..order`.
    pub fn complement(&self) -> VertexSet {
        let mut words: Vec<u64> = self.words.iter().map(|&w| !w).collect();
        if self.order == 0 {
            words[0] = 0;
        } else {
            let last = words_for(self.order) - 1;
            words[last] &= tail_mask(self.order);
        }
        VertexSet {
            order: self.order,
            words: words.into_boxed_slice(),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        assert_eq!(self.order, other.order, "vertex set order mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        assert_eq!(self.order, other.order, "vertex set order mismatch");
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(&a, &b)| a & b == 0)
    }

}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

// ===================================================================
// Bit iteration
// ===================================================================

/// Ascending iterator over the set bit positions of a word slice.
pub struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> BitIter<'a> {
        BitIter {
            words,
            word_idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
    }
}
