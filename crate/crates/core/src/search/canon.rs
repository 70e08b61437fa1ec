//! Canonical labeling for the search kernel (order <= 64).
//!
//! The canonical form of a graph is the lexicographically least
//! upper-triangle adjacency bit string over all vertex labelings, the same
//! column-major bit order graph6 uses. The search individualizes vertices
//! inside a degree-refined ordered partition, prunes branches whose
//! determined bit prefix already exceeds the best known string, and prunes
//! sibling branches equivalent under automorphisms discovered at equal
//! leaves. On completion the discovered automorphisms generate the full
//! automorphism group, so the reported vertex orbits are exact; the
//! isomorph-free generator depends on that.

use crate::error::CheckError;
use crate::graph::Graph;

/// Canonical data for one graph: the relabeling, the canonical adjacency
/// rows, exact automorphism orbits, and the generators that prove them.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub order: usize,
    /// `labeling[new] = old`: position `new` of the canonical form hosts
    /// this input vertex.
    pub labeling: Vec<usize>,
    /// Adjacency rows of the relabeled graph; bit `j` of row `i` is the
    /// edge between canonical positions `i` and `j`.
    pub canon_rows: Vec<u64>,
    /// `orbit_of[v]` = least input vertex in the same automorphism orbit.
    pub orbit_of: Vec<usize>,
    /// Automorphisms (input-vertex permutations) discovered en route;
    /// they generate the automorphism group.
    pub generators: Vec<Vec<usize>>,
}

/// Computes the canonical form of a graph of order at most 64.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CheckError> {
    if g.order() > 64 {
        return Err(CheckError::Capacity(format!(
            "canonical labeling is a search-kernel operation, capped at 64 vertices (got {})",
            g.order()
        )));
    }
    let rows: Vec<u64> = g.vertices().map(|v| g.row64(v)).collect();
    Ok(canonize_rows(&rows))
}

/// The canonical graph6 line of a graph: graph6 of the relabeled graph.
/// Two graphs are isomorphic exactly when these strings agree.
pub fn canonical_graph6(g: &Graph) -> Result<String, CheckError> {
    let form = canonical_form(g)?;
    let canon = Graph::from_bitrows64(&form.canon_rows);
    Ok(crate::graph6::write_graph6(&canon).expect("order 64 is far below the graph6 limit"))
}

/// Isomorphism test by canonical form comparison. Capped at order 64.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CheckError> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)?.canon_rows == canonical_form(b)?.canon_rows)
}

// ===================================================================
// Kernel
// ===================================================================

/// Canonizes a graph given as 64-bit adjacency rows. Internal entry point
/// for the generator, which works on raw rows throughout.
pub(crate) fn canonize_rows(rows: &[u64]) -> CanonicalForm {
    let n = rows.len();
    if n == 0 {
        return CanonicalForm {
            order: 0,
            labeling: Vec::new(),
            canon_rows: Vec::new(),
            orbit_of: Vec::new(),
            generators: Vec::new(),
        };
    }
    let mut search = CanonSearch {
        rows,
        n,
        bits: BitString::new(n),
        fixed: Vec::with_capacity(n),
        best: None,
        generators: Vec::new(),
    };
    let whole: Vec<usize> = (0..n).collect();
    search.descend(vec![whole], false);

    let (best_bits, labeling) = search.best.expect("search always reaches a leaf");
    let mut canon_rows = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && rows[labeling[i]] >> labeling[j] & 1 == 1 {
                canon_rows[i] |= 1 << j;
            }
        }
    }
    debug_assert_eq!(BitString::from_rows(&canon_rows).words, best_bits.words);

    let mut orbits = UnionFind::new(n);
    for gen in &search.generators {
        for v in 0..n {
            orbits.union(v, gen[v]);
        }
    }
    let orbit_of = (0..n).map(|v| orbits.leader(v)).collect();

    CanonicalForm {
        order: n,
        labeling,
        canon_rows,
        orbit_of,
        generators: search.generators,
    }
}

/// Upper-triangle adjacency bits in column-major order (for column k, the
/// bits against vertices 0..k), packed so that word-wise unsigned
/// comparison equals lexicographic comparison of the bit string.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BitString {
    words: Vec<u64>,
    len: usize,
}

impl BitString {
    fn new(order: usize) -> BitString {
        let capacity = order * (order - 1) / 2;
        BitString {
            words: vec![0; capacity.div_ceil(64).max(1)],
            len: 0,
        }
    }

    fn from_rows(rows: &[u64]) -> BitString {
        let mut s = BitString::new(rows.len());
        for k in 0..rows.len() {
            for i in 0..k {
                s.push(rows[i] >> k & 1 == 1);
            }
        }
        s
    }

    fn push(&mut self, bit: bool) {
        if bit {
            self.words[self.len / 64] |= 1u64 << (63 - self.len % 64);
        }
        self.len += 1;
    }

    /// Rolls back to a previous length, clearing the abandoned tail so
    /// future pushes land on zeroed bits.
    fn truncate(&mut self, len: usize) {
        debug_assert!(len <= self.len);
        let keep_words = len.div_ceil(64);
        for w in self.words[keep_words..].iter_mut() {
            *w = 0;
        }
        let rem = len % 64;
        if rem > 0 {
            self.words[len / 64] &= !(u64::MAX >> rem);
        } else if keep_words > 0 {
            // length is word-aligned; the kept words are already exact
        }
        self.len = len;
    }

    /// Compares the first `prefix` bits of both strings.
    fn compare_prefix(&self, other: &BitString, prefix: usize) -> std::cmp::Ordering {
        let full = prefix / 64;
        for w in 0..full {
            match self.words[w].cmp(&other.words[w]) {
                std::cmp::Ordering::Equal => {}
                diff => return diff,
            }
        }
        let rem = prefix % 64;
        if rem > 0 {
            let mask = !(u64::MAX >> rem);
            return (self.words[full] & mask).cmp(&(other.words[full] & mask));
        }
        std::cmp::Ordering::Equal
    }
}

struct CanonSearch<'a> {
    rows: &'a [u64],
    n: usize,
    bits: BitString,
    /// Input vertices already assigned to canonical positions, in order.
    fixed: Vec<usize>,
    best: Option<(BitString, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    /// Explores one ordered partition. `already_less` records that the
    /// determined prefix is strictly below the best string, which disables
    /// prefix pruning (every completion improves on the best).
    fn descend(&mut self, mut cells: Vec<Vec<usize>>, already_less: bool) {
        self.refine(&mut cells);

        // Absorb the leading run of singleton cells into the fixed prefix.
        let bits_mark = self.bits.len;
        let fixed_mark = self.fixed.len();
        let mut singleton_count = 0;
        for cell in &cells {
            if cell.len() != 1 {
                break;
            }
            singleton_count += 1;
        }
        for cell in cells.iter().take(singleton_count).skip(fixed_mark) {
            let v = cell[0];
            for i in 0..self.fixed.len() {
                self.bits.push(self.rows[self.fixed[i]] >> v & 1 == 1);
            }
            self.fixed.push(v);
        }

        let mut already_less = already_less;
        if let Some((best_bits, _)) = &self.best {
            if !already_less {
                match self.bits.compare_prefix(best_bits, self.bits.len) {
                    std::cmp::Ordering::Greater => {
                        self.fixed.truncate(fixed_mark);
                        self.bits.truncate(bits_mark);
                        return;
                    }
                    std::cmp::Ordering::Less => already_less = true,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }

        if singleton_count == cells.len() {
            self.record_leaf();
            self.fixed.truncate(fixed_mark);
            self.bits.truncate(bits_mark);
            return;
        }

        // Branch on the first non-singleton cell, one orbit representative
        // at a time under the automorphisms fixing the current prefix.
        let target_index = singleton_count;
        let target = cells[target_index].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if self.covered_by_tried(v, &target, &tried) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = target.iter().copied().filter(|&w| w != v).collect();
            child[target_index] = vec![v];
            child.insert(target_index + 1, rest);
            self.descend(child, already_less);
            tried.push(v);
        }

        self.fixed.truncate(fixed_mark);
        self.bits.truncate(bits_mark);
    }

    /// Is `v` equivalent to an already-tried sibling under the group
    /// generated by automorphisms that fix the current prefix pointwise?
    fn covered_by_tried(&self, v: usize, cell: &[usize], tried: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for gen in &self.generators {
            if self.fixed.iter().any(|&f| gen[f] != f) {
                continue;
            }
            for &w in cell {
                uf.union(w, gen[w]);
            }
        }
        tried.iter().any(|&u| uf.leader(u) == uf.leader(v))
    }

    fn record_leaf(&mut self) {
        match &mut self.best {
            None => self.best = Some((self.bits.clone(), self.fixed.clone())),
            Some((best_bits, best_labeling)) => {
                match self.bits.compare_prefix(best_bits, self.bits.len) {
                    std::cmp::Ordering::Less => {
                        *best_bits = self.bits.clone();
                        *best_labeling = self.fixed.clone();
                    }
                    std::cmp::Ordering::Equal => {
                        // Two labelings with identical strings exhibit an
                        // automorphism: map this leaf onto the best leaf.
                        let mut perm = vec![0usize; self.n];
                        for pos in 0..self.n {
                            perm[self.fixed[pos]] = best_labeling[pos];
                        }
                        if perm.iter().enumerate().any(|(a, &b)| a != b) {
                            self.generators.push(perm);
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
        }
    }

    /// Coarsest equitable refinement: repeatedly split every cell by the
    /// vector of neighbor counts against all current cells, subcells
    /// ordered by ascending count vector. Deterministic and invariant
    /// under isomorphism, which is what canonical validity needs.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let key: Vec<u32> = masks
                            .iter()
                            .map(|&m| (self.rows[v] & m).count_ones())
                            .collect();
                        (key, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for idx in 1..=keyed.len() {
                    if idx == keyed.len() || keyed[idx].0 != keyed[start].0 {
                        next.push(keyed[start..idx].iter().map(|&(_, v)| v).collect());
                        if idx - start != cell.len() {
                            changed = true;
                        }
                        start = idx;
                    }
                }
            }
            *cells = next;
            if !changed {
                return;
            }
        }
    }
}

// ===================================================================
// Union-find
// ===================================================================

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    /// Representative of `v`'s class; the least member, maintained by
    /// always attaching the larger leader under the smaller.
    pub(crate) fn leader(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.leader(a), self.leader(b));
        if ra == rb {
            return;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
    }
}

// ===================================================================
// Tests
// ===================================================================
