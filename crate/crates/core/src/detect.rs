//! Exact containment detectors for the pattern families, plus exact
//! cycle-spectrum computation.
//!
//! All detectors decide subgraph containment (not induced) and return a
//! concrete witness when they find one. Witnesses are deterministic:
//! ties break toward the lexicographically least candidate under vertex
//! index order, except the wheel hub, which follows the documented
//! degree-major iteration order.

use crate::error::CheckError;
use crate::graph::{Graph, VertexSet};
use crate::patterns::PatternSpec;
use crate::structure::{bipartiteness, Bipartiteness};
use serde::Serialize;

/// Vertex assignment exhibiting one concrete copy of a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum PatternWitness {
    /// Center plus `n` of its neighbors.
    Star { center: usize, leaves: Vec<usize> },
    /// A pair with `n` common neighbors; covers both K_{2,n} (pair
    /// adjacency irrelevant) and books (pair must be an edge).
    PairCommons {
        u: usize,
        v: usize,
        commons: Vec<usize>,
    },
    /// Cyclic vertex order; consecutive pairs and the wrap-around are edges.
    Cycle { vertices: Vec<usize> },
    /// Hub adjacent to every rim vertex; rim in cyclic order.
    Wheel { hub: usize, rim: Vec<usize> },
    /// Pairwise adjacent vertices, ascending.
    Clique { members: Vec<usize> },
}

/// Outcome of one containment query.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub pattern: PatternSpec,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PatternWitness>,
}

impl WitnessReport {
    fn hit(pattern: PatternSpec, witness: PatternWitness) -> WitnessReport {
        WitnessReport {
            pattern,
            found: true,
            witness: Some(witness),
        }
    }

    fn miss(pattern: PatternSpec) -> WitnessReport {
        WitnessReport {
            pattern,
            found: false,
            witness: None,
        }
    }
}

fn spec_of(kind: &str, param: usize) -> PatternSpec {
    PatternSpec::new(kind, param as u32)
        .expect("detector parameters stay inside the pattern grammar")
}

// ===================================================================
// Popcount detectors: stars, K_{2,n}, books
// ===================================================================

/// Finds K_{1,n}: a vertex of degree at least `n`. The witness center is
/// the least-indexed qualifying vertex, not necessarily the max-degree one.
pub fn find_star(g: &Graph, n: usize) -> WitnessReport {
    let pattern = spec_of("star", n);
    assert!(n >= 1, "star parameter must be at least 1");
    for v in g.vertices() {
        if g.degree(v) >= n {
            let leaves: Vec<usize> = g.neighbors_iter(v).take(n).collect();
            return WitnessReport::hit(pattern, PatternWitness::Star { center: v, leaves });
        }
    }
    WitnessReport::miss(pattern)
}

/// Finds K_{2,n}: an unordered pair with at least `n` common neighbors.
/// Adjacency of the pair is irrelevant (subgraph containment, not induced).
pub fn find_k2n(g: &Graph, n: usize) -> WitnessReport {
    let pattern = spec_of("k2n", n);
    assert!(n >= 1, "k2n parameter must be at least 1");
    pair_commons_scan(g, n, pattern, false)
}

/// Finds the book B_n: an edge whose endpoints share at least `n` common
/// neighbors (n triangles on a common edge).
pub fn find_book(g: &Graph, n: usize) -> WitnessReport {
    let pattern = spec_of("book", n);
    assert!(n >= 1, "book parameter must be at least 1");
    pair_commons_scan(g, n, pattern, true)
}

fn pair_commons_scan(
    g: &Graph,
    n: usize,
    pattern: PatternSpec,
    require_edge: bool,
) -> WitnessReport {
    for u in g.vertices() {
        for v in (u + 1)..g.order() {
            if require_edge && !g.has_edge(u, v) {
                continue;
            }
            if g.common_neighbor_count(u, v) >= n {
                let commons: Vec<usize> =
                    g.common_neighbors(u, v).iter().take(n).collect();
                return WitnessReport::hit(
                    pattern,
                    PatternWitness::PairCommons { u, v, commons },
                );
            }
        }
    }
    WitnessReport::miss(pattern)
}

// ===================================================================
// Fixed-length cycles
// ===================================================================

/// Finds a cycle on exactly `m` vertices.
///
/// Depth-first path extension anchored at the least-indexed cycle vertex:
/// for each anchor in ascending order, paths grow through vertices above
/// the anchor only, neighbors tried in ascending order, so the first hit
/// is the lexicographically least cycle sequence. Two prunes keep dense
/// hosts tractable: an upfront parity short-circuit (odd `m` in a
/// bipartite host can never close), and a per-node bitset reachability
/// test (the anchor must still be within the remaining edge budget).
pub fn find_cycle_of_length(g: &Graph, m: usize) -> Result<WitnessReport, CheckError> {
    if m < 3 || m > g.order() {
        return Err(CheckError::Argument(format!(
            "cycle length {m} outside 3..={} for this host",
            g.order()
        )));
    }
    let pattern = spec_of("cycle", m);
    if m % 2 == 1 {
        if let Bipartiteness::Bipartite { .. } = bipartiteness(g) {
            return Ok(WitnessReport::miss(pattern));
        }
    }

    let words = g.row(0).len();
    let mut path: Vec<usize> = Vec::with_capacity(m);
    let mut on_path = vec![0u64; words];

    for anchor in g.vertices() {
        // Every cycle vertex except the anchor must sit above it, so the
        // anchor needs at least two higher neighbors to open and close.
        let higher = g
            .neighbors_iter(anchor)
            .filter(|&w| w > anchor)
            .count();
        if higher < 2 {
            continue;
        }
        path.clear();
        path.push(anchor);
        set_bit(&mut on_path, anchor);
        if extend_path(g, anchor, m, &mut path, &mut on_path) {
            let vertices = path.clone();
            return Ok(WitnessReport::hit(
                pattern,
                PatternWitness::Cycle { vertices },
            ));
        }
        clear_bit(&mut on_path, anchor);
    }
    Ok(WitnessReport::miss(pattern))
}

fn set_bit(words: &mut [u64], v: usize) {
    words[v / 64] |= 1u64 << (v % 64);
}

fn clear_bit(words: &mut [u64], v: usize) {
    words[v / 64] &= !(1u64 << (v % 64));
}

fn test_bit(words: &[u64], v: usize) -> bool {
    words[v / 64] >> (v % 64) & 1 == 1
}

fn extend_path(
    g: &Graph,
    anchor: usize,
    m: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<u64>,
) -> bool {
    let last = *path.last().expect("path never empty");
    if path.len() == m {
        return g.has_edge(last, anchor);
    }
    if !anchor_reachable(g, anchor, last, m - path.len() + 1, on_path) {
        return false;
    }
    for w in g.neighbors_iter(last) {
        if w <= anchor || test_bit(on_path, w) {
            continue;
        }
        path.push(w);
        set_bit(on_path, w);
        if extend_path(g, anchor, m, path, on_path) {
            return true;
        }
        path.pop();
        clear_bit(on_path, w);
    }
    false
}

/// Can `from` still reach the anchor in at most `budget` edges, moving only
/// through unvisited vertices above the anchor? Layered bitset expansion;
/// the anchor is a valid endpoint but never an intermediate hop.
fn anchor_reachable(
    g: &Graph,
    anchor: usize,
    from: usize,
    budget: usize,
    on_path: &[u64],
) -> bool {
    let words = on_path.len();
    let mut frontier = vec![0u64; words];
    let mut seen = vec![0u64; words];
    set_bit(&mut frontier, from);
    set_bit(&mut seen, from);

    for _ in 0..budget {
        let mut next = vec![0u64; words];
        for v in crate::graph::BitIter::new(&frontier) {
            let row = g.row(v);
            for w in 0..words {
                next[w] |= row[w];
            }
        }
        if test_bit(&next, anchor) {
            return true;
        }
        // Strip visited path vertices, already-seen vertices, and
        // everything at or below the anchor.
        for w in 0..words {
            next[w] &= !on_path[w] & !seen[w];
        }
        mask_low(&mut next, anchor + 1);
        if next.iter().all(|&x| x == 0) {
            return false;
        }
        for w in 0..words {
            seen[w] |= next[w];
        }
        frontier = next;
    }
    false
}

/// Clears all bits below `floor`.
fn mask_low(words: &mut [u64], floor: usize) {
    let full = floor / 64;
    for w in words.iter_mut().take(full) {
        *w = 0;
    }
    let rem = floor % 64;
    if rem > 0 && full < words.len() {
        words[full] &= !((1u64 << rem) - 1);
    }
}

// ===================================================================
// Wheels
// ===================================================================

/// Finds W_m: a hub vertex whose neighborhood induces a graph containing
/// C_m. Hubs are tried in decreasing degree order (index ascending on
/// ties); within the first successful hub the rim is the least cycle.
pub fn find_wheel(g: &Graph, m: usize) -> WitnessReport {
    let pattern = spec_of("wheel", m);
    assert!(m >= 3, "wheel rim must have at least 3 vertices");
    let mut hubs: Vec<usize> = g.vertices().collect();
    hubs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for hub in hubs {
        if g.degree(hub) < m {
            // Hubs are degree-sorted, so nothing later qualifies either.
            break;
        }
        let nbrs = g.neighbors(hub);
        let local = g.induced(&nbrs);
        let report =
            find_cycle_of_length(&local, m).expect("rim length fits inside the neighborhood");
        if let Some(PatternWitness::Cycle { vertices }) = report.witness {
            let hosts = nbrs.to_vec();
            let rim: Vec<usize> = vertices.into_iter().map(|i| hosts[i]).collect();
            return WitnessReport::hit(pattern, PatternWitness::Wheel { hub, rim });
        }
    }
    WitnessReport::miss(pattern)
}

// ===================================================================
// Cliques
// ===================================================================

/// Finds K_k by backtracking over ascending candidate sets; the first hit
/// is the lexicographically least member list.
pub fn find_clique(g: &Graph, k: usize) -> WitnessReport {
    let pattern = spec_of("clique", k);
    assert!(k >= 1, "clique order must be at least 1");
    if k > g.order() {
        return WitnessReport::miss(pattern);
    }
    let mut members = Vec::with_capacity(k);
    if grow_clique(g, k, &VertexSet::full(g.order()), &mut members) {
        return WitnessReport::hit(pattern, PatternWitness::Clique { members });
    }
    WitnessReport::miss(pattern)
}

fn grow_clique(g: &Graph, k: usize, candidates: &VertexSet, members: &mut Vec<usize>) -> bool {
    if members.len() == k {
        return true;
    }
    if members.len() + candidates.len() < k {
        return false;
    }
    for v in candidates.iter() {
        let mut narrowed = candidates.intersection(&g.neighbors(v));
        // Only extend upward to keep member lists ascending and unique.
        for w in 0..=v {
            narrowed.remove(w);
        }
        members.push(v);
        if grow_clique(g, k, &narrowed, members) {
            return true;
        }
        members.pop();
    }
    false
}

// ===================================================================
// Dispatch and spectrum
// ===================================================================

/// Runs the right detector for a pattern spec. Patterns larger than the
/// host report not-found without error.
pub fn find_pattern(g: &Graph, pattern: &PatternSpec) -> WitnessReport {
    if pattern.order() > g.order() as u64 {
        return WitnessReport::miss(*pattern);
    }
    match *pattern {
        PatternSpec::Star(n) => find_star(g, n as usize),
        PatternSpec::K2n(n) => find_k2n(g, n as usize),
        PatternSpec::Book(n) => find_book(g, n as usize),
        PatternSpec::Cycle(m) => find_cycle_of_length(g, m as usize)
            .expect("cycle length validated against host order"),
        PatternSpec::Wheel(m) => find_wheel(g, m as usize),
        PatternSpec::Clique(k) => find_clique(g, k as usize),
    }
}

/// Exact cycle-length profile of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    /// Shortest cycle length, absent in forests.
    pub girth: Option<usize>,
    /// Longest even cycle length, 0 when no even cycle exists.
    pub ec: usize,
    /// Longest odd cycle length, 0 when no odd cycle exists.
    pub oc: usize,
    /// Every achievable cycle length, ascending.
    pub lengths: Vec<usize>,
}

/// Default order cap for [`cycle_spectrum`]; the search is exponential.
pub const SPECTRUM_ORDER_CAP: usize = 16;

/// Computes the cycle spectrum under the default cap.
pub fn cycle_spectrum(g: &Graph) -> Result<CycleSpectrum, CheckError> {
    cycle_spectrum_with_cap(g, SPECTRUM_ORDER_CAP)
}

/// Computes the cycle spectrum, refusing hosts above `cap` vertices. One
/// existence search per candidate length; callers needing a single length
/// on a big host should use [`find_cycle_of_length`] directly.
pub fn cycle_spectrum_with_cap(g: &Graph, cap: usize) -> Result<CycleSpectrum, CheckError> {
    if g.order() > cap {
        return Err(CheckError::Capacity(format!(
            "cycle spectrum on {} vertices exceeds the cap of {cap}",
            g.order()
        )));
    }
    let mut lengths = Vec::new();
    for m in 3..=g.order().max(2) {
        if m < 3 {
            continue;
        }
        if find_cycle_of_length(g, m)?.found {
            lengths.push(m);
        }
    }
    let girth = lengths.first().copied();
    let ec = lengths.iter().rev().find(|&&l| l % 2 == 0).copied().unwrap_or(0);
    let oc = lengths.iter().rev().find(|&&l| l % 2 == 1).copied().unwrap_or(0);
    Ok(CycleSpectrum {
        girth,
        ec,
        oc,
        lengths,
    })
}

// ===================================================================
// Witness validation
// ===================================================================

/// Re-checks a witness against its host: all required edges present,
/// vertices distinct and in range, shape matching the pattern parameter.
/// Detectors are trusted to produce valid reports; this is the audit used
/// by tests and by the search layer on its final answers.
pub fn validate_witness(g: &Graph, report: &WitnessReport) -> Result<(), String> {
    let witness = match (&report.witness, report.found) {
        (Some(w), true) => w,
        (None, false) => return Ok(()),
        _ => return Err("found flag disagrees with witness presence".into()),
    };
    let check_distinct = |vs: &[usize]| -> Result<(), String> {
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return Err("witness vertices repeat".into());
        }
        if vs.iter().any(|&v| v >= g.order()) {
            return Err("witness vertex out of range".into());
        }
        Ok(())
    };
    let edge = |u: usize, v: usize| -> Result<(), String> {
        if g.has_edge(u, v) {
            Ok(())
        } else {
            Err(format!("required edge {u}-{v} missing"))
        }
    };

    match (witness, report.pattern) {
        (PatternWitness::Star { center, leaves }, PatternSpec::Star(n)) => {
            if leaves.len() != n as usize {
                return Err("wrong leaf count".into());
            }
            let mut all = leaves.clone();
            all.push(*center);
            check_distinct(&all)?;
            for &leaf in leaves {
                edge(*center, leaf)?;
            }
            Ok(())
        }
        (PatternWitness::PairCommons { u, v, commons }, PatternSpec::K2n(n))
        | (PatternWitness::PairCommons { u, v, commons }, PatternSpec::Book(n)) => {
            if commons.len() != n as usize {
                return Err("wrong common-neighbor count".into());
            }
            let mut all = commons.clone();
            all.extend([*u, *v]);
            check_distinct(&all)?;
            if matches!(report.pattern, PatternSpec::Book(_)) {
                edge(*u, *v)?;
            }
            for &c in commons {
                edge(*u, c)?;
                edge(*v, c)?;
            }
            Ok(())
        }
        (PatternWitness::Cycle { vertices }, PatternSpec::Cycle(m)) => {
            if vertices.len() != m as usize {
                return Err("wrong cycle length".into());
            }
            check_distinct(vertices)?;
            for i in 0..vertices.len() {
                edge(vertices[i], vertices[(i + 1) % vertices.len()])?;
            }
            Ok(())
        }
        (PatternWitness::Wheel { hub, rim }, PatternSpec::Wheel(m)) => {
            if rim.len() != m as usize {
                return Err("wrong rim length".into());
            }
            let mut all = rim.clone();
            all.push(*hub);
            check_distinct(&all)?;
            for i in 0..rim.len() {
                edge(rim[i], rim[(i + 1) % rim.len()])?;
                edge(*hub, rim[i])?;
            }
            Ok(())
        }
        (PatternWitness::Clique { members }, PatternSpec::Clique(k)) => {
            if members.len() != k as usize {
                return Err("wrong clique size".into());
            }
            check_distinct(members)?;
            for i in 0..members.len() {
                for j in (i + 1)..members.len() {
                    edge(members[i], members[j])?;
                }
            }
            Ok(())
        }
        _ => Err("witness shape disagrees with pattern".into()),
    }
}

// ===================================================================
// Tests
// ===================================================================
