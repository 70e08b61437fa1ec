//! Search layer: canonical labeling, isomorph-free generation, and the
//! Ramsey drivers built on top of them.
//!
//! [`arrows`] decides whether every graph on a given number of vertices
//! contains the first pattern or has the second in its complement, by walking
//! the generation tree and pruning with the hereditary "first pattern absent"
//! predicate. [`ramsey_number`] wraps repeated arrowing scans in the
//! chromatic-surplus bookkeeping that settles R(g, h) exactly, recording a
//! verified clique-union witness one vertex below the lower-bound floor.
//! [`stochastic_lower_bound_search`] hill-climbs for two-sided witnesses at
//! orders the exhaustive scan cannot reach, and
//! [`verify_lower_bound_witness`] re-checks the three-clique construction
//! behind R(K_{2,n}, W_m) >= 3n+4 on concrete instances.
//!
//! Every driver is deterministic for a fixed seed: results never depend on
//! the worker count, and randomized restarts draw their seeds from a fixed
//! per-index stream.

pub mod canon;
pub mod generate;

pub use canon::{canonical_form, canonical_graph6, is_isomorphic, CanonicalForm};
pub use generate::{
    generate_nonisomorphic, generate_nonisomorphic_with_guard, DEFAULT_ORDER_GUARD,
    KERNEL_ORDER_CAP,
};

use std::collections::HashMap;
use std::fs;
use std::io::{BufWriter, Write as _};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::detect::{find_cycle_of_length, find_k2n, find_pattern, find_wheel};
use crate::error::CheckError;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::lemmas::{LemmaId, LemmaVerdict};
use crate::patterns::{burr_lower_bound, disjoint_cliques, PatternSpec};

use generate::{
    check_guard, collect_roots, enumerate_pruned, enumerate_subtree, split_level, SubtreeRoot,
};

// ===== configuration and result records =====

/// How a Ramsey run explores the space of graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// Isomorph-free exhaustive scan; the only mode that can prove arrowing.
    Exhaustive,
    /// Seeded hill climbing for non-arrowing witnesses; disproves arrowing
    /// when it succeeds but proves nothing when it fails.
    Stochastic,
}

/// Knobs shared by the search entry points.
///
/// `jobs` picks the worker count: `1` runs in the calling thread, `0` asks
/// the runtime for one worker per core, anything else is an explicit count.
/// Results are byte-identical across worker counts. `order_guard` is a
/// safety rail against accidentally launching an enumeration that cannot
/// finish; raise it deliberately when a larger scan is intended.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Largest order a Ramsey run will scan before reporting a bound.
    pub max_order: usize,
    /// Worker threads: 1 serial, 0 runtime default, n explicit.
    pub jobs: usize,
    /// Exhaustive or stochastic exploration.
    pub mode: SearchMode,
    /// Edge flips each stochastic restart may spend.
    pub flip_budget: u64,
    /// Independent restarts of the stochastic climb.
    pub restarts: u32,
    /// Master seed for every randomized choice.
    pub seed: u64,
    /// Hard cap on the order any exhaustive scan may attempt.
    pub order_guard: usize,
    /// Optional append-only progress file that lets an interrupted arrowing
    /// scan resume without redoing finished subtrees.
    pub journal: Option<PathBuf>,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            max_order: 12,
            jobs: 1,
            mode: SearchMode::Exhaustive,
            flip_budget: 20_000,
            restarts: 16,
            seed: 0,
            order_guard: DEFAULT_ORDER_GUARD,
            journal: None,
        }
    }
}

/// Outcome of one arrowing decision at a fixed order.
#[derive(Debug, Clone, Serialize)]
pub struct ArrowsOutcome {
    pub order: usize,
    /// True when every graph on `order` vertices contains g or its
    /// complement contains h.
    pub arrows: bool,
    /// Canonical graph6 of the lexicographically least non-arrowing witness,
    /// present exactly when `arrows` is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Number of g-free isomorphism classes inspected at this order.
    pub graphs_examined: u64,
}

/// One settled order inside a Ramsey run.
#[derive(Debug, Clone, Serialize)]
pub struct OrderRecord {
    pub order: usize,
    pub arrows: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub graphs_examined: u64,
    /// "construction" when a verified clique union settled the order,
    /// "search" when the exhaustive scan did.
    pub settled_by: String,
    pub wall_ms: u64,
}

/// Full account of a Ramsey-number computation.
///
/// The record deliberately omits the worker count: two runs with the same
/// seed and mode serialize identically (up to `wall_ms`) no matter how the
/// work was scheduled.
#[derive(Debug, Clone, Serialize)]
pub struct RamseyRun {
    pub g: PatternSpec,
    pub h: PatternSpec,
    /// The exact Ramsey number when the scan settled it.
    pub value: Option<u64>,
    /// Largest N with evidence that R(g, h) >= N.
    pub lower_bound: u64,
    /// Chromatic-surplus floor (|V(g)| - 1)(chi(h) - 1) + s(h), when defined.
    pub burr_lower_bound: Option<u64>,
    /// "exact" or "bounded".
    pub outcome: String,
    pub per_order: Vec<OrderRecord>,
    pub mode: SearchMode,
    pub seed: u64,
    pub max_order: usize,
}

// ===== small shared helpers =====

/// Canonical graph6 for any graph this crate can build: canonical form while
/// the labeling kernel covers the order, plain graph6 beyond it.
pub fn portable_canonical_g6(graph: &Graph) -> String {
    if graph.order() < 2 {
        return write_graph6(graph).expect("tiny graphs always encode");
    }
    canonical_graph6(graph)
        .or_else(|_| write_graph6(graph))
        .expect("constructible graphs always encode")
}

/// Zeroes every `wall_ms` field in a serialized report so two runs of the
/// same computation can be compared byte for byte.
pub fn scrub_wall_ms(value: &mut Value) {
    match value {
        Value::Object(map) => {
            for (key, entry) in map.iter_mut() {
                if key == "wall_ms" {
                    *entry = json!(0);
                } else {
                    scrub_wall_ms(entry);
                }
            }
        }
        Value::Array(items) => {
            for item in items.iter_mut() {
                scrub_wall_ms(item);
            }
        }
        _ => {}
    }
}

/// Keeps the lexicographically least witness string.
fn merge_witness(slot: &mut Option<String>, candidate: Option<String>) {
    if let Some(candidate) = candidate {
        match slot {
            Some(existing) if *existing <= candidate => {}
            _ => *slot = Some(candidate),
        }
    }
}

/// Combines two partial scan results; commutative and associative, so the
/// reduction order never shows in the answer.
fn merge_scan(
    a: (u64, Option<String>),
    b: (u64, Option<String>),
) -> (u64, Option<String>) {
    let (count_a, mut witness) = a;
    merge_witness(&mut witness, b.1);
    (count_a + b.0, witness)
}

fn build_pool(jobs: usize) -> Result<rayon::ThreadPool, CheckError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CheckError::Capacity(format!("cannot build a {jobs}-worker pool: {e}")))
}

// ===== pruned class generation =====

/// Streams one representative per isomorphism class among the graphs on
/// `order` vertices satisfying `keep`, and returns how many there were.
///
/// The walk prunes every partial graph that fails `keep`, which is what
/// makes orders beyond the unrestricted enumeration reachable. That pruning
/// is complete only for hereditary predicates (ones preserved by taking
/// induced subgraphs), such as "contains no fixed subgraph" or "maximum
/// degree at most D". A non-hereditary predicate would silently lose
/// classes; filter the unrestricted stream instead for those.
pub fn generate_where<P, F>(
    order: usize,
    guard: usize,
    keep: P,
    mut consumer: F,
) -> Result<u64, CheckError>
where
    P: Fn(&Graph) -> bool,
    F: FnMut(&Graph),
{
    check_guard(order, guard)?;
    let keep_rows = |rows: &[u64]| keep(&Graph::from_bitrows64(rows));
    let mut count = 0;
    enumerate_pruned(order, &keep_rows, &mut |rows| {
        count += 1;
        consumer(&Graph::from_bitrows64(rows));
    });
    Ok(count)
}

// ===== resumable scan journal =====

/// Append-only record of finished generation subtrees. The header pins the
/// pattern pair, order, and split level; each data line stores a subtree
/// root id, the leaf count under it, and the least witness found there (`-`
/// for none). A journal written for a different scan is discarded, and a
/// torn final line from an interrupted run parses as absent, so resuming is
/// always safe.
struct Journal {
    completed: HashMap<String, (u64, Option<String>)>,
    writer: Mutex<BufWriter<fs::File>>,
}

impl Journal {
    fn open(
        path: &Path,
        g: &PatternSpec,
        h: &PatternSpec,
        order: usize,
        level: usize,
    ) -> Result<Journal, CheckError> {
        let header = format!("# arrows v1 g={g} h={h} order={order} split={level}");
        let mut completed = HashMap::new();
        let mut resume = false;
        if let Ok(text) = fs::read_to_string(path) {
            let mut lines = text.lines();
            if lines.next() == Some(header.as_str()) {
                resume = true;
                for line in lines {
                    let mut parts = line.split_whitespace();
                    let (Some(id), Some(count)) = (parts.next(), parts.next()) else {
                        continue;
                    };
                    let Ok(count) = count.parse::<u64>() else {
                        continue;
                    };
                    let witness = match parts.next() {
                        None | Some("-") => None,
                        Some(w) => Some(w.to_string()),
                    };
                    completed.insert(id.to_string(), (count, witness));
                }
            }
        }
        let io_err =
            |e: std::io::Error| CheckError::Argument(format!("journal {}: {e}", path.display()));
        let file = if resume {
            fs::OpenOptions::new().append(true).open(path)
        } else {
            fs::File::create(path)
        }
        .map_err(io_err)?;
        let mut writer = BufWriter::new(file);
        if !resume {
            writeln!(writer, "{header}").map_err(io_err)?;
            writer.flush().map_err(io_err)?;
        }
        Ok(Journal {
            completed,
            writer: Mutex::new(writer),
        })
    }

    /// Marks one subtree finished. Flushes immediately: the journal exists
    /// for the crash case.
    fn record(&self, id: &str, examined: u64, witness: Option<&str>) {
        let mut writer = self.writer.lock().expect("journal writer lock");
        let _ = writeln!(writer, "{id} {examined} {}", witness.unwrap_or("-"));
        let _ = writer.flush();
    }
}

// ===== arrowing decision =====

/// Decides whether every graph on `order` vertices contains `g` or has `h`
/// in its complement.
///
/// The scan enumerates one representative per isomorphism class, prunes
/// every branch whose graph already contains `g` (g-freeness is closed
/// under taking induced subgraphs, so nothing below such a branch can be
/// g-free), and checks the complement of each surviving leaf for `h`. The
/// reported witness is the canonical-graph6 least non-arrowing graph over
/// the whole order, which makes the outcome independent of traversal and
/// worker scheduling.
pub fn arrows(
    order: usize,
    g: &PatternSpec,
    h: &PatternSpec,
    config: &SearchConfig,
) -> Result<ArrowsOutcome, CheckError> {
    if order == 0 {
        // The empty graph contains nothing and neither does its complement.
        return Ok(ArrowsOutcome {
            order,
            arrows: false,
            witness: Some(portable_canonical_g6(&Graph::empty(0))),
            graphs_examined: 1,
        });
    }
    check_guard(order, config.order_guard)?;
    let keep = |rows: &[u64]| !find_pattern(&Graph::from_bitrows64(rows), g).found;
    let inspect = |rows: &[u64]| -> (u64, Option<String>) {
        let graph = Graph::from_bitrows64(rows);
        if find_pattern(&graph.complement(), h).found {
            (1, None)
        } else {
            (1, Some(portable_canonical_g6(&graph)))
        }
    };
    let (graphs_examined, witness) = if config.jobs == 1 && config.journal.is_none() {
        let mut total = (0, None);
        enumerate_pruned(order, &keep, &mut |rows| {
            total = merge_scan(total.clone(), inspect(rows));
        });
        total
    } else {
        arrows_root_split(order, g, h, config, &keep, &inspect)?
    };
    Ok(ArrowsOutcome {
        order,
        arrows: witness.is_none(),
        witness,
        graphs_examined,
    })
}

/// Root-split traversal behind [`arrows`]: the generation tree is cut at a
/// fixed level, finished subtrees are read back from the journal when one is
/// attached, and pending subtrees run independently (in parallel when asked).
fn arrows_root_split<K, I>(
    order: usize,
    g: &PatternSpec,
    h: &PatternSpec,
    config: &SearchConfig,
    keep: &K,
    inspect: &I,
) -> Result<(u64, Option<String>), CheckError>
where
    K: Fn(&[u64]) -> bool + Sync,
    I: Fn(&[u64]) -> (u64, Option<String>) + Sync,
{
    let level = split_level(order);
    let roots = collect_roots(level, keep);
    let journal = match &config.journal {
        Some(path) => Some(Journal::open(path, g, h, order, level)?),
        None => None,
    };

    let mut replayed = (0, None);
    let mut pending: Vec<SubtreeRoot> = Vec::new();
    for root in roots {
        match journal.as_ref().and_then(|j| j.completed.get(&root.id)) {
            Some(done) => replayed = merge_scan(replayed, done.clone()),
            None => pending.push(root),
        }
    }

    let process = |root: &SubtreeRoot| -> (u64, Option<String>) {
        let mut subtotal = (0, None);
        enumerate_subtree(root, order, keep, &mut |rows| {
            subtotal = merge_scan(subtotal.clone(), inspect(rows));
        });
        if let Some(journal) = &journal {
            journal.record(&root.id, subtotal.0, subtotal.1.as_deref());
        }
        subtotal
    };

    let fresh = if config.jobs == 1 {
        pending
            .iter()
            .map(process)
            .fold((0, None), merge_scan)
    } else {
        let pool = build_pool(config.jobs)?;
        pool.install(|| {
            pending
                .par_iter()
                .map(process)
                .reduce(|| (0, None), merge_scan)
        })
    };
    Ok(merge_scan(replayed, fresh))
}

// ===== Ramsey number computation =====

/// Computes R(g, h) exactly by scanning orders upward, or reports the best
/// lower bound when the scan hits its caps first.
///
/// The scan starts at the chromatic-surplus floor: below it, a union of
/// cliques already witnesses non-arrowing, and that witness is built and
/// re-verified rather than trusted. Arrowing is monotone in the order
/// (restricting a graph to fewer vertices preserves both sides), so the
/// first order that arrows is the Ramsey number.
pub fn ramsey_number(
    g: &PatternSpec,
    h: &PatternSpec,
    config: &SearchConfig,
) -> Result<RamseyRun, CheckError> {
    let burr = burr_lower_bound(g, h).ok();
    let mut per_order = Vec::new();
    let mut lower_bound = 1;

    if let Some(floor) = burr {
        if floor >= 2 {
            let started = Instant::now();
            if let Some(witness) = burr_floor_construction(g, h) {
                per_order.push(OrderRecord {
                    order: (floor - 1) as usize,
                    arrows: false,
                    witness: Some(portable_canonical_g6(&witness)),
                    graphs_examined: 1,
                    settled_by: "construction".to_string(),
                    wall_ms: started.elapsed().as_millis() as u64,
                });
                lower_bound = lower_bound.max(floor);
            }
        }
    }

    let start = burr.unwrap_or(1).max(1) as usize;
    let cap = config.max_order.min(config.order_guard);
    let mut value = None;
    for order in start..=cap {
        let started = Instant::now();
        let outcome = arrows(order, g, h, config)?;
        per_order.push(OrderRecord {
            order,
            arrows: outcome.arrows,
            witness: outcome.witness,
            graphs_examined: outcome.graphs_examined,
            settled_by: "search".to_string(),
            wall_ms: started.elapsed().as_millis() as u64,
        });
        if outcome.arrows {
            value = Some(order as u64);
            break;
        }
        lower_bound = lower_bound.max(order as u64 + 1);
    }
    if let Some(value) = value {
        lower_bound = value;
    }

    Ok(RamseyRun {
        g: *g,
        h: *h,
        value,
        lower_bound,
        burr_lower_bound: burr,
        outcome: if value.is_some() { "exact" } else { "bounded" }.to_string(),
        per_order,
        mode: config.mode,
        seed: config.seed,
        max_order: config.max_order,
    })
}

/// Builds the clique-union witness one vertex below the chromatic-surplus
/// floor: chi(h) - 1 cliques on |V(g)| - 1 vertices each, plus a clique on
/// s(h) - 1 vertices when the surplus exceeds one. Returns the graph only
/// after confirming it is g-free with an h-free complement; a construction
/// that fails that check is dropped rather than reported.
fn burr_floor_construction(g: &PatternSpec, h: &PatternSpec) -> Option<Graph> {
    let gp = g.burr_parameters();
    let hp = h.burr_parameters();
    let copies = (hp.chromatic_number - 1) as usize;
    let clique_order = (gp.order - 1) as usize;
    if copies < 1 || clique_order < 1 {
        return None;
    }
    let mut graph = disjoint_cliques(copies, clique_order).ok()?;
    if hp.surplus > 1 {
        graph = graph.disjoint_union(&Graph::complete((hp.surplus - 1) as usize));
    }
    if find_pattern(&graph, g).found || find_pattern(&graph.complement(), h).found {
        return None;
    }
    Some(graph)
}

// ===== lower-bound witness verification =====

/// Re-checks the construction behind R(K_{2,n}, W_m) >= 3n+4: three disjoint
/// copies of K_{n+1} contain no K_{2,n} (two vertices share at most n-1
/// neighbors inside one clique), and the complement, the complete
/// tripartite K_{n+1,n+1,n+1}, holds no odd wheel because every hub
/// neighborhood there is bipartite.
pub fn verify_lower_bound_witness(n: usize, m: usize) -> Result<LemmaVerdict, CheckError> {
    if n < 1 {
        return Err(CheckError::Argument(format!(
            "witness needs n >= 1, got n = {n}"
        )));
    }
    if m < 3 || m % 2 == 0 {
        return Err(CheckError::Argument(format!(
            "witness targets odd wheels with m >= 3, got m = {m}"
        )));
    }
    let graph = disjoint_cliques(3, n + 1)?;
    let complement = graph.complement();
    let k2n_hit = find_k2n(&graph, n);
    let wheel_hit = find_wheel(&complement, m);

    let mut verdict = LemmaVerdict::new(LemmaId::LowerBoundWitness, false);
    verdict.hypotheses_met = true;
    verdict.conclusion_holds = !k2n_hit.found && !wheel_hit.found;
    verdict.note("n", json!(n));
    verdict.note("m", json!(m));
    verdict.note("order", json!(graph.order()));
    verdict.note("witness_graph6", json!(portable_canonical_g6(&graph)));
    verdict.note("k2n_found", json!(k2n_hit.found));
    verdict.note("wheel_found_in_complement", json!(wheel_hit.found));
    verdict.note("ramsey_lower_bound", json!(3 * n + 4));
    Ok(verdict)
}

// ===== stochastic lower-bound search =====

/// Hill-climbs for a graph on `order` vertices that is g-free with an h-free
/// complement. Returns the first witness over the restart sequence, or
/// `None` when every restart exhausts its flip budget.
///
/// Determinism: restart i always climbs from the same seed, derived from the
/// master seed by a fixed integer stream, and the accepted witness is the
/// one with the least restart index. Running restarts in parallel therefore
/// returns exactly what the serial loop would.
pub fn stochastic_lower_bound_search(
    order: usize,
    g: &PatternSpec,
    h: &PatternSpec,
    config: &SearchConfig,
) -> Result<Option<Graph>, CheckError> {
    if config.flip_budget == 0 {
        return Err(CheckError::Argument(
            "stochastic search needs a positive flip budget".to_string(),
        ));
    }
    if config.restarts == 0 {
        return Err(CheckError::Argument(
            "stochastic search needs at least one restart".to_string(),
        ));
    }
    let run_restart =
        |index: u32| -> Option<Graph> { climb(order, g, h, config.flip_budget, restart_seed(config.seed, index)) };

    if config.jobs == 1 {
        for index in 0..config.restarts {
            if let Some(found) = run_restart(index) {
                return Ok(Some(found));
            }
        }
        Ok(None)
    } else {
        let pool = build_pool(config.jobs)?;
        let results: Vec<Option<Graph>> =
            pool.install(|| (0..config.restarts).into_par_iter().map(run_restart).collect());
        Ok(results.into_iter().flatten().next())
    }
}

/// One hill-climbing restart: start from a uniform random graph, flip random
/// edges, keep any flip that does not increase the penalty (plateau moves
/// escape shallow traps), stop the moment the penalty hits zero.
fn climb(
    order: usize,
    g: &PatternSpec,
    h: &PatternSpec,
    flip_budget: u64,
    seed: u64,
) -> Option<Graph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut graph = Graph::empty(order);
    for u in 0..order {
        for v in (u + 1)..order {
            if rng.random_bool(0.5) {
                graph.set_edge(u, v);
            }
        }
    }
    let mut cost = two_sided_penalty(&graph, g, h);
    if cost == 0 {
        return Some(graph);
    }
    if order < 2 {
        // No edges to flip; the empty and only graph already failed.
        return None;
    }
    for _ in 0..flip_budget {
        let u = rng.random_range(0..order);
        let mut v = rng.random_range(0..order - 1);
        if v >= u {
            v += 1;
        }
        let had = graph.has_edge(u, v);
        if had {
            graph.clear_edge(u, v);
        } else {
            graph.set_edge(u, v);
        }
        let next = two_sided_penalty(&graph, g, h);
        if next == 0 {
            return Some(graph);
        }
        if next <= cost {
            cost = next;
        } else if had {
            graph.set_edge(u, v);
        } else {
            graph.clear_edge(u, v);
        }
    }
    None
}

fn two_sided_penalty(graph: &Graph, g: &PatternSpec, h: &PatternSpec) -> u64 {
    freeness_penalty(graph, g) + freeness_penalty(&graph.complement(), h)
}

/// How far a graph is from being free of the pattern: the number of rooted
/// placements that certify containment. Stars count heavy vertices, K_{2,n}
/// counts heavy pairs, books count heavy edges, and wheels count hubs whose
/// neighborhood carries the rim. Cycles and cliques fall back to a 0/1
/// indicator, which still lets the climb walk plateaus even though it gives
/// no gradient toward freeness.
fn freeness_penalty(graph: &Graph, pattern: &PatternSpec) -> u64 {
    let order = graph.order();
    let param = pattern.param() as usize;
    match pattern.kind_name() {
        "star" => graph
            .vertices()
            .filter(|&v| graph.degree(v) >= param)
            .count() as u64,
        "k2n" => {
            let mut heavy_pairs = 0;
            for u in 0..order {
                for v in (u + 1)..order {
                    let common = graph.neighbors(u).intersection(&graph.neighbors(v));
                    if common.len() >= param {
                        heavy_pairs += 1;
                    }
                }
            }
            heavy_pairs
        }
        "book" => {
            let mut heavy_edges = 0;
            for u in 0..order {
                for v in (u + 1)..order {
                    if !graph.has_edge(u, v) {
                        continue;
                    }
                    let common = graph.neighbors(u).intersection(&graph.neighbors(v));
                    if common.len() >= param {
                        heavy_edges += 1;
                    }
                }
            }
            heavy_edges
        }
        "wheel" => {
            let mut hubs = 0;
            for v in graph.vertices() {
                if graph.degree(v) < param {
                    continue;
                }
                let around = graph.induced(&graph.neighbors(v));
                let rim = find_cycle_of_length(&around, param)
                    .expect("rim length is valid and fits the neighborhood");
                if rim.found {
                    hubs += 1;
                }
            }
            hubs
        }
        _ => u64::from(find_pattern(graph, pattern).found),
    }
}

/// Seed for restart `index`: one step of a SplitMix64-style finalizer over
/// the master seed, so restarts are independent and reproducible without
/// any shared state.
fn restart_seed(master: u64, index: u32) -> u64 {
    let mut z = master.wrapping_add((u64::from(index) + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

// ===== tests =====
