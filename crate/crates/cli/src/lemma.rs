//! `lemma`: check one lemma over a corpus file, an exhaustive family of
//! graphs, or seeded random samples, and summarize hypothesis hits,
//! conclusion holds, and counterexamples.
//!
//! The scan never aborts on a graph the lemma cannot judge (wrong order,
//! beyond an internal cap): such instances are counted and reported as
//! skipped, with deduplicated reasons. The exit code is 1 exactly when some
//! instance met the hypotheses and failed the conclusion.

use std::path::PathBuf;

use clap::Args;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

use ramsey_core::graph6::{parse_graph6_lines, write_graph6};
use ramsey_core::lemmas::{
    check_cycle_lemma_1, check_delta_complement_bound, check_min_degree_bound,
    dense_null_decomposition, is_regime_fraction, max_common_neighborhood,
    neighborhood_nonbipartite_scan, two_connected_decomposition, LemmaId, LemmaVerdict,
};
use ramsey_core::ratio::int_lt;
use ramsey_core::search::{generate_nonisomorphic, verify_lower_bound_witness};
use ramsey_core::{Graph, Ratio, VertexSet};

use crate::report::{
    emit_report, human_note, human_table, CmdResult, Failure, RunContext, EXIT_COUNTEREXAMPLE,
    EXIT_OK,
};

// ===== command surface =====

#[derive(Args)]
pub struct LemmaArgs {
    /// Lemma id; an unknown id lists the valid ones.
    id: String,
    /// Check every graph6 line of this file.
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
    /// Check every isomorphism class of every order up to N.
    #[arg(long, value_name = "N")]
    exhaustive: Option<usize>,
    /// intersection-lemma only: every bipartite instance on fixed side
    /// sizes A and B, at every feasible degree floor d.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    exhaustive_bipartite: Option<Vec<usize>>,
    /// Check T random graphs drawn with edge probability 1/2.
    #[arg(long, value_name = "T")]
    random: Option<u64>,
    /// Order for --random samples; defaults to 3n+4 when --n is given,
    /// otherwise 8.
    #[arg(long)]
    order: Option<usize>,
    /// Cycle-length floor for cycle-lemma-1 (default 3).
    #[arg(long)]
    r: Option<usize>,
    /// K_{2,n} parameter, required by the lemmas pinned to order 3n+4.
    #[arg(long)]
    n: Option<usize>,
    /// Wheel rim length, where the lemma involves the complement wheel.
    #[arg(long)]
    m: Option<usize>,
    /// Piece count for the star-cycle cut decomposition (default 3).
    #[arg(long)]
    k: Option<usize>,
    /// Degree threshold fraction for dense-null, as p/q (default 1/10).
    #[arg(long)]
    fraction: Option<String>,
}

enum Source {
    Corpus(PathBuf),
    Exhaustive(usize),
    ExhaustiveBipartite(usize, usize),
    Random(u64),
    /// lower-bound-witness runs on its parameters, not on input graphs.
    Parameters,
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::Corpus(path) => format!("corpus:{}", path.display()),
            Source::Exhaustive(n) => format!("exhaustive:{n}"),
            Source::ExhaustiveBipartite(a, b) => format!("exhaustive-bipartite:{a}x{b}"),
            Source::Random(t) => format!("random:{t}"),
            Source::Parameters => "parameters".to_string(),
        }
    }
}

// ===== scan bookkeeping =====

/// Kept counterexample verdicts, capped.
const COUNTEREXAMPLE_CAP: usize = 200;
/// Kept non-counterexample verdicts, capped; the counts stay exact.
const SAMPLE_CAP: usize = 50;
/// Distinct skip reasons kept.
const SKIP_REASON_CAP: usize = 20;
/// Largest order the per-graph intersection scan enumerates subsets of.
const INTERSECTION_SUBSET_ORDER_CAP: usize = 16;
/// Largest side product (= mask bit count) for --exhaustive-bipartite.
const BIPARTITE_BITS_CAP: usize = 25;

#[derive(Serialize)]
struct LemmaScanReport {
    lemma_id: LemmaId,
    source: String,
    instances: u64,
    hypotheses_met: u64,
    conclusion_held: u64,
    counterexample_count: u64,
    skipped: u64,
    /// First few hypothesis-meeting, conclusion-failing verdicts.
    counterexamples: Vec<LemmaVerdict>,
    /// First few of the other verdicts, for eyeballing diagnostics.
    sample_verdicts: Vec<LemmaVerdict>,
    /// Distinct reasons instances were skipped, first few.
    skip_reasons: Vec<String>,
}

struct ScanTally {
    report: LemmaScanReport,
}

impl ScanTally {
    fn new(lemma_id: LemmaId, source: &Source) -> ScanTally {
        ScanTally {
            report: LemmaScanReport {
                lemma_id,
                source: source.describe(),
                instances: 0,
                hypotheses_met: 0,
                conclusion_held: 0,
                counterexample_count: 0,
                skipped: 0,
                counterexamples: Vec::new(),
                sample_verdicts: Vec::new(),
                skip_reasons: Vec::new(),
            },
        }
    }

    /// Counts one judged instance. `make` is only called when the verdict
    /// is kept, so bulk scans stay cheap.
    fn absorb_lazy(
        &mut self,
        hypotheses_met: bool,
        conclusion_holds: bool,
        make: impl FnOnce() -> LemmaVerdict,
    ) {
        let r = &mut self.report;
        r.instances += 1;
        if hypotheses_met {
            r.hypotheses_met += 1;
            if conclusion_holds {
                r.conclusion_held += 1;
            } else {
                r.counterexample_count += 1;
                if r.counterexamples.len() < COUNTEREXAMPLE_CAP {
                    r.counterexamples.push(make());
                }
                return;
            }
        }
        if r.sample_verdicts.len() < SAMPLE_CAP {
            r.sample_verdicts.push(make());
        }
    }

    fn absorb(&mut self, verdict: LemmaVerdict) {
        let hypotheses = verdict.hypotheses_met;
        let conclusion = verdict.conclusion_holds;
        self.absorb_lazy(hypotheses, conclusion, move || verdict);
    }

    fn skip(&mut self, reason: String) {
        let r = &mut self.report;
        r.skipped += 1;
        if r.skip_reasons.len() < SKIP_REASON_CAP && !r.skip_reasons.contains(&reason) {
            r.skip_reasons.push(reason);
        }
    }
}

// ===== per-lemma parameters =====

struct LemmaParams {
    r: usize,
    n: Option<usize>,
    m: Option<usize>,
    k: usize,
    fraction: Ratio,
}

fn require(value: Option<usize>, flag: &str, id: LemmaId) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("lemma {id} requires --{flag}")))
}

fn resolve_params(args: &LemmaArgs, id: LemmaId) -> Result<LemmaParams, Failure> {
    let fraction = match &args.fraction {
        None => Ratio::new(1, 10),
        Some(text) => Ratio::parse(text)
            .ok_or_else(|| Failure::usage(format!("--fraction {text} is not a p/q rational")))?,
    };
    if fraction < Ratio::from_int(0) || fraction > Ratio::from_int(1) {
        return Err(Failure::usage(format!(
            "--fraction must lie in [0, 1], got {fraction}"
        )));
    }
    let params = LemmaParams {
        r: args.r.unwrap_or(3),
        n: args.n,
        m: args.m,
        k: args.k.unwrap_or(3),
        fraction,
    };
    match id {
        LemmaId::DeltaComplement | LemmaId::LowerBoundWitness => {
            require(params.n, "n", id)?;
            require(params.m, "m", id)?;
        }
        LemmaId::MinDegreeSqrt3 | LemmaId::NbdNonbipartite => {
            require(params.n, "n", id)?;
        }
        _ => {}
    }
    Ok(params)
}

fn resolve_source(args: &LemmaArgs, id: LemmaId) -> Result<Source, Failure> {
    let mut sources: Vec<Source> = Vec::new();
    if let Some(path) = &args.corpus {
        sources.push(Source::Corpus(path.clone()));
    }
    if let Some(n) = args.exhaustive {
        sources.push(Source::Exhaustive(n));
    }
    if let Some(sides) = &args.exhaustive_bipartite {
        sources.push(Source::ExhaustiveBipartite(sides[0], sides[1]));
    }
    if let Some(t) = args.random {
        sources.push(Source::Random(t));
    }

    if id == LemmaId::LowerBoundWitness {
        return if sources.is_empty() {
            Ok(Source::Parameters)
        } else {
            Err(Failure::usage(
                "lemma lower-bound-witness checks its --n/--m parameters and takes no \
                 graph source",
            ))
        };
    }
    if matches!(sources.first(), Some(Source::ExhaustiveBipartite(_, _)))
        && id != LemmaId::Intersection
    {
        return Err(Failure::usage(format!(
            "--exhaustive-bipartite only applies to intersection-lemma, not {id}"
        )));
    }
    match sources.len() {
        0 => Err(Failure::usage(
            "pick a graph source: --corpus, --exhaustive, --exhaustive-bipartite, or --random",
        )),
        1 => Ok(sources.remove(0)),
        _ => Err(Failure::usage(
            "pick exactly one graph source; got several",
        )),
    }
}

// ===== per-graph checks =====

/// Tags a kept verdict with where its graph came from.
fn tag(mut verdict: LemmaVerdict, graph: &Graph, line: Option<usize>) -> LemmaVerdict {
    if let Ok(text) = write_graph6(graph) {
        verdict.diagnostics.insert("graph6".to_string(), json!(text));
    }
    if let Some(line) = line {
        verdict
            .diagnostics
            .insert("corpus_line".to_string(), json!(line));
    }
    verdict
}

/// Well-formedness verdict for the degree-threshold split: the null and
/// dense sets partition the vertices at the stated threshold, and the
/// reported components cover exactly the dense side.
fn dense_null_verdict(graph: &Graph, fraction: Ratio) -> Result<LemmaVerdict, Failure> {
    let report = dense_null_decomposition(graph, fraction)?;
    let n = graph.order();
    let threshold = Ratio::from_int(n as i64) * fraction + Ratio::from_int(1);
    let partition_ok = report.null_set.intersection(&report.dense_set).len() == 0
        && report.null_set.len() + report.dense_set.len() == n;
    let split_ok = graph
        .vertices()
        .all(|x| int_lt(graph.degree(x) as i64, threshold) == report.null_set.contains(x));
    let component_cover: usize = report.components.iter().map(|c| c.len()).sum();
    let components_ok = component_cover == report.dense_set.len();
    let regime_ok = report.regime_fraction == is_regime_fraction(fraction);

    let mut verdict = LemmaVerdict {
        lemma_id: LemmaId::DenseNull,
        hypotheses_met: true,
        conclusion_holds: partition_ok && split_ok && components_ok && regime_ok,
        asymptotic_hypotheses: false,
        diagnostics: serde_json::Map::new(),
    };
    verdict
        .diagnostics
        .insert("fraction".to_string(), json!(fraction));
    verdict
        .diagnostics
        .insert("regime_fraction".to_string(), json!(report.regime_fraction));
    verdict
        .diagnostics
        .insert("null_size".to_string(), json!(report.null_set.len()));
    verdict
        .diagnostics
        .insert("dense_size".to_string(), json!(report.dense_set.len()));
    verdict.diagnostics.insert(
        "dense_components".to_string(),
        json!(report.components.len()),
    );
    Ok(verdict)
}

/// Every whole-graph intersection instance on `graph`: each vertex subset A
/// with |A| >= 2 against B = V, at every degree floor d the subset supports.
fn intersection_instances(
    graph: &Graph,
    line: Option<usize>,
    tally: &mut ScanTally,
) {
    let order = graph.order();
    if order > INTERSECTION_SUBSET_ORDER_CAP {
        tally.skip(format!(
            "order {order} exceeds the subset scan cap {INTERSECTION_SUBSET_ORDER_CAP}"
        ));
        return;
    }
    if order < 2 {
        tally.skip(format!("order {order} admits no two-vertex subset"));
        return;
    }
    let full = VertexSet::full(order);
    for mask in 0u32..(1u32 << order) {
        if (mask.count_ones() as usize) < 2 {
            continue;
        }
        let members: Vec<usize> = (0..order).filter(|&v| mask >> v & 1 == 1).collect();
        let min_degree = members
            .iter()
            .map(|&v| graph.degree(v))
            .min()
            .expect("at least two members");
        let a_set = VertexSet::from_iter(order, members.iter().copied());
        for d in 1..=min_degree {
            match max_common_neighborhood(graph, &a_set, &full, d) {
                Ok(report) => {
                    let holds = report.strict_inequality_holds();
                    tally.absorb_lazy(true, holds, || {
                        let mut verdict = tag(report.verdict(), graph, line);
                        verdict
                            .diagnostics
                            .insert("a_vertices".to_string(), json!(members));
                        verdict
                    });
                }
                Err(e) => tally.skip(e.to_string()),
            }
        }
    }
}

/// One lemma check on one graph, routed by id. Lemmas that judge a single
/// graph yield one verdict; the intersection lemma fans out to instances.
fn run_on_graph(
    id: LemmaId,
    graph: &Graph,
    line: Option<usize>,
    params: &LemmaParams,
    tally: &mut ScanTally,
) {
    let outcome = match id {
        LemmaId::Intersection => {
            intersection_instances(graph, line, tally);
            return;
        }
        LemmaId::CycleLemma1 => check_cycle_lemma_1(graph, params.r),
        LemmaId::StarCycle => two_connected_decomposition(graph, params.k).map(|d| d.verdict),
        LemmaId::DeltaComplement => check_delta_complement_bound(
            graph,
            params.n.expect("validated"),
            params.m.expect("validated"),
        ),
        LemmaId::MinDegreeSqrt3 => check_min_degree_bound(graph, params.n.expect("validated")),
        LemmaId::DenseNull => match dense_null_verdict(graph, params.fraction) {
            Ok(verdict) => Ok(verdict),
            Err(failure) => {
                tally.skip(failure.message);
                return;
            }
        },
        LemmaId::NbdNonbipartite => {
            neighborhood_nonbipartite_scan(graph, params.n.expect("validated"))
        }
        LemmaId::LowerBoundWitness => unreachable!("parameter-checked lemma has no graph scan"),
    };
    match outcome {
        Ok(verdict) => tally.absorb(tag(verdict, graph, line)),
        Err(e) => tally.skip(e.to_string()),
    }
}

// ===== graph sources =====

fn scan_corpus(
    path: &PathBuf,
    id: LemmaId,
    params: &LemmaParams,
    tally: &mut ScanTally,
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))?;
    let mut saw_any = false;
    for (line, parsed) in parse_graph6_lines(&text) {
        let graph = parsed.map_err(|e| Failure::usage(format!("line {line}: {e}")))?;
        saw_any = true;
        run_on_graph(id, &graph, Some(line), params, tally);
    }
    if !saw_any {
        return Err(Failure::usage(format!(
            "no graph6 records in {}",
            path.display()
        )));
    }
    Ok(())
}

fn scan_exhaustive(
    top_order: usize,
    id: LemmaId,
    params: &LemmaParams,
    tally: &mut ScanTally,
) -> Result<(), Failure> {
    for order in 1..=top_order {
        generate_nonisomorphic(order, |graph| {
            run_on_graph(id, graph, None, params, tally);
        })?;
    }
    Ok(())
}

fn scan_random(
    trials: u64,
    id: LemmaId,
    params: &LemmaParams,
    order_flag: Option<usize>,
    seed: u64,
    tally: &mut ScanTally,
) -> Result<(), Failure> {
    let order = order_flag
        .or(params.n.map(|n| 3 * n + 4))
        .unwrap_or(8);
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in (u + 1)..order {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(order, edges);
        run_on_graph(id, &graph, None, params, tally);
    }
    Ok(())
}

/// Every bipartite instance on fixed sides: vertices 0..a on the A side,
/// a..a+b on the B side, all 2^(a*b) cross graphs, every feasible d.
fn scan_bipartite(
    size_a: usize,
    size_b: usize,
    tally: &mut ScanTally,
) -> Result<(), Failure> {
    if size_a < 2 {
        return Err(Failure::usage(format!(
            "side A needs at least two vertices for a pair bound, got {size_a}"
        )));
    }
    if size_b < 1 {
        return Err(Failure::usage("side B must be nonempty"));
    }
    let bits = size_a * size_b;
    if bits > BIPARTITE_BITS_CAP {
        return Err(Failure::capacity(format!(
            "{size_a} x {size_b} sides mean 2^{bits} graphs; capped at 2^{BIPARTITE_BITS_CAP}"
        )));
    }
    let order = size_a + size_b;
    let a_set = VertexSet::from_iter(order, 0..size_a);
    let b_set = VertexSet::from_iter(order, size_a..order);
    for mask in 0u32..(1u32 << bits) {
        let graph = Graph::from_fn(order, |u, v| {
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            lo < size_a && hi >= size_a && mask >> ((hi - size_a) * size_a + lo) & 1 == 1
        });
        let min_degree = (0..size_a).map(|v| graph.degree(v)).min().unwrap_or(0);
        for d in 1..=min_degree {
            match max_common_neighborhood(&graph, &a_set, &b_set, d) {
                Ok(report) => {
                    let holds = report.strict_inequality_holds();
                    tally.absorb_lazy(true, holds, || tag(report.verdict(), &graph, None));
                }
                Err(e) => tally.skip(e.to_string()),
            }
        }
    }
    Ok(())
}

// ===== entry point =====

pub fn run(ctx: &RunContext, args: &LemmaArgs) -> CmdResult {
    let Some(id) = LemmaId::parse(&args.id) else {
        let valid: Vec<&str> = LemmaId::all().iter().map(|id| id.as_str()).collect();
        return Err(Failure::usage(format!(
            "unknown lemma id {:?}; valid ids: {}",
            args.id,
            valid.join(", ")
        )));
    };
    let params = resolve_params(args, id)?;
    let source = resolve_source(args, id)?;
    let mut tally = ScanTally::new(id, &source);

    match &source {
        Source::Corpus(path) => scan_corpus(path, id, &params, &mut tally)?,
        Source::Exhaustive(top) => scan_exhaustive(*top, id, &params, &mut tally)?,
        Source::ExhaustiveBipartite(a, b) => scan_bipartite(*a, *b, &mut tally)?,
        Source::Random(trials) => scan_random(
            *trials,
            id,
            &params,
            args.order,
            ctx.seed,
            &mut tally,
        )?,
        Source::Parameters => {
            let verdict = verify_lower_bound_witness(
                params.n.expect("validated"),
                params.m.expect("validated"),
            )?;
            tally.absorb(verdict);
        }
    }

    let report = &tally.report;
    human_table(
        &format!("lemma {id}"),
        &[
            ("source", report.source.clone()),
            ("instances", report.instances.to_string()),
            ("hypotheses met", report.hypotheses_met.to_string()),
            ("conclusion held", report.conclusion_held.to_string()),
            (
                "counterexamples",
                report.counterexample_count.to_string(),
            ),
            ("skipped", report.skipped.to_string()),
            ("seed", ctx.seed.to_string()),
        ],
    );
    for reason in &report.skip_reasons {
        human_note(&format!("  skip reason: {reason}"));
    }
    for verdict in report.counterexamples.iter().take(5) {
        human_note(&format!(
            "  counterexample: {}",
            serde_json::to_string(&verdict.diagnostics).expect("diagnostics serialize")
        ));
    }
    if report.instances == 0 {
        human_note("warning: no instance was checked; the verdict counts say nothing");
    }

    let failed = report.counterexample_count > 0;
    emit_report(ctx, "lemma_scan", report);
    if failed {
        Ok(EXIT_COUNTEREXAMPLE)
    } else {
        Ok(EXIT_OK)
    }
}
