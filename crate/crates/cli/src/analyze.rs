//! `analyze`: parse graph6 input and report structural measurements as a
//! JSON envelope: degrees, vertex connectivity, a bipartiteness certificate,
//! the cycle spectrum when the order permits, and degree-threshold
//! decompositions at the two fractions the lemma checkers use.

use std::io::Read;

use clap::Args;
use ramsey_core::detect::{cycle_spectrum, CycleSpectrum, SPECTRUM_ORDER_CAP};
use ramsey_core::graph6::{parse_graph6_lines, write_graph6};
use ramsey_core::lemmas::{dense_null_decomposition, DecompositionReport};
use ramsey_core::structure::{bipartiteness, connectivity, Bipartiteness};
use ramsey_core::{Graph, Ratio};
use serde::Serialize;

use crate::report::{emit_report, human_table, CmdResult, Failure, RunContext, EXIT_OK};

#[derive(Args)]
pub struct AnalyzeArgs {
    /// Path to a graph6 file, or - for stdin. Blank lines and # comments
    /// are skipped; every remaining line must parse.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Serialize)]
struct GraphAnalysis {
    /// Input line number the graph came from.
    line: usize,
    graph6: String,
    order: usize,
    edges: usize,
    min_degree: usize,
    max_degree: usize,
    degree_sequence: Vec<usize>,
    /// Vertex connectivity; absent below order 2, where it is undefined.
    connectivity: Option<usize>,
    bipartiteness: Bipartiteness,
    /// Absent beyond the spectrum order cap; see `cycle_spectrum_note`.
    cycle_spectrum: Option<CycleSpectrum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_spectrum_note: Option<String>,
    /// Degree split P = {x : deg(x) < |V|/10 + 1} and its complement.
    dense_null_tenth: DecompositionReport,
    /// The same split at threshold fraction 1/6.
    dense_null_sixth: DecompositionReport,
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("reading {path}: {e}")))
    }
}

fn analyze_graph(line: usize, graph: &Graph) -> Result<GraphAnalysis, Failure> {
    let order = graph.order();
    let connectivity = match connectivity(graph) {
        Ok(k) => Some(k),
        Err(_) => None,
    };
    let (spectrum, spectrum_note) = if order <= SPECTRUM_ORDER_CAP {
        (Some(cycle_spectrum(graph)?), None)
    } else {
        (
            None,
            Some(format!(
                "order {order} exceeds the cycle spectrum cap {SPECTRUM_ORDER_CAP}"
            )),
        )
    };
    Ok(GraphAnalysis {
        line,
        graph6: write_graph6(graph).map_err(|e| Failure::capacity(e.to_string()))?,
        order,
        edges: graph.edge_count(),
        min_degree: graph.min_degree(),
        max_degree: graph.max_degree(),
        degree_sequence: graph.degree_sequence(),
        connectivity,
        bipartiteness: bipartiteness(graph),
        cycle_spectrum: spectrum,
        cycle_spectrum_note: spectrum_note,
        dense_null_tenth: dense_null_decomposition(graph, Ratio::new(1, 10))?,
        dense_null_sixth: dense_null_decomposition(graph, Ratio::new(1, 6))?,
    })
}

fn spectrum_summary(analysis: &GraphAnalysis) -> String {
    match &analysis.cycle_spectrum {
        Some(s) => format!(
            "girth {}, longest even {}, longest odd {}, lengths {:?}",
            s.girth.map_or("-".to_string(), |g| g.to_string()),
            s.ec,
            s.oc,
            s.lengths
        ),
        None => "beyond cap".to_string(),
    }
}

pub fn run(ctx: &RunContext, args: &AnalyzeArgs) -> CmdResult {
    let text = read_input(&args.input)?;
    let mut analyses = Vec::new();
    for (line, parsed) in parse_graph6_lines(&text) {
        let graph = parsed.map_err(|e| Failure::usage(format!("line {line}: {e}")))?;
        analyses.push(analyze_graph(line, &graph)?);
    }
    if analyses.is_empty() {
        return Err(Failure::usage(format!(
            "no graph6 records in {}",
            if args.input == "-" { "stdin" } else { &args.input }
        )));
    }

    for analysis in &analyses {
        human_table(
            &format!("graph at line {} ({})", analysis.line, analysis.graph6),
            &[
                ("order", analysis.order.to_string()),
                ("edges", analysis.edges.to_string()),
                (
                    "degrees",
                    format!(
                        "min {}, max {}",
                        analysis.min_degree, analysis.max_degree
                    ),
                ),
                (
                    "connectivity",
                    analysis
                        .connectivity
                        .map_or("undefined below order 2".to_string(), |k| k.to_string()),
                ),
                (
                    "bipartite",
                    match &analysis.bipartiteness {
                        Bipartiteness::Bipartite { sides } => {
                            format!("yes ({} + {})", sides[0].len(), sides[1].len())
                        }
                        Bipartiteness::OddCycle { cycle } => {
                            format!("no (odd cycle of length {})", cycle.len())
                        }
                    },
                ),
                ("cycle spectrum", spectrum_summary(analysis)),
                (
                    "null set at 1/10",
                    format!("{:?}", analysis.dense_null_tenth.null_set.to_vec()),
                ),
                (
                    "null set at 1/6",
                    format!("{:?}", analysis.dense_null_sixth.null_set.to_vec()),
                ),
            ],
        );
    }
    human_table(
        "analyze",
        &[
            ("graphs", analyses.len().to_string()),
            ("seed", ctx.seed.to_string()),
        ],
    );
    emit_report(ctx, "analysis", &analyses);
    Ok(EXIT_OK)
}
