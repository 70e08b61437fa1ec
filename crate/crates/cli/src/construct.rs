//! `construct`: emit verified witness graphs and pattern realizations as
//! graph6 on stdout.

use clap::Subcommand;
use ramsey_core::graph::CONSTRUCTION_ORDER_CAP;
use ramsey_core::graph6::write_graph6;
use ramsey_core::patterns::{complete_multipartite, disjoint_cliques};
use ramsey_core::search::verify_lower_bound_witness;
use ramsey_core::{Graph, PatternSpec};

use crate::report::{human_table, CmdResult, Failure, RunContext, EXIT_OK};

#[derive(Subcommand)]
pub enum ConstructCmd {
    /// Three disjoint cliques K_{n+1}, verified K_{2,n}-free with a
    /// W_m-free complement; witnesses R(K_{2,n}, W_m) >= 3n+4.
    LowerBoundWitness {
        /// Common-neighbor parameter of the forbidden K_{2,n}.
        #[arg(long)]
        n: usize,
        /// Rim length of the wheel the complement must avoid (odd, >= 3).
        #[arg(long)]
        m: usize,
    },
    /// Realize one pattern: star:n, k2n:n, book:n, cycle:m, wheel:m, clique:k.
    Pattern {
        /// Pattern spec in family:param form, e.g. wheel:5.
        spec: String,
    },
    /// Complete tripartite graph on the given part sizes.
    Tripartite {
        size_a: usize,
        size_b: usize,
        size_c: usize,
    },
}

fn print_graph(graph: &Graph) -> Result<String, Failure> {
    let line = write_graph6(graph).map_err(|e| Failure::capacity(e.to_string()))?;
    println!("{line}");
    Ok(line)
}

pub fn run(ctx: &RunContext, cmd: &ConstructCmd) -> CmdResult {
    match cmd {
        ConstructCmd::LowerBoundWitness { n, m } => lower_bound_witness(ctx, *n, *m),
        ConstructCmd::Pattern { spec } => pattern(ctx, spec),
        ConstructCmd::Tripartite {
            size_a,
            size_b,
            size_c,
        } => tripartite(ctx, &[*size_a, *size_b, *size_c]),
    }
}

fn lower_bound_witness(ctx: &RunContext, n: usize, m: usize) -> CmdResult {
    let verdict = verify_lower_bound_witness(n, m)?;
    if !verdict.hypotheses_met || !verdict.conclusion_holds {
        return Err(Failure::counterexample(format!(
            "construction failed verification at n = {n}, m = {m}: {}",
            serde_json::to_string(&verdict.diagnostics).expect("diagnostics serialize")
        )));
    }
    let witness = disjoint_cliques(3, n + 1)?;
    print_graph(&witness)?;
    human_table(
        "lower-bound witness",
        &[
            ("construction", format!("3 disjoint K_{}", n + 1)),
            ("order", format!("{} = 3n+3", witness.order())),
            ("k2n free", format!("yes (no K_{{2,{n}}})")),
            ("complement wheel free", format!("yes (no W_{m})")),
            ("implies", format!("R(K_{{2,{n}}}, W_{m}) >= {}", 3 * n + 4)),
            ("seed", ctx.seed.to_string()),
        ],
    );
    Ok(EXIT_OK)
}

fn pattern(ctx: &RunContext, text: &str) -> CmdResult {
    let spec: PatternSpec = text
        .parse()
        .map_err(|e: ramsey_core::patterns::PatternParseError| Failure::usage(e.to_string()))?;
    if spec.order() > CONSTRUCTION_ORDER_CAP as u64 {
        return Err(Failure::capacity(format!(
            "pattern {spec} has order {}, beyond the construction cap {CONSTRUCTION_ORDER_CAP}",
            spec.order()
        )));
    }
    let graph = spec.realize();
    print_graph(&graph)?;
    human_table(
        "pattern",
        &[
            ("spec", spec.to_string()),
            ("order", graph.order().to_string()),
            ("edges", graph.edge_count().to_string()),
            ("seed", ctx.seed.to_string()),
        ],
    );
    Ok(EXIT_OK)
}

fn tripartite(ctx: &RunContext, sizes: &[usize; 3]) -> CmdResult {
    let graph = complete_multipartite(sizes)?;
    print_graph(&graph)?;
    human_table(
        "complete tripartite",
        &[
            (
                "parts",
                format!("{} + {} + {}", sizes[0], sizes[1], sizes[2]),
            ),
            ("order", graph.order().to_string()),
            ("edges", graph.edge_count().to_string()),
            ("seed", ctx.seed.to_string()),
        ],
    );
    Ok(EXIT_OK)
}
