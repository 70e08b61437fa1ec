//! `ramsey`: compute a small Ramsey number by ascending exhaustive search,
//! or report the best known interval when the scan hits its order cap.

use std::path::PathBuf;

use clap::Args;
use ramsey_core::search::{ramsey_number, RamseyRun, SearchConfig, DEFAULT_ORDER_GUARD};
use ramsey_core::PatternSpec;

use crate::report::{
    emit_report, human_note, human_table, CmdResult, Failure, RunContext, EXIT_CAPACITY,
    EXIT_COUNTEREXAMPLE, EXIT_OK,
};

#[derive(Args)]
pub struct RamseyArgs {
    /// Pattern every graph is tested for, e.g. k2n:2.
    #[arg(long)]
    g: String,
    /// Pattern the complement is tested for, e.g. wheel:3.
    #[arg(long)]
    h: String,
    /// Assert the computed value; a mismatch exits 1.
    #[arg(long)]
    expect: Option<u64>,
    /// Largest order to scan before reporting a bound instead of a value.
    #[arg(long, default_value_t = 12)]
    max_order: usize,
    /// Hard cap on exhaustive scans. Raising it past the default prints a
    /// cost estimate; the class count grows super-exponentially.
    #[arg(long, default_value_t = DEFAULT_ORDER_GUARD)]
    order_guard: usize,
    /// Append-only progress file; an interrupted scan resumes from it.
    #[arg(long)]
    journal: Option<PathBuf>,
}

fn parse_spec(text: &str, flag: &str) -> Result<PatternSpec, Failure> {
    text.parse()
        .map_err(|e: ramsey_core::patterns::PatternParseError| {
            Failure::usage(format!("--{flag}: {e}"))
        })
}

/// Rough log10 of the isomorphism class count at `order`:
/// 2^C(order,2) labeled graphs over order! relabelings.
fn log10_class_estimate(order: usize) -> f64 {
    let pairs = (order * (order.saturating_sub(1)) / 2) as f64;
    let ln_factorial: f64 = (1..=order).map(|k| (k as f64).ln()).sum();
    (pairs * std::f64::consts::LN_2 - ln_factorial) / std::f64::consts::LN_10
}

fn warn_if_guard_raised(order_guard: usize) {
    if order_guard > DEFAULT_ORDER_GUARD {
        human_note(&format!(
            "warning: order guard raised to {order_guard} (default {DEFAULT_ORDER_GUARD}); \
             an exhaustive pass at order {order_guard} faces about 10^{:.0} isomorphism \
             classes and may not finish on desk hardware",
            log10_class_estimate(order_guard)
        ));
    }
}

fn human_run_report(ctx: &RunContext, run: &RamseyRun) {
    let mut rows: Vec<(&str, String)> = vec![
        ("pair", format!("({}, {})", run.g, run.h)),
        (
            "value",
            run.value
                .map_or_else(|| "not settled within cap".to_string(), |v| v.to_string()),
        ),
        ("outcome", run.outcome.clone()),
        ("lower bound", run.lower_bound.to_string()),
        (
            "burr bound",
            run.burr_lower_bound
                .map_or("not applicable".to_string(), |b| b.to_string()),
        ),
        ("max order", run.max_order.to_string()),
        ("jobs", ctx.jobs.to_string()),
        ("seed", ctx.seed.to_string()),
    ];
    for record in &run.per_order {
        let detail = format!(
            "arrows {} ({}, {} graphs, {} ms){}",
            record.arrows,
            record.settled_by,
            record.graphs_examined,
            record.wall_ms,
            record
                .witness
                .as_deref()
                .map_or(String::new(), |w| format!(", witness {w}")),
        );
        rows.push(("order", format!("{:>2}: {detail}", record.order)));
    }
    human_table("ramsey", &rows);
}

pub fn run(ctx: &RunContext, args: &RamseyArgs) -> CmdResult {
    let g = parse_spec(&args.g, "g")?;
    let h = parse_spec(&args.h, "h")?;
    warn_if_guard_raised(args.order_guard);
    let config = SearchConfig {
        max_order: args.max_order,
        jobs: ctx.jobs,
        seed: ctx.seed,
        order_guard: args.order_guard,
        journal: args.journal.clone(),
        ..SearchConfig::default()
    };

    let run = ramsey_number(&g, &h, &config)?;
    human_run_report(ctx, &run);
    emit_report(ctx, "ramsey_run", &run);

    match run.value {
        None => {
            human_note(&format!(
                "bounded result: R({g}, {h}) >= {}; raise --max-order (and --order-guard) \
                 to settle it",
                run.lower_bound
            ));
            Ok(EXIT_CAPACITY)
        }
        Some(value) => match args.expect {
            Some(expected) if expected != value => {
                human_note(&format!(
                    "expectation failed: computed R({g}, {h}) = {value}, expected {expected}"
                ));
                Ok(EXIT_COUNTEREXAMPLE)
            }
            _ => Ok(EXIT_OK),
        },
    }
}
