//! The pattern family grammar and the constructions built from it.
//!
//! Patterns are the six parametric graph families the search and the lemma
//! checkers manipulate. Each knows its order, chromatic number, and
//! chromatic surplus in closed form, and can realize itself as a concrete
//! [`Graph`] with a fixed vertex layout:
//!
//! * `star:n`    K_{1,n}, center = vertex 0
//! * `k2n:n`     K_{2,n}, small side = {0, 1}
//! * `book:n`    B_n = K_2 + empty_n, spine = {0, 1}
//! * `cycle:m`   C_m as 0-1-...-(m-1)-0
//! * `wheel:m`   W_m = K_1 + C_m, hub = vertex 0
//! * `clique:k`  K_k

use crate::error::CheckError;
use crate::graph::{Graph, CONSTRUCTION_ORDER_CAP};
use serde::{Deserialize, Serialize};
use std::error::Error;
use std::fmt;
use std::str::FromStr;

/// One of the six pattern families, with a validated parameter.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PatternSpec {
    Star(u32),
    K2n(u32),
    Book(u32),
    Cycle(u32),
    Wheel(u32),
    Clique(u32),
}

/// Closed-form parameters feeding the chromatic-surplus lower bound:
/// `R(g, h) >= (|V(g)| - 1)(chi(h) - 1) + s(h)` for connected g, where
/// `s(h)` is the smallest color class size achievable in a chi(h)-coloring.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurrParameters {
    pub order: u64,
    pub chromatic_number: u64,
    pub surplus: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternParseError {
    pub input: String,
    pub reason: String,
}

impl fmt::Display for PatternParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad pattern {:?}: {}", self.input, self.reason)
    }
}

impl Error for PatternParseError {}

impl PatternSpec {
    /// Validates the parameter range for a family: cycles and wheels need
    /// a rim of at least 3, everything else a parameter of at least 1.
    /// Realized orders must stay under the construction cap.
    pub fn new(kind: &str, param: u32) -> Result<PatternSpec, PatternParseError> {
        let err = |reason: &str| {
            Err(PatternParseError {
                input: format!("{kind}:{param}"),
                reason: reason.to_string(),
            })
        };
        let spec = match kind {
            "star" => PatternSpec::Star(param),
            "k2n" => PatternSpec::K2n(param),
            "book" => PatternSpec::Book(param),
            "cycle" => PatternSpec::Cycle(param),
            "wheel" => PatternSpec::Wheel(param),
            "clique" => PatternSpec::Clique(param),
            _ => return err("unknown family (want star, k2n, book, cycle, wheel, clique)"),
        };
        match spec {
            PatternSpec::Cycle(m) | PatternSpec::Wheel(m) if m < 3 => {
                return err("cycle and wheel need a parameter of at least 3")
            }
            _ if param < 1 => return err("parameter must be at least 1"),
            _ => {}
        }
        if spec.order() > CONSTRUCTION_ORDER_CAP as u64 {
            return err("realized order exceeds the construction cap");
        }
        Ok(spec)
    }

    /// Number of vertices of the realized pattern.
    pub fn order(&self) -> u64 {
        match *self {
            PatternSpec::Star(n) => n as u64 + 1,
            PatternSpec::K2n(n) => n as u64 + 2,
            PatternSpec::Book(n) => n as u64 + 2,
            PatternSpec::Cycle(m) => m as u64,
            PatternSpec::Wheel(m) => m as u64 + 1,
            PatternSpec::Clique(k) => k as u64,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            PatternSpec::Star(_) => "star",
            PatternSpec::K2n(_) => "k2n",
            PatternSpec::Book(_) => "book",
            PatternSpec::Cycle(_) => "cycle",
            PatternSpec::Wheel(_) => "wheel",
            PatternSpec::Clique(_) => "clique",
        }
    }

    pub fn param(&self) -> u32 {
        match *self {
            PatternSpec::Star(p)
            | PatternSpec::K2n(p)
            | PatternSpec::Book(p)
            | PatternSpec::Cycle(p)
            | PatternSpec::Wheel(p)
            | PatternSpec::Clique(p) => p,
        }
    }

    /// Order, chromatic number, and surplus, all in closed form.
    pub fn burr_parameters(&self) -> BurrParameters {
        let (chi, surplus) = match *self {
            // K_{1,n}: bipartition {center} | leaves.
            PatternSpec::Star(_) => (2, 1),
            // K_{2,n} is connected bipartite, so the 2-coloring is unique:
            // classes of sizes 2 and n.
            PatternSpec::K2n(n) => (2, 2.min(n as u64)),
            // B_n contains a triangle; spine vertices take two colors and
            // every page the third, so a singleton class exists.
            PatternSpec::Book(_) => (3, 1),
            PatternSpec::Cycle(m) if m % 2 == 0 => (2, m as u64 / 2),
            // odd cycle: classes of sizes (k, k, 1) for m = 2k+1.
            PatternSpec::Cycle(_) => (3, 1),
            // hub forms a singleton class over the rim coloring.
            PatternSpec::Wheel(m) if m % 2 == 0 => (3, 1),
            PatternSpec::Wheel(_) => (4, 1),
            PatternSpec::Clique(k) => (k as u64, 1),
        };
        BurrParameters {
            order: self.order(),
            chromatic_number: chi,
            surplus,
        }
    }

    /// Builds the concrete graph with the documented vertex layout.
    pub fn realize(&self) -> Graph {
        match *self {
            PatternSpec::Star(n) => {
                let n = n as usize;
                Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))
            }
            PatternSpec::K2n(n) => {
                let n = n as usize;
                Graph::from_edges(
                    n + 2,
                    (2..n + 2).flat_map(|v| [(0, v), (1, v)]),
                )
            }
            PatternSpec::Book(n) => {
                let n = n as usize;
                let mut edges = vec![(0, 1)];
                edges.extend((2..n + 2).flat_map(|v| [(0, v), (1, v)]));
                Graph::from_edges(n + 2, edges)
            }
            PatternSpec::Cycle(m) => {
                let m = m as usize;
                Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))
            }
            PatternSpec::Wheel(m) => {
                let m = m as usize;
                let rim = Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)));
                join(&Graph::empty(1), &rim).expect("wheel under cap by construction")
            }
            PatternSpec::Clique(k) => Graph::complete(k as usize),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind_name(), self.param())
    }
}

impl FromStr for PatternSpec {
    type Err = PatternParseError;

    /// Grammar: `family:param`, e.g. `k2n:3`, `wheel:5`.
    fn from_str(s: &str) -> Result<PatternSpec, PatternParseError> {
        let bad = |reason: &str| PatternParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (kind, param) = s
            .split_once(':')
            .ok_or_else(|| bad("expected family:param"))?;
        let param: u32 = param
            .parse()
            .map_err(|_| bad("parameter is not a small nonnegative integer"))?;
        PatternSpec::new(kind.trim(), param)
    }
}

impl TryFrom<String> for PatternSpec {
    type Error = PatternParseError;
    fn try_from(s: String) -> Result<PatternSpec, PatternParseError> {
        s.parse()
    }
}

impl From<PatternSpec> for String {
    fn from(p: PatternSpec) -> String {
        p.to_string()
    }
}

// ===================================================================
// Constructions
// ===================================================================

fn cap_check(order: u64, what: &str) -> Result<(), CheckError> {
    if order > CONSTRUCTION_ORDER_CAP as u64 {
        Err(CheckError::Capacity(format!(
            "{what} would have {order} vertices, over the cap {CONSTRUCTION_ORDER_CAP}"
        )))
    } else {
        Ok(())
    }
}

/// Join: disjoint union of `g` and `h` plus all cross edges. Vertices of
/// `h` are shifted up by `g.order()`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, CheckError> {
    cap_check(g.order() as u64 + h.order() as u64, "join")?;
    let shift = g.order();
    let mut out = g.disjoint_union(h);
    for u in 0..shift {
        for v in shift..shift + h.order() {
            out.set_edge(u, v);
        }
    }
    Ok(out)
}

/// `copies` disjoint copies of K_{clique_order}.
pub fn disjoint_cliques(copies: usize, clique_order: usize) -> Result<Graph, CheckError> {
    if copies < 1 || clique_order < 1 {
        return Err(CheckError::Argument(
            "disjoint_cliques needs at least one copy of at least one vertex".into(),
        ));
    }
    cap_check((copies * clique_order) as u64, "clique union")?;
    let mut edges = Vec::new();
    for c in 0..copies {
        let base = c * clique_order;
        for i in 0..clique_order {
            for j in (i + 1)..clique_order {
                edges.push((base + i, base + j));
            }
        }
    }
    Ok(Graph::from_edges(copies * clique_order, edges))
}

/// Complete multipartite graph; parts occupy contiguous vertex blocks in
/// the given order.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, CheckError> {
    if part_sizes.is_empty() || part_sizes.iter().any(|&s| s == 0) {
        return Err(CheckError::Argument(
            "complete_multipartite needs nonempty parts".into(),
        ));
    }
    let total: usize = part_sizes.iter().sum();
    cap_check(total as u64, "complete multipartite graph")?;
    let mut part_of = Vec::with_capacity(total);
    for (p, &s) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, s));
    }
    Ok(Graph::from_fn(total, |u, v| part_of[u] != part_of[v]))
}

/// The chromatic-surplus lower bound
/// `(|V(g)| - 1)(chi(h) - 1) + s(h)` on R(g, h).
///
/// Requires `|V(g)| >= s(h)`; every realized pattern family is connected,
/// which is the other hypothesis of the bound.
pub fn burr_lower_bound(g: &PatternSpec, h: &PatternSpec) -> Result<u64, CheckError> {
    let gp = g.burr_parameters();
    let hp = h.burr_parameters();
    if gp.order < hp.surplus {
        return Err(CheckError::HypothesisNotMet(format!(
            "|V({g})| = {} is below the surplus {} of {h}",
            gp.order, hp.surplus
        )));
    }
    Ok((gp.order - 1) * (hp.chromatic_number - 1) + hp.surplus)
}
