//! Isomorph-free exhaustive generation by canonical augmentation.
//!
//! Graphs grow one vertex at a time. A parent on k vertices is extended by
//! a new vertex k attached to a subset S of the parent, where S ranges over
//! orbit representatives of subsets under the parent's automorphism group.
//! The child survives only if the new vertex lies in the same
//! automorphism orbit as the child's canonical deletion vertex (the vertex
//! occupying the last canonical position). Together the two rules yield
//! every isomorphism class exactly once, with memory linear in the depth.
//!
//! A hereditary keep-predicate can prune the tree: when a property is
//! closed under taking induced subgraphs (freeness of some pattern, a
//! degree bound), every class with the property has its whole canonical
//! ancestry inside the property, so pruning loses nothing.

use crate::error::CheckError;
use crate::graph::Graph;
use crate::search::canon::canonize_rows;

/// Default largest order accepted without an explicit override.
pub const DEFAULT_ORDER_GUARD: usize = 12;

/// Hard ceiling of the search kernel (single-word adjacency rows).
pub const KERNEL_ORDER_CAP: usize = 64;

/// Streams one representative per isomorphism class of simple graphs on
/// `order` vertices, in a deterministic order, and returns how many there
/// were. Guarded at [`DEFAULT_ORDER_GUARD`]; see
/// [`generate_nonisomorphic_with_guard`] to override.
pub fn generate_nonisomorphic<F>(order: usize, consumer: F) -> Result<u64, CheckError>
where
    F: FnMut(&Graph),
{
    generate_nonisomorphic_with_guard(order, DEFAULT_ORDER_GUARD, consumer)
}

/// Same as [`generate_nonisomorphic`] with an explicit guard. The guard
/// itself is capped by the search kernel's 64-vertex representation.
pub fn generate_nonisomorphic_with_guard<F>(
    order: usize,
    guard: usize,
    mut consumer: F,
) -> Result<u64, CheckError>
where
    F: FnMut(&Graph),
{
    check_guard(order, guard)?;
    let mut count = 0u64;
    enumerate_pruned(order, &|_| true, &mut |rows| {
        count += 1;
        consumer(&Graph::from_bitrows64(rows));
    });
    Ok(count)
}

pub(crate) fn check_guard(order: usize, guard: usize) -> Result<(), CheckError> {
    if order < 1 {
        return Err(CheckError::Argument(
            "generation needs at least one vertex".into(),
        ));
    }
    let guard = guard.min(KERNEL_ORDER_CAP);
    if order > guard {
        return Err(CheckError::Capacity(format!(
            "exhaustive generation on {order} vertices exceeds the guard of {guard}"
        )));
    }
    Ok(())
}

// ===================================================================
// Serial engine
// ===================================================================

/// Depth-first canonical augmentation. `keep` must be hereditary; classes
/// failing it are neither visited nor extended. `visit` sees the adjacency
/// rows of every surviving class at exactly `target` vertices.
pub(crate) fn enumerate_pruned<K, V>(target: usize, keep: &K, visit: &mut V)
where
    K: Fn(&[u64]) -> bool,
    V: FnMut(&[u64]),
{
    assert!(
        (1..=KERNEL_ORDER_CAP).contains(&target),
        "target order outside the search kernel"
    );
    let seed = [0u64];
    if !keep(&seed) {
        return;
    }
    if target == 1 {
        visit(&seed);
        return;
    }
    let mut rows = seed.to_vec();
    descend(&mut rows, target, keep, visit);
}

fn descend<K, V>(rows: &mut Vec<u64>, target: usize, keep: &K, visit: &mut V)
where
    K: Fn(&[u64]) -> bool,
    V: FnMut(&[u64]),
{
    for child in accepted_children(rows) {
        if !keep(&child) {
            continue;
        }
        if child.len() == target {
            visit(&child);
        } else {
            let mut child = child;
            descend(&mut child, target, keep, visit);
        }
    }
}

/// All children of a parent that pass the canonical deletion test, in
/// ascending order of the attachment subset representative.
fn accepted_children(rows: &[u64]) -> Vec<Vec<u64>> {
    let k = rows.len();
    let parent_form = canonize_rows(rows);
    let mut out = Vec::new();
    for subset in subset_orbit_reps(k, &parent_form.generators) {
        let mut child: Vec<u64> = rows.to_vec();
        for v in 0..k {
            if subset >> v & 1 == 1 {
                child[v] |= 1u64 << k;
            }
        }
        child.push(subset);
        let form = canonize_rows(&child);
        let deletion_vertex = form.labeling[k];
        if form.orbit_of[deletion_vertex] == form.orbit_of[k] {
            out.push(child);
        }
    }
    out
}

/// One representative per orbit of vertex subsets (as bitmasks over
/// `0..k`) under the group generated by `generators`, ascending.
fn subset_orbit_reps(k: usize, generators: &[Vec<usize>]) -> Vec<u64> {
    let total: usize = 1 << k;
    if generators.is_empty() {
        return (0..total as u64).collect();
    }
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    let mut stack: Vec<u64> = Vec::new();
    for mask in 0..total as u64 {
        if seen[mask as usize] {
            continue;
        }
        reps.push(mask);
        seen[mask as usize] = true;
        stack.push(mask);
        while let Some(m) = stack.pop() {
            for gen in generators {
                let mut image = 0u64;
                for v in 0..k {
                    if m >> v & 1 == 1 {
                        image |= 1 << gen[v];
                    }
                }
                if !seen[image as usize] {
                    seen[image as usize] = true;
                    stack.push(image);
                }
            }
        }
    }
    reps
}

// ===================================================================
// Parallel engine
// ===================================================================

/// A unit of parallel work: one surviving class at the split level,
/// identified by its graph6 line (the as-built representative, which is
/// deterministic).
#[derive(Clone, Debug)]
pub(crate) struct SubtreeRoot {
    pub id: String,
    pub rows: Vec<u64>,
}

/// Collects the surviving classes at `level` to serve as parallel
/// subtree roots. `level` must be at most the target order.
pub(crate) fn collect_roots<K>(level: usize, keep: &K) -> Vec<SubtreeRoot>
where
    K: Fn(&[u64]) -> bool,
{
    let mut roots = Vec::new();
    enumerate_pruned(level, keep, &mut |rows| {
        let id = crate::graph6::write_graph6(&Graph::from_bitrows64(rows))
            .expect("kernel orders are always encodable");
        roots.push(SubtreeRoot {
            id,
            rows: rows.to_vec(),
        });
    });
    roots
}

/// Continues the enumeration below one root, visiting surviving classes
/// at `target` vertices.
pub(crate) fn enumerate_subtree<K, V>(root: &SubtreeRoot, target: usize, keep: &K, visit: &mut V)
where
    K: Fn(&[u64]) -> bool,
    V: FnMut(&[u64]),
{
    assert!(root.rows.len() <= target);
    if root.rows.len() == target {
        visit(&root.rows);
        return;
    }
    let mut rows = root.rows.clone();
    descend(&mut rows, target, keep, visit);
}

/// Picks the tree level used to split work across threads: deep enough to
/// offer many roots, shallow enough that collecting them is cheap.
pub(crate) fn split_level(target: usize) -> usize {
    target.saturating_sub(3).clamp(1, 7)
}

// ===================================================================
// Tests
// ===================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::find_clique;
    use crate::search::canon::canonical_graph6;
    use std::collections::BTreeSet;

    const KNOWN_CLASS_COUNTS: [u64; 7] = [1, 2, 4, 11, 34, 156, 1044];

    #[test]
    fn counts_match_the_known_sequence() {
        for (idx, &expect) in KNOWN_CLASS_COUNTS.iter().enumerate() {
            let order = idx + 1;
            let count = generate_nonisomorphic(order, |_| {}).unwrap();
            assert_eq!(count, expect, "order {order}");
        }
    }

    #[test]
    fn streamed_classes_are_pairwise_nonisomorphic() {
        for order in 1..=6usize {
            let mut canon_lines = BTreeSet::new();
            let count = generate_nonisomorphic(order, |g| {
                assert_eq!(g.order(), order);
                canon_lines.insert(canonical_graph6(g).unwrap());
            })
            .unwrap();
            assert_eq!(canon_lines.len() as u64, count, "order {order}");
        }
    }

    #[test]
    fn guard_refuses_oversized_orders() {
        assert!(matches!(
            generate_nonisomorphic(13, |_| {}),
            Err(CheckError::Capacity(_))
        ));
        // raising the guard admits the order (without running the search)
        assert!(check_guard(13, 13).is_ok());
        // but never past the kernel's row width
        assert!(matches!(check_guard(65, 100), Err(CheckError::Capacity(_))));
        assert!(matches!(
            generate_nonisomorphic(0, |_| {}),
            Err(CheckError::Argument(_))
        ));
    }

    #[test]
    fn hereditary_pruning_equals_filtering() {
        let triangle_free = |rows: &[u64]| {
            !find_clique(&Graph::from_bitrows64(rows), 3).found
        };
        // counts for triangle-free classes, orders 1..=7
        let expect_by_filter: Vec<u64> = (1..=7)
            .map(|order| {
                let mut kept = 0u64;
                generate_nonisomorphic(order, |g| {
                    if !find_clique(g, 3).found {
                        kept += 1;
                    }
                })
                .unwrap();
                kept
            })
            .collect();
        for (idx, &expect) in expect_by_filter.iter().enumerate() {
            let order = idx + 1;
            let mut pruned = 0u64;
            enumerate_pruned(order, &triangle_free, &mut |_| pruned += 1);
            assert_eq!(pruned, expect, "order {order}");
        }
        assert_eq!(expect_by_filter, vec![1, 2, 3, 7, 14, 38, 107]);
    }

    #[test]
    fn subtree_roots_cover_the_space_exactly() {
        let keep = |_: &[u64]| true;
        let target = 7usize;
        let level = split_level(target);
        assert_eq!(level, 4);

        let mut serial: Vec<String> = Vec::new();
        enumerate_pruned(target, &keep, &mut |rows| {
            serial.push(canonical_graph6(&Graph::from_bitrows64(rows)).unwrap());
        });

        let mut via_roots: Vec<String> = Vec::new();
        for root in collect_roots(level, &keep) {
            enumerate_subtree(&root, target, &keep, &mut |rows| {
                via_roots.push(canonical_graph6(&Graph::from_bitrows64(rows)).unwrap());
            });
        }

        assert_eq!(serial.len(), 1044);
        let serial_sorted: BTreeSet<_> = serial.into_iter().collect();
        let roots_sorted: BTreeSet<_> = via_roots.into_iter().collect();
        assert_eq!(serial_sorted, roots_sorted);
    }

    #[test]
    fn naive_orbit_dedup_agrees_at_small_orders() {
        for order in 1..=6usize {
            let fast = generate_nonisomorphic(order, |_| {}).unwrap();
            assert_eq!(fast, ramsey_oracles::count_graph_classes(order), "order {order}");
        }
    }

    #[test]
    fn subset_reps_respect_the_group() {
        // star K_{1,3} centered at 0: automorphisms permute {1,2,3}
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let form = canonize_rows(&(0..4).map(|v| g.row64(v)).collect::<Vec<_>>());
        let reps = subset_orbit_reps(4, &form.generators);
        // orbits of subsets: choose i of the leaves (0..=3) and the center
        // in or out: 4 * 2 = 8 orbits
        assert_eq!(reps.len(), 8);
    }
}
