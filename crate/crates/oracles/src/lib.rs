//! Slow, independent reference implementations used to cross-validate the
//! main crate. Everything here works on plain adjacency matrices built
//! from `(order, edge list)` primitives, deliberately sharing no code with
//! the data structures under test. Correctness over speed: these are
//! exponential-time baselines meant for small inputs inside tests.

/// Builds a symmetric adjacency matrix from an edge list.
///
/// Panics on out-of-range endpoints or self loops, the same contract the
/// fast constructors enforce.
pub fn adjacency(order: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; order]; order];
    for &(u, v) in edges {
        assert!(u < order && v < order, "edge endpoint out of range");
        assert_ne!(u, v, "self loop");
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

// ===================================================================
// Subgraph containment
// ===================================================================

/// Does `host` contain `pattern` as a (not necessarily induced) subgraph?
///
/// Plain backtracking: pattern vertices are mapped one at a time, in
/// descending-degree order, to distinct host vertices, and every pattern
/// edge between mapped vertices must be a host edge.
pub fn contains_subgraph(host: &[Vec<bool>], pattern: &[Vec<bool>]) -> bool {
    let hn = host.len();
    let pn = pattern.len();
    if pn > hn {
        return false;
    }
    if pn == 0 {
        return true;
    }

    // Mapping order: degree descending so the constrained vertices go first.
    let mut order: Vec<usize> = (0..pn).collect();
    let deg = |v: usize| pattern[v].iter().filter(|&&b| b).count();
    order.sort_by_key(|&v| std::cmp::Reverse(deg(v)));

    let mut image = vec![usize::MAX; pn];
    let mut used = vec![false; hn];

    fn place(
        pos: usize,
        order: &[usize],
        host: &[Vec<bool>],
        pattern: &[Vec<bool>],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let pv = order[pos];
        'candidate: for hv in 0..host.len() {
            if used[hv] {
                continue;
            }
            for earlier in &order[..pos] {
                if pattern[pv][*earlier] && !host[hv][image[*earlier]] {
                    continue 'candidate;
                }
            }
            image[pv] = hv;
            used[hv] = true;
            if place(pos + 1, order, host, pattern, image, used) {
                return true;
            }
            used[hv] = false;
            image[pv] = usize::MAX;
        }
        false
    }

    place(0, &order, host, pattern, &mut image, &mut used)
}

// ===================================================================
// Cycle lengths
// ===================================================================

/// Sorted list of all lengths `L` such that `host` contains a cycle on
/// exactly `L` vertices. Works by checking, for every vertex subset, whether
/// the induced subgraph is Hamiltonian-connected into a cycle; exponential
/// in the order, so keep hosts small (about 12 vertices or fewer).
pub fn cycle_lengths(host: &[Vec<bool>]) -> Vec<usize> {
    let n = host.len();
    assert!(n <= 20, "subset enumeration oracle capped at 20 vertices");
    let mut found = vec![false; n + 1];
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || found[size] {
            continue;
        }
        if subset_has_spanning_cycle(host, mask) {
            found[size] = true;
        }
    }
    (3..=n).filter(|&len| found[len]).collect()
}

/// Is there a cycle through exactly the vertices of `mask`?
fn subset_has_spanning_cycle(host: &[Vec<bool>], mask: u32) -> bool {
    let verts: Vec<usize> = (0..host.len()).filter(|&v| mask >> v & 1 == 1).collect();
    let start = verts[0];
    let mut visited = vec![false; host.len()];
    visited[start] = true;
    extend_cycle(host, mask, start, start, 1, verts.len(), &mut visited)
}

fn extend_cycle(
    host: &[Vec<bool>],
    mask: u32,
    start: usize,
    last: usize,
    placed: usize,
    total: usize,
    visited: &mut [bool],
) -> bool {
    if placed == total {
        return host[last][start];
    }
    for next in 0..host.len() {
        if mask >> next & 1 == 1 && !visited[next] && host[last][next] {
            visited[next] = true;
            if extend_cycle(host, mask, start, next, placed + 1, total, visited) {
                visited[next] = false;
                return true;
            }
            visited[next] = false;
        }
    }
    false
}

// ===================================================================
// Chromatic number
// ===================================================================

/// Exact chromatic number by backtracking over proper colorings, trying
/// one extra color at a time. Vertex `i` may only introduce color `i`,
/// which breaks color-permutation symmetry.
pub fn chromatic_number(host: &[Vec<bool>]) -> usize {
    let n = host.len();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![usize::MAX; n];
        if color_from(host, 0, k, &mut colors) {
            return k;
        }
    }
    n
}

fn color_from(host: &[Vec<bool>], v: usize, k: usize, colors: &mut [usize]) -> bool {
    if v == host.len() {
        return true;
    }
    let ceiling = k.min(v + 1);
    'next_color: for c in 0..ceiling {
        for u in 0..v {
            if host[v][u] && colors[u] == c {
                continue 'next_color;
            }
        }
        colors[v] = c;
        if color_from(host, v + 1, k, colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

// ===================================================================
// Isomorphism-class counting
// ===================================================================

/// Number of isomorphism classes of simple graphs on `order` labeled
/// vertices, computed the expensive way: enumerate all 2^(order choose 2)
/// labeled graphs as edge bitmasks and sweep out whole permutation orbits.
/// Memory is one bit per labeled graph, so `order` is capped at 7.
pub fn count_graph_classes(order: usize) -> u64 {
    count_graph_classes_where(order, |_| true)
}

/// Number of isomorphism classes on `order` vertices whose members satisfy
/// `keep`, by the same orbit sweep as [`count_graph_classes`]. The predicate
/// must be isomorphism-invariant: each class is tested once, on the first
/// representative the sweep reaches.
pub fn count_graph_classes_where(order: usize, keep: impl Fn(&[Vec<bool>]) -> bool) -> u64 {
    assert!(order >= 1 && order <= 7, "orbit sweep capped at order 7");
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|i| ((i + 1)..order).map(move |j| (i, j)))
        .collect();
    let bits = pairs.len();
    let mut pair_index = vec![vec![usize::MAX; order]; order];
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        pair_index[i][j] = idx;
        pair_index[j][i] = idx;
    }

    let perms = permutations(order);
    let total: usize = 1usize << bits;
    let mut seen = vec![false; total];
    let mut classes = 0u64;

    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        let mut adj = vec![vec![false; order]; order];
        for (idx, &(i, j)) in pairs.iter().enumerate() {
            if mask >> idx & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if keep(&adj) {
            classes += 1;
        }
        // Sweep the whole orbit even when the class is rejected, so later
        // members of a rejected class are never re-tested or re-counted.
        for perm in &perms {
            let mut image = 0usize;
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                if mask >> idx & 1 == 1 {
                    image |= 1 << pair_index[perm[i]][perm[j]];
                }
            }
            seen[image] = true;
        }
    }
    classes
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut chosen = vec![false; n];
    fn rec(
        pos: usize,
        n: usize,
        current: &mut Vec<usize>,
        chosen: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !chosen[v] {
                chosen[v] = true;
                current[pos] = v;
                rec(pos + 1, n, current, chosen, out);
                chosen[v] = false;
            }
        }
    }
    rec(0, n, &mut current, &mut chosen, &mut out);
    out
}

/// Are the two graphs isomorphic? Brute force over all vertex bijections.
pub fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    assert!(n <= 9, "permutation check capped at order 9");
    permutations(n).iter().any(|perm| {
        (0..n).all(|i| (0..n).all(|j| a[i][j] == b[perm[i]][perm[j]]))
    })
}

// ===================================================================
// Tests
// ===================================================================
