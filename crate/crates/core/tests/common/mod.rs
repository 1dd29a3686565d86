//! Shared generators and brute-force oracles for the integration tests. The
//! oracles only use `Graph::has_edge` and plain loops.

#![allow(dead_code)]

use proptest::prelude::*;
use tfgraph::Graph;

/// Triangle-free graph from a candidate edge mask: edges are added in order
/// and skipped when they would close a triangle.
pub fn tf_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            let take = mask.get(k).copied().unwrap_or(false);
            k += 1;
            if take && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    Graph::from_fn(n, |u, v| adj[u][v]).unwrap()
}

pub fn tf_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |m| tf_from_mask(n, &m))
    })
}

/// Greedily completes a triangle-free graph to a maximal one.
pub fn saturate(g: &Graph) -> Graph {
    let n = g.order();
    let mut adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    Graph::from_fn(n, |u, v| adj[u][v]).unwrap()
}

pub fn brute_triangle_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (b + 1..n).all(|c| !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
        })
    })
}

pub fn brute_maximal_tf(g: &Graph) -> bool {
    let n = g.order();
    brute_triangle_free(g)
        && (0..n).all(|u| {
            (u + 1..n)
                .all(|v| g.has_edge(u, v) || (0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w)))
        })
}

pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 30);
    let mut best = 0;
    fn go(g: &Graph, v: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if chosen.len() + (g.order() - v) <= *best {
            return;
        }
        if v == g.order() {
            *best = chosen.len();
            return;
        }
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
            go(g, v + 1, chosen, best);
            chosen.pop();
        }
        go(g, v + 1, chosen, best);
    }
    go(g, 0, &mut Vec::new(), &mut best);
    best
}

/// `w` has total `3m` and puts weight at most `m` on every neighbourhood.
pub fn is_d_witness(g: &Graph, w: &[usize], m: usize) -> bool {
    let n = g.order();
    w.len() == n
        && w.iter().sum::<usize>() == 3 * m
        && (0..n).all(|y| {
            (0..n)
                .filter(|&v| g.has_edge(y, v))
                .map(|v| w[v])
                .sum::<usize>()
                <= m
        })
}

/// `w` has total `3m`, every independent subset of the support weighs at
/// most `m + 1`, and those weighing `m + 1` have no common neighbour.
pub fn is_q_witness(g: &Graph, w: &[usize], m: usize) -> bool {
    let n = g.order();
    if w.len() != n || w.iter().sum::<usize>() != 3 * m {
        return false;
    }
    let supp: Vec<usize> = (0..n).filter(|&v| w[v] > 0).collect();
    assert!(supp.len() <= 20);
    for mask in 1u32..(1 << supp.len()) {
        let set: Vec<usize> = (0..supp.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| supp[i])
            .collect();
        if set.iter().any(|&a| set.iter().any(|&b| g.has_edge(a, b))) {
            continue;
        }
        let weight: usize = set.iter().map(|&v| w[v]).sum();
        if weight >= m + 2 {
            return false;
        }
        if weight == m + 1 && (0..n).any(|y| set.iter().all(|&v| g.has_edge(y, v))) {
            return false;
        }
    }
    true
}

/// Every weighting of total `3m` on `n` vertices.
pub fn weightings(n: usize, total: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, total, &mut Vec::new(), &mut out);
    out
}

/// First failing level of D up to `k` by exhaustive weighting search.
pub fn brute_d_level(g: &Graph, k: usize) -> Option<usize> {
    (1..=k).find(|&m| {
        weightings(g.order(), 3 * m)
            .iter()
            .any(|w| is_d_witness(g, w, m))
    })
}

pub fn brute_q_level(g: &Graph, k: usize) -> Option<usize> {
    (1..=k).find(|&m| {
        weightings(g.order(), 3 * m)
            .iter()
            .any(|w| is_q_witness(g, w, m))
    })
}

/// Whether some 6 vertices induce a hexagon.
pub fn brute_induced_c6(g: &Graph) -> bool {
    let n = g.order();
    let mut found = false;
    fn go(g: &Graph, path: &mut Vec<usize>, found: &mut bool) {
        if *found {
            return;
        }
        let last = *path.last().unwrap();
        if path.len() == 6 {
            *found = g.has_edge(last, path[0]);
            return;
        }
        for v in 0..g.order() {
            // The first vertex is the least; consecutive vertices adjacent,
            // no chords except the closing edge.
            if v <= path[0] || path.contains(&v) || !g.has_edge(last, v) {
                continue;
            }
            let chords = path[..path.len() - 1]
                .iter()
                .enumerate()
                .any(|(i, &u)| g.has_edge(u, v) && !(i == 0 && path.len() == 5));
            if !chords {
                path.push(v);
                go(g, path, found);
                path.pop();
            }
        }
    }
    for s in 0..n {
        go(g, &mut vec![s], &mut found);
    }
    found
}

pub fn brute_twin_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| (0..n).any(|w| g.has_edge(u, w) != g.has_edge(v, w))))
}

/// Relabels `g` by `perm` (vertex `v` becomes `perm[v]`).
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    Graph::from_fn(n, |a, b| g.has_edge(inv[a], inv[b])).unwrap()
}
