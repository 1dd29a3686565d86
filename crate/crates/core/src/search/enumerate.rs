//! Triangle-free graphs up to isomorphism by canonical augmentation.
//!
//! A child is a parent plus one vertex joined to an independent set. The child
//! is kept when the added vertex and the vertex labelled last by the
//! canonical labelling lie in the same root colour cell and their deletions
//! give isomorphic graphs. Every isomorphism class is reached through its
//! canonical deletion; leftover duplicates are removed by canonical form.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{adjacency_key, canonical_form, canonical_labeling, equitable_partition};
use crate::properties::is_maximal_triangle_free;
use rayon::prelude::*;
use std::collections::HashSet;

/// Default largest order accepted without an override.
pub const GUARD_ORDER: usize = 12;

fn guard(n: usize, allow_large: bool) -> Result<()> {
    if n > GUARD_ORDER && !allow_large {
        return Err(Error::ResourceGuard(format!(
            "order {n} exceeds {GUARD_ORDER}; pass the override to proceed"
        )));
    }
    Ok(())
}

/// All independent sets of `g`, as sorted vertex lists.
fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn go(g: &Graph, v: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v == g.order() {
            out.push(cur.clone());
            return;
        }
        go(g, v + 1, cur, out);
        if cur.iter().all(|&u| !g.has_edge(u, v)) {
            cur.push(v);
            go(g, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut Vec::new(), &mut out);
    out
}

/// Maximal independent sets of `g`.
pub fn maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    independent_sets(g)
        .into_iter()
        .filter(|s| {
            let set = g.vertex_set(s.iter().copied());
            (0..g.order()).all(|v| set.contains(v) || g.neighbors(v).intersects(&set))
        })
        .collect()
}

fn extend(g: &Graph, s: &[usize]) -> Graph {
    let n = g.order() + 1;
    Graph::from_fn(n, |u, v| {
        if v == n - 1 {
            s.contains(&u)
        } else {
            g.has_edge(u, v)
        }
    })
    .expect("order in range")
}

/// Canonical children of `parent`, deduplicated, using only the given
/// neighbourhoods for the new vertex.
fn children(parent: &Graph, sets: &[Vec<usize>], keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in sets {
        let h = extend(parent, s);
        if !keep(&h) {
            continue;
        }
        let v = h.order() - 1;
        let lab = canonical_labeling(&h);
        let w = lab
            .as_slice()
            .iter()
            .position(|&l| l == v)
            .expect("labelling is a bijection");
        if w != v {
            let cells = equitable_partition(&h);
            if cells[v] != cells[w] {
                continue;
            }
            let hv = h.remove_vertices(&[v]).expect("order at least 2");
            let hw = h.remove_vertices(&[w]).expect("order at least 2");
            if canonical_form(&hv).0 != canonical_form(&hw).0 {
                continue;
            }
        }
        let canon = h
            .relabel(lab.as_slice())
            .expect("labelling has graph order");
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    }
    out
}

fn merge(parts: Vec<Vec<Graph>>) -> Vec<Graph> {
    let mut all: Vec<(Vec<u64>, Graph)> = parts
        .into_iter()
        .flatten()
        .map(|g| (adjacency_key(&g), g))
        .collect();
    all.sort_by(|a, b| a.0.cmp(&b.0));
    all.dedup_by(|a, b| a.0 == b.0);
    all.into_iter().map(|(_, g)| g).collect()
}

/// Caches the full triangle-free catalogue level by level.
#[derive(Debug, Default)]
pub struct Enumerator {
    levels: Vec<Vec<Graph>>,
    allow_large: bool,
}

impl Enumerator {
    pub fn new() -> Enumerator {
        Enumerator::default()
    }

    /// Lifts the order guard.
    pub fn allow_large(mut self, yes: bool) -> Enumerator {
        self.allow_large = yes;
        self
    }

    /// All triangle-free graphs on `n` vertices, canonical and sorted by
    /// adjacency key.
    pub fn triangle_free(&mut self, n: usize) -> Result<&[Graph]> {
        if n == 0 {
            return Err(Error::Order(0));
        }
        guard(n, self.allow_large)?;
        if self.levels.is_empty() {
            self.levels.push(vec![Graph::empty(1)?]);
        }
        while self.levels.len() < n {
            let parents = self.levels.last().expect("non-empty");
            let parts: Vec<Vec<Graph>> = parents
                .par_iter()
                .map(|p| children(p, &independent_sets(p), |_| true))
                .collect();
            self.levels.push(merge(parts));
        }
        Ok(&self.levels[n - 1])
    }

    /// All maximal triangle-free graphs on `n ≥ 2` vertices, canonical and
    /// sorted by adjacency key.
    pub fn maximal_triangle_free(&mut self, n: usize) -> Result<Vec<Graph>> {
        if n < 2 {
            return Err(Error::Precondition(
                "maximal triangle-free enumeration needs n ≥ 2".into(),
            ));
        }
        guard(n, self.allow_large)?;
        // The new vertex of a maximal graph has a maximal independent neighbourhood.
        let parents = self.triangle_free(n - 1)?;
        let parts: Vec<Vec<Graph>> = parents
            .par_iter()
            .map(|p| children(p, &maximal_independent_sets(p), is_maximal_triangle_free))
            .collect();
        Ok(merge(parts))
    }
}

pub fn enumerate_triangle_free(n: usize) -> Result<Vec<Graph>> {
    Ok(Enumerator::new().triangle_free(n)?.to_vec())
}

pub fn enumerate_maximal_tf(n: usize) -> Result<Vec<Graph>> {
    Enumerator::new().maximal_triangle_free(n)
}

/// Labelled brute force: every graph on `n ≤ 7` vertices passing `keep`, one
/// canonical representative per isomorphism class, sorted like the
/// enumerator.
pub fn brute_force_catalogue(n: usize, keep: impl Fn(&Graph) -> bool + Sync) -> Result<Vec<Graph>> {
    if !(1..=7).contains(&n) {
        return Err(Error::Precondition(
            "brute force oracle supports 1 ≤ n ≤ 7".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    let parts: Vec<Vec<Graph>> = (0..total)
        .into_par_iter()
        .fold(HashSet::new, |mut acc, mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).expect("valid pairs");
            if keep(&g) {
                acc.insert(canonical_form(&g).0);
            }
            acc
        })
        .map(|s| s.into_iter().collect())
        .collect();
    Ok(merge(parts))
}
