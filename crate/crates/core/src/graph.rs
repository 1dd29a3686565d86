//! Immutable simple undirected graphs with dense bitset adjacency.

use crate::bitset::{words_for, VertexSet};
use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashSet;
use std::fmt;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 1024;

/// A finite simple graph on the vertices `0..order`.
///
/// Row `v` of the adjacency matrix is the neighbourhood `N(v)`. Rows are
/// symmetric and irreflexive; all constructors enforce this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Order(n));
        }
        Ok(Graph {
            rows: vec![VertexSet::empty(n); n],
        })
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects out-of-range endpoints, loops and repeated pairs (in either
    /// orientation), naming the offending pair.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the pairs `u < v` accepted by `adjacent`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Order(n));
        }
        for (v, row) in rows.iter().enumerate() {
            if row.word_len() != words_for(n) {
                return Err(Error::Precondition(format!("row {v} has wrong width")));
            }
            if row.contains(v) {
                return Err(Error::Loop(v));
            }
            for u in row.iter() {
                if u >= n {
                    return Err(Error::EdgeOutOfRange { u: v, v: u, n });
                }
                if !rows[u].contains(v) {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at ({v}, {u})"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// The empty vertex set sized for this graph.
    pub fn no_vertices(&self) -> VertexSet {
        VertexSet::empty(self.order())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.order(), it)
    }

    /// Common neighbourhood of all vertices in `set` (all vertices if `set` is empty).
    pub fn common_neighbors(&self, set: &VertexSet) -> VertexSet {
        let mut acc = self.all_vertices();
        for v in set.iter() {
            acc.intersect_with(&self.rows[v]);
        }
        acc
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.rows[v].intersects(set))
    }

    /// Subgraph induced on `vertices`, relabelled so that `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        Graph::from_fn(vertices.len(), |i, j| {
            self.has_edge(vertices[i], vertices[j])
        })
    }

    /// Deletes the given vertices; the survivors keep their relative order.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.order()).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]` in the result.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Precondition(format!(
                "relabelling of length {} for graph of order {n}",
                perm.len()
            )));
        }
        let mut rows = vec![VertexSet::empty(n); n];
        for u in 0..n {
            for v in self.rows[u].iter() {
                rows[perm[u]].insert(perm[v]);
            }
        }
        Ok(Graph { rows })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeListRepr {
            order: self.order(),
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = EdgeListRepr::deserialize(d)?;
        Graph::from_edge_list(repr.order, &repr.edges).map_err(D::Error::custom)
    }
}
