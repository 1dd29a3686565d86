//! Induced subgraph search.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// An injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    /// `map[i]` is the host image of pattern vertex `i`.
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn pattern_order(&self) -> usize {
        self.map.len()
    }

    pub fn image(&self, host: &Graph) -> VertexSet {
        host.vertex_set(self.map.iter().copied())
    }

    /// Pattern vertex mapped to host vertex `v`, if any.
    pub fn preimage(&self, v: usize) -> Option<usize> {
        self.map.iter().position(|&x| x == v)
    }

    /// Independent re-check that the map is injective and induced.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                self.map[i] != self.map[j]
                    && pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j])
            })
        })
    }
}

/// Static search order: the highest-degree vertex first, then repeatedly the
/// vertex with most already-placed neighbours (ties by degree, then index).
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.order();
    let mut placed = vec![false; k];
    let mut order = Vec::with_capacity(k);
    let mut links = vec![0usize; k];
    for _ in 0..k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], pattern.degree(a))
                    .cmp(&(links[b], pattern.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for u in pattern.neighbors(next).iter() {
            links[u] += 1;
        }
    }
    order
}

/// Iterator over all embeddings of a pattern, in lexicographic order of the
/// host images along the static search order. Induced by default; the
/// subgraph variant only requires pattern edges to land on host edges.
pub struct InducedEmbeddings<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    induced: bool,
    order: Vec<usize>,
    stack: Vec<(Vec<usize>, usize)>,
    assign: Vec<usize>,
}

impl<'a> InducedEmbeddings<'a> {
    pub fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        Self::with_mode(host, pattern, true)
    }

    fn with_mode(host: &'a Graph, pattern: &'a Graph, induced: bool) -> Self {
        let order = search_order(pattern);
        let mut it = InducedEmbeddings {
            host,
            pattern,
            induced,
            order,
            stack: Vec::new(),
            assign: Vec::new(),
        };
        if pattern.order() <= host.order() {
            let first = it.candidates();
            it.stack.push((first, 0));
        }
        it
    }

    /// Host candidates for the next position given the current assignment.
    fn candidates(&self) -> Vec<usize> {
        let pos = self.assign.len();
        let p = self.order[pos];
        let mut set = self.host.all_vertices();
        for (j, &hv) in self.assign.iter().enumerate() {
            if self.pattern.has_edge(self.order[j], p) {
                set.intersect_with(self.host.neighbors(hv));
            } else {
                if self.induced {
                    set.difference_with(self.host.neighbors(hv));
                }
                set.remove(hv);
            }
        }
        let need = self.pattern.degree(p);
        set.iter()
            .filter(|&v| self.host.degree(v) >= need)
            .collect()
    }
}

impl Iterator for InducedEmbeddings<'_> {
    type Item = Embedding;

    fn next(&mut self) -> Option<Embedding> {
        let k = self.pattern.order();
        loop {
            if self.assign.len() == self.stack.len() {
                self.assign.pop();
            }
            let top = self.stack.last_mut()?;
            if top.1 >= top.0.len() {
                self.stack.pop();
                continue;
            }
            let c = top.0[top.1];
            top.1 += 1;
            self.assign.push(c);
            if self.assign.len() == k {
                let mut map = vec![0; k];
                for (j, &hv) in self.assign.iter().enumerate() {
                    map[self.order[j]] = hv;
                }
                return Some(Embedding { map });
            }
            let next = self.candidates();
            self.stack.push((next, 0));
        }
    }
}

/// First induced embedding of `pattern` in `host`, if any.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    InducedEmbeddings::new(host, pattern).next()
}

pub fn induced_embeddings<'a>(host: &'a Graph, pattern: &'a Graph) -> InducedEmbeddings<'a> {
    InducedEmbeddings::new(host, pattern)
}

/// All embeddings of `pattern` as a not necessarily induced subgraph.
pub fn subgraph_embeddings<'a>(host: &'a Graph, pattern: &'a Graph) -> InducedEmbeddings<'a> {
    InducedEmbeddings::with_mode(host, pattern, false)
}
