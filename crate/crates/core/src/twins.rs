//! Twin partitions, quotients, blow-ups and the twin property.

use crate::bitset::VertexSet;
use crate::embed::{induced_embeddings, Embedding};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Partition of the vertices into classes of equal neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinPartition {
    /// Classes in order of least member, each sorted.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[v]` indexes `classes`.
    pub class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let mut index: HashMap<&VertexSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; g.order()];
    for v in 0..g.order() {
        let id = *index.entry(g.neighbors(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
        class_of[v] = id;
    }
    TwinPartition { classes, class_of }
}

/// Graph on the twin classes; class `i` is vertex `i`.
pub fn quotient(g: &Graph, p: &TwinPartition) -> Result<Graph> {
    if *p != twin_partition(g) {
        return Err(Error::Contract(
            "partition is not the twin partition of this graph".into(),
        ));
    }
    let reps = p.representatives();
    g.induced_subgraph(&reps)
}

/// A base graph with a positive weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupSpec {
    pub base: Graph,
    pub weights: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Graph, weights: Vec<usize>) -> Result<BlowupSpec> {
        if weights.len() != base.order() {
            return Err(Error::Precondition(format!(
                "{} weights for a base of order {}",
                weights.len(),
                base.order()
            )));
        }
        if let Some(v) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Precondition(format!(
                "weight of base vertex {v} is zero"
            )));
        }
        Ok(BlowupSpec { base, weights })
    }

    pub fn uniform(base: Graph, w: usize) -> Result<BlowupSpec> {
        let n = base.order();
        BlowupSpec::new(base, vec![w; n])
    }

    /// Base graph is the twin quotient; weights are the class sizes.
    pub fn from_twins(g: &Graph) -> BlowupSpec {
        let p = twin_partition(g);
        let base = quotient(g, &p).expect("partition is fresh");
        BlowupSpec {
            base,
            weights: p.sizes(),
        }
    }

    pub fn expanded_order(&self) -> usize {
        self.weights.iter().sum()
    }

    /// First expanded vertex of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.weights
            .iter()
            .map(|&w| {
                let o = acc;
                acc += w;
                o
            })
            .collect()
    }

    /// Base vertex of each expanded vertex.
    pub fn block_of(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .flat_map(|(v, &w)| std::iter::repeat(v).take(w))
            .collect()
    }
}

/// Expands every base vertex `v` into `w(v)` independent copies, blocks in
/// base-vertex order.
pub fn blowup(spec: &BlowupSpec) -> Result<Graph> {
    if spec.weights.len() != spec.base.order() || spec.weights.contains(&0) {
        return Err(Error::Precondition(
            "blow-up weights must be positive, one per base vertex".into(),
        ));
    }
    let block = spec.block_of();
    Graph::from_fn(block.len(), |u, v| spec.base.has_edge(block[u], block[v]))
}

/// Vertices of `g` whose trace on the image of `h` equals that of `q`.
pub fn h_twins(g: &Graph, h: &Embedding, q: usize) -> Result<VertexSet> {
    if !h.map.contains(&q) {
        return Err(Error::Precondition(format!(
            "vertex {q} is not in the embedded copy"
        )));
    }
    let image = h.image(g);
    let trace = g.neighbors(q).intersection(&image);
    Ok(g.vertex_set((0..g.order()).filter(|&v| g.neighbors(v).intersection(&image) == trace)))
}

/// A copy of the pattern with a non-adjacent pair of twins over an edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinViolation {
    pub embedding: Embedding,
    /// Pattern edge `(i, j)`.
    pub edge: (usize, usize),
    /// H-twin of the image of `i`.
    pub q: usize,
    /// H-twin of the image of `j`, not adjacent to `q`.
    pub z: usize,
}

/// Checks the twin property of `g` for pattern `f`, over the edge `e` of `f`
/// or over every edge when `e` is `None`. Returns the first violation found.
pub fn has_twin_property(
    g: &Graph,
    f: &Graph,
    e: Option<(usize, usize)>,
) -> Result<Option<TwinViolation>> {
    let edges = match e {
        Some((i, j)) => {
            if i >= f.order() || j >= f.order() || !f.has_edge(i, j) {
                return Err(Error::Precondition(format!(
                    "({i}, {j}) is not an edge of the pattern"
                )));
            }
            vec![(i, j)]
        }
        None => f.edges(),
    };
    let k = f.order();
    for emb in induced_embeddings(g, f) {
        // Trace of a host vertex: the pattern positions it is adjacent to.
        let traces: Vec<VertexSet> = (0..g.order())
            .map(|v| {
                VertexSet::from_iter_with_capacity(k, (0..k).filter(|&i| g.has_edge(v, emb.map[i])))
            })
            .collect();
        let twins_of = |i: usize| -> VertexSet {
            let t = &traces[emb.map[i]];
            g.vertex_set((0..g.order()).filter(|&v| traces[v] == *t))
        };
        for &(i, j) in &edges {
            let ti = twins_of(i);
            let tj = twins_of(j);
            for q in ti.iter() {
                if let Some(z) = tj.difference(g.neighbors(q)).first() {
                    return Ok(Some(TwinViolation {
                        embedding: emb,
                        edge: (i, j),
                        q,
                        z,
                    }));
                }
            }
        }
    }
    Ok(None)
}
