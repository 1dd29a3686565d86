//! Isomorphism, canonical labelling and automorphism groups.
//!
//! Everything here is built on one primitive: colour refinement (1-dimensional
//! Weisfeiler-Leman) run jointly over one or two graphs, followed by
//! individualisation and backtracking. Colours are ranks of sorted signatures,
//! so the ordered partition produced by refinement does not depend on vertex
//! names. Twins (equal open or closed neighbourhoods) inside one cell are
//! interchangeable, so only one member per twin class is branched on.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Permutation> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n || seen[x] {
                return Err(Error::Precondition(format!(
                    "{map:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(map))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation(first.0.iter().map(|&x| self.0[x]).collect())
    }

    /// True iff this map carries edges of `g` to edges of `h` and non-edges to
    /// non-edges. Checked pair by pair.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.0.len() != n {
            return false;
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(self.0[u], self.0[v])))
    }
}

type Colors = Vec<u32>;

/// Joint colour refinement to the coarsest stable colouring. Returns `false`
/// if the graphs end up with different colour class sizes (only possible for
/// two graphs).
fn refine(graphs: &[&Graph], cols: &mut [Colors]) -> bool {
    struct Entry {
        color: u32,
        nbrs: SmallVec<[u32; 16]>,
        graph: usize,
        vertex: usize,
    }
    let mut distinct = usize::MAX;
    loop {
        let mut entries: Vec<Entry> = Vec::new();
        for (gi, g) in graphs.iter().enumerate() {
            for v in 0..g.order() {
                let mut nbrs: SmallVec<[u32; 16]> =
                    g.neighbors(v).iter().map(|u| cols[gi][u]).collect();
                nbrs.sort_unstable();
                entries.push(Entry {
                    color: cols[gi][v],
                    nbrs,
                    graph: gi,
                    vertex: v,
                });
            }
        }
        entries.sort_unstable_by(|a, b| a.color.cmp(&b.color).then_with(|| a.nbrs.cmp(&b.nbrs)));
        let mut rank = 0u32;
        let mut counts: Vec<[usize; 2]> = vec![[0, 0]];
        for i in 0..entries.len() {
            if i > 0
                && (entries[i].color != entries[i - 1].color
                    || entries[i].nbrs != entries[i - 1].nbrs)
            {
                rank += 1;
                counts.push([0, 0]);
            }
            let e = &entries[i];
            cols[e.graph][e.vertex] = rank;
            counts[rank as usize][e.graph.min(1)] += 1;
        }
        if graphs.len() == 2 && counts.iter().any(|c| c[0] != c[1]) {
            return false;
        }
        let now = rank as usize + 1;
        if now == distinct {
            return true;
        }
        distinct = now;
    }
}

/// Gives `v` its own colour, placed just before the rest of its old cell.
fn individualize(cols: &mut Colors, v: usize) {
    let c = cols[v];
    for (u, x) in cols.iter_mut().enumerate() {
        let stays_behind = *x == c && u != v;
        *x = *x * 2 + stays_behind as u32;
    }
}

fn color_count(cols: &Colors) -> usize {
    cols.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// First (lowest) colour with more than one vertex.
fn target_cell(cols: &Colors) -> Option<u32> {
    let mut sizes = vec![0usize; color_count(cols)];
    for &c in cols {
        sizes[c as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}

/// Twin class id per vertex: vertices share an id iff they have equal open
/// neighbourhoods or equal closed neighbourhoods.
fn twin_ids(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut id: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if id[v] != v {
            continue;
        }
        for u in v + 1..n {
            if id[u] != u {
                continue;
            }
            let open = g.neighbors(u) == g.neighbors(v);
            let closed = g.has_edge(u, v) && {
                let mut a = g.neighbors(u).clone();
                a.insert(u);
                let mut b = g.neighbors(v).clone();
                b.insert(v);
                a == b
            };
            if open || closed {
                id[u] = v;
            }
        }
    }
    id
}

fn vertices_with(cols: &Colors, c: u32) -> Vec<usize> {
    cols.iter()
        .enumerate()
        .filter(|(_, &x)| x == c)
        .map(|(v, _)| v)
        .collect()
}

/// Coarsest equitable colouring of `g`, as colour ranks per vertex.
///
/// Isomorphism invariant: any isomorphism `g → h` carries the colour of `v`
/// to the same colour in `h`'s partition.
pub fn equitable_partition(g: &Graph) -> Vec<u32> {
    let mut cols = [vec![0u32; g.order()]];
    refine(&[g], &mut cols);
    let [c] = cols;
    c
}

/// Maps each vertex to the vertex of the other graph with the same colour.
/// Both colourings must be discrete.
fn leaf_map(cg: &Colors, ch: &Colors) -> Vec<usize> {
    let mut at = vec![0usize; ch.len()];
    for (v, &c) in ch.iter().enumerate() {
        at[c as usize] = v;
    }
    cg.iter().map(|&c| at[c as usize]).collect()
}

fn iso_search(
    g: &Graph,
    h: &Graph,
    cg: Colors,
    ch: Colors,
    twins_h: &[usize],
) -> Option<Vec<usize>> {
    let mut cols = [cg, ch];
    if !refine(&[g, h], &mut cols) {
        return None;
    }
    let [cg, ch] = cols;
    let Some(c) = target_cell(&cg) else {
        let map = leaf_map(&cg, &ch);
        return Permutation(map.clone()).is_isomorphism(g, h).then_some(map);
    };
    let u = cg.iter().position(|&x| x == c).expect("cell is non-empty");
    let mut tried: Vec<usize> = Vec::new();
    for v in vertices_with(&ch, c) {
        if tried.contains(&twins_h[v]) {
            continue;
        }
        tried.push(twins_h[v]);
        let mut a = cg.clone();
        individualize(&mut a, u);
        let mut b = ch.clone();
        individualize(&mut b, v);
        if let Some(m) = iso_search(g, h, a, b, twins_h) {
            return Some(m);
        }
    }
    None
}

/// Collects every isomorphism `g → h` compatible with the colourings, stopping
/// once `out` holds more than `limit` maps.
fn all_isos(
    g: &Graph,
    h: &Graph,
    cg: Colors,
    ch: Colors,
    out: &mut Vec<Permutation>,
    limit: usize,
) {
    if out.len() > limit {
        return;
    }
    let mut cols = [cg, ch];
    if !refine(&[g, h], &mut cols) {
        return;
    }
    let [cg, ch] = cols;
    let Some(c) = target_cell(&cg) else {
        let p = Permutation(leaf_map(&cg, &ch));
        if p.is_isomorphism(g, h) {
            out.push(p);
        }
        return;
    };
    let u = cg.iter().position(|&x| x == c).expect("cell is non-empty");
    for v in vertices_with(&ch, c) {
        let mut a = cg.clone();
        individualize(&mut a, u);
        let mut b = ch.clone();
        individualize(&mut b, v);
        all_isos(g, h, a, b, out, limit);
    }
}

/// An isomorphism `g → h` (as the image list of `g`'s vertices), or `None`.
///
/// Deterministic: the first leaf of the refinement search tree that is a
/// genuine isomorphism, with candidates tried least-vertex-first.
pub fn isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.order();
    let twins = twin_ids(h);
    iso_search(g, h, vec![0; n], vec![0; n], &twins).map(Permutation)
}

/// All automorphisms of `g`, identity included, in search order.
///
/// Fails with a resource-guard error if the group has more than `limit`
/// elements; use [`automorphism_order`] for large groups.
pub fn automorphisms(g: &Graph, limit: usize) -> Result<Vec<Permutation>> {
    let n = g.order();
    let mut out = Vec::new();
    all_isos(g, g, vec![0; n], vec![0; n], &mut out, limit);
    if out.len() > limit {
        return Err(Error::ResourceGuard(format!(
            "automorphism group larger than {limit}"
        )));
    }
    Ok(out)
}

/// Order of the automorphism group, saturating at `u128::MAX`.
///
/// Walks a stabiliser chain: at each level the target cell's first vertex `u`
/// is fixed, and the orbit of `u` under the current stabiliser is measured by
/// testing, for each candidate `v` in the cell, whether some automorphism
/// fixing the earlier points sends `u` to `v`.
pub fn automorphism_order(g: &Graph) -> u128 {
    let twins = twin_ids(g);
    let mut cols = [vec![0u32; g.order()]];
    refine(&[g], &mut cols);
    let [mut cols] = cols;
    let mut order: u128 = 1;
    while let Some(c) = target_cell(&cols) {
        let cell = vertices_with(&cols, c);
        let u = cell[0];
        let mut verdict: Vec<(usize, bool)> = Vec::new();
        let mut orbit: u128 = 0;
        for &v in &cell {
            let inside = if twins[v] == twins[u] {
                true
            } else if let Some(&(_, b)) = verdict.iter().find(|(t, _)| *t == twins[v]) {
                b
            } else {
                let mut a = cols.clone();
                individualize(&mut a, u);
                let mut b = cols.clone();
                individualize(&mut b, v);
                let found = iso_search(g, g, a, b, &twins).is_some();
                verdict.push((twins[v], found));
                found
            };
            orbit += inside as u128;
        }
        order = order.saturating_mul(orbit);
        individualize(&mut cols, u);
        let mut wrap = [cols];
        refine(&[g], &mut wrap);
        [cols] = wrap;
    }
    order
}

/// Upper-triangle adjacency bits of `g` under the labelling `lab` (vertex
/// `v` gets label `lab[v]`), row-major over labels, most significant bit first.
fn certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut inv = vec![0usize; n];
    for (v, &l) in lab.iter().enumerate() {
        inv[l] = v;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u64; bits.div_ceil(64).max(1)];
    let mut k = 0usize;
    for i in 0..n {
        let row = g.neighbors(inv[i]);
        for &w in &inv[i + 1..] {
            if row.contains(w) {
                out[k >> 6] |= 1u64 << (63 - (k & 63));
            }
            k += 1;
        }
    }
    out
}

/// Upper-triangle adjacency bits of `g` under its own labelling, most
/// significant bit first. Orders canonical forms.
pub fn adjacency_key(g: &Graph) -> Vec<u64> {
    let id: Vec<usize> = (0..g.order()).collect();
    certificate(g, &id)
}

struct Canon<'a> {
    g: &'a Graph,
    twins: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn search(&mut self, cols: Colors, prefix: &mut Vec<usize>) {
        let mut wrap = [cols];
        refine(&[self.g], &mut wrap);
        let [cols] = wrap;
        let Some(c) = target_cell(&cols) else {
            let lab: Vec<usize> = cols.iter().map(|&x| x as usize).collect();
            let cert = certificate(self.g, &lab);
            match &self.best {
                None => self.best = Some((cert, lab)),
                Some((b, blab)) => match cert.cmp(b) {
                    Ordering::Less => self.best = Some((cert, lab)),
                    Ordering::Equal => {
                        let mut inv = vec![0usize; lab.len()];
                        for (v, &l) in blab.iter().enumerate() {
                            inv[l] = v;
                        }
                        let gamma: Vec<usize> = lab.iter().map(|&l| inv[l]).collect();
                        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                            self.autos.push(gamma);
                        }
                    }
                    Ordering::Greater => {}
                },
            }
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in vertices_with(&cols, c) {
            if explored.iter().any(|&w| self.twins[w] == self.twins[v]) {
                continue;
            }
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut next = cols.clone();
            individualize(&mut next, v);
            prefix.push(v);
            self.search(next, prefix);
            prefix.pop();
        }
    }

    /// Whether the stored automorphisms fixing `prefix` pointwise connect `v`
    /// to an already explored sibling.
    fn in_explored_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// Canonical labelling of `g`: `perm[v]` is the canonical label of `v`.
pub fn canonical_labeling(g: &Graph) -> Permutation {
    let mut canon = Canon {
        g,
        twins: twin_ids(g),
        best: None,
        autos: Vec::new(),
    };
    canon.search(vec![0; g.order()], &mut Vec::new());
    let (_, lab) = canon.best.expect("search tree has a leaf");
    Permutation(lab)
}

/// Canonical copy of `g` and the labelling producing it.
///
/// Two graphs have equal canonical copies iff they are isomorphic. The copy is
/// the least upper-triangle adjacency string over the leaves of the
/// refinement search tree.
pub fn canonical_form(g: &Graph) -> (Graph, Permutation) {
    let perm = canonical_labeling(g);
    let canon = g
        .relabel(perm.as_slice())
        .expect("labelling has graph order");
    (canon, perm)
}
