//! Vega graphs, their named isomorphisms, auxiliary paths and the copies of
//! the Mycielski-Grötzsch graph those paths span.

use super::{andrasfai, mycielski_grotzsch, UpsilonLabeling};
use crate::embed::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::Permutation;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VegaId {
    pub i: usize,
    pub mu: u8,
    pub nu: u8,
}

impl VegaId {
    pub fn new(i: usize, mu: u8, nu: u8) -> Result<VegaId> {
        if i < 2 || mu > 1 || nu > 1 {
            return Err(Error::Precondition(format!(
                "invalid Vega index ({i}, {mu}, {nu})"
            )));
        }
        Ok(VegaId { i, mu, nu })
    }

    pub fn order(&self) -> usize {
        3 * self.i + 7 - self.mu as usize - self.nu as usize
    }

    /// All four variants for a given `i`, in `(μ, ν)` lexicographic order.
    pub fn variants(i: usize) -> Vec<VegaId> {
        [(0, 0), (0, 1), (1, 0), (1, 1)]
            .iter()
            .map(|&(mu, nu)| VegaId { i, mu, nu })
            .collect()
    }
}

impl fmt::Display for VegaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vega({},{},{})", self.i, self.mu, self.nu)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Red,
    Green,
    Blue,
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Green => "green",
            Colour::Blue => "blue",
        })
    }
}

/// Conventional name of a Vega vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VName {
    Inner(usize),
    A,
    V,
    C,
    U,
    B,
    W,
    X,
    Y,
}

impl fmt::Display for VName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VName::Inner(j) => write!(f, "{j}"),
            VName::A => f.write_str("a"),
            VName::V => f.write_str("v"),
            VName::C => f.write_str("c"),
            VName::U => f.write_str("u"),
            VName::B => f.write_str("b"),
            VName::W => f.write_str("w"),
            VName::X => f.write_str("x"),
            VName::Y => f.write_str("y"),
        }
    }
}

/// Vertex numbering of a Vega graph: inner vertices first (with `2i-1`
/// skipped when `ν = 1`), then `a, v, c, u, b, w`, then `x`, then `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VegaLabeling {
    pub id: VegaId,
    /// `inner[j]` is the vertex of inner name `j`, if present.
    pub inner: Vec<Option<usize>>,
    pub a: usize,
    pub v: usize,
    pub c: usize,
    pub u: usize,
    pub b: usize,
    pub w: usize,
    pub x: usize,
    pub y: Option<usize>,
    pub red: Vec<usize>,
    pub green: Vec<usize>,
    pub blue: Vec<usize>,
}

impl VegaLabeling {
    fn new(id: VegaId) -> VegaLabeling {
        let i = id.i;
        let m = 3 * i - 1;
        let mut next = 0;
        let mut inner = vec![None; m];
        for (j, slot) in inner.iter_mut().enumerate() {
            if id.nu == 1 && j == 2 * i - 1 {
                continue;
            }
            *slot = Some(next);
            next += 1;
        }
        let pick =
            |r: std::ops::Range<usize>| -> Vec<usize> { r.filter_map(|j| inner[j]).collect() };
        let (red, green, blue) = (pick(0..i), pick(i..2 * i), pick(2 * i..m));
        let o = next;
        VegaLabeling {
            id,
            inner,
            a: o,
            v: o + 1,
            c: o + 2,
            u: o + 3,
            b: o + 4,
            w: o + 5,
            x: o + 6,
            y: (id.mu == 0).then_some(o + 7),
            red,
            green,
            blue,
        }
    }

    pub fn vertex(&self, name: VName) -> Option<usize> {
        match name {
            VName::Inner(j) => self.inner.get(j).copied().flatten(),
            VName::A => Some(self.a),
            VName::V => Some(self.v),
            VName::C => Some(self.c),
            VName::U => Some(self.u),
            VName::B => Some(self.b),
            VName::W => Some(self.w),
            VName::X => Some(self.x),
            VName::Y => self.y,
        }
    }

    pub fn vname(&self, v: usize) -> Option<VName> {
        if let Some(j) = self.inner.iter().position(|&s| s == Some(v)) {
            return Some(VName::Inner(j));
        }
        [
            (self.a, VName::A),
            (self.v, VName::V),
            (self.c, VName::C),
            (self.u, VName::U),
            (self.b, VName::B),
            (self.w, VName::W),
            (self.x, VName::X),
        ]
        .iter()
        .find(|(x, _)| *x == v)
        .map(|&(_, n)| n)
        .or_else(|| (self.y == Some(v)).then_some(VName::Y))
    }

    pub fn name(&self, v: usize) -> String {
        self.vname(v)
            .map_or_else(|| format!("?{v}"), |n| n.to_string())
    }

    pub fn order(&self) -> usize {
        self.id.order()
    }

    /// Inner vertices in increasing name order.
    pub fn inner_vertices(&self) -> Vec<usize> {
        self.inner.iter().flatten().copied().collect()
    }

    /// Colour of inner name `j`.
    pub fn colour(&self, j: usize) -> Colour {
        let i = self.id.i;
        if j < i {
            Colour::Red
        } else if j < 2 * i {
            Colour::Green
        } else {
            Colour::Blue
        }
    }

    pub fn class(&self, c: Colour) -> &[usize] {
        match c {
            Colour::Red => &self.red,
            Colour::Green => &self.green,
            Colour::Blue => &self.blue,
        }
    }

    /// The external hexagon `a-v-c-u-b-w`.
    pub fn hexagon(&self) -> [usize; 6] {
        [self.a, self.v, self.c, self.u, self.b, self.w]
    }
}

/// Inner Andrásfai graph `Γ_i`, hexagon `a-v-c-u-b-w-a` with `a, u` joined to
/// red, `b, v` to green and `c, w` to blue, `x ~ a, b, c` and `y ~ u, v, w, x`.
pub fn vega(id: VegaId) -> Result<(Graph, VegaLabeling)> {
    let id = VegaId::new(id.i, id.mu, id.nu)?;
    let l = VegaLabeling::new(id);
    let inner_graph = andrasfai(id.i)?;
    let mut edges = Vec::new();
    for (p, q) in inner_graph.edges() {
        if let (Some(x), Some(y)) = (l.inner[p], l.inner[q]) {
            edges.push((x, y));
        }
    }
    for (outer, colour) in [
        (l.a, &l.red),
        (l.u, &l.red),
        (l.b, &l.green),
        (l.v, &l.green),
        (l.c, &l.blue),
        (l.w, &l.blue),
    ] {
        edges.extend(colour.iter().map(|&j| (outer, j)));
    }
    let h = l.hexagon();
    for k in 0..6 {
        edges.push((h[k], h[(k + 1) % 6]));
    }
    edges.extend([(l.x, l.a), (l.x, l.b), (l.x, l.c)]);
    if let Some(y) = l.y {
        edges.extend([(y, l.u), (y, l.v), (y, l.w), (y, l.x)]);
    }
    let g = Graph::from_edge_list(id.order(), &edges)?;
    Ok((g, l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapName {
    Sigma,
    Tau0,
    Tau1,
    Rho,
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapName::Sigma => "sigma",
            MapName::Tau0 => "tau0",
            MapName::Tau1 => "tau1",
            MapName::Rho => "rho",
        })
    }
}

/// An explicit isomorphism between two Vega graphs, given on vertex numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMap {
    pub name: MapName,
    pub source: VegaId,
    pub target: VegaId,
    pub perm: Permutation,
}

fn rename(name: MapName, id: VegaId, n: VName) -> VName {
    let i = id.i;
    let m = 3 * i - 1;
    let swap = |pairs: &[(VName, VName)]| {
        pairs.iter().find_map(|&(p, q)| {
            if n == p {
                Some(q)
            } else if n == q {
                Some(p)
            } else {
                None
            }
        })
    };
    match name {
        MapName::Sigma => swap(&[
            (VName::X, VName::Y),
            (VName::A, VName::U),
            (VName::B, VName::V),
            (VName::C, VName::W),
        ])
        .unwrap_or(n),
        MapName::Tau0 => match n {
            VName::Inner(j) => VName::Inner((2 * i - 1 + m - j) % m),
            _ => swap(&[(VName::A, VName::B), (VName::U, VName::V)]).unwrap_or(n),
        },
        MapName::Tau1 => match n {
            VName::Inner(j) => VName::Inner((i - 1 + m - j) % m),
            _ => swap(&[(VName::B, VName::C), (VName::V, VName::W)]).unwrap_or(n),
        },
        MapName::Rho => swap(&[
            (VName::C, VName::Inner(2)),
            (VName::U, VName::B),
            (VName::Inner(1), VName::W),
            (VName::X, VName::Inner(0)),
            (VName::Inner(3), VName::Y),
        ])
        .unwrap_or(n),
    }
}

/// The named map `name` with source `id`, validated as an isomorphism.
pub fn named_map(id: VegaId, name: MapName) -> Result<NamedMap> {
    let available = match name {
        MapName::Sigma => id.mu == 0,
        MapName::Tau0 => id.nu == 0,
        MapName::Tau1 => id.nu == 1,
        MapName::Rho => id.i == 2,
    };
    if !available {
        return Err(Error::UnavailableMap {
            name: name.to_string(),
            id: id.to_string(),
        });
    }
    let target = match name {
        MapName::Rho => VegaId {
            i: 2,
            mu: id.nu,
            nu: id.mu,
        },
        _ => id,
    };
    let (sg, sl) = vega(id)?;
    let (tg, tl) = vega(target)?;
    let mut image = Vec::with_capacity(sg.order());
    for v in 0..sg.order() {
        let n = sl
            .vname(v)
            .ok_or_else(|| Error::Internal(format!("unnamed vertex {v}")))?;
        let t = tl
            .vertex(rename(name, id, n))
            .ok_or_else(|| Error::Internal(format!("{name} sends {n} outside {target}")))?;
        image.push(t);
    }
    let perm = Permutation::new(image)?;
    if !perm.is_isomorphism(&sg, &tg) {
        return Err(Error::Internal(format!(
            "{name} is not an isomorphism {id} -> {target}"
        )));
    }
    Ok(NamedMap {
        name,
        source: id,
        target,
        perm,
    })
}

/// All named maps available for `id`, in the order sigma, tau0, tau1, rho.
pub fn named_maps(id: VegaId) -> Result<Vec<NamedMap>> {
    let id = VegaId::new(id.i, id.mu, id.nu)?;
    let mut out = Vec::new();
    for name in [MapName::Sigma, MapName::Tau0, MapName::Tau1, MapName::Rho] {
        match named_map(id, name) {
            Ok(m) => out.push(m),
            Err(Error::UnavailableMap { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// A path `p0-p1-p2-p3` of inner names whose ends share a colour, oriented so
/// that `p1` is green on red paths and red otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AuxPath {
    pub colour: Colour,
    pub p: [usize; 4],
    /// Whether the path is `j-(j+i)-(j+2i)-(j+1)` for some `j`.
    pub standard: bool,
}

fn lead_colour(c: Colour) -> Colour {
    match c {
        Colour::Red => Colour::Green,
        Colour::Green | Colour::Blue => Colour::Red,
    }
}

/// Every auxiliary path of the inner graph, sorted by colour then names.
pub fn aux_paths(id: VegaId) -> Result<Vec<AuxPath>> {
    let (g, l) = vega(id)?;
    let i = id.i;
    let m = 3 * i - 1;
    let present: Vec<usize> = (0..m).filter(|&j| l.inner[j].is_some()).collect();
    let adj = |p: usize, q: usize| g.has_edge(l.inner[p].unwrap(), l.inner[q].unwrap());
    let mut out = Vec::new();
    for &p0 in &present {
        for &p1 in &present {
            if !adj(p0, p1) || l.colour(p1) != lead_colour(l.colour(p0)) {
                continue;
            }
            for &p2 in &present {
                if p2 == p0 || !adj(p1, p2) {
                    continue;
                }
                for &p3 in &present {
                    if p3 == p0 || p3 == p1 || !adj(p2, p3) || l.colour(p3) != l.colour(p0) {
                        continue;
                    }
                    if adj(p0, p2) || adj(p1, p3) || adj(p0, p3) {
                        continue;
                    }
                    let standard = (0..m).any(|j| {
                        [j, (j + i) % m, (j + 2 * i) % m, (j + 1) % m] == [p0, p1, p2, p3]
                    });
                    out.push(AuxPath {
                        colour: l.colour(p0),
                        p: [p0, p1, p2, p3],
                        standard,
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The copy of the Mycielski-Grötzsch graph spanned by the hexagon, `x` and
/// the path `pi`, as an embedding of [`mycielski_grotzsch`].
pub fn upsilon_of_path(id: VegaId, pi: &AuxPath) -> Result<Embedding> {
    if !aux_paths(id)?.contains(pi) {
        return Err(Error::Precondition(format!(
            "{pi:?} is not an auxiliary path of {id}"
        )));
    }
    let (g, l) = vega(id)?;
    let (ups, ul) = mycielski_grotzsch();
    let UpsilonLabeling { a, b, c } = ul;
    let (centre, a0, a2, b1, b3, b4) = match pi.colour {
        Colour::Red => (l.a, l.w, l.v, l.u, l.b, l.c),
        Colour::Green => (l.b, l.w, l.u, l.v, l.a, l.c),
        Colour::Blue => (l.c, l.v, l.u, l.w, l.a, l.b),
    };
    let path: Vec<usize> =
        pi.p.iter()
            .map(|&j| l.inner[j].expect("path names are present"))
            .collect();
    let mut map = vec![0; 11];
    map[c] = centre;
    map[a[0]] = a0;
    map[a[1]] = l.x;
    map[a[2]] = a2;
    map[a[3]] = path[0];
    map[a[4]] = path[3];
    map[b[0]] = path[1];
    map[b[1]] = b1;
    map[b[2]] = path[2];
    map[b[3]] = b3;
    map[b[4]] = b4;
    let emb = Embedding { map };
    if !emb.is_induced(&g, &ups) {
        return Err(Error::Internal(format!(
            "layout for {pi:?} in {id} is not an induced copy"
        )));
    }
    Ok(emb)
}
