//! Named graphs: Andrásfai and Vega graphs, the Mycielski-Grötzsch graph and
//! the small gadgets used by the structural checks.

mod vega;

pub use vega::{
    aux_paths, named_maps, upsilon_of_path, vega, AuxPath, Colour, MapName, NamedMap, VegaId,
    VegaLabeling,
};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::BlowupSpec;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AndrasfaiId {
    pub k: usize,
}

impl fmt::Display for AndrasfaiId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "andrasfai({})", self.k)
    }
}

/// Circulant on `Z/(3k-1)` with `i ~ j` iff `i - j mod (3k-1)` lies in `k..=2k-1`.
pub fn andrasfai(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition(
            "Andrásfai index must be at least 1".into(),
        ));
    }
    let m = 3 * k - 1;
    Graph::from_fn(m, |u, v| (k..2 * k).contains(&((v - u) % m)))
}

/// Vertex names of the Mycielski-Grötzsch graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsilonLabeling {
    pub a: [usize; 5],
    pub b: [usize; 5],
    pub c: usize,
}

impl UpsilonLabeling {
    pub const STANDARD: UpsilonLabeling = UpsilonLabeling {
        a: [0, 1, 2, 3, 4],
        b: [5, 6, 7, 8, 9],
        c: 10,
    };

    pub fn name(&self, v: usize) -> String {
        if v == self.c {
            return "c".into();
        }
        if let Some(i) = self.a.iter().position(|&x| x == v) {
            return format!("a{i}");
        }
        if let Some(i) = self.b.iter().position(|&x| x == v) {
            return format!("b{i}");
        }
        format!("?{v}")
    }
}

/// Edges `a_i c`, `a_i b_{i±2}` and `b_i b_{i+2}`, indices mod 5.
pub fn mycielski_grotzsch() -> (Graph, UpsilonLabeling) {
    let l = UpsilonLabeling::STANDARD;
    let mut edges = Vec::with_capacity(20);
    for i in 0..5 {
        edges.push((l.a[i], l.c));
        edges.push((l.a[i], l.b[(i + 2) % 5]));
        edges.push((l.a[i], l.b[(i + 3) % 5]));
        edges.push((l.b[i], l.b[(i + 2) % 5]));
    }
    (
        Graph::from_edge_list(11, &edges).expect("static edge list"),
        l,
    )
}

/// `K_{4,4}` minus a perfect matching: `a_1..a_4 = 0..3`, `b_1..b_4 = 4..7`.
pub fn cube() -> Graph {
    Graph::from_fn(8, |u, v| u < 4 && v >= 4 && v - 4 != u).expect("static order")
}

/// The nine-vertex graph with `a_i = i`, `b_i = 3 + i`, `c_i = 6 + i` and edges
/// `a_i c_i`, `b_i c_i`, `a_i b_j` for `i ≠ j`.
pub fn graph_n() -> Graph {
    let mut edges = Vec::new();
    for i in 0..3 {
        edges.push((i, 6 + i));
        edges.push((3 + i, 6 + i));
        for j in 0..3 {
            if i != j {
                edges.push((i, 3 + j));
            }
        }
    }
    Graph::from_edge_list(9, &edges).expect("static edge list")
}

/// Circulant on `Z/6k` with connection set `±{k, .., 2k-1}`.
pub fn cayley_6k(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Precondition(
            "Cayley index must be at least 1".into(),
        ));
    }
    let m = 6 * k;
    Graph::from_fn(m, |u, v| {
        let d = (v - u) % m;
        let d = d.min(m - d);
        (k..2 * k).contains(&d)
    })
}

/// Vertex names of [`fig41`]: `a1..a8` then `b1..b4`.
pub const FIG41_NAMES: [&str; 12] = [
    "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2", "b3", "b4",
];

/// The twelve-vertex 4-regular graph with independence number four.
pub fn fig41() -> Graph {
    const EDGES: [(&str, &str); 24] = [
        ("b1", "b2"),
        ("b3", "b4"),
        ("a2", "b1"),
        ("b1", "b4"),
        ("b4", "a5"),
        ("a1", "a4"),
        ("a4", "a7"),
        ("a7", "a2"),
        ("a2", "a5"),
        ("a5", "a8"),
        ("a8", "a3"),
        ("a3", "a6"),
        ("a6", "a1"),
        ("b1", "a3"),
        ("a3", "a7"),
        ("a7", "b3"),
        ("b4", "a4"),
        ("a4", "a8"),
        ("a8", "b2"),
        ("a1", "b2"),
        ("b2", "b3"),
        ("b3", "a6"),
        ("a1", "a5"),
        ("a2", "a6"),
    ];
    let id = |s: &str| {
        FIG41_NAMES
            .iter()
            .position(|&x| x == s)
            .expect("known name")
    };
    let edges: Vec<(usize, usize)> = EDGES.iter().map(|&(p, q)| (id(p), id(q))).collect();
    Graph::from_edge_list(12, &edges).expect("static edge list")
}

/// Outer 5-cycle `0..4`, inner pentagram `5..9`, spokes `i ~ 5 + i`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edge_list(10, &edges).expect("static edge list")
}

/// Mycielski-Grötzsch graph weighted `c ↦ 4`, `a_i ↦ 2`, `b_i ↦ 3`.
pub fn haggkvist_spec() -> BlowupSpec {
    let (g, l) = mycielski_grotzsch();
    let mut w = vec![0; 11];
    for i in 0..5 {
        w[l.a[i]] = 2;
        w[l.b[i]] = 3;
    }
    w[l.c] = 4;
    BlowupSpec::new(g, w).expect("positive weights")
}

/// `½k(k−1)n² − k(3k−4)ns + ½(3k−4)(3k−1)s²` with `k = ⌈s/(3s−n)⌉`, for
/// `n/3 < s ≤ n/2`.
pub fn extremal_formula(n: u64, s: u64) -> Result<u128> {
    if 3 * s <= n || 2 * s > n {
        return Err(Error::Domain(format!(
            "s = {s} outside (n/3, n/2] for n = {n}"
        )));
    }
    let (n, s) = (n as i128, s as i128);
    let k = (s + (3 * s - n) - 1) / (3 * s - n);
    let overflow = || Error::Domain("extremal value exceeds 128-bit range".into());
    let t1 = k
        .checked_mul(k - 1)
        .and_then(|x| x.checked_mul(n))
        .and_then(|x| x.checked_mul(n));
    let t2 = (2 * k)
        .checked_mul(3 * k - 4)
        .and_then(|x| x.checked_mul(n))
        .and_then(|x| x.checked_mul(s));
    let t3 = (3 * k - 4)
        .checked_mul(3 * k - 1)
        .and_then(|x| x.checked_mul(s))
        .and_then(|x| x.checked_mul(s));
    let twice = t1
        .zip(t2)
        .zip(t3)
        .and_then(|((a, b), c)| a.checked_sub(b).and_then(|x| x.checked_add(c)))
        .ok_or_else(overflow)?;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "extremal value 2E = {twice} is not a non-negative even number"
        )));
    }
    Ok((twice / 2) as u128)
}
