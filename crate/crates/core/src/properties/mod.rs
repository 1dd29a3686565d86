//! Triangle-freeness, maximality, independence number, degree profiles and
//! the covering properties D(k) and Q(k).

mod covering;
mod independence;

pub use covering::{
    check_d, check_d_with, check_q, check_q_with, d_coverage, d_witness_at, in_class_d4,
    q_certificate, q_witness_at, DVerdict, QCertificate, QVerdict, SearchMode, WeightVector,
};
pub use independence::{independence_number, max_weight_independent};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Lexicographically least triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.order() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            let common = g.neighbors(a).intersection(g.neighbors(b));
            if let Some(c) = common.iter().find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Why a graph is not maximal triangle-free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MaximalityFailure {
    Triangle([usize; 3]),
    /// A non-adjacent pair without a common neighbour; adding it keeps the
    /// graph triangle-free.
    Augmentable(usize, usize),
}

pub fn maximality_failure(g: &Graph) -> Option<MaximalityFailure> {
    if let Some(t) = find_triangle(g) {
        return Some(MaximalityFailure::Triangle(t));
    }
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if !g.has_edge(u, v) && !g.neighbors(u).intersects(g.neighbors(v)) {
                return Some(MaximalityFailure::Augmentable(u, v));
            }
        }
    }
    None
}

pub fn is_maximal_triangle_free(g: &Graph) -> bool {
    maximality_failure(g).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// Degrees in ascending order.
    pub degrees: Vec<usize>,
    pub min: usize,
    pub max: usize,
}

impl DegreeProfile {
    /// `(degree, multiplicity)` pairs in ascending degree order.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((x, c)) if *x == d => *c += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut degrees = g.degrees();
    degrees.sort_unstable();
    DegreeProfile {
        min: degrees[0],
        max: *degrees.last().expect("graphs are non-empty"),
        degrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)).unwrap()
    }

    #[test]
    fn triangles() {
        assert!(is_triangle_free(&cycle(5)));
        let k3 = Graph::from_fn(3, |_, _| true).unwrap();
        assert_eq!(find_triangle(&k3), Some([0, 1, 2]));
    }

    #[test]
    fn maximality() {
        assert!(is_maximal_triangle_free(&cycle(5)));
        assert_eq!(
            maximality_failure(&cycle(6)),
            Some(MaximalityFailure::Augmentable(0, 3))
        );
        assert!(is_maximal_triangle_free(&Graph::empty(1).unwrap()));
        assert!(!is_maximal_triangle_free(&Graph::empty(2).unwrap()));
    }

    #[test]
    fn profile_histogram() {
        let p = degree_profile(&Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(p.histogram(), vec![(1, 2), (2, 1)]);
        assert_eq!((p.min, p.max), (1, 2));
    }
}
