//! Witness searches for D(k) and Q(k).
//!
//! A sequence `x_1..x_{3m}` of vertices is recorded as its multiplicity
//! vector. For D the search looks for a vector of total `3m` in which every
//! vertex `y` sees weight at most `m` on `N(y)`; for Q it looks for one in
//! which every independent subset of the support weighs at most `m + 1` and
//! every independent subset of a neighbourhood weighs at most `m`. Both
//! conditions only get harder as weight is added, so partial vectors that
//! already break them are discarded.

use super::independence::max_weight_independent;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::twins::{twin_partition, BlowupSpec};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub weights: Vec<usize>,
}

impl WeightVector {
    pub fn new(weights: Vec<usize>) -> WeightVector {
        WeightVector { weights }
    }

    pub fn uniform(n: usize, w: usize) -> WeightVector {
        WeightVector {
            weights: vec![w; n],
        }
    }

    pub fn total(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&v| self.weights[v] > 0)
            .collect()
    }

    /// The vertex sequence this vector records, in vertex order.
    pub fn to_sequence(&self) -> Vec<usize> {
        self.weights
            .iter()
            .enumerate()
            .flat_map(|(v, &w)| std::iter::repeat(v).take(w))
            .collect()
    }
}

/// Whether the searches run on the twin quotient (default) or the input.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    #[default]
    Quotient,
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DVerdict {
    pub holds: bool,
    /// The failing level, or `k` when the property holds.
    pub level: usize,
    pub witness: Option<WeightVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCertificate {
    /// An independent subset of the support.
    pub independent: Vec<usize>,
    /// Number of sequence indices drawn from `independent`.
    pub budget: usize,
    /// Set when `budget = m + 1`.
    pub common_neighbor: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QVerdict {
    pub holds: bool,
    pub level: usize,
    pub witness: Option<WeightVector>,
}

/// Largest weighted coverage `Σ_{v ∈ N(y)} w(v)` and the least `y` attaining it.
pub fn d_coverage(g: &Graph, w: &WeightVector) -> (usize, usize) {
    (0..g.order())
        .map(|y| {
            (
                g.neighbors(y).iter().map(|v| w.weights[v]).sum::<usize>(),
                y,
            )
        })
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .expect("graphs are non-empty")
}

/// A certificate that the weighting `w` of total `3m` satisfies the Q
/// condition, or `None` if `w` is a witness against Q(m).
pub fn q_certificate(g: &Graph, w: &WeightVector, m: usize) -> Option<QCertificate> {
    let supp = w.support();
    let (best, set) = max_weight_independent(g, &supp, &w.weights);
    if best >= m + 2 {
        return Some(QCertificate {
            independent: set,
            budget: best,
            common_neighbor: None,
        });
    }
    for y in 0..g.order() {
        let local: Vec<usize> = supp.iter().copied().filter(|&v| g.has_edge(y, v)).collect();
        let (best, mut set) = max_weight_independent(g, &local, &w.weights);
        if best >= m + 1 {
            // Keep the heaviest members until the weight reaches m + 1.
            set.sort_by_key(|&v| (std::cmp::Reverse(w.weights[v]), v));
            let mut acc = 0;
            let mut keep = Vec::new();
            for v in set {
                if acc >= m + 1 {
                    break;
                }
                acc += w.weights[v];
                keep.push(v);
            }
            keep.sort_unstable();
            return Some(QCertificate {
                independent: keep,
                budget: m + 1,
                common_neighbor: Some(y),
            });
        }
    }
    None
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    D,
    Q,
}

struct Search<'a> {
    g: &'a Graph,
    m: usize,
    kind: Kind,
    /// Neighbourhoods are independent, so the Q bound on `N(y)` is the D
    /// bound `cov[y] <= m` and the D pruning applies to Q as well.
    triangle_free: bool,
    caps: Vec<usize>,
    suffix_cap: Vec<usize>,
    suffix_min_deg: Vec<usize>,
    cov: Vec<usize>,
    w: Vec<usize>,
    slack: usize,
}

impl Search<'_> {
    fn q_ok_after(&self, v: usize) -> bool {
        let supp: Vec<usize> = (0..self.g.order()).filter(|&u| self.w[u] > 0).collect();
        if max_weight_independent(self.g, &supp, &self.w).0 > self.m + 1 {
            return false;
        }
        self.triangle_free
            || self.g.neighbors(v).iter().all(|y| {
                let local: Vec<usize> = supp
                    .iter()
                    .copied()
                    .filter(|&u| self.g.has_edge(y, u))
                    .collect();
                max_weight_independent(self.g, &local, &self.w).0 <= self.m
            })
    }

    fn go(&mut self, v: usize, r: usize) -> bool {
        if r == 0 {
            return true;
        }
        let n = self.g.order();
        if v == n || self.suffix_cap[v] < r {
            return false;
        }
        let coverage = self.kind == Kind::D || self.triangle_free;
        if coverage && self.slack < r * self.suffix_min_deg[v] {
            return false;
        }
        let deg = self.g.degree(v);
        for x in (0..=self.caps[v].min(r)).rev() {
            if x > 0 {
                if coverage && self.g.neighbors(v).iter().any(|y| self.cov[y] + x > self.m) {
                    continue;
                }
                self.w[v] = x;
                if self.kind == Kind::Q && !self.q_ok_after(v) {
                    self.w[v] = 0;
                    continue;
                }
                for y in self.g.neighbors(v).iter() {
                    self.cov[y] += x;
                }
                self.slack = self.slack.saturating_sub(x * deg);
            }
            if self.go(v + 1, r - x) {
                return true;
            }
            if x > 0 {
                for y in self.g.neighbors(v).iter() {
                    self.cov[y] -= x;
                }
                self.w[v] = 0;
                self.recompute_slack();
            }
        }
        false
    }

    fn recompute_slack(&mut self) {
        let m = self.m;
        self.slack = self.cov.iter().map(|&c| m.saturating_sub(c)).sum();
    }
}

/// Witness search on `g` itself. Per-vertex weights are capped at `c` for
/// `c = 1, 2, ..` so vectors with small entries are found first.
fn witness_direct(g: &Graph, m: usize, kind: Kind) -> Option<WeightVector> {
    let n = g.order();
    let full_caps: Vec<usize> = (0..n)
        .map(|v| match (kind, g.degree(v) == 0) {
            (Kind::D, false) | (Kind::Q, false) => m,
            (Kind::D, true) => 3 * m,
            (Kind::Q, true) => m + 1,
        })
        .collect();
    let mut suffix_min_deg = vec![usize::MAX; n + 1];
    for v in (0..n).rev() {
        suffix_min_deg[v] = suffix_min_deg[v + 1].min(g.degree(v));
    }
    let triangle_free = super::is_triangle_free(g);
    let top = *full_caps.iter().max().expect("non-empty");
    for c in 1..=top {
        let caps: Vec<usize> = full_caps.iter().map(|&x| x.min(c)).collect();
        let mut suffix_cap = vec![0; n + 1];
        for v in (0..n).rev() {
            suffix_cap[v] = suffix_cap[v + 1] + caps[v];
        }
        let mut s = Search {
            g,
            m,
            kind,
            triangle_free,
            caps,
            suffix_cap,
            suffix_min_deg: suffix_min_deg.clone(),
            cov: vec![0; n],
            w: vec![0; n],
            slack: n * m,
        };
        if s.go(0, 3 * m) {
            return Some(WeightVector { weights: s.w });
        }
    }
    None
}

fn witness(g: &Graph, m: usize, kind: Kind, mode: SearchMode) -> Option<WeightVector> {
    match mode {
        SearchMode::Direct => witness_direct(g, m, kind),
        SearchMode::Quotient => {
            let spec = BlowupSpec::from_twins(g);
            let p = twin_partition(g);
            witness_direct(&spec.base, m, kind).map(|wq| {
                let mut w = vec![0; g.order()];
                for (class, &x) in p.classes.iter().zip(&wq.weights) {
                    w[class[0]] = x;
                }
                WeightVector { weights: w }
            })
        }
    }
}

/// A weighting of total `3m` against D(m), if one exists.
pub fn d_witness_at(g: &Graph, m: usize, mode: SearchMode) -> Option<WeightVector> {
    witness(g, m, Kind::D, mode)
}

/// A weighting of total `3m` against Q(m), if one exists.
pub fn q_witness_at(g: &Graph, m: usize, mode: SearchMode) -> Option<WeightVector> {
    witness(g, m, Kind::Q, mode)
}

pub fn check_d(g: &Graph, k: usize) -> Result<DVerdict> {
    check_d_with(g, k, SearchMode::Quotient)
}

/// D(k): levels `m = 1..=k` are searched in order and the first witness wins.
pub fn check_d_with(g: &Graph, k: usize, mode: SearchMode) -> Result<DVerdict> {
    if k == 0 {
        return Err(Error::Precondition("level must be at least 1".into()));
    }
    for m in 1..=k {
        if let Some(w) = d_witness_at(g, m, mode) {
            return Ok(DVerdict {
                holds: false,
                level: m,
                witness: Some(w),
            });
        }
    }
    Ok(DVerdict {
        holds: true,
        level: k,
        witness: None,
    })
}

pub fn check_q(g: &Graph, k: usize) -> Result<QVerdict> {
    check_q_with(g, k, SearchMode::Quotient)
}

pub fn check_q_with(g: &Graph, k: usize, mode: SearchMode) -> Result<QVerdict> {
    if k == 0 {
        return Err(Error::Precondition("level must be at least 1".into()));
    }
    for m in 1..=k {
        if let Some(w) = q_witness_at(g, m, mode) {
            return Ok(QVerdict {
                holds: false,
                level: m,
                witness: Some(w),
            });
        }
    }
    Ok(QVerdict {
        holds: true,
        level: k,
        witness: None,
    })
}

/// Maximal triangle-free and D(4).
pub fn in_class_d4(g: &Graph) -> bool {
    super::is_maximal_triangle_free(g) && check_d(g, 4).map(|v| v.holds).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{andrasfai, fig41, petersen};

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)).unwrap()
    }

    #[test]
    fn c6_fails_d2_with_all_ones() {
        let v = check_d(&cycle(6), 2).unwrap();
        assert!(!v.holds);
        assert_eq!(v.level, 2);
        assert_eq!(v.witness, Some(WeightVector::uniform(6, 1)));
    }

    #[test]
    fn c5_satisfies_d4() {
        assert!(check_d(&cycle(5), 4).unwrap().holds);
        assert!(
            check_d_with(&cycle(5), 4, SearchMode::Direct)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn fig41_fails_d4() {
        let g = fig41();
        let v = check_d(&g, 4).unwrap();
        assert!(!v.holds);
        // Six vertices already meet every neighbourhood at most twice.
        assert_eq!(v.level, 2);
        let w = v.witness.unwrap();
        assert_eq!((w.total(), d_coverage(&g, &w).0), (6, 2));
        assert!(d_witness_at(&g, 3, SearchMode::Direct).is_none());
        assert_eq!(
            d_witness_at(&g, 4, SearchMode::Direct),
            Some(WeightVector::uniform(12, 1))
        );
        assert!(q_certificate(&g, &WeightVector::uniform(12, 1), 4).is_none());
        assert!(!check_q(&g, 4).unwrap().holds);
    }

    #[test]
    fn k2_satisfies_q1() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(check_q(&k2, 1).unwrap().holds);
    }

    #[test]
    fn class_d4_membership() {
        assert!(in_class_d4(&andrasfai(5).unwrap()));
        assert!(!in_class_d4(&cycle(6)));
        assert!(!in_class_d4(&petersen()));
    }

    #[test]
    fn isolated_vertex_takes_full_weight() {
        let g = Graph::empty(1).unwrap();
        let v = check_d(&g, 1).unwrap();
        assert_eq!(v.witness, Some(WeightVector::new(vec![3])));
    }

    #[test]
    fn q_certificate_shapes() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let c = q_certificate(&k2, &WeightVector::new(vec![3, 0]), 1).unwrap();
        assert_eq!(
            (c.independent, c.budget, c.common_neighbor),
            (vec![0], 3, None)
        );
        let c = q_certificate(&k2, &WeightVector::new(vec![2, 1]), 1).unwrap();
        assert_eq!(c.budget, 2);
        assert_eq!(c.common_neighbor, Some(1));
    }
}
