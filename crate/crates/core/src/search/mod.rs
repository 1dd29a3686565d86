//! Exhaustive enumeration, the classification census, the D(3)/D(4) hunt and the
//! extremal template search.

mod enumerate;
mod extremal;

pub use enumerate::{
    brute_force_catalogue, enumerate_maximal_tf, enumerate_triangle_free, maximal_independent_sets,
    Enumerator, GUARD_ORDER,
};
pub use extremal::{extremal_templates, search_extremal, ExtremalResult};

use crate::embed::find_induced;
use crate::error::{Error, Result};
use crate::families::mycielski_grotzsch;
use crate::graph::Graph;
use crate::properties::{check_d, check_d_with, check_q, SearchMode};
use crate::recognition::{certify, recognize, Family, Recognition, Refutation};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub graph: Graph,
    pub order: usize,
    pub d2: bool,
    pub d3: bool,
    pub d4: bool,
    pub q4: bool,
    pub recognized: Option<Family>,
    pub induced_c6: bool,
    pub contains_upsilon: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusViolation {
    pub graph: Graph,
    pub invariant: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub rows: Vec<CensusRow>,
    pub violations: Vec<CensusViolation>,
}

fn hexagon() -> Graph {
    Graph::from_fn(6, |u, v| v == u + 1 || (u == 0 && v == 5)).expect("static order")
}

fn classify(g: &Graph) -> Result<(CensusRow, Vec<String>)> {
    let d = check_d(g, 4)?;
    let fails_at = if d.holds { usize::MAX } else { d.level };
    let q4 = check_q(g, 4)?.holds;
    let rec = recognize(g)?;
    let induced_c6 = find_induced(g, &hexagon()).is_some();
    let contains_upsilon = g.order() >= 11 && find_induced(g, &mycielski_grotzsch().0).is_some();
    let row = CensusRow {
        graph: g.clone(),
        order: g.order(),
        d2: fails_at > 2,
        d3: fails_at > 3,
        d4: d.holds,
        q4,
        recognized: rec.family(),
        induced_c6,
        contains_upsilon,
    };
    let mut bad = Vec::new();
    let recognized = row.recognized.is_some();
    if row.d4 != recognized {
        bad.push("d4_iff_recognized".to_string());
    }
    if row.q4 != recognized {
        bad.push("q4_iff_recognized".to_string());
    }
    if !row.induced_c6 != row.recognized.is_some_and(|f| f.is_andrasfai()) {
        bad.push("no_c6_iff_andrasfai".to_string());
    }
    if row.d3 && row.induced_c6 && !row.contains_upsilon {
        bad.push("d3_c6_implies_upsilon".to_string());
    }
    if row.d3 && !row.contains_upsilon && !row.recognized.is_some_and(|f| f.is_andrasfai()) {
        bad.push("d3_upsilon_free_implies_andrasfai".to_string());
    }
    match &rec {
        Recognition::Certified(c) if !certify(g, c) => bad.push("certify".to_string()),
        Recognition::Refuted(Refutation::Inconsistent(_)) => bad.push("inconsistent".to_string()),
        Recognition::Refuted(Refutation::NotMaximalTF(_)) => bad.push("not_maximal".to_string()),
        _ => {}
    }
    Ok((row, bad))
}

/// Classifies every maximal triangle-free graph of order `n` and records each
/// classification invariant that fails.
pub fn census_with(enumerator: &mut Enumerator, n: usize) -> Result<CensusReport> {
    let graphs = enumerator.maximal_triangle_free(n)?;
    let classified: Vec<(CensusRow, Vec<String>)> =
        graphs.par_iter().map(classify).collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(classified.len());
    let mut violations = Vec::new();
    for (row, bad) in classified {
        for invariant in bad {
            violations.push(CensusViolation {
                graph: row.graph.clone(),
                invariant,
            });
        }
        rows.push(row);
    }
    Ok(CensusReport {
        n,
        rows,
        violations,
    })
}

pub fn census(n: usize) -> Result<CensusReport> {
    census_with(&mut Enumerator::new(), n)
}

/// Maximal triangle-free graphs with `2 ≤ n ≤ max_n` satisfying D(3) but not
/// D(4). Hits are re-checked on the input graph without twin reduction.
pub fn hunt_conjecture(max_n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    let mut e = Enumerator::new().allow_large(allow_large);
    let mut hits = Vec::new();
    for n in 2..=max_n {
        let graphs = e.maximal_triangle_free(n)?;
        let found: Vec<Option<Graph>> = graphs
            .par_iter()
            .map(|g| -> Result<Option<Graph>> {
                let v = check_d(g, 4)?;
                if v.holds || v.level < 4 {
                    return Ok(None);
                }
                let again = check_d_with(g, 4, SearchMode::Direct)?;
                if again.holds || again.level != 4 {
                    return Err(Error::Internal(
                        "quotient and direct D searches disagree".into(),
                    ));
                }
                Ok(Some(g.clone()))
            })
            .collect::<Result<_>>()?;
        hits.extend(found.into_iter().flatten());
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census_is_clean() {
        let mut e = Enumerator::new();
        for n in 2..=6 {
            let r = census_with(&mut e, n).unwrap();
            assert!(r.violations.is_empty(), "{:?}", r.violations);
        }
    }

    #[test]
    fn five_vertex_rows() {
        let r = census(5).unwrap();
        let fams: Vec<Option<Family>> = r.rows.iter().map(|row| row.recognized).collect();
        assert!(fams.contains(&Some(Family::Andrasfai(2))));
        assert_eq!(
            fams.iter()
                .filter(|f| **f == Some(Family::Andrasfai(1)))
                .count(),
            2
        );
    }

    #[test]
    fn hunt_small_is_empty() {
        assert!(hunt_conjecture(5, false).unwrap().is_empty());
    }
}
