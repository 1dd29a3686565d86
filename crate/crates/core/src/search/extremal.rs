//! Best template blow-ups with bounded independence number.
//!
//! For a template `T` and target order `n`, every weighting `w ≥ 1` with
//! `Σ w = n` whose heaviest maximal independent set weighs at most `s` gives a
//! triangle-free blow-up with `α ≤ s`. Its edge count is `Σ_{uv ∈ E(T)} w(u)w(v)`.

use super::enumerate::maximal_independent_sets;
use crate::error::{Error, Result};
use crate::families::{extremal_formula, VegaId};
use crate::recognition::Family;
use crate::twins::BlowupSpec;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicUsize, Ordering};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalResult {
    pub n: usize,
    pub s: usize,
    pub k: usize,
    pub formula_value: u128,
    pub best_found: usize,
    pub witness_family: Option<Family>,
    pub witness: Option<BlowupSpec>,
    /// Every searched template whose best blow-up reaches `best_found`.
    pub attaining: Vec<Family>,
}

/// Templates searched for `(n, s)`: `Γ_{k-1}, Γ_k, Γ_{k+1}` then every Vega
/// graph of order at most `n`.
pub fn extremal_templates(n: usize, s: usize) -> Vec<Family> {
    let k = s.div_ceil(3 * s - n);
    let mut out: Vec<Family> = (k.saturating_sub(1).max(1)..=k + 1)
        .map(Family::Andrasfai)
        .filter(|f| f.order() <= n)
        .collect();
    let mut i = 2;
    while 3 * i + 5 <= n {
        out.extend(
            VegaId::variants(i)
                .into_iter()
                .filter(|id| id.order() <= n)
                .map(Family::Vega),
        );
        i += 1;
    }
    out
}

struct TemplateSearch<'a> {
    n: usize,
    s: usize,
    t: usize,
    /// Neighbours of each vertex with a smaller index.
    back: Vec<Vec<usize>>,
    /// Maximal independent sets containing each vertex.
    sets_of: Vec<Vec<usize>>,
    /// Members of each set with index greater than `v`, per `v`.
    later: Vec<Vec<usize>>,
    set_sum: Vec<usize>,
    /// Vertices whose whole neighbourhood is assigned once `v` is.
    closes_at: Vec<Vec<usize>>,
    adj: &'a crate::graph::Graph,
    w: Vec<usize>,
    global: &'a AtomicUsize,
    best: usize,
    best_w: Option<Vec<usize>>,
    cap: usize,
}

impl TemplateSearch<'_> {
    fn go(
        &mut self,
        v: usize,
        used: usize,
        edges: usize,
        closed_mass: usize,
        closed_weight: usize,
    ) {
        if self.best >= self.cap {
            return;
        }
        if v == self.t {
            if used == self.n && (self.best_w.is_none() || edges > self.best) {
                self.best = edges;
                self.best_w = Some(self.w.clone());
                self.global.fetch_max(edges, Ordering::Relaxed);
            }
            return;
        }
        // Closed vertices have exact degree; the rest contribute at most s each.
        let bound = (closed_mass + (self.n - closed_weight) * self.s) / 2;
        if bound < self.global.load(Ordering::Relaxed) || bound < self.best {
            return;
        }
        let remaining_after = self.t - v - 1;
        let mut hi = self.n - used - remaining_after;
        for &m in &self.sets_of[v] {
            let room = self.s as isize - self.set_sum[m] as isize - self.later[m][v] as isize;
            hi = hi.min(room.max(0) as usize);
        }
        if v == self.t - 1 && hi < self.n - used {
            return;
        }
        let lo = if v == self.t - 1 { self.n - used } else { 1 };
        for x in (lo..=hi).rev() {
            self.w[v] = x;
            for &m in &self.sets_of[v] {
                self.set_sum[m] += x;
            }
            let gained: usize = self.back[v].iter().map(|&u| self.w[u] * x).sum();
            let (mut cm, mut cw) = (closed_mass, closed_weight);
            for &c in &self.closes_at[v] {
                let d: usize = self.adj.neighbors(c).iter().map(|u| self.w[u]).sum();
                cm += self.w[c] * d;
                cw += self.w[c];
            }
            self.go(v + 1, used + x, edges + gained, cm, cw);
            for &m in &self.sets_of[v] {
                self.set_sum[m] -= x;
            }
        }
        self.w[v] = 0;
    }
}

/// Best blow-up of one template, with the first weighting reaching it.
fn best_for(
    family: Family,
    n: usize,
    s: usize,
    global: &AtomicUsize,
) -> Result<Option<(usize, Vec<usize>)>> {
    let g = family.template()?;
    let t = g.order();
    if t > n {
        return Ok(None);
    }
    let sets = maximal_independent_sets(&g);
    let mut sets_of = vec![Vec::new(); t];
    let mut later = vec![vec![0; t]; sets.len()];
    for (m, set) in sets.iter().enumerate() {
        for &v in set {
            sets_of[v].push(m);
        }
        for v in 0..t {
            later[m][v] = set.iter().filter(|&&u| u > v).count();
        }
    }
    let mut closes_at = vec![Vec::new(); t];
    for c in 0..t {
        let last = g
            .neighbors(c)
            .iter()
            .chain(std::iter::once(c))
            .max()
            .expect("non-empty");
        closes_at[last].push(c);
    }
    let back = (0..t)
        .map(|v| g.neighbors(v).iter().filter(|&u| u < v).collect())
        .collect();
    let mut search = TemplateSearch {
        n,
        s,
        t,
        back,
        sets_of,
        later,
        set_sum: vec![0; sets.len()],
        closes_at,
        adj: &g,
        w: vec![0; t],
        global,
        best: 0,
        best_w: None,
        cap: n * s / 2,
    };
    search.go(0, 0, 0, 0, 0);
    Ok(search.best_w.map(|w| (search.best, w)))
}

pub fn search_extremal(n: usize, s: usize) -> Result<ExtremalResult> {
    if 3 * s <= n || 2 * s > n {
        return Err(Error::Domain(format!(
            "s = {s} outside (n/3, n/2] for n = {n}"
        )));
    }
    if n > 30 {
        return Err(Error::ResourceGuard(format!(
            "extremal search supports n ≤ 30, got {n}"
        )));
    }
    let formula_value = extremal_formula(n as u64, s as u64)?;
    let k = s.div_ceil(3 * s - n);
    let templates = extremal_templates(n, s);
    let global = AtomicUsize::new(0);
    let found: Vec<Option<(usize, Vec<usize>)>> = templates
        .par_iter()
        .map(|&f| best_for(f, n, s, &global))
        .collect::<Result<_>>()?;
    let best_found = found.iter().flatten().map(|(e, _)| *e).max().unwrap_or(0);
    let mut attaining = Vec::new();
    let mut witness = None;
    for (f, r) in templates.iter().zip(&found) {
        if let Some((e, w)) = r {
            if *e == best_found {
                attaining.push(*f);
                if witness.is_none() {
                    witness = Some((*f, BlowupSpec::new(f.template()?, w.clone())?));
                }
            }
        }
    }
    Ok(ExtremalResult {
        n,
        s,
        k,
        formula_value,
        best_found,
        witness_family: witness.as_ref().map(|(f, _)| *f),
        witness: witness.map(|(_, w)| w),
        attaining,
    })
}
