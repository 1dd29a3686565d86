use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Size of a clique cover of `p` built greedily; an upper bound on the
/// independence number of `g[p]`.
fn clique_cover_bound(g: &Graph, p: &VertexSet) -> usize {
    let mut rest = p.clone();
    let mut cliques = 0;
    while let Some(v) = rest.first() {
        let mut cand = rest.intersection(g.neighbors(v));
        rest.remove(v);
        while let Some(u) = cand.first() {
            rest.remove(u);
            cand.remove(u);
            cand.intersect_with(g.neighbors(u));
        }
        cliques += 1;
    }
    cliques
}

fn greedy_independent(g: &Graph) -> Vec<usize> {
    let mut p = g.all_vertices();
    let mut out = Vec::new();
    while !p.is_empty() {
        let v = p
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection_len(&p), v))
            .expect("non-empty");
        out.push(v);
        p.remove(v);
        p.difference_with(g.neighbors(v));
    }
    out
}

fn branch(g: &Graph, p: VertexSet, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if p.is_empty() {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    if cur.len() + clique_cover_bound(g, &p) <= best.len() {
        return;
    }
    let v = p
        .iter()
        .max_by_key(|&v| (g.neighbors(v).intersection_len(&p), std::cmp::Reverse(v)))
        .expect("non-empty");
    if !g.neighbors(v).intersects(&p) {
        // `p` is independent.
        let before = cur.len();
        cur.extend(p.iter());
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        cur.truncate(before);
        return;
    }
    let mut with = p.difference(g.neighbors(v));
    with.remove(v);
    cur.push(v);
    branch(g, with, cur, best);
    cur.pop();
    let mut without = p;
    without.remove(v);
    branch(g, without, cur, best);
}

/// Exact independence number with a maximum independent set (sorted).
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    let mut best = greedy_independent(g);
    branch(g, g.all_vertices(), &mut Vec::new(), &mut best);
    best.sort_unstable();
    (best.len(), best)
}

/// Maximum total weight of an independent subset of `set`, with the subset.
/// Intended for small sets.
pub fn max_weight_independent(g: &Graph, set: &[usize], weights: &[usize]) -> (usize, Vec<usize>) {
    struct Ctx<'a> {
        g: &'a Graph,
        set: &'a [usize],
        w: &'a [usize],
        cur: Vec<usize>,
        best: (usize, Vec<usize>),
    }
    fn go(c: &mut Ctx<'_>, i: usize, acc: usize, rest: usize) {
        if acc + rest <= c.best.0 {
            return;
        }
        if i == c.set.len() {
            c.best = (acc, c.cur.clone());
            return;
        }
        let v = c.set[i];
        let rest = rest - c.w[v];
        if c.cur.iter().all(|&u| !c.g.has_edge(u, v)) {
            c.cur.push(v);
            go(c, i + 1, acc + c.w[v], rest);
            c.cur.pop();
        }
        go(c, i + 1, acc, rest);
    }
    let total = set.iter().map(|&v| weights[v]).sum();
    let mut ctx = Ctx {
        g,
        set,
        w: weights,
        cur: Vec::new(),
        best: (0, Vec::new()),
    };
    go(&mut ctx, 0, 0, total);
    ctx.best
}
