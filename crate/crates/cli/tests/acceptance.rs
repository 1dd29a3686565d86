//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Derived values are recomputed with the plain-loop oracles below.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;
use tfgraph::families::*;
use tfgraph::properties::*;
use tfgraph::recognition::{certify, recognize, Family, Recognition, Refutation};
use tfgraph::search::{census, enumerate_triangle_free, search_extremal};
use tfgraph::verify::{run_checks, CheckParams};
use tfgraph::{
    automorphism_order, blowup, find_induced, isomorphic, quotient, twin_partition, BlowupSpec,
    Graph,
};
use tfgraph_cli::formats::{parse_elist, parse_graph6, write_elist, write_graph6};
use tfgraph_cli::report::RunReport;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn brute_tf(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            !g.has_edge(a, b) || (b + 1..n).all(|c| !(g.has_edge(b, c) && g.has_edge(a, c)))
        })
    })
}

fn brute_maximal(g: &Graph) -> bool {
    let n = g.order();
    brute_tf(g)
        && (0..n).all(|u| {
            (u + 1..n)
                .all(|v| g.has_edge(u, v) || (0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w)))
        })
}

fn brute_twin_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| (0..n).any(|w| g.has_edge(u, w) != g.has_edge(v, w))))
}

fn brute_alpha(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if chosen.len() + (g.order() - v) <= *best {
            return;
        }
        if v == g.order() {
            *best = chosen.len();
            return;
        }
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
            go(g, v + 1, chosen, best);
            chosen.pop();
        }
        go(g, v + 1, chosen, best);
    }
    let mut best = 0;
    go(g, 0, &mut Vec::new(), &mut best);
    best
}

fn is_d_witness(g: &Graph, w: &[usize], m: usize) -> bool {
    let n = g.order();
    w.len() == n
        && w.iter().sum::<usize>() == 3 * m
        && (0..n).all(|y| {
            (0..n)
                .filter(|&v| g.has_edge(y, v))
                .map(|v| w[v])
                .sum::<usize>()
                <= m
        })
}

fn is_q_witness(g: &Graph, w: &[usize], m: usize) -> bool {
    let n = g.order();
    if w.len() != n || w.iter().sum::<usize>() != 3 * m {
        return false;
    }
    let supp: Vec<usize> = (0..n).filter(|&v| w[v] > 0).collect();
    for mask in 1u32..(1 << supp.len()) {
        let set: Vec<usize> = (0..supp.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| supp[i])
            .collect();
        if set.iter().any(|&a| set.iter().any(|&b| g.has_edge(a, b))) {
            continue;
        }
        let weight: usize = set.iter().map(|&v| w[v]).sum();
        if weight >= m + 2
            || (weight == m + 1 && (0..n).any(|y| set.iter().all(|&v| g.has_edge(y, v))))
        {
            return false;
        }
    }
    true
}

/// Induced hexagon by chordless path extension from the least vertex.
fn brute_induced_c6(g: &Graph) -> bool {
    fn go(g: &Graph, path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        if path.len() == 6 {
            return g.has_edge(last, path[0]);
        }
        for v in path[0] + 1..g.order() {
            if path.contains(&v) || !g.has_edge(last, v) {
                continue;
            }
            let chord = path[..path.len() - 1]
                .iter()
                .enumerate()
                .any(|(i, &u)| g.has_edge(u, v) && !(i == 0 && path.len() == 5));
            if !chord {
                path.push(v);
                if go(g, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.order()).any(|s| go(g, &mut vec![s]))
}

fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)).unwrap()
}

fn random_tf(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    Graph::from_fn(n, |u, v| adj[u][v]).unwrap()
}

fn criterion_1() -> Outcome {
    for k in 1..=8 {
        let g = andrasfai(k).map_err(|e| e.to_string())?;
        ensure!(g.order() == 3 * k - 1, "Γ_{k}: order {}", g.order());
        ensure!(
            (0..g.order()).all(|v| g.degree(v) == k),
            "Γ_{k} not {k}-regular"
        );
        ensure!(brute_maximal(&g), "Γ_{k} not maximal triangle-free");
        ensure!(brute_twin_free(&g), "Γ_{k} has twins");
        ensure!(!brute_induced_c6(&g), "Γ_{k} has an induced hexagon");
        let d = check_d(&g, 4).map_err(|e| e.to_string())?;
        ensure!(d.holds, "Γ_{k} fails D(4) at level {}", d.level);
    }
    let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    ensure!(
        isomorphic(&andrasfai(1).unwrap(), &k2).is_some(),
        "Γ_1 is not K2"
    );
    ensure!(
        isomorphic(&andrasfai(2).unwrap(), &cycle(5)).is_some(),
        "Γ_2 is not C5"
    );
    Ok("Γ_1..Γ_8".into())
}

fn criterion_2() -> Outcome {
    let (ups, _) = mycielski_grotzsch();
    let hex = cycle(6);
    let mut count = 0;
    for i in 2..=5 {
        for id in VegaId::variants(i) {
            let (g, l) = vega(id).map_err(|e| e.to_string())?;
            ensure!(brute_maximal(&g), "{id} not maximal triangle-free");
            ensure!(brute_twin_free(&g), "{id} has twins");
            ensure!(check_d(&g, 4).unwrap().holds, "{id} fails D(4)");
            ensure!(check_q(&g, 4).unwrap().holds, "{id} fails Q(4)");
            let c6 = find_induced(&g, &hex).ok_or(format!("{id}: no induced hexagon"))?;
            ensure!(
                c6.is_induced(&g, &hex) && brute_induced_c6(&g),
                "{id}: hexagon not induced"
            );
            let u = find_induced(&g, &ups).ok_or(format!("{id}: no induced Υ"))?;
            ensure!(u.is_induced(&g, &ups), "{id}: Υ copy not induced");
            if id.mu == 0 && id.nu == 0 {
                for v in 0..g.order() {
                    let want = if [l.a, l.b, l.u, l.v].contains(&v) {
                        i + 3
                    } else if v == l.x || Some(v) == l.y {
                        4
                    } else {
                        i + 2
                    };
                    ensure!(
                        g.degree(v) == want,
                        "{id}: degree of {v} is {}",
                        g.degree(v)
                    );
                }
            }
            for m in named_maps(id).map_err(|e| e.to_string())? {
                let s = vega(m.source).unwrap().0;
                let t = vega(m.target).unwrap().0;
                let p = m.perm.as_slice();
                let ok = (0..s.order())
                    .all(|a| (0..s.order()).all(|b| s.has_edge(a, b) == t.has_edge(p[a], p[b])));
                ensure!(ok, "{} on {id} is not an isomorphism", m.name);
            }
            count += 1;
        }
    }
    let smallest = vega(VegaId::new(2, 1, 1).unwrap()).unwrap().0;
    ensure!(
        isomorphic(&smallest, &ups).is_some(),
        "Υ_2^11 is not the Grötzsch graph"
    );
    for ((i, mu, nu), order) in [
        ((2, 0, 0), 8),
        ((2, 1, 1), 10),
        ((3, 0, 0), 4),
        ((3, 0, 1), 4),
        ((3, 1, 0), 2),
        ((3, 1, 1), 2),
    ] {
        let g = vega(VegaId::new(i, mu, nu).unwrap()).unwrap().0;
        let found = automorphism_order(&g);
        ensure!(
            found == order,
            "vega({i},{mu},{nu}): |Aut| = {found}, expected {order}"
        );
    }
    Ok(format!("{count} Vega graphs"))
}

fn criterion_3() -> Outcome {
    let g = blowup(&haggkvist_spec()).map_err(|e| e.to_string())?;
    ensure!(g.order() == 29, "order {}", g.order());
    ensure!((0..29).all(|v| g.degree(v) == 10), "not 10-regular");
    ensure!(brute_alpha(&g) == 10, "α = {}", brute_alpha(&g));
    ensure!(brute_maximal(&g), "not maximal triangle-free");
    let rec = recognize(&g).map_err(|e| e.to_string())?;
    let cert = rec.certificate().ok_or("not recognised")?;
    let want = Family::Vega(VegaId::new(2, 1, 1).unwrap());
    ensure!(cert.family == want, "recognised as {}", cert.family);
    ensure!(certify(&g, cert), "certificate rejected");
    Ok("29 vertices, 10-regular, α = 10, vega(2,1,1)".into())
}

fn criterion_4() -> Outcome {
    let (ups, _) = mycielski_grotzsch();
    let mut total = 0;
    for n in 2..=10 {
        let report = census(n).map_err(|e| e.to_string())?;
        ensure!(
            report.violations.is_empty(),
            "n={n}: {} violations",
            report.violations.len()
        );
        for row in &report.rows {
            let g = &row.graph;
            ensure!(brute_maximal(g), "n={n}: census row not maximal");
            let d4 = check_d(g, 4).unwrap().holds;
            let q4 = check_q(g, 4).unwrap().holds;
            let rec = recognize(g).unwrap();
            let recognised = matches!(rec, Recognition::Certified(ref c) if certify(g, c));
            let andrasfai = rec.family().is_some_and(|f| f.is_andrasfai());
            let c6 = brute_induced_c6(g);
            let d3 = check_d(g, 3).unwrap().holds;
            ensure!(
                d4 == recognised,
                "n={n}: D(4) {d4} but recognised {recognised}: {:?}",
                g.edges()
            );
            ensure!(q4 == d4, "n={n}: Q(4) {q4} but D(4) {d4}: {:?}", g.edges());
            ensure!(
                !c6 == andrasfai,
                "n={n}: hexagon-free {} but Andrásfai {andrasfai}",
                !c6
            );
            ensure!(
                !(d3 && c6) || find_induced(g, &ups).is_some(),
                "n={n}: D(3) with a hexagon but no Υ: {:?}",
                g.edges()
            );
            ensure!(
                row.d4 == d4 && row.q4 == q4 && row.induced_c6 == c6,
                "n={n}: row disagrees"
            );
        }
        total += report.rows.len();
    }
    Ok(format!(
        "{total} maximal triangle-free graphs, n ≤ 10, 0 violations"
    ))
}

fn criterion_5() -> Outcome {
    let f = fig41();
    ensure!(brute_tf(&f), "fig41 has a triangle");
    ensure!(
        (0..f.order()).all(|v| f.degree(v) == 4),
        "fig41 not 4-regular"
    );
    ensure!(brute_alpha(&f) == 4, "fig41 α = {}", brute_alpha(&f));
    let d = check_d(&f, 4).unwrap();
    ensure!(!d.holds, "fig41 satisfies D(4)");
    let w = d.witness.as_ref().ok_or("fig41: no witness")?;
    ensure!(
        is_d_witness(&f, &w.weights, d.level),
        "fig41 witness invalid at level {}",
        d.level
    );
    let ones = d_witness_at(&f, 4, SearchMode::Quotient).ok_or("fig41: no level-4 witness")?;
    ensure!(
        ones.weights == vec![1; f.order()],
        "fig41 level-4 witness {:?}",
        ones.weights
    );
    ensure!(
        is_d_witness(&f, &ones.weights, 4),
        "all-ones weighting is not a witness"
    );
    for k in 1..=4 {
        let g = cayley_6k(k).unwrap();
        let d = check_d(&g, 2).unwrap();
        ensure!(!d.holds, "Cayley k={k} satisfies D(2)");
        let w = d.witness.ok_or(format!("Cayley k={k}: no witness"))?;
        ensure!(
            is_d_witness(&g, &w.weights, d.level),
            "Cayley k={k}: invalid witness"
        );
    }
    let p = petersen();
    match recognize(&p).map_err(|e| e.to_string())? {
        Recognition::Refuted(Refutation::DFourFails(v)) => {
            let w = v.witness.ok_or("Petersen: refutation without witness")?;
            ensure!(
                is_d_witness(&p, &w.weights, v.level),
                "Petersen witness invalid"
            );
        }
        other => return Err(format!("Petersen: {other:?}")),
    }
    Ok(format!(
        "fig41 fails D(4) at level {}; Cayley k ≤ 4 and Petersen refuted",
        d.level
    ))
}

fn criterion_6() -> Outcome {
    ensure!(extremal_formula(10, 5).unwrap() == 25, "formula(10, 5)");
    let r = search_extremal(10, 5).map_err(|e| e.to_string())?;
    ensure!(r.best_found == 25, "search(10, 5) found {}", r.best_found);
    ensure!(extremal_formula(20, 8).unwrap() == 80, "formula(20, 8)");
    let g = blowup(&BlowupSpec::uniform(andrasfai(2).unwrap(), 4).unwrap()).unwrap();
    ensure!(
        g.order() == 20 && g.edge_count() == 80,
        "balanced C5 blow-up has {} edges",
        g.edge_count()
    );
    ensure!(
        brute_tf(&g) && brute_alpha(&g) == 8,
        "balanced C5 blow-up α = {}",
        brute_alpha(&g)
    );
    let r = search_extremal(20, 8).map_err(|e| e.to_string())?;
    ensure!(r.best_found == 80, "search(20, 8) found {}", r.best_found);
    for n in (2..=40u64).step_by(2) {
        ensure!(
            extremal_formula(n, n / 2).unwrap() == (n * n / 4) as u128,
            "formula({n}, {})",
            n / 2
        );
    }
    Ok("25 and 80 attained; ⌊n²/4⌋ for even n ≤ 40".into())
}

fn criterion_7() -> Outcome {
    let reports = run_checks("all", &CheckParams::default()).map_err(|e| e.to_string())?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name.as_str())
        .collect();
    ensure!(failed.is_empty(), "failed checks: {}", failed.join(", "));
    Ok(format!("{} checks", reports.len()))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7466);
    for t in 0..100 {
        let n = rng.gen_range(1..=7);
        let g = random_tf(&mut rng, n);
        let w: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        let h = blowup(&BlowupSpec::new(g.clone(), w).unwrap()).unwrap();
        let a = check_d_with(&g, 3, SearchMode::Direct).unwrap();
        let b = check_d_with(&h, 3, SearchMode::Direct).unwrap();
        ensure!(
            (a.holds, a.level) == (b.holds, b.level),
            "blow-up pair {t} disagrees"
        );
    }
    for t in 0..100 {
        let n = rng.gen_range(1..=9);
        let g = random_tf(&mut rng, n);
        ensure!(
            quotient(&g, &twin_partition(&g))
                .map(|q| brute_twin_free(&q))
                .unwrap_or(false),
            "quotient {t} has twins"
        );
        for k in [2, 4] {
            let q = check_d_with(&g, k, SearchMode::Quotient).unwrap();
            let d = check_d_with(&g, k, SearchMode::Direct).unwrap();
            ensure!(
                (q.holds, q.level) == (d.holds, d.level),
                "D({k}) modes disagree on graph {t}"
            );
            let q = check_q_with(&g, k, SearchMode::Quotient).unwrap();
            let d = check_q_with(&g, k, SearchMode::Direct).unwrap();
            ensure!(
                (q.holds, q.level) == (d.holds, d.level),
                "Q({k}) modes disagree on graph {t}"
            );
            for v in [&q, &d] {
                if let Some(w) = &v.witness {
                    ensure!(
                        is_q_witness(&g, &w.weights, v.level),
                        "Q witness {t} invalid"
                    );
                }
            }
        }
        let d = check_d(&g, 4).unwrap();
        if let Some(w) = &d.witness {
            ensure!(
                is_d_witness(&g, &w.weights, d.level),
                "D witness {t} invalid"
            );
        }
    }
    let mut catalog = 0;
    for n in 1..=9 {
        for g in enumerate_triangle_free(n).unwrap() {
            let d = check_d(&g, 4).unwrap();
            let q = check_q(&g, 4).unwrap();
            ensure!(!d.holds || q.holds, "D(4) without Q(4): {:?}", g.edges());
            catalog += 1;
        }
    }
    for t in 0..200 {
        let n = rng.gen_range(1..=70);
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.3)).unwrap();
        ensure!(
            parse_elist(&write_elist(&g)).ok() == Some(g.clone()),
            "elist round trip {t}"
        );
        ensure!(
            parse_graph6(&write_graph6(&g)).ok() == Some(g.clone()),
            "graph6 round trip {t}"
        );
        let mut r = RunReport::new("check");
        r.result = serde_json::to_value(&g).unwrap();
        let back: RunReport = serde_json::from_str(&r.to_json()).map_err(|e| e.to_string())?;
        ensure!(back == r, "report round trip {t}");
    }
    Ok(format!(
        "100 blow-up pairs, 100 quotient checks, {catalog} graphs for D ⇒ Q, 200 round trips"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Andrásfai graphs", criterion_1),
        ("Vega graphs", criterion_2),
        ("Häggkvist blow-up", criterion_3),
        ("census n ≤ 10", criterion_4),
        ("counterexamples", criterion_5),
        ("extremal edge counts", criterion_6),
        ("structural check registry", criterion_7),
        ("property suites", criterion_8),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {}: {name}: {msg} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
