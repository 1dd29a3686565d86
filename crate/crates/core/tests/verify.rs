use tfgraph::families::cube;
use tfgraph::verify::*;
use tfgraph::Error;

#[test]
fn every_registered_check_passes() {
    let reports = run_checks("all", &CheckParams::default()).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(names, CHECKS.to_vec());
    for r in &reports {
        assert!(r.passed, "{}: {:?}", r.name, r.counterexample);
        assert!(r.counterexample.is_none());
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run_check("no_small_neighborhood", &CheckParams::default()).unwrap();
    let b = run_check("no_small_neighborhood", &CheckParams::default()).unwrap();
    assert_eq!(a.seed, Some(seed_for("no_small_neighborhood")));
    assert_eq!(
        (a.findings, a.seed, a.passed),
        (b.findings, b.seed, b.passed)
    );
}

#[test]
fn counterexamples_replay() {
    // The cube itself violates the cube lemma's conclusion.
    let detail = recheck_graph("cube_lemma", &cube()).unwrap();
    assert!(detail.is_some());
    assert!(matches!(
        recheck_graph("nope", &cube()),
        Err(Error::UnknownCheck(_))
    ));
    assert!(recheck_graph("edge_identity", &cube()).is_err());
}

#[test]
fn guards_and_unknown_names() {
    assert!(matches!(
        run_check("missing", &CheckParams::default()),
        Err(Error::UnknownCheck(_))
    ));
    let big = CheckParams {
        range: Some((2, 40)),
        ..CheckParams::default()
    };
    assert!(matches!(
        run_check("c310", &big),
        Err(Error::ResourceGuard(_))
    ));
}

#[test]
fn ext_sets_on_catalog() {
    let (ups, _) = tfgraph::families::mycielski_grotzsch();
    for e in instance_catalog(3).unwrap() {
        for emb in tfgraph::induced_embeddings(&e.graph, &ups).take(50) {
            for i in 0..5 {
                let ext = ExtSet::new(&e.graph, &emb, i);
                assert!(
                    ext.vertices
                        .iter()
                        .all(|&q| e.graph.has_edge(q, ext.apex())),
                    "{}",
                    e.label
                );
            }
        }
    }
}
