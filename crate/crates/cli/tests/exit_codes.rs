use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tfgraph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tfgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn gen(args: &[&str]) -> String {
    let out = tfgraph(args, "");
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn c5_satisfies_d4() {
    let c5 = gen(&["gen", "andrasfai", "--k", "2"]);
    let out = tfgraph(&["check", "--d", "4"], &c5);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["d"]["holds"], true);
}

#[test]
fn fig41_fails_d4_with_witness() {
    let g = gen(&["gen", "fig41"]);
    let out = tfgraph(&["check", "--d", "4"], &g);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["result"]["d"]["holds"], false);
    assert!(r["result"]["d"]["witness"]["weights"].is_array());
}

#[test]
fn haggkvist_is_recognised() {
    let g = gen(&["gen", "haggkvist", "--format", "graph6"]);
    let out = tfgraph(&["recognize"], &g);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["family"], "vega(2,1,1)");
    assert_eq!(r["result"]["certify"], true);
}

#[test]
fn petersen_is_refuted() {
    let petersen = "p tf 10\n".to_string()
        + &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (6, 9),
            (6, 8),
            (5, 8),
        ]
        .iter()
        .map(|(u, v)| format!("e {u} {v}\n"))
        .collect::<String>();
    assert_eq!(tfgraph(&["recognize"], &petersen).status.code(), Some(1));
    assert_eq!(
        tfgraph(&["check", "--tf", "--maximal", "--alpha"], &petersen)
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(tfgraph(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(tfgraph(&["check", "--d", "x"], "").status.code(), Some(2));
    assert_eq!(
        tfgraph(&["paper-verify", "--check", "nope"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tfgraph(&["check"], "p tf 2\ne 0 1\ne 1 0\n").status.code(),
        Some(3)
    );
    assert_eq!(
        tfgraph(&["check"], "not a graph at all").status.code(),
        Some(3)
    );
    assert_eq!(
        tfgraph(&["gen", "vega", "--i", "1"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        tfgraph(&["extremal", "--n", "10", "--s", "2"], "")
            .status
            .code(),
        Some(3)
    );
    assert_eq!(tfgraph(&["census", "--n", "13"], "").status.code(), Some(3));
    assert_eq!(tfgraph(&["--help"], "").status.code(), Some(0));
}

#[test]
fn triangle_fails_tf_check() {
    let out = tfgraph(&["check", "--tf"], "p tf 3\ne 0 1\ne 1 2\ne 0 2\n");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        json(&out)["result"]["triangle_free"]["triangle"],
        serde_json::json!([0, 1, 2])
    );
}

#[test]
fn reports_are_byte_identical() {
    let a = tfgraph(&["paper-verify", "--check", "no_small_neighborhood"], "");
    let b = tfgraph(&["paper-verify", "--check", "no_small_neighborhood"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("elapsed"));
    let t = tfgraph(
        &["--timings", "paper-verify", "--check", "kappa_blowup"],
        "",
    );
    assert!(String::from_utf8_lossy(&t.stdout).contains("elapsed_ms"));
}

#[test]
fn census_assert_and_blowup() {
    let out = tfgraph(&["census", "--n", "8", "--assert", "--jobs", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["orders"][6]["maximal_triangle_free"], 10);
    let c5 = gen(&["gen", "andrasfai", "--k", "2"]);
    let out = tfgraph(&["gen", "blowup", "--weights", "1,2,1,2,1"], &c5);
    assert_eq!(out.status.code(), Some(0));
    let g = String::from_utf8(out.stdout).unwrap();
    assert!(g.starts_with("p tf 7\n"));
    let out = tfgraph(&["recognize"], &g);
    assert_eq!(json(&out)["result"]["family"], "andrasfai(2)");
}

#[test]
fn dot_uses_family_labels() {
    let dot = gen(&["gen", "vega", "--i", "2", "--format", "dot"]);
    assert!(dot.starts_with("graph \"vega(2,0,0)\""));
    assert!(dot.contains("label=\"x\""));
    assert!(dot.contains("label=\"y\""));
    let dot = gen(&["gen", "fig41", "--format", "dot"]);
    assert!(dot.contains("label=\"b4\""));
}

#[test]
fn extremal_search_report() {
    let out = tfgraph(&["extremal", "--n", "20", "--s", "8", "--search"], "");
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["formula"], 80);
    assert_eq!(r["result"]["search"]["attains_formula"], true);
}

#[test]
fn output_file_and_input_file() {
    let dir = std::env::temp_dir().join(format!("tfgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");
    let p = path.to_str().unwrap();
    assert_eq!(
        tfgraph(
            &[
                "gen",
                "andrasfai",
                "--k",
                "2",
                "--format",
                "graph6",
                "-o",
                p
            ],
            ""
        )
        .status
        .code(),
        Some(0)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let g = tfgraph_cli::formats::parse_graph6(text.trim_end()).unwrap();
    assert_eq!(g, tfgraph::families::andrasfai(2).unwrap());
    let out = tfgraph(&["check", "--maximal", "-i", p], "");
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}
