//! Command-line front end: argument parsing, graph input and output, and
//! report emission. The binary is a thin wrapper around [`run`].

pub mod formats;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use formats::{read_graph, write_dot, write_elist, write_graph6, FormatError};
use report::RunReport;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;
use tfgraph::families::{self, VegaId, FIG41_NAMES};
use tfgraph::properties::{
    check_d_with, check_q_with, find_triangle, independence_number, maximality_failure, SearchMode,
};
use tfgraph::recognition::{certify, recognize, Recognition};
use tfgraph::search::{census_with, hunt_conjecture, search_extremal, Enumerator};
use tfgraph::verify::{run_checks, CheckParams};
use tfgraph::{blowup, BlowupSpec, Graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tfgraph",
    version,
    about = "Dense triangle-free graphs: families, D(k)/Q(k) checks, recognition and searches"
)]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    /// Include wall-clock times in reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Read the input graph from this file instead of stdin.
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Elist,
    Graph6,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Write a named graph.
    Gen {
        #[arg(long, value_enum, default_value = "elist", global = true)]
        format: OutFormat,
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Test properties of the input graph.
    Check(CheckArgs),
    /// Certify the input as a blow-up of an Andrásfai or Vega graph, or refute it.
    Recognize,
    /// Classify every maximal triangle-free graph up to order N.
    Census {
        #[arg(long)]
        n: usize,
        /// Exit 1 if any invariant fails.
        #[arg(long)]
        assert: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Search for maximal triangle-free graphs with D(3) but not D(4).
    Hunt {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        allow_large: bool,
    },
    /// Run registered structural checks.
    PaperVerify {
        /// Check name, or `all`.
        #[arg(long)]
        check: String,
        /// Fail when named maps do not generate the full automorphism group.
        #[arg(long)]
        strict_automorphisms: bool,
    },
    /// Extremal edge count for n vertices and independence number s.
    Extremal {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        /// Also search template blow-ups for an attaining graph.
        #[arg(long)]
        search: bool,
    },
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long)]
    tf: bool,
    #[arg(long)]
    maximal: bool,
    #[arg(long)]
    alpha: bool,
    #[arg(long, value_name = "K")]
    d: Option<usize>,
    #[arg(long, value_name = "K")]
    q: Option<usize>,
    /// Search the graph itself instead of its twin quotient.
    #[arg(long)]
    direct: bool,
}

#[derive(Subcommand, Debug)]
enum GenFamily {
    Andrasfai {
        #[arg(long)]
        k: usize,
    },
    Vega {
        #[arg(long)]
        i: usize,
        #[arg(long, default_value_t = 0)]
        mu: u8,
        #[arg(long, default_value_t = 0)]
        nu: u8,
    },
    Mycielski,
    Cube,
    GraphN,
    Cayley {
        #[arg(long)]
        k: usize,
    },
    Fig41,
    /// The 29-vertex blow-up of vega(2,1,1).
    Haggkvist,
    /// Blow up the input graph.
    Blowup {
        /// Comma-separated weights, one per vertex.
        #[arg(long, value_delimiter = ',', conflicts_with = "uniform")]
        weights: Option<Vec<usize>>,
        #[arg(long)]
        uniform: Option<usize>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] tfgraph::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(tfgraph::Error::UnknownCheck(_)) => EXIT_USAGE,
            _ => EXIT_INPUT,
        }
    }
}

struct Ctx<'a> {
    input: Option<PathBuf>,
    stdin: &'a mut dyn Read,
    timings: bool,
    start: Instant,
}

impl Ctx<'_> {
    fn graph(&mut self) -> Result<Graph, CliError> {
        let mut text = String::new();
        match &self.input {
            Some(p) => text = std::fs::read_to_string(p)?,
            None => {
                self.stdin.read_to_string(&mut text)?;
            }
        }
        Ok(read_graph(&text)?)
    }

    fn finish(&self, mut r: RunReport, result: Value) -> String {
        r.result = result;
        if self.timings {
            r.elapsed_ms = Some(self.start.elapsed().as_millis() as u64);
        }
        if let Some(p) = &self.input {
            r.inputs
                .insert("input".into(), json!(p.display().to_string()));
        }
        r.to_json()
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Output goes to `stdout` unless `--output` is given.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    if let Some(j) = cli.jobs {
        // A pool may already exist when embedded; the budget is then advisory.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build_global();
    }
    let output = cli.output.clone();
    let mut ctx = Ctx {
        input: cli.input.clone(),
        stdin,
        timings: cli.timings,
        start: Instant::now(),
    };
    match dispatch(cli.cmd, &mut ctx) {
        Ok((text, code)) => {
            let written = match output {
                Some(p) => std::fs::write(p, text),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Cmd, ctx: &mut Ctx) -> Result<(String, i32), CliError> {
    match cmd {
        Cmd::Gen { format, family } => gen(family, format, ctx).map(|s| (s, EXIT_OK)),
        Cmd::Check(args) => check(args, ctx),
        Cmd::Recognize => {
            let g = ctx.graph()?;
            let rec = recognize(&g)?;
            let (verified, code) = match &rec {
                Recognition::Certified(c) => (Some(certify(&g, c)), EXIT_OK),
                Recognition::Refuted(_) => (None, EXIT_FAILS),
            };
            let family = rec.family().map(|f| f.to_string());
            let r = RunReport::new("recognize").input("order", g.order());
            let result = json!({"family": family, "recognition": rec, "certify": verified});
            Ok((ctx.finish(r, result), code))
        }
        Cmd::Census {
            n,
            assert,
            allow_large,
        } => {
            let mut e = Enumerator::new().allow_large(allow_large);
            let mut rows = Vec::new();
            let mut violations = Vec::new();
            for order in 2..=n {
                let c = census_with(&mut e, order)?;
                let count = |f: &dyn Fn(&tfgraph::search::CensusRow) -> bool| {
                    c.rows.iter().filter(|r| f(r)).count()
                };
                rows.push(json!({
                    "n": order,
                    "maximal_triangle_free": c.rows.len(),
                    "d4": count(&|r| r.d4),
                    "q4": count(&|r| r.q4),
                    "recognized": count(&|r| r.recognized.is_some()),
                    "andrasfai": count(&|r| r.recognized.is_some_and(|f| f.is_andrasfai())),
                    "d3_not_d4": count(&|r| r.d3 && !r.d4),
                    "violations": c.violations.len(),
                }));
                violations.extend(c.violations);
            }
            let code = if assert && !violations.is_empty() {
                EXIT_FAILS
            } else {
                EXIT_OK
            };
            let r = RunReport::new("census")
                .input("n", n)
                .input("assert", assert);
            Ok((
                ctx.finish(r, json!({"orders": rows, "violations": violations})),
                code,
            ))
        }
        Cmd::Hunt { max_n, allow_large } => {
            let hits = hunt_conjecture(max_n, allow_large)?;
            let graph6: Vec<String> = hits.iter().map(write_graph6).collect();
            let r = RunReport::new("hunt").input("max_n", max_n);
            Ok((ctx.finish(r, json!({"hits": graph6})), EXIT_OK))
        }
        Cmd::PaperVerify {
            check,
            strict_automorphisms,
        } => {
            let params = CheckParams {
                range: None,
                strict_automorphisms,
            };
            let mut reports = run_checks(&check, &params)?;
            if !ctx.timings {
                reports.iter_mut().for_each(|r| r.elapsed_ms = None);
            }
            let code = if reports.iter().all(|r| r.passed) {
                EXIT_OK
            } else {
                EXIT_FAILS
            };
            let r = RunReport::new("paper-verify").input("check", check);
            Ok((ctx.finish(r, json!({ "checks": reports })), code))
        }
        Cmd::Extremal { n, s, search } => {
            let formula = families::extremal_formula(n, s)?;
            let mut result = json!({ "formula": number(formula) });
            if search {
                let n = usize::try_from(n)
                    .map_err(|_| CliError::Usage("n too large for a search".into()))?;
                let s = usize::try_from(s)
                    .map_err(|_| CliError::Usage("s too large for a search".into()))?;
                let found = search_extremal(n, s)?;
                result["search"] = json!({
                    "best_found": found.best_found,
                    "attains_formula": found.best_found as u128 == formula,
                    "witness_family": found.witness_family.map(|f| f.to_string()),
                    "witness_weights": found.witness.as_ref().map(|w| w.weights.clone()),
                    "attaining": found.attaining.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                });
            }
            let r = RunReport::new("extremal").input("n", n).input("s", s);
            Ok((ctx.finish(r, result), EXIT_OK))
        }
    }
}

fn number(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

fn check(args: CheckArgs, ctx: &mut Ctx) -> Result<(String, i32), CliError> {
    let g = ctx.graph()?;
    let mode = if args.direct {
        SearchMode::Direct
    } else {
        SearchMode::Quotient
    };
    let none = !args.tf && !args.maximal && !args.alpha && args.d.is_none() && args.q.is_none();
    let mut result = serde_json::Map::new();
    let mut ok = true;
    let mut r = RunReport::new("check").input("order", g.order());
    if args.tf || none {
        let t = find_triangle(&g);
        ok &= t.is_none();
        result.insert(
            "triangle_free".into(),
            json!({"holds": t.is_none(), "triangle": t}),
        );
    }
    if args.maximal || none {
        let f = maximality_failure(&g);
        ok &= f.is_none();
        result.insert(
            "maximal_triangle_free".into(),
            json!({"holds": f.is_none(), "failure": f}),
        );
    }
    if args.alpha {
        let (alpha, set) = independence_number(&g);
        result.insert("alpha".into(), json!({"value": alpha, "set": set}));
    }
    if let Some(k) = args.d {
        let v = check_d_with(&g, k, mode)?;
        ok &= v.holds;
        r = r.input("d", k);
        result.insert("d".into(), json!(v));
    }
    if let Some(k) = args.q {
        let v = check_q_with(&g, k, mode)?;
        ok &= v.holds;
        r = r.input("q", k);
        result.insert("q".into(), json!(v));
    }
    let code = if ok { EXIT_OK } else { EXIT_FAILS };
    Ok((ctx.finish(r, Value::Object(result)), code))
}

fn gen(family: GenFamily, format: OutFormat, ctx: &mut Ctx) -> Result<String, CliError> {
    let (name, g, labels): (String, Graph, Vec<String>) = match family {
        GenFamily::Andrasfai { k } => (format!("andrasfai({k})"), families::andrasfai(k)?, vec![]),
        GenFamily::Vega { i, mu, nu } => {
            let id = VegaId::new(i, mu, nu)?;
            let (g, l) = families::vega(id)?;
            let labels = (0..g.order()).map(|v| l.name(v)).collect();
            (id.to_string(), g, labels)
        }
        GenFamily::Mycielski => {
            let (g, l) = families::mycielski_grotzsch();
            let labels = (0..g.order()).map(|v| l.name(v)).collect();
            ("mycielski".into(), g, labels)
        }
        GenFamily::Cube => {
            let labels = (0..8)
                .map(|v| {
                    if v < 4 {
                        format!("a{}", v + 1)
                    } else {
                        format!("b{}", v - 3)
                    }
                })
                .collect();
            ("cube".into(), families::cube(), labels)
        }
        GenFamily::GraphN => {
            let labels = (0..9)
                .map(|v| format!("{}{}", ["a", "b", "c"][v / 3], v % 3))
                .collect();
            ("graph-n".into(), families::graph_n(), labels)
        }
        GenFamily::Cayley { k } => (format!("cayley({k})"), families::cayley_6k(k)?, vec![]),
        GenFamily::Fig41 => (
            "fig41".into(),
            families::fig41(),
            FIG41_NAMES.iter().map(|s| s.to_string()).collect(),
        ),
        GenFamily::Haggkvist => {
            let spec = families::haggkvist_spec();
            let (_, l) = families::vega(VegaId::new(2, 1, 1)?)?;
            let g = blowup(&spec)?;
            let labels = copy_labels(&spec, |v| l.name(v));
            ("haggkvist".into(), g, labels)
        }
        GenFamily::Blowup { weights, uniform } => {
            let base = ctx.graph()?;
            let spec = match (weights, uniform) {
                (Some(w), None) => BlowupSpec::new(base, w)?,
                (None, Some(w)) => BlowupSpec::uniform(base, w)?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of --weights or --uniform".into(),
                    ))
                }
            };
            let g = blowup(&spec)?;
            let labels = copy_labels(&spec, |v| v.to_string());
            ("blowup".into(), g, labels)
        }
    };
    Ok(match format {
        OutFormat::Elist => write_elist(&g),
        OutFormat::Graph6 => write_graph6(&g) + "\n",
        OutFormat::Dot => write_dot(&g, &name, |v| {
            labels.get(v).cloned().unwrap_or_else(|| v.to_string())
        }),
    })
}

/// `name.j` for the `j`-th copy of each base vertex.
fn copy_labels(spec: &BlowupSpec, name: impl Fn(usize) -> String) -> Vec<String> {
    let offsets = spec.offsets();
    spec.block_of()
        .iter()
        .enumerate()
        .map(|(v, &b)| format!("{}.{}", name(b), v - offsets[b]))
        .collect()
}
