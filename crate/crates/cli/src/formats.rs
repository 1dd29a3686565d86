//! Graph file formats: the `elist` text format, graph6 and DOT export.

use std::fmt::Write as _;
use tfgraph::Graph;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Elist { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] tfgraph::Error),
}

fn elist_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Elist {
        line,
        msg: msg.into(),
    }
}

/// Parses `p tf <n>` followed by `e <u> <v>` lines. Blank lines and `#`
/// comments are ignored; duplicate edges are rejected.
pub fn parse_elist(text: &str) -> Result<Graph, FormatError> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| elist_err(line, format!("bad number {s:?}")))
        };
        match fields.as_slice() {
            ["p", "tf", n] => {
                if order.is_some() {
                    return Err(elist_err(line, "second problem line"));
                }
                order = Some(num(n)?);
            }
            ["e", u, v] => {
                if order.is_none() {
                    return Err(elist_err(line, "edge before the problem line"));
                }
                edges.push((num(u)?, num(v)?));
            }
            _ => return Err(elist_err(line, format!("unrecognised line {content:?}"))),
        }
    }
    let n = order.ok_or_else(|| elist_err(0, "missing problem line"))?;
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write_elist(g: &Graph) -> String {
    let mut out = format!("p tf {}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a string");
    }
    out
}

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut out = vec![126];
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        out
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        out
    }
}

/// graph6 encoding without header or trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = size_bytes(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let data: Vec<u8> = line.bytes().collect();
    if let Some(&b) = data.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte {b} out of range")));
    }
    let six = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
    };
    let (n, rest) = match data.as_slice() {
        [] => return Err(FormatError::Graph6("empty input".into())),
        [126, 126, tail @ ..] if tail.len() >= 6 => (six(&tail[..6]), &tail[6..]),
        [126, tail @ ..] if tail.len() >= 3 => (six(&tail[..3]), &tail[3..]),
        [126, ..] => return Err(FormatError::Graph6("truncated size".into())),
        [first, tail @ ..] => ((first - 63) as usize, tail),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes, found {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..rest.len() * 6).any(bit) {
        return Err(FormatError::Graph6("non-zero padding".into()));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Reads either format: text with a `p` line is elist, anything else graph6.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.is_empty() || first.starts_with("p ") || first.starts_with("e ") {
        parse_elist(text)
    } else {
        parse_graph6(first)
    }
}

/// DOT export; `label(v)` names each vertex.
pub fn write_dot(g: &Graph, name: &str, label: impl Fn(usize) -> String) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..g.order() {
        writeln!(out, "  {v} [label=\"{}\"];", label(v)).expect("writing to a string");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a string");
    }
    out.push_str("}\n");
    out
}
