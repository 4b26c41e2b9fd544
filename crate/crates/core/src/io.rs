//! The `sbg` edge-list format and DOT export.
//!
//! ```text
//! sbg 2 2
//! u1 v1 +
//! u1 v2 -
//! u2 v1 -
//! u2 v2 +
//! ```
//!
//! The header gives the part sizes; each edge line names a u-vertex, a
//! v-vertex (both 1-based) and a sign. Lines starting with `#` are comments;
//! a comment of the form `# u3 X_2'` attaches a block label to a vertex.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedBipartiteGraph, Vertex};

/// Serializes `g` with edges sorted by `(u, v)` and block labels as trailing
/// comment lines.
pub fn emit_graph(g: &SignedBipartiteGraph) -> String {
    let mut out = String::new();
    writeln!(out, "sbg {} {}", g.p(), g.q()).unwrap();
    for ((u, v), sign) in g.edges() {
        writeln!(out, "{} {} {}", Vertex::U(u), Vertex::V(v), sign).unwrap();
    }
    for (vertex, label) in g.labels() {
        writeln!(out, "# {vertex} {label}").unwrap();
    }
    out
}

fn parse_vertex(token: &str) -> Option<Vertex> {
    let (kind, digits) = token.split_at_checked(1)?;
    if digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: usize = digits.parse().ok()?;
    match kind {
        "u" => Some(Vertex::U(index - 1)),
        "v" => Some(Vertex::V(index - 1)),
        _ => None,
    }
}

fn in_range(g: &SignedBipartiteGraph, v: Vertex) -> bool {
    match v {
        Vertex::U(i) => i < g.p(),
        Vertex::V(j) => j < g.q(),
    }
}

/// Parses a document produced by [`emit_graph`]. Errors carry the 1-based
/// line number.
pub fn parse_graph(text: &str) -> Result<SignedBipartiteGraph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut graph: Option<SignedBipartiteGraph> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(g) = graph.as_mut() {
                let mut parts = comment.split_whitespace();
                if let (Some(vertex), Some(label)) =
                    (parts.next().and_then(parse_vertex), parts.next())
                {
                    if parts.next().is_none() && in_range(g, vertex) {
                        g.set_label(vertex, label)?;
                    }
                }
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();

        let Some(g) = graph.as_mut() else {
            match tokens.as_slice() {
                ["sbg", p, q] => {
                    let p = p
                        .parse()
                        .map_err(|_| err(line_no, format!("bad part size {p:?}")))?;
                    let q = q
                        .parse()
                        .map_err(|_| err(line_no, format!("bad part size {q:?}")))?;
                    graph = Some(SignedBipartiteGraph::new(p, q));
                    continue;
                }
                _ => {
                    return Err(err(
                        line_no,
                        format!("expected header `sbg <p> <q>`, found {line:?}"),
                    ))
                }
            }
        };

        let [u, v, sign] = tokens.as_slice() else {
            return Err(err(
                line_no,
                format!("expected `u<i> v<j> <+|->`, found {line:?}"),
            ));
        };
        let u = match parse_vertex(u) {
            Some(Vertex::U(i)) => i,
            _ => return Err(err(line_no, format!("bad u-vertex {u:?}"))),
        };
        let v = match parse_vertex(v) {
            Some(Vertex::V(j)) => j,
            _ => return Err(err(line_no, format!("bad v-vertex {v:?}"))),
        };
        let sign = match *sign {
            "+" => Sign::Positive,
            "-" => Sign::Negative,
            other => return Err(err(line_no, format!("bad sign {other:?}"))),
        };
        if u >= g.p() || v >= g.q() {
            return Err(err(
                line_no,
                format!(
                    "edge {}{} outside {}x{}",
                    Vertex::U(u),
                    Vertex::V(v),
                    g.p(),
                    g.q()
                ),
            ));
        }
        if g.edge(u, v).is_some() {
            return Err(err(
                line_no,
                format!("duplicate edge {}{}", Vertex::U(u), Vertex::V(v)),
            ));
        }
        g.add_edge(u, v, sign)?;
    }

    graph.ok_or_else(|| err(1, "missing header `sbg <p> <q>`".into()))
}

/// DOT rendering: U and V in separate ranks, positive edges solid, negative
/// edges dashed, vertex labels carrying the signed degree.
pub fn emit_dot(g: &SignedBipartiteGraph) -> String {
    let mut out = String::new();
    out.push_str("graph sbg {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle];\n");
    let parts = [
        ("U", (0..g.p()).map(Vertex::U).collect::<Vec<_>>()),
        ("V", (0..g.q()).map(Vertex::V).collect::<Vec<_>>()),
    ];
    for (name, vertices) in parts {
        writeln!(out, "  subgraph part_{name} {{").unwrap();
        out.push_str("    rank=same;\n");
        for v in vertices {
            let degree = g.signed_degree(v).expect("vertex in range");
            let label = match g.label(v) {
                Some(block) => format!("{v} [sdeg={degree}]\\n{}", escape(block)),
                None => format!("{v} [sdeg={degree}]"),
            };
            writeln!(out, "    {v} [label=\"{label}\"];").unwrap();
        }
        out.push_str("  }\n");
    }
    for ((u, v), sign) in g.edges() {
        let style = match sign {
            Sign::Positive => "solid",
            Sign::Negative => "dashed",
        };
        writeln!(
            out,
            "  {} -- {} [style={style}];",
            Vertex::U(u),
            Vertex::V(v)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Parses a comma-separated list of integers; whitespace is ignored and an
/// empty string yields an empty list.
pub fn parse_int_list(text: &str) -> std::result::Result<Vec<i64>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| format!("not an integer: {tok:?}"))
        })
        .collect()
}
