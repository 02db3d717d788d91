//! graph6, DOT and JSON adjacency codecs.

use super::{build_from_edge_list, Result, Triangulation, TriangulationError, VertexId};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

/// JSON adjacency `{n, edges: [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Triangulation> for GraphJson {
    fn from(g: &Triangulation) -> Self {
        GraphJson { n: g.order(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
}

/// graph6 text for the underlying simple graph (no trailing newline).
pub fn encode_graph6(g: &Triangulation) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adjacent(i, j));
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parse graph6 text into an edge list.
pub fn decode_graph6_edges(text: &str) -> Result<(usize, Vec<(VertexId, VertexId)>)> {
    let bad = |m: &str| TriangulationError::BadFormat(m.to_string());
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let b = s.as_bytes();
    if b.is_empty() || b.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(bad("characters outside the graph6 range"));
    }
    let (n, rest) = if b[0] != 126 {
        ((b[0] - 63) as usize, &b[1..])
    } else if b.len() >= 4 && b[1] != 126 {
        let n = b[1..4].iter().fold(0usize, |a, &c| (a << 6) | (c - 63) as usize);
        (n, &b[4..])
    } else if b.len() >= 8 {
        let n = b[2..8].iter().fold(0usize, |a, &c| (a << 6) | (c - 63) as usize);
        (n, &b[8..])
    } else {
        return Err(bad("truncated order field"));
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(bad("body length does not match the order"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

/// Decode and re-embed a maximal planar graph.
pub fn decode_graph6(text: &str) -> Result<Triangulation> {
    let (n, edges) = decode_graph6_edges(text)?;
    build_from_edge_list(n, &edges)
}

/// DOT rendering with faces listed as comments.
pub fn to_dot(g: &Triangulation, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {name} {{");
    let _ = writeln!(s, "  layout=neato;");
    let _ = writeln!(s, "  node [shape=circle];");
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v} [label=\"{}\"];", v + 1);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    for (i, f) in g.faces().iter().enumerate() {
        let f: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "  // face {i}: {}", f.join(" "));
    }
    s.push_str("}\n");
    s
}
