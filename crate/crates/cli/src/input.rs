//! Graph arguments: a path to a graph6 file or an inline graph6 string.

use anyhow::{bail, Context, Result};
use mpg4_core::triangulation::{decode_graph6, Triangulation};
use std::path::Path;

/// Graphs named by `arg`. A file may hold several graph6 lines, with an
/// optional `>>graph6<<` header; blank lines are skipped.
pub fn load_graphs(arg: &str) -> Result<Vec<Triangulation>> {
    let path = Path::new(arg);
    let (text, origin) = if path.is_file() {
        (std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?, arg.to_string())
    } else {
        (arg.to_string(), "inline graph6".to_string())
    };
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim().trim_start_matches(">>graph6<<");
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(line).with_context(|| format!("{origin}, line {}", i + 1))?;
        out.push(g);
    }
    if out.is_empty() {
        bail!("{origin}: no graph found");
    }
    Ok(out)
}

/// The single graph named by `arg`.
pub fn load_graph(arg: &str) -> Result<Triangulation> {
    let mut gs = load_graphs(arg)?;
    if gs.len() > 1 {
        bail!("{arg}: expected one graph, found {}", gs.len());
    }
    Ok(gs.remove(0))
}
