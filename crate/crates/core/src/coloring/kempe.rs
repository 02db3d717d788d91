//! Kempe chains: two-coloured components and their colour swaps.

use super::{Coloring, ColoringError};
use crate::graph::AsGraph;

/// Component of `start` in the subgraph induced by colours `i` and `j`, sorted.
pub fn kempe_component<G: AsGraph + ?Sized>(
    g: &G,
    f: &Coloring,
    i: u8,
    j: u8,
    start: usize,
) -> Result<Vec<usize>, ColoringError> {
    let g = g.as_graph();
    let c = f.colors[start];
    if c != i && c != j {
        return Err(ColoringError::StartNotBichromatic(start));
    }
    let mut seen = vec![false; g.order()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            let cu = f.colors[u];
            if !seen[u] && (cu == i || cu == j) {
                seen[u] = true;
                stack.push(u);
                out.push(u);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Swap colours `i` and `j` on the Kempe chain through `start`.
pub fn kempe_interchange<G: AsGraph + ?Sized>(
    g: &G,
    f: &Coloring,
    i: u8,
    j: u8,
    start: usize,
) -> Result<Coloring, ColoringError> {
    let comp = kempe_component(g, f, i, j, start)?;
    let mut out = f.clone();
    for v in comp {
        out.colors[v] = if f.colors[v] == i { j } else { i };
    }
    Ok(out)
}
