//! Recursive maximal planar graphs (FWF graphs): the graphs reachable from
//! `K4` by repeatedly inserting a degree-3 vertex into a face. Includes the
//! (2,2)-FWF family, their colour sequences, 4-wheel star extensions and the
//! search for a second colouring of those extensions.

mod seq;

pub use seq::{all_sequences, fwf22_from_color_sequence, ColorSequence, Fwf22};

use crate::coloring::{enumerate_partitions, Coloring, ColorPartition};
use crate::triangulation::{canonical_certificate, IsoCertificate, Triangulation, TriangulationError, VertexId};
use crate::wheelops::{extend_wheel, ExtendSite, WheelError};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FwfError {
    #[error("colour sequence must start with {expected:?}, got {found:?}")]
    BadPrefix { expected: String, found: String },
    #[error("symbol {symbol:?} at position {pos} has no legal face")]
    NoLegalFace { pos: usize, symbol: char },
    #[error("invalid colour symbol {0:?}")]
    BadSymbol(char),
    #[error("graph is not a (2,2)-FWF graph: {0}")]
    NotTwoTwoFwf(String),
    #[error("no colour sequence builds this (2,2)-FWF graph")]
    NoColorSequence,
    #[error("no second colouring of the star extension exists")]
    NoAlternative,
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error(transparent)]
    Wheel(#[from] WheelError),
}

pub type Result<T> = std::result::Result<T, FwfError>;

fn peel(g: &Triangulation, ids: &[VertexId], dead: &mut HashSet<IsoCertificate>, out: &mut Vec<VertexId>) -> bool {
    let n = g.order();
    if n == 4 {
        return g.edge_count() == 6;
    }
    if n < 4 {
        return false;
    }
    let cert = canonical_certificate(g);
    if dead.contains(&cert) {
        return false;
    }
    for v in 0..n {
        if g.degree(v) != 3 {
            continue;
        }
        let Ok((h, map)) = g.delete_vertex_mapped(v) else { continue };
        let mut sub = vec![0; h.order()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                sub[*new] = ids[old];
            }
        }
        out.push(ids[v]);
        if peel(&h, &sub, dead, out) {
            return true;
        }
        out.pop();
    }
    dead.insert(cert);
    false
}

/// Degree-3 deletions (original ids, in order) reducing `g` to `K4`, or
/// `None` when `g` is not an FWF graph. All removal orders are explored.
pub fn is_fwf(g: &Triangulation) -> Option<Vec<VertexId>> {
    if !g.is_maximal() {
        return None;
    }
    let ids: Vec<VertexId> = (0..g.order()).collect();
    let mut out = Vec::new();
    peel(g, &ids, &mut HashSet::new(), &mut out).then_some(out)
}

/// Greedy peeling: always delete the lowest-numbered degree-3 vertex.
/// Used to test that peeling order does not matter.
pub fn greedy_peel_reaches_k4(g: &Triangulation) -> bool {
    let mut h = g.clone();
    while h.order() > 4 {
        let Some(v) = (0..h.order()).find(|&v| h.degree(v) == 3) else { return false };
        match h.delete_vertex(v) {
            Ok(x) => h = x,
            Err(_) => return false,
        }
    }
    h.order() == 4 && h.edge_count() == 6
}

/// Every FWF graph of order `n`, one per isomorphism class, sorted by certificate.
pub fn enumerate_fwf(n: usize) -> Vec<Triangulation> {
    if n < 4 {
        return Vec::new();
    }
    let mut level = vec![Triangulation::k4()];
    for _ in 4..n {
        let mut next: Vec<(IsoCertificate, Triangulation)> = level
            .par_iter()
            .flat_map_iter(|g| {
                g.triangles()
                    .into_iter()
                    .filter_map(|f| g.insert_vertex_in_face(&f).ok())
                    .map(|h| (canonical_certificate(&h), h))
                    .collect::<Vec<_>>()
            })
            .collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);
        level = next.into_iter().map(|(_, h)| h).collect();
    }
    level
}

/// Degree-3 vertices of `g`.
pub fn degree_three(g: &Triangulation) -> Vec<VertexId> {
    (0..g.order()).filter(|&v| g.degree(v) == 3).collect()
}

/// True when `g` is FWF with exactly two degree-3 vertices at distance 2.
pub fn is_fwf22(g: &Triangulation) -> bool {
    let d3 = degree_three(g);
    d3.len() == 2
        && !g.adjacent(d3[0], d3[1])
        && !g.common_neighbors(d3[0], d3[1]).is_empty()
        && is_fwf(g).is_some()
}

/// All (2,2)-FWF graphs of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FwfCatalog {
    pub n: usize,
    pub count: usize,
    /// Hex certificates, sorted.
    pub certificates: Vec<String>,
    /// A colour sequence building each entry, when one exists.
    pub sequences: Vec<Option<String>>,
}

/// The closed form `2^(n-7) + 1` for `n >= 7`, and 1 for `n` of 5 or 6.
pub fn gamma_formula(n: usize) -> Option<u64> {
    match n {
        5 | 6 => Some(1),
        n if n >= 7 => Some((1u64 << (n - 7)) + 1),
        _ => None,
    }
}

/// Exhaustive (2,2)-FWF catalog of order `n`, each entry matched to the
/// least colour sequence that builds it.
pub fn enumerate_fwf22(n: usize) -> FwfCatalog {
    let graphs: Vec<Triangulation> = enumerate_fwf(n).into_iter().filter(is_fwf22).collect();
    let mut by_cert: BTreeMap<IsoCertificate, Option<String>> =
        graphs.iter().map(|g| (canonical_certificate(g), None)).collect();
    for s in all_sequences(n) {
        if let Ok(f) = fwf22_from_color_sequence(&s) {
            if let Some(slot) = by_cert.get_mut(&canonical_certificate(&f.graph)) {
                if slot.is_none() {
                    *slot = Some(s.symbols.clone());
                }
            }
        }
    }
    FwfCatalog {
        n,
        count: by_cert.len(),
        certificates: by_cert.keys().map(|c| c.to_hex()).collect(),
        sequences: by_cert.into_values().collect(),
    }
}

/// `G*xuy` with its natural colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarExtension {
    pub graph: Triangulation,
    pub coloring: Coloring,
    pub x: VertexId,
    pub u: VertexId,
    pub y: VertexId,
    /// New 4-wheel centre.
    pub v: VertexId,
    /// Split copy of `u`.
    pub u2: VertexId,
    /// Axis vertex 2 of the base graph.
    pub axis2: VertexId,
    /// The neighbour triangles of `x` and `y` share an edge.
    pub adjacent_type: bool,
}

/// Extend a 4-wheel on `x - u - y` and colour it naturally: `v` avoids the
/// colours of `x`, `u`, `y`, `u'` copies `u`, the rest keep their colours.
pub fn star_extension_natural_coloring(f: &Fwf22) -> Result<StarExtension> {
    let g = &f.graph;
    let d3 = degree_three(g);
    if d3 != [f.x, f.y] && d3 != [f.y, f.x] {
        return Err(FwfError::NotTwoTwoFwf(format!("degree-3 vertices are {d3:?}")));
    }
    if g.degree(f.u) != g.order() - 1 || !g.adjacent(f.x, f.u) || !g.adjacent(f.y, f.u) {
        return Err(FwfError::NotTwoTwoFwf("x - u - y is not a path through the centre".into()));
    }
    let (h, _) = extend_wheel(g, ExtendSite::Path { x: f.x, u: f.u, y: f.y })?;
    let n = g.order();
    let (v, u2) = (n, n + 1);
    let c = &f.coloring.colors;
    let used = [c[f.x], c[f.u], c[f.y]];
    let cv = (1..=4u8).find(|k| !used.contains(k)).expect("four colours");
    let mut colors = c.clone();
    colors.push(cv);
    colors.push(c[f.u]);
    let coloring = Coloring::new(colors, 4);
    debug_assert!(coloring.is_proper(&h));
    let adjacent_type = g.common_neighbors(f.x, f.y).len() >= 2;
    Ok(StarExtension { graph: h, coloring, x: f.x, u: f.u, y: f.y, v, u2, axis2: f.axis2, adjacent_type })
}

/// How the second colouring was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlternativeMethod {
    /// `x` and `y` share a colour, so `v` has a second free colour.
    SecondCenterColor,
    /// `x`, `y` to red; `u`, `u'`, `v` recoloured directly.
    DirectRecolor,
    /// The four-step recolouring through axis vertex 2 and `u'`.
    Cascade,
    /// Neither recipe applied; found by enumerating partitions.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternative {
    pub coloring: Coloring,
    pub method: AlternativeMethod,
}

// The two halves of a split `u` are symmetric up to mirroring, so each
// recipe is tried with the roles of `u` and `u'` in both orders.
fn direct_recolor(s: &StarExtension, u: VertexId, u2: VertexId) -> Vec<u8> {
    let c = &s.coloring.colors;
    let (a, b, r, cv) = (c[s.x], c[s.y], c[s.u], c[s.v]);
    let mut out = c.clone();
    out[u] = cv;
    out[u2] = a;
    out[s.x] = r;
    out[s.y] = r;
    out[s.v] = b;
    out
}

fn cascade(s: &StarExtension, u2: VertexId) -> Option<Vec<u8>> {
    let c = &s.coloring.colors;
    let (yellow, red) = (c[s.x], c[s.u]);
    // written for y green, so that v is blue and axis 2 is the only green neighbour of x
    let w = s.axis2;
    if c[w] == c[s.v] {
        return None;
    }
    let mut out = c.clone();
    out[s.x] = c[w];
    out[w] = red;
    out[u2] = yellow;
    for &t in s.graph.neighbors(u2) {
        if out[t] == yellow {
            out[t] = red;
        }
    }
    Some(out)
}

/// A proper 4-colouring of `G*xuy` whose partition differs from the natural one.
pub fn alternative_coloring(s: &StarExtension) -> Result<Alternative> {
    let natural = s.coloring.partition();
    let natural = ColorPartition::from_classes(natural.classes);
    let accept = |colors: Vec<u8>| {
        let f = Coloring::new(colors, 4);
        (f.is_proper(&s.graph) && ColorPartition::from_classes(f.partition().classes) != natural).then_some(f)
    };
    let c = &s.coloring.colors;
    if c[s.x] == c[s.y] {
        let used = [c[s.x], c[s.u], c[s.v]];
        if let Some(k) = (1..=4u8).find(|k| !used.contains(k)) {
            let mut out = c.clone();
            out[s.v] = k;
            if let Some(f) = accept(out) {
                return Ok(Alternative { coloring: f, method: AlternativeMethod::SecondCenterColor });
            }
        }
    }
    let direct = [direct_recolor(s, s.u, s.u2), direct_recolor(s, s.u2, s.u)].map(|c| (AlternativeMethod::DirectRecolor, c)).to_vec();
    let casc = [cascade(s, s.u2), cascade(s, s.u)].into_iter().flatten().map(|c| (AlternativeMethod::Cascade, c));
    let casc: Vec<_> = casc.collect();
    let recipes = if s.adjacent_type { [direct, casc].concat() } else { [casc, direct].concat() };
    for (method, colors) in recipes {
        if let Some(f) = accept(colors) {
            return Ok(Alternative { coloring: f, method });
        }
    }
    enumerate_partitions(&s.graph, 4)
        .partitions
        .into_iter()
        .find(|p| *p != natural)
        .map(|p| Alternative { coloring: p.to_coloring(s.graph.order(), 4), method: AlternativeMethod::Exhaustive })
        .ok_or(FwfError::NoAlternative)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_octahedron() {
        assert_eq!(is_fwf(&Triangulation::k4()), Some(vec![]));
        assert_eq!(is_fwf(&Triangulation::octahedron()), None);
        assert_eq!(is_fwf(&Triangulation::icosahedron()), None);
    }

    #[test]
    fn fwf_counts() {
        let counts: Vec<usize> = (4..=9).map(|n| enumerate_fwf(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 7, 24]);
    }

    #[test]
    fn small_gammas() {
        assert_eq!(enumerate_fwf22(5).count, 1);
        assert_eq!(enumerate_fwf22(6).count, 1);
        assert_eq!(enumerate_fwf22(7).count, 2);
    }

    #[test]
    fn every_catalog_entry_has_a_sequence() {
        for n in 5..=9 {
            let c = enumerate_fwf22(n);
            assert!(c.sequences.iter().all(Option::is_some), "order {n}");
        }
    }

    #[test]
    fn example_star_extension() {
        let f = fwf22_from_color_sequence(&"ygbrybgyg".parse().unwrap()).unwrap();
        let s = star_extension_natural_coloring(&f).unwrap();
        assert_eq!(s.graph.order(), 11);
        assert!(s.coloring.is_proper(&s.graph));
        let c = &s.coloring.colors;
        assert!(![c[s.x], c[s.u], c[s.y]].contains(&c[s.v]));
        let alt = alternative_coloring(&s).unwrap();
        assert!(alt.coloring.is_proper(&s.graph));
        assert_ne!(alt.coloring.partition(), s.coloring.partition());
    }

    fn alt(seq: &str) -> (StarExtension, Alternative) {
        let f = fwf22_from_color_sequence(&seq.parse().unwrap()).unwrap();
        let s = star_extension_natural_coloring(&f).unwrap();
        let a = alternative_coloring(&s).unwrap();
        (s, a)
    }

    #[test]
    fn adjacent_type_with_equal_ends() {
        let (s, a) = alt("ygbryby");
        assert!(s.adjacent_type);
        assert_eq!(a.method, AlternativeMethod::SecondCenterColor);
    }

    #[test]
    fn adjacent_type_direct_recolor() {
        let (s, a) = alt("ygbrybyb");
        assert!(s.adjacent_type);
        assert_eq!(a.method, AlternativeMethod::DirectRecolor);
        let red = s.coloring.colors[s.u];
        assert_eq!((a.coloring.colors[s.x], a.coloring.colors[s.y]), (red, red));
    }

    #[test]
    fn non_adjacent_type_cascade() {
        let (s, a) = alt("ygbrybg");
        assert!(!s.adjacent_type);
        assert_eq!(a.method, AlternativeMethod::Cascade);
    }
}
