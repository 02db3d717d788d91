//! Colour sequences: words over `y g b r` that spell a (2,2)-FWF graph.
//!
//! Vertices `0..4` are the axes `x`, `2`, `3`, `u` of `K4`, coloured
//! yellow, green, blue, red. Vertex 4 goes into the face `(1, 2, 3)`,
//! vertex 5 into `(1, 3, 4)`, and each later vertex `k` into one of the two
//! faces `(k-1, u, a)`; the symbol picks the face, since the new vertex must
//! take the one colour missing from it.

use super::{FwfError, Result};
use crate::coloring::Coloring;
use crate::triangulation::{canonical_certificate, Triangulation, VertexId};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

const PREFIX: &str = "ygbryb";
const U: VertexId = 3;
const RED: u8 = 4;

fn color_of(c: char) -> Result<u8> {
    match c {
        'y' => Ok(1),
        'g' => Ok(2),
        'b' => Ok(3),
        'r' => Ok(4),
        _ => Err(FwfError::BadSymbol(c)),
    }
}

fn symbol_of(k: u8) -> char {
    ['y', 'g', 'b', 'r'][k as usize - 1]
}

/// `c1 c2 ... cn` over `{y, g, b, r}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorSequence {
    pub symbols: String,
}

impl ColorSequence {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Colours `1..=4` per vertex.
    pub fn colors(&self) -> Result<Vec<u8>> {
        self.symbols.chars().map(color_of).collect()
    }
}

impl FromStr for ColorSequence {
    type Err = FwfError;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s.trim().to_ascii_lowercase();
        for c in symbols.chars() {
            color_of(c)?;
        }
        Ok(ColorSequence { symbols })
    }
}

impl fmt::Display for ColorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols)
    }
}

/// A (2,2)-FWF graph in colour coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fwf22 {
    pub sequence: ColorSequence,
    pub graph: Triangulation,
    /// The unique colouring; equal to the sequence.
    pub coloring: Coloring,
    /// First degree-3 vertex (axis 1).
    pub x: VertexId,
    /// Central vertex, adjacent to everything else.
    pub u: VertexId,
    /// Second degree-3 vertex, the last one inserted.
    pub y: VertexId,
    pub axis2: VertexId,
}

impl Fwf22 {
    /// True when the neighbour triangles of `x` and `y` share an edge.
    pub fn is_adjacent_type(&self) -> bool {
        self.graph.common_neighbors(self.x, self.y).len() >= 2
    }

    /// Some colour-sequence presentation of `g`, found by matching
    /// certificates against every sequence of the same order.
    pub fn from_graph(g: &Triangulation) -> Result<Fwf22> {
        if !super::is_fwf22(g) {
            return Err(FwfError::NotTwoTwoFwf("need an FWF graph with two degree-3 vertices at distance 2".into()));
        }
        let cert = canonical_certificate(g);
        all_sequences(g.order())
            .into_iter()
            .filter_map(|s| fwf22_from_color_sequence(&s).ok())
            .find(|f| canonical_certificate(&f.graph) == cert)
            .ok_or(FwfError::NoColorSequence)
    }
}

/// Build the (2,2)-FWF graph a colour sequence describes.
pub fn fwf22_from_color_sequence(seq: &ColorSequence) -> Result<Fwf22> {
    let colors = seq.colors()?;
    let n = colors.len();
    let want = &PREFIX[..n.min(PREFIX.len())];
    if n < 5 || !seq.symbols.starts_with(want) {
        return Err(FwfError::BadPrefix { expected: PREFIX[..n.clamp(5, 6)].to_string(), found: seq.symbols.clone() });
    }
    let mut g = Triangulation::k4().insert_vertex_in_face(&[1, 2, 3])?;
    if n >= 6 {
        g = g.insert_vertex_in_face(&[1, 3, 4])?;
    }
    for k in 6..n {
        let last = k - 1;
        let face = g
            .neighbors(last)
            .iter()
            .copied()
            .filter(|&a| a != U)
            .find(|&a| {
                let used = [RED, colors[last], colors[a]];
                !used.contains(&colors[k]) && colors[k] != RED
            })
            .ok_or(FwfError::NoLegalFace { pos: k + 1, symbol: seq.symbols.as_bytes()[k] as char })?;
        g = g.insert_vertex_in_face(&[last, U, face])?;
    }
    Ok(Fwf22 {
        sequence: seq.clone(),
        graph: g,
        coloring: Coloring::new(colors, 4),
        x: 0,
        u: U,
        y: n - 1,
        axis2: 1,
    })
}

/// Every buildable colour sequence of length `n`, in lexicographic order of
/// face choices.
pub fn all_sequences(n: usize) -> Vec<ColorSequence> {
    if n < 5 {
        return Vec::new();
    }
    let mut out = vec![(PREFIX[..n.min(6)].to_string(), Vec::<u8>::new())];
    for s in out.iter_mut() {
        s.1 = s.0.chars().map(|c| color_of(c).unwrap()).collect();
    }
    for _ in 6..n {
        let mut next = Vec::new();
        for (s, c) in out {
            let last = *c.last().unwrap();
            for k in 1..=3u8 {
                if k != last {
                    let mut s2 = s.clone();
                    s2.push(symbol_of(k));
                    let mut c2 = c.clone();
                    c2.push(k);
                    next.push((s2, c2));
                }
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(symbols, _)| ColorSequence { symbols })
        .filter(|s| fwf22_from_color_sequence(s).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{enumerate_partitions, is_uniquely_colorable};
    use crate::fwf::{degree_three, is_fwf};

    fn build(s: &str) -> Result<Fwf22> {
        fwf22_from_color_sequence(&s.parse()?)
    }

    #[test]
    fn order_six() {
        let f = build("ygbryb").unwrap();
        assert_eq!(f.graph.order(), 6);
        assert_eq!(degree_three(&f.graph), vec![0, 5]);
        assert!(f.coloring.is_proper(&f.graph));
    }

    #[test]
    fn example_order_nine() {
        let f = build("ygbrybgyg").unwrap();
        let g = &f.graph;
        assert_eq!(g.order(), 9);
        assert!(g.is_maximal());
        assert_eq!(degree_three(g), vec![f.x, f.y]);
        assert!(!g.adjacent(f.x, f.y));
        assert!(!g.common_neighbors(f.x, f.y).is_empty());
        assert_eq!(g.degree(f.u), 8);
        assert_eq!((0..9).filter(|&v| g.degree(v) == 8).count(), 1);
        let p = enumerate_partitions(g, 4);
        assert_eq!(p.len(), 1);
        assert_eq!(p.partitions[0], f.coloring.partition());
        assert_eq!(is_fwf(g).map(|o| o.len()), Some(5));
    }

    #[test]
    fn bad_prefix() {
        assert!(matches!(build("gybryb"), Err(FwfError::BadPrefix { .. })));
        assert!(matches!(build("ygbr"), Err(FwfError::BadPrefix { .. })));
        assert!(matches!(build("ygbrx"), Err(FwfError::BadSymbol('x'))));
    }

    #[test]
    fn no_legal_face() {
        // red is never legal, and neither is repeating the previous colour
        assert!(matches!(build("ygbrybr"), Err(FwfError::NoLegalFace { pos: 7, .. })));
        assert!(matches!(build("ygbrybb"), Err(FwfError::NoLegalFace { pos: 7, .. })));
    }

    #[test]
    fn seventh_symbol_decides_type() {
        assert!(build("ygbryby").unwrap().is_adjacent_type());
        assert!(!build("ygbrybg").unwrap().is_adjacent_type());
    }

    #[test]
    fn every_sequence_is_uniquely_colourable() {
        for n in 5..=10 {
            let seqs = all_sequences(n);
            assert_eq!(seqs.len(), 1 << n.saturating_sub(6));
            for s in seqs {
                let f = fwf22_from_color_sequence(&s).unwrap();
                assert!(is_uniquely_colorable(&f.graph, 4).unwrap(), "{s}");
                assert!(f.coloring.is_proper(&f.graph));
                assert!(is_fwf(&f.graph).is_some());
                assert_eq!(f.graph.degree(f.u), n - 1);
            }
        }
    }

    #[test]
    fn centre_need_not_be_the_only_full_vertex() {
        // alternating y/b keeps axis 2 adjacent to every vertex as well
        let f = build("ygbrybyby").unwrap();
        let full: Vec<_> = (0..9).filter(|&v| f.graph.degree(v) == 8).collect();
        assert_eq!(full, vec![1, f.u]);
    }

    #[test]
    fn from_graph_round_trip() {
        let f = build("ygbrybgyg").unwrap();
        let perm: Vec<VertexId> = (0..9).rev().collect();
        let h = f.graph.relabel(&perm);
        let back = Fwf22::from_graph(&h).unwrap();
        assert_eq!(canonical_certificate(&back.graph), canonical_certificate(&f.graph));
        assert!(matches!(Fwf22::from_graph(&Triangulation::octahedron()), Err(FwfError::NotTwoTwoFwf(_))));
    }
}
