//! Contractions guided by a 4-colouring: delete the centre, then merge
//! same-coloured link vertices until the hole is triangulated again.

use super::{apply_contraction, wheel_link, ContractionStep, Result, WheelError};
use crate::coloring::Coloring;
use crate::triangulation::{canonical_labeling, Triangulation, VertexId, VertexMap};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Shape a 6-wheel collapses to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SixWheelType {
    /// Two pairs merged.
    Line,
    /// Three alternate link vertices merged into one.
    Star,
    /// One opposite pair merged, leaving two triangles.
    Triangles,
}

#[derive(Clone, Debug)]
pub struct ColoredContraction {
    pub graph: Triangulation,
    pub coloring: Coloring,
    pub step: ContractionStep,
    pub six_wheel_type: Option<SixWheelType>,
}

/// Pieces of the hole left by the centre that are not yet triangles.
///
/// `cycle` is the link after merges. A merged pair may share neighbours
/// outside the wheel; the parallel edges this creates bound separating
/// digons that the simple representation drops, so `is_maximal` on the
/// result is the wrong stopping test.
fn open_pieces(cycle: &[VertexId], out: &mut Vec<Vec<VertexId>>) {
    let mut c: Vec<VertexId> = cycle.to_vec();
    c.dedup();
    while c.len() > 1 && c.first() == c.last() {
        c.pop();
    }
    if c.len() <= 3 {
        return;
    }
    for i in 0..c.len() {
        if let Some(j) = (i + 1..c.len()).find(|&j| c[j] == c[i]) {
            let outer: Vec<VertexId> = c[j..].iter().chain(&c[..i]).copied().collect();
            open_pieces(&c[i..j], out);
            open_pieces(&outer, out);
            return;
        }
    }
    out.push(c);
}

struct Search<'a> {
    g: &'a Triangulation,
    f: &'a Coloring,
    v: VertexId,
    link: &'a [VertexId],
    cands: Vec<[VertexId; 2]>,
}

impl Search<'_> {
    /// Merge sequences of exactly `depth` further merges that close the hole,
    /// each merge joining two vertices of one open piece. Stops after the
    /// first hit unless `all`.
    fn run(&self, pairs: &mut Vec<[VertexId; 2]>, depth: usize, all: bool, hits: &mut Vec<Vec<[VertexId; 2]>>) {
        let Ok((h, map)) = apply_contraction(self.g, self.v, pairs) else { return };
        let Some(cycle) = self.link.iter().map(|&x| map[x]).collect::<Option<Vec<_>>>() else { return };
        let mut open = Vec::new();
        open_pieces(&cycle, &mut open);
        if open.is_empty() {
            if depth == 0 {
                hits.push(pairs.clone());
            }
            return;
        }
        if depth == 0 {
            return;
        }
        for &[a, b] in &self.cands {
            let (Some(x), Some(y)) = (map[a], map[b]) else { continue };
            if x == y || h.adjacent(x, y) || self.f.colors[a] != self.f.colors[b] {
                continue;
            }
            if !open.iter().any(|p| p.contains(&x) && p.contains(&y)) {
                continue;
            }
            pairs.push([a, b]);
            self.run(pairs, depth - 1, all, hits);
            pairs.pop();
            if !all && !hits.is_empty() {
                return;
            }
        }
    }
}

fn classify(map: &VertexMap, link: &[VertexId]) -> Option<SixWheelType> {
    let mut groups: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &x in link {
        *groups.entry(map[x]?).or_default() += 1;
    }
    let mut sizes: Vec<usize> = groups.values().copied().filter(|&s| s > 1).collect();
    sizes.sort_unstable();
    match sizes.as_slice() {
        [2] => Some(SixWheelType::Triangles),
        [3] => Some(SixWheelType::Star),
        [2, 2] => Some(SixWheelType::Line),
        _ => None,
    }
}

fn prepare<'a>(g: &'a Triangulation, f: &'a Coloring, v: VertexId, link: &'a [VertexId]) -> Result<Search<'a>> {
    if f.k > 4 || !f.is_proper(g) {
        return Err(WheelError::NotProper);
    }
    let (_, lab) = canonical_labeling(g);
    let mut cands = Vec::new();
    for (i, &a) in link.iter().enumerate() {
        for &b in &link[i + 1..] {
            if f.colors[a] == f.colors[b] && !g.adjacent(a, b) {
                let (p, q) = if lab[a] <= lab[b] { (a, b) } else { (b, a) };
                cands.push([p, q]);
            }
        }
    }
    cands.sort_by_key(|&[a, b]| (lab[a], lab[b]));
    Ok(Search { g, f, v, link, cands })
}

fn finish(g: &Triangulation, f: &Coloring, v: VertexId, link: &[VertexId], pairs: Vec<[VertexId; 2]>) -> Result<ColoredContraction> {
    let (h, map) = apply_contraction(g, v, &pairs)?;
    let mut colors = vec![0u8; h.order()];
    for (x, y) in map.iter().enumerate() {
        if let Some(y) = y {
            colors[*y] = f.colors[x];
        }
    }
    let coloring = Coloring::new(colors, f.k);
    debug_assert!(coloring.is_proper(&h));
    let d = link.len();
    let six_wheel_type = if d == 6 { classify(&map, link) } else { None };
    let (graph, step) = ContractionStep::build(g, d, v, pairs, Some(f.clone()))?;
    Ok(ColoredContraction { graph, coloring, step, six_wheel_type })
}

fn link_checked(g: &Triangulation, v: VertexId) -> Result<Vec<VertexId>> {
    let d = g.degree(v);
    if d < 3 {
        return Err(WheelError::WrongDegree { v, expected: 3, found: d });
    }
    wheel_link(g, v)
}

/// Colour-guided contraction at `v` with as few merges as possible. Each
/// merge joins two same-coloured vertices on one face of the hole; ties go
/// to the canonically least pairs.
pub fn colored_contract(g: &Triangulation, f: &Coloring, v: VertexId) -> Result<ColoredContraction> {
    let link = link_checked(g, v)?;
    let s = prepare(g, f, v, &link)?;
    let mut hits = Vec::new();
    for depth in 0..link.len() {
        s.run(&mut Vec::new(), depth, false, &mut hits);
        if let Some(pairs) = hits.pop() {
            return finish(g, f, v, &link, pairs);
        }
    }
    Err(WheelError::HoleStaysOpen(v))
}

/// Every colour-guided contraction at `v`, one per distinct grouping of
/// the link, over all merge orders that stop as soon as the hole closes.
pub fn all_colored_contractions(g: &Triangulation, f: &Coloring, v: VertexId) -> Result<Vec<ColoredContraction>> {
    let link = link_checked(g, v)?;
    let s = prepare(g, f, v, &link)?;
    let mut hits = Vec::new();
    for depth in 0..link.len() {
        s.run(&mut Vec::new(), depth, true, &mut hits);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for pairs in hits {
        let (_, map) = apply_contraction(g, v, &pairs)?;
        let mut groups: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &x in &link {
            groups.entry(map[x].expect("link survives")).or_default().push(x);
        }
        let mut key: Vec<Vec<VertexId>> = groups.into_values().collect();
        key.sort();
        if seen.insert(key) {
            out.push(finish(g, f, v, &link, pairs)?);
        }
    }
    if out.is_empty() {
        return Err(WheelError::HoleStaysOpen(v));
    }
    Ok(out)
}
