//! Wheel operations: contracting a k-wheel to shrink a triangulation, the
//! matching extensions, colour-guided contractions and replayable traces.
//!
//! Contractions always take the form "delete the centre, then identify a
//! sequence of vertex pairs". A step records that sequence together with the
//! pre-step rotations of every vertex it touches, which is enough to rebuild
//! the larger graph from the smaller one.
//!
//! Parallel edges never appear in a stored graph. Where a contraction would
//! create a digon the duplicate edge is dropped, and the result is a plane
//! graph with a larger face; a later 2-wheel step removes the vertex left
//! inside it.

mod colored;
mod extend;
mod reduce;

pub use colored::{all_colored_contractions, colored_contract, ColoredContraction, SixWheelType};
pub use extend::{all_extension_sites, extend_composite, extend_wheel, ExtendSite};
pub use reduce::{reduce_to_k3, ContractionTrace};

use crate::coloring::Coloring;
use crate::triangulation::{canonical_certificate, canonical_labeling, Triangulation, TriangulationError, VertexId, VertexMap};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WheelError {
    #[error("vertex {v} has degree {found}, expected {expected}")]
    WrongDegree { v: VertexId, expected: usize, found: usize },
    #[error("wheel operations are defined for k in 2..=5, got {0}")]
    UnsupportedDegree(usize),
    #[error("the faces around vertex {0} do not form a wheel")]
    NotAWheel(VertexId),
    #[error("no contractible vertex pair in the link of {0}")]
    NoValidPair(VertexId),
    #[error("invalid extension site: {0}")]
    BadSite(String),
    #[error("colouring is not a proper colouring with at most four colours")]
    NotProper,
    #[error("no merge order closes the hole around vertex {0}")]
    HoleStaysOpen(VertexId),
    #[error("step does not match the graph: {0}")]
    TraceMismatch(String),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

pub type Result<T> = std::result::Result<T, WheelError>;

/// One contraction, invertible from the contracted graph alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionStep {
    /// Wheel size, the degree of the centre.
    pub kind: usize,
    pub center: VertexId,
    /// Pairs identified after deleting the centre, in pre-step ids, in order.
    pub merged_pairs: Vec<[VertexId; 2]>,
    pub coloring_before: Option<Coloring>,
    pub n_before: usize,
    /// Pre-step id to post-step id; the centre maps to `None`.
    pub vertex_map: VertexMap,
    /// Pre-step rotations of every vertex whose rotation the step changes.
    pub local_rotations: Vec<(VertexId, Vec<VertexId>)>,
    /// Certificate of the contracted graph, hex.
    pub result_certificate: String,
}

fn compose(a: &VertexMap, b: &VertexMap) -> VertexMap {
    a.iter().map(|x| x.and_then(|y| b[y])).collect()
}

/// Delete `center`, then identify `pairs` (pre-step ids) one after another.
pub(crate) fn apply_contraction(
    g: &Triangulation,
    center: VertexId,
    pairs: &[[VertexId; 2]],
) -> Result<(Triangulation, VertexMap)> {
    let (mut h, mut map) = g.delete_vertex_mapped(center)?;
    for &[a, b] in pairs {
        let (x, y) = match (map[a], map[b]) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(WheelError::TraceMismatch(format!("pair {a},{b} touches the centre"))),
        };
        let (h2, m2) = h.identify_vertices_mapped(x, y)?;
        map = compose(&map, &m2);
        h = h2;
    }
    Ok((h, map))
}

fn same_cycle(a: &[VertexId], b: &[VertexId]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i])))
}

impl ContractionStep {
    /// Run the contraction on `g`, which must be the graph the step was taken on.
    pub(crate) fn build(
        g: &Triangulation,
        kind: usize,
        center: VertexId,
        pairs: Vec<[VertexId; 2]>,
        coloring_before: Option<Coloring>,
    ) -> Result<(Triangulation, ContractionStep)> {
        let (h, map) = apply_contraction(g, center, &pairs)?;
        let mut touched: BTreeSet<VertexId> = BTreeSet::new();
        touched.insert(center);
        touched.extend(g.neighbors(center).iter().copied());
        for &[a, b] in &pairs {
            for x in [a, b] {
                touched.insert(x);
                touched.extend(g.neighbors(x).iter().copied());
            }
        }
        let local_rotations = touched.into_iter().map(|x| (x, g.neighbors(x).to_vec())).collect();
        let step = ContractionStep {
            kind,
            center,
            merged_pairs: pairs,
            coloring_before,
            n_before: g.order(),
            vertex_map: map,
            local_rotations,
            result_certificate: canonical_certificate(&h).to_hex(),
        };
        Ok((h, step))
    }

    /// Contract `g` again; fails unless `g` agrees with the recorded local structure.
    pub fn apply(&self, g: &Triangulation) -> Result<Triangulation> {
        if g.order() != self.n_before {
            return Err(WheelError::TraceMismatch(format!("order {} but step expects {}", g.order(), self.n_before)));
        }
        for (x, r) in &self.local_rotations {
            if !same_cycle(g.neighbors(*x), r) {
                return Err(WheelError::TraceMismatch(format!("rotation at {x} differs")));
            }
        }
        Ok(apply_contraction(g, self.center, &self.merged_pairs)?.0)
    }

    /// Rebuild the pre-step graph and colouring from the contracted graph.
    pub fn recover(&self, h: &Triangulation) -> Result<(Triangulation, Option<Coloring>)> {
        let mismatch = |m: String| WheelError::TraceMismatch(m);
        let n_after = self.vertex_map.iter().flatten().collect::<BTreeSet<_>>().len();
        if h.order() != n_after || self.vertex_map.len() != self.n_before {
            return Err(mismatch(format!("order {} but step expects {}", h.order(), n_after)));
        }
        let mut preimage: Vec<Vec<VertexId>> = vec![Vec::new(); n_after];
        for (old, new) in self.vertex_map.iter().enumerate() {
            if let Some(y) = new {
                preimage[*y].push(old);
            }
        }
        let stored: std::collections::HashMap<VertexId, &Vec<VertexId>> =
            self.local_rotations.iter().map(|(x, r)| (*x, r)).collect();
        let mut rot = Vec::with_capacity(self.n_before);
        for x in 0..self.n_before {
            if let Some(r) = stored.get(&x) {
                rot.push((*r).clone());
                continue;
            }
            let y = self.vertex_map[x].ok_or_else(|| mismatch(format!("no rotation recorded for {x}")))?;
            let mut r = Vec::with_capacity(h.degree(y));
            for &z in h.neighbors(y) {
                match preimage[z].as_slice() {
                    [o] => r.push(*o),
                    _ => return Err(mismatch(format!("neighbour {z} of {y} has no unique preimage"))),
                }
            }
            rot.push(r);
        }
        let g = Triangulation::from_rotation_plane(rot).map_err(|e| mismatch(e.to_string()))?;
        let again = apply_contraction(&g, self.center, &self.merged_pairs).map_err(|e| mismatch(e.to_string()))?.0;
        if again.normalized() != h.normalized() {
            return Err(mismatch("contracting the rebuilt graph does not reproduce the input".into()));
        }
        Ok((g, self.coloring_before.clone()))
    }
}

/// Inverse of a recorded contraction.
pub fn recover_extend(h: &Triangulation, step: &ContractionStep) -> Result<(Triangulation, Option<Coloring>)> {
    step.recover(h)
}

/// Link of `v` if the faces around it are all triangles (or, for degree 2,
/// if its two neighbours are adjacent).
pub(crate) fn wheel_link(g: &Triangulation, v: VertexId) -> Result<Vec<VertexId>> {
    let l = g.link(v)?;
    let d = l.len();
    let ok = match d {
        0 | 1 => false,
        2 => g.adjacent(l[0], l[1]),
        _ => (0..d).all(|i| {
            let (a, b) = (l[i], l[(i + 1) % d]);
            g.adjacent(a, b) && g.succ(b, v) == a && g.succ(a, b) == v
        }),
    };
    if ok {
        Ok(l)
    } else {
        Err(WheelError::NotAWheel(v))
    }
}

/// Link pairs at distance two whose identification a k-wheel contraction may use.
fn candidate_pairs(g: &Triangulation, link: &[VertexId]) -> Vec<[VertexId; 2]> {
    let k = link.len();
    let m = if k == 4 { 2 } else { k };
    (0..m)
        .map(|i| [link[(i + k - 1) % k], link[(i + 1) % k]])
        .filter(|&[a, b]| !g.adjacent(a, b))
        .collect()
}

/// Contract the k-wheel centred at `v` using the default pair choice.
pub fn contract_wheel(g: &Triangulation, v: VertexId, k: usize) -> Result<(Triangulation, ContractionStep)> {
    contract_wheel_with(g, v, k, None)
}

/// Admissible contractions at `v` in preference order: results that are
/// maximal first, then by the least canonical label in the pair.
pub(crate) fn ranked_contractions(g: &Triangulation, v: VertexId, lab: &[VertexId]) -> Result<Vec<(bool, Vec<[VertexId; 2]>)>> {
    let k = g.degree(v);
    if !(2..=5).contains(&k) {
        return Err(WheelError::UnsupportedDegree(k));
    }
    let link = wheel_link(g, v)?;
    let options: Vec<Vec<[VertexId; 2]>> = if k <= 3 {
        vec![vec![]]
    } else {
        candidate_pairs(g, &link).into_iter().map(|p| vec![p]).collect()
    };
    let mut ranked = Vec::new();
    for pairs in options {
        let maximal = match apply_contraction(g, v, &pairs) {
            Ok((h, _)) => h.is_maximal(),
            Err(_) => continue,
        };
        let key = pairs.first().map_or(0, |p| lab[p[0]].min(lab[p[1]]));
        ranked.push((!maximal, key, maximal, pairs));
    }
    ranked.sort_by_key(|a| (a.0, a.1));
    Ok(ranked.into_iter().map(|(_, _, m, p)| (m, p)).collect())
}

/// As [`contract_wheel`], with `choice` selecting among the admissible link
/// pairs (listed in link order) instead of the default.
pub fn contract_wheel_with(
    g: &Triangulation,
    v: VertexId,
    k: usize,
    choice: Option<usize>,
) -> Result<(Triangulation, ContractionStep)> {
    if !(2..=5).contains(&k) {
        return Err(WheelError::UnsupportedDegree(k));
    }
    if !g.contains(v) {
        return Err(TriangulationError::UnknownVertex(v).into());
    }
    let d = g.degree(v);
    if d != k {
        return Err(WheelError::WrongDegree { v, expected: k, found: d });
    }
    let link = wheel_link(g, v)?;
    let pairs = if k <= 3 {
        vec![]
    } else {
        let cands = candidate_pairs(g, &link);
        if cands.is_empty() {
            return Err(WheelError::NoValidPair(v));
        }
        match choice {
            Some(i) => vec![*cands.get(i).ok_or(WheelError::NoValidPair(v))?],
            None => {
                let (_, lab) = canonical_labeling(g);
                let ranked = ranked_contractions(g, v, &lab)?;
                ranked.into_iter().next().ok_or(WheelError::NoValidPair(v))?.1
            }
        }
    };
    ContractionStep::build(g, k, v, pairs, None)
}
