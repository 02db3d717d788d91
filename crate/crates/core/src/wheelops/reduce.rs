//! Reduction of a triangulation to `K3` by wheel contractions.

use super::{ranked_contractions, ContractionStep, Result, WheelError};
use crate::triangulation::{canonical_certificate, canonical_labeling, IsoCertificate, Triangulation};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Ordered contraction steps from a graph down to `K3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionTrace {
    pub initial_certificate: String,
    pub final_certificate: String,
    pub steps: Vec<ContractionStep>,
}

impl ContractionTrace {
    /// Apply every step to `g`, checking each against the recorded structure.
    pub fn replay_forward(&self, g: &Triangulation) -> Result<Triangulation> {
        if canonical_certificate(g).to_hex() != self.initial_certificate {
            return Err(WheelError::TraceMismatch("initial certificate differs".into()));
        }
        let mut h = g.clone();
        for s in &self.steps {
            h = s.apply(&h)?;
        }
        if canonical_certificate(&h).to_hex() != self.final_certificate {
            return Err(WheelError::TraceMismatch("final certificate differs".into()));
        }
        Ok(h)
    }

    /// Undo every step starting from the final graph.
    pub fn replay_backward(&self, last: &Triangulation) -> Result<Triangulation> {
        let mut h = last.clone();
        for s in self.steps.iter().rev() {
            h = s.recover(&h)?.0;
        }
        Ok(h)
    }

    /// Wheel sizes in order.
    pub fn kinds(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.kind).collect()
    }
}

fn is_k3(g: &Triangulation) -> bool {
    g.order() == 3 && g.edge_count() == 3
}

/// Depth-first over contractions: least degree first, then contractions with
/// a maximal result, then canonical vertex order. Dead ends (graphs from
/// which `K3` is unreachable by these moves) are remembered by certificate.
fn dfs(g: &Triangulation, dead: &mut HashSet<IsoCertificate>, steps: &mut Vec<ContractionStep>) -> Result<bool> {
    if g.order() <= 3 {
        return Ok(is_k3(g));
    }
    let cert = canonical_certificate(g);
    if dead.contains(&cert) {
        return Ok(false);
    }
    let (_, lab) = canonical_labeling(g);
    let mut order: Vec<usize> = (0..g.order()).filter(|&v| (2..=5).contains(&g.degree(v))).collect();
    order.sort_by_key(|&v| (g.degree(v), lab[v]));
    let mut moves = Vec::new();
    for v in order {
        let Ok(ranked) = ranked_contractions(g, v, &lab) else { continue };
        for (maximal, pairs) in ranked {
            moves.push((g.degree(v), !maximal, lab[v], v, pairs));
        }
    }
    moves.sort_by_key(|a| (a.0, a.1, a.2));
    for (d, _, _, v, pairs) in moves {
        let (h, step) = ContractionStep::build(g, d, v, pairs, None)?;
        steps.push(step);
        if dfs(&h, dead, steps)? {
            return Ok(true);
        }
        steps.pop();
    }
    dead.insert(cert);
    Ok(false)
}

/// A contraction trace ending at `K3`.
pub fn reduce_to_k3(g: &Triangulation) -> Result<ContractionTrace> {
    if g.order() < 3 {
        return Err(crate::triangulation::TriangulationError::OrderTooSmall.into());
    }
    let mut steps = Vec::new();
    let mut dead = HashSet::new();
    if !dfs(g, &mut dead, &mut steps)? {
        return Err(WheelError::TraceMismatch("no contraction sequence reaches K3".into()));
    }
    Ok(ContractionTrace {
        initial_certificate: canonical_certificate(g).to_hex(),
        final_certificate: canonical_certificate(&Triangulation::k3()).to_hex(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_single_step() {
        let t = reduce_to_k3(&Triangulation::k4()).unwrap();
        assert_eq!(t.kinds(), vec![3]);
    }

    #[test]
    fn icosahedron_starts_with_five() {
        let g = Triangulation::icosahedron();
        let t = reduce_to_k3(&g).unwrap();
        assert_eq!(t.kinds()[0], 5);
        let end = t.replay_forward(&g).unwrap();
        assert_eq!((end.order(), end.edge_count()), (3, 3));
        let back = t.replay_backward(&end).unwrap();
        assert_eq!(back.normalized(), g.normalized());
        let json = serde_json::to_string(&t).unwrap();
        let t2: ContractionTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(t, t2);
    }

    #[test]
    fn octahedron_needs_a_two_wheel() {
        let g = Triangulation::octahedron();
        let t = reduce_to_k3(&g).unwrap();
        assert_eq!(t.kinds(), vec![4, 2]);
    }
}
