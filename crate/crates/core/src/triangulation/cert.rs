//! Canonical certificates for embedded graphs.
//!
//! A breadth-first walk from a starting dart, reading each rotation in a fixed
//! direction, assigns labels in discovery order and emits the relabelled
//! rotation system. The certificate is the least such code over all starting
//! darts (restricted to an isomorphism-invariant degree class) and both
//! directions, so mirror images share a certificate.

use super::{Triangulation, VertexId};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IsoCertificate(pub Vec<u8>);

impl IsoCertificate {
    /// Lower-case hex rendering used in reports.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for IsoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cert({})", self.to_hex())
    }
}

/// Vertex permutation preserving the embedding, possibly reversing orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub perm: Vec<VertexId>,
    pub reflects: bool,
}

struct Walk {
    code: Vec<u8>,
    label: Vec<u8>,
    order: Vec<VertexId>,
}

/// Result of comparing a partial walk against the incumbent.
enum Outcome {
    Worse,
    Equal,
    Better,
}

fn walk(g: &Triangulation, u: VertexId, v: VertexId, reverse: bool, best: Option<&[u8]>, w: &mut Walk) -> Outcome {
    let n = g.order();
    w.code.clear();
    w.order.clear();
    w.label.clear();
    w.label.resize(n, 0);
    let mut entry = vec![usize::MAX; n];
    w.label[u] = 1;
    entry[u] = v;
    w.order.push(u);
    let mut next: u8 = 2;
    let mut head = 0;
    let mut state = if best.is_some() { Outcome::Equal } else { Outcome::Better };
    let push = |code: &mut Vec<u8>, x: u8, state: &mut Outcome| -> bool {
        let i = code.len();
        code.push(x);
        if let (Outcome::Equal, Some(b)) = (&*state, best) {
            match x.cmp(&b[i]) {
                std::cmp::Ordering::Greater => {
                    *state = Outcome::Worse;
                    return false;
                }
                std::cmp::Ordering::Less => *state = Outcome::Better,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    };
    while head < w.order.len() {
        let x = w.order[head];
        head += 1;
        let r = &g.rot[x];
        let d = r.len();
        let p0 = g.pos(x, entry[x]);
        for i in 0..d {
            let y = if reverse { r[(p0 + d - i) % d] } else { r[(p0 + i) % d] };
            if w.label[y] == 0 {
                w.label[y] = next;
                next += 1;
                entry[y] = x;
                w.order.push(y);
            }
            let ly = w.label[y];
            if !push(&mut w.code, ly, &mut state) {
                return Outcome::Worse;
            }
        }
        if !push(&mut w.code, 0, &mut state) {
            return Outcome::Worse;
        }
    }
    state
}

/// Starting darts: those whose (tail degree, head degree) pair is least.
fn starts(g: &Triangulation) -> Vec<(VertexId, VertexId)> {
    let mut best = (usize::MAX, usize::MAX);
    let mut out = Vec::new();
    for u in 0..g.order() {
        for &v in &g.rot[u] {
            let key = (g.degree(u), g.degree(v));
            if key < best {
                best = key;
                out.clear();
            }
            if key == best {
                out.push((u, v));
            }
        }
    }
    out
}

struct Search {
    code: Vec<u8>,
    optimal: Vec<(Vec<u8>, bool)>,
}

fn search(g: &Triangulation, keep_all: bool) -> Search {
    let n = g.order();
    assert!(n < 255, "certificates support fewer than 255 vertices");
    let mut best: Option<Vec<u8>> = None;
    let mut optimal: Vec<(Vec<u8>, bool)> = Vec::new();
    let mut w = Walk { code: Vec::new(), label: Vec::new(), order: Vec::new() };
    for (u, v) in starts(g) {
        for reverse in [false, true] {
            match walk(g, u, v, reverse, best.as_deref(), &mut w) {
                Outcome::Worse => {}
                Outcome::Better => {
                    best = Some(w.code.clone());
                    optimal.clear();
                    if keep_all || optimal.is_empty() {
                        optimal.push((w.label.clone(), reverse));
                    }
                }
                Outcome::Equal => {
                    if keep_all {
                        optimal.push((w.label.clone(), reverse));
                    }
                }
            }
        }
    }
    let mut code = vec![n as u8];
    code.extend(best.unwrap_or_default());
    Search { code, optimal }
}

/// Least face-walk code over all admissible starts and both orientations.
pub fn canonical_certificate(g: &Triangulation) -> IsoCertificate {
    if g.order() <= 2 {
        return IsoCertificate(vec![g.order() as u8, g.edge_count() as u8]);
    }
    IsoCertificate(search(g, false).code)
}

/// Certificate together with a canonical labelling `lab[v]` (0-based).
pub fn canonical_labeling(g: &Triangulation) -> (IsoCertificate, Vec<VertexId>) {
    let s = search(g, false);
    let lab = s.optimal[0].0.iter().map(|&l| l as usize - 1).collect();
    (IsoCertificate(s.code), lab)
}

/// All automorphisms of the embedded graph, mirror maps included.
pub fn automorphisms(g: &Triangulation) -> Vec<Automorphism> {
    let s = search(g, true);
    let (l0, r0) = &s.optimal[0];
    let n = g.order();
    let mut inv0 = vec![0; n];
    for v in 0..n {
        inv0[l0[v] as usize - 1] = v;
    }
    s.optimal
        .iter()
        .map(|(l, r)| Automorphism {
            perm: (0..n).map(|v| inv0[l[v] as usize - 1]).collect(),
            reflects: r != r0,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shuffle(g: &Triangulation, seed: u64) -> Triangulation {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (s >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        g.relabel(&perm)
    }

    #[test]
    fn relabel_invariance() {
        let g = Triangulation::octahedron();
        let c = canonical_certificate(&g);
        for seed in 0..10 {
            assert_eq!(canonical_certificate(&shuffle(&g, seed)), c);
        }
        assert_eq!(canonical_certificate(&g.mirror()), c);
    }

    #[test]
    fn automorphism_groups() {
        // |Aut| including reflections: K4 -> 24, octahedron -> 48, icosahedron -> 120
        assert_eq!(automorphisms(&Triangulation::k4()).len(), 24);
        assert_eq!(automorphisms(&Triangulation::octahedron()).len(), 48);
        assert_eq!(automorphisms(&Triangulation::icosahedron()).len(), 120);
    }

    #[test]
    fn automorphisms_preserve_edges() {
        let g = Triangulation::icosahedron();
        for a in automorphisms(&g) {
            for (u, v) in g.edges() {
                assert!(g.adjacent(a.perm[u], a.perm[v]));
            }
        }
    }

    #[test]
    fn labeling_reproduces_certificate() {
        let g = shuffle(&Triangulation::icosahedron(), 7);
        let (c, lab) = canonical_labeling(&g);
        let h = g.relabel(&lab);
        assert_eq!(canonical_certificate(&h), c);
    }
}
