//! Wheel extensions. New vertices take the ids `n`, `n + 1`, ... so that the
//! inverse contraction returns the original ids unchanged.

use super::{ContractionStep, Result, WheelError};
use crate::triangulation::{Triangulation, VertexId};
use serde::{Deserialize, Serialize};

/// Where to grow a new wheel centre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtendSite {
    /// 2-wheel beside the dart `a -> b`: a new vertex joined to `a` and `b` only.
    Edge { a: VertexId, b: VertexId },
    /// 3-wheel in a triangular face.
    Face([VertexId; 3]),
    /// 4-wheel on the path `x - u - y`; `u` splits in two.
    Path { x: VertexId, u: VertexId, y: VertexId },
    /// 5-wheel on a funnel: `stem` splits along `top` and the face `(b1, stem, b2)`.
    Funnel { top: VertexId, stem: VertexId, b1: VertexId, b2: VertexId },
}

impl ExtendSite {
    pub fn wheel_size(&self) -> usize {
        match self {
            ExtendSite::Edge { .. } => 2,
            ExtendSite::Face(_) => 3,
            ExtendSite::Path { .. } => 4,
            ExtendSite::Funnel { .. } => 5,
        }
    }
}

fn bad(m: impl Into<String>) -> WheelError {
    WheelError::BadSite(m.into())
}

/// Offset of `a` after `from` in the rotation at `v`.
fn rel(g: &Triangulation, v: VertexId, from: VertexId, a: VertexId) -> usize {
    let r = g.neighbors(v);
    let p0 = r.iter().position(|&x| x == from).unwrap();
    let p = r.iter().position(|&x| x == a).unwrap();
    (p + r.len() - p0) % r.len()
}

/// Faces of `g` with `split` renamed to `twin` on every face whose corner at
/// `split` starts at rotation offset `>= keep` from `from`; the face starting
/// at offset `drop` (if any) is omitted.
fn split_faces(
    g: &Triangulation,
    split: VertexId,
    from: VertexId,
    keep: usize,
    drop: Option<usize>,
    twin: VertexId,
) -> Vec<[VertexId; 3]> {
    let mut out = Vec::new();
    for f in g.faces() {
        let mut f = [f[0], f[1], f[2]];
        if let Some(j) = f.iter().position(|&x| x == split) {
            // corner (a, split, c) with succ_split(a) = c
            let a = f[(j + 2) % 3];
            let off = rel(g, split, from, a);
            if Some(off) == drop {
                continue;
            }
            if off >= keep {
                f[j] = twin;
            }
        }
        out.push(f);
    }
    out
}

fn check_vertices(g: &Triangulation, vs: &[VertexId]) -> Result<()> {
    for &v in vs {
        if !g.contains(v) {
            return Err(bad(format!("unknown vertex {v}")));
        }
    }
    Ok(())
}

/// Grow a new wheel at `site`; returns the larger graph and the step that contracts it back.
pub fn extend_wheel(g: &Triangulation, site: ExtendSite) -> Result<(Triangulation, ContractionStep)> {
    let n = g.order();
    let (h, pairs) = match site {
        ExtendSite::Edge { a, b } => {
            check_vertices(g, &[a, b])?;
            if !g.adjacent(a, b) {
                return Err(bad(format!("{a}-{b} is not an edge")));
            }
            let mut rot: Vec<Vec<VertexId>> = g.rotations().to_vec();
            let pb = rot[b].iter().position(|&x| x == a).unwrap();
            rot[b].insert(pb + 1, n);
            let pa = rot[a].iter().position(|&x| x == b).unwrap();
            rot[a].insert(pa, n);
            rot.push(vec![a, b]);
            (Triangulation::from_rotation_plane(rot)?, vec![])
        }
        ExtendSite::Face(f) => {
            check_vertices(g, &f)?;
            (g.insert_vertex_in_face(&f).map_err(|e| bad(e.to_string()))?, vec![])
        }
        ExtendSite::Path { x, u, y } => {
            check_vertices(g, &[x, u, y])?;
            if !g.is_maximal() {
                return Err(bad("4-wheel extension needs a maximal planar graph"));
            }
            if x == y || !g.adjacent(u, x) || !g.adjacent(u, y) {
                return Err(bad(format!("{x}-{u}-{y} is not a path")));
            }
            let (v, u2) = (n, n + 1);
            let k = rel(g, u, x, y);
            let mut faces = split_faces(g, u, x, k, None, u2);
            faces.extend([[y, u, v], [v, u, x], [x, u2, v], [v, u2, y]]);
            (Triangulation::from_faces(n + 2, &faces)?, vec![[u, u2]])
        }
        ExtendSite::Funnel { top, stem, b1, b2 } => {
            check_vertices(g, &[top, stem, b1, b2])?;
            if !g.is_maximal() {
                return Err(bad("5-wheel extension needs a maximal planar graph"));
            }
            if !g.adjacent(stem, top) || !g.adjacent(stem, b1) || g.succ(stem, b1) != b2 || top == b1 || top == b2 {
                return Err(bad("not a funnel: need top-stem edge and face (b1, stem, b2) avoiding top"));
            }
            let (v, s2) = (n, n + 1);
            let k = rel(g, stem, top, b1);
            let mut faces = split_faces(g, stem, top, k + 1, Some(k), s2);
            faces.extend([[b1, stem, v], [v, stem, top], [top, s2, v], [v, s2, b2], [b2, b1, v]]);
            (Triangulation::from_faces(n + 2, &faces)?, vec![[stem, s2]])
        }
    };
    let (back, step) = ContractionStep::build(&h, site.wheel_size(), n, pairs, None)?;
    debug_assert_eq!(back.normalized(), g.normalized());
    if back.normalized() != g.normalized() {
        return Err(bad("extension does not invert"));
    }
    Ok((h, step))
}

/// A 2-wheel extension followed by a 4-wheel extension, in one move: `w`
/// splits along its neighbours `u` and `y`, and three vertices are added
/// (ids `n`, `n+1`, `n+2` for the 4-wheel centre, the 2-wheel vertex and
/// the split copy of `w`). Needed to reach triangulations, such as the
/// octahedron, that no single simple extension produces.
pub fn extend_composite(g: &Triangulation, w: VertexId, u: VertexId, y: VertexId) -> Result<Triangulation> {
    check_vertices(g, &[w, u, y])?;
    if !g.is_maximal() {
        return Err(bad("composite extension needs a maximal planar graph"));
    }
    if u == y || !g.adjacent(w, u) || !g.adjacent(w, y) {
        return Err(bad(format!("{u} and {y} must be distinct neighbours of {w}")));
    }
    let n = g.order();
    let (v, v2, v3) = (n, n + 1, n + 2);
    let v1 = w;
    let k = rel(g, w, u, y);
    let mut faces = split_faces(g, w, u, k, None, v3);
    faces.extend([[y, v1, v], [v, v1, v2], [v2, v1, u], [u, v3, v2], [v2, v3, v], [v, v3, y]]);
    Ok(Triangulation::from_faces(n + 3, &faces)?)
}

/// Every face, every path `x - u - y` through a common neighbour and every
/// funnel, the inputs [`extend_wheel`] accepts for wheel sizes 3 to 5.
pub fn all_extension_sites(g: &Triangulation) -> Vec<ExtendSite> {
    let mut out: Vec<ExtendSite> = g.triangles().into_iter().map(ExtendSite::Face).collect();
    for u in 0..g.order() {
        let nb = g.neighbors(u);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                out.push(ExtendSite::Path { x, u, y });
            }
        }
        for &b1 in nb {
            let b2 = g.succ(u, b1);
            for &top in nb {
                if top != b1 && top != b2 {
                    out.push(ExtendSite::Funnel { top, stem: u, b1, b2 });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::canonical_certificate;
    use crate::wheelops::{contract_wheel_with, recover_extend};

    #[test]
    fn three_wheel() {
        let g = Triangulation::k4();
        let f = g.faces()[0].clone();
        let (h, step) = extend_wheel(&g, ExtendSite::Face([f[0], f[1], f[2]])).unwrap();
        assert_eq!(h.order(), 5);
        assert_eq!(h.degree(4), 3);
        assert!(h.is_maximal());
        let (back, _) = recover_extend(&g, &step).unwrap();
        assert_eq!(back.normalized(), h.normalized());
    }

    #[test]
    fn four_wheel_on_path() {
        let g = Triangulation::icosahedron();
        let u = 0;
        let x = g.neighbors(u)[0];
        let y = g.neighbors(u)[2];
        let (h, step) = extend_wheel(&g, ExtendSite::Path { x, u, y }).unwrap();
        assert_eq!(h.order(), 14);
        assert_eq!(h.degree(12), 4);
        assert!(h.is_maximal());
        assert_eq!(step.kind, 4);
        assert_eq!(step.merged_pairs, vec![[0, 13]]);
        let (c, _) = contract_wheel_with(&h, 12, 4, Some(1)).unwrap();
        assert_eq!(canonical_certificate(&c), canonical_certificate(&g));
    }

    #[test]
    fn five_wheel_on_funnel() {
        let g = Triangulation::icosahedron();
        let stem = 0;
        let top = g.neighbors(stem)[0];
        let b1 = g.neighbors(stem)[2];
        let b2 = g.succ(stem, b1);
        let (h, _) = extend_wheel(&g, ExtendSite::Funnel { top, stem, b1, b2 }).unwrap();
        assert_eq!(h.order(), 14);
        assert_eq!(h.degree(12), 5);
        assert!(h.is_maximal());
        let bad = extend_wheel(&g, ExtendSite::Funnel { top: b1, stem, b1, b2 });
        assert!(matches!(bad, Err(WheelError::BadSite(_))));
    }

    #[test]
    fn two_wheel_is_not_maximal() {
        let g = Triangulation::k4();
        let (h, step) = extend_wheel(&g, ExtendSite::Edge { a: 0, b: 1 }).unwrap();
        assert_eq!(h.degree(4), 2);
        assert!(!h.is_maximal());
        assert_eq!(step.kind, 2);
    }

    #[test]
    fn composite_from_k3_is_octahedron() {
        let g = Triangulation::k3();
        let h = extend_composite(&g, 0, 1, 2).unwrap();
        assert_eq!(canonical_certificate(&h), canonical_certificate(&Triangulation::octahedron()));
    }
}
