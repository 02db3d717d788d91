//! Local surgery on rotation systems.
//!
//! Vertex ids are compacted in order after a removal: ids above the removed
//! vertex shift down by one. Every operation that removes vertices also
//! returns the old-to-new map so callers can carry colourings across.

use super::{Result, Triangulation, TriangulationError, VertexId};

/// `map[old] = Some(new)` or `None` for a removed vertex.
pub type VertexMap = Vec<Option<VertexId>>;

fn compact(rot: Vec<Vec<VertexId>>, removed: &[bool]) -> (Vec<Vec<VertexId>>, VertexMap) {
    let mut map = vec![None; rot.len()];
    let mut next = 0;
    for (v, &r) in removed.iter().enumerate() {
        if !r {
            map[v] = Some(next);
            next += 1;
        }
    }
    let out = rot
        .into_iter()
        .enumerate()
        .filter(|(v, _)| !removed[*v])
        .map(|(_, r)| r.into_iter().map(|u| map[u].expect("edge to removed vertex")).collect())
        .collect();
    (out, map)
}

impl Triangulation {
    /// Remove `v` and its incident edges.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Triangulation> {
        self.delete_vertex_mapped(v).map(|(g, _)| g)
    }

    pub fn delete_vertex_mapped(&self, v: VertexId) -> Result<(Triangulation, VertexMap)> {
        if !self.contains(v) {
            return Err(TriangulationError::UnknownVertex(v));
        }
        if self.order() < 4 {
            return Err(TriangulationError::OrderTooSmall);
        }
        Ok(self.delete_vertices_mapped(&[v]))
    }

    /// Remove several vertices; the caller guarantees the rest stays connected.
    pub(crate) fn delete_vertices_mapped(&self, vs: &[VertexId]) -> (Triangulation, VertexMap) {
        let mut removed = vec![false; self.order()];
        for &v in vs {
            removed[v] = true;
        }
        let rot: Vec<Vec<VertexId>> = self
            .rot
            .iter()
            .map(|r| r.iter().copied().filter(|&u| !removed[u]).collect())
            .collect();
        let (rot, map) = compact(rot, &removed);
        (Triangulation::from_rot_unchecked(rot), map)
    }

    /// Merge two non-adjacent vertices that share a face. The merged vertex
    /// keeps the smaller of the two ids (before compaction); parallel edges
    /// created through common neighbours are reduced to one.
    pub fn identify_vertices(&self, u: VertexId, w: VertexId) -> Result<Triangulation> {
        self.identify_vertices_mapped(u, w).map(|(g, _)| g)
    }

    pub fn identify_vertices_mapped(
        &self,
        u: VertexId,
        w: VertexId,
    ) -> Result<(Triangulation, VertexMap)> {
        for x in [u, w] {
            if !self.contains(x) {
                return Err(TriangulationError::UnknownVertex(x));
            }
        }
        if u == w || self.adjacent(u, w) {
            return Err(TriangulationError::AdjacentPair(u, w));
        }
        let (u, w) = (u.min(w), u.max(w));
        let face = self
            .faces()
            .into_iter()
            .find(|f| f.contains(&u) && f.contains(&w))
            .ok_or(TriangulationError::NoCommonFace(u, w))?;
        Ok(self.identify_on_face(u, w, &face))
    }

    /// Splice the rotations of `u` and `w` across the corners they occupy on `face`.
    fn identify_on_face(&self, u: VertexId, w: VertexId, face: &[VertexId]) -> (Triangulation, VertexMap) {
        let k = face.len();
        let iu = face.iter().position(|&x| x == u).unwrap();
        let iw = face.iter().position(|&x| x == w).unwrap();
        // corner at u lies between a = face[iu-1] and c = succ_u(a)
        let a = face[(iu + k - 1) % k];
        let b = face[(iw + k - 1) % k];
        let ru = &self.rot[u];
        let rw = &self.rot[w];
        let pa = self.pos(u, a);
        let pb = self.pos(w, b);
        // merged rotation: rot(u) from succ_u(a) round to a, then rot(w) from succ_w(b) round to b
        let mut merged: Vec<(VertexId, bool)> = Vec::with_capacity(ru.len() + rw.len());
        for i in 1..=ru.len() {
            merged.push((ru[(pa + i) % ru.len()], false));
        }
        for i in 1..=rw.len() {
            merged.push((rw[(pb + i) % rw.len()], true));
        }
        let from_u: Vec<VertexId> = ru.clone();
        let mut rot = self.rot.clone();
        let mut keep = Vec::with_capacity(merged.len());
        for &(z, from_w) in &merged {
            if from_w && from_u.contains(&z) {
                // duplicate through a common neighbour: drop the copy coming from w
                rot[z].retain(|&x| x != w);
            } else {
                keep.push(z);
                if from_w {
                    for x in rot[z].iter_mut() {
                        if *x == w {
                            *x = u;
                        }
                    }
                }
            }
        }
        rot[u] = keep;
        rot[w].clear();
        let mut removed = vec![false; self.order()];
        removed[w] = true;
        let (rot, mut map) = compact(rot, &removed);
        map[w] = map[u];
        (Triangulation::from_rot_unchecked(rot), map)
    }

    /// Remove the edge `u`-`w` (faces on both sides merge).
    pub fn remove_edge(&self, u: VertexId, w: VertexId) -> Triangulation {
        let mut rot = self.rot.clone();
        rot[u].retain(|&x| x != w);
        rot[w].retain(|&x| x != u);
        Triangulation { rot }
    }

    /// Contract the edge `x`-`z`, dropping one member of each double edge.
    pub fn contract_edge_mapped(&self, x: VertexId, z: VertexId) -> Result<(Triangulation, VertexMap)> {
        if !self.adjacent(x, z) {
            return Err(TriangulationError::InconsistentRotation(format!("{x}-{z} is not an edge")));
        }
        let h = self.remove_edge(x, z);
        let (x, z) = (x.min(z), x.max(z));
        let face = h
            .faces()
            .into_iter()
            .find(|f| f.contains(&x) && f.contains(&z))
            .expect("removed edge leaves a shared face");
        Ok(h.identify_on_face(x, z, &face))
    }

    /// Locate `face` (as a cyclic vertex sequence in either direction) among the traced faces.
    pub(crate) fn find_face(&self, face: &[VertexId]) -> Option<Vec<VertexId>> {
        let k = face.len();
        let faces = self.faces();
        for f in faces {
            if f.len() != k {
                continue;
            }
            for s in 0..k {
                if (0..k).all(|i| f[(s + i) % k] == face[i]) {
                    return Some(f);
                }
                if (0..k).all(|i| f[(s + i) % k] == face[(k - i) % k]) {
                    return Some(f);
                }
            }
        }
        None
    }

    /// Insert a new vertex (id `n`) adjacent to the three vertices of a triangular face.
    pub fn insert_vertex_in_face(&self, face: &[VertexId]) -> Result<Triangulation> {
        for &v in face {
            if !self.contains(v) {
                return Err(TriangulationError::UnknownFace(face.to_vec()));
            }
        }
        let f = self
            .find_face(face)
            .ok_or_else(|| TriangulationError::UnknownFace(face.to_vec()))?;
        if f.len() != 3 {
            return Err(TriangulationError::NonTriangularFace(f));
        }
        Ok(self.fill_face(&f))
    }

    /// Insert a new vertex (id `n`) into a traced face of any length.
    /// `face` must be listed along its darts.
    pub(crate) fn fill_face(&self, face: &[VertexId]) -> Triangulation {
        let x = self.order();
        let k = face.len();
        let mut rot = self.rot.clone();
        for i in 0..k {
            let a = face[i];
            let b = face[(i + 1) % k];
            let p = self.pos(b, a);
            rot[b].insert(p + 1, x);
        }
        let mut rx: Vec<VertexId> = face.iter().rev().copied().collect();
        rx.rotate_right(1);
        rot.push(rx);
        Triangulation::from_rot_unchecked(rot)
    }

    /// Replace the diagonal `x`-`z` of the quadrilateral formed by its two
    /// faces with the other diagonal. Returns `None` when the other diagonal
    /// is already an edge.
    pub fn flip_edge(&self, x: VertexId, z: VertexId) -> Option<Triangulation> {
        let y = self.succ(z, x);
        let l = self.succ(x, z);
        if y == l || self.adjacent(y, l) {
            return None;
        }
        // faces: x -> z -> y and z -> x -> l
        let mut rot = self.rot.clone();
        rot[x].retain(|&t| t != z);
        rot[z].retain(|&t| t != x);
        // new faces y -> x -> l and l -> z -> y
        let py = rot[y].iter().position(|&t| t == z).unwrap();
        rot[y].insert(py + 1, l);
        let pl = rot[l].iter().position(|&t| t == x).unwrap();
        rot[l].insert(pl + 1, y);
        Some(Triangulation::from_rot_unchecked(rot))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_minus_vertex_is_k3() {
        let g = Triangulation::k4().delete_vertex(3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_maximal());
    }

    #[test]
    fn octahedron_minus_vertex_is_w4() {
        let g = Triangulation::octahedron().delete_vertex(0).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.face_lengths(), vec![3, 3, 3, 3, 4]);
    }

    #[test]
    fn delete_from_k3_is_too_small() {
        assert_eq!(Triangulation::k3().delete_vertex(0), Err(TriangulationError::OrderTooSmall));
    }

    #[test]
    fn w4_rim_identification() {
        // W4 after removing pole 0: hub 4 (old 5), rim 0..3 (old 1..4)
        let w4 = Triangulation::octahedron().delete_vertex(0).unwrap();
        let g = w4.identify_vertices(0, 2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 5);
        // oracle: merge adjacency sets by hand
        let mut expect = std::collections::BTreeSet::new();
        for (a, b) in w4.edges() {
            let m = |v: usize| if v == 2 { 0 } else { v };
            let (a, b) = (m(a), m(b));
            expect.insert((a.min(b), a.max(b)));
        }
        let relabel = |v: usize| if v > 2 { v - 1 } else { v };
        let expect: Vec<_> = expect.into_iter().map(|(a, b)| (relabel(a), relabel(b))).collect();
        assert_eq!(g.edges(), expect);
    }

    #[test]
    fn identify_adjacent_fails() {
        let g = Triangulation::octahedron();
        assert_eq!(g.identify_vertices(0, 1), Err(TriangulationError::AdjacentPair(0, 1)));
    }

    #[test]
    fn insert_then_delete_roundtrip() {
        let g = Triangulation::octahedron();
        for f in g.faces() {
            let h = g.insert_vertex_in_face(&f).unwrap();
            assert!(h.is_maximal());
            assert_eq!(h.degree(6), 3);
            let back = h.delete_vertex(6).unwrap();
            assert_eq!(super::super::canonical_certificate(&back), super::super::canonical_certificate(&g));
        }
    }

    #[test]
    fn insert_rejects_bad_face() {
        let g = Triangulation::octahedron();
        assert!(matches!(g.insert_vertex_in_face(&[0, 5, 1]), Err(TriangulationError::UnknownFace(_))));
    }

    #[test]
    fn flip_keeps_triangulation() {
        let g = Triangulation::octahedron();
        for (x, z) in g.edges() {
            let h = g.flip_edge(x, z);
            // flipping in the octahedron always joins the two poles of a 4-cycle: opposite
            // vertices are non-adjacent, so the flip exists
            let h = h.expect("flip");
            assert!(h.is_maximal());
            assert_eq!(h.edge_count(), 12);
        }
    }
}
