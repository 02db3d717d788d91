//! Embedded planar graphs stored as rotation systems.
//!
//! `rot[v]` lists the neighbours of `v` in counter-clockwise order. A face is
//! traced by the rule `next(u -> v) = (v -> succ_v(u))`, where `succ_v(u)` is
//! the entry following `u` in `rot[v]`.

mod cert;
mod codec;
mod embed;
mod surgery;

pub use cert::{automorphisms, canonical_certificate, canonical_labeling, Automorphism, IsoCertificate};
pub use codec::{decode_graph6, encode_graph6, to_dot, GraphJson};
pub use embed::build_from_edge_list;
pub use surgery::VertexMap;

use thiserror::Error;

/// Dense vertex index inside one graph value.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not maximal planar: {0}")]
    NotMaximal(String),
    #[error("invalid edge list: {0}")]
    InvalidEdgeList(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("order too small for this operation")]
    OrderTooSmall,
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(VertexId, VertexId),
    #[error("vertices {0} and {1} share no face")]
    NoCommonFace(VertexId, VertexId),
    #[error("sequence {0:?} is not a face of the embedding")]
    UnknownFace(Vec<VertexId>),
    #[error("face {0:?} is not a triangle")]
    NonTriangularFace(Vec<VertexId>),
    #[error("bad graph6 data: {0}")]
    BadFormat(String),
}

pub type Result<T> = std::result::Result<T, TriangulationError>;

/// A connected plane graph given by its rotation system.
///
/// Values produced by the public constructors are simple. Surgery can yield
/// plane graphs with larger faces (for example `K4 - e`); `is_maximal` tells
/// them apart from proper triangulations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    rot: Vec<Vec<VertexId>>,
}

impl Triangulation {
    /// Validated constructor requiring every face to be a triangle.
    pub fn build_from_rotation(rotations: Vec<Vec<VertexId>>) -> Result<Self> {
        let g = Self::from_rotation_plane(rotations)?;
        if !g.is_maximal() {
            return Err(TriangulationError::NotTriangulation(format!(
                "n={} m={} faces={:?}",
                g.order(),
                g.edge_count(),
                g.face_lengths()
            )));
        }
        Ok(g)
    }

    /// Validated constructor for a simple connected plane graph (faces of any length).
    pub fn from_rotation_plane(rot: Vec<Vec<VertexId>>) -> Result<Self> {
        let n = rot.len();
        for (v, r) in rot.iter().enumerate() {
            for (i, &u) in r.iter().enumerate() {
                if u >= n {
                    return Err(TriangulationError::InconsistentRotation(format!(
                        "vertex {v} lists unknown neighbour {u}"
                    )));
                }
                if u == v {
                    return Err(TriangulationError::InconsistentRotation(format!("loop at {v}")));
                }
                if r[..i].contains(&u) {
                    return Err(TriangulationError::InconsistentRotation(format!(
                        "parallel edge {v}-{u}"
                    )));
                }
                if !rot[u].contains(&v) {
                    return Err(TriangulationError::InconsistentRotation(format!(
                        "{v} lists {u} but not conversely"
                    )));
                }
            }
        }
        let g = Triangulation { rot };
        if !g.is_connected() {
            return Err(TriangulationError::Disconnected);
        }
        if n >= 3 {
            let f = g.faces().len() as i64;
            if n as i64 - g.edge_count() as i64 + f != 2 {
                return Err(TriangulationError::InconsistentRotation(
                    "rotation system is not a sphere embedding".into(),
                ));
            }
        }
        Ok(g)
    }

    /// Build from oriented triangular faces `(a, b, c)`; each face fixes
    /// `succ_b(a) = c`, `succ_c(b) = a`, `succ_a(c) = b`.
    pub fn from_faces(n: usize, faces: &[[VertexId; 3]]) -> Result<Self> {
        let mut succ: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); n];
        for &[a, b, c] in faces {
            if a >= n || b >= n || c >= n || a == b || b == c || a == c {
                return Err(TriangulationError::InconsistentRotation(format!(
                    "bad face {:?}",
                    [a, b, c]
                )));
            }
            succ[b].push((a, c));
            succ[c].push((b, a));
            succ[a].push((c, b));
        }
        let mut rot = Vec::with_capacity(n);
        for (v, s) in succ.iter_mut().enumerate() {
            s.sort_unstable();
            if s.windows(2).any(|w| w[0].0 == w[1].0) || s.is_empty() {
                return Err(TriangulationError::InconsistentRotation(format!(
                    "corner structure at {v} is not a single wheel"
                )));
            }
            let start = s[0].0;
            let mut r = Vec::with_capacity(s.len());
            let mut cur = start;
            loop {
                r.push(cur);
                let nxt = match s.binary_search_by_key(&cur, |p| p.0) {
                    Ok(i) => s[i].1,
                    Err(_) => {
                        return Err(TriangulationError::InconsistentRotation(format!(
                            "open corner at {v}"
                        )))
                    }
                };
                if nxt == start {
                    break;
                }
                if r.len() > s.len() {
                    return Err(TriangulationError::InconsistentRotation(format!(
                        "corner cycle at {v} does not close"
                    )));
                }
                cur = nxt;
            }
            if r.len() != s.len() {
                return Err(TriangulationError::InconsistentRotation(format!(
                    "corners at {v} split into several cycles"
                )));
            }
            rot.push(r);
        }
        Self::build_from_rotation(rot)
    }

    /// Unchecked constructor for internal surgery whose output is known valid.
    pub(crate) fn from_rot_unchecked(rot: Vec<Vec<VertexId>>) -> Self {
        let g = Triangulation { rot };
        debug_assert!(Self::from_rotation_plane(g.rot.clone()).is_ok(), "{:?}", g.rot);
        g
    }

    /// The complete graph on three vertices with its two triangular faces.
    pub fn k3() -> Self {
        Triangulation { rot: vec![vec![1, 2], vec![2, 0], vec![0, 1]] }
    }

    pub fn k4() -> Self {
        Self::from_faces(4, &[[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]]).expect("K4")
    }

    pub fn octahedron() -> Self {
        // poles 0 and 5, equator 1 2 3 4
        let mut f = Vec::new();
        for i in 0..4 {
            let a = 1 + i;
            let b = 1 + (i + 1) % 4;
            f.push([0, a, b]);
            f.push([5, b, a]);
        }
        Self::from_faces(6, &f).expect("octahedron")
    }

    pub fn icosahedron() -> Self {
        // 0 top, 1..=5 upper ring, 6..=10 lower ring, 11 bottom
        let mut f = Vec::new();
        for i in 0..5 {
            let u = 1 + i;
            let u2 = 1 + (i + 1) % 5;
            let l = 6 + i;
            let l2 = 6 + (i + 1) % 5;
            f.push([0, u, u2]);
            f.push([u, l, u2]);
            f.push([u2, l, l2]);
            f.push([11, l2, l]);
        }
        Self::from_faces(12, &f).expect("icosahedron")
    }

    pub fn order(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rot
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rot[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.rot.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.rot.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.rot.len()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.rot[u].contains(&v)
    }

    /// Neighbours of `v` in rotation order.
    pub fn link(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if !self.contains(v) {
            return Err(TriangulationError::UnknownVertex(v));
        }
        Ok(self.rot[v].clone())
    }

    /// Position of `u` in `rot[v]`.
    pub(crate) fn pos(&self, v: VertexId, u: VertexId) -> usize {
        self.rot[v]
            .iter()
            .position(|&x| x == u)
            .unwrap_or_else(|| panic!("{u} is not a neighbour of {v}"))
    }

    /// Entry after `u` in the rotation at `v`.
    pub fn succ(&self, v: VertexId, u: VertexId) -> VertexId {
        let r = &self.rot[v];
        r[(self.pos(v, u) + 1) % r.len()]
    }

    /// Entry before `u` in the rotation at `v`.
    pub fn pred(&self, v: VertexId, u: VertexId) -> VertexId {
        let r = &self.rot[v];
        r[(self.pos(v, u) + r.len() - 1) % r.len()]
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = Vec::with_capacity(self.edge_count());
        for (u, r) in self.rot.iter().enumerate() {
            for &v in r {
                if u < v {
                    e.push((u, v));
                }
            }
        }
        e.sort_unstable();
        e
    }

    /// All faces as vertex cycles, each listed along its darts.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.rot.len() {
            for i in 0..self.rot[u].len() {
                if seen[u][i] {
                    continue;
                }
                // dart u -> rot[u][i]
                let mut face = Vec::new();
                let (mut a, mut ai) = (u, i);
                loop {
                    seen[a][ai] = true;
                    face.push(a);
                    let b = self.rot[a][ai];
                    let pa = self.pos(b, a);
                    let bi = (pa + 1) % self.rot[b].len();
                    a = b;
                    ai = bi;
                    if a == u && ai == i {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    pub fn face_lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.faces().iter().map(Vec::len).collect();
        l.sort_unstable();
        l
    }

    /// Triangular faces as oriented triples.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() == 3)
            .map(|f| [f[0], f[1], f[2]])
            .collect()
    }

    /// True when every face is a triangle (a maximal planar graph).
    pub fn is_maximal(&self) -> bool {
        let n = self.order();
        n >= 3 && self.edge_count() == 3 * n - 6 && self.faces().iter().all(|f| f.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.rot.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.rot[v] {
                if !seen[u] {
                    seen[u] = true;
                    cnt += 1;
                    stack.push(u);
                }
            }
        }
        cnt == n
    }

    /// Same embedding with every rotation list starting at its least entry.
    /// Two values describe the same labelled embedding iff their normal forms are equal.
    pub fn normalized(&self) -> Self {
        Triangulation {
            rot: self
                .rot
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    if let Some(p) = r.iter().enumerate().min_by_key(|&(_, x)| *x).map(|(i, _)| i) {
                        r.rotate_left(p);
                    }
                    r
                })
                .collect(),
        }
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> Self {
        Triangulation {
            rot: self
                .rot
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Relabel with `perm[old] = new`.
    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        let n = self.order();
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = self.rot[v].iter().map(|&u| perm[u]).collect();
        }
        Triangulation { rot }
    }

    /// Number of common neighbours of `u` and `w`.
    pub fn common_neighbors(&self, u: VertexId, w: VertexId) -> Vec<VertexId> {
        self.rot[u]
            .iter()
            .copied()
            .filter(|x| self.rot[w].contains(x))
            .collect()
    }

    pub fn to_simple(&self) -> crate::graph::SimpleGraph {
        crate::graph::SimpleGraph::from_edges(self.order(), &self.edges())
    }
}

impl crate::graph::AsGraph for Triangulation {
    fn as_graph(&self) -> std::borrow::Cow<'_, crate::graph::SimpleGraph> {
        std::borrow::Cow::Owned(self.to_simple())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_counts() {
        let g = Triangulation::k4();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.faces().len(), 4);
        assert!(g.is_maximal());
    }

    #[test]
    fn octahedron_counts() {
        let g = Triangulation::octahedron();
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.faces().len(), 8);
        assert!(g.faces().iter().all(|f| f.len() == 3));
        for v in 0..6 {
            assert_eq!(g.link(v).unwrap().len(), 4);
        }
    }

    #[test]
    fn icosahedron_is_five_regular() {
        let g = Triangulation::icosahedron();
        assert!(g.is_maximal());
        assert_eq!(g.degree_sequence(), vec![5; 12]);
    }

    #[test]
    fn k3_is_maximal() {
        let g = Triangulation::k3();
        assert_eq!(g.faces().len(), 2);
        assert!(g.is_maximal());
    }

    #[test]
    fn rejects_non_triangulation() {
        // square with one diagonal: faces of lengths 3,3 plus nothing else -> m = 5 != 6
        let rot = vec![vec![1, 3], vec![2, 3, 0], vec![3, 1], vec![0, 1, 2]];
        let e = Triangulation::build_from_rotation(rot).unwrap_err();
        assert!(matches!(e, TriangulationError::NotTriangulation(_)), "{e:?}");
    }

    #[test]
    fn rejects_inconsistent() {
        let rot = vec![vec![1], vec![]];
        assert!(matches!(
            Triangulation::build_from_rotation(rot),
            Err(TriangulationError::InconsistentRotation(_))
        ));
    }

    #[test]
    fn rejects_disconnected() {
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        assert_eq!(Triangulation::build_from_rotation(rot), Err(TriangulationError::Disconnected));
    }

    #[test]
    fn link_unknown_vertex() {
        assert_eq!(Triangulation::k4().link(9), Err(TriangulationError::UnknownVertex(9)));
    }
}
