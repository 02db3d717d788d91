//! Embedding a maximal planar graph from its edge list.
//!
//! In a 3-connected planar graph the facial cycles are exactly the induced
//! non-separating cycles. For a triangulation that makes the faces the
//! triangles whose removal leaves the graph connected; orienting them
//! coherently yields the rotation system, unique up to reflection.

use super::{Result, Triangulation, TriangulationError, VertexId};
use std::collections::HashMap;

pub fn build_from_edge_list(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Triangulation> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(TriangulationError::InvalidEdgeList(format!("edge {u}-{v} out of range")));
        }
        if u == v {
            return Err(TriangulationError::InvalidEdgeList(format!("loop at {u}")));
        }
        if adj[u].contains(&v) {
            return Err(TriangulationError::InvalidEdgeList(format!("repeated edge {u}-{v}")));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    if !connected(&adj, &vec![false; n]) {
        return Err(TriangulationError::Disconnected);
    }
    if n < 3 || edges.len() != 3 * n - 6 {
        return Err(TriangulationError::NotMaximal(format!("n={n}, m={} (need 3n-6)", edges.len())));
    }
    if n == 3 {
        return Ok(Triangulation::k3());
    }
    let mut tris = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if v <= u {
                continue;
            }
            for &w in &adj[v] {
                if w > v && adj[u].contains(&w) {
                    tris.push([u, v, w]);
                }
            }
        }
    }
    let mut faces = Vec::new();
    for t in tris {
        let mut removed = vec![false; n];
        for &x in &t {
            removed[x] = true;
        }
        if n == 4 || connected(&adj, &removed) {
            faces.push(t);
        }
    }
    if faces.len() != 2 * n - 4 {
        return Err(TriangulationError::NotPlanar);
    }
    // orient: each undirected edge must appear once in each direction
    let mut by_edge: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (f[k], f[(k + 1) % 3]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
        }
    }
    if by_edge.len() != edges.len() || by_edge.values().any(|v| v.len() != 2) {
        return Err(TriangulationError::NotPlanar);
    }
    let mut oriented: Vec<Option<[VertexId; 3]>> = vec![None; faces.len()];
    oriented[0] = Some(faces[0]);
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let f = oriented[i].unwrap();
        for k in 0..3 {
            let (a, b) = (f[k], f[(k + 1) % 3]);
            for &j in &by_edge[&(a.min(b), a.max(b))] {
                if j == i {
                    continue;
                }
                // neighbour must traverse b -> a
                let g = faces[j];
                let c = g.iter().copied().find(|&x| x != a && x != b).unwrap();
                let want = [b, a, c];
                match oriented[j] {
                    None => {
                        oriented[j] = Some(want);
                        stack.push(j);
                    }
                    Some(h) => {
                        if !same_cycle(h, want) {
                            return Err(TriangulationError::NotPlanar);
                        }
                    }
                }
            }
        }
    }
    let faces: Vec<[VertexId; 3]> = oriented.into_iter().map(|f| f.unwrap()).collect();
    let g = Triangulation::from_faces(n, &faces).map_err(|_| TriangulationError::NotPlanar)?;
    Ok(g)
}

fn same_cycle(a: [VertexId; 3], b: [VertexId; 3]) -> bool {
    (0..3).any(|s| (0..3).all(|i| a[(s + i) % 3] == b[i]))
}

fn connected(adj: &[Vec<VertexId>], removed: &[bool]) -> bool {
    let n = adj.len();
    let Some(s) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.iter().all(|&x| x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::canonical_certificate;

    #[test]
    fn k4_matches_rotation_build() {
        let e = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = build_from_edge_list(4, &e).unwrap();
        assert_eq!(canonical_certificate(&g), canonical_certificate(&Triangulation::k4()));
    }

    #[test]
    fn octahedron_faces() {
        let oct = Triangulation::octahedron();
        let g = build_from_edge_list(6, &oct.edges()).unwrap();
        let mut a: Vec<Vec<usize>> = g.faces().into_iter().map(|mut f| { f.sort(); f }).collect();
        let mut b: Vec<Vec<usize>> = oct.faces().into_iter().map(|mut f| { f.sort(); f }).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(a.len(), 8);
    }

    #[test]
    fn c5_not_maximal() {
        let e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        assert!(matches!(build_from_edge_list(5, &e), Err(TriangulationError::NotMaximal(_))));
    }

    #[test]
    fn nonplanar_with_maximal_edge_count() {
        // K3,3 plus three edges inside one side: 6 vertices, 12 edges, contains K3,3
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        e.extend([(0, 1), (1, 2), (0, 2)]);
        assert_eq!(e.len(), 12);
        assert_eq!(build_from_edge_list(6, &e), Err(TriangulationError::NotPlanar));
    }

    #[test]
    fn disconnected() {
        let e = vec![(0, 1), (1, 2), (0, 2)];
        assert_eq!(build_from_edge_list(6, &e), Err(TriangulationError::Disconnected));
    }
}
