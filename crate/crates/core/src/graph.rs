//! Abstract simple graphs on at most 64 vertices, stored as adjacency bitmasks.

use serde::{Deserialize, Serialize};
use std::borrow::Cow;

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

/// Anything that can be viewed as an abstract simple graph.
pub trait AsGraph {
    fn as_graph(&self) -> Cow<'_, SimpleGraph>;
}

impl AsGraph for SimpleGraph {
    fn as_graph(&self) -> Cow<'_, SimpleGraph> {
        Cow::Borrowed(self)
    }
}

#[inline]
pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        SimpleGraph { n: adj.len(), adj }
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                e.push((u, u + 1 + v));
            }
        }
        e
    }

    /// Delete `v`; higher ids shift down by one.
    pub fn remove_vertex(&self, v: usize) -> SimpleGraph {
        let low = (1u64 << v) - 1;
        let adj = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let m = self.adj[u];
                (m & low) | ((m >> 1) & !low)
            })
            .collect();
        SimpleGraph { n: self.n - 1, adj }
    }

    /// Merge `w` into `u` (union of neighbourhoods, no loop), then delete `w`.
    pub fn merge(&self, u: usize, w: usize) -> SimpleGraph {
        let mut g = self.clone();
        let nw = g.adj[w] & !(1 << u);
        for x in bits(nw) {
            g.adj[x] |= 1 << u;
        }
        g.adj[u] |= nw;
        g.adj[u] &= !(1 << w);
        g.remove_vertex(w)
    }

    /// Identify the vertices of `set` into its least member; returns the graph
    /// and the old-to-new id map.
    pub fn identify_set(&self, set: &[usize]) -> (SimpleGraph, Vec<usize>) {
        let mut g = self.clone();
        let mut ids: Vec<usize> = (0..self.n).collect();
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let root = sorted[0];
        // merge from the top so that indices below stay valid
        for &w in sorted[1..].iter().rev() {
            g = g.merge(root, w);
            for id in ids.iter_mut() {
                if *id == w {
                    *id = root;
                } else if *id > w {
                    *id -= 1;
                }
            }
        }
        (g, ids)
    }

    pub fn induced(&self, vs: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vs.len());
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        component_of(&self.adj, 0, all) == all
    }
}

/// Vertices reachable from `s` inside `within`.
pub(crate) fn component_of(adj: &[u64], s: usize, within: u64) -> u64 {
    let mut seen = 1u64 << s;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remove_and_merge() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        let g = k4.remove_vertex(1);
        assert_eq!(g, SimpleGraph::complete(3));
        let mut p = SimpleGraph::new(4);
        p.add_edge(0, 1);
        p.add_edge(1, 2);
        p.add_edge(2, 3);
        let m = p.merge(0, 2);
        assert_eq!(m.order(), 3);
        assert_eq!(m.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn identify_set_map() {
        let g = SimpleGraph::new(5);
        let (h, ids) = g.identify_set(&[1, 3, 4]);
        assert_eq!(h.order(), 3);
        assert_eq!(ids, vec![0, 1, 2, 1, 1]);
    }
}
