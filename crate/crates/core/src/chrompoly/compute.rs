//! Deletion-contraction with clique-cut factorisation and an isomorphism-keyed memo.

use super::{ChromPolyError, Polynomial};
use crate::graph::{bits, component_of, AsGraph, SimpleGraph};
use dashmap::DashMap;
use std::sync::OnceLock;

/// Default largest order accepted.
pub const DEFAULT_ORDER_CAP: usize = 24;

const MEMO_MIN_ORDER: usize = 5;
const MEMO_MAX_ENTRIES: usize = 1 << 21;
const CANON_LEAF_CAP: usize = 512;

/// Shareable chromatic-polynomial evaluator. The memo is safe for concurrent use.
pub struct ChromaticEngine {
    cap: usize,
    memo: DashMap<Vec<u64>, Polynomial>,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        Self::new(DEFAULT_ORDER_CAP)
    }
}

impl ChromaticEngine {
    pub fn new(cap: usize) -> Self {
        ChromaticEngine { cap, memo: DashMap::new() }
    }

    /// Process-wide engine with the default cap.
    pub fn global() -> &'static ChromaticEngine {
        static E: OnceLock<ChromaticEngine> = OnceLock::new();
        E.get_or_init(ChromaticEngine::default)
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn polynomial<G: AsGraph + ?Sized>(&self, g: &G) -> Result<Polynomial, ChromPolyError> {
        let g = g.as_graph();
        if g.order() > self.cap {
            return Err(ChromPolyError::OrderTooLarge { n: g.order(), cap: self.cap });
        }
        Ok(self.poly(g.masks().to_vec()))
    }

    /// Same value, but picks deletion-contraction edges with `choose` and skips
    /// every shortcut. Used to check order independence.
    pub fn polynomial_with_order<G, F>(g: &G, choose: &mut F) -> Polynomial
    where
        G: AsGraph + ?Sized,
        F: FnMut(&[(usize, usize)]) -> usize,
    {
        fn rec<F: FnMut(&[(usize, usize)]) -> usize>(g: SimpleGraph, choose: &mut F) -> Polynomial {
            let e = g.edges();
            if e.is_empty() {
                return Polynomial::monomial(g.order());
            }
            let (u, v) = e[choose(&e) % e.len()];
            let mut del = g.clone();
            del.remove_edge(u, v);
            let con = g.merge(u, v);
            &rec(del, choose) - &rec(con, choose)
        }
        rec(g.as_graph().into_owned(), choose)
    }

    fn poly(&self, adj: Vec<u64>) -> Polynomial {
        let (factor, adj) = peel_simplicial(adj);
        if adj.is_empty() {
            return factor;
        }
        let all = full(adj.len());
        // disconnected: multiply components
        let c0 = component_of(&adj, 0, all);
        if c0 != all {
            let mut rest = all;
            let mut p = factor;
            while rest != 0 {
                let s = rest.trailing_zeros() as usize;
                let c = component_of(&adj, s, rest);
                rest &= !c;
                p = &p * &self.poly(induced(&adj, c));
            }
            return p;
        }
        if adj.iter().all(|m| m.count_ones() == 2) {
            return &factor * &cycle_poly(adj.len());
        }
        let key = if adj.len() >= MEMO_MIN_ORDER { Some(canon_key(&adj)) } else { None };
        if let Some(k) = &key {
            if let Some(p) = self.memo.get(k) {
                return &factor * p.value();
            }
        }
        let p = match clique_cut(&adj) {
            Some((clique, comps)) => {
                let csize = clique.count_ones() as usize;
                let mut p = Polynomial::one();
                for c in &comps {
                    p = &p * &self.poly(induced(&adj, c | clique));
                }
                for _ in 1..comps.len() {
                    p = p.div_falling(csize).expect("clique factor divides exactly");
                }
                p
            }
            None => {
                let (u, v) = busiest_edge(&adj);
                let mut del = adj.clone();
                del[u] &= !(1 << v);
                del[v] &= !(1 << u);
                let con = SimpleGraph::from_masks(adj.clone()).merge(u, v);
                &self.poly(del) - &self.poly(con.masks().to_vec())
            }
        };
        if let Some(k) = key {
            if self.memo.len() < MEMO_MAX_ENTRIES {
                self.memo.insert(k, p.clone());
            }
        }
        &factor * &p
    }
}

fn full(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn induced(adj: &[u64], set: u64) -> Vec<u64> {
    let vs: Vec<usize> = bits(set).collect();
    let mut pos = [0usize; 64];
    for (i, &v) in vs.iter().enumerate() {
        pos[v] = i;
    }
    vs.iter()
        .map(|&v| bits(adj[v] & set).fold(0u64, |m, u| m | 1 << pos[u]))
        .collect()
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

/// Strip vertices whose neighbourhood is a clique; each contributes `(t - deg)`.
fn peel_simplicial(mut adj: Vec<u64>) -> (Polynomial, Vec<u64>) {
    let mut factor = Polynomial::one();
    'outer: loop {
        for v in 0..adj.len() {
            let nb = adj[v];
            if bits(nb).all(|u| (adj[u] | 1 << u) & nb == nb) {
                factor = factor.mul_linear(nb.count_ones() as i64);
                adj = remove_vertex(&adj, v);
                continue 'outer;
            }
        }
        return (factor, adj);
    }
}

/// `(t-1)^n + (-1)^n (t-1)`.
fn cycle_poly(n: usize) -> Polynomial {
    let tm1 = Polynomial::linear(1);
    let mut p = Polynomial::one();
    for _ in 0..n {
        p = &p * &tm1;
    }
    if n.is_multiple_of(2) {
        &p + &tm1
    } else {
        &p - &tm1
    }
}

/// A clique of size at most 3 whose removal disconnects a connected graph.
fn clique_cut(adj: &[u64]) -> Option<(u64, Vec<u64>)> {
    let n = adj.len();
    let all = full(n);
    let split = |c: u64| -> Option<(u64, Vec<u64>)> {
        let rest = all & !c;
        if rest == 0 {
            return None;
        }
        let s = rest.trailing_zeros() as usize;
        let first = component_of(adj, s, rest);
        if first == rest {
            return None;
        }
        let mut comps = vec![first];
        let mut left = rest & !first;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let c2 = component_of(adj, s, left);
            comps.push(c2);
            left &= !c2;
        }
        Some((c, comps))
    };
    for v in 0..n {
        if let Some(r) = split(1 << v) {
            return Some(r);
        }
    }
    for u in 0..n {
        for v in bits(adj[u] >> u >> 1).map(|x| x + u + 1) {
            if let Some(r) = split(1 << u | 1 << v) {
                return Some(r);
            }
        }
    }
    for u in 0..n {
        for v in bits(adj[u] >> u >> 1).map(|x| x + u + 1) {
            for w in bits((adj[u] & adj[v]) >> v >> 1).map(|x| x + v + 1) {
                if let Some(r) = split(1 << u | 1 << v | 1 << w) {
                    return Some(r);
                }
            }
        }
    }
    None
}

fn busiest_edge(adj: &[u64]) -> (usize, usize) {
    let mut best = (usize::MAX, (0, 0));
    for u in 0..adj.len() {
        for v in bits(adj[u] >> u >> 1).map(|x| x + u + 1) {
            let t = (adj[u] & adj[v]).count_ones() as usize;
            if best.0 == usize::MAX || t > best.0 {
                best = (t, (u, v));
            }
        }
    }
    best.1
}

/// Canonical key of an abstract graph: search over refined orderings, keeping
/// the lexicographically least relabelled adjacency. Falls back to a labelled
/// key (tagged differently) when the search tree is too large.
pub(crate) fn canon_key(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut degs: Vec<(u32, usize)> = (0..n).map(|v| (adj[v].count_ones(), v)).collect();
    degs.sort_unstable();
    for (d, v) in degs {
        match cells.last_mut() {
            Some(c) if adj[c[0]].count_ones() == d => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    refine(adj, &mut cells);
    let mut best: Option<Vec<u64>> = None;
    let mut leaves = 0usize;
    if search(adj, cells, &mut best, &mut leaves) {
        let mut key = vec![n as u64];
        key.extend(best.unwrap());
        key
    } else {
        let mut key = vec![n as u64 | 1 << 32];
        key.extend_from_slice(adj);
        key
    }
}

fn refine(adj: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let smask = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((adj[v] & smask).count_ones(), v)).collect();
                keyed.sort_by_key(|&(k, _)| k);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

/// Returns false when the leaf budget is exhausted.
fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>, leaves: &mut usize) -> bool {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        *leaves += 1;
        if *leaves > CANON_LEAF_CAP {
            return false;
        }
        let mut pos = [0usize; 64];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i;
        }
        let code: Vec<u64> = cells
            .iter()
            .map(|c| bits(adj[c[0]]).fold(0u64, |m, u| m | 1 << pos[u]))
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return true;
    };
    for &x in &cells[t] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![x]);
        next.push(cells[t].iter().copied().filter(|&y| y != x).collect());
        next.extend_from_slice(&cells[t + 1..]);
        refine(adj, &mut next);
        if !search(adj, next, best, leaves) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::count_proper_colorings;
    use crate::triangulation::Triangulation;
    use num_bigint::BigInt;

    #[test]
    fn small_graphs() {
        let e = ChromaticEngine::new(20);
        assert_eq!(e.polynomial(&Triangulation::k3()).unwrap(), Polynomial::falling_factorial(3));
        assert_eq!(e.polynomial(&Triangulation::k4()).unwrap(), Polynomial::falling_factorial(4));
        assert_eq!(e.polynomial(&SimpleGraph::new(3)).unwrap(), Polynomial::monomial(3));
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(e.polynomial(&c5).unwrap(), Polynomial::from_i64(&[0, 4, -10, 10, -5, 1]));
    }

    #[test]
    fn matches_backtracking() {
        let e = ChromaticEngine::new(20);
        for g in [Triangulation::octahedron(), Triangulation::icosahedron()] {
            let p = e.polynomial(&g).unwrap();
            assert_eq!(p.degree(), Some(g.order()));
            assert!(p.signs_alternate());
            for k in 0..6 {
                assert_eq!(p.eval_i64(k), BigInt::from(count_proper_colorings(&g, k as usize)));
            }
        }
        assert_eq!(e.polynomial(&Triangulation::octahedron()).unwrap().eval_i64(4), BigInt::from(96));
    }

    #[test]
    fn order_independent() {
        let g = Triangulation::octahedron().to_simple();
        let mut i = 0usize;
        let a = ChromaticEngine::polynomial_with_order(&g, &mut |_| {
            i += 7;
            i
        });
        let b = ChromaticEngine::polynomial_with_order(&g, &mut |e| e.len() - 1);
        assert_eq!(a, b);
        assert_eq!(a, ChromaticEngine::new(20).polynomial(&g).unwrap());
    }

    #[test]
    fn canon_key_is_invariant() {
        let g = Triangulation::icosahedron();
        let h = g.relabel(&[3, 7, 1, 0, 11, 9, 2, 5, 4, 10, 6, 8]);
        assert_eq!(canon_key(g.to_simple().masks()), canon_key(h.to_simple().masks()));
        let k = Triangulation::octahedron();
        assert_ne!(canon_key(g.to_simple().masks()), canon_key(k.to_simple().masks()));
    }

    #[test]
    fn cap() {
        let e = ChromaticEngine::new(5);
        assert!(matches!(
            e.polynomial(&Triangulation::octahedron()),
            Err(ChromPolyError::OrderTooLarge { n: 6, cap: 5 })
        ));
    }
}
