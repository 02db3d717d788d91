//! Proper colourings, colour-class partitions and Kempe chains.

mod frame;
mod kempe;

pub use frame::{color_frame, standard_form, uniquely_near_4_witness, ColorFrame, NearWitness, StandardForm};
pub use kempe::{kempe_component, kempe_interchange};

use crate::graph::{bits, AsGraph, SimpleGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("budget {k} is below the chromatic number {chi}")]
    BudgetBelowChromatic { k: usize, chi: usize },
    #[error("start vertex {0} is not coloured with either chain colour")]
    StartNotBichromatic(usize),
    #[error("anchors are not coordinated: {0}")]
    AnchorsNotCoordinated(String),
    #[error("graph is not 4-colourable")]
    NotFourColorable,
    #[error("colouring is not proper")]
    NotProper,
}

/// Colour assignment with colours `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<u8>,
    pub k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, k: usize) -> Self {
        Coloring { colors, k }
    }

    pub fn is_proper<G: AsGraph + ?Sized>(&self, g: &G) -> bool {
        let g = g.as_graph();
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c >= 1 && c as usize <= self.k)
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn partition(&self) -> ColorPartition {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot = [usize::MAX; 256];
        for (v, &c) in self.colors.iter().enumerate() {
            let s = &mut slot[c as usize];
            if *s == usize::MAX {
                *s = classes.len();
                classes.push(Vec::new());
            }
            classes[*s].push(v);
        }
        ColorPartition { classes }
    }
}

/// Partition of the vertex set into independent classes, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorPartition {
    pub classes: Vec<Vec<usize>>,
}

impl ColorPartition {
    /// Normalise arbitrary class lists.
    pub fn from_classes(mut classes: Vec<Vec<usize>>) -> Self {
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        classes.retain(|c| !c.is_empty());
        classes.sort();
        ColorPartition { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Colour class `i` gets colour `i + 1`.
    pub fn to_coloring(&self, n: usize, k: usize) -> Coloring {
        let mut colors = vec![0u8; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                colors[v] = i as u8 + 1;
            }
        }
        Coloring { colors, k }
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&v))
    }

    /// True when the classes cover `0..n` exactly once and are independent in `g`.
    pub fn is_valid_for(&self, g: &SimpleGraph, k: usize) -> bool {
        let n = g.order();
        let mut seen = vec![false; n];
        for c in &self.classes {
            for &v in c {
                if v >= n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            for (i, &a) in c.iter().enumerate() {
                if c[i + 1..].iter().any(|&b| g.has_edge(a, b)) {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s) && self.classes.len() <= k
    }
}

/// Deduplicated, sorted partitions into at most `k` classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSet {
    pub k: usize,
    pub partitions: Vec<ColorPartition>,
}

impl PartitionSet {
    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    /// `Σ k!/(k-|P|)!`, the number of colourings the partitions stand for.
    pub fn coloring_count(&self) -> u128 {
        self.partitions
            .iter()
            .map(|p| falling(self.k as u128, p.len() as u128))
            .sum()
    }
}

pub(crate) fn falling(k: u128, j: u128) -> u128 {
    if j > k {
        return 0;
    }
    (0..j).map(|i| k - i).product()
}

/// Visit partitions of `g` into at most `k` independent classes, vertices taken in
/// id order with classes opened in order. Stops when `visit` returns false.
fn for_each_partition(g: &SimpleGraph, k: usize, visit: &mut dyn FnMut(&[u64]) -> bool) {
    fn rec(g: &SimpleGraph, k: usize, v: usize, classes: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        if v == g.order() {
            return visit(classes);
        }
        let nb = g.neighbors_mask(v);
        for i in 0..classes.len() {
            if classes[i] & nb == 0 {
                classes[i] |= 1 << v;
                let go = rec(g, k, v + 1, classes, visit);
                classes[i] &= !(1 << v);
                if !go {
                    return false;
                }
            }
        }
        if classes.len() < k {
            classes.push(1 << v);
            let go = rec(g, k, v + 1, classes, visit);
            classes.pop();
            if !go {
                return false;
            }
        }
        true
    }
    if g.order() == 0 {
        visit(&[]);
        return;
    }
    let mut classes = Vec::with_capacity(k);
    rec(g, k, 0, &mut classes, visit);
}

fn to_partition(classes: &[u64]) -> ColorPartition {
    ColorPartition { classes: classes.iter().map(|&m| bits(m).collect()).collect() }
}

/// All partitions of V into at most `k` nonempty independent classes.
pub fn enumerate_partitions<G: AsGraph + ?Sized>(g: &G, k: usize) -> PartitionSet {
    let g = g.as_graph();
    let mut out = Vec::new();
    for_each_partition(&g, k, &mut |c| {
        out.push(to_partition(c));
        true
    });
    out.sort();
    PartitionSet { k, partitions: out }
}

/// Number of partitions, stopping once `limit` is reached.
pub fn count_partitions_up_to<G: AsGraph + ?Sized>(g: &G, k: usize, limit: usize) -> usize {
    let g = g.as_graph();
    let mut cnt = 0;
    for_each_partition(&g, k, &mut |_| {
        cnt += 1;
        cnt < limit
    });
    cnt
}

/// Count proper colourings with `k` colours by direct backtracking over colours.
pub fn count_proper_colorings<G: AsGraph + ?Sized>(g: &G, k: usize) -> u128 {
    let g = g.as_graph();
    let n = g.order();
    if n == 0 {
        return 1;
    }
    // visit vertices in breadth-first order so that constraints bite early
    let order = bfs_order(&g);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| g.neighbors(v).filter(|&u| pos[u] < pos[v]).collect())
        .collect();
    let mut colors = vec![0usize; n];
    fn rec(i: usize, k: usize, order: &[usize], earlier: &[Vec<usize>], colors: &mut [usize]) -> u128 {
        if i == order.len() {
            return 1;
        }
        let v = order[i];
        let mut total = 0;
        for c in 1..=k {
            if earlier[i].iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                total += rec(i + 1, k, order, earlier, colors);
            }
        }
        colors[v] = 0;
        total
    }
    rec(0, k, &order, &earlier, &mut colors)
}

fn bfs_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

pub fn is_k_colorable<G: AsGraph + ?Sized>(g: &G, k: usize) -> bool {
    count_partitions_up_to(g, k, 1) > 0
}

/// Least `k` admitting a proper colouring.
pub fn chromatic_number<G: AsGraph + ?Sized>(g: &G) -> usize {
    let g = g.as_graph();
    if g.order() == 0 {
        return 0;
    }
    (1..=g.order()).find(|&k| is_k_colorable(&*g, k)).unwrap()
}

/// True iff exactly one partition into at most `k` classes exists.
pub fn is_uniquely_colorable<G: AsGraph + ?Sized>(g: &G, k: usize) -> Result<bool, ColoringError> {
    let g = g.as_graph();
    match count_partitions_up_to(&*g, k, 2) {
        0 => Err(ColoringError::BudgetBelowChromatic { k, chi: chromatic_number(&*g) }),
        c => Ok(c == 1),
    }
}

/// Some proper colouring with at most `k` colours, if one exists.
pub fn find_coloring<G: AsGraph + ?Sized>(g: &G, k: usize) -> Option<Coloring> {
    let g = g.as_graph();
    let mut found = None;
    for_each_partition(&g, k, &mut |c| {
        found = Some(to_partition(c));
        false
    });
    found.map(|p| p.to_coloring(g.order(), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::Triangulation;

    #[test]
    fn k4_partitions() {
        let g = Triangulation::k4();
        let p = enumerate_partitions(&g, 4);
        assert_eq!(p.len(), 1);
        assert_eq!(p.partitions[0].classes, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(count_proper_colorings(&g, 4), 24);
        assert_eq!(count_proper_colorings(&g, 3), 0);
        assert_eq!(chromatic_number(&g), 4);
        assert_eq!(is_uniquely_colorable(&g, 4), Ok(true));
        assert!(matches!(is_uniquely_colorable(&g, 3), Err(ColoringError::BudgetBelowChromatic { k: 3, chi: 4 })));
    }

    #[test]
    fn octahedron_partitions() {
        let g = Triangulation::octahedron();
        let p = enumerate_partitions(&g, 4);
        assert_eq!(p.len(), 4);
        assert_eq!(count_proper_colorings(&g, 4), 96);
        assert_eq!(p.coloring_count(), 96);
        assert_eq!(chromatic_number(&g), 3);
        assert_eq!(is_uniquely_colorable(&g, 4), Ok(false));
    }

    #[test]
    fn icosahedron_needs_four() {
        assert_eq!(chromatic_number(&Triangulation::icosahedron()), 4);
    }

    #[test]
    fn partition_roundtrip() {
        let g = Triangulation::octahedron();
        for p in enumerate_partitions(&g, 4).partitions {
            let c = p.to_coloring(6, 4);
            assert!(c.is_proper(&g));
            assert_eq!(c.partition(), p);
        }
    }
}
