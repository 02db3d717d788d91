//! Colour coordinates: invariant groups, the variant set and the standard form.

use super::{enumerate_partitions, is_uniquely_colorable, ColoringError, PartitionSet};
use crate::graph::{AsGraph, SimpleGraph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorFrame {
    pub anchors: Vec<usize>,
    /// `invariant_groups[i]`: vertices sharing the class of anchor `i` in every partition.
    pub invariant_groups: Vec<Vec<usize>>,
    pub invariant_set: Vec<usize>,
    pub variant_set: Vec<usize>,
    /// Invariant vertices incident with the edge cut.
    pub boundary: Vec<usize>,
    /// Edges `(u, v)` with `u` variant and `v` invariant.
    pub edge_cut: Vec<(usize, usize)>,
}

fn frame_from(g: &SimpleGraph, anchors: &[usize], parts: &PartitionSet) -> Result<ColorFrame, ColoringError> {
    let k = anchors.len();
    let n = g.order();
    let not = |m: String| Err(ColoringError::AnchorsNotCoordinated(m));
    if parts.is_empty() {
        return not(format!("graph has no partition into {k} classes"));
    }
    let mut groups: Vec<Vec<bool>> = vec![vec![true; n]; k];
    for p in &parts.partitions {
        if p.len() < k {
            return not(format!("partition {:?} has fewer than {k} classes", p.classes));
        }
        let cls: Vec<usize> = anchors.iter().map(|&a| p.class_of(a).unwrap()).collect();
        for i in 0..k {
            if cls[..i].contains(&cls[i]) {
                return not(format!("partition {:?} puts two anchors together", p.classes));
            }
            let members = &p.classes[cls[i]];
            for (v, keep) in groups[i].iter_mut().enumerate() {
                if !members.contains(&v) {
                    *keep = false;
                }
            }
        }
    }
    let invariant_groups: Vec<Vec<usize>> = groups
        .iter()
        .map(|m| (0..n).filter(|&v| m[v]).collect())
        .collect();
    let mut inv = vec![false; n];
    for grp in &invariant_groups {
        for &v in grp {
            inv[v] = true;
        }
    }
    let invariant_set: Vec<usize> = (0..n).filter(|&v| inv[v]).collect();
    let variant_set: Vec<usize> = (0..n).filter(|&v| !inv[v]).collect();
    let mut edge_cut = Vec::new();
    for &u in &variant_set {
        for v in g.neighbors(u) {
            if inv[v] {
                edge_cut.push((u, v));
            }
        }
    }
    let mut boundary: Vec<usize> = edge_cut.iter().map(|e| e.1).collect();
    boundary.sort_unstable();
    boundary.dedup();
    Ok(ColorFrame {
        anchors: anchors.to_vec(),
        invariant_groups,
        invariant_set,
        variant_set,
        boundary,
        edge_cut,
    })
}

/// Frame spanned by `anchors` (one per colour, `k = anchors.len()`).
pub fn color_frame<G: AsGraph + ?Sized>(g: &G, anchors: &[usize]) -> Result<ColorFrame, ColoringError> {
    let g = g.as_graph();
    let parts = enumerate_partitions(&*g, anchors.len());
    frame_from(&g, anchors, &parts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardForm {
    pub graph: SimpleGraph,
    /// `map[old] = new` vertex id.
    pub map: Vec<usize>,
    pub anchors: Vec<usize>,
    pub variant_set: Vec<usize>,
    /// Edges added inside the variant set once no further merge applied.
    pub added_edges: Vec<(usize, usize)>,
}

/// Merge variant vertices that share a class in some partition until none
/// remain, then complete the variant set into a clique.
pub fn standard_form<G: AsGraph + ?Sized>(g: &G, anchors: &[usize]) -> Result<StandardForm, ColoringError> {
    let mut cur = g.as_graph().into_owned();
    let mut map: Vec<usize> = (0..cur.order()).collect();
    let mut anchors = anchors.to_vec();
    loop {
        let parts = enumerate_partitions(&cur, anchors.len());
        let frame = frame_from(&cur, &anchors, &parts)?;
        let vc = &frame.variant_set;
        let mut pair = None;
        'search: for (i, &a) in vc.iter().enumerate() {
            for &b in &vc[i + 1..] {
                if cur.has_edge(a, b) {
                    continue;
                }
                if parts.partitions.iter().any(|p| p.class_of(a) == p.class_of(b)) {
                    pair = Some((a, b));
                    break 'search;
                }
            }
        }
        match pair {
            Some((a, b)) => {
                cur = cur.merge(a, b);
                let shift = |x: usize| if x == b { a } else if x > b { x - 1 } else { x };
                for m in map.iter_mut() {
                    *m = shift(*m);
                }
                for x in anchors.iter_mut() {
                    *x = shift(*x);
                }
            }
            None => {
                let mut added = Vec::new();
                for (i, &a) in vc.iter().enumerate() {
                    for &b in &vc[i + 1..] {
                        if !cur.has_edge(a, b) {
                            cur.add_edge(a, b);
                            added.push((a, b));
                        }
                    }
                }
                return Ok(StandardForm {
                    graph: cur,
                    map,
                    anchors,
                    variant_set: frame.variant_set,
                    added_edges: added,
                });
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearWitness {
    pub anchors: [usize; 4],
    pub invariant_set: Vec<usize>,
    /// Direct check that the induced subgraph on the invariant set is uniquely 4-colourable.
    pub induced_unique: bool,
}

/// First anchor quadruple (in lexicographic order) lying in four distinct
/// classes of every 4-partition, with its invariant subgraph.
pub fn uniquely_near_4_witness<G: AsGraph + ?Sized>(g: &G) -> Result<Option<NearWitness>, ColoringError> {
    let g = g.as_graph();
    let parts = enumerate_partitions(&*g, 4);
    if parts.is_empty() {
        return Err(ColoringError::NotFourColorable);
    }
    if parts.partitions.iter().any(|p| p.len() < 4) {
        return Ok(None);
    }
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [a, b, c, d];
                    let ok = parts.partitions.iter().all(|p| {
                        let cl: Vec<usize> = q.iter().map(|&x| p.class_of(x).unwrap()).collect();
                        (0..4).all(|i| !cl[..i].contains(&cl[i]))
                    });
                    if !ok {
                        continue;
                    }
                    let frame = frame_from(&g, &q, &parts)?;
                    let sub = g.induced(&frame.invariant_set);
                    let induced_unique = is_uniquely_colorable(&sub, 4).unwrap_or(false);
                    return Ok(Some(NearWitness { anchors: q, invariant_set: frame.invariant_set, induced_unique }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::Triangulation;

    #[test]
    fn unique_graph_frame_covers_everything() {
        let g = Triangulation::k4().insert_vertex_in_face(&[0, 1, 2]).unwrap();
        let f = color_frame(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(f.invariant_set.len(), 5);
        assert!(f.variant_set.is_empty());
        for (i, grp) in f.invariant_groups.iter().enumerate() {
            assert!(grp.contains(&f.anchors[i]));
        }
        let w = uniquely_near_4_witness(&g).unwrap().unwrap();
        assert_eq!(w.invariant_set.len(), 5);
        assert!(w.induced_unique);
    }

    #[test]
    fn octahedron_has_no_coordinates() {
        let g = Triangulation::octahedron();
        for q in [[0, 1, 2, 3], [0, 1, 2, 5], [1, 2, 3, 4]] {
            assert!(matches!(color_frame(&g, &q), Err(ColoringError::AnchorsNotCoordinated(_))));
        }
        assert_eq!(uniquely_near_4_witness(&g).unwrap(), None);
    }

    #[test]
    fn standard_form_trivial_when_unique() {
        let g = Triangulation::k4();
        let s = standard_form(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(s.graph, g.to_simple());
        assert!(s.variant_set.is_empty());
    }
}
