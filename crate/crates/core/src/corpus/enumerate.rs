//! Isomorph-free generation of triangulations.
//!
//! Two independent strategies:
//! * closure from `K3` under the wheel extensions, with extension sites
//!   pruned to one per automorphism orbit;
//! * breadth-first search of the edge-flip graph of one order, seeded with
//!   a stacked triangulation.
//!
//! Both deduplicate by canonical certificate and return graphs sorted by it.

use super::{CorpusError, Result};
use crate::triangulation::{automorphisms, canonical_certificate, Automorphism, IsoCertificate, Triangulation, VertexId};
use crate::wheelops::{extend_composite, extend_wheel, ExtendSite};
use dashmap::DashSet;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest order `enumerate_mpg` accepts unless a larger cap is passed.
pub const DEFAULT_CAP: usize = 13;

/// One isomorphism class per entry, sorted by certificate.
#[derive(Clone, Debug)]
pub struct CorpusSlice {
    pub n: usize,
    pub min_degree: usize,
    pub certificates: Vec<IsoCertificate>,
    pub graphs: Vec<Triangulation>,
}

impl CorpusSlice {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    fn from_graphs(n: usize, min_degree: usize, graphs: &[(IsoCertificate, Triangulation)]) -> Self {
        let kept: Vec<_> = graphs.iter().filter(|(_, g)| g.min_degree() >= min_degree).collect();
        CorpusSlice {
            n,
            min_degree,
            certificates: kept.iter().map(|(c, _)| c.clone()).collect(),
            graphs: kept.into_iter().map(|(_, g)| g.clone()).collect(),
        }
    }
}

type Level = Arc<Vec<(IsoCertificate, Triangulation)>>;

fn cache() -> &'static Mutex<BTreeMap<usize, Level>> {
    static C: OnceLock<Mutex<BTreeMap<usize, Level>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(BTreeMap::new()))
}

fn sort_dedup(mut v: Vec<(IsoCertificate, Triangulation)>) -> Vec<(IsoCertificate, Triangulation)> {
    v.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    v.dedup_by(|a, b| a.0 == b.0);
    v
}

/// Orbit key of a site under `a`; sites are kept only when their own key is
/// least among the images.
fn image(a: &Automorphism, site: &Site) -> Site {
    let p = |v: VertexId| a.perm[v];
    match *site {
        Site::Face(mut f) => {
            f = f.map(p);
            f.sort_unstable();
            Site::Face(f)
        }
        Site::Path { x, u, y } => {
            let (x, y) = (p(x).min(p(y)), p(x).max(p(y)));
            Site::Path { x, u: p(u), y }
        }
        Site::Funnel { top, stem, b1, b2 } => {
            let (b1, b2) = (p(b1).min(p(b2)), p(b1).max(p(b2)));
            Site::Funnel { top: p(top), stem: p(stem), b1, b2 }
        }
        Site::Composite { w, u, y } => {
            let (u, y) = (p(u).min(p(y)), p(u).max(p(y)));
            Site::Composite { w: p(w), u, y }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Site {
    Face([VertexId; 3]),
    Path { x: VertexId, u: VertexId, y: VertexId },
    Funnel { top: VertexId, stem: VertexId, b1: VertexId, b2: VertexId },
    Composite { w: VertexId, u: VertexId, y: VertexId },
}

impl Site {
    /// Canonical form under the identity, used as the orbit key.
    fn key(&self) -> Site {
        match *self {
            Site::Face(mut f) => {
                f.sort_unstable();
                Site::Face(f)
            }
            Site::Path { x, u, y } => Site::Path { x: x.min(y), u, y: x.max(y) },
            Site::Funnel { top, stem, b1, b2 } => Site::Funnel { top, stem, b1: b1.min(b2), b2: b1.max(b2) },
            Site::Composite { w, u, y } => Site::Composite { w, u: u.min(y), y: u.max(y) },
        }
    }
}

/// Sites of one kind in `g`, one per automorphism orbit.
fn sites(g: &Triangulation, kind: usize, auts: &[Automorphism]) -> Vec<Site> {
    let n = g.order();
    let mut out = Vec::new();
    match kind {
        3 => out.extend(g.triangles().into_iter().map(Site::Face)),
        4 | 6 => {
            for u in 0..n {
                let nb = g.neighbors(u);
                for (i, &x) in nb.iter().enumerate() {
                    for &y in &nb[i + 1..] {
                        out.push(if kind == 4 { Site::Path { x, u, y } } else { Site::Composite { w: u, u: x, y } });
                    }
                }
            }
        }
        5 => {
            for stem in 0..n {
                for &b1 in g.neighbors(stem) {
                    let b2 = g.succ(stem, b1);
                    for &top in g.neighbors(stem) {
                        if top != b1 && top != b2 {
                            out.push(Site::Funnel { top, stem, b1, b2 });
                        }
                    }
                }
            }
        }
        _ => unreachable!("site kind {kind}"),
    }
    if auts.len() > 1 {
        out.retain(|s| {
            let k = s.key();
            auts.iter().all(|a| image(a, s) >= k)
        });
    }
    out
}

fn apply(g: &Triangulation, s: Site) -> Option<Triangulation> {
    let h = match s {
        Site::Face(f) => g.insert_vertex_in_face(&f).ok()?,
        Site::Path { x, u, y } => extend_wheel(g, ExtendSite::Path { x, u, y }).ok()?.0,
        Site::Funnel { top, stem, b1, b2 } => extend_wheel(g, ExtendSite::Funnel { top, stem, b1, b2 }).ok()?.0,
        Site::Composite { w, u, y } => extend_composite(g, w, u, y).ok()?,
    };
    h.is_maximal().then_some(h)
}

fn expand(parents: &[(IsoCertificate, Triangulation)], kinds: &[usize]) -> Vec<(IsoCertificate, Triangulation)> {
    parents
        .par_iter()
        .flat_map_iter(|(_, g)| {
            let auts = automorphisms(g);
            kinds
                .iter()
                .flat_map(|&k| sites(g, k, &auts))
                .filter_map(|s| apply(g, s))
                .map(|h| (canonical_certificate(&h), h))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Every triangulation of order `n` (closure strategy), memoised per order.
pub(crate) fn all_of_order(n: usize) -> Level {
    if let Some(l) = cache().lock().unwrap().get(&n) {
        return l.clone();
    }
    let level: Vec<(IsoCertificate, Triangulation)> = match n {
        0..=2 => Vec::new(),
        3 => {
            let k3 = Triangulation::k3();
            vec![(canonical_certificate(&k3), k3)]
        }
        _ => {
            let mut v = expand(&all_of_order(n - 1), &[3]);
            if n >= 5 {
                v.extend(expand(&all_of_order(n - 2), &[4, 5]));
            }
            if n >= 6 {
                v.extend(expand(&all_of_order(n - 3), &[6]));
            }
            sort_dedup(v)
        }
    };
    let level = Arc::new(level);
    cache().lock().unwrap().insert(n, level.clone());
    level
}

/// Triangulations of order `n` with minimum degree at least `min_degree`.
pub fn enumerate_mpg(n: usize, min_degree: usize) -> Result<CorpusSlice> {
    enumerate_mpg_capped(n, min_degree, DEFAULT_CAP)
}

pub fn enumerate_mpg_capped(n: usize, min_degree: usize, cap: usize) -> Result<CorpusSlice> {
    if n > cap {
        return Err(CorpusError::CapExceeded { n, cap });
    }
    Ok(CorpusSlice::from_graphs(n, min_degree, &all_of_order(n)))
}

fn stacked(n: usize) -> Triangulation {
    let mut g = Triangulation::k4();
    while g.order() < n {
        let v = g.order() - 1;
        let f = [v, g.neighbors(v)[0], g.neighbors(v)[1]];
        g = g.insert_vertex_in_face(&f).expect("face around the newest vertex");
    }
    g
}

/// Every triangulation of order `n` by exhaustive edge flipping.
pub fn enumerate_by_flips(n: usize, min_degree: usize) -> Result<CorpusSlice> {
    if n < 3 {
        return Ok(CorpusSlice::from_graphs(n, min_degree, &[]));
    }
    if n == 3 {
        let k3 = Triangulation::k3();
        return Ok(CorpusSlice::from_graphs(n, min_degree, &[(canonical_certificate(&k3), k3)]));
    }
    let seed = stacked(n);
    let seen: DashSet<IsoCertificate> = DashSet::new();
    let c = canonical_certificate(&seed);
    seen.insert(c.clone());
    let mut all = vec![(c, seed.clone())];
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let next: Vec<(IsoCertificate, Triangulation)> = frontier
            .par_iter()
            .flat_map_iter(|g| {
                let mut out = Vec::new();
                for (x, z) in g.edges() {
                    if let Some(h) = g.flip_edge(x, z) {
                        let c = canonical_certificate(&h);
                        if seen.insert(c.clone()) {
                            out.push((c, h));
                        }
                    }
                }
                out
            })
            .collect();
        frontier = next.iter().map(|(_, h)| h.clone()).collect();
        all.extend(next);
    }
    Ok(CorpusSlice::from_graphs(n, min_degree, &sort_dedup(all)))
}
