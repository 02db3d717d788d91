//! Golden partition listings and the label matcher that lines them up with
//! computed partition sets.
//!
//! A listing names vertices `v1..vn` from a drawing we do not have, so each
//! listing is compared under the relabelling `label -> vertex` that
//! reproduces the most listed partitions.

use crate::coloring::{ColorPartition, PartitionSet};
use crate::graph::SimpleGraph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const APPENDIX1_JSON: &str = include_str!("../../golden/appendix1.json");
pub const APPENDIX2_JSON: &str = include_str!("../../golden/appendix2.json");

/// One listed partition: classes of 1-based labels, verbatim.
pub type ListedPartition = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenItem {
    pub id: String,
    /// Order announced by the heading the item sits under.
    pub heading_order: usize,
    pub degree_sequence: Option<String>,
    /// `None` when the text gives no count.
    pub stated_count: Option<usize>,
    /// The text says the graph has a single 3-class partition.
    #[serde(default)]
    pub uniquely_3_colorable: bool,
    pub partitions: Vec<ListedPartition>,
}

impl GoldenItem {
    /// Order implied by the largest label in the listing, falling back to
    /// [`GoldenItem::order`].
    pub fn listing_order(&self) -> usize {
        self.partitions.iter().flatten().flatten().copied().max().unwrap_or_else(|| self.order())
    }

    /// Order implied by the degree sequence when one is given.
    pub fn order(&self) -> usize {
        self.degree_sequence.as_ref().map_or(self.heading_order, |d| d.len())
    }

    /// Degree sequence as sorted integers.
    pub fn degrees(&self) -> Option<Vec<usize>> {
        self.degree_sequence.as_ref().map(|d| {
            let mut v: Vec<usize> = d.bytes().map(|b| (b - b'0') as usize).collect();
            v.sort_unstable();
            v
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Appendix1 {
    pub lower_bound_orders: Vec<usize>,
    pub lower_bound: Vec<usize>,
    pub table_orders: Vec<usize>,
    pub table_counts: Vec<usize>,
    pub items: Vec<GoldenItem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Appendix2 {
    pub order: usize,
    pub degree_sequence: String,
    pub stated_count: usize,
    pub partitions: Vec<ListedPartition>,
}

pub fn appendix1() -> Appendix1 {
    serde_json::from_str(APPENDIX1_JSON).expect("bundled appendix1.json parses")
}

pub fn appendix2() -> Appendix2 {
    serde_json::from_str(APPENDIX2_JSON).expect("bundled appendix2.json parses")
}

/// Why a listed partition was set aside before matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Malformed {
    pub index: usize,
    pub reason: String,
}

/// Listings split into usable partitions (0-based, normalised, distinct)
/// and the rest.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanListing {
    /// Indices into the original listing of the distinct usable entries.
    pub kept: Vec<usize>,
    pub partitions: Vec<ColorPartition>,
    pub malformed: Vec<Malformed>,
    /// Pairs `(later, earlier)` of identical entries.
    pub duplicates: Vec<(usize, usize)>,
}

pub fn clean_listing(listed: &[ListedPartition], n: usize) -> CleanListing {
    let mut out = CleanListing::default();
    for (i, p) in listed.iter().enumerate() {
        let mut seen = vec![0usize; n + 1];
        let mut bad = None;
        for c in p {
            for &l in c {
                if l == 0 || l > n {
                    bad = Some(format!("label v{l} outside 1..={n}"));
                } else {
                    seen[l] += 1;
                }
            }
        }
        if bad.is_none() {
            if let Some(l) = (1..=n).find(|&l| seen[l] > 1) {
                bad = Some(format!("v{l} appears in more than one class"));
            } else if let Some(l) = (1..=n).find(|&l| seen[l] == 0) {
                bad = Some(format!("v{l} is missing"));
            } else if p.len() > 4 {
                bad = Some(format!("{} classes", p.len()));
            }
        }
        if let Some(reason) = bad {
            out.malformed.push(Malformed { index: i, reason });
            continue;
        }
        let q = ColorPartition::from_classes(p.iter().map(|c| c.iter().map(|&l| l - 1).collect()).collect());
        if let Some(j) = out.partitions.iter().position(|x| *x == q) {
            out.duplicates.push((i, out.kept[j]));
        } else {
            out.kept.push(i);
            out.partitions.push(q);
        }
    }
    out
}

/// Best relabelling found by [`match_listing`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelMatch {
    /// `sigma[label]` is the vertex carrying `v(label+1)`.
    pub sigma: Vec<usize>,
    /// Per entry of `CleanListing::partitions`: reproduced under `sigma`.
    pub reproduced: Vec<bool>,
    pub nodes: u64,
    /// False when the node budget ran out before the search finished.
    pub exhaustive: bool,
}

impl LabelMatch {
    pub fn reproduced_count(&self) -> usize {
        self.reproduced.iter().filter(|&&r| r).count()
    }
}

struct Matcher<'a> {
    adj: &'a SimpleGraph,
    listed: Vec<Vec<usize>>,
    computed: Vec<Vec<usize>>,
    order: Vec<usize>,
    sigma: Vec<usize>,
    used: u64,
    target: usize,
    nodes: u64,
    budget: u64,
}

fn class_vector(p: &ColorPartition, n: usize) -> Vec<usize> {
    let mut v = vec![0; n];
    for (i, c) in p.classes.iter().enumerate() {
        for &x in c {
            v[x] = i;
        }
    }
    v
}

impl Matcher<'_> {
    /// Candidate computed partitions per listing after assigning `order[..=k]`.
    fn filter(&self, k: usize, cands: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let i = self.order[k];
        let vi = self.sigma[i];
        cands
            .iter()
            .enumerate()
            .map(|(q, ps)| {
                ps.iter()
                    .copied()
                    .filter(|&p| {
                        self.order[..k].iter().all(|&j| {
                            let vj = self.sigma[j];
                            (self.listed[q][i] == self.listed[q][j]) == (self.computed[p][vi] == self.computed[p][vj])
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Depth-first search for a full labelling keeping at least
    /// `self.target` listings alive.
    fn search(&mut self, k: usize, cands: Vec<Vec<usize>>) -> bool {
        if cands.iter().filter(|c| !c.is_empty()).count() < self.target {
            return false;
        }
        if k == self.order.len() {
            return true;
        }
        if self.nodes >= self.budget {
            return false;
        }
        self.nodes += 1;
        let i = self.order[k];
        for v in 0..self.adj.order() {
            if self.used >> v & 1 == 1 {
                continue;
            }
            self.sigma[i] = v;
            self.used |= 1 << v;
            let next = self.filter(k, &cands);
            let found = self.search(k + 1, next);
            self.used &= !(1 << v);
            if found {
                return true;
            }
        }
        false
    }
}

/// Search relabellings of `listed` onto `g` maximising reproduced partitions.
pub fn match_listing(g: &SimpleGraph, computed: &PartitionSet, listed: &[ColorPartition], budget: u64) -> LabelMatch {
    let n = g.order();
    let lv: Vec<Vec<usize>> = listed.iter().map(|p| class_vector(p, n)).collect();
    // labels with many listed classmates first
    let mut order: Vec<usize> = (0..n).collect();
    let mates = |i: usize| (0..n).filter(|&j| j != i && lv.iter().any(|l| l[i] == l[j])).count();
    order.sort_by_key(|&i| (std::cmp::Reverse(mates(i)), i));
    let mut m = Matcher {
        adj: g,
        listed: lv,
        computed: computed.partitions.iter().map(|p| class_vector(p, n)).collect(),
        order,
        sigma: vec![usize::MAX; n],
        used: 0,
        target: 0,
        nodes: 0,
        budget,
    };
    let all: Vec<usize> = (0..computed.len()).collect();
    let start = vec![all; listed.len()];
    // lower the target until some labelling reaches it; the first hit is optimal
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut exhaustive = true;
    let mut total = 0;
    for t in (0..=listed.len()).rev() {
        m.target = t;
        m.used = 0;
        total += m.nodes;
        m.nodes = 0;
        if m.search(0, start.clone()) {
            sigma = m.sigma.clone();
            break;
        }
        if m.nodes >= budget {
            exhaustive = false;
        }
    }
    let set: BTreeSet<&ColorPartition> = computed.partitions.iter().collect();
    let reproduced = listed
        .iter()
        .map(|p| {
            let q = ColorPartition::from_classes(p.classes.iter().map(|c| c.iter().map(|&l| sigma[l]).collect()).collect());
            set.contains(&q)
        })
        .collect();
    LabelMatch { sigma, reproduced, nodes: total + m.nodes, exhaustive }
}
