//! Checkers for the contraction and golden-ratio identities of chromatic polynomials
//! of triangulations.

use super::golden::{Golden, GoldenConstants, Real};
use super::{chromatic_polynomial, ChromPolyError, Polynomial};
use crate::graph::SimpleGraph;
use crate::triangulation::{Triangulation, VertexId};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;

type Result<T> = std::result::Result<T, ChromPolyError>;

fn f4<G: crate::graph::AsGraph + ?Sized>(g: &G) -> Result<BigInt> {
    Ok(chromatic_polynomial(g)?.eval_i64(4))
}

fn check_degree(g: &Triangulation, v: VertexId, want: usize) -> Result<Vec<VertexId>> {
    let link = g.link(v)?;
    if link.len() != want {
        return Err(ChromPolyError::WrongDegree { v, expected: want, found: link.len() });
    }
    Ok(link)
}

/// Result of splitting `f(G,4)` at a degree-4 vertex.
#[derive(Clone, Debug)]
pub struct FourContract {
    pub link: [VertexId; 4],
    /// `(G - v)` with `v1, v3` identified; `None` when they are adjacent in `G - v`.
    pub g1: Option<Triangulation>,
    /// `(G - v)` with `v2, v4` identified.
    pub g2: Option<Triangulation>,
    pub f_g: BigInt,
    pub f_g1: BigInt,
    pub f_g2: BigInt,
}

impl FourContract {
    pub fn holds(&self) -> bool {
        self.f_g == &self.f_g1 + &self.f_g2
    }
}

fn identify_after_delete(g: &Triangulation, v: VertexId, a: VertexId, b: VertexId) -> Result<Option<Triangulation>> {
    let (h, map) = g.delete_vertex_mapped(v)?;
    let (a, b) = (map[a].unwrap(), map[b].unwrap());
    if h.adjacent(a, b) {
        return Ok(None);
    }
    Ok(Some(h.identify_vertices(a, b)?))
}

pub fn four_contract_decomposition(g: &Triangulation, v: VertexId) -> Result<FourContract> {
    let l = check_degree(g, v, 4)?;
    let g1 = identify_after_delete(g, v, l[0], l[2])?;
    let g2 = identify_after_delete(g, v, l[1], l[3])?;
    let val = |h: &Option<Triangulation>| -> Result<BigInt> {
        h.as_ref().map_or(Ok(BigInt::zero()), f4)
    };
    Ok(FourContract {
        link: [l[0], l[1], l[2], l[3]],
        f_g: f4(g)?,
        f_g1: val(&g1)?,
        f_g2: val(&g2)?,
        g1,
        g2,
    })
}

/// Brackets of the degree-5 split of `f(G,4)`.
#[derive(Clone, Debug)]
pub struct FiveContract {
    pub link: [VertexId; 5],
    pub f_g: BigInt,
    pub brackets: [BigInt; 3],
    /// Third bracket with `G1` in the subtracted term instead of `G3`.
    pub b3_as_printed: BigInt,
}

impl FiveContract {
    pub fn holds(&self) -> bool {
        self.brackets.iter().sum::<BigInt>() == self.f_g
    }

    pub fn printed_holds(&self) -> bool {
        &self.brackets[0] + &self.brackets[1] + &self.b3_as_printed == self.f_g
    }

    pub fn nonnegative(&self) -> bool {
        self.brackets.iter().all(|b| !b.is_negative())
    }
}

/// `(G - v)` with `pair` identified, as an abstract graph, plus the id map.
/// `None` when the pair is adjacent.
fn merged(h: &SimpleGraph, pair: (usize, usize)) -> Option<(SimpleGraph, Vec<usize>)> {
    if h.has_edge(pair.0, pair.1) {
        None
    } else {
        Some(h.identify_set(&[pair.0, pair.1]))
    }
}

fn with_edges(g: &(SimpleGraph, Vec<usize>), edges: &[(usize, usize)]) -> SimpleGraph {
    let mut h = g.0.clone();
    for &(a, b) in edges {
        let (a, b) = (g.1[a], g.1[b]);
        if a != b {
            h.add_edge(a, b);
        }
    }
    h
}

/// `f(H) - f(H + edges)` at 4, or 0 when `H` does not exist.
fn bracket(h: &Option<(SimpleGraph, Vec<usize>)>, base: &Option<(SimpleGraph, Vec<usize>)>, edges: &[(usize, usize)]) -> Result<BigInt> {
    let first = match h {
        Some(x) => f4(&x.0)?,
        None => BigInt::zero(),
    };
    let second = match base {
        Some(x) => f4(&with_edges(x, edges))?,
        None => BigInt::zero(),
    };
    Ok(first - second)
}

pub fn five_contract_decomposition(g: &Triangulation, v: VertexId) -> Result<FiveContract> {
    let l = check_degree(g, v, 5)?;
    let h = g.to_simple().remove_vertex(v);
    let id = |x: VertexId| if x > v { x - 1 } else { x };
    let [v1, v2, v3, v4, v5] = [id(l[0]), id(l[1]), id(l[2]), id(l[3]), id(l[4])];
    let g1 = merged(&h, (v2, v5));
    let g2 = merged(&h, (v2, v4));
    let g3 = merged(&h, (v3, v5));
    let b1 = bracket(&g1, &g1, &[(v1, v4), (v1, v3)])?;
    let b2 = bracket(&g2, &g2, &[(v3, v1), (v3, v5)])?;
    let b3 = bracket(&g3, &g3, &[(v4, v1)])?;
    let b3p = bracket(&g3, &g1, &[(v4, v1)])?;
    Ok(FiveContract {
        link: [l[0], l[1], l[2], l[3], l[4]],
        f_g: f4(g)?,
        brackets: [b1, b2, b3],
        b3_as_printed: b3p,
    })
}

/// The three graphs derived from a quadrilateral `x, y, z, l` split by its diagonal `xz`.
#[derive(Clone, Debug)]
pub struct QuadTwist {
    /// `xz` replaced by `yl`.
    pub theta: Triangulation,
    /// `G` with `xz` contracted.
    pub phi: Triangulation,
    /// `theta` with `yl` contracted.
    pub psi: Triangulation,
    /// `f(G) - f(theta) - f(psi) + f(phi)`.
    pub residual: Polynomial,
    /// `f(G,tau^2) + f(theta,tau^2) - tau^-3 (f(psi,tau^2) + f(phi,tau^2))`, exact.
    pub golden_residual: Golden,
    /// Same quantity relative to the left side, in fixed point.
    pub golden_rel_residual: f64,
}

pub fn quad_twist_ops(g: &Triangulation, quad: [VertexId; 4]) -> Result<QuadTwist> {
    let [x, y, z, l] = quad;
    for &a in &quad {
        if !g.contains(a) {
            return Err(crate::triangulation::TriangulationError::UnknownVertex(a).into());
        }
    }
    if !g.adjacent(x, z) {
        return Err(ChromPolyError::NoDiagonal);
    }
    let (a, b) = (g.succ(z, x), g.succ(x, z));
    let faces_ok = a != b
        && g.adjacent(a, x) && g.adjacent(a, z) && g.adjacent(b, x) && g.adjacent(b, z)
        && g.succ(a, z) == x && g.succ(b, x) == z;
    if !faces_ok || !((a == y && b == l) || (a == l && b == y)) {
        return Err(ChromPolyError::NotEmptyQuad);
    }
    let theta = g.flip_edge(x, z).ok_or(ChromPolyError::TwistCreatesParallel)?;
    let (phi, _) = g.contract_edge_mapped(x, z)?;
    let (psi, _) = theta.contract_edge_mapped(y, l)?;
    let [pg, pt, pp, ps] = [g, &theta, &phi, &psi].map(chromatic_polynomial);
    let (pg, pt, pp, ps) = (pg?, pt?, pp?, ps?);
    let residual = &(&(&pg - &pt) - &ps) + &pp;
    let t2 = Golden::tau_sq();
    let lhs = &pg.eval_golden(&t2) + &pt.eval_golden(&t2);
    let rhs = &Golden::tau_pow(-3) * &(&ps.eval_golden(&t2) + &pp.eval_golden(&t2));
    let golden_residual = &lhs - &rhs;
    let c = GoldenConstants::default();
    let lr = &pg.eval_real(&c.tau_sq) + &pt.eval_real(&c.tau_sq);
    let tau3 = &(&c.tau * &c.tau) * &c.tau;
    let rr = (&ps.eval_real(&c.tau_sq) + &pp.eval_real(&c.tau_sq)).div(&tau3);
    Ok(QuadTwist {
        theta,
        phi,
        psi,
        residual,
        golden_residual,
        golden_rel_residual: relative(&lr, &rr),
    })
}

fn relative(a: &Real, b: &Real) -> f64 {
    let d = (a - b).abs().to_f64();
    let s = a.abs().to_f64().max(b.abs().to_f64());
    if s == 0.0 {
        d
    } else {
        d / s
    }
}

/// Identity status for one triangulation.
#[derive(Clone, Debug, Serialize)]
pub struct TutteReport {
    pub n: usize,
    pub bits: u32,
    pub f_tau_sq: f64,
    pub f_tau_sqrt5: f64,
    /// Right side `sqrt5 * tau^(3(n-3)) * f(G,tau^2)^2`.
    pub golden_rhs: f64,
    pub golden_exact: bool,
    pub golden_rel_residual: f64,
    pub positive_at_tau_sqrt5: bool,
    /// `|f(G,tau^2)| <= tau^(5-n)`.
    pub bound_at_tau_sq: bool,
    /// Vertices where the vertex-elimination relation fails exactly.
    pub elimination_failures: Vec<VertexId>,
    pub elimination_checked: usize,
}

impl TutteReport {
    pub fn all_hold(&self, tol: f64) -> bool {
        self.golden_exact
            && self.golden_rel_residual < tol
            && self.positive_at_tau_sqrt5
            && self.bound_at_tau_sq
            && self.elimination_failures.is_empty()
    }
}

pub fn tutte_identity_checks(g: &Triangulation, bits: u32) -> Result<TutteReport> {
    let n = g.order();
    let p = chromatic_polynomial(g)?;
    let t2 = Golden::tau_sq();
    let ts5 = Golden::tau_sqrt5();
    let a = p.eval_golden(&t2);
    let b = p.eval_golden(&ts5);
    let k = 3 * (n as i64 - 3);
    let rhs = &(&Golden::sqrt5() * &Golden::tau_pow(k)) * &(&a * &a);
    let c = GoldenConstants::new(bits);
    let ar = p.eval_real(&c.tau_sq);
    let br = p.eval_real(&c.tau_sqrt5);
    let mut tk = Real::from_int(1, bits);
    for _ in 0..k.max(0) {
        tk = &tk * &c.tau;
    }
    let sqrt5 = Real::sqrt5(bits);
    let rhs_r = &(&(&sqrt5 * &tk) * &ar) * &ar;
    let mut failures = Vec::new();
    let mut checked = 0;
    if n > 3 {
        for v in 0..n {
            let m = g.degree(v) as i64;
            let h = g.delete_vertex(v)?;
            let q = chromatic_polynomial(&h)?.eval_golden(&t2);
            let mut r = &Golden::tau_pow(1 - m) * &q;
            if m % 2 == 1 {
                r = -&r;
            }
            checked += 1;
            if r != a {
                failures.push(v);
            }
        }
    }
    Ok(TutteReport {
        n,
        bits,
        f_tau_sq: ar.to_f64(),
        f_tau_sqrt5: br.to_f64(),
        golden_rhs: rhs_r.to_f64(),
        golden_exact: b == rhs,
        golden_rel_residual: relative(&br, &rhs_r),
        positive_at_tau_sqrt5: b.signum() == Ordering::Greater,
        bound_at_tau_sq: a.abs_le(&Golden::tau_pow(5 - n as i64)),
        elimination_failures: failures,
        elimination_checked: checked,
    })
}
