//! Exact chromatic polynomials and checks of their identities on triangulations.

mod compute;
mod golden;
mod identities;
mod poly;

pub use compute::{ChromaticEngine, DEFAULT_ORDER_CAP};
pub use golden::{Golden, GoldenConstants, Real, DEFAULT_BITS};
pub use identities::{
    five_contract_decomposition, four_contract_decomposition, quad_twist_ops, tutte_identity_checks, FiveContract,
    FourContract, QuadTwist, TutteReport,
};
pub use poly::Polynomial;

use crate::graph::AsGraph;
use crate::triangulation::{TriangulationError, VertexId};
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChromPolyError {
    #[error("order {n} exceeds the configured cap {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("vertex {v} has degree {found}, expected {expected}")]
    WrongDegree { v: VertexId, expected: usize, found: usize },
    #[error("the quadrilateral has no diagonal between its first and third vertices")]
    NoDiagonal,
    #[error("the quadrilateral is not split into two faces by its diagonal")]
    NotEmptyQuad,
    #[error("the opposite corners are already adjacent, so the twist would create a double edge")]
    TwistCreatesParallel,
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

/// `f(G, t)` using the shared process-wide engine.
pub fn chromatic_polynomial<G: AsGraph + ?Sized>(g: &G) -> Result<Polynomial, ChromPolyError> {
    ChromaticEngine::global().polynomial(g)
}

/// Evaluation point or value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Int(BigInt),
    Golden(Golden),
    Real(Real),
}

/// Horner evaluation; integer and `Z[tau]` inputs stay exact, reals keep their precision.
pub fn evaluate(p: &Polynomial, x: &Scalar) -> Scalar {
    match x {
        Scalar::Int(i) => Scalar::Int(p.eval_int(i)),
        Scalar::Golden(g) => Scalar::Golden(p.eval_golden(g)),
        Scalar::Real(r) => Scalar::Real(p.eval_real(r)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulation::Triangulation;

    #[test]
    fn k3_at_tau_squared() {
        let p = chromatic_polynomial(&Triangulation::k3()).unwrap();
        assert_eq!(evaluate(&p, &Scalar::Int(4.into())), Scalar::Int(24.into()));
        assert_eq!(evaluate(&p, &Scalar::Int(0.into())), Scalar::Int(0.into()));
        assert_eq!(evaluate(&p, &Scalar::Golden(Golden::tau_sq())), Scalar::Golden(Golden::tau_sq()));
        let c = GoldenConstants::default();
        let Scalar::Real(r) = evaluate(&p, &Scalar::Real(c.tau_sq.clone())) else { unreachable!() };
        assert!((r.to_f64() - 2.618_034).abs() < 1e-6);
    }
}
