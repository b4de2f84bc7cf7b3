//! Cospectral and strongly cospectral vertex pairs.
//!
//! Cospectrality is always decided twice: by comparing the characteristic
//! polynomials of the two vertex-deleted matrices, and by comparing the
//! diagonal of the reduction over the pair. The two must agree; a mismatch
//! is reported as [`CospecError::RoutesDisagree`].

mod numeric;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{charpoly, GraphError, VertexSet, WGraph, WMatrix};
use crate::ratfun::{is_squarefree, Polynomial};
use crate::reduce::{reduced_charpoly, schur_reduce, ReduceError, ReducedMatrix};

pub use numeric::{numeric_strong_check, NumericSpectral, DEFAULT_TOLERANCE};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CospecError {
    #[error("vertices must be distinct (got {0} twice)")]
    SamePair(usize),
    #[error("latent automorphism test needs an undirected graph")]
    DirectedInput,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("cospectrality tests disagree for ({0}, {1})")]
    RoutesDisagree(usize, usize),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralReport {
    pub pair: (usize, usize),
    pub cospectral: bool,
    /// `p(M\a, λ)` and `p(M\b, λ)`.
    pub deleted_charpolys: (Polynomial, Polynomial),
    /// `R_{a,b}(M)`, rows ordered by vertex index.
    pub reduction: ReducedMatrix,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strongly: Option<bool>,
    /// Numerator of `det(R_{a,b} - λI)` in lowest terms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub squarefree_witness: Option<Polynomial>,
}

fn pair_set(m: &WMatrix, a: usize, b: usize) -> Result<VertexSet, CospecError> {
    if a == b {
        return Err(CospecError::SamePair(a));
    }
    Ok(VertexSet::new([a, b], m.size())?)
}

fn diagonal_equal(r: &ReducedMatrix) -> bool {
    r.get(0, 0) == r.get(1, 1)
}

/// Decides whether `a` and `b` are cospectral in the constant matrix `m`.
pub fn are_cospectral(m: &WMatrix, a: usize, b: usize) -> Result<CospectralReport, CospecError> {
    let s = pair_set(m, a, b)?;
    let n = m.size();
    let pa = charpoly(&m.delete_vertices(&VertexSet::new([a], n)?)?)?;
    let pb = charpoly(&m.delete_vertices(&VertexSet::new([b], n)?)?)?;
    let reduction = schur_reduce(m, &s)?;
    let by_charpoly = pa == pb;
    if by_charpoly != diagonal_equal(&reduction) {
        return Err(CospecError::RoutesDisagree(a, b));
    }
    Ok(CospectralReport {
        pair: (a, b),
        cospectral: by_charpoly,
        deleted_charpolys: (pa, pb),
        reduction,
        strongly: None,
        squarefree_witness: None,
    })
}

/// Cospectral, and the reduction over `{a, b}` has only simple eigenvalues.
///
/// Applies to directed graphs too, where it serves as the definition.
pub fn are_strongly_cospectral(
    m: &WMatrix,
    a: usize,
    b: usize,
) -> Result<CospectralReport, CospecError> {
    let mut report = are_cospectral(m, a, b)?;
    let witness = reduced_charpoly(&report.reduction).num().clone();
    let simple = is_squarefree(&witness).expect("det(R - λI) is a nonzero function");
    report.strongly = Some(report.cospectral && simple);
    report.squarefree_witness = Some(witness);
    Ok(report)
}

/// Whether swapping `a` and `b` is an automorphism of `R_{a,b}(G)`.
///
/// For undirected graphs this coincides with cospectrality.
pub fn is_latently_automorphic(g: &WGraph, a: usize, b: usize) -> Result<bool, CospecError> {
    if g.is_directed() {
        return Err(CospecError::DirectedInput);
    }
    let m = g.adjacency();
    let s = pair_set(&m, a, b)?;
    let r = schur_reduce(&m, &s)?;
    Ok(r.base().is_fixed_by(&[1, 0]))
}
