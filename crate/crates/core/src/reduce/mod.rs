//! Isospectral reductions.
//!
//! Two independent constructions are provided: [`schur_reduce`] evaluates
//! `R_S(M) = M_SS - M_SS̄ (M_S̄S̄ - λI)⁻¹ M_S̄S` by exact elimination over the
//! field of rational functions, and [`branch_reduce`] sums branch products
//! over all paths through the complement of a base set. They agree whenever
//! the latter applies.

mod branch;
mod elim;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{charpoly, GraphError, VertexSet, WMatrix};
use crate::ratfun::{poly_gcd, Polynomial, RationalFunction};

pub use branch::{branch_reduce, branches, Branch};
pub use elim::det_minus_lambda;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("reduction set must be a nonempty subset of the vertices")]
    ImproperSubset,
    #[error("complement block is singular as a rational-function matrix")]
    SingularComplement,
    #[error("vertex set is not a base set of the graph")]
    NotABaseSet,
    #[error("reduction chain is not strictly nested")]
    NotNested,
    #[error("entry ({0}, {1}) is not in 𝕎")]
    NotInW(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A matrix over 𝕎 obtained by reducing an `n`-vertex matrix onto `kept`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedMatrix {
    #[serde(flatten)]
    base: WMatrix,
    #[serde(skip)]
    kept: VertexSet,
    #[serde(skip)]
    source_n: usize,
}

impl ReducedMatrix {
    pub fn base(&self) -> &WMatrix {
        &self.base
    }

    pub fn into_base(self) -> WMatrix {
        self.base
    }

    /// Kept vertices, as indices into the original matrix.
    pub fn kept(&self) -> &VertexSet {
        &self.kept
    }

    pub fn source_n(&self) -> usize {
        self.source_n
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        self.base.get(i, j)
    }

    /// Entry at original vertex indices `(u, v)`.
    pub fn entry(&self, u: usize, v: usize) -> Option<&RationalFunction> {
        Some(self.base.get(self.kept.position(u)?, self.kept.position(v)?))
    }
}

fn check_subset(m: &WMatrix, s: &VertexSet) -> Result<(), ReduceError> {
    if s.is_empty() || s.indices().last().is_some_and(|&v| v >= m.size()) {
        return Err(ReduceError::ImproperSubset);
    }
    Ok(())
}

fn check_in_w(m: &WMatrix) -> Result<(), ReduceError> {
    for (i, row) in m.rows().enumerate() {
        if let Some(j) = row.iter().position(|e| !e.in_w()) {
            return Err(ReduceError::NotInW(i, j));
        }
    }
    Ok(())
}

/// Isospectral reduction of `m` over `s` by exact Schur complement.
///
/// `s` may be the whole vertex set, in which case `m` is returned unchanged.
pub fn schur_reduce(m: &WMatrix, s: &VertexSet) -> Result<ReducedMatrix, ReduceError> {
    check_subset(m, s)?;
    check_in_w(m)?;
    let base = elim::schur_complement(m, s)?;
    Ok(ReducedMatrix {
        base,
        kept: s.clone(),
        source_n: m.size(),
    })
}

/// The smash function of `a`: the single entry of the reduction over `{a}`.
pub fn smash(m: &WMatrix, a: usize) -> Result<RationalFunction, ReduceError> {
    let s = VertexSet::new([a], m.size()).map_err(|_| ReduceError::ImproperSubset)?;
    Ok(schur_reduce(m, &s)?.get(0, 0).clone())
}

/// `det(R(λ) - λI)` in lowest terms.
pub fn reduced_charpoly(r: &ReducedMatrix) -> RationalFunction {
    det_minus_lambda(&r.base)
}

/// `p(M)/p(M_S̄S̄)` split as `numerator / denominator` in lowest terms, with
/// `removed` the cancelled common factor (monic). The reduction's eigenvalues
/// are the roots of `numerator`, and `numerator · removed = p(M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedSpectrum {
    pub numerator: Polynomial,
    pub removed: Polynomial,
    pub denominator: Polynomial,
}

pub fn reduced_spectrum(m: &WMatrix, s: &VertexSet) -> Result<ReducedSpectrum, ReduceError> {
    check_subset(m, s)?;
    let full = charpoly(m)?;
    let block = charpoly(&m.principal(&s.complement(m.size())))?;
    let removed = poly_gcd(&full, &block);
    Ok(ReducedSpectrum {
        numerator: full.div_rem(&removed).expect("nonzero gcd").0,
        denominator: block.div_rem(&removed).expect("nonzero gcd").0,
        removed,
    })
}

/// Reduces over each set of a strictly nested chain in turn.
pub fn sequential_reduce(m: &WMatrix, chain: &[VertexSet]) -> Result<ReducedMatrix, ReduceError> {
    let first = chain.first().ok_or(ReduceError::NotNested)?;
    check_subset(m, first)?;
    for w in chain.windows(2) {
        if w[1].len() >= w[0].len() || !w[1].is_subset_of(&w[0]) {
            return Err(ReduceError::NotNested);
        }
    }
    let mut current = schur_reduce(m, first)?;
    for next in &chain[1..] {
        let local = VertexSet::new(
            next.indices().iter().map(|&v| current.kept.position(v).expect("nested")),
            current.base.size(),
        )?;
        let step = schur_reduce(&current.base, &local)?;
        current = ReducedMatrix {
            base: step.base,
            kept: next.clone(),
            source_n: m.size(),
        };
    }
    Ok(current)
}
