//! Measure of latency: how far a cospectral pair is from an overt symmetry.
//!
//! For a pair `{a, b}` in an `n`-vertex graph, find the largest `T ⊇ {a, b}`
//! such that some automorphism of `R_T(G)` maps `a` to `b`, and report
//! `(n - |T|) / (n - 2)`.

mod automorphism;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cospec::{are_cospectral, CospecError};
use crate::graphs::{VertexSet, WGraph};
use crate::ratfun::Rational;
use crate::reduce::{schur_reduce, ReduceError};

pub use automorphism::{find_automorphism_mapping, has_swap_automorphism};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatencyError {
    #[error("vertices {0} and {1} are not cospectral")]
    NotCospectral(usize, usize),
    #[error("no reduction containing {0} and {1} has an automorphism mapping one to the other")]
    NoLatentSymmetry(usize, usize),
    #[error(transparent)]
    Cospec(#[from] CospecError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

/// Sets of one cardinality examined during the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelLog {
    pub size: usize,
    pub examined: usize,
    pub symmetric: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatencyReport {
    pub pair: (usize, usize),
    pub n: usize,
    #[serde(serialize_with = "crate::ratfun::rational_string::serialize")]
    pub measure: Rational,
    /// Lexicographically smallest largest-cardinality witness set.
    pub witness: Vec<usize>,
    pub levels_searched: Vec<LevelLog>,
    /// Whether the symmetry is still present after reducing to `{a, b}`.
    pub persists_at_pair: bool,
}

/// All `k`-subsets of `pool` in lexicographic order.
fn combinations(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn symmetric_in_reduction(g: &WGraph, t: &VertexSet, a: usize, b: usize) -> Result<bool, ReduceError> {
    let r = schur_reduce(&g.adjacency(), t)?;
    let pa = t.position(a).expect("T contains a");
    let pb = t.position(b).expect("T contains b");
    Ok(has_swap_automorphism(r.base(), pa, pb))
}

/// Computes the measure of latency of the cospectral pair `{a, b}`.
///
/// Subsets of each cardinality are tested in parallel; the result does not
/// depend on scheduling.
pub fn measure_of_latency(g: &WGraph, a: usize, b: usize) -> Result<LatencyReport, LatencyError> {
    let m = g.adjacency();
    if !are_cospectral(&m, a, b)?.cospectral {
        return Err(LatencyError::NotCospectral(a, b));
    }
    let n = g.n();
    let others: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
    let mut levels = Vec::new();
    for size in (2..=n).rev() {
        let candidates: Vec<VertexSet> = combinations(&others, size - 2)
            .into_iter()
            .map(|extra| VertexSet::new(extra.into_iter().chain([a, b]), n).expect("valid subset"))
            .collect();
        let hits: Vec<VertexSet> = candidates
            .par_iter()
            .map(|t| symmetric_in_reduction(g, t, a, b).map(|ok| ok.then(|| t.clone())))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect();
        levels.push(LevelLog {
            size,
            examined: candidates.len(),
            symmetric: hits.len(),
        });
        if let Some(witness) = hits.into_iter().min() {
            let pair = VertexSet::new([a, b], n).expect("distinct pair");
            let persists_at_pair = symmetric_in_reduction(g, &pair, a, b)?;
            let measure = if size == n {
                Rational::zero()
            } else {
                Rational::new(BigInt::from(n - size), BigInt::from(n - 2))
            };
            return Ok(LatencyReport {
                pair: (a, b),
                n,
                measure,
                witness: witness.indices().to_vec(),
                levels_searched: levels,
                persists_at_pair,
            });
        }
    }
    Err(LatencyError::NoLatentSymmetry(a, b))
}
