//! Unpacking: building a graph whose reduction over two distinguished
//! vertices is a prescribed 2×2 matrix over 𝕎.
//!
//! Every entry `f_ij` is split into partial fractions
//! `c + Σ a_k / (λ - r_k)^ℓ_k`. The constant `c` becomes a direct arc (or a
//! loop when `i = j`); each term becomes a directed path `i → … → j` with
//! `ℓ_k` interior vertices, each carrying a loop of weight `r_k`, and weight
//! `a_k` on the first arc.

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{GraphError, VertexSet, WGraph, WMatrix};
use crate::ratfun::{partial_fractions, PartialFractionForm, Polynomial, RatFunError, RationalFunction};
use crate::reduce::schur_reduce;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum UnpackError {
    #[error("expected a 2x2 matrix, got {0}x{0}")]
    NotTwoByTwo(usize),
    #[error("entry ({0}, {1}) is not in 𝕎")]
    NotInW(usize, usize),
    #[error("entry ({row}, {col}) has a denominator with the non-splitting factor {factor}")]
    NonSplittingDenominator {
        row: usize,
        col: usize,
        factor: Polynomial,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Blueprint of one synthesized path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathPlan {
    pub from: usize,
    pub to: usize,
    /// Number of interior vertices.
    pub interior: u32,
    /// Loop weight on every interior vertex.
    pub loop_weight: RationalFunction,
    /// Weight of the first arc; all other arcs have weight 1.
    pub first_weight: RationalFunction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnpackPlan {
    /// `forms[i][j]` decomposes entry `(i, j)`.
    pub forms: [[PartialFractionForm; 2]; 2],
    pub paths: Vec<PathPlan>,
}

impl UnpackPlan {
    pub fn vertex_count(&self) -> usize {
        2 + self.paths.iter().map(|p| p.interior as usize).sum::<usize>()
    }
}

fn decompose(f: &RationalFunction, row: usize, col: usize) -> Result<PartialFractionForm, UnpackError> {
    partial_fractions(f).map_err(|e| match e {
        RatFunError::NonSplittingDenominator(factor) => UnpackError::NonSplittingDenominator { row, col, factor },
        _ => UnpackError::NotInW(row, col),
    })
}

/// Decomposes every entry and lays out the paths, entry by entry in row-major
/// order and, within an entry, in partial-fraction order.
pub fn plan_2x2(r: &WMatrix) -> Result<UnpackPlan, UnpackError> {
    if r.size() != 2 {
        return Err(UnpackError::NotTwoByTwo(r.size()));
    }
    let mut forms = Vec::with_capacity(4);
    let mut paths = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let f = r.get(i, j);
            if !f.in_w() {
                return Err(UnpackError::NotInW(i, j));
            }
            let form = decompose(f, i, j)?;
            paths.extend(form.terms.iter().map(|t| PathPlan {
                from: i,
                to: j,
                interior: t.power,
                loop_weight: RationalFunction::constant(t.root.clone()),
                first_weight: RationalFunction::constant(t.coeff.clone()),
            }));
            forms.push(form);
        }
    }
    let mut it = forms.into_iter();
    let mut next = || it.next().expect("four entries");
    let forms = [[next(), next()], [next(), next()]];
    Ok(UnpackPlan { forms, paths })
}

/// Synthesizes a weighted digraph whose reduction over `{0, 1}` is `r`.
pub fn unpack_2x2(r: &WMatrix) -> Result<WGraph, UnpackError> {
    let plan = plan_2x2(r)?;
    let n = plan.vertex_count();
    let mut g = WGraph::new(n, true);
    for i in 0..2 {
        for j in 0..2 {
            g.add_edge(i, j, RationalFunction::constant(plan.forms[i][j].constant.clone()))?;
        }
    }
    let mut next = 2;
    for p in &plan.paths {
        let interior: Vec<usize> = (next..next + p.interior as usize).collect();
        next += interior.len();
        let route: Vec<usize> = std::iter::once(p.from).chain(interior.iter().copied()).chain([p.to]).collect();
        for (k, arc) in route.windows(2).enumerate() {
            let w = if k == 0 { p.first_weight.clone() } else { RationalFunction::one() };
            g.add_edge(arc[0], arc[1], w)?;
        }
        for &v in &interior {
            g.add_edge(v, v, p.loop_weight.clone())?;
        }
    }
    Ok(g)
}

/// True iff reducing `g` onto its first `r.size()` vertices gives `r`
/// entrywise (labels are ignored).
pub fn verify_roundtrip(g: &WGraph, r: &WMatrix) -> bool {
    let k = r.size();
    if k == 0 || k > g.n() {
        return false;
    }
    let s = VertexSet::all(k);
    match schur_reduce(&g.adjacency(), &s) {
        Ok(red) => (0..k).all(|i| (0..k).all(|j| red.get(i, j) == r.get(i, j))),
        Err(_) => false,
    }
}
