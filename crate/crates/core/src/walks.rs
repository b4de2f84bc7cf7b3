//! Closed-walk and non-returning-walk counts, and their relation to the
//! reduction read as a generating function in `t = 1/λ`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::graphs::{ConstMatrix, GraphError, VertexSet, WMatrix};
use crate::ratfun::Rational;
use crate::reduce::{schur_reduce, ReduceError};

/// Closed and non-returning walk counts at one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkTable {
    pub vertex: usize,
    /// `closed[k] = (M^k)_aa` for `k = 0..=K`.
    #[serde(serialize_with = "ser_rationals")]
    pub closed: Vec<Rational>,
    /// `nonreturning[k - 1] = w*_k(a)` for `k = 1..=K`.
    #[serde(serialize_with = "ser_rationals")]
    pub nonreturning: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// Matrices `w*_1(S), …, w*_K(S)` of `S`-non-returning walk counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonReturningMatrixSeries {
    pub set: VertexSet,
    /// `mats[k - 1]` is `w*_k(S)`, row-major `|S| × |S|`.
    pub mats: Vec<Vec<Rational>>,
}

impl NonReturningMatrixSeries {
    pub fn entry(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.mats[k - 1][i * self.set.len() + j]
    }
}

/// `(M^k)_aa` for `k = 0..=K`.
pub fn closed_walk_counts(m: &WMatrix, a: usize, k: usize) -> Result<Vec<Rational>, GraphError> {
    let c = m.to_const()?;
    check_vertex(a, c.n)?;
    // v = M^k e_a, read off component a.
    let mut v = vec![Rational::zero(); c.n];
    v[a] = Rational::one();
    let mut out = Vec::with_capacity(k + 1);
    out.push(Rational::one());
    for _ in 0..k {
        v = mat_vec(&c, &v);
        out.push(v[a].clone());
    }
    Ok(out)
}

fn check_vertex(a: usize, n: usize) -> Result<(), GraphError> {
    if a >= n {
        return Err(GraphError::IndexOutOfRange { index: a, n });
    }
    Ok(())
}

fn mat_vec(c: &ConstMatrix, v: &[Rational]) -> Vec<Rational> {
    (0..c.n)
        .map(|i| {
            (0..c.n)
                .filter(|&j| !v[j].is_zero() && !c.at(i, j).is_zero())
                .fold(Rational::zero(), |acc, j| acc + c.at(i, j) * &v[j])
        })
        .collect()
}

/// `w*_1 = M_SS` and `w*_k = M_SS̄ · M_S̄S̄^(k-2) · M_S̄S` for `k ≥ 2`.
pub fn nonreturning_counts(
    m: &WMatrix,
    s: &VertexSet,
    k: usize,
) -> Result<NonReturningMatrixSeries, GraphError> {
    let c = m.to_const()?;
    if let Some(&index) = s.indices().last() {
        check_vertex(index, c.n)?;
    }
    let inside = s.indices();
    let comp = s.complement(c.n);
    let outside = comp.indices();
    let ks = inside.len();
    let mut mats = Vec::with_capacity(k);
    if k >= 1 {
        mats.push(
            inside
                .iter()
                .flat_map(|&i| inside.iter().map(move |&j| (i, j)))
                .map(|(i, j)| c.at(i, j).clone())
                .collect(),
        );
    }
    // cur[x][j] = (M_S̄S̄^(k-2) M_S̄S)[x][j], advanced one power per step.
    let mut cur: Vec<Vec<Rational>> = outside
        .iter()
        .map(|&x| inside.iter().map(|&j| c.at(x, j).clone()).collect())
        .collect();
    for step in 2..=k {
        let mut w = vec![Rational::zero(); ks * ks];
        for (ii, &i) in inside.iter().enumerate() {
            for (xi, &x) in outside.iter().enumerate() {
                let a = c.at(i, x);
                if a.is_zero() {
                    continue;
                }
                for jj in 0..ks {
                    if !cur[xi][jj].is_zero() {
                        w[ii * ks + jj] += a * &cur[xi][jj];
                    }
                }
            }
        }
        mats.push(w);
        if step < k {
            cur = outside
                .iter()
                .map(|&x| {
                    (0..ks)
                        .map(|jj| {
                            outside
                                .iter()
                                .enumerate()
                                .filter(|&(_, &y)| !c.at(x, y).is_zero())
                                .fold(Rational::zero(), |acc, (yi, &y)| acc + c.at(x, y) * &cur[yi][jj])
                        })
                        .collect()
                })
                .collect();
        }
    }
    Ok(NonReturningMatrixSeries {
        set: s.clone(),
        mats,
    })
}

/// Both walk tables at `a` up to length `k`.
pub fn walk_table(m: &WMatrix, a: usize, k: usize) -> Result<WalkTable, GraphError> {
    let closed = closed_walk_counts(m, a, k)?;
    let s = VertexSet::new([a], m.size())?;
    let series = nonreturning_counts(m, &s, k)?;
    Ok(WalkTable {
        vertex: a,
        closed,
        nonreturning: series.mats.into_iter().map(|w| w[0].clone()).collect(),
    })
}

/// Checks that expanding every entry of `R_S(M)` at `λ = ∞` to order `K-1`
/// reproduces `w*_1(S), …, w*_K(S)`.
pub fn verify_reduction_series(m: &WMatrix, s: &VertexSet, k: usize) -> Result<bool, ReduceError> {
    let r = schur_reduce(m, s)?;
    let series = nonreturning_counts(m, s, k)?;
    let size = s.len();
    for i in 0..size {
        for j in 0..size {
            let coeffs = r.get(i, j).series_at_infinity(k.saturating_sub(1)).expect("reduction entries lie in 𝕎");
            for (step, c) in coeffs.iter().enumerate().take(k) {
                if c != series.entry(step + 1, i, j) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Checks `w_ℓ(a) = Σ Π w*_{i_j}(a)` over all compositions `(i_1, …, i_k)` of
/// `ℓ` into positive parts, for every `ℓ ≤ L`.
pub fn composition_identity_check(m: &WMatrix, a: usize, l: usize) -> Result<bool, GraphError> {
    let table = walk_table(m, a, l)?;
    for len in 0..=l {
        if compositions_sum(&table.nonreturning, len) != table.closed[len] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sums products over every composition of `len`, enumerated explicitly.
fn compositions_sum(star: &[Rational], len: usize) -> Rational {
    if len == 0 {
        return Rational::one();
    }
    // Each composition of `len` corresponds to a subset of the `len - 1` cut points.
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << (len - 1)) {
        let mut product = Rational::one();
        let mut part = 1;
        for cut in 0..len - 1 {
            if mask >> cut & 1 == 1 {
                product *= &star[part - 1];
                part = 1;
            } else {
                part += 1;
            }
        }
        product *= &star[part - 1];
        total += product;
    }
    total
}
