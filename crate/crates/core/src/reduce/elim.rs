//! Gaussian elimination over the field of rational functions.

use crate::graphs::{VertexSet, WMatrix};
use crate::ratfun::RationalFunction;

use super::ReduceError;

type Rows = Vec<Vec<RationalFunction>>;

/// Picks the nonzero entry of column `col` at or below `col` with the
/// smallest total degree.
fn pivot_row(a: &Rows, col: usize) -> Option<usize> {
    (col..a.len())
        .filter(|&r| !a[r][col].is_zero())
        .min_by_key(|&r| a[r][col].weight())
}

/// Solves `a · x = b` in place, leaving `x` in `b`. `a` is square.
fn solve(mut a: Rows, b: &mut Rows) -> Result<(), ReduceError> {
    let k = a.len();
    for col in 0..k {
        let p = pivot_row(&a, col).ok_or(ReduceError::SingularComplement)?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].inv().expect("nonzero pivot");
        for j in col..k {
            a[col][j] = &a[col][j] * &inv;
        }
        for x in b[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..k {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in col..k {
                if !a[col][j].is_zero() {
                    a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                }
            }
            for j in 0..b[r].len() {
                if !b[col][j].is_zero() {
                    b[r][j] = &b[r][j] - &(&factor * &b[col][j]);
                }
            }
        }
    }
    Ok(())
}

fn block(m: &WMatrix, rows: &[usize], cols: &[usize]) -> Rows {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect())
        .collect()
}

/// `M_SS - M_SS̄ (M_S̄S̄ - λI)⁻¹ M_S̄S`, labelled by the kept vertices.
pub(super) fn schur_complement(m: &WMatrix, s: &VertexSet) -> Result<WMatrix, ReduceError> {
    let keep = s.indices();
    let comp = s.complement(m.size());
    let out = comp.indices();
    let mut result = m.principal(s);
    if out.is_empty() {
        return Ok(result);
    }
    let lambda = RationalFunction::lambda();
    let mut inner = block(m, out, out);
    for (i, row) in inner.iter_mut().enumerate() {
        row[i] = &row[i] - &lambda;
    }
    let mut x = block(m, out, keep);
    solve(inner, &mut x)?;
    let left = block(m, keep, out);
    for (i, lrow) in left.iter().enumerate() {
        for j in 0..keep.len() {
            let correction = lrow
                .iter()
                .zip(&x)
                .filter(|(l, xr)| !l.is_zero() && !xr[j].is_zero())
                .fold(RationalFunction::zero(), |acc, (l, xr)| &acc + &(l * &xr[j]));
            if !correction.is_zero() {
                let v = result.get(i, j) - &correction;
                result.set(i, j, v);
            }
        }
    }
    Ok(result)
}

/// `det(M - λI)` for a matrix over rational functions.
pub fn det_minus_lambda(m: &WMatrix) -> RationalFunction {
    let n = m.size();
    let lambda = RationalFunction::lambda();
    let mut a: Rows = m.rows().map(<[RationalFunction]>::to_vec).collect();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = &row[i] - &lambda;
    }
    let mut det = RationalFunction::one();
    for col in 0..n {
        let Some(p) = pivot_row(&a, col) else {
            return RationalFunction::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        det = &det * &a[col][col];
        let inv = a[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for j in col..n {
                if !a[col][j].is_zero() {
                    a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                }
            }
        }
    }
    det
}
