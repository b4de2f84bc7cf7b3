//! Floating-point spectral decomposition, used as an independent oracle for
//! the exact strong-cospectrality test on symmetric matrices.

use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::ToPrimitive;

use super::CospecError;
use crate::graphs::WMatrix;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Eigenvalues of `M = Σ θ E_θ` grouped into eigenspaces with their
/// orthogonal projectors.
#[derive(Clone, Debug)]
pub struct NumericSpectral {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Columns are orthonormal eigenvectors matching `eigenvalues`.
    pub eigenvectors: DMatrix<f64>,
    /// `(θ, E_θ)` per distinct eigenvalue, ascending in θ.
    pub projectors: Vec<(f64, DMatrix<f64>)>,
    pub tol: f64,
    /// False when some gap between consecutive eigenvalues lies in
    /// `(tol, 10·tol]`, where grouping into eigenspaces is ambiguous.
    pub well_conditioned: bool,
}

impl NumericSpectral {
    pub fn new(m: &WMatrix, tol: f64) -> Result<Self, CospecError> {
        if !m.is_symmetric() {
            return Err(CospecError::NotSymmetric);
        }
        let n = m.size();
        let c = m.to_const()?;
        let dense = DMatrix::from_fn(n, n, |i, j| c.at(i, j).to_f64().expect("finite rational"));
        let eig = SymmetricEigen::new(dense);

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| eig.eigenvalues[x].total_cmp(&eig.eigenvalues[y]));
        let eigenvalues: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let eigenvectors = DMatrix::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);

        let merge = 10.0 * tol;
        let mut well_conditioned = true;
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for k in 0..n {
            match groups.last_mut() {
                Some(g) if eigenvalues[k] - eigenvalues[k - 1] <= merge => {
                    if eigenvalues[k] - eigenvalues[k - 1] > tol {
                        well_conditioned = false;
                    }
                    g.push(k);
                }
                _ => groups.push(vec![k]),
            }
        }
        let projectors = groups
            .iter()
            .map(|g| {
                let theta = g.iter().map(|&k| eigenvalues[k]).sum::<f64>() / g.len() as f64;
                let mut e = DMatrix::zeros(n, n);
                for &k in g {
                    let v = eigenvectors.column(k);
                    e += &v * v.transpose();
                }
                (theta, e)
            })
            .collect();
        Ok(NumericSpectral {
            eigenvalues,
            eigenvectors,
            projectors,
            tol,
            well_conditioned,
        })
    }

    /// Largest deviation from `Σ E_θ = I` and `E_θ² = E_θ`.
    pub fn resolution_error(&self) -> f64 {
        let n = self.eigenvectors.nrows();
        let mut sum = DMatrix::<f64>::zeros(n, n);
        let mut worst: f64 = 0.0;
        for (_, e) in &self.projectors {
            sum += e;
            worst = worst.max((e * e - e).amax());
        }
        worst.max((sum - DMatrix::<f64>::identity(n, n)).amax())
    }

    /// `E_θ e_a = ±E_θ e_b` for every eigenspace, within `tol`.
    pub fn strongly_cospectral(&self, a: usize, b: usize) -> bool {
        self.projectors.iter().all(|(_, e)| {
            let ca = e.column(a);
            let cb = e.column(b);
            (ca - cb).amax() <= self.tol || (ca + cb).amax() <= self.tol
        })
    }

    /// `(E_θ)_aa = (E_θ)_bb` for every eigenspace, within `tol`.
    pub fn projector_diagonals_match(&self, a: usize, b: usize) -> bool {
        self.projectors
            .iter()
            .all(|(_, e)| (e[(a, a)] - e[(b, b)]).abs() <= self.tol)
    }
}

/// Floating-point strong cospectrality test for symmetric constant matrices.
pub fn numeric_strong_check(m: &WMatrix, a: usize, b: usize, tol: f64) -> Result<bool, CospecError> {
    if a == b {
        return Err(CospecError::SamePair(a));
    }
    let spec = NumericSpectral::new(m, tol)?;
    if a >= m.size() || b >= m.size() {
        return Err(crate::graphs::GraphError::IndexOutOfRange {
            index: a.max(b),
            n: m.size(),
        }
        .into());
    }
    Ok(spec.strongly_cospectral(a, b))
}
