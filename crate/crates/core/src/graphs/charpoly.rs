use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{GraphError, WMatrix};
use crate::ratfun::{Polynomial, Rational};

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ConstMatrix {
    pub n: usize,
    pub data: Vec<Rational>,
}

impl ConstMatrix {
    pub fn new(n: usize, data: Vec<Rational>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        ConstMatrix { n, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &ConstMatrix) -> ConstMatrix {
        let n = self.n;
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        data[i * n + j] += a * b;
                    }
                }
            }
        }
        ConstMatrix { n, data }
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).fold(Rational::zero(), |acc, i| acc + self.at(i, i))
    }
}

/// `det(M - λI)` for a constant matrix via the Faddeev–LeVerrier recurrence.
///
/// The empty matrix has characteristic polynomial 1.
pub(crate) fn charpoly_of(m: &ConstMatrix) -> Polynomial {
    let n = m.n;
    // c[k] is the coefficient of λ^k in det(λI - M).
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = ConstMatrix::new(n, vec![Rational::zero(); n * n]);
    for k in 1..=n {
        // M_k = M·M_{k-1} + c_{n-k+1} I
        let mut next = m.mul(&mk);
        for i in 0..n {
            next.data[i * n + i] += &c[n - k + 1];
        }
        mk = next;
        let am = m.mul(&mk);
        c[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
    }
    let p = Polynomial::new(c);
    if n % 2 == 1 {
        -p
    } else {
        p
    }
}

/// Characteristic polynomial `p(M, λ) = det(M - λI)`; leading coefficient `(-1)^n`.
pub fn charpoly(m: &WMatrix) -> Result<Polynomial, GraphError> {
    Ok(charpoly_of(&m.to_const()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::parse_graph;
    use crate::ratfun::RationalFunction;

    #[test]
    fn small_examples() {
        let one = WMatrix::from_integers(&[&[0]]).unwrap();
        assert_eq!(charpoly(&one).unwrap(), Polynomial::from_integers(&[0, -1]));
        let k2 = WMatrix::from_integers(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(charpoly(&k2).unwrap(), Polynomial::from_integers(&[-1, 0, 1]));
        let p3 = parse_graph("undirected 3\n0 1\n1 2").unwrap().adjacency();
        assert_eq!(charpoly(&p3).unwrap(), Polynomial::from_integers(&[0, 2, 0, -1]));
        assert_eq!(charpoly(&WMatrix::zeros(0)).unwrap(), Polynomial::one());
    }

    #[test]
    fn non_constant_rejected() {
        let m = WMatrix::from_rows(vec![vec![RationalFunction::lambda()]]).unwrap();
        assert_eq!(charpoly(&m), Err(GraphError::NonConstantEntries));
    }
}
