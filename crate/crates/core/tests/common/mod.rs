#![allow(dead_code)]

use isored_core::graphs::{VertexSet, WGraph, WMatrix};
use isored_core::ratfun::{Rational, RationalFunction};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Random integer matrix with entries in `[-2, 2]`; roughly `density` of the
/// off-diagonal entries are nonzero.
pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, directed: bool, density: f64) -> WMatrix {
    let mut m = WMatrix::zeros(n);
    for i in 0..n {
        let lo = if directed { 0 } else { i };
        for j in lo..n {
            let p = if i == j { density / 2.0 } else { density };
            if !rng.gen_bool(p) {
                continue;
            }
            let w = loop {
                let w: i64 = rng.gen_range(-2..=2);
                if w != 0 {
                    break w;
                }
            };
            m.set(i, j, RationalFunction::from_integer(w));
            if !directed {
                m.set(j, i, RationalFunction::from_integer(w));
            }
        }
    }
    m
}

/// Random unweighted simple graph (0/1 entries, no loops).
pub fn random_simple_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> WMatrix {
    let mut m = WMatrix::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                m.set(i, j, RationalFunction::one());
                m.set(j, i, RationalFunction::one());
            }
        }
    }
    m
}

/// Nonempty subset of `0..n`; proper whenever `n > 1`.
pub fn random_proper_subset<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let k = if n == 1 { 1 } else { rng.gen_range(1..n) };
    VertexSet::new(idx[..k].iter().copied(), n).unwrap()
}

/// Grows a random seed set until it meets every non-loop cycle.
pub fn random_base_set<R: Rng>(rng: &mut R, g: &WGraph) -> VertexSet {
    let n = g.n();
    let mut chosen = random_proper_subset(rng, n).indices().to_vec();
    let mut rest: Vec<usize> = (0..n).filter(|v| !chosen.contains(v)).collect();
    rest.shuffle(rng);
    loop {
        let s = VertexSet::new(chosen.iter().copied(), n).unwrap();
        if g.is_base_set(&s).unwrap() {
            return s;
        }
        chosen.push(rest.pop().expect("the full vertex set is a base set"));
    }
}

/// Random strictly nested chain `V ⊃ S_1 ⊃ … ⊃ S_m`, `m ≥ 1`.
pub fn random_chain<R: Rng>(rng: &mut R, n: usize) -> Vec<VertexSet> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut sizes: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
    if sizes.is_empty() {
        sizes.push(rng.gen_range(1..n));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
        .into_iter()
        .map(|k| VertexSet::new(order[..k].iter().copied(), n).unwrap())
        .collect()
}

pub fn const_entry(m: &WMatrix, i: usize, j: usize) -> Rational {
    m.get(i, j).as_constant().expect("constant matrix")
}

/// Sums the weights of every walk `a → … → a` of each length `0..=k` by
/// explicit enumeration.
pub fn brute_closed_walks(m: &WMatrix, a: usize, k: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); k + 1];
    fn go(m: &WMatrix, a: usize, at: usize, len: usize, k: usize, w: Rational, out: &mut [Rational]) {
        if at == a {
            out[len] += &w;
        }
        if len == k {
            return;
        }
        for next in 0..m.size() {
            let e = const_entry(m, at, next);
            if !e.is_zero() {
                go(m, a, next, len + 1, k, &w * e, out);
            }
        }
    }
    go(m, a, a, 0, k, Rational::one(), &mut out);
    out
}

/// Sums the weights of walks `i → … → j` of length `k ≥ 1` whose interior
/// vertices all lie outside `s`, by explicit enumeration.
pub fn brute_nonreturning(m: &WMatrix, s: &VertexSet, i: usize, j: usize, k: usize) -> Rational {
    fn go(m: &WMatrix, s: &VertexSet, at: usize, j: usize, left: usize, w: Rational) -> Rational {
        if left == 1 {
            return w * const_entry(m, at, j);
        }
        let mut total = Rational::zero();
        for next in (0..m.size()).filter(|v| !s.contains(*v)) {
            let e = const_entry(m, at, next);
            if !e.is_zero() {
                total += go(m, s, next, j, left - 1, &w * e);
            }
        }
        total
    }
    go(m, s, i, j, k, Rational::one())
}

/// `det(M - x I)` at a rational point, by fraction-exact Gaussian elimination.
pub fn det_minus_at(m: &WMatrix, x: &Rational) -> Rational {
    let n = m.size();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = const_entry(m, i, j);
                    if i == j {
                        e - x
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            let f = &a[r][col] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}
