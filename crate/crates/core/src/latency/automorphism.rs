//! Backtracking search for a weight-preserving vertex permutation.

use std::collections::{BTreeMap, VecDeque};

use crate::graphs::WMatrix;
use crate::ratfun::RationalFunction;

/// Per-vertex invariant: loop weight plus the sorted multisets of nonzero
/// off-diagonal row and column entries. Automorphisms preserve it.
fn signatures(m: &WMatrix) -> Vec<usize> {
    type Sig<'a> = (&'a RationalFunction, Vec<&'a RationalFunction>, Vec<&'a RationalFunction>);
    let n = m.size();
    let sigs: Vec<Sig> = (0..n)
        .map(|v| {
            let mut out: Vec<_> = (0..n).filter(|&u| u != v).map(|u| m.get(v, u)).filter(|w| !w.is_zero()).collect();
            let mut inc: Vec<_> = (0..n).filter(|&u| u != v).map(|u| m.get(u, v)).filter(|w| !w.is_zero()).collect();
            out.sort();
            inc.sort();
            (m.get(v, v), out, inc)
        })
        .collect();
    let mut ids = BTreeMap::new();
    sigs.iter()
        .map(|s| {
            let next = ids.len();
            *ids.entry(s.clone()).or_insert(next)
        })
        .collect()
}

/// Visit order: breadth-first from `start` over the undirected support, so
/// each newly placed vertex is constrained by already placed neighbours.
fn search_order(m: &WMatrix, start: usize) -> Vec<usize> {
    let n = m.size();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in std::iter::once(start).chain(0..n) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in 0..n {
                if !seen[u] && (!m.get(v, u).is_zero() || !m.get(u, v).is_zero()) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

/// Finds a permutation `φ` with `φ(a) = b` and `M[i][j] = M[φ(i)][φ(j)]` for
/// all `i, j`, if one exists.
pub fn find_automorphism_mapping(m: &WMatrix, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = m.size();
    if a >= n || b >= n {
        return None;
    }
    let sig = signatures(m);
    if sig[a] != sig[b] {
        return None;
    }
    let order = search_order(m, a);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !consistent(m, &image, a, b) {
        return None;
    }
    image[a] = b;
    used[b] = true;
    if extend(m, &sig, &order, 1, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn consistent(m: &WMatrix, image: &[usize], v: usize, w: usize) -> bool {
    if m.get(v, v) != m.get(w, w) {
        return false;
    }
    image.iter().enumerate().all(|(u, &x)| {
        x == usize::MAX || (m.get(v, u) == m.get(w, x) && m.get(u, v) == m.get(x, w))
    })
}

fn extend(
    m: &WMatrix,
    sig: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..m.size() {
        if used[w] || sig[w] != sig[v] || !consistent(m, image, v, w) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(m, sig, order, depth + 1, image, used) {
            return true;
        }
        image[v] = usize::MAX;
        used[w] = false;
    }
    false
}

/// Whether some automorphism of the weighted matrix maps `a` to `b`
/// (equivalently, `a` and `b` lie in one orbit). Out-of-range vertices give
/// `false`.
pub fn has_swap_automorphism(m: &WMatrix, a: usize, b: usize) -> bool {
    find_automorphism_mapping(m, a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::parse_graph;
    use crate::ratfun::Polynomial;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_integers(n), Polynomial::from_integers(d)).unwrap()
    }

    #[test]
    fn reduced_square_with_chord() {
        // 4-cycle 0-1-2-3 with chord 1-3; loops 2/λ everywhere, edges 1/λ.
        let loop_w = rf(&[2], &[0, 1]);
        let edge = rf(&[1], &[0, 1]);
        let mut m = WMatrix::zeros(4);
        for v in 0..4 {
            m.set(v, v, loop_w.clone());
        }
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)] {
            m.set(u, v, edge.clone());
            m.set(v, u, edge.clone());
        }
        assert!(has_swap_automorphism(&m, 0, 2));
        assert!(has_swap_automorphism(&m, 1, 3));
        assert!(!has_swap_automorphism(&m, 0, 1));
        let phi = find_automorphism_mapping(&m, 0, 2).unwrap();
        assert!(m.is_fixed_by(&phi));
    }

    #[test]
    fn two_by_two() {
        let h = rf(&[1], &[0, 1]);
        let f = rf(&[1], &[-1, 1]);
        let g = rf(&[3], &[-1, 1]);
        let sym = WMatrix::from_rows(vec![vec![h.clone(), f.clone()], vec![f.clone(), h.clone()]]).unwrap();
        assert!(has_swap_automorphism(&sym, 0, 1));
        let asym = WMatrix::from_rows(vec![vec![h.clone(), f], vec![g, h]]).unwrap();
        assert!(!has_swap_automorphism(&asym, 0, 1));
    }

    #[test]
    fn p3_mirror() {
        let p3 = parse_graph("undirected 3\n0 1\n1 2").unwrap().adjacency();
        assert!(has_swap_automorphism(&p3, 0, 2));
        assert!(!has_swap_automorphism(&p3, 0, 1));
        assert!(!has_swap_automorphism(&p3, 0, 5));
    }

    #[test]
    fn directed_cycle_orbit_without_swap() {
        // Rotation maps 0 to 1, but no automorphism swaps them.
        let c3 = parse_graph("directed 3\n0 1\n1 2\n2 0").unwrap().adjacency();
        assert!(has_swap_automorphism(&c3, 0, 1));
        assert_eq!(find_automorphism_mapping(&c3, 0, 1), Some(vec![1, 2, 0]));
    }
}
