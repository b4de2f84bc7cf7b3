//! Frozen reference values, computed independently with a computer algebra
//! system, plus brute-force enumerations cross-checked against the library.

mod common;

use common::{brute_closed_walks, brute_nonreturning, det_minus_at, int};
use isored_core::cospec::{are_cospectral, are_strongly_cospectral};
use isored_core::graphs::{charpoly, parse_graph, VertexSet, WGraph, WMatrix};
use isored_core::latency::measure_of_latency;
use isored_core::ratfun::{Polynomial, Rational, RationalFunction};
use isored_core::reduce::{branch_reduce, schur_reduce};
use isored_core::walks::{closed_walk_counts, nonreturning_counts};

fn fixture(name: &str) -> WGraph {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_graph(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_integers(c)
}

fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::new(poly(n), poly(d)).unwrap()
}

fn pair_reduction(g: &WGraph, a: usize, b: usize) -> WMatrix {
    schur_reduce(&g.adjacency(), &VertexSet::new([a, b], g.n()).unwrap())
        .unwrap()
        .into_base()
}

fn symmetric_2x2(diag: RationalFunction, off: RationalFunction) -> Vec<RationalFunction> {
    vec![diag.clone(), off.clone(), off, diag]
}

fn entries(m: &WMatrix) -> Vec<RationalFunction> {
    m.entries().cloned().collect()
}

#[test]
fn fig1_frozen() {
    let g = fixture("fig1.g");
    assert_eq!(charpoly(&g.adjacency()).unwrap(), poly(&[-3, -14, -12, 18, 23, -4, -9, 0, 1]));
    let rep = are_cospectral(&g.adjacency(), 2, 4).unwrap();
    assert_eq!(rep.deleted_charpolys.0, poly(&[2, 4, -4, -9, 2, 6, 0, -1]));
    assert_eq!(
        entries(&pair_reduction(&g, 2, 4)),
        symmetric_2x2(rf(&[2, 3], &[-1, 0, 1]), rf(&[1], &[-1, 1]))
    );
}

#[test]
fn fig2_left_frozen() {
    let g = fixture("fig2_left.g");
    assert_eq!(charpoly(&g.adjacency()).unwrap(), poly(&[0, -4, 0, 17, 0, -20, 0, 8, 0, -1]));
    let rep = are_cospectral(&g.adjacency(), 3, 6).unwrap();
    assert!(rep.cospectral);
    assert_eq!(rep.deleted_charpolys.1, poly(&[0, 0, -4, 0, 10, 0, -6, 0, 1]));
    assert_eq!(
        entries(&pair_reduction(&g, 3, 6)),
        symmetric_2x2(rf(&[-2, 0, 2], &[0, -2, 0, 1]), rf(&[1], &[-2, 0, 1]))
    );
}

#[test]
fn fig2_right_frozen() {
    let g = fixture("fig2_right.g");
    let rep = are_strongly_cospectral(&g.adjacency(), 1, 8).unwrap();
    assert!(rep.cospectral);
    assert_eq!(rep.deleted_charpolys.0, poly(&[1, -4, -15, 6, 22, -2, -9, 0, 1]));
    // (λ + 1)² divides the numerator of det(R - λI).
    assert_eq!(rep.strongly, Some(false));
    let den = poly(&[0, 4, 6, -6, -6, 1, 1]);
    assert_eq!(
        entries(&pair_reduction(&g, 1, 8)),
        symmetric_2x2(
            RationalFunction::new(poly(&[1, -3, -14, -6, 4, 2]), den.clone()).unwrap(),
            RationalFunction::new(poly(&[1, 5, 6, 2]), den).unwrap()
        )
    );
}

#[test]
fn fig7_frozen() {
    let g = fixture("fig7.g");
    assert_eq!(charpoly(&g.adjacency()).unwrap(), poly(&[4, 0, -16, 0, 19, 0, -8, 0, 1]));
    let rep = are_strongly_cospectral(&g.adjacency(), 3, 6).unwrap();
    assert_eq!(rep.strongly, Some(true));
    let expected_witness = &poly(&[-2, 0, 1]) * &poly(&[2, 0, -5, 0, 1]);
    assert_eq!(rep.squarefree_witness.unwrap().monic(), expected_witness);
    assert_eq!(
        entries(&pair_reduction(&g, 3, 6)),
        symmetric_2x2(rf(&[-4, 0, 2], &[0, -3, 0, 1]), rf(&[2], &[0, -3, 0, 1]))
    );
    let walks = closed_walk_counts(&g.adjacency(), 3, 8).unwrap();
    let expected: Vec<Rational> = [1, 0, 2, 0, 6, 0, 22, 0, 90].iter().map(|&x| int(x)).collect();
    assert_eq!(walks, expected);
}

#[test]
fn latency_values() {
    let two_thirds = Rational::new(2.into(), 3.into());
    let r = measure_of_latency(&fixture("fig7.g"), 3, 6).unwrap();
    assert_eq!((r.measure, r.witness.len()), (two_thirds, 4));
    for (name, a, b) in [("fig1.g", 2, 4), ("fig2_left.g", 3, 6)] {
        let r = measure_of_latency(&fixture(name), a, b).unwrap();
        assert_eq!(r.measure, int(1), "{name}");
        assert_eq!(r.witness, vec![a, b]);
    }
    // Exhaustive search over all 5-subsets containing the pair, done
    // independently, finds T = {1, 3, 6, 7, 8} whose reduction has an
    // automorphism exchanging 1 and 8, and no symmetric 6-subset.
    let r = measure_of_latency(&fixture("fig2_right.g"), 1, 8).unwrap();
    assert_eq!(r.measure, Rational::new(4.into(), 7.into()));
    assert_eq!(r.witness, vec![1, 3, 6, 7, 8]);
    assert_eq!(measure_of_latency(&fixture("c4.g"), 0, 2).unwrap().measure, int(0));
}

#[test]
fn fig6_both_graphs_reduce_identically() {
    let star = fixture("fig6_star.g");
    let hex = fixture("fig6_hexagon.g");
    let rs = schur_reduce(&star.adjacency(), &VertexSet::new([1, 2, 3], 7).unwrap()).unwrap();
    let rh = schur_reduce(&hex.adjacency(), &VertexSet::new([0, 2, 4], 6).unwrap()).unwrap();
    let loop_w = rf(&[2], &[0, 1]);
    let edge = rf(&[1], &[0, 1]);
    for i in 0..3 {
        for j in 0..3 {
            let want = if i == j { &loop_w } else { &edge };
            assert_eq!(rs.get(i, j), want);
            assert_eq!(rh.get(i, j), want);
        }
    }
    let bs = branch_reduce(&star, &VertexSet::new([1, 2, 3], 7).unwrap()).unwrap();
    assert_eq!(bs.base().entries().collect::<Vec<_>>(), rs.base().entries().collect::<Vec<_>>());
}

#[test]
fn charpoly_matches_pointwise_determinant() {
    for name in ["ex3.g", "fig1.g", "fig2_left.g", "fig2_right.g", "fig7.g", "c4.g"] {
        let m = fixture(name).adjacency();
        let p = charpoly(&m).unwrap();
        for x in [-3, -1, 0, 2, 5] {
            let x = int(x);
            assert_eq!(p.eval(&x), det_minus_at(&m, &x), "{name} at {x}");
        }
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(p.eval(&half), det_minus_at(&m, &half));
    }
}

#[test]
fn walk_counts_match_enumeration() {
    for name in ["ex3.g", "fig7.g", "p3.g"] {
        let m = fixture(name).adjacency();
        for a in 0..m.size() {
            assert_eq!(closed_walk_counts(&m, a, 6).unwrap(), brute_closed_walks(&m, a, 6), "{name} {a}");
        }
    }
    let m = fixture("ex3.g").adjacency();
    let s = VertexSet::new([0, 1], 5).unwrap();
    let series = nonreturning_counts(&m, &s, 7).unwrap();
    for k in 1..=7 {
        for (i, &u) in s.indices().iter().enumerate() {
            for (j, &v) in s.indices().iter().enumerate() {
                assert_eq!(series.entry(k, i, j), &brute_nonreturning(&m, &s, u, v, k));
            }
        }
    }
}
