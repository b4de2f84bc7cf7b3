//! Deterministic benchmark inputs.

use isored_core::graphs::{parse_graph, VertexSet, WGraph, WMatrix};
use isored_core::ratfun::RationalFunction;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random weighted graph with entries in `[-2, 2]`, reproducible from `seed`.
pub fn random_graph(n: usize, directed: bool, density: f64, seed: u64) -> WGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = WMatrix::zeros(n);
    for i in 0..n {
        for j in if directed { 0 } else { i }..n {
            if i == j || !rng.gen_bool(density) {
                continue;
            }
            let w = RationalFunction::from_integer([-2, -1, 1, 2][rng.gen_range(0..4)]);
            m.set(i, j, w.clone());
            if !directed {
                m.set(j, i, w);
            }
        }
    }
    WGraph::from_matrix(&m, directed).expect("symmetric by construction")
}

/// The vertex set `{0, .., k-1}`.
pub fn first(k: usize, n: usize) -> VertexSet {
    VertexSet::new(0..k.min(n), n).expect("indices in range")
}

/// Path `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> WGraph {
    let mut text = format!("undirected {n}\n");
    for v in 1..n {
        text.push_str(&format!("{} {v}\n", v - 1));
    }
    parse_graph(&text).expect("well-formed")
}

/// Cycle `0..n` with a pendant path of length `tail` hanging off vertex 0.
pub fn cycle_with_tail(n: usize, tail: usize) -> WGraph {
    let mut text = format!("undirected {}\n", n + tail);
    for v in 0..n {
        text.push_str(&format!("{v} {}\n", (v + 1) % n));
    }
    let mut prev = 0;
    for t in n..n + tail {
        text.push_str(&format!("{prev} {t}\n"));
        prev = t;
    }
    parse_graph(&text).expect("well-formed")
}
