//! Graph-side reduction by enumerating branches through the complement of a
//! base set.

use crate::graphs::{VertexSet, WGraph};
use crate::ratfun::RationalFunction;

use super::{check_in_w, check_subset, ReduceError, ReducedMatrix};

/// A path (or cycle, when the ends coincide) from `S` to `S` whose interior
/// vertices all lie outside `S`, together with its branch product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub vertices: Vec<usize>,
    pub product: RationalFunction,
}

impl Branch {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("branches are nonempty")
    }

    /// Recomputes `ω(v₀v₁) · Π ω(vᵢvᵢ₊₁)/(λ - ω(vᵢvᵢ))` over interior `vᵢ`
    /// from the graph's edge weights.
    pub fn recompute_product(&self, g: &WGraph) -> RationalFunction {
        let weight = |u: usize, v: usize| g.weight(u, v).cloned().unwrap_or_else(RationalFunction::zero);
        let v = &self.vertices;
        let mut product = weight(v[0], v[1]);
        for i in 1..v.len() - 1 {
            product = &product * &weight(v[i], v[i + 1]);
            product = &product * &interior_factor(g, v[i]);
        }
        product
    }
}

/// `1/(λ - ω(v,v))`.
fn interior_factor(g: &WGraph, v: usize) -> RationalFunction {
    let loop_w = g.weight(v, v).cloned().unwrap_or_else(RationalFunction::zero);
    (&RationalFunction::lambda() - &loop_w)
        .inv()
        .expect("λ minus a 𝕎 element is nonzero")
}

/// All branches of `g` with respect to `s`, ordered by start vertex and then
/// by depth-first discovery.
///
/// Interior vertices are distinct, so enumeration terminates on any graph;
/// the sum of branch products equals the reduction only when `s` is a base set.
pub fn branches(g: &WGraph, s: &VertexSet) -> Result<Vec<Branch>, ReduceError> {
    check_in_w(&g.adjacency())?;
    let inside: Vec<bool> = (0..g.n()).map(|v| s.contains(v)).collect();
    let factors: Vec<Option<RationalFunction>> = (0..g.n())
        .map(|v| (!inside[v]).then(|| interior_factor(g, v)))
        .collect();
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    for &start in s.indices() {
        let mut path = vec![start];
        extend(g, &inside, &factors, &mut on_path, &mut path, RationalFunction::one(), &mut out);
    }
    Ok(out)
}

fn extend(
    g: &WGraph,
    inside: &[bool],
    factors: &[Option<RationalFunction>],
    on_path: &mut [bool],
    path: &mut Vec<usize>,
    acc: RationalFunction,
    out: &mut Vec<Branch>,
) {
    let last = *path.last().expect("nonempty path");
    let is_start = path.len() == 1;
    // Interior vertices contribute 1/(λ - loop); loops are not traversal steps.
    let acc = match &factors[last] {
        Some(f) if !is_start => &acc * f,
        _ => acc,
    };
    for (next, w) in g.out_neighbors(last) {
        if next == last && !is_start {
            continue;
        }
        let product = &acc * w;
        if inside[next] {
            let mut vertices = path.clone();
            vertices.push(next);
            out.push(Branch { vertices, product });
        } else if !on_path[next] {
            on_path[next] = true;
            path.push(next);
            extend(g, inside, factors, on_path, path, product, out);
            path.pop();
            on_path[next] = false;
        }
    }
}

/// Isospectral reduction of `g` over the base set `s` by summing branch
/// products.
pub fn branch_reduce(g: &WGraph, s: &VertexSet) -> Result<ReducedMatrix, ReduceError> {
    let adjacency = g.adjacency();
    check_subset(&adjacency, s)?;
    if !g.is_base_set(s)? {
        return Err(ReduceError::NotABaseSet);
    }
    let mut base = adjacency.principal(s);
    for row in 0..base.size() {
        for col in 0..base.size() {
            base.set(row, col, RationalFunction::zero());
        }
    }
    for b in branches(g, s)? {
        let i = s.position(b.start()).expect("branch starts in S");
        let j = s.position(b.end()).expect("branch ends in S");
        let sum = base.get(i, j) + &b.product;
        base.set(i, j, sum);
    }
    Ok(ReducedMatrix {
        base,
        kept: s.clone(),
        source_n: g.n(),
    })
}
