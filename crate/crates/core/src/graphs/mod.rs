//! Weighted digraphs, their adjacency matrices, and vertex subsets.

mod charpoly;
mod matrix;
mod parse;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ratfun::RationalFunction;

pub use charpoly::charpoly;
pub(crate) use charpoly::ConstMatrix;
pub use matrix::WMatrix;
pub use parse::parse_graph;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("cannot delete every vertex")]
    DeletingAll,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("matrix has non-constant entries")]
    NonConstantEntries,
    #[error("matrix is not square ({rows} rows, row {row} has {cols} entries)")]
    NotSquare { rows: usize, row: usize, cols: usize },
    #[error("expected {expected} distinct labels, got {got:?}")]
    BadLabels { expected: usize, got: Vec<String> },
    #[error("undirected graph requires a symmetric matrix")]
    Asymmetric,
}

/// Sorted set of distinct vertex indices drawn from `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    indices: Vec<usize>,
}

impl VertexSet {
    pub fn new(indices: impl IntoIterator<Item = usize>, n: usize) -> Result<Self, GraphError> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        for w in indices.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&index) = indices.last() {
            if index >= n {
                return Err(GraphError::IndexOutOfRange { index, n });
            }
        }
        Ok(VertexSet { indices })
    }

    pub fn all(n: usize) -> Self {
        VertexSet {
            indices: (0..n).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.indices.binary_search(&v).is_ok()
    }

    /// Position of `v` within the sorted set.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.indices.binary_search(&v).ok()
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet {
            indices: (0..n).filter(|v| !self.contains(*v)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.indices.iter().all(|&v| other.contains(v))
    }
}

/// Weighted graph on vertices `0..n`. Undirected graphs store both arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WGraph {
    n: usize,
    directed: bool,
    edges: BTreeMap<(usize, usize), RationalFunction>,
    labels: Vec<String>,
}

impl WGraph {
    pub fn new(n: usize, directed: bool) -> Self {
        WGraph {
            n,
            directed,
            edges: BTreeMap::new(),
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    /// Adds the arc `u -> v` (and `v -> u` if undirected). Zero weights are
    /// not stored.
    pub fn add_edge(&mut self, u: usize, v: usize, w: RationalFunction) -> Result<(), GraphError> {
        for index in [u, v] {
            if index >= self.n {
                return Err(GraphError::IndexOutOfRange { index, n: self.n });
            }
        }
        if self.edges.contains_key(&(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        if !self.directed && self.edges.contains_key(&(v, u)) {
            return Err(GraphError::DuplicateEdge(v, u));
        }
        if w.is_zero() {
            return Ok(());
        }
        if !self.directed && u != v {
            self.edges.insert((v, u), w.clone());
        }
        self.edges.insert((u, v), w);
        Ok(())
    }

    /// The graph of a matrix. `directed = false` requires symmetry.
    pub fn from_matrix(m: &WMatrix, directed: bool) -> Result<Self, GraphError> {
        if !directed && !m.is_symmetric() {
            return Err(GraphError::Asymmetric);
        }
        let n = m.size();
        let mut edges = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let w = m.get(i, j);
                if !w.is_zero() {
                    edges.insert((i, j), w.clone());
                }
            }
        }
        Ok(WGraph {
            n,
            directed,
            edges,
            labels: m.labels().to_vec(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        matrix::check_labels(&labels, self.n)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<&RationalFunction> {
        self.edges.get(&(u, v))
    }

    /// Stored arcs `(u, v, w)` in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, &RationalFunction)> {
        self.edges.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = (usize, &RationalFunction)> {
        self.edges
            .range((u, 0)..(u + 1, 0))
            .map(|(&(_, v), w)| (v, w))
    }

    pub fn adjacency(&self) -> WMatrix {
        let mut m = WMatrix::zeros(self.n);
        for (&(u, v), w) in &self.edges {
            m.set(u, v, w.clone());
        }
        m.with_labels(self.labels.clone())
            .expect("graph labels are validated")
    }

    /// True iff every non-loop cycle meets `s`, i.e. the subgraph induced on
    /// the complement is acyclic once loops are ignored.
    pub fn is_base_set(&self, s: &VertexSet) -> Result<bool, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let outside: Vec<bool> = (0..self.n).map(|v| !s.contains(v)).collect();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.n];
        for start in (0..self.n).filter(|&v| outside[v]) {
            if state[start] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, Vec<usize>)> = vec![(start, self.next_outside(start, &outside))];
            state[start] = 1;
            while let Some((v, succ)) = stack.last_mut() {
                match succ.pop() {
                    Some(w) => match state[w] {
                        0 => {
                            state[w] = 1;
                            let next = self.next_outside(w, &outside);
                            stack.push((w, next));
                        }
                        1 => return Ok(false),
                        _ => {}
                    },
                    None => {
                        state[*v] = 2;
                        stack.pop();
                    }
                }
            }
        }
        Ok(true)
    }

    fn next_outside(&self, v: usize, outside: &[bool]) -> Vec<usize> {
        self.out_neighbors(v)
            .map(|(w, _)| w)
            .filter(|&w| w != v && outside[w])
            .collect()
    }

    /// Edge-list text accepted by [`parse_graph`]. Requires constant weights.
    pub fn to_text(&self) -> Result<String, GraphError> {
        let mut out = format!(
            "{} {}\n",
            if self.directed { "directed" } else { "undirected" },
            self.n
        );
        for (&(u, v), w) in &self.edges {
            if !self.directed && v < u {
                continue;
            }
            let c = w.as_constant().ok_or(GraphError::NonConstantEntries)?;
            if c == num_traits::One::one() {
                out.push_str(&format!("{u} {v}\n"));
            } else {
                out.push_str(&format!("{u} {v} {c}\n"));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example4() -> WGraph {
        parse_graph("directed 5\n0 1\n0 2\n2 0\n0 3\n3 1\n1 1\n1 4\n4 4\n4 0").unwrap()
    }

    #[test]
    fn base_sets_of_example4() {
        let g = example4();
        assert!(g.is_base_set(&VertexSet::new([0, 1], 5).unwrap()).unwrap());
        assert!(!g.is_base_set(&VertexSet::new([1, 3, 4], 5).unwrap()).unwrap());
        for v in 0..5 {
            let s = VertexSet::new((0..5).filter(|&u| u != v), 5).unwrap();
            assert!(g.is_base_set(&s).unwrap());
        }
        assert_eq!(
            g.is_base_set(&VertexSet::new([], 5).unwrap()),
            Err(GraphError::EmptySet)
        );
    }

    #[test]
    fn undirected_edge_outside_is_a_cycle() {
        let p3 = parse_graph("undirected 3\n0 1\n1 2").unwrap();
        assert!(!p3.is_base_set(&VertexSet::new([0], 3).unwrap()).unwrap());
        assert!(p3.is_base_set(&VertexSet::new([1], 3).unwrap()).unwrap());
    }

    #[test]
    fn vertex_set_validation() {
        assert_eq!(VertexSet::new([1, 1], 3), Err(GraphError::DuplicateVertex(1)));
        assert_eq!(
            VertexSet::new([3], 3),
            Err(GraphError::IndexOutOfRange { index: 3, n: 3 })
        );
        let s = VertexSet::new([2, 0], 4).unwrap();
        assert_eq!(s.indices(), &[0, 2]);
        assert_eq!(s.complement(4).indices(), &[1, 3]);
        assert_eq!(s.position(2), Some(1));
    }

    #[test]
    fn text_round_trip() {
        let src = "undirected 3\n0 1 3/2\n1 2\n2 2 -1\n";
        let g = parse_graph(src).unwrap();
        assert_eq!(g.to_text().unwrap(), src);
        assert_eq!(parse_graph(&g.to_text().unwrap()).unwrap(), g);
    }
}
