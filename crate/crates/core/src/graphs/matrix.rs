use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ConstMatrix, GraphError, VertexSet};
use crate::ratfun::{RationalFunction, Rational};

/// Square matrix over rational functions with one label per row/column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WMatrix {
    n: usize,
    entries: Vec<RationalFunction>,
    labels: Vec<String>,
}

pub(crate) fn check_labels(labels: &[String], n: usize) -> Result<(), GraphError> {
    let distinct: HashSet<&String> = labels.iter().collect();
    if labels.len() != n || distinct.len() != n {
        return Err(GraphError::BadLabels {
            expected: n,
            got: labels.to_vec(),
        });
    }
    Ok(())
}

impl WMatrix {
    pub fn zeros(n: usize) -> Self {
        WMatrix {
            n,
            entries: vec![RationalFunction::zero(); n * n],
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(GraphError::NotSquare {
                    rows: n,
                    row,
                    cols: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(WMatrix {
            n,
            entries,
            labels: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self, GraphError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| RationalFunction::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        check_labels(&labels, self.n)?;
        self.labels = labels;
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RationalFunction]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn entries(&self) -> impl Iterator<Item = &RationalFunction> {
        self.entries.iter()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.as_constant().is_some())
    }

    /// Principal submatrix on `keep` (sorted), carrying the kept labels.
    pub fn principal(&self, keep: &VertexSet) -> WMatrix {
        let idx = keep.indices();
        let k = idx.len();
        let mut entries = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        WMatrix {
            n: k,
            entries,
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Removes the rows and columns in `s`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<WMatrix, GraphError> {
        if let Some(&index) = s.indices().last() {
            if index >= self.n {
                return Err(GraphError::IndexOutOfRange { index, n: self.n });
            }
        }
        if s.len() == self.n {
            return Err(GraphError::DeletingAll);
        }
        Ok(self.principal(&s.complement(self.n)))
    }

    pub(crate) fn to_const(&self) -> Result<ConstMatrix, GraphError> {
        let data = self
            .entries
            .iter()
            .map(|e| e.as_constant().ok_or(GraphError::NonConstantEntries))
            .collect::<Result<Vec<Rational>, _>>()?;
        Ok(ConstMatrix::new(self.n, data))
    }

    /// Whether simultaneously permuting rows and columns by `perm` leaves the
    /// matrix unchanged (`M[i][j] == M[perm[i]][perm[j]]`).
    pub fn is_fixed_by(&self, perm: &[usize]) -> bool {
        perm.len() == self.n
            && (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == self.get(perm[i], perm[j])))
    }
}

impl fmt::Display for WMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let label_w = self.labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.n)
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain(std::iter::once(self.labels[j].chars().count()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        write!(f, "{:label_w$}", "")?;
        for (j, l) in self.labels.iter().enumerate() {
            write!(f, "  {:>w$}", l, w = widths[j])?;
        }
        writeln!(f)?;
        for (i, row) in cells.iter().enumerate() {
            write!(f, "{:>label_w$}", self.labels[i])?;
            for (j, c) in row.iter().enumerate() {
                write!(f, "  {:>w$}", c, w = widths[j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    labels: Vec<String>,
    entries: Vec<Vec<RationalFunction>>,
}

impl Serialize for WMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            labels: self.labels.clone(),
            entries: self.rows().map(<[RationalFunction]>::to_vec).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        WMatrix::from_rows(repr.entries)
            .and_then(|m| m.with_labels(repr.labels))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::parse_graph;

    #[test]
    fn delete_examples() {
        let k2 = WMatrix::from_integers(&[&[0, 1], &[1, 0]]).unwrap();
        let one = k2.delete_vertices(&VertexSet::new([1], 2).unwrap()).unwrap();
        assert_eq!(one, WMatrix::from_integers(&[&[0]]).unwrap());
        assert_eq!(
            k2.delete_vertices(&VertexSet::all(2)),
            Err(GraphError::DeletingAll)
        );

        let p3 = parse_graph("undirected 3\n0 1\n1 2").unwrap().adjacency();
        let ends = p3.delete_vertices(&VertexSet::new([1], 3).unwrap()).unwrap();
        assert!(ends.entries().all(RationalFunction::is_zero));
        assert_eq!(ends.labels(), &["0", "2"]);
    }

    #[test]
    fn delete_example4_keeps_loop_on_old_vertex_4() {
        let g = parse_graph("directed 5\n0 1\n0 2\n2 0\n0 3\n3 1\n1 1\n1 4\n4 4\n4 0").unwrap();
        let m = g.adjacency().delete_vertices(&VertexSet::new([0, 1], 5).unwrap()).unwrap();
        assert_eq!(m.labels(), &["2", "3", "4"]);
        let expect = WMatrix::from_integers(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]])
            .unwrap()
            .with_labels(vec!["2".into(), "3".into(), "4".into()])
            .unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn json_round_trip() {
        let m = WMatrix::from_rows(vec![
            vec![RationalFunction::one(), RationalFunction::lambda()],
            vec![RationalFunction::zero(), RationalFunction::from_integer(-3)],
        ])
        .unwrap();
        let js = serde_json::to_string(&m).unwrap();
        assert!(js.starts_with(r#"{"labels":["0","1"],"entries":[[{"num":["1"],"den":["1"]}"#));
        let back: WMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_bad_labels() {
        let m = WMatrix::zeros(2);
        assert!(m.clone().with_labels(vec!["a".into(), "a".into()]).is_err());
        assert!(m.with_labels(vec!["a".into()]).is_err());
    }
}
