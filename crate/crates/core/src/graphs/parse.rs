use super::{GraphError, WGraph};
use crate::ratfun::{parse_rational, RationalFunction};

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// directed 5        # or: undirected n
/// 0 1               # arc/edge with weight 1
/// 1 1 -3/2          # loop with a rational weight
/// ```
///
/// Undirected files list each edge once.
pub fn parse_graph(text: &str) -> Result<WGraph, GraphError> {
    let mut graph: Option<WGraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(g) = graph.as_mut() else {
            let directed = match fields[0] {
                "directed" => true,
                "undirected" => false,
                other => return Err(err(format!("expected `directed` or `undirected`, found `{other}`"))),
            };
            let [_, n] = fields[..] else {
                return Err(err("header must be `directed n` or `undirected n`".into()));
            };
            let n: usize = n.parse().map_err(|_| err(format!("bad vertex count `{n}`")))?;
            graph = Some(WGraph::new(n, directed));
            continue;
        };
        if !(2..=3).contains(&fields.len()) {
            return Err(err(format!("expected `u v [w]`, found `{line}`")));
        }
        let vertex = |s: &str| -> Result<usize, GraphError> {
            s.parse().map_err(|_| err(format!("bad vertex `{s}`")))
        };
        let u = vertex(fields[0])?;
        let v = vertex(fields[1])?;
        let w = match fields.get(2) {
            Some(s) => parse_rational(s).map_err(|e| err(e.to_string()))?,
            None => num_traits::One::one(),
        };
        g.add_edge(u, v, RationalFunction::constant(w))?;
    }
    graph.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        msg: "missing header line".into(),
    })
}
