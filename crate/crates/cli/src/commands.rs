use std::fmt::Write as _;
use std::path::Path;

use isored_core::cospec::{are_cospectral, are_strongly_cospectral, NumericSpectral};
use isored_core::graphs::{charpoly as charpoly_of, parse_graph, VertexSet, WGraph, WMatrix};
use isored_core::latency::measure_of_latency;
use isored_core::reduce::{branch_reduce, schur_reduce};
use isored_core::unpack::{plan_2x2, unpack_2x2, verify_roundtrip};
use isored_core::walks::walk_table;
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::Method;

fn load_graph(path: &Path) -> Result<WGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn check_vertices(g: &WGraph, vs: &[usize]) -> Result<(), CliError> {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(CliError::Input(format!("vertex {v} out of range for {} vertices", g.n()))),
        None => Ok(()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn braces(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn reduce(path: &Path, keep: &[usize], method: Method, json: bool) -> Result<String, CliError> {
    let g = load_graph(path)?;
    check_vertices(&g, keep)?;
    let s = VertexSet::new(keep.iter().copied(), g.n())?;
    let schur = match method {
        Method::Branch => None,
        _ => Some(schur_reduce(&g.adjacency(), &s)?),
    };
    let branch = match method {
        Method::Schur => None,
        _ => Some(branch_reduce(&g, &s)?),
    };
    if let (Some(x), Some(y)) = (&schur, &branch) {
        if x != y {
            return Err(CliError::Internal("Schur and branch reductions differ".into()));
        }
    }
    if json {
        return match (schur, branch) {
            (Some(x), Some(y)) => to_json(&json!({ "agree": true, "schur": x, "branch": y })),
            (Some(r), None) | (None, Some(r)) => to_json(&r),
            (None, None) => unreachable!("at least one method runs"),
        };
    }
    let mut out = format!("reduction over {}:\n", braces(s.indices()));
    let r = schur.as_ref().or(branch.as_ref()).expect("at least one method runs");
    write!(out, "{}", r.base()).unwrap();
    if method == Method::Both {
        out.push_str("schur and branch reductions agree\n");
    }
    Ok(out)
}

pub fn cospectral(
    path: &Path,
    a: usize,
    b: usize,
    strong: bool,
    numeric_tol: Option<f64>,
    json: bool,
) -> Result<String, CliError> {
    let g = load_graph(path)?;
    check_vertices(&g, &[a, b])?;
    let m = g.adjacency();
    let report = if strong {
        are_strongly_cospectral(&m, a, b)?
    } else {
        are_cospectral(&m, a, b)?
    };
    let numeric = match numeric_tol {
        Some(tol) => Some(NumericSpectral::new(&m, tol)?),
        None => None,
    };
    let numeric_strong = numeric.as_ref().map(|n| n.strongly_cospectral(a, b));
    if json {
        let mut v = serde_json::to_value(&report)?;
        if let Some(n) = &numeric {
            v["numeric"] = json!({
                "strongly": numeric_strong,
                "tolerance": n.tol,
                "well_conditioned": n.well_conditioned,
                "projector_diagonals_match": n.projector_diagonals_match(a, b),
            });
        }
        return to_json(&v);
    }
    let mut out = format!("cospectral: {}\n", report.cospectral);
    let (pa, pb) = &report.deleted_charpolys;
    writeln!(out, "p(M\\{a}) = {pa}").unwrap();
    writeln!(out, "p(M\\{b}) = {pb}").unwrap();
    writeln!(out, "reduction over {}:", braces(&[a.min(b), a.max(b)])).unwrap();
    write!(out, "{}", report.reduction.base()).unwrap();
    if let (Some(s), Some(w)) = (report.strongly, &report.squarefree_witness) {
        writeln!(out, "strongly: {s}").unwrap();
        writeln!(out, "numerator of det(R - λI): {w}").unwrap();
    }
    if let (Some(n), Some(s)) = (&numeric, numeric_strong) {
        let note = if n.well_conditioned { "" } else { " (eigenvalue grouping ambiguous)" };
        writeln!(out, "numeric strongly: {s} at tolerance {:e}{note}", n.tol).unwrap();
    }
    Ok(out)
}

pub fn latency(path: &Path, a: usize, b: usize, max_n: usize, json: bool) -> Result<String, CliError> {
    let g = load_graph(path)?;
    check_vertices(&g, &[a, b])?;
    if g.n() > max_n {
        return Err(CliError::Precondition(format!(
            "graph has {} vertices, above --max-n {max_n}",
            g.n()
        )));
    }
    if a == b {
        return Err(CliError::Precondition(format!("vertices must be distinct (got {a} twice)")));
    }
    let report = measure_of_latency(&g, a, b)?;
    if json {
        return to_json(&report);
    }
    let mut out = format!("measure: {}\n", report.measure);
    writeln!(out, "witness: {}", braces(&report.witness)).unwrap();
    writeln!(out, "persists at pair: {}", report.persists_at_pair).unwrap();
    for level in &report.levels_searched {
        writeln!(
            out,
            "  |T| = {}: {} of {} sets symmetric",
            level.size, level.symmetric, level.examined
        )
        .unwrap();
    }
    Ok(out)
}

pub fn unpack(path: &Path, out_path: Option<&Path>, json: bool) -> Result<String, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let r: WMatrix = serde_json::from_str(&text)?;
    let plan = plan_2x2(&r)?;
    let g = unpack_2x2(&r)?;
    if !verify_roundtrip(&g, &r) {
        return Err(CliError::Internal("unpacked graph does not reduce to the input".into()));
    }
    let graph_text = g.to_text()?;
    if let Some(p) = out_path {
        std::fs::write(p, &graph_text)?;
    }
    if json {
        return to_json(&json!({ "n": g.n(), "roundtrip": true, "plan": plan, "graph": graph_text }));
    }
    Ok(match out_path {
        Some(p) => format!("wrote {}-vertex graph to {}\n", g.n(), p.display()),
        None => graph_text,
    })
}

pub fn walks(path: &Path, a: usize, k: usize, json: bool) -> Result<String, CliError> {
    let g = load_graph(path)?;
    check_vertices(&g, &[a])?;
    let table = walk_table(&g.adjacency(), a, k)?;
    if json {
        return to_json(&table);
    }
    let list = |v: &[isored_core::Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    Ok(format!(
        "closed walks at {a}, lengths 0..={k}: [{}]\nnon-returning walks, lengths 1..={k}: [{}]\n",
        list(&table.closed),
        list(&table.nonreturning)
    ))
}

pub fn charpoly(path: &Path, delete: &[usize], json: bool) -> Result<String, CliError> {
    let g = load_graph(path)?;
    check_vertices(&g, delete)?;
    let mut m = g.adjacency();
    if !delete.is_empty() {
        m = m.delete_vertices(&VertexSet::new(delete.iter().copied(), g.n())?)?;
    }
    let p = charpoly_of(&m)?;
    if json {
        return to_json(&json!({
            "convention": "det(M - λI)",
            "deleted": delete,
            "coefficients": p,
            "text": p.to_string(),
        }));
    }
    Ok(format!("# p(λ) = det(M - λI)\n{p}\n"))
}
