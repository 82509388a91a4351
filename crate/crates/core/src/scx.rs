//! The `.scx` text format: a header line `m <ground_size>` followed by one
//! facet per line as space-separated 1-based vertex labels. `#` starts a
//! comment; blank lines are ignored. The writer emits facets sorted
//! lexicographically, so round-trips are canonical.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub fn parse_scx(text: &str) -> Result<SimplicialComplex> {
    let mut m: Option<usize> = None;
    let mut facets: Vec<VertexSet> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if m.is_none() {
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some("m"), Some(size), None) => {
                    let size: usize = size.parse().map_err(|_| {
                        Error::Parse(format!("line {}: bad ground size '{size}'", lineno + 1))
                    })?;
                    m = Some(size);
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected header 'm <ground_size>', got '{line}'",
                        lineno + 1
                    )))
                }
            }
            continue;
        }
        let m = m.unwrap();
        let mut verts = Vec::new();
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                Error::Parse(format!("line {}: bad vertex label '{tok}'", lineno + 1))
            })?;
            verts.push(v);
        }
        facets.push(VertexSet::from_slice(&verts, m).map_err(|e| {
            Error::Parse(format!("line {}: {e}", lineno + 1))
        })?);
    }
    let m = m.ok_or_else(|| Error::Parse("missing 'm <ground_size>' header".into()))?;
    SimplicialComplex::from_facets(m, facets)
}

pub fn write_scx(k: &SimplicialComplex) -> String {
    let mut out = format!("m {}\n", k.ground_size());
    // facets are already stored in lexicographic order
    for f in k.facets() {
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
