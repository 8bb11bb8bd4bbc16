//! Plain-text facet and edge-list files.
//!
//! One entry per line, whitespace-separated non-negative integers. `#` starts
//! a comment; blank lines are skipped.

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

fn rows(text: &str) -> impl Iterator<Item = (usize, Result<Vec<Vertex>>)> + '_ {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let parsed = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("`{tok}` is not a non-negative integer"),
                })
            })
            .collect();
        Some((i + 1, parsed))
    })
}

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (line, row) in rows(text) {
        let row = row?;
        let mut sorted = row.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line,
                message: format!("vertex {} repeated", w[0]),
            });
        }
        facets.push(row);
    }
    SimplicialComplex::closure_of(facets)
}

pub fn parse_edges(text: &str) -> Result<Vec<(Vertex, Vertex)>> {
    rows(text)
        .map(|(line, row)| match row?.as_slice() {
            &[a, b] => Ok((a, b)),
            other => Err(Error::Parse {
                line,
                message: format!("expected 2 vertices, found {}", other.len()),
            }),
        })
        .collect()
}

/// Writes the maximal simplices, one per line, in canonical order.
pub fn write_facets(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for s in c.maximal_simplices() {
        let line: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
