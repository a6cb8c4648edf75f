//! Text formats: the edge-list interchange format and coloring files.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertex
//! indices. Repeated lines are parallel edges; `#` starts a comment that runs
//! to the end of the line; blank lines are ignored. The writer emits edges
//! sorted by `(min endpoint, max endpoint)`, which is also edge id order.
//!
//! Coloring file: a header `hcol <source digest> <target digest>`, then one
//! line `g_edge h_edge` per source edge. Digests are hex SHA-256 of the two
//! graphs' edge-list encodings.

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{EdgeId, GraphError, Multigraph};
use crate::hcoloring::{HColorError, HColoring};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] HColorError),
    #[error("coloring file was written for {which} graph {expected}, got {actual}")]
    DigestMismatch {
        which: &'static str,
        expected: String,
        actual: String,
    },
    #[error("cannot read {path}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize), FormatError> {
    let mut parts = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let tok = parts
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("invalid {what} {tok:?}")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if parts.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two values"));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Loops are rejected; degrees are not checked.
pub fn parse_edge_list(text: &str) -> Result<Multigraph, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let (n, m) = two_numbers(hl, header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = hl;
    for (line_no, line) in lines {
        if pairs.len() == m {
            return Err(parse_err(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        let (u, v) = two_numbers(line_no, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(parse_err(
                    line_no,
                    format!("vertex {w} out of range for n = {n}"),
                ));
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge {
                edge: pairs.len(),
                vertex: u,
            }
            .into());
        }
        pairs.push((u, v));
        last_line = line_no;
    }
    if pairs.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges, found {}", pairs.len()),
        ));
    }
    Ok(Multigraph::new(n, &pairs)?)
}

/// Reads a graph file, optionally requiring every degree to be 3.
pub fn parse_graph_file(
    path: impl AsRef<Path>,
    require_cubic: bool,
) -> Result<Multigraph, FormatError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let g = parse_edge_list(&text)?;
    if require_cubic {
        g.require_cubic()?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edge_list() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Hex SHA-256 of the edge-list encoding.
pub fn graph_digest(g: &Multigraph) -> String {
    hex::encode(Sha256::digest(write_edge_list(g).as_bytes()))
}

pub fn write_coloring(f: &HColoring<'_>) -> String {
    let mut out = format!(
        "hcol {} {}\n",
        graph_digest(f.source()),
        graph_digest(f.target())
    );
    for (i, e) in f.map().iter().enumerate() {
        let _ = writeln!(out, "{i} {}", e.0);
    }
    out
}

/// Parses a coloring file against its two graphs. The map must be total and
/// in range; the coloring conditions themselves are left to
/// [`HColoring::check`].
pub fn parse_coloring<'g>(
    text: &str,
    source: &'g Multigraph,
    target: &'g Multigraph,
) -> Result<HColoring<'g>, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `hcol` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "hcol" {
        return Err(parse_err(
            hl,
            "expected `hcol <source digest> <target digest>`",
        ));
    }
    for (which, expected, g) in [("source", fields[1], source), ("target", fields[2], target)] {
        let actual = graph_digest(g);
        if actual != expected {
            return Err(FormatError::DigestMismatch {
                which,
                expected: expected.into(),
                actual,
            });
        }
    }
    let mut map = vec![None; source.m()];
    for (line_no, line) in lines {
        let (ge, he) = two_numbers(line_no, line)?;
        if ge >= source.m() {
            return Err(parse_err(line_no, format!("source edge {ge} out of range")));
        }
        if map[ge].replace(EdgeId(he as u32)).is_some() {
            return Err(parse_err(
                line_no,
                format!("source edge {ge} assigned twice"),
            ));
        }
    }
    if let Some(missing) = map.iter().position(Option::is_none) {
        return Err(parse_err(
            hl,
            format!("no color given for source edge {missing}"),
        ));
    }
    Ok(HColoring::new(
        source,
        target,
        map.into_iter().map(Option::unwrap).collect(),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{k4, petersen, sylvester, triple_edge, VertexId};

    #[test]
    fn parses_triple_edge() {
        let g = parse_edge_list("2 3\n0 1\n0 1\n0 1\n").unwrap();
        assert_eq!(g, triple_edge());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a triple edge\n2 3 # header\n\n0 1\n# middle\n1 0\n0 1 # last\n";
        assert_eq!(parse_edge_list(text).unwrap(), triple_edge());
    }

    #[test]
    fn degree_two_is_not_cubic() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.txt");
        std::fs::write(&path, "2 2\n0 1\n0 1\n").unwrap();
        assert!(matches!(
            parse_graph_file(&path, true),
            Err(FormatError::Graph(GraphError::NotCubic { .. }))
        ));
        assert_eq!(parse_graph_file(&path, false).unwrap().m(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_edge_list("2 3\n0 1\n0 x\n0 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("2 3\n0 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { .. }));
        let err = parse_edge_list("2 1\n0 2\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 2, .. }));
        assert!(matches!(
            parse_edge_list("2 1\n1 1\n"),
            Err(FormatError::Graph(GraphError::LoopEdge { .. }))
        ));
    }

    #[test]
    fn writer_sorts_and_round_trips() {
        let g = parse_edge_list("4 6\n3 2\n0 1\n2 0\n3 1\n1 2\n0 3\n").unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
        assert_eq!(g, k4());
    }

    #[test]
    fn coloring_round_trip() {
        let (k, p) = (k4(), petersen());
        let f = HColoring::from_star(&k, &p, VertexId(3)).unwrap();
        let text = write_coloring(&f);
        assert!(text.starts_with("hcol "));
        let back = parse_coloring(&text, &k, &p).unwrap();
        assert_eq!(back.map(), f.map());
        let s = sylvester();
        assert!(matches!(
            parse_coloring(&text, &k, &s),
            Err(FormatError::DigestMismatch {
                which: "target",
                ..
            })
        ));
    }
}
