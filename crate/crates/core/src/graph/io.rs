//! Edge-list text format: one edge per line as two whitespace-separated
//! 0-based vertex ids; `#` starts a comment line; blank lines are skipped.
//!
//! A `# vertices N` comment, when present, fixes the vertex count so that
//! isolated trailing vertices survive a round trip; otherwise the count is
//! one more than the largest id seen.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashMap::new();
    let mut max_id: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("vertices") {
                let n = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or(Error::Parse { line: line_no, msg: "malformed vertex-count header".into() })?;
                declared = Some(n);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut next = |what: &str| -> Result<usize> {
            let f =
                fields.next().ok_or_else(|| Error::Parse { line: line_no, msg: format!("missing {what} endpoint") })?;
            f.parse().map_err(|_| Error::Parse { line: line_no, msg: format!("{f:?} is not a vertex id") })
        };
        let u = next("first")?;
        let v = next("second")?;
        if fields.next().is_some() {
            return Err(Error::Parse { line: line_no, msg: "expected exactly two fields".into() });
        }
        if u == v {
            return Err(Error::Parse { line: line_no, msg: format!("self-loop at vertex {u}") });
        }
        let key = (u.min(v), u.max(v));
        if let Some(first) = seen.insert(key, line_no) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("duplicate edge {}-{} (first on line {first})", key.0, key.1),
            });
        }
        max_id = Some(max_id.map_or(key.1, |m: usize| m.max(key.1)));
        edges.push(key);
    }
    let n = match (declared, max_id) {
        (Some(n), Some(mx)) if mx >= n => {
            return Err(Error::Parse { line: 0, msg: format!("vertex {mx} exceeds declared count {n}") })
        }
        (Some(n), _) => n,
        (None, Some(mx)) => mx + 1,
        (None, None) => 0,
    };
    Graph::from_edges(n, edges)
}

pub fn read_edge_list(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * g.m() + 32);
    writeln!(out, "# vertices {}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_edge_list(g: &Graph, path: &Path) -> Result<()> {
    fs::write(path, format_edge_list(g))?;
    Ok(())
}
