//! The edge-list document: a header line `n m`, then `m` lines `u v` with
//! dense vertex ids `0..n-1`, no loops, no duplicates. Lines starting with
//! `#` and blank lines are ignored everywhere. Serialization densifies
//! sparse ids and records the renaming as `# map old new` comment lines, so
//! parse(serialize(d)) equals d up to that re-indexing.

use std::collections::{BTreeMap, BTreeSet};

use dichroma::colorings::Coloring;
use dichroma::digraph::{Digraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(u32, u32), ParseError> {
    let mut parts = line.split_whitespace();
    let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
        return fail(line_no, format!("expected `{what}`, got `{line}`"));
    };
    let Ok(a) = a.parse::<u32>() else {
        return fail(line_no, format!("`{a}` is not a non-negative integer"));
    };
    let Ok(b) = b.parse::<u32>() else {
        return fail(line_no, format!("`{b}` is not a non-negative integer"));
    };
    Ok((a, b))
}

/// Parses an edge-list document into a digraph with vertices `0..n-1`.
pub fn parse(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = content_lines(text);
    let Some((header_no, header)) = lines.next() else {
        return fail(1, "missing `n m` header");
    };
    let (n, m) = parse_pair(header_no, header, "n m")?;
    let mut digraph = Digraph::with_vertices(n);
    let mut seen: BTreeSet<(u32, u32)> = BTreeSet::new();
    let mut last_line = header_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if seen.len() == m as usize {
            return fail(line_no, format!("more than {m} arc lines"));
        }
        let (u, v) = parse_pair(line_no, line, "u v")?;
        if u >= n || v >= n {
            return fail(line_no, format!("vertex id out of range 0..{n}"));
        }
        if u == v {
            return fail(line_no, format!("loop arc at vertex {u}"));
        }
        if !seen.insert((u, v)) {
            return fail(line_no, format!("duplicate arc ({u}, {v})"));
        }
        digraph
            .insert_arc(u, v)
            .expect("endpoints in range and distinct");
    }
    if seen.len() != m as usize {
        return fail(
            last_line,
            format!("header promises {m} arcs but {} follow", seen.len()),
        );
    }
    Ok(digraph)
}

/// Serializes a digraph, densifying vertex ids in ascending order; changed
/// ids are recorded as `# map old new` lines ahead of the header.
pub fn serialize(d: &Digraph) -> String {
    let map: BTreeMap<Vertex, u32> = d
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, i as u32))
        .collect();
    let mut out = String::new();
    for (&old, &new) in &map {
        if old != new {
            out.push_str(&format!("# map {old} {new}\n"));
        }
    }
    out.push_str(&format!("{} {}\n", d.vertex_count(), d.arc_count()));
    let mut arcs: Vec<(u32, u32)> = d.arcs().map(|(u, v)| (map[&u], map[&v])).collect();
    arcs.sort_unstable();
    for (u, v) in arcs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a coloring document: one `vertex color` line per vertex, colors
/// positive.
pub fn parse_coloring(text: &str) -> Result<BTreeMap<Vertex, u32>, ParseError> {
    let mut assignment = BTreeMap::new();
    for (line_no, line) in content_lines(text) {
        let (v, color) = parse_pair(line_no, line, "vertex color")?;
        if color == 0 {
            return fail(line_no, "colors are 1-based");
        }
        if assignment.insert(v, color).is_some() {
            return fail(line_no, format!("vertex {v} colored twice"));
        }
    }
    Ok(assignment)
}

/// One `vertex color` line per vertex, sorted by vertex id.
pub fn serialize_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (v, color) in coloring.assignment() {
        out.push_str(&format!("{v} {color}\n"));
    }
    out
}
