//! Ground truth by brute force: coloring validity, the exact dichromatic
//! number with a witness, and naive induced-pattern counting. Everything here
//! is deliberately simple so it can serve as the independent verifier for the
//! constructive algorithms.

use std::collections::BTreeMap;

use crate::colorings::Coloring;
use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::Pattern;

/// Default vertex limit for the exact search; override per call or, on the
/// command line, via the environment.
pub const DEFAULT_CHI_LIMIT: usize = 14;

/// Exact dichromatic number together with a witness using exactly that many
/// colors.
#[derive(Debug, Clone)]
pub struct ChiResult {
    pub chi: u32,
    pub witness: Coloring,
}

/// True iff every color class of `coloring` induces an acyclic subdigraph of
/// `d`. The coloring must cover every vertex of `d`; entries outside `d` are
/// ignored, so a coloring of a larger host can be checked against an induced
/// subdigraph directly.
pub fn is_valid_acyclic_coloring(d: &Digraph, coloring: &Coloring) -> Result<bool> {
    let mut classes: BTreeMap<u32, VertexSet> = BTreeMap::new();
    for v in d.vertices() {
        match coloring.color(v) {
            Some(c) => {
                classes.entry(c).or_default().insert(v);
            }
            None => return Err(Error::PartialColoring(v)),
        }
    }
    Ok(classes.values().all(|class| d.is_acyclic_within(class)))
}

/// Exact dichromatic number with the default size limit.
pub fn dichromatic_number(d: &Digraph) -> Result<ChiResult> {
    dichromatic_number_with_limit(d, DEFAULT_CHI_LIMIT)
}

/// Exact dichromatic number by backtracking over palettes of increasing
/// size. Vertices are assigned in a degeneracy-like order (densest core
/// first); within the search, a partial class is extended only while it stays
/// acyclic, and new colors are introduced in increasing order so the first
/// processed vertex always has color 1.
pub fn dichromatic_number_with_limit(d: &Digraph, limit: usize) -> Result<ChiResult> {
    let n = d.vertex_count();
    if n > limit {
        return Err(Error::SizeLimit { size: n, limit });
    }
    if n == 0 {
        return Ok(ChiResult {
            chi: 0,
            witness: Coloring::empty(0),
        });
    }
    let order = degeneracy_order(d);
    for k in 1..=n as u32 {
        if let Some(assignment) = try_color(d, &order, k) {
            let witness = Coloring::new(assignment, k)?;
            debug_assert_eq!(is_valid_acyclic_coloring(d, &witness), Ok(true));
            return Ok(ChiResult { chi: k, witness });
        }
    }
    unreachable!("one color per vertex always succeeds")
}

/// Repeatedly strips a vertex of minimum total degree (ties to the smallest
/// id) and returns the reverse of the removal sequence.
fn degeneracy_order(d: &Digraph) -> Vec<Vertex> {
    let mut degree: BTreeMap<Vertex, usize> = d
        .vertices()
        .map(|v| (v, d.out_degree(v) + d.in_degree(v)))
        .collect();
    let mut removal = Vec::with_capacity(d.vertex_count());
    let mut removed = VertexSet::new();
    while !degree.is_empty() {
        let (&v, _) = degree
            .iter()
            .min_by_key(|&(&v, &deg)| (deg, v))
            .expect("nonempty");
        degree.remove(&v);
        removed.insert(v);
        for &w in d.outs(v).iter().chain(d.ins(v)) {
            if let Some(deg) = degree.get_mut(&w) {
                *deg = deg.saturating_sub(1);
            }
        }
        removal.push(v);
    }
    removal.reverse();
    removal
}

fn try_color(d: &Digraph, order: &[Vertex], k: u32) -> Option<BTreeMap<Vertex, u32>> {
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    let mut classes: Vec<VertexSet> = vec![VertexSet::new(); k as usize];
    if extend(d, order, k, 0, 0, &mut assignment, &mut classes) {
        Some(assignment)
    } else {
        None
    }
}

fn extend(
    d: &Digraph,
    order: &[Vertex],
    k: u32,
    i: usize,
    used: u32,
    assignment: &mut BTreeMap<Vertex, u32>,
    classes: &mut [VertexSet],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let ceiling = k.min(used + 1);
    for color in 1..=ceiling {
        let class = &mut classes[(color - 1) as usize];
        class.insert(v);
        let ok = d.is_acyclic_within(class);
        if ok {
            assignment.insert(v, color);
            if extend(d, order, k, i + 1, used.max(color), assignment, classes) {
                return true;
            }
            assignment.remove(&v);
        }
        classes[(color - 1) as usize].remove(&v);
    }
    false
}

/// Number of induced embeddings of `pattern` into `d`, by full enumeration
/// of injective vertex tuples with the embedding condition checked at the
/// leaves only. Deliberately dumber than `patterns::find_induced`, so the two
/// can cross-check each other.
pub fn count_induced(d: &Digraph, pattern: &Pattern) -> usize {
    let pg = pattern.graph();
    let pattern_vertices: Vec<Vertex> = pg.vertices().collect();
    let host_vertices: Vec<Vertex> = d.vertices().collect();
    let k = pattern_vertices.len();
    if k > host_vertices.len() {
        return 0;
    }
    let mut tuple: Vec<Vertex> = Vec::with_capacity(k);
    let mut count = 0usize;
    enumerate(
        d,
        pg,
        &pattern_vertices,
        &host_vertices,
        &mut tuple,
        &mut count,
    );
    count
}

fn enumerate(
    d: &Digraph,
    pg: &Digraph,
    pattern_vertices: &[Vertex],
    host_vertices: &[Vertex],
    tuple: &mut Vec<Vertex>,
    count: &mut usize,
) {
    if tuple.len() == pattern_vertices.len() {
        let ok = pattern_vertices.iter().enumerate().all(|(i, &p)| {
            pattern_vertices
                .iter()
                .enumerate()
                .all(|(j, &q)| i == j || pg.has_arc(p, q) == d.has_arc(tuple[i], tuple[j]))
        });
        if ok {
            *count += 1;
        }
        return;
    }
    for &h in host_vertices {
        if tuple.contains(&h) {
            continue;
        }
        tuple.push(h);
        enumerate(d, pg, pattern_vertices, host_vertices, tuple, count);
        tuple.pop();
    }
}
