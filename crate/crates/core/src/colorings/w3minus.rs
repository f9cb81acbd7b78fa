//! Acyclic four-coloring of oriented graphs with tournament out-neighborhoods
//! and triangle-free in-neighborhoods, anchored at an arc (u, v): u and its
//! out-neighbors outside the out-neighborhood of v land in color 1, the
//! out-neighbors of v in colors {1, 2}.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::{self, ClassSpec};

use super::{w3plus, with_deep_stack, Coloring};

fn in_target_class(d: &Digraph) -> bool {
    patterns::is_oriented(d)
        && patterns::out_neighborhoods_tournament(d)
        && patterns::in_neighborhoods_triangle_free(d)
}

/// Acyclic 4-coloring anchored at the arc `(u, v)`, satisfying `c(u) = 1`,
/// `c(x) = 1` for every `x` in `N+(u) \ N+(v)` (hence `c(v) = 1`), and
/// `c(x)` in `{1, 2}` for every `x` in `N+(v)`.
pub fn color_w3minus(d: &Digraph, arc: (Vertex, Vertex)) -> Result<Coloring> {
    let (u, v) = arc;
    if !d.contains_vertex(u) {
        return Err(Error::UnknownVertex(u));
    }
    if !d.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    if !d.has_arc(u, v) {
        return Err(Error::MissingArc(u, v));
    }
    patterns::ensure_in_class(d, &ClassSpec::sink_wheel_free())?;
    let assignment = with_deep_stack(|| four_color(d, u, v))?;
    Coloring::new(assignment, 4)
}

/// Anchor-free entry: arc-free digraphs are colored with color 1 alone,
/// anything else anchors at the lexicographically smallest arc.
pub fn color_w3minus_any(d: &Digraph) -> Result<Coloring> {
    patterns::ensure_in_class(d, &ClassSpec::sink_wheel_free())?;
    let assignment = with_deep_stack(|| four_color_any(d))?;
    Coloring::new(assignment, 4)
}

fn four_color_any(d: &Digraph) -> Result<BTreeMap<Vertex, u32>> {
    match d.arcs().next() {
        None => Ok(d.vertices().map(|v| (v, 1)).collect()),
        Some((u, v)) => four_color(d, u, v),
    }
}

fn four_color(d: &Digraph, u: Vertex, v: Vertex) -> Result<BTreeMap<Vertex, u32>> {
    debug_assert!(in_target_class(d), "recursion left the class");
    if !d.has_arc(u, v) {
        return Err(Error::MissingArc(u, v));
    }

    // A: out-neighbors of u outside the closed out-neighborhood of v; they
    // induce a transitive tournament and all point at v. B: common vertices
    // of N-(u) and N+(v); also a transitive tournament.
    let mut head_side: VertexSet = d.outs(u).difference(d.outs(v)).copied().collect();
    head_side.remove(&v);
    let shared: VertexSet = d.ins(u).intersection(d.outs(v)).copied().collect();

    let mut removed = d.ins(u).clone();
    removed.insert(u);
    let rest = d.delete(&removed)?;
    debug_assert!(rest.vertex_count() < d.vertex_count());
    debug_assert!(rest.contains_vertex(v));

    let mut assignment = if !head_side.is_empty() {
        // Anchor the recursion at (a, v) where a is the source of D[A]; the
        // conditions there push all of A and v into color 1.
        let a = patterns::transitive_source(d, &head_side)?;
        four_color(&rest, a, v)?
    } else if !rest.outs(v).is_empty() {
        let y = *rest.outs(v).iter().next().expect("nonempty");
        four_color(&rest, v, y)?
    } else {
        // v is a sink of the remainder, so recoloring it cannot close a
        // monochromatic cycle.
        let mut free = four_color_any(&rest)?;
        free.insert(v, 1);
        free
    };

    for &x in &shared {
        assignment.insert(x, 2);
    }
    let in_side: VertexSet = d.ins(u).difference(&shared).copied().collect();
    if !in_side.is_empty() {
        // Triangle-free in-neighborhood: the two-coloring algorithm applies,
        // shifted onto colors {3, 4}.
        let sub = d.induced(&in_side)?;
        let anchor = *in_side.iter().next().expect("nonempty");
        for (x, color) in w3plus::two_color(&sub, anchor)? {
            assignment.insert(x, color + 2);
        }
    }
    assignment.insert(u, 1);
    Ok(assignment)
}
