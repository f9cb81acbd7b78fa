//! Doubled-palette coloring of locally complete oriented graphs excluding a
//! hero: peel off the closed neighborhood of the smallest vertex, color the
//! tournament on `{v} ∪ N+(v)` with the first half of the palette and the
//! tournament on `N-(v)` with the second half, and recurse on the rest. A
//! monochromatic cycle would have to enter and leave the neighborhood, which
//! the star-freeness of the class forbids.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::Result;
use crate::patterns::{self, ClassSpec};

use super::{with_deep_stack, Coloring, HeroOracle};

/// Acyclic coloring with `2C` colors, `C` being the oracle bound for
/// hero-free tournaments.
pub fn color_locally_complete(d: &Digraph, sub: &HeroOracle) -> Result<Coloring> {
    patterns::ensure_in_class(d, &ClassSpec::locally_complete(sub.hero().clone()))?;
    let c = sub.bound();
    let assignment = with_deep_stack(|| split_color(d, sub, c))?;
    Coloring::new(assignment, 2 * c)
}

fn split_color(d: &Digraph, sub: &HeroOracle, c: u32) -> Result<BTreeMap<Vertex, u32>> {
    debug_assert!(patterns::is_oriented(d) && patterns::out_neighborhoods_tournament(d));
    let Some(v) = d.min_vertex() else {
        return Ok(BTreeMap::new());
    };
    let mut closed: VertexSet = d.outs(v).union(d.ins(v)).copied().collect();
    closed.insert(v);
    let rest = d.delete(&closed)?;
    debug_assert!(rest.vertex_count() < d.vertex_count());
    let mut assignment = split_color(&rest, sub, c)?;

    let mut out_side = d.outs(v).clone();
    out_side.insert(v);
    let out_coloring = sub.color_checked(&d.induced(&out_side)?)?;
    assignment.extend(out_coloring.assignment().iter().map(|(&w, &col)| (w, col)));

    if !d.ins(v).is_empty() {
        let in_coloring = sub.color_checked(&d.induced(d.ins(v))?)?;
        assignment.extend(
            in_coloring
                .assignment()
                .iter()
                .map(|(&w, &col)| (w, col + c)),
        );
    }
    Ok(assignment)
}
