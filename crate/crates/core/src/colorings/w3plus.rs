//! Acyclic two-coloring of oriented graphs whose out-neighborhoods induce
//! transitive tournaments, with the closed out-neighborhood of a chosen
//! anchor forced monochromatic, and the out-module search inside an
//! in-neighborhood that drives it.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::{self, ClassSpec};

use super::{swap_colors, with_deep_stack, Coloring, OutModuleCertificate};

fn in_target_class(d: &Digraph) -> bool {
    patterns::is_oriented(d) && patterns::out_neighborhoods_transitive(d)
}

/// Acyclic 2-coloring of `d` in which every out-neighbor of `v` receives the
/// color of `v`. Requires `d` to avoid induced digons, out-stars with two
/// nonadjacent leaves, and dominated directed triangles; the class is checked
/// once here and assumed (it is closed under every construction below) inside
/// the recursion.
pub fn color_w3plus(d: &Digraph, v: Vertex) -> Result<Coloring> {
    if !d.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    patterns::ensure_in_class(d, &ClassSpec::out_transitive())?;
    let assignment = with_deep_stack(|| two_color(d, v))?;
    Coloring::new(assignment, 2)
}

/// The recursion behind [`color_w3plus`]; the caller vouches for class
/// membership. Also used by the four-coloring algorithm on in-neighborhoods.
pub(super) fn two_color(d: &Digraph, v: Vertex) -> Result<BTreeMap<Vertex, u32>> {
    debug_assert!(in_target_class(d), "recursion left the class");
    debug_assert!(d.contains_vertex(v));
    if d.vertex_count() == 1 {
        return Ok(BTreeMap::from([(v, 1)]));
    }
    if d.ins(v).is_empty() {
        // No cycle passes through v, so v can take any color; aim it at its
        // functional out-neighbor so the whole out-neighborhood follows.
        let rest = d.delete_vertex(v)?;
        debug_assert!(rest.vertex_count() < d.vertex_count());
        if d.outs(v).is_empty() {
            let root = rest.min_vertex().expect("rest is nonempty");
            let mut assignment = two_color(&rest, root)?;
            assignment.insert(v, 1);
            return Ok(assignment);
        }
        let u = patterns::f_arc(d, v)?.expect("v has out-arcs");
        let mut assignment = two_color(&rest, u)?;
        let anchor_color = assignment[&u];
        assignment.insert(v, anchor_color);
        return Ok(assignment);
    }

    let certificate = in_module(d, v)?;
    let module = certificate.module;
    let two_step = patterns::two_step_set(d, &module, v)?;

    // Color the module with the two-step set pushed into color 2. The set
    // induces a transitive tournament whose source dominates it, so anchoring
    // the recursion there makes it monochromatic.
    let module_digraph = d.induced(&module)?;
    debug_assert!(module_digraph.vertex_count() < d.vertex_count());
    let module_coloring = if two_step.is_empty() {
        two_color(
            &module_digraph,
            *module.iter().next().expect("module is nonempty"),
        )?
    } else {
        let source = patterns::transitive_source(d, &two_step)?;
        let mut coloring = two_color(&module_digraph, source)?;
        if coloring[&source] != 2 {
            swap_colors(&mut coloring, 1, 2);
        }
        coloring
    };

    if module_digraph.is_acyclic() {
        // The module leaves only into the closed out-neighborhood of v, which
        // sits in color 1; the acyclic module takes all of color 2.
        let rest = d.delete(&module)?;
        debug_assert!(rest.vertex_count() < d.vertex_count());
        let mut assignment = two_color(&rest, v)?;
        if assignment[&v] != 1 {
            swap_colors(&mut assignment, 1, 2);
        }
        for &m in &module {
            assignment.insert(m, 2);
        }
        return Ok(assignment);
    }

    // The module has a cycle, so it has at least three vertices and strictly
    // contains the two-step set. Remove the two-step set, identify the rest
    // of the module, and aim the representative at the whole out-neighborhood
    // of v; each added arc keeps the class.
    let core: VertexSet = module.difference(&two_step).copied().collect();
    let reduced = d.delete(&two_step)?;
    let contraction = reduced.contract(&core)?;
    let representative = contraction.representative;
    let mut star = contraction.result;
    let targets: Vec<Vertex> = star
        .outs(v)
        .difference(star.outs(representative))
        .copied()
        .collect();
    for u in targets {
        star = star.add_arc(representative, u)?;
        debug_assert!(in_target_class(&star), "arc addition left the class");
    }
    debug_assert!(star.vertex_count() < d.vertex_count());
    let mut assignment = two_color(&star, representative)?;
    if assignment[&representative] != 1 {
        swap_colors(&mut assignment, 1, 2);
    }
    assignment.remove(&representative);
    for (m, color) in module_coloring {
        assignment.insert(m, color);
    }
    Ok(assignment)
}

/// An out-module contained in the in-neighborhood of `v` whose out-arcs all
/// land in the closed out-neighborhood of `v`. Exists whenever `v` has an
/// in-neighbor and the host lies in the class with transitive
/// out-neighborhoods. The returned certificate is re-verified before it is
/// handed out.
pub fn find_in_module(d: &Digraph, v: Vertex) -> Result<OutModuleCertificate> {
    if !d.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    patterns::ensure_in_class(d, &ClassSpec::out_transitive())?;
    if d.ins(v).is_empty() {
        return Err(Error::Precondition(format!(
            "vertex {v} has no in-neighbors"
        )));
    }
    let certificate = with_deep_stack(|| in_module(d, v))?;
    certificate.verify(d)?;
    Ok(certificate)
}

/// Recursive search: either some in-neighbor's functional arc hits `v`
/// directly, or the functional digraph cycles inside the in-neighborhood;
/// identifying that cycle shrinks the in-degree of `v` by at least two, and
/// the module found in the quotient lifts back by re-expanding the cycle.
pub(super) fn in_module(d: &Digraph, v: Vertex) -> Result<OutModuleCertificate> {
    debug_assert!(in_target_class(d));
    let in_neighbors = d.ins(v);
    if in_neighbors.is_empty() {
        return Err(Error::Precondition(format!(
            "vertex {v} has no in-neighbors"
        )));
    }
    for &w in in_neighbors {
        if patterns::f_arc(d, w)? == Some(v) {
            return Ok(OutModuleCertificate {
                module: VertexSet::from([w]),
                anchor: v,
            });
        }
    }
    let cycle = patterns::find_f_cycle(d, in_neighbors)?;
    let cycle_set: VertexSet = cycle.into_iter().collect();
    let contraction = d.contract(&cycle_set)?;
    debug_assert!(contraction.result.in_degree(v) < d.in_degree(v));
    let inner = in_module(&contraction.result, v)?;
    debug_assert!(inner.verify(&contraction.result).is_ok());
    let module = if inner.module.contains(&contraction.representative) {
        let mut lifted = inner.module;
        lifted.remove(&contraction.representative);
        lifted.extend(cycle_set);
        lifted
    } else {
        inner.module
    };
    Ok(OutModuleCertificate { module, anchor: v })
}
