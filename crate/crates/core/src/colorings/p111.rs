//! Acyclic two-coloring of oriented graphs without transitive triangles and
//! without the alternating four-vertex path, by alternating out/in expansion
//! layers around repeatedly chosen roots. Every layer is an independent set
//! in this class, and arcs never leave the even layers forward nor enter the
//! odd layers backward, so parity coloring works round by round.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::{self, ClassSpec};

use super::{Coloring, LayerDecomposition};

/// Alternating expansion layers around `x`: layer 0 is `{x}`, odd layers
/// expand along out-arcs, even layers along in-arcs, each minus everything
/// seen before; the sequence stops at the first empty layer.
pub fn layer_decompose(d: &Digraph, x: Vertex) -> Result<LayerDecomposition> {
    if !d.contains_vertex(x) {
        return Err(Error::UnknownVertex(x));
    }
    let mut layers = vec![VertexSet::from([x])];
    let mut seen = VertexSet::from([x]);
    loop {
        let index = layers.len();
        let previous = layers.last().expect("nonempty");
        let frontier = if index % 2 == 1 {
            d.out_neighbors(previous)?
        } else {
            d.in_neighbors(previous)?
        };
        let layer: VertexSet = frontier.difference(&seen).copied().collect();
        if layer.is_empty() {
            break;
        }
        seen.extend(layer.iter().copied());
        layers.push(layer);
    }
    Ok(LayerDecomposition { layers, root: x })
}

/// Acyclic 2-coloring: repeatedly layer-decompose around the smallest
/// remaining vertex, color even layers 1 and odd layers 2, and delete the
/// union.
pub fn color_p111(d: &Digraph) -> Result<Coloring> {
    color_p111_traced(d).map(|(coloring, _)| coloring)
}

/// Like [`color_p111`] but also returns every layer decomposition used, in
/// order, so the layer structure can be audited; round `i` was computed in
/// `d` minus the unions of rounds before `i`.
pub fn color_p111_traced(d: &Digraph) -> Result<(Coloring, Vec<LayerDecomposition>)> {
    patterns::ensure_in_class(d, &ClassSpec::alternating_path_free())?;
    let mut rest = d.clone();
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    let mut rounds = Vec::new();
    while let Some(x) = rest.min_vertex() {
        let decomposition = layer_decompose(&rest, x)?;
        #[cfg(debug_assertions)]
        for layer in &decomposition.layers {
            debug_assert!(
                layer.iter().all(|&a| rest.outs(a).is_disjoint(layer)),
                "layer {layer:?} is not independent"
            );
        }
        for (index, layer) in decomposition.layers.iter().enumerate() {
            let color = if index % 2 == 0 { 1 } else { 2 };
            for &v in layer {
                assignment.insert(v, color);
            }
        }
        rest = rest.delete(&decomposition.union())?;
        rounds.push(decomposition);
    }
    Ok((Coloring::new(assignment, 2)?, rounds))
}
