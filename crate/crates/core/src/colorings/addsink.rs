//! Coloring within a bounded palette for oriented graphs with tournament
//! out-neighborhoods that exclude a hero extended by a dominated sink.
//! Strong components are handled independently; inside a component the hero
//! copy, a shortest dipath reconnecting its parts, and their in-neighborhoods
//! cover everything and are colored in disjoint palette blocks.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Dipath, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::{self, ClassSpec, Pattern};

use super::{Coloring, HeroOracle};

/// Colors `X = V(P) ∪ N-(V(P))` for a shortest dipath `P` with `3C + 2`
/// colors, `C` being the oracle bound: in-neighborhoods of path vertices are
/// peeled into layers, layers with the same index residue mod 3 share a
/// `C`-color block, and the path itself alternates over two dedicated colors.
/// No arc jumps three or more layers forward, so same-block layers cannot
/// close a cycle.
pub fn shortpath_partition(d: &Digraph, path: &Dipath, sub: &HeroOracle) -> Result<Coloring> {
    patterns::ensure_in_class(d, &ClassSpec::out_tournament())?;
    shortpath_inner(d, path, sub)
}

pub(super) fn shortpath_inner(d: &Digraph, path: &Dipath, sub: &HeroOracle) -> Result<Coloring> {
    // The path may have been built against another digraph; re-validate.
    Dipath::new(path.trace().to_vec(), d)?;
    let shortest = d
        .shortest_dipath(path.first(), path.last())?
        .expect("the path itself witnesses reachability");
    if shortest.arc_len() != path.arc_len() {
        return Err(Error::Precondition(format!(
            "the given dipath has {} arcs but a shortest one has {}",
            path.arc_len(),
            shortest.arc_len()
        )));
    }
    let c = sub.bound();
    let trace = path.trace();
    let mut used = path.vertex_set();
    let mut assignment: BTreeMap<Vertex, u32> = BTreeMap::new();
    for (i, &x) in trace.iter().enumerate() {
        let layer: VertexSet = d.ins(x).difference(&used).copied().collect();
        if layer.is_empty() {
            continue;
        }
        used.extend(layer.iter().copied());
        let layer_coloring = sub.color_checked(&d.induced(&layer)?)?;
        let base = (i as u32 % 3) * c;
        for (&w, &color) in layer_coloring.assignment() {
            assignment.insert(w, base + color);
        }
    }
    for (i, &x) in trace.iter().enumerate() {
        assignment.insert(x, 3 * c + 1 + (i as u32 % 2));
    }
    Coloring::new(assignment, 3 * c + 2)
}

/// The hero of `sub` extended by a fresh vertex receiving an arc from every
/// hero vertex.
fn dominated_sink_extension(hero: &Pattern) -> Result<Pattern> {
    let mut graph = hero.graph().clone();
    let sink = graph.vertices().max().map_or(0, |m| m + 1);
    graph.insert_vertex(sink);
    let dominators: Vec<Vertex> = hero.graph().vertices().collect();
    for v in dominators {
        graph.insert_arc(v, sink)?;
    }
    Pattern::new(format!("{}+sink", hero.name()), graph)
}

/// Acyclic coloring with at most `v(H)(C+1) + 3C + 2` colors of any oriented
/// graph with tournament out-neighborhoods that excludes the hero of `sub`
/// extended by a dominated sink. Components without an induced hero copy are
/// delegated to the oracle wholesale.
pub fn color_addsink(d: &Digraph, sub: &HeroOracle) -> Result<Coloring> {
    let hero_order = sub.hero().graph().vertex_count() as u32;
    let extended = dominated_sink_extension(sub.hero())?;
    patterns::ensure_in_class(
        d,
        &ClassSpec::new(vec![Pattern::digon(), Pattern::s2_plus(), extended])?,
    )?;
    let c = sub.bound();
    let palette = hero_order * (c + 1) + 3 * c + 2;
    let mut assignment = BTreeMap::new();
    for component in d.strong_components() {
        let part = d.induced(&component)?;
        color_component(&part, sub, hero_order, c, &mut assignment)?;
    }
    Coloring::new(assignment, palette)
}

/// Colors one strong component into `out`, reusing the palette across
/// components: a directed cycle never crosses components, so that is sound.
fn color_component(
    part: &Digraph,
    sub: &HeroOracle,
    hero_order: u32,
    c: u32,
    out: &mut BTreeMap<Vertex, u32>,
) -> Result<()> {
    let Some(found) = patterns::find_induced(part, sub.hero()) else {
        let coloring = sub.color_checked(part)?;
        out.extend(coloring.assignment().iter().map(|(&v, &col)| (v, col)));
        return Ok(());
    };
    let hero_set = found.image();
    let hero_sub = part.induced(&hero_set)?;
    let hero_components = hero_sub.strong_components();
    // If the hero copy is not strongly connected, a shortest dipath from its
    // sink part back to its source part re-closes it inside the component.
    let path = if hero_components.len() == 1 {
        None
    } else {
        let start = *hero_components
            .last()
            .expect("nonempty")
            .iter()
            .next()
            .expect("nonempty");
        let goal = *hero_components
            .first()
            .expect("nonempty")
            .iter()
            .next()
            .expect("nonempty");
        let p = part.shortest_dipath(start, goal)?.ok_or_else(|| {
            Error::Inconsistency(
                "no dipath between hero parts inside a strong component".into(),
            )
        })?;
        Some(p)
    };
    let mut closed = hero_set.clone();
    if let Some(p) = &path {
        closed.extend(p.trace().iter().copied());
    }
    let mut reach = closed.clone();
    reach.extend(part.in_neighbors(&closed)?);
    if reach != part.vertex_set() {
        return Err(Error::Inconsistency(
            "the closed in-neighborhood of the hero structure misses part of its strong component"
                .into(),
        ));
    }

    // Hero blocks in ascending id order, one (C+1)-block each: the hero
    // vertex solo plus its in-neighborhood through the oracle. A vertex in
    // several parts keeps its first color.
    let mut assigned = VertexSet::new();
    for (j, &y) in hero_set.iter().enumerate() {
        let base = j as u32 * (c + 1);
        if assigned.insert(y) {
            out.insert(y, base + 1);
        }
        let ins = part.ins(y).clone();
        let fresh: VertexSet = ins.difference(&assigned).copied().collect();
        if fresh.is_empty() {
            continue;
        }
        let coloring = sub.color_checked(&part.induced(&ins)?)?;
        for &w in &fresh {
            out.insert(w, base + 1 + coloring.color(w).expect("total on in-neighborhood"));
            assigned.insert(w);
        }
    }
    if let Some(p) = &path {
        let base = hero_order * (c + 1);
        let path_coloring = shortpath_inner(part, p, sub)?;
        for (&w, &color) in path_coloring.assignment() {
            if assigned.insert(w) {
                out.insert(w, base + color);
            }
        }
    }
    if assigned != part.vertex_set() {
        return Err(Error::Inconsistency(
            "palette blocks missed part of the strong component".into(),
        ));
    }
    Ok(())
}
