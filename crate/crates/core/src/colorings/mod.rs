//! The constructive coloring algorithms, each one a minimal-counterexample
//! proof turned into a well-founded recursion on vertex count. Every public
//! entry point validates its class precondition once; the recursions below it
//! rely on closure under induced subdigraphs, out-module contraction and the
//! specific arc additions, and re-check those facts in debug builds.

mod addsink;
mod locally_complete;
mod p111;
mod w3minus;
mod w3plus;

pub use addsink::{color_addsink, shortpath_partition};
pub use locally_complete::color_locally_complete;
pub use p111::{color_p111, color_p111_traced, layer_decompose};
pub use w3minus::{color_w3minus, color_w3minus_any};
pub use w3plus::{color_w3plus, find_in_module};

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::oracle;
use crate::patterns::{self, Pattern};

/// A total assignment of positive colors to the vertices of some digraph,
/// together with the palette it draws from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<Vertex, u32>,
    palette_size: u32,
}

impl Coloring {
    /// Wraps an assignment, rejecting any color outside `1..=palette_size`.
    pub fn new(assignment: BTreeMap<Vertex, u32>, palette_size: u32) -> Result<Self> {
        for (&_, &color) in &assignment {
            if color < 1 || color > palette_size {
                return Err(Error::ColorOutOfPalette {
                    color,
                    palette: palette_size,
                });
            }
        }
        Ok(Coloring {
            assignment,
            palette_size,
        })
    }

    /// The coloring of the empty digraph.
    pub fn empty(palette_size: u32) -> Self {
        Coloring {
            assignment: BTreeMap::new(),
            palette_size,
        }
    }

    pub fn color(&self, v: Vertex) -> Option<u32> {
        self.assignment.get(&v).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<Vertex, u32> {
        &self.assignment
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    pub fn domain(&self) -> VertexSet {
        self.assignment.keys().copied().collect()
    }

    pub fn colors_used(&self) -> std::collections::BTreeSet<u32> {
        self.assignment.values().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// Swaps two colors everywhere in a raw assignment.
pub(crate) fn swap_colors(assignment: &mut BTreeMap<Vertex, u32>, a: u32, b: u32) {
    for color in assignment.values_mut() {
        if *color == a {
            *color = b;
        } else if *color == b {
            *color = a;
        }
    }
}

/// An out-module `M` sitting inside the in-neighborhood of its anchor vertex,
/// with all of its out-arcs landing in the anchor's closed out-neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutModuleCertificate {
    pub module: VertexSet,
    pub anchor: Vertex,
}

impl OutModuleCertificate {
    /// Checks all three certificate facts against `d`.
    pub fn verify(&self, d: &Digraph) -> Result<()> {
        if !d.contains_vertex(self.anchor) {
            return Err(Error::UnknownVertex(self.anchor));
        }
        if !self.module.is_subset(d.ins(self.anchor)) {
            return Err(Error::Precondition(
                "module is not contained in the anchor's in-neighborhood".into(),
            ));
        }
        if !patterns::is_out_module(d, &self.module)? {
            return Err(Error::Precondition("module is not an out-module".into()));
        }
        let reach = d.out_neighbors(&self.module)?;
        let mut allowed = d.outs(self.anchor).clone();
        allowed.insert(self.anchor);
        if !reach.is_subset(&allowed) {
            return Err(Error::Precondition(
                "module reaches outside the anchor's closed out-neighborhood".into(),
            ));
        }
        Ok(())
    }
}

/// Alternating expansion layers around a root vertex: layer 0 is the root,
/// odd layers expand along out-arcs, even layers along in-arcs, each minus
/// everything seen before, stopping at the first empty layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub layers: Vec<VertexSet>,
    pub root: Vertex,
}

impl LayerDecomposition {
    pub fn union(&self) -> VertexSet {
        self.layers.iter().flatten().copied().collect()
    }
}

/// A pluggable coloring routine for hero-free inputs: on any digraph within
/// its contract it returns a valid acyclic coloring using at most `bound`
/// colors. The library verifies every returned coloring and reports a
/// contract breach instead of propagating a bad one.
pub struct HeroOracle {
    hero: Pattern,
    bound: u32,
    color_fn: Box<dyn Fn(&Digraph) -> Result<Coloring> + Send + Sync>,
}

impl std::fmt::Debug for HeroOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HeroOracle")
            .field("hero", &self.hero.name())
            .field("bound", &self.bound)
            .finish_non_exhaustive()
    }
}

impl HeroOracle {
    pub fn new(
        hero: Pattern,
        bound: u32,
        color_fn: impl Fn(&Digraph) -> Result<Coloring> + Send + Sync + 'static,
    ) -> Self {
        HeroOracle {
            hero,
            bound,
            color_fn: Box::new(color_fn),
        }
    }

    pub fn hero(&self) -> &Pattern {
        &self.hero
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Invokes the oracle and verifies its answer: total on the input, within
    /// the bound, and acyclic on every color class.
    pub fn color_checked(&self, d: &Digraph) -> Result<Coloring> {
        let coloring = (self.color_fn)(d)?;
        if coloring.domain() != d.vertex_set() {
            return Err(Error::OracleMisbehavior(
                "returned coloring does not cover exactly the given vertices".into(),
            ));
        }
        if coloring.palette_size() > self.bound {
            return Err(Error::OracleMisbehavior(format!(
                "palette {} exceeds the declared bound {}",
                coloring.palette_size(),
                self.bound
            )));
        }
        if !oracle::is_valid_acyclic_coloring(d, &coloring)? {
            return Err(Error::OracleMisbehavior(
                "returned coloring has a monochromatic directed cycle".into(),
            ));
        }
        Ok(coloring)
    }

    /// Hero `c3` with bound 2, backed by the two-coloring algorithm for
    /// digraphs with transitive out-neighborhoods; directed-triangle-free
    /// digraphs without digons or induced out-stars all qualify.
    pub fn triangle_two_coloring() -> HeroOracle {
        HeroOracle::new(Pattern::c3(), 2, |d| match d.min_vertex() {
            None => Ok(Coloring::empty(2)),
            Some(v) => color_w3plus(d, v),
        })
    }

    /// Exact brute-force oracle: colors each input optimally via the
    /// dichromatic-number search, declared to stay within `bound`.
    pub fn brute_force(hero: Pattern, bound: u32, limit: usize) -> HeroOracle {
        HeroOracle::new(hero, bound, move |d| {
            Ok(oracle::dichromatic_number_with_limit(d, limit)?.witness)
        })
    }
}

/// Recursion depth is linear in the vertex count, so entry points run on a
/// dedicated thread with a large stack; inputs around a thousand vertices
/// must not exhaust it.
pub(crate) fn with_deep_stack<T, F>(f: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    const STACK_BYTES: usize = 256 << 20;
    std::thread::scope(|scope| {
        let handle = std::thread::Builder::new()
            .stack_size(STACK_BYTES)
            .spawn_scoped(scope, f)
            .expect("spawn coloring worker");
        match handle.join() {
            Ok(value) => value,
            Err(payload) => std::panic::resume_unwind(payload),
        }
    })
}
