//! Induced-pattern recognition and the structural machinery around it:
//! class membership for digraphs avoiding a list of forbidden induced
//! subdigraphs, the functional out-digraph sending each non-sink to the
//! source of its out-neighborhood tournament, and out-modules.

use std::collections::BTreeMap;

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// A named small digraph used as a forbidden induced subdigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    graph: Digraph,
}

impl Pattern {
    /// A user pattern; the graph must be nonempty.
    pub fn new(name: impl Into<String>, graph: Digraph) -> Result<Self> {
        if graph.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        Ok(Pattern {
            name: name.into(),
            graph,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    /// Two opposite arcs on one vertex pair.
    pub fn digon() -> Pattern {
        Pattern {
            name: "digon".into(),
            graph: Digraph::from_arcs([(0, 1), (1, 0)]).expect("digon"),
        }
    }

    /// Two isolated vertices.
    pub fn empty_pair() -> Pattern {
        Pattern {
            name: "kbar2".into(),
            graph: Digraph::with_vertices(2),
        }
    }

    /// Out-star with two leaves: 0 -> 1, 0 -> 2, leaves nonadjacent.
    pub fn s2_plus() -> Pattern {
        Pattern {
            name: "s2+".into(),
            graph: Digraph::from_arcs([(0, 1), (0, 2)]).expect("s2+"),
        }
    }

    /// In-star with two leaves: 1 -> 0, 2 -> 0.
    pub fn s2_minus() -> Pattern {
        Pattern {
            name: "s2-".into(),
            graph: Digraph::from_arcs([(1, 0), (2, 0)]).expect("s2-"),
        }
    }

    /// Directed triangle.
    pub fn c3() -> Pattern {
        Pattern {
            name: "c3".into(),
            graph: Digraph::from_arcs([(0, 1), (1, 2), (2, 0)]).expect("c3"),
        }
    }

    /// Transitive tournament on `k >= 1` vertices, named `tt<k>`.
    pub fn trans_tour(k: u32) -> Result<Pattern> {
        if k < 1 {
            return Err(Error::Precondition("tt requires k >= 1".into()));
        }
        let mut g = Digraph::with_vertices(k);
        for i in 0..k {
            for j in (i + 1)..k {
                g.insert_arc(i, j)?;
            }
        }
        Ok(Pattern {
            name: format!("tt{k}"),
            graph: g,
        })
    }

    /// Hub dominating a directed triangle: 0 -> 1,2,3 and 1 -> 2 -> 3 -> 1.
    pub fn w3_plus() -> Pattern {
        Pattern {
            name: "w3+".into(),
            graph: Digraph::from_arcs([(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])
                .expect("w3+"),
        }
    }

    /// Hub dominated by a directed triangle: 1,2,3 -> 0 and 1 -> 2 -> 3 -> 1.
    pub fn w3_minus() -> Pattern {
        Pattern {
            name: "w3-".into(),
            graph: Digraph::from_arcs([(1, 0), (2, 0), (3, 0), (1, 2), (2, 3), (3, 1)])
                .expect("w3-"),
        }
    }

    /// The four-vertex path with three alternatingly oriented arcs:
    /// 0 -> 1 <- 2 -> 3.
    pub fn p111() -> Pattern {
        Pattern {
            name: "p111".into(),
            graph: Digraph::from_arcs([(0, 1), (2, 1), (2, 3)]).expect("p111"),
        }
    }

    /// The unique strong tournament on four vertices.
    pub fn k4_strong() -> Pattern {
        Pattern {
            name: "k4s".into(),
            graph: Digraph::from_arcs([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
                .expect("k4s"),
        }
    }

    /// Resolves a stable catalog name: `digon`, `kbar2`, `s2+`, `s2-`, `c3`,
    /// `w3+`, `w3-`, `tt<k>`, `p111`, `k4s`.
    pub fn by_name(name: &str) -> Result<Pattern> {
        match name {
            "digon" => Ok(Pattern::digon()),
            "kbar2" => Ok(Pattern::empty_pair()),
            "s2+" => Ok(Pattern::s2_plus()),
            "s2-" => Ok(Pattern::s2_minus()),
            "c3" => Ok(Pattern::c3()),
            "w3+" => Ok(Pattern::w3_plus()),
            "w3-" => Ok(Pattern::w3_minus()),
            "p111" => Ok(Pattern::p111()),
            "k4s" => Ok(Pattern::k4_strong()),
            _ => {
                if let Some(k) = name.strip_prefix("tt") {
                    let k: u32 = k.parse().map_err(|_| {
                        Error::Precondition(format!("unknown pattern name `{name}`"))
                    })?;
                    Pattern::trans_tour(k)
                } else {
                    Err(Error::Precondition(format!(
                        "unknown pattern name `{name}`"
                    )))
                }
            }
        }
    }

    /// The full built-in catalog, with `tt3` standing in for the transitive
    /// tournament family.
    pub fn catalog() -> Vec<Pattern> {
        vec![
            Pattern::digon(),
            Pattern::empty_pair(),
            Pattern::s2_plus(),
            Pattern::s2_minus(),
            Pattern::c3(),
            Pattern::trans_tour(3).expect("tt3"),
            Pattern::w3_plus(),
            Pattern::w3_minus(),
            Pattern::p111(),
            Pattern::k4_strong(),
        ]
    }
}

/// A class of digraphs defined by a nonempty list of forbidden induced
/// patterns.
#[derive(Debug, Clone)]
pub struct ClassSpec {
    forbidden: Vec<Pattern>,
}

impl ClassSpec {
    pub fn new(forbidden: Vec<Pattern>) -> Result<Self> {
        if forbidden.is_empty() {
            return Err(Error::Precondition(
                "a class spec needs at least one forbidden pattern".into(),
            ));
        }
        Ok(ClassSpec { forbidden })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.forbidden
    }

    /// Parses a comma-separated list of catalog names.
    pub fn parse(names: &str) -> Result<Self> {
        let forbidden = names
            .split(',')
            .map(|s| Pattern::by_name(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        ClassSpec::new(forbidden)
    }

    /// Oriented graphs whose out-neighborhoods induce transitive tournaments.
    pub fn out_transitive() -> Self {
        ClassSpec {
            forbidden: vec![Pattern::digon(), Pattern::s2_plus(), Pattern::w3_plus()],
        }
    }

    /// Oriented graphs with tournament out-neighborhoods and triangle-free
    /// in-neighborhoods.
    pub fn sink_wheel_free() -> Self {
        ClassSpec {
            forbidden: vec![Pattern::digon(), Pattern::s2_plus(), Pattern::w3_minus()],
        }
    }

    /// Directed-triangle-free oriented graphs with tournament
    /// out-neighborhoods.
    pub fn triangle_free_out_tournament() -> Self {
        ClassSpec {
            forbidden: vec![Pattern::digon(), Pattern::s2_plus(), Pattern::c3()],
        }
    }

    /// Oriented graphs without transitive triangles and without the
    /// alternating four-vertex path.
    pub fn alternating_path_free() -> Self {
        ClassSpec {
            forbidden: vec![
                Pattern::digon(),
                Pattern::trans_tour(3).expect("tt3"),
                Pattern::p111(),
            ],
        }
    }

    /// Oriented graphs with tournament out-neighborhoods, for the
    /// shortest-dipath partition.
    pub fn out_tournament() -> Self {
        ClassSpec {
            forbidden: vec![Pattern::digon(), Pattern::s2_plus()],
        }
    }

    /// Locally complete oriented graphs additionally excluding `hero`.
    pub fn locally_complete(hero: Pattern) -> Self {
        ClassSpec {
            forbidden: vec![
                Pattern::digon(),
                Pattern::s2_plus(),
                Pattern::s2_minus(),
                hero,
            ],
        }
    }
}

/// An injective map from pattern vertices to host vertices under which arcs
/// map to arcs and non-arcs to non-arcs, in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: BTreeMap<Vertex, Vertex>,
}

impl Embedding {
    pub fn map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.map
    }

    pub fn get(&self, pattern_vertex: Vertex) -> Option<Vertex> {
        self.map.get(&pattern_vertex).copied()
    }

    /// Host vertices hit by the embedding.
    pub fn image(&self) -> VertexSet {
        self.map.values().copied().collect()
    }

    /// Host vertices listed in ascending pattern-vertex order.
    pub fn host_tuple(&self) -> Vec<Vertex> {
        self.map.values().copied().collect()
    }

    /// Re-checks the induced-embedding condition; used by tests.
    pub fn verify(&self, pattern: &Pattern, host: &Digraph) -> bool {
        let pg = pattern.graph();
        if self.map.len() != pg.vertex_count() {
            return false;
        }
        if self.image().len() != self.map.len() {
            return false;
        }
        for (&a, &ha) in &self.map {
            if !pg.contains_vertex(a) || !host.contains_vertex(ha) {
                return false;
            }
            for (&b, &hb) in &self.map {
                if a == b {
                    continue;
                }
                if pg.has_arc(a, b) != host.has_arc(ha, hb) {
                    return false;
                }
            }
        }
        true
    }
}

/// A forbidden pattern found inside a host digraph.
#[derive(Debug, Clone)]
pub struct Violation {
    pub pattern: String,
    pub embedding: Embedding,
}

impl Violation {
    pub fn to_error(&self) -> Error {
        Error::ClassViolation {
            pattern: self.pattern.clone(),
            witness: self.embedding.host_tuple(),
        }
    }
}

struct Search<'a> {
    host: &'a Digraph,
    pattern: &'a Digraph,
    pattern_vertices: Vec<Vertex>,
    /// Slot that must map to a pinned host vertex, if any.
    pin: Option<(usize, Vertex)>,
    assigned: Vec<Vertex>,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let slot = self.assigned.len();
        if slot == self.pattern_vertices.len() {
            return true;
        }
        let pv = self.pattern_vertices[slot];
        if let Some((pin_slot, pinned)) = self.pin {
            if pin_slot == slot {
                return self.try_host(slot, pv, pinned);
            }
        }
        // Restrict candidates through the first already-assigned slot that is
        // adjacent to `pv` in the pattern; consistency is re-checked in full
        // either way, so this only prunes.
        let earlier = &self.pattern_vertices[..slot];
        if let Some(j) = earlier.iter().position(|&q| self.pattern.has_arc(q, pv)) {
            let candidates: Vec<Vertex> = self.host.outs(self.assigned[j]).iter().copied().collect();
            for h in candidates {
                if self.try_host(slot, pv, h) {
                    return true;
                }
            }
        } else if let Some(j) = earlier.iter().position(|&q| self.pattern.has_arc(pv, q)) {
            let candidates: Vec<Vertex> = self.host.ins(self.assigned[j]).iter().copied().collect();
            for h in candidates {
                if self.try_host(slot, pv, h) {
                    return true;
                }
            }
        } else {
            let candidates: Vec<Vertex> = self.host.vertices().collect();
            for h in candidates {
                if self.try_host(slot, pv, h) {
                    return true;
                }
            }
        }
        false
    }

    fn try_host(&mut self, slot: usize, pv: Vertex, h: Vertex) -> bool {
        if self.assigned.contains(&h) {
            return false;
        }
        if self.host.out_degree(h) < self.pattern.out_degree(pv)
            || self.host.in_degree(h) < self.pattern.in_degree(pv)
        {
            return false;
        }
        for j in 0..slot {
            let q = self.pattern_vertices[j];
            let hq = self.assigned[j];
            if self.pattern.has_arc(q, pv) != self.host.has_arc(hq, h)
                || self.pattern.has_arc(pv, q) != self.host.has_arc(h, hq)
            {
                return false;
            }
        }
        self.assigned.push(h);
        if self.run() {
            return true;
        }
        self.assigned.pop();
        false
    }
}

fn search(host: &Digraph, pattern: &Pattern, pin: Option<(usize, Vertex)>) -> Option<Embedding> {
    let pg = pattern.graph();
    if pg.vertex_count() > host.vertex_count() {
        return None;
    }
    let pattern_vertices: Vec<Vertex> = pg.vertices().collect();
    let mut s = Search {
        host,
        pattern: pg,
        assigned: Vec::with_capacity(pattern_vertices.len()),
        pattern_vertices,
        pin,
    };
    if s.run() {
        let map = s
            .pattern_vertices
            .iter()
            .copied()
            .zip(s.assigned.iter().copied())
            .collect();
        Some(Embedding { map })
    } else {
        None
    }
}

/// Finds an induced copy of `pattern` in `host` by exhaustive backtracking
/// over injective assignments, host vertices scanned in ascending id order,
/// so the lexicographically smallest host tuple is returned.
pub fn find_induced(host: &Digraph, pattern: &Pattern) -> Option<Embedding> {
    search(host, pattern, None)
}

/// Like [`find_induced`] but only reports copies whose image contains `v`.
/// Used by the incremental generator to re-check just-added vertices.
pub fn find_induced_containing(host: &Digraph, pattern: &Pattern, v: Vertex) -> Option<Embedding> {
    if !host.contains_vertex(v) {
        return None;
    }
    let k = pattern.graph().vertex_count();
    (0..k).find_map(|slot| search(host, pattern, Some((slot, v))))
}

/// First forbidden pattern of `spec` found in `d`, if any.
pub fn find_violation(d: &Digraph, spec: &ClassSpec) -> Option<Violation> {
    spec.patterns().iter().find_map(|p| {
        find_induced(d, p).map(|embedding| Violation {
            pattern: p.name().to_string(),
            embedding,
        })
    })
}

/// True iff `d` contains no induced copy of any pattern in `spec`.
pub fn in_class(d: &Digraph, spec: &ClassSpec) -> bool {
    find_violation(d, spec).is_none()
}

/// Errors with a witness embedding when `d` is outside the class.
pub fn ensure_in_class(d: &Digraph, spec: &ClassSpec) -> Result<()> {
    match find_violation(d, spec) {
        None => Ok(()),
        Some(v) => Err(v.to_error()),
    }
}

/// True iff `d[t]` is a transitive tournament: exactly one arc per vertex
/// pair and no directed cycle. The empty set does not qualify here; callers
/// treating the empty case specially check it themselves.
pub fn is_transitive_tournament(d: &Digraph, t: &VertexSet) -> Result<bool> {
    for &v in t {
        if !d.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    if t.is_empty() {
        return Ok(false);
    }
    for &a in t {
        for &b in t.range((std::ops::Bound::Excluded(a), std::ops::Bound::Unbounded)) {
            if d.has_arc(a, b) == d.has_arc(b, a) {
                return Ok(false); // nonadjacent pair or digon
            }
        }
    }
    Ok(d.is_acyclic_within(t))
}

/// The unique vertex of the transitive tournament `d[t]` beating all others.
pub fn transitive_source(d: &Digraph, t: &VertexSet) -> Result<Vertex> {
    if t.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if !is_transitive_tournament(d, t)? {
        return Err(Error::NotTransitiveTournament(t.iter().copied().collect()));
    }
    let want = t.len() - 1;
    t.iter()
        .copied()
        .find(|&v| d.outs(v).intersection(t).count() == want)
        .ok_or_else(|| Error::Inconsistency("transitive tournament without a source".into()))
}

/// The spanning functional subdigraph mapping each vertex of positive
/// out-degree to the source of the transitive tournament induced by its
/// out-neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalOutGraph {
    f: BTreeMap<Vertex, Vertex>,
}

impl FunctionalOutGraph {
    pub fn f_arc(&self, x: Vertex) -> Option<Vertex> {
        self.f.get(&x).copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.f.iter().map(|(&x, &y)| (x, y))
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }
}

/// The functional out-arc of a single vertex: the source of the transitive
/// tournament induced by its out-neighborhood, or `None` for a sink. Errors
/// when the out-neighborhood does not induce a transitive tournament.
pub fn f_arc(d: &Digraph, x: Vertex) -> Result<Option<Vertex>> {
    if !d.contains_vertex(x) {
        return Err(Error::UnknownVertex(x));
    }
    let outs = d.outs(x);
    if outs.is_empty() {
        return Ok(None);
    }
    transitive_source(d, outs)
        .map(Some)
        .map_err(|_| Error::NonTransitiveOutNeighborhood(x))
}

/// Builds the full functional out-digraph, checking every out-neighborhood.
pub fn build_f(d: &Digraph) -> Result<FunctionalOutGraph> {
    let mut f = BTreeMap::new();
    for x in d.vertices() {
        if let Some(y) = f_arc(d, x)? {
            f.insert(x, y);
        }
    }
    Ok(FunctionalOutGraph { f })
}

/// True iff every member of `m` has the same out-neighborhood outside `m`.
pub fn is_out_module(d: &Digraph, m: &VertexSet) -> Result<bool> {
    if m.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    for &v in m {
        if !d.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let mut members = m.iter();
    let first = *members.next().expect("nonempty");
    let reference: VertexSet = d.outs(first).difference(m).copied().collect();
    for &v in members {
        let outside: VertexSet = d.outs(v).difference(m).copied().collect();
        if outside != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Follows the functional out-arc from the smallest vertex of `s` until a
/// vertex repeats and returns the vertex trace of the directed cycle found,
/// rotated to start at its smallest vertex. Every vertex of `s` must have
/// its functional out-arc inside `s`.
pub fn find_f_cycle(d: &Digraph, s: &VertexSet) -> Result<Vec<Vertex>> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut f = BTreeMap::new();
    for &x in s {
        match f_arc(d, x)? {
            Some(y) if s.contains(&y) => {
                f.insert(x, y);
            }
            _ => {
                return Err(Error::Precondition(format!(
                    "vertex {x} has no functional out-arc inside the set"
                )));
            }
        }
    }
    let mut walk = vec![*s.iter().next().expect("nonempty")];
    let mut seen: BTreeMap<Vertex, usize> = BTreeMap::from([(walk[0], 0)]);
    loop {
        let next = f[walk.last().expect("nonempty walk")];
        if let Some(&start) = seen.get(&next) {
            let mut cycle = walk[start..].to_vec();
            let min_pos = cycle
                .iter()
                .enumerate()
                .min_by_key(|&(_, v)| v)
                .map(|(i, _)| i)
                .expect("cycle is nonempty");
            cycle.rotate_left(min_pos);
            return Ok(cycle);
        }
        seen.insert(next, walk.len());
        walk.push(next);
    }
}

/// The set of module vertices reachable from `v` in exactly two steps through
/// a non-module vertex. When the host lies in the class with transitive
/// out-neighborhoods, this set induces a (possibly empty) transitive
/// tournament; debug builds assert that.
pub fn two_step_set(d: &Digraph, m: &VertexSet, v: Vertex) -> Result<VertexSet> {
    if !d.contains_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    if m.contains(&v) {
        return Err(Error::Precondition(format!(
            "vertex {v} lies inside the module"
        )));
    }
    if !is_out_module(d, m)? {
        return Err(Error::Precondition(
            "the given set is not an out-module".into(),
        ));
    }
    let mut t = VertexSet::new();
    for &u in d.outs(v) {
        if m.contains(&u) {
            continue;
        }
        for &w in d.outs(u) {
            if m.contains(&w) {
                t.insert(w);
            }
        }
    }
    #[cfg(debug_assertions)]
    {
        if !t.is_empty() && is_oriented(d) && out_neighborhoods_transitive(d) {
            debug_assert!(
                is_transitive_tournament(d, &t).unwrap_or(false),
                "two-step set {t:?} of module {m:?} at {v} is not a transitive tournament"
            );
        }
    }
    Ok(t)
}

/// No digon anywhere.
pub fn is_oriented(d: &Digraph) -> bool {
    d.arcs().all(|(u, v)| !d.has_arc(v, u))
}

/// Every out-neighborhood induces a transitive tournament. Together with
/// [`is_oriented`] this is the neighborhood-local equivalent of forbidding
/// {digon, s2+, w3+}; the equivalence is cross-checked in the test suite.
pub fn out_neighborhoods_transitive(d: &Digraph) -> bool {
    d.vertices().all(|v| {
        d.outs(v).is_empty() || is_transitive_tournament(d, d.outs(v)).unwrap_or(false)
    })
}

/// Every out-neighborhood induces a tournament (any orientation).
pub fn out_neighborhoods_tournament(d: &Digraph) -> bool {
    d.vertices().all(|v| {
        let outs = d.outs(v);
        outs.iter().all(|&a| {
            outs.range((std::ops::Bound::Excluded(a), std::ops::Bound::Unbounded))
                .all(|&b| d.has_arc(a, b) != d.has_arc(b, a))
        })
    })
}

/// No in-neighborhood contains a directed triangle. Only meaningful on
/// oriented digraphs, where a triangle of cyclic arcs is automatically
/// induced.
pub fn in_neighborhoods_triangle_free(d: &Digraph) -> bool {
    d.vertices().all(|v| {
        let ins: Vec<Vertex> = d.ins(v).iter().copied().collect();
        for (i, &a) in ins.iter().enumerate() {
            for &b in &ins[i + 1..] {
                for &c in &ins {
                    if c == a || c == b {
                        continue;
                    }
                    if d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a) {
                        return false;
                    }
                }
            }
        }
        true
    })
}
