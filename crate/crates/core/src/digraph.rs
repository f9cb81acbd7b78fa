//! The digraph kernel: representation, neighborhoods, induced subdigraphs,
//! identification (contraction), acyclicity, strong components and shortest
//! dipaths.
//!
//! Digraphs are simple (no loops, no parallel arcs) but digons — a pair of
//! opposite arcs between two vertices — are representable: contraction of an
//! arbitrary vertex set legitimately creates them, so orientedness is a class
//! property checked by the pattern recognizers rather than a structural
//! invariant of the kernel.
//!
//! Values are immutable after construction; every operation is a pure
//! function returning a new digraph.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// Vertex identifier. Ids are stable: induced subdigraphs, deletions and arc
/// additions keep the original ids.
pub type Vertex = u32;

/// Ordered set of vertices; everything iterates it in ascending id order,
/// which keeps all operations deterministic.
pub type VertexSet = std::collections::BTreeSet<Vertex>;

#[derive(Debug, Clone)]
pub struct Digraph {
    outs: BTreeMap<Vertex, VertexSet>,
    ins: BTreeMap<Vertex, VertexSet>,
    arc_count: usize,
    /// First id never used in this digraph's lineage. Contraction draws its
    /// representative from here, so repeated contractions never collide with
    /// an id that ever existed, even one deleted along the way.
    fresh: Vertex,
}

/// Result of identifying a vertex set into a single fresh vertex.
#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub result: Digraph,
    /// The fresh vertex standing for the contracted set.
    pub representative: Vertex,
    /// The original set that was identified.
    pub contracted_set: VertexSet,
    /// Total map original id -> result id: identity off the contracted set,
    /// members map to the representative.
    pub id_map: BTreeMap<Vertex, Vertex>,
}

/// A directed path: a sequence of distinct vertices joined by arcs of the
/// host digraph it was validated against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dipath {
    trace: Vec<Vertex>,
}

impl Dipath {
    /// Validates `trace` against `host`: distinct vertices, consecutive arcs.
    pub fn new(trace: Vec<Vertex>, host: &Digraph) -> Result<Self> {
        if trace.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut seen = VertexSet::new();
        for &v in &trace {
            if !host.contains_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(Error::Precondition(format!(
                    "vertex {v} repeats in the dipath"
                )));
            }
        }
        for w in trace.windows(2) {
            if !host.has_arc(w[0], w[1]) {
                return Err(Error::MissingArc(w[0], w[1]));
            }
        }
        Ok(Dipath { trace })
    }

    pub fn trace(&self) -> &[Vertex] {
        &self.trace
    }

    /// Number of arcs, i.e. the path length.
    pub fn arc_len(&self) -> usize {
        self.trace.len() - 1
    }

    pub fn first(&self) -> Vertex {
        self.trace[0]
    }

    pub fn last(&self) -> Vertex {
        *self.trace.last().expect("dipath is nonempty")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.trace.iter().copied().collect()
    }
}

impl Default for Digraph {
    fn default() -> Self {
        Self::new()
    }
}

/// Equality compares vertex and arc sets; the lineage counter is ignored, so
/// a digraph equals any reconstruction of it.
impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.outs == other.outs
    }
}

impl Eq for Digraph {}

impl Digraph {
    /// The empty digraph. A legal value: deleting every vertex yields it, and
    /// all predicates are defined on it (`is_acyclic` is true,
    /// `strong_components` is empty).
    pub fn new() -> Self {
        Digraph {
            outs: BTreeMap::new(),
            ins: BTreeMap::new(),
            arc_count: 0,
            fresh: 0,
        }
    }

    /// Digraph with vertices `0..n` and no arcs.
    pub fn with_vertices(n: u32) -> Self {
        let mut d = Digraph::new();
        for v in 0..n {
            d.insert_vertex(v);
        }
        d
    }

    /// Builds a digraph whose vertex set is exactly the arc endpoints.
    pub fn from_arcs<I: IntoIterator<Item = (Vertex, Vertex)>>(arcs: I) -> Result<Self> {
        let mut d = Digraph::new();
        for (u, v) in arcs {
            d.insert_arc(u, v)?;
        }
        Ok(d)
    }

    /// Adds a vertex during construction. Idempotent.
    pub fn insert_vertex(&mut self, v: Vertex) {
        self.outs.entry(v).or_default();
        self.ins.entry(v).or_default();
        self.fresh = self.fresh.max(v + 1);
    }

    /// Adds an arc during construction, inserting missing endpoints.
    /// Idempotent; rejects loops.
    pub fn insert_arc(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::LoopArc(u));
        }
        self.insert_vertex(u);
        self.insert_vertex(v);
        if self.outs.get_mut(&u).expect("tail present").insert(v) {
            self.ins.get_mut(&v).expect("head present").insert(u);
            self.arc_count += 1;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.outs.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_empty(&self) -> bool {
        self.outs.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.outs.contains_key(&v)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.outs.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.outs.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.outs
            .iter()
            .flat_map(|(&u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    pub fn min_vertex(&self) -> Option<Vertex> {
        self.outs.keys().next().copied()
    }

    /// Out-neighbors of a single vertex. Panics on an unknown vertex; callers
    /// hold a membership guarantee.
    pub fn outs(&self, v: Vertex) -> &VertexSet {
        self.outs
            .get(&v)
            .unwrap_or_else(|| panic!("unknown vertex {v}"))
    }

    /// In-neighbors of a single vertex. Panics on an unknown vertex.
    pub fn ins(&self, v: Vertex) -> &VertexSet {
        self.ins
            .get(&v)
            .unwrap_or_else(|| panic!("unknown vertex {v}"))
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.outs(v).len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.ins(v).len()
    }

    fn check_subset(&self, xs: &VertexSet) -> Result<()> {
        for &v in xs {
            if !self.contains_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        Ok(())
    }

    /// Out-neighborhood of a set: all heads of arcs leaving `xs`, minus `xs`.
    pub fn out_neighbors(&self, xs: &VertexSet) -> Result<VertexSet> {
        self.check_subset(xs)?;
        let mut result = VertexSet::new();
        for &x in xs {
            result.extend(self.outs(x).iter().copied());
        }
        Ok(&result - xs)
    }

    /// In-neighborhood of a set: all tails of arcs entering `xs`, minus `xs`.
    pub fn in_neighbors(&self, xs: &VertexSet) -> Result<VertexSet> {
        self.check_subset(xs)?;
        let mut result = VertexSet::new();
        for &x in xs {
            result.extend(self.ins(x).iter().copied());
        }
        Ok(&result - xs)
    }

    /// The subdigraph induced by a nonempty vertex set; ids are preserved.
    pub fn induced(&self, xs: &VertexSet) -> Result<Digraph> {
        if xs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_subset(xs)?;
        let mut d = Digraph::new();
        for &v in xs {
            d.insert_vertex(v);
        }
        for &v in xs {
            for &w in self.outs(v) {
                if xs.contains(&w) {
                    d.insert_arc(v, w)?;
                }
            }
        }
        d.fresh = self.fresh;
        Ok(d)
    }

    /// Deletes a vertex set. Deleting everything yields the empty digraph.
    pub fn delete(&self, xs: &VertexSet) -> Result<Digraph> {
        self.check_subset(xs)?;
        let keep: VertexSet = self.vertices().filter(|v| !xs.contains(v)).collect();
        if keep.is_empty() {
            let mut d = Digraph::new();
            d.fresh = self.fresh;
            return Ok(d);
        }
        self.induced(&keep)
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<Digraph> {
        self.delete(&VertexSet::from([v]))
    }

    /// Pure arc addition; idempotent when the arc is already present.
    pub fn add_arc(&self, u: Vertex, v: Vertex) -> Result<Digraph> {
        if u == v {
            return Err(Error::LoopArc(u));
        }
        if !self.contains_vertex(u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut d = self.clone();
        if d.outs.get_mut(&u).expect("tail present").insert(v) {
            d.ins.get_mut(&v).expect("head present").insert(u);
            d.arc_count += 1;
        }
        Ok(d)
    }

    /// Identifies a nonempty vertex set into one fresh vertex. The result has
    /// the arcs of `self` outside the set, an arc from the representative to
    /// every out-neighbor of the set, and an arc from every in-neighbor to
    /// the representative. Identifying a set that is not an out-module can
    /// create digons.
    pub fn contract(&self, part: &VertexSet) -> Result<ContractionResult> {
        if part.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_subset(part)?;
        let representative = self.fresh;
        let mut result = Digraph::new();
        for v in self.vertices() {
            if !part.contains(&v) {
                result.insert_vertex(v);
            }
        }
        result.insert_vertex(representative);
        for (u, v) in self.arcs() {
            if !part.contains(&u) && !part.contains(&v) {
                result.insert_arc(u, v)?;
            }
        }
        for v in self.out_neighbors(part)? {
            result.insert_arc(representative, v)?;
        }
        for v in self.in_neighbors(part)? {
            result.insert_arc(v, representative)?;
        }
        result.fresh = representative + 1;
        let mut id_map = BTreeMap::new();
        for v in self.vertices() {
            id_map.insert(v, if part.contains(&v) { representative } else { v });
        }
        Ok(ContractionResult {
            result,
            representative,
            contracted_set: part.clone(),
            id_map,
        })
    }

    /// True iff the digraph has no directed cycle; a digon counts as a cycle
    /// of length two.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: BTreeMap<Vertex, usize> =
            self.vertices().map(|v| (v, self.in_degree(v))).collect();
        let mut queue: VecDeque<Vertex> = indeg
            .iter()
            .filter(|&(_, d)| *d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut removed = 0usize;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &w in self.outs(v) {
                let d = indeg.get_mut(&w).expect("arc head exists");
                *d -= 1;
                if *d == 0 {
                    queue.push_back(w);
                }
            }
        }
        removed == self.vertex_count()
    }

    /// Acyclicity of the subdigraph induced by `part`, without materializing
    /// it. `part` must be a subset of the vertex set.
    pub(crate) fn is_acyclic_within(&self, part: &VertexSet) -> bool {
        let mut indeg: BTreeMap<Vertex, usize> = part
            .iter()
            .map(|&v| (v, self.ins(v).intersection(part).count()))
            .collect();
        let mut queue: VecDeque<Vertex> = indeg
            .iter()
            .filter(|&(_, d)| *d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut removed = 0usize;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &w in self.outs(v) {
                if let Some(d) = indeg.get_mut(&w) {
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(w);
                    }
                }
            }
        }
        removed == part.len()
    }

    /// Maximal strongly connected vertex sets, listed in a topological order
    /// of the condensation: every arc between distinct components goes from
    /// an earlier entry to a later one.
    pub fn strong_components(&self) -> Vec<VertexSet> {
        // Kosaraju: forward finish order, then reverse-graph sweeps in
        // decreasing finish time emit components source-first.
        let mut finished: Vec<Vertex> = Vec::with_capacity(self.vertex_count());
        let mut visited = VertexSet::new();
        for start in self.vertices() {
            if visited.contains(&start) {
                continue;
            }
            visited.insert(start);
            let mut stack = vec![(start, self.outs(start).iter())];
            while let Some((v, it)) = stack.last_mut() {
                if let Some(&w) = it.next() {
                    if visited.insert(w) {
                        stack.push((w, self.outs(w).iter()));
                    }
                } else {
                    finished.push(*v);
                    stack.pop();
                }
            }
        }
        let mut components = Vec::new();
        let mut assigned = VertexSet::new();
        for &start in finished.iter().rev() {
            if assigned.contains(&start) {
                continue;
            }
            let mut component = VertexSet::new();
            let mut stack = vec![start];
            assigned.insert(start);
            while let Some(v) = stack.pop() {
                component.insert(v);
                for &w in self.ins(v) {
                    if assigned.insert(w) {
                        stack.push(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    /// A directed path with the minimum number of arcs from `u` to `v`, or
    /// `None` if `v` is unreachable. `u == v` yields the length-zero path.
    pub fn shortest_dipath(&self, u: Vertex, v: Vertex) -> Result<Option<Dipath>> {
        if !self.contains_vertex(u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([u]);
        let mut reached = VertexSet::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in self.outs(x) {
                if reached.insert(y) {
                    parent.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        if !reached.contains(&v) {
            return Ok(None);
        }
        let mut trace = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[&cur];
            trace.push(cur);
        }
        trace.reverse();
        Ok(Some(Dipath::new(trace, self)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::from_arcs([(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn tt3() -> Digraph {
        Digraph::from_arcs([(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn out_neighbors_of_sets() {
        let d = Digraph::from_arcs([(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            d.out_neighbors(&VertexSet::from([0])).unwrap(),
            VertexSet::from([1])
        );
        let d = Digraph::from_arcs([(0, 2), (1, 2)]).unwrap();
        assert_eq!(
            d.out_neighbors(&VertexSet::from([0, 1])).unwrap(),
            VertexSet::from([2])
        );
        assert_eq!(
            c3().out_neighbors(&VertexSet::from([0, 1, 2])).unwrap(),
            VertexSet::new()
        );
        assert_eq!(
            c3().out_neighbors(&VertexSet::from([7])),
            Err(Error::UnknownVertex(7))
        );
    }

    #[test]
    fn in_neighbors_mirror() {
        let d = Digraph::from_arcs([(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            d.in_neighbors(&VertexSet::from([2])).unwrap(),
            VertexSet::from([1])
        );
        assert_eq!(
            d.in_neighbors(&VertexSet::from([0])).unwrap(),
            VertexSet::new()
        );
    }

    #[test]
    fn induced_subdigraphs() {
        let ind = tt3().induced(&VertexSet::from([1, 2])).unwrap();
        assert_eq!(ind, Digraph::from_arcs([(1, 2)]).unwrap());
        let ind = c3().induced(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(ind, Digraph::from_arcs([(0, 1)]).unwrap());
        assert_eq!(c3().induced(&c3().vertex_set()).unwrap(), c3());
        assert_eq!(c3().induced(&VertexSet::new()), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn delete_cases() {
        let del = c3().delete(&VertexSet::from([2])).unwrap();
        assert_eq!(del, Digraph::from_arcs([(0, 1)]).unwrap());
        let single = Digraph::with_vertices(1);
        assert!(single.delete(&VertexSet::from([0])).unwrap().is_empty());
        assert_eq!(tt3().delete(&VertexSet::new()).unwrap(), tt3());
    }

    #[test]
    fn add_arc_cases() {
        let d = Digraph::from_arcs([(0, 1)]).unwrap();
        let with_digon = d.add_arc(1, 0).unwrap();
        assert!(with_digon.has_arc(0, 1) && with_digon.has_arc(1, 0));
        assert_eq!(d.add_arc(0, 1).unwrap(), d);
        let e = Digraph::with_vertices(3).add_arc(0, 2).unwrap();
        assert_eq!(e.arc_count(), 1);
        assert_eq!(d.add_arc(0, 0), Err(Error::LoopArc(0)));
    }

    #[test]
    fn contract_c3_pair_makes_digon() {
        let r = c3().contract(&VertexSet::from([0, 1])).unwrap();
        let x = r.representative;
        assert!(x >= 3);
        assert_eq!(r.result.vertex_set(), VertexSet::from([2, x]));
        assert!(r.result.has_arc(x, 2) && r.result.has_arc(2, x));
        assert_eq!(r.result.arc_count(), 2);
        assert_eq!(r.id_map[&0], x);
        assert_eq!(r.id_map[&2], 2);
    }

    #[test]
    fn contract_out_module() {
        let d = Digraph::from_arcs([(0, 2), (1, 2)]).unwrap();
        let r = d.contract(&VertexSet::from([0, 1])).unwrap();
        let x = r.representative;
        assert_eq!(r.result.arcs().collect::<Vec<_>>(), vec![(x, 2)]);
    }

    #[test]
    fn contract_singleton_relabels() {
        let d = tt3();
        let r = d.contract(&VertexSet::from([1])).unwrap();
        let x = r.representative;
        assert_eq!(r.result.vertex_set(), VertexSet::from([0, 2, x]));
        assert!(r.result.has_arc(0, x) && r.result.has_arc(0, 2) && r.result.has_arc(x, 2));
        assert_eq!(r.result.arc_count(), 3);
    }

    #[test]
    fn repeated_contractions_never_collide() {
        let d = Digraph::from_arcs([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r1 = d.contract(&VertexSet::from([0, 1])).unwrap();
        let r2 = r1.result.contract(&VertexSet::from([2, 3])).unwrap();
        assert_ne!(r1.representative, r2.representative);
        assert!(!d.contains_vertex(r1.representative));
        assert!(!r1.result.contains_vertex(r2.representative));
    }

    #[test]
    fn acyclicity() {
        assert!(tt3().is_acyclic());
        assert!(!c3().is_acyclic());
        let digon = Digraph::from_arcs([(0, 1), (1, 0)]).unwrap();
        assert!(!digon.is_acyclic());
        assert!(Digraph::new().is_acyclic());
    }

    #[test]
    fn strong_components_ordering() {
        assert_eq!(c3().strong_components(), vec![VertexSet::from([0, 1, 2])]);
        let d = Digraph::from_arcs([(0, 1)]).unwrap();
        assert_eq!(
            d.strong_components(),
            vec![VertexSet::from([0]), VertexSet::from([1])]
        );
        let d = Digraph::from_arcs([(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(
            d.strong_components(),
            vec![VertexSet::from([0, 1]), VertexSet::from([2])]
        );
        assert!(Digraph::new().strong_components().is_empty());
    }

    #[test]
    fn shortest_dipaths() {
        let c4 = Digraph::from_arcs([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = c4.shortest_dipath(0, 2).unwrap().unwrap();
        assert_eq!(p.trace(), &[0, 1, 2]);
        let p = c4.shortest_dipath(0, 0).unwrap().unwrap();
        assert_eq!(p.trace(), &[0]);
        assert_eq!(p.arc_len(), 0);
        let d = Digraph::from_arcs([(0, 1)]).unwrap();
        assert!(d.shortest_dipath(1, 0).unwrap().is_none());
        assert_eq!(d.shortest_dipath(5, 0), Err(Error::UnknownVertex(5)));
    }

    #[test]
    fn dipath_validation() {
        let c4 = Digraph::from_arcs([(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(Dipath::new(vec![0, 1, 2], &c4).is_ok());
        assert_eq!(
            Dipath::new(vec![0, 2], &c4),
            Err(Error::MissingArc(0, 2))
        );
        assert!(Dipath::new(vec![0, 1, 2, 3, 0], &c4).is_err());
        assert_eq!(Dipath::new(vec![], &c4), Err(Error::EmptyVertexSet));
    }
}
