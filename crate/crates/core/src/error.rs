use crate::digraph::Vertex;

/// Error type shared by every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("loop arc at vertex {0}")]
    LoopArc(Vertex),
    #[error("arc ({0}, {1}) is not present")]
    MissingArc(Vertex, Vertex),
    #[error("vertices {0:?} do not induce a transitive tournament")]
    NotTransitiveTournament(Vec<Vertex>),
    #[error("out-neighborhood of vertex {0} does not induce a transitive tournament")]
    NonTransitiveOutNeighborhood(Vertex),
    /// The input digraph contains an induced copy of a forbidden pattern.
    /// `witness` lists the host vertices in pattern-vertex order.
    #[error("induced {pattern} on vertices {witness:?}")]
    ClassViolation { pattern: String, witness: Vec<Vertex> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("sub-oracle breached its contract: {0}")]
    OracleMisbehavior(String),
    #[error("{size} vertices exceed the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("coloring is not total: vertex {0} has no color")]
    PartialColoring(Vertex),
    #[error("color {color} lies outside the palette 1..={palette}")]
    ColorOutOfPalette { color: u32, palette: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
