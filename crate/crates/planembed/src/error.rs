use thiserror::Error;

/// Errors surfaced by graph construction, analysis, solving and validation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("rotation list of {0} mentions unknown vertex {1}")]
    UnknownVertex(String, String),
    #[error("asymmetric rotation: {1} appears in rotation({0}) but not vice versa")]
    AsymmetricRotation(String, String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("outer face not found for the given outer specification")]
    OuterFaceNotFound,
    #[error("rotation system does not describe a plane embedding (Euler check failed: v={v} e={e} f={f} c={c})")]
    NonPlanarRotation { v: usize, e: usize, f: usize, c: usize },
    #[error("faces are not adjacent (boundary intersection has no edges)")]
    FacesNotAdjacent,
    #[error("face boundary intersection is not a simple path")]
    IntersectionDisconnected,
    #[error("instance has {0} vertices, exceeding the brute-force cap of {1}")]
    InstanceTooLarge(usize, usize),
    #[error("face {0} boundary is not a simple cycle")]
    FacesNotSimple(usize),
    #[error("bounded face {0} has {1} edges; graph is not triangulated")]
    NotTriangulated(usize, usize),
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("outer face boundary is not a simple cycle")]
    OuterNotSimpleCycle,
    #[error("boundary placement does not match the outer cycle: {0}")]
    PlacementMismatch(String),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("outer cycle has {0} vertices; at least 3 required")]
    CycleTooShort(usize),
    #[error("no coordinate given for vertex {0}")]
    MissingCoordinate(String),
    #[error("degenerate face {0} in orientation check")]
    DegenerateFace(usize),
    #[error("could not place sample point off all edges after retry budget")]
    SampleOnEdge,
    #[error("invalid weight scheme: {0}")]
    InvalidWeightScheme(String),
    #[error("invalid delta {0}: must satisfy 0 <= delta < 1")]
    InvalidDelta(f64),
    #[error("cannot triangulate face: no admissible diagonal")]
    NoDiagonal,
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
