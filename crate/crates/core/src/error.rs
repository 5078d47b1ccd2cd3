use thiserror::Error;

/// Errors across the crate. Validation findings that are data rather than
/// failures (degree-rule violations, reducibility certificates, inconclusive
/// bounded searches) are returned as ordinary values, not through here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed rational literal `{0}`")]
    BadRational(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("malformed group table: {0}")]
    BadGroupTable(String),

    #[error("group element out of range: index {index} in a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("syllable refers to data that does not exist in this graph of groups: {0}")]
    ForeignSyllable(String),

    #[error("word is elliptic; it has no crossing vector")]
    EllipticWord,

    #[error("rescaling factor must be positive")]
    NonPositiveScale,

    #[error("invalid thistle configuration: {0}")]
    InvalidConfiguration(String),

    #[error("metric does not match the graph: {0}")]
    BadMetric(String),

    #[error("simplex coordinates invalid: {0}")]
    BadSimplexCoords(String),

    #[error("automorphism specification invalid: {0}")]
    BadAutomorphism(String),

    #[error("generator dictionary incomplete: missing image for {0}")]
    IncompleteDictionary(String),

    #[error("subgraph is not a forest: component containing `{0}` has a cycle")]
    NotAForest(String),

    #[error("collapse would remove the entire graph")]
    NotProper,

    #[error("ball oracle inconclusive at radius {0}; increase the radius")]
    OracleInconclusive(String),

    #[error("feasibility floor {floor} is too large for a simplex on {dim} edges")]
    InfeasibleFloor { floor: String, dim: usize },

    #[error("too many variables for exact elimination: {0} (limit 6)")]
    TooManyVariables(usize),

    #[error("too many edge orbits to scan: {0} (limit 20)")]
    TooManyOrbits(usize),

    #[error("malformed word `{0}`")]
    BadWord(String),

    #[error("malformed simplicial path: {0}")]
    BadPath(String),

    #[error("{0}")]
    Io(String),
}
