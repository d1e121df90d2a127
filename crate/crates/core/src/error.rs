use thiserror::Error;

/// Everything that can go wrong while building or checking a structure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not planar")]
    NonPlanar,

    #[error("graph has {0} vertices, at least 3 are required")]
    TooSmall(usize),

    #[error("bad roots: {0}")]
    BadRoots(String),

    #[error("root {0} does not lie on the outer face")]
    RootNotOnOuterFace(usize),

    #[error("broken frame: tree path from vertex {0} never meets the boundary")]
    BrokenFrame(usize),

    #[error("no trichromatic internal face exists")]
    NoTrichromaticFace,

    #[error("layered width mismatch: declared {declared}, measured {measured}")]
    WidthMismatch { declared: usize, measured: usize },

    #[error("host layout uses {0} queues, a 1-queue layout is required")]
    NotAOneQueueHost(usize),

    #[error("edge ({0}, {1}) is not present in the blowup of the host")]
    NotABlowup(usize, usize),

    #[error("host layout does not match the quotient: {0}")]
    HostMismatch(String),

    #[error("invalid tree-decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("bad witness for edge ({0}, {1}): {2}")]
    BadWitness(usize, usize, String),

    #[error("input too large for exhaustive search: {size} > {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("bad generator parameters: {0}")]
    BadParameters(String),

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
