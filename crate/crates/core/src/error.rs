use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::bitset::CAPACITY)]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("colouring has {colouring} entries but graph has {graph} vertices")]
    SizeMismatch { graph: usize, colouring: usize },
    #[error("colour of vertex {0} is 0; colours must be positive")]
    NonPositiveColour(usize),
    #[error("colouring is not proper: edge {0}-{1} is monochromatic")]
    ImproperColouring(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("invalid stable cover: {0}")]
    InvalidCover(String),
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExhausted { limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
