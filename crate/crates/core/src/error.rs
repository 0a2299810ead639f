use thiserror::Error;

use crate::coloring::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("trivial graph")]
    TrivialGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not split")]
    NotSplit,
    #[error("sigma={0} out of scope: only stretch index 2 is classified")]
    OutOfScope(u8),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("improper coloring: {0}")]
    ImproperColoring(Violation),
    #[error("degenerate core: attach vertex {0} has no edge colors")]
    DegenerateCore(usize),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("oracle guard exceeded: {0}")]
    OracleGuard(String),
    #[error("unknown instance {0:?}")]
    UnknownInstance(String),
    #[error("generator: {0}")]
    Generator(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("coloring does not match graph: {0}")]
    Mismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}
