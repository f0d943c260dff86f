use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime dimension")]
    NotPrime(u32),
    #[error("operators have different dimensions (q={left} vs q={right})")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("operators have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("x and z exponent vectors have different lengths ({x} vs {z})")]
    RaggedExponents { x: usize, z: usize },
    #[error("operator length must be at least 1")]
    EmptyOperator,
    #[error("exponent {value} is outside 0..{q}")]
    ExponentOutOfRange { value: u32, q: u32 },
    #[error("operator of length {len} does not fit in length {n}")]
    OperatorTooLong { len: usize, n: usize },
    #[error("qudit index {index} out of range for length {n}")]
    QuditOutOfRange { index: usize, n: usize },
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("operators {first} and {second} do not commute")]
    NonCommuting { first: usize, second: usize },
    #[error("operators {first} and {second} do not commute on every qudit")]
    NotQuditwiseCommuting { first: usize, second: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {vertices} vertices, exact coloring is capped at {cap}")]
    GraphTooLarge { vertices: usize, cap: usize },
    #[error("matrix dimension {dim} exceeds the cap of {cap}")]
    MatrixTooLarge { dim: u64, cap: u64 },
    #[error("cannot draw {requested} distinct non-identity operators, only {available} exist")]
    SetTooLarge { requested: u64, available: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
