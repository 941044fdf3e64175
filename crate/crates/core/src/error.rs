use thiserror::Error;

/// Library-wide error type.
///
/// Variants are grouped by how callers react to them: `Capacity` maps to a
/// resource limit, everything else is a malformed input or a broken contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("family parameter out of range: {0}")]
    FamilyParameter(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("token count k={k} out of range for n={n} (need 1 <= k <= n-1)")]
    TokenParameter { n: usize, k: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("permutation degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("element cap {cap} exceeded while enumerating automorphisms")]
    ElementCap { cap: u64 },

    #[error("graph6 parse error: {0}")]
    Graph6(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("vertices {a} and {b} are in different components")]
    Disconnected { a: usize, b: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
