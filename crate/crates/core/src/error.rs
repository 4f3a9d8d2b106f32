use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operator dimension mismatch: {0} vs {1} qubits")]
    DimensionMismatch(usize, usize),
    #[error("invalid Pauli text at position {0}: {1:?}")]
    InvalidPauliChar(usize, char),
    #[error("empty Pauli string")]
    EmptyPauli,
    #[error("operator is not Hermitian")]
    NonHermitian,
    #[error("Z-checks and X-checks do not commute (Hz * Hx^T != 0)")]
    CommutationViolation,
    #[error("generators are not independent: rank {rank} < {needed}")]
    RankDeficient { rank: usize, needed: usize },
    #[error("search budget exceeded; best upper bound so far: {best:?}")]
    BudgetExceeded { best: Option<u32> },
    #[error("gate supports overlap within a layer")]
    OverlappingSupports,
    #[error("invalid lattice dimensions Lx={0}, Ly={1} (need Lx >= 2, Ly >= 1)")]
    InvalidDimensions(usize, usize),
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("vertex {vertex} has degree {degree}, need at least 2")]
    DegreeViolation { vertex: usize, degree: usize },
    #[error("no edge between vertices {0} and {1}")]
    EdgeMissing(usize, usize),
    #[error("state vector is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),
    #[error("invalid convex decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("QFI {qfi} exceeds the proven bound {bound}; this indicates an implementation bug")]
    BoundViolation { qfi: f64, bound: f64 },
    #[error("Hamiltonian term {index}: {reason}")]
    InvalidTerm { index: usize, reason: String },
    #[error("X/Z sector distance is only defined for CSS codes")]
    NotCss,
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
