use thiserror::Error;

use crate::polygon::Diagonal;

pub type Result<T, E = FriezeError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    PolygonTooSmall(usize),

    #[error("vertex {vertex} is out of range for a {n}-gon")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{{{0}, {0}}} is not a diagonal: endpoints must differ")]
    DegenerateDiagonal(usize),

    #[error("{0} is an edge, not an internal diagonal")]
    EdgeInDissection(Diagonal),

    #[error("{0} is listed twice")]
    DuplicateDiagonal(Diagonal),

    #[error("{0} and {1} cross")]
    CrossingDiagonals(Diagonal, Diagonal),

    #[error("{0} does not cross {1}")]
    NotCrossing(Diagonal, Diagonal),

    #[error("start and end vertex coincide ({0})")]
    SameEndpoints(usize),

    #[error("no value for {0}")]
    MissingValue(Diagonal),

    #[error("unexpected value for {0}")]
    ExtraValue(Diagonal),

    #[error("malformed diagonal key {0:?}, expected \"i-j\"")]
    BadKey(String),

    #[error("vertex set {0:?} is not a subpolygon (needs 3 or more distinct vertices)")]
    NotSubpolygon(Vec<usize>),

    #[error("no piece covers the cell {0:?}")]
    UncoveredCell(Vec<usize>),

    #[error("piece on {0:?} is not a cell of the dissection")]
    UnexpectedPiece(Vec<usize>),

    #[error("two pieces given for the cell {0:?}")]
    DuplicatePiece(Vec<usize>),

    #[error("pieces disagree on the shared diagonal {0}")]
    SharedValueMismatch(Diagonal),

    #[error("pieces do not split the polygon along {0}")]
    PartitionMismatch(Diagonal),

    #[error("{0} is not a dissection diagonal")]
    NotInDissection(Diagonal),

    #[error("a triangulation of a {n}-gon has {expected} diagonals, got {got}")]
    NotTriangulation { n: usize, expected: usize, got: usize },

    #[error("edge {0} has a value other than 1")]
    NonUnitEdge(Diagonal),

    #[error("Ptolemy propagation stalled: {0} could not be determined")]
    PropagationStalled(Diagonal),

    #[error("Ptolemy propagation produced conflicting values for {0}")]
    PropagationConflict(Diagonal),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("expected semifield {expected:?}, document says {found:?}")]
    SemifieldMismatch { expected: String, found: String },

    #[error("{0}")]
    Schema(String),
}

impl FriezeError {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        use FriezeError::*;
        match self {
            PolygonTooSmall(_) => "polygon_too_small",
            VertexOutOfRange { .. } => "vertex_out_of_range",
            DegenerateDiagonal(_) => "degenerate_diagonal",
            EdgeInDissection(_) => "edge_in_dissection",
            DuplicateDiagonal(_) => "duplicate_diagonal",
            CrossingDiagonals(..) => "crossing_diagonals",
            NotCrossing(..) => "not_crossing",
            SameEndpoints(_) => "same_endpoints",
            MissingValue(_) => "missing_value",
            ExtraValue(_) => "extra_value",
            BadKey(_) => "bad_key",
            NotSubpolygon(_) => "not_subpolygon",
            UncoveredCell(_) => "uncovered_cell",
            UnexpectedPiece(_) => "unexpected_piece",
            DuplicatePiece(_) => "duplicate_piece",
            SharedValueMismatch(_) => "shared_value_mismatch",
            PartitionMismatch(_) => "partition_mismatch",
            NotInDissection(_) => "not_in_dissection",
            NotTriangulation { .. } => "not_triangulation",
            NonUnitEdge(_) => "non_unit_edge",
            PropagationStalled(_) => "propagation_stalled",
            PropagationConflict(_) => "propagation_conflict",
            InvalidValue(_) => "invalid_value",
            SemifieldMismatch { .. } => "semifield_mismatch",
            Schema(_) => "schema",
        }
    }

    /// Whether the error is a violated mathematical hypothesis (as opposed to
    /// malformed input).
    pub fn is_hypothesis_violation(&self) -> bool {
        matches!(
            self,
            FriezeError::SharedValueMismatch(_)
                | FriezeError::NonUnitEdge(_)
                | FriezeError::PropagationStalled(_)
                | FriezeError::PropagationConflict(_)
        )
    }
}
