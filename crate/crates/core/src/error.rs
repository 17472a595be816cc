use thiserror::Error;

/// Errors shared across the crate.
///
/// Witness data is carried as preformatted strings so that messages stay
/// printable without dragging the originating types along.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("rectangle corner {corner} has a negative coordinate")]
    NegativeCorner { corner: String },

    #[error("table has {got} entries but the rectangle [0,{corner}] has {expected} lattice points")]
    TableSize {
        corner: String,
        expected: usize,
        got: usize,
    },

    #[error("cube {cube} lies outside the rectangle [0,{corner}]")]
    CubeOutsideRectangle { cube: String, corner: String },

    #[error("lattice point {point} lies outside the rectangle [0,{corner}]")]
    PointOutsideRectangle { point: String, corner: String },

    #[error("direction {dir} is out of range for rank {rank}")]
    InvalidDirection { dir: usize, rank: usize },

    #[error("complex is not face-closed: face {face} of {cube} is missing")]
    NotFaceClosed { face: String, cube: String },

    #[error("boundary matrices do not square to zero at dimension {dim}")]
    BoundarySquare { dim: usize },

    #[error("cell {cube} of the claimed subcomplex is missing from the ambient complex")]
    NotSubcomplex { cube: String },

    #[error("region is empty")]
    EmptyRegion,

    #[error("path must start at the origin, found {start}")]
    PathNotAtOrigin { start: String },

    #[error("path revisits the point {point}")]
    PathRepeatsPoint { point: String },

    #[error("step {index} of the path ({from} -> {to}) is not a unit step")]
    PathBadStep {
        index: usize,
        from: String,
        to: String,
    },

    #[error("extension is not the model grown by one step: {reason}")]
    ExtensionMismatch { reason: String },

    #[error("retraction hypothesis fails at {point}: w0 decreases when leaving the new face")]
    RetractionHypothesis { point: String },

    #[error("graded root violates axiom ({axiom}): {witness}")]
    InvalidRoot { axiom: String, witness: String },

    #[error("hilbert pair corner {corner} must be >= (1,..,1)")]
    CornerTooSmall { corner: String },

    #[error("h(0) must be 0, found {value}")]
    BaseValueNonzero { value: i64 },

    #[error("{table} is not {direction} at {point} in direction {dir}")]
    TableNotMonotone {
        table: String,
        direction: String,
        point: String,
        dir: usize,
    },

    #[error("series evaluation at {point} needs table values outside [0,{corner}]")]
    SeriesOutOfTable { point: String, corner: String },

    #[error("invalid weighted homogeneous data: {reason}")]
    GermInvalid { reason: String },

    #[error("germ has a spectral number equal to one (lattice point {point} on the weight hyperplane)")]
    SpectralNumberOne { point: String },

    #[error("reduced rectangle is empty: d + 1 - sum(w) = {zbar} < 0")]
    NegativeReducedLength { zbar: i64 },

    #[error("budget exceeded: {needed} unit steps requested, budget is {budget}")]
    Budget { needed: usize, budget: usize },

    #[error("unknown format `{format}`")]
    UnknownFormat { format: String },

    #[error("malformed root serialization: {reason}")]
    RootParse { reason: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
