use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("mesh must be at least 2x2, got {width}x{height}")]
    MeshTooSmall { width: usize, height: usize },

    #[error("point index {index} out of range (mesh has {len} points)")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("point {index} is severed")]
    PointSevered { index: usize },

    #[error("point {index} is pinned")]
    PointPinned { index: usize },

    #[error("point {index} is the active tension point")]
    PointTensioned { index: usize },

    #[error("no active tension point")]
    NoTensionPoint,

    #[error("invalid physics config: {0}")]
    InvalidConfig(String),

    #[error("contour `{id}`: {reason}")]
    InvalidContour { id: String, reason: String },

    #[error("polyline leaves the mesh rest rectangle at ({x}, {y})")]
    OutOfBounds { x: f64, y: f64 },

    #[error("cannot split into {requested} segments: contour has {vertices} vertices")]
    TooManySegments { requested: usize, vertices: usize },

    #[error("no pinch-point candidates near the segment")]
    NoCandidates,

    #[error("no unsevered mesh point within {max_dist} mm of joint at ({x}, {y})")]
    NoPinNearJoint { x: f64, y: f64, max_dist: f64 },

    #[error("all candidate trainings failed")]
    AllCandidatesFailed,

    #[error("order search limited to 6 segments, got {0}")]
    TooManyOrderings(usize),

    #[error("episode already finished")]
    EpisodeDone,

    #[error("observation length {got} does not match policy input {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("non-finite {what} during policy update")]
    NonFinite { what: &'static str },

    #[error("policy file: {0}")]
    PolicyFormat(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("unknown contour id `{0}`")]
    UnknownContour(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn json(path: impl Into<String>, source: serde_json::Error) -> Self {
        Error::Json {
            path: path.into(),
            source,
        }
    }
}
