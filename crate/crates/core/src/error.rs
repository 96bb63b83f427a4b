use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("unknown token {found:?} at position {position}")]
    UnknownToken { position: usize, found: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSetError {
    #[error("malformed set literal at position {position}: {reason}")]
    Malformed { position: usize, reason: String },
    #[error("empty interval: lower bound {lower} is not below upper bound {upper}")]
    EmptyInterval { lower: String, upper: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("point count {n} outside supported range {min}..={max}")]
    PointCount { n: usize, min: usize, max: usize },
    #[error("subset mask {mask} out of range for a {n}-point space")]
    MaskOutOfRange { mask: u32, n: usize },
    #[error("open sets do not form a topology: {0}")]
    NotATopology(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("no models supplied")]
    NoModels,
    #[error("max word length must be at least 1")]
    MaxLength,
    #[error("report was truncated; order computation needs the complete class list")]
    Truncated,
    #[error("classes {0} and {1} are mutually below each other but were not identified")]
    Antisymmetry(String, String),
}
