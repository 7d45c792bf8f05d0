//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Two tensors (or a tensor and an expected extent) disagree on shape.
    #[error("shape mismatch in {op}: left is {lhs_rows}x{lhs_cols}, right is {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// A graph vertex ended up with an empty neighbor set.
    #[error("degenerate row {row}: vertex has no neighbors")]
    DegenerateRow { row: usize },

    /// A caller violated an operation precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The optimizer saw a NaN or infinite gradient.
    #[error("non-finite gradient for parameter `{param}`")]
    NonFiniteGradient { param: String },

    /// A (node, mode) training series has zero variance.
    #[error("constant series for node {node_id}, mode `{mode}`: cannot standardize")]
    ConstantSeries { node_id: u32, mode: String },

    /// A requested sensor node has no data.
    #[error("missing node {node_id}: no readings in the selected range")]
    MissingNode { node_id: u32 },

    /// Unreadable or malformed external input.
    #[error("input error: {0}")]
    Input(String),

    /// A checkpoint or prepared-flow file failed validation.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// An invalid run configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("metadata error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn shape(
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    ) -> Self {
        Error::ShapeMismatch {
            op,
            lhs_rows: lhs.0,
            lhs_cols: lhs.1,
            rhs_rows: rhs.0,
            rhs_cols: rhs.1,
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
