use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {n} exceeds the hard cap of {cap} vertices")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed graph6 input: {0}")]
    Graph6(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("singular sample point u = {0}: 1 - u^2 vanishes or u is zero")]
    SingularU(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },

    #[error("corrupt cache entry {path}: {reason}; re-enumeration required")]
    CorruptCache { path: String, reason: String },

    #[error("search space too large: {0}")]
    SpaceTooLarge(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
