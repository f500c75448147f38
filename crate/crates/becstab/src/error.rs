//! Error type shared by all modules.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The well parameter x = k0*R sits on an s-wave resonance where the
    /// scattering length diverges.
    #[error("well parameter x = {x} is within 1e-9 of an odd multiple of pi/2 (s-wave resonance)")]
    Resonance { x: f64 },

    /// Only negative scattering lengths are reachable on the branch with no
    /// two-body bound state (x < pi/2).
    #[error("scattering length {a_target} is unreachable on the bound-state-free branch (requires a < 0)")]
    UnreachableBranch { a_target: f64 },

    #[error("no convergence after {iterations} iterations: {context}")]
    NoConvergence { context: String, iterations: u32 },

    #[error("no interior minimum inside bracket [{lo}, {hi}]")]
    NoInteriorMinimum { lo: f64, hi: f64 },

    #[error("invalid bracket: {0}")]
    BracketInvalid(String),

    #[error("no metastable state: {0}")]
    NoMetastableState(String),

    /// An evaluation failure inside a landscape scan, tagged with the grid
    /// location that produced it.
    #[error("evaluation failed at parameter value {location}")]
    EvaluationAt {
        location: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("scenario parse error: {0}")]
    Json(#[from] serde_json::Error),
}
