use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypothesis violated for {claim}: {detail} (set the override flag to explore)")]
    Hypothesis { claim: &'static str, detail: String },
    #[error("input of length {len} exceeds the exhaustive-search limit of {max}")]
    SizeGuard { len: usize, max: usize },
    #[error("power iteration did not converge after {iterations} iterations (best residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },
    #[error("configuration error: {0}")]
    Config(String),
    #[error("trial {trial}: {source}")]
    Trial {
        trial: u64,
        #[source]
        source: Box<Error>,
    },
}
