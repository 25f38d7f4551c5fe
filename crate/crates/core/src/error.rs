use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("{what}: argument {value} outside domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },
    /// Integer parameter outside the supported range.
    #[error("{what}: {value} out of supported range {range}")]
    Range {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    /// A quadrature sample came back NaN or infinite.
    #[error("integrand `{tag}` is not finite at node {node} (value {value})")]
    Evaluation { tag: String, node: f64, value: f64 },
    #[error("invalid quadrature config: {0}")]
    InvalidConfig(String),
    #[error("unknown identity case `{0}`")]
    UnknownCase(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
