use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("order error: {0}")]
    Order(String),

    #[error("accuracy loss: {0}")]
    AccuracyLoss(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("integration path error: {0}")]
    Path(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("divergent integral: {0}")]
    Divergent(String),

    #[error("quadrature failed to converge: {0}")]
    NonConvergence(String),

    #[error("integrand growth unbounded for quadrature: {0}")]
    UnboundedGrowth(String),
}

impl Error {
    /// CLI exit code bucket: 3 for domain-style rejections, 4 for numerical
    /// failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::Order(_)
            | Error::Path(_)
            | Error::Degenerate(_)
            | Error::Divergent(_) => 3,
            Error::AccuracyLoss(_)
            | Error::Overflow(_)
            | Error::NonConvergence(_)
            | Error::UnboundedGrowth(_) => 4,
        }
    }
}
