use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument out of domain ({detail})")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("{function}: result overflows f64 ({detail})")]
    Overflow {
        function: &'static str,
        detail: String,
    },

    #[error("degenerate fading parameters: {0}")]
    Degenerate(String),

    #[error("{what} did not converge after {iterations} iterations (best estimate {best:e}, residual {residual:e})")]
    NotConverged {
        what: &'static str,
        iterations: usize,
        best: f64,
        residual: f64,
    },

    #[error("quadrature tolerance not met: estimate {estimate:e}, error estimate {abs_err:e}, requested {requested:e}")]
    ToleranceNotMet {
        estimate: f64,
        abs_err: f64,
        requested: f64,
    },

    #[error("invalid modulation: {0}")]
    Modulation(String),

    #[error("unsupported approximation: {0}")]
    Approximation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("at {snr_db} dB: {source}")]
    AtSnr {
        snr_db: f64,
        #[source]
        source: Box<Error>,
    },
}

pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        function,
        detail: detail.into(),
    }
}
