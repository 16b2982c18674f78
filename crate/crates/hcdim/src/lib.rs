//! File formats, the parameter-family experiment and report output on top
//! of `hcdim-core`.

pub mod family;
pub mod formats;
pub mod report;

use hcdim_core::hochschild::HochschildError;
use hcdim_core::lie::LieError;
use hcdim_core::linalg::LinalgError;
use hcdim_core::ncalg::NcError;
use thiserror::Error;

pub use family::{psi_comparison, psi_profile_compare, verify_paper, FamilyReport, FamilyRow, VerifyConfig};
pub use formats::parse_presentation;
pub use report::{emit_report, render_report, ReportFormat};

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("Groebner basis of A_{0} is incomplete at the degree bound")]
    Incomplete(String),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("cannot serialize: {0}")]
    Serialize(serde_json::Error),
}

impl Error {
    /// Misuse of the command line rather than a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Usage(_))
    }
}
