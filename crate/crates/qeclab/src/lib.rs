//! File formats, reports and the `qeclab` command line on top of
//! [`qeclab_core`].

pub mod cli;
pub mod edgelist;
pub mod numfmt;
pub mod report;
pub mod scan;
pub mod tables;

use std::path::PathBuf;

use qeclab_core::classify::ClassifyError;
use qeclab_core::quintuple::QuintupleError;
use qeclab_core::spectral::SpectralError;
use qeclab_core::GraphError;
use thiserror::Error;

pub use edgelist::EdgeListError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: EdgeListError },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("graph is disconnected; components: {}", fmt_components(.0))]
    Disconnected(Vec<Vec<usize>>),
    #[error("invalid value for QECLAB_THREADS: `{0}` (expected a positive integer)")]
    Threads(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Quintuple(#[from] QuintupleError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Stdout(#[from] std::io::Error),
}

fn fmt_components(cs: &[Vec<usize>]) -> String {
    cs.iter()
        .map(|c| format!("{{{}}}", c.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}
