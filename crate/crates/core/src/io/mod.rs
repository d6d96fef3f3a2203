//! Gem files, the invariant catalog and DOT export.

pub mod catalog;
pub mod dot;
pub mod gemfile;

use std::path::PathBuf;

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid gem: {0}")]
    Validation(#[from] GraphError),
    #[error("store line {line} is corrupt: {message}")]
    StoreCorrupt { line: usize, message: String },
    #[error("bad filter {0:?}: expected FIELD OP VALUE with OP one of = != < <= > >=")]
    Filter(String),
    #[error("cannot compute invariants: {0}")]
    Invariant(#[from] crate::invariants::InvariantError),
}

impl IoError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        IoError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(e: serde_json::Error) -> Self {
        IoError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

pub use catalog::{catalog_add, catalog_scan, AddOutcome, CatalogRecord, Filter, ScanResult};
pub use dot::{export_dot, to_dot};
pub use gemfile::{digest, read_gem, read_gem_file, write_gem, write_gem_file, GemFile};
