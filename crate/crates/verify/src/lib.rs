//! Catalog files, batch verification and report rendering on top of
//! `mckay-core`.
//!
//! The catalog ships embedded in the binary; a directory of JSON documents
//! given with `--catalog` or `MCKAY_CATALOG` replaces it.

use std::path::{Path, PathBuf};

use mckay_core::catalog::CatalogEntry;

pub mod checks;
mod embedded;
pub mod render;
pub mod schema;
pub mod suite;

pub use checks::{prepare, run_checks, verify_entry, CheckResult, Prepared};
pub use suite::{run_suite, select, EntryReport, Report, Summary};

/// Environment variable consulted when no catalog path is passed.
pub const CATALOG_ENV: &str = "MCKAY_CATALOG";

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("{path}: {msg}")]
    Io { path: PathBuf, msg: String },
    #[error("{origin}: {msg}")]
    Parse { origin: String, msg: String },
    #[error("entry {id}: {msg}")]
    Invalid { id: String, msg: String },
    #[error("duplicate entry id {0}")]
    Duplicate(String),
    #[error("unknown entry id {0:?}")]
    UnknownId(String),
    #[error("empty entry selection")]
    EmptySelection,
}

/// The catalog compiled into the crate, sorted by id.
pub fn embedded_catalog() -> Result<Vec<CatalogEntry>, CatalogError> {
    let entries = embedded::FILES
        .iter()
        .map(|(name, text)| schema::parse_entry(text, name))
        .collect::<Result<Vec<_>, _>>()?;
    schema::sort_and_dedup(entries)
}

/// The embedded JSON documents as `(file name, contents)`.
pub fn embedded_files() -> &'static [(&'static str, &'static str)] {
    embedded::FILES
}

/// Loads from `path`, else from `$MCKAY_CATALOG`, else the embedded copy.
pub fn load_catalog(path: Option<&Path>) -> Result<Vec<CatalogEntry>, CatalogError> {
    match path {
        Some(p) => schema::load_dir(p),
        None => match std::env::var_os(CATALOG_ENV) {
            Some(p) if !p.is_empty() => schema::load_dir(Path::new(&p)),
            _ => embedded_catalog(),
        },
    }
}
