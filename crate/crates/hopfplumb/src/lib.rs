//! Standard-library companion to `hopfplumb-core`: file formats, figures,
//! the acceptance runner and the command-line front end.

pub mod acceptance;
pub mod commands;
pub mod corpus;
pub mod json;
pub mod sampling;
pub mod svg;

use std::io::{self, Write};
use std::path::Path;

/// Writes through a temporary file in the same directory and renames it
/// into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
