//! IO companion to `winding-core`: exact JSON serialization of
//! drawings, SVG rendering, independent verification oracles with fuzz
//! harnesses, and the `winding` command-line tool.

pub mod cli;
pub mod error;
pub mod format;
pub mod svg;
pub mod verify;

use std::io::Write;
use std::path::Path;

/// Whole-file atomic write: temp file in the target directory, then
/// rename over the destination.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let mut tmp = std::env::temp_dir();
    if let Some(dir) = dir {
        tmp = dir.to_path_buf();
    }
    tmp.push(format!(
        ".{}.tmp-{}",
        path.file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "out".to_string()),
        std::process::id()
    ));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path)
}
