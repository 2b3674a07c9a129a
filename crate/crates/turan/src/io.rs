//! graph6 files: one graph per line. Blank lines are skipped and an
//! optional `>>graph6<<` prefix is accepted.

use std::fs;
use std::path::Path;

use turan_core::{graph6, Graph};

use crate::error::{Error, Result};

pub fn read_g6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(graph6::decode_many(&text)?)
}

pub fn write_g6_file(path: &Path, graphs: &[Graph]) -> Result<()> {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&graph6::encode(g));
        text.push('\n');
    }
    write_file(path, text.as_bytes())
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

pub fn read_file(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).map_err(|e| Error::io(path, e))
}
