//! Library half of the gml command-line tool: argument parsing helpers,
//! report rendering, the command runners, and the verification suite.

pub mod coeffs;
pub mod commands;
pub mod measures;
pub mod report;
pub mod verify;

use report::OutputFormat;
use std::path::PathBuf;

/// A fully resolved invocation: which command, where the output goes, and
/// the seed for randomized sweeps. Identical configs produce byte-identical
/// output.
#[derive(Debug)]
pub struct RunConfig {
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    /// Write rendered output to the configured sink.
    pub fn emit(&self, text: &str) -> std::io::Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}
