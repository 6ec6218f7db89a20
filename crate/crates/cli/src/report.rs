use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

/// Result of one command. Everything except `seconds` is a pure function of
/// the inputs.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub args: Value,
    pub input_hash: String,
    pub notices: Vec<String>,
    pub results: Value,
    pub verdicts: BTreeMap<String, bool>,
    /// Human-readable lines for stdout.
    pub lines: Vec<String>,
    pub seconds: f64,
}

/// SHA-256 over the command, its canonical arguments and every input file.
pub fn input_hash(command: &str, args: &Value, files: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update([0]);
    h.update(args.to_string().as_bytes());
    for f in files {
        h.update((f.len() as u64).to_le_bytes());
        h.update(f);
    }
    hex::encode(h.finalize())
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdicts.values().all(|&ok| ok)
    }

    /// The deterministic part of the report.
    pub fn verdict_section(&self) -> Value {
        json!({
            "args": self.args,
            "command": self.command,
            "format_version": FORMAT_VERSION,
            "input_hash": self.input_hash,
            "notices": self.notices,
            "passed": self.passed(),
            "results": self.results,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "verdicts": self.verdicts,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.verdict_section();
        v["timing"] = json!({ "seconds": self.seconds });
        v
    }

    /// Canonical JSON: sorted keys, two-space indentation, trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
        s.push('\n');
        s
    }

    /// Writes the JSON to `path` (`-` for stdout) and the table to stdout
    /// unless `quiet`.
    pub fn emit(&self, path: Option<&Path>, quiet: bool) -> io::Result<()> {
        let mut out = io::stdout().lock();
        if !quiet {
            for n in &self.notices {
                writeln!(out, "note: {n}")?;
            }
            for l in &self.lines {
                writeln!(out, "{l}")?;
            }
            for (name, ok) in &self.verdicts {
                writeln!(out, "{name}: {}", if *ok { "yes" } else { "NO" })?;
            }
        }
        match path {
            Some(p) if p == Path::new("-") => out.write_all(self.to_json_string().as_bytes()),
            Some(p) => std::fs::write(p, self.to_json_string()),
            None => Ok(()),
        }
    }
}
