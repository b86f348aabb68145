//! Machine-readable run reports shared by all CLI subcommands.

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// One report per invocation: command echo, input digests, tool version,
/// and a per-command results object. Rendering is deterministic for fixed
/// inputs and flags; timing is deliberately excluded (it goes to stderr).
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub results: Value,
    #[serde(skip)]
    lines: Vec<String>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            tool: "cnum",
            version: env!("CARGO_PKG_VERSION"),
            command,
            inputs: Vec::new(),
            results: Value::Object(Map::new()),
            lines: Vec::new(),
        }
    }

    pub fn add_input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.push(InputDigest { path: path.to_string(), sha256: sha256_hex(bytes) });
    }

    /// Inserts a key into the results object.
    pub fn set(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.results {
            map.insert(key.to_string(), value);
        }
    }

    /// Appends a human-readable result line (text rendering only).
    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.tool, self.version));
        out.push_str(&format!("command: {}\n", self.command));
        for input in &self.inputs {
            out.push_str(&format!("input: {} sha256={}\n", input.path, input.sha256));
        }
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in digest {
        s.push_str(&format!("{b:02x}"));
    }
    s
}
