//! Plain-text `key = value` recipe files.
//!
//! Blank lines and lines starting with `#` are ignored. `axis` may repeat;
//! every other key may appear once.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{CliError, Result};

pub const KEYS: [&str; 9] = [
    "xi", "mass", "lambda", "nu", "l", "n", "format", "out", "axis",
];

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, String>,
    axes: Vec<String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Input {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::usage(format!("line {}: expected key = value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            if !KEYS.contains(&key) {
                return Err(CliError::usage(format!(
                    "line {}: unknown key '{key}'",
                    lineno + 1
                )));
            }
            if key == "axis" {
                cfg.axes.push(value.to_string());
            } else if cfg
                .values
                .insert(key.to_string(), value.to_string())
                .is_some()
            {
                return Err(CliError::usage(format!(
                    "line {}: duplicate key '{key}'",
                    lineno + 1
                )));
            }
        }
        Ok(cfg)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn axes(&self) -> &[String] {
        &self.axes
    }

    /// Parses `key` with `FromStr`, reporting the key on failure.
    pub fn parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::usage(format!("config key '{key}': cannot parse '{v}'")))
            })
            .transpose()
    }
}
