use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use crate::args::{Format, SideArg};

/// Values read from `--config`. Keys mirror the long flag names.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub threads: Option<u32>,
    pub curves: Option<PathBuf>,
    pub lo: Option<u64>,
    pub hi: Option<u64>,
    pub records: Option<bool>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub x: Option<f64>,
    pub cm: Option<bool>,
    pub bins: Option<usize>,
    #[serde(rename = "M")]
    pub m: Option<usize>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub side: Option<SideArg>,
    pub n: Option<u32>,
}

impl FileConfig {
    /// Reads a config file; relative paths inside it are taken from the file's directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let mut cfg: FileConfig =
            toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [&mut cfg.curves, &mut cfg.out].into_iter().flatten() {
            if p.is_relative() && p.as_os_str() != "-" {
                *p = base.join(&*p);
            }
        }
        if cfg.threads == Some(0) {
            bail!("config {}: threads must be positive", path.display());
        }
        Ok(cfg)
    }
}

/// Flag, then config value, else an error naming the flag.
pub fn required<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T> {
    match flag.or(file) {
        Some(v) => Ok(v),
        None => bail!("missing --{name} (give it as a flag or in the config file)"),
    }
}
