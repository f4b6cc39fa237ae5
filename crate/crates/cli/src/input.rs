use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use extremal_core::{CurveQ, CurveRecord};

/// Reads a curve file: one JSON object per line, blank lines ignored.
pub fn read_curves(path: &Path) -> Result<Vec<CurveQ>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut curves = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let at = || format!("{}:{}", path.display(), i + 1);
        let record: CurveRecord = serde_json::from_str(line).with_context(at)?;
        let curve = CurveQ::try_from(record).with_context(at)?;
        curves.push(curve);
    }
    if curves.is_empty() {
        bail!("{} contains no curves", path.display());
    }
    Ok(curves)
}
