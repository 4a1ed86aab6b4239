//! Comma-separated feature files.
//!
//! ```text
//! epoch,delta,theta,alpha,sigma,beta
//! 0,1.2345678901234567e-1,...
//! ```
//!
//! Two-derivation files append a second block of five columns suffixed `_2`.
//! Values are written with 17 significant digits so they read back exactly.
//! Unclassifiable epochs carry `nan` in every column of the affected block.

use std::fmt::Write as _;

use crate::spectral::{Band, SpectralFeatures};

#[derive(Debug, thiserror::Error)]
pub enum FeatureFileError {
    #[error("feature file is empty")]
    Empty,
    #[error("line 1: unexpected header {0:?}")]
    Header(String),
    #[error("line {line}: {message}")]
    Row { line: usize, message: String },
}

/// Per-epoch feature rows, 5 or 10 columns wide; `nan` marks missing values.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTable {
    pub width: usize,
    pub rows: Vec<Vec<f64>>,
}

impl FeatureTable {
    /// Concatenates per-derivation features epoch by epoch; an epoch missing
    /// in one derivation gets `nan` for that derivation's block. All
    /// derivations must cover the same epochs (the shortest wins otherwise).
    pub fn from_derivations(derivations: &[Vec<Option<SpectralFeatures>>]) -> Self {
        let n = derivations.iter().map(Vec::len).min().unwrap_or(0);
        let rows = (0..n)
            .map(|i| {
                derivations
                    .iter()
                    .flat_map(|d| match d[i] {
                        Some(f) => f.rsp,
                        None => [f64::NAN; 5],
                    })
                    .collect()
            })
            .collect();
        Self {
            width: 5 * derivations.len(),
            rows,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn header_for(width: usize) -> String {
    let mut cols = vec!["epoch".to_string()];
    for block in 0..width / 5 {
        for band in Band::ALL {
            cols.push(match block {
                0 => band.name().to_string(),
                b => format!("{}_{}", band.name(), b + 1),
            });
        }
    }
    cols.join(",")
}

pub fn format_value(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.16e}")
    }
}

pub fn write_features(table: &FeatureTable) -> String {
    let mut out = header_for(table.width);
    out.push('\n');
    for (i, row) in table.rows.iter().enumerate() {
        write!(out, "{i}").unwrap();
        for &v in row {
            out.push(',');
            out.push_str(&format_value(v));
        }
        out.push('\n');
    }
    out
}

pub fn parse_features(text: &str) -> Result<FeatureTable, FeatureFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(FeatureFileError::Empty)?;
    let header = header.trim();
    let width = [5, 10]
        .into_iter()
        .find(|&w| header == header_for(w))
        .ok_or_else(|| FeatureFileError::Header(header.to_string()))?;

    let mut rows = Vec::new();
    for (i, line) in lines {
        let line_no = i + 1;
        let row_err = |message: String| FeatureFileError::Row {
            line: line_no,
            message,
        };
        let cells: Vec<&str> = line.trim().split(',').map(str::trim).collect();
        if cells.len() != width + 1 {
            return Err(row_err(format!(
                "expected {} columns, found {}",
                width + 1,
                cells.len()
            )));
        }
        let epoch: usize = cells[0]
            .parse()
            .map_err(|_| row_err(format!("bad epoch index {:?}", cells[0])))?;
        if epoch != rows.len() {
            return Err(row_err(format!(
                "epoch index {epoch} out of sequence (expected {})",
                rows.len()
            )));
        }
        let values = cells[1..]
            .iter()
            .map(|c| {
                c.parse::<f64>()
                    .map_err(|_| row_err(format!("bad value {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(values);
    }
    Ok(FeatureTable { width, rows })
}
