//! Hypnograms, labeled corpora and reproducible train/validation splits.

use std::collections::BTreeMap;

use crate::rng::SeededRng;
use crate::stage::SleepStage;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DatasetError {
    #[error("hypnogram is empty")]
    EmptyHypnogram,
    #[error("line {line}: unknown stage token {token:?}")]
    UnknownToken { line: usize, token: String },
    #[error("{features} feature rows but {labels} hypnogram epochs")]
    LengthMismatch { features: usize, labels: usize },
    #[error("feature rows have width {found}, expected {expected}")]
    Width { expected: usize, found: usize },
    #[error("train fraction {0} must lie strictly between 0 and 1")]
    Fraction(f64),
    #[error("class {stage} has {count} rows; a split needs at least 2")]
    ClassTooSmall { stage: SleepStage, count: usize },
    #[error("dataset is empty")]
    EmptyDataset,
}

/// Whole-night sequence of epoch labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypnogram {
    pub labels: Vec<SleepStage>,
    pub epoch_duration_s: f64,
}

impl Hypnogram {
    pub fn new(labels: Vec<SleepStage>, epoch_duration_s: f64) -> Self {
        Self {
            labels,
            epoch_duration_s,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.labels.len() as f64 * self.epoch_duration_s
    }

    pub fn count(&self, stage: SleepStage) -> usize {
        self.labels.iter().filter(|&&s| s == stage).count()
    }

    /// One token per line.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.labels.len() * 2);
        for s in &self.labels {
            out.push(s.token());
            out.push('\n');
        }
        out
    }
}

/// Parses a hypnogram file: one token (`W 1 2 3 4 R M`) per line, blank
/// lines and `#` comments ignored.
pub fn parse_hypnogram(text: &str, epoch_duration_s: f64) -> Result<Hypnogram, DatasetError> {
    let mut labels = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let token = line.trim();
        if token.is_empty() || token.starts_with('#') {
            continue;
        }
        let stage = SleepStage::from_token(token).ok_or_else(|| DatasetError::UnknownToken {
            line: i + 1,
            token: token.to_string(),
        })?;
        labels.push(stage);
    }
    if labels.is_empty() {
        return Err(DatasetError::EmptyHypnogram);
    }
    Ok(Hypnogram::new(labels, epoch_duration_s))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledRow {
    pub features: Vec<f64>,
    pub stage: SleepStage,
    /// Epoch index in the source recording.
    pub epoch: usize,
}

/// Classifier corpus: finite feature rows of one width, never `Movement`.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    width: usize,
    rows: Vec<LabeledRow>,
}

impl LabeledDataset {
    /// Checks the row invariants.
    pub fn new(width: usize, rows: Vec<LabeledRow>) -> Result<Self, DatasetError> {
        for row in &rows {
            if row.features.len() != width {
                return Err(DatasetError::Width {
                    expected: width,
                    found: row.features.len(),
                });
            }
            assert!(
                row.stage != SleepStage::Movement,
                "movement epochs never enter a labeled dataset"
            );
            assert!(
                row.features.iter().all(|v| v.is_finite()),
                "non-finite feature"
            );
        }
        Ok(Self { width, rows })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[LabeledRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn labels(&self) -> Vec<SleepStage> {
        self.rows.iter().map(|r| r.stage).collect()
    }

    /// Row count per class, in class order.
    pub fn class_counts(&self) -> [usize; 6] {
        let mut counts = [0; 6];
        for r in &self.rows {
            counts[r.stage.class_index().expect("no movement rows")] += 1;
        }
        counts
    }

    fn subset(&self, indices: &[usize]) -> LabeledDataset {
        LabeledDataset {
            width: self.width,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }
}

/// Pairs per-epoch features with hypnogram labels, dropping `Movement`
/// epochs and epochs with any non-finite feature.
pub fn build_dataset(
    features: &[Vec<f64>],
    width: usize,
    hypnogram: &Hypnogram,
) -> Result<LabeledDataset, DatasetError> {
    if features.len() != hypnogram.len() {
        return Err(DatasetError::LengthMismatch {
            features: features.len(),
            labels: hypnogram.len(),
        });
    }
    let mut rows = Vec::with_capacity(features.len());
    for (epoch, (f, &stage)) in features.iter().zip(&hypnogram.labels).enumerate() {
        if f.len() != width {
            return Err(DatasetError::Width {
                expected: width,
                found: f.len(),
            });
        }
        if stage == SleepStage::Movement || !f.iter().all(|v| v.is_finite()) {
            continue;
        }
        rows.push(LabeledRow {
            features: f.clone(),
            stage,
            epoch,
        });
    }
    LabeledDataset::new(width, rows)
}

/// Per-class shuffled split: `round(train_fraction * class_count)` rows of
/// each class (clamped to `1..=count-1`) go to the training side.
pub fn stratified_split(
    dataset: &LabeledDataset,
    train_fraction: f64,
    seed: u64,
) -> Result<(LabeledDataset, LabeledDataset), DatasetError> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(DatasetError::Fraction(train_fraction));
    }
    if dataset.is_empty() {
        return Err(DatasetError::EmptyDataset);
    }
    let mut by_class: BTreeMap<SleepStage, Vec<usize>> = BTreeMap::new();
    for (i, row) in dataset.rows.iter().enumerate() {
        by_class.entry(row.stage).or_default().push(i);
    }
    if let Some((&stage, idx)) = by_class.iter().find(|(_, idx)| idx.len() < 2) {
        return Err(DatasetError::ClassTooSmall {
            stage,
            count: idx.len(),
        });
    }

    let mut train = Vec::new();
    let mut validation = Vec::new();
    for (stage, mut idx) in by_class {
        // One stream per class keeps a class's shuffle independent of which
        // other classes are present.
        let mut rng = SeededRng::with_stream(seed, stage as u64);
        rng.shuffle(&mut idx);
        let n = idx.len();
        let n_train = ((train_fraction * n as f64).round() as usize).clamp(1, n - 1);
        train.extend_from_slice(&idx[..n_train]);
        validation.extend_from_slice(&idx[n_train..]);
    }
    Ok((dataset.subset(&train), dataset.subset(&validation)))
}
