use rayon::prelude::*;

use super::{fit, Mlp, MlpError, TrainConfig};
use crate::dataset::{stratified_split, LabeledDataset};
use crate::metrics::{overall_accuracy, ConfusionMatrix};

/// Share of each class placed on the training side of a repetition.
pub const CV_TRAIN_FRACTION: f64 = 0.8;

/// Repeated random-resample validation.
#[derive(Debug, Clone, PartialEq)]
pub struct CvReport {
    /// Validation accuracy of each repetition, in repetition order.
    pub accuracies: Vec<f64>,
    pub mean_accuracy: f64,
    /// All validation predictions of all repetitions.
    pub pooled: ConfusionMatrix,
    /// Early-stopping epoch of each repetition.
    pub best_epochs: Vec<usize>,
}

/// Validation confusion matrix of a trained network.
pub fn evaluate(mlp: &Mlp, data: &LabeledDataset) -> Result<ConfusionMatrix, MlpError> {
    let mut cm = ConfusionMatrix::default();
    for row in data.rows() {
        cm.add(row.stage, mlp.predict(&row.features)?);
    }
    Ok(cm)
}

/// Repetition `r` (1-based) splits 80/20 per class with seed `config.seed + r`
/// and trains with the same seed. Repetitions run in parallel; the report is
/// assembled in repetition order.
pub fn cross_validate(
    dataset: &LabeledDataset,
    layer_sizes: &[usize],
    config: &TrainConfig,
    repetitions: usize,
) -> Result<CvReport, MlpError> {
    if repetitions == 0 {
        return Err(MlpError::Config(
            "at least one repetition is required".into(),
        ));
    }
    config.validate()?;
    let runs: Vec<(ConfusionMatrix, usize)> = (1..=repetitions as u64)
        .into_par_iter()
        .map(|r| {
            let seed = config.seed.wrapping_add(r);
            let (train, validation) = stratified_split(dataset, CV_TRAIN_FRACTION, seed)?;
            let cfg = TrainConfig {
                seed,
                ..config.clone()
            };
            let (mlp, report) = fit(&train, &validation, layer_sizes, &cfg)?;
            Ok((evaluate(&mlp, &validation)?, report.best_epoch))
        })
        .collect::<Result<_, MlpError>>()?;

    let mut pooled = ConfusionMatrix::default();
    let mut accuracies = Vec::with_capacity(runs.len());
    let mut best_epochs = Vec::with_capacity(runs.len());
    for (cm, best) in &runs {
        pooled.merge(cm);
        accuracies.push(overall_accuracy(cm).expect("validation side is never empty"));
        best_epochs.push(*best);
    }
    let mean_accuracy = accuracies.iter().sum::<f64>() / accuracies.len() as f64;
    Ok(CvReport {
        accuracies,
        mean_accuracy,
        pooled,
        best_epochs,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub hidden: usize,
    pub report: CvReport,
}

/// Cross-validates a single-hidden-layer network for each hidden size and
/// returns every result plus the index of the best mean accuracy (earliest
/// on ties).
pub fn hidden_sweep(
    dataset: &LabeledDataset,
    hidden_sizes: &[usize],
    outputs: usize,
    config: &TrainConfig,
    repetitions: usize,
) -> Result<(Vec<SweepResult>, usize), MlpError> {
    if hidden_sizes.is_empty() {
        return Err(MlpError::Config("hidden-size sweep list is empty".into()));
    }
    let mut results = Vec::with_capacity(hidden_sizes.len());
    for &hidden in hidden_sizes {
        let report = cross_validate(
            dataset,
            &[dataset.width(), hidden, outputs],
            config,
            repetitions,
        )?;
        results.push(SweepResult { hidden, report });
    }
    let mut best = 0;
    for (i, r) in results.iter().enumerate() {
        if r.report.mean_accuracy > results[best].report.mean_accuracy {
            best = i;
        }
    }
    Ok((results, best))
}
