use super::{one_hot, squared_error, Mlp, MlpError};
use crate::dataset::LabeledDataset;
use crate::rng::SeededRng;

#[derive(Debug, Clone, PartialEq)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub max_training_epochs: usize,
    /// Validation checks without a new minimum before stopping.
    pub patience: usize,
    pub seed: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            learning_rate: 0.2,
            max_training_epochs: 1000,
            patience: 50,
            seed: 0,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<(), MlpError> {
        if !(self.learning_rate > 0.0 && self.learning_rate.is_finite()) {
            return Err(MlpError::Config(format!(
                "learning rate {} must be positive",
                self.learning_rate
            )));
        }
        if self.max_training_epochs == 0 {
            return Err(MlpError::Config(
                "max training epochs must be at least 1".into(),
            ));
        }
        if self.patience == 0 {
            return Err(MlpError::Config("patience must be at least 1".into()));
        }
        Ok(())
    }
}

/// Learning curve of one training run.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainReport {
    /// Mean per-example squared error on the training rows after each epoch.
    pub train_error: Vec<f64>,
    /// Same on the validation rows.
    pub validation_error: Vec<f64>,
    /// 1-based training epoch of the minimum validation error; the returned
    /// model is the snapshot taken at that epoch.
    pub best_epoch: usize,
}

impl TrainReport {
    pub fn epochs_run(&self) -> usize {
        self.validation_error.len()
    }

    pub fn best_validation_error(&self) -> f64 {
        self.validation_error[self.best_epoch - 1]
    }

    /// `epoch,train_error,validation_error` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("epoch,train_error,validation_error\n");
        for (i, (t, v)) in self
            .train_error
            .iter()
            .zip(&self.validation_error)
            .enumerate()
        {
            out.push_str(&format!("{},{t:.12e},{v:.12e}\n", i + 1));
        }
        out
    }
}

/// Patience-based stopping on a validation curve.
#[derive(Debug, Clone)]
pub struct EarlyStopping {
    patience: usize,
    epoch: usize,
    best_epoch: usize,
    best: f64,
}

impl EarlyStopping {
    pub fn new(patience: usize) -> Self {
        Self {
            patience,
            epoch: 0,
            best_epoch: 0,
            best: f64::INFINITY,
        }
    }

    /// Records the next epoch's validation error; returns whether it is a
    /// new strict minimum.
    pub fn observe(&mut self, validation_error: f64) -> bool {
        self.epoch += 1;
        if validation_error < self.best {
            self.best = validation_error;
            self.best_epoch = self.epoch;
            true
        } else {
            false
        }
    }

    pub fn should_stop(&self) -> bool {
        self.epoch - self.best_epoch >= self.patience
    }

    pub fn best_epoch(&self) -> usize {
        self.best_epoch
    }
}

pub(crate) fn mean_error(mlp: &Mlp, data: &LabeledDataset, targets: &[Vec<f64>]) -> f64 {
    let total: f64 = data
        .rows()
        .iter()
        .zip(targets)
        .map(|(row, t)| squared_error(&mlp.forward_unchecked(&row.features)[mlp.layers.len()], t))
        .sum();
    total / data.len() as f64
}

fn targets(data: &LabeledDataset, outputs: usize) -> Result<Vec<Vec<f64>>, MlpError> {
    data.rows()
        .iter()
        .map(|r| one_hot(r.stage, outputs))
        .collect()
}

/// Online backpropagation with early stopping on the validation error.
///
/// Each training epoch visits the training rows once in a freshly shuffled
/// order, then measures the mean error on both sets. Training stops after
/// `patience` epochs without a new validation minimum, or at
/// `max_training_epochs`; the parameters from the best epoch are returned.
pub fn fit(
    train: &LabeledDataset,
    validation: &LabeledDataset,
    layer_sizes: &[usize],
    config: &TrainConfig,
) -> Result<(Mlp, TrainReport), MlpError> {
    config.validate()?;
    if train.is_empty() {
        return Err(MlpError::EmptyDataset("training"));
    }
    if validation.is_empty() {
        return Err(MlpError::EmptyDataset("validation"));
    }
    let mut mlp = Mlp::init(layer_sizes, config.seed)?;
    for data in [train, validation] {
        if data.width() != mlp.input_size() {
            return Err(MlpError::Dimension {
                expected: mlp.input_size(),
                found: data.width(),
            });
        }
    }
    let outputs = mlp.output_size();
    let train_targets = targets(train, outputs)?;
    let val_targets = targets(validation, outputs)?;

    let mut rng = SeededRng::with_stream(config.seed, 1);
    let mut order: Vec<usize> = (0..train.len()).collect();
    let mut stopper = EarlyStopping::new(config.patience);
    let mut best = mlp.clone();
    let mut report = TrainReport {
        train_error: Vec::new(),
        validation_error: Vec::new(),
        best_epoch: 0,
    };

    for _ in 0..config.max_training_epochs {
        rng.shuffle(&mut order);
        for &i in &order {
            let (_, grads) = mlp.backprop(&train.rows()[i].features, &train_targets[i]);
            mlp.apply(&grads, config.learning_rate);
        }
        let train_err = mean_error(&mlp, train, &train_targets);
        let val_err = mean_error(&mlp, validation, &val_targets);
        report.train_error.push(train_err);
        report.validation_error.push(val_err);
        if stopper.observe(val_err) {
            best.clone_from(&mlp);
        }
        if stopper.should_stop() {
            break;
        }
    }
    if stopper.best_epoch() == 0 {
        // Every validation error was NaN.
        return Err(MlpError::Config("training diverged".into()));
    }
    report.best_epoch = stopper.best_epoch();
    Ok((best, report))
}
