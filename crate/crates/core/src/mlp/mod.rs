//! Fully connected feed-forward network with logistic units, trained by
//! online backpropagation of the squared error.

mod cv;
mod model_file;
mod train;

pub use cv::{cross_validate, evaluate, hidden_sweep, CvReport, SweepResult, CV_TRAIN_FRACTION};
pub use model_file::{read_model, write_model, MODEL_MAGIC};
pub use train::{fit, EarlyStopping, TrainConfig, TrainReport};

use crate::dataset::DatasetError;
use crate::rng::SeededRng;
use crate::stage::SleepStage;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MlpError {
    #[error("need at least an input and an output layer with non-zero sizes, got {0:?}")]
    Layers(Vec<usize>),
    #[error("expected {expected} values, got {found}")]
    Dimension { expected: usize, found: usize },
    #[error("non-finite input value")]
    NonFinite,
    #[error("target must be one-hot")]
    Target,
    #[error("{0} dataset is empty")]
    EmptyDataset(&'static str),
    #[error("class {stage} has no output neuron in a {outputs}-output network")]
    ClassOutOfRange { stage: SleepStage, outputs: usize },
    #[error("invalid training configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error("model file line {line}: {message}")]
    ModelFile { line: usize, message: String },
}

pub(crate) fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// One weight matrix (`outputs x inputs`, row-major) and its biases.
#[derive(Debug, Clone, PartialEq)]
pub struct Layer {
    pub inputs: usize,
    pub outputs: usize,
    pub weights: Vec<f64>,
    pub biases: Vec<f64>,
}

impl Layer {
    fn zeros(inputs: usize, outputs: usize) -> Self {
        Self {
            inputs,
            outputs,
            weights: vec![0.0; inputs * outputs],
            biases: vec![0.0; outputs],
        }
    }

    pub fn weight(&self, out: usize, inp: usize) -> f64 {
        self.weights[out * self.inputs + inp]
    }

    pub fn row(&self, out: usize) -> &[f64] {
        &self.weights[out * self.inputs..(out + 1) * self.inputs]
    }

    fn activate(&self, prev: &[f64], next: &mut Vec<f64>) {
        next.clear();
        next.extend(self.biases.iter().enumerate().map(|(o, b)| {
            let dot: f64 = self.row(o).iter().zip(prev).map(|(w, x)| w * x).sum();
            sigmoid(dot + b)
        }));
    }
}

/// Multilayer perceptron with sigmoid units on every non-input layer.
#[derive(Debug, Clone, PartialEq)]
pub struct Mlp {
    layers: Vec<Layer>,
}

/// Parameter gradients, shaped like [`Mlp::layers`].
#[derive(Debug, Clone, PartialEq)]
pub struct Gradients {
    pub layers: Vec<Layer>,
}

impl Gradients {
    /// Flattened in [`Mlp::parameter`] order.
    pub fn flat(&self) -> Vec<f64> {
        self.layers
            .iter()
            .flat_map(|l| l.weights.iter().chain(&l.biases).copied())
            .collect()
    }
}

impl Mlp {
    /// Weights uniform in `±1/sqrt(fan_in)`, biases zero.
    pub fn init(layer_sizes: &[usize], seed: u64) -> Result<Self, MlpError> {
        if layer_sizes.len() < 2 || layer_sizes.contains(&0) {
            return Err(MlpError::Layers(layer_sizes.to_vec()));
        }
        let mut rng = SeededRng::new(seed);
        let layers = layer_sizes
            .windows(2)
            .map(|w| {
                let mut layer = Layer::zeros(w[0], w[1]);
                let bound = 1.0 / (w[0] as f64).sqrt();
                for v in &mut layer.weights {
                    *v = rng.uniform(-bound, bound);
                }
                layer
            })
            .collect();
        Ok(Self { layers })
    }

    /// Builds a network from explicit layers, checking that they chain.
    pub fn from_layers(layers: Vec<Layer>) -> Result<Self, MlpError> {
        let sizes: Vec<usize> = layers
            .iter()
            .map(|l| l.inputs)
            .chain(layers.last().map(|l| l.outputs))
            .collect();
        let consistent = !layers.is_empty()
            && layers.windows(2).all(|w| w[0].outputs == w[1].inputs)
            && layers.iter().all(|l| {
                l.inputs > 0
                    && l.outputs > 0
                    && l.weights.len() == l.inputs * l.outputs
                    && l.biases.len() == l.outputs
                    && l.weights.iter().chain(&l.biases).all(|v| v.is_finite())
            });
        if !consistent {
            return Err(MlpError::Layers(sizes));
        }
        Ok(Self { layers })
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        std::iter::once(self.layers[0].inputs)
            .chain(self.layers.iter().map(|l| l.outputs))
            .collect()
    }

    pub fn input_size(&self) -> usize {
        self.layers[0].inputs
    }

    pub fn output_size(&self) -> usize {
        self.layers.last().expect("at least one layer").outputs
    }

    fn check_input(&self, input: &[f64]) -> Result<(), MlpError> {
        if input.len() != self.input_size() {
            return Err(MlpError::Dimension {
                expected: self.input_size(),
                found: input.len(),
            });
        }
        if !input.iter().all(|v| v.is_finite()) {
            return Err(MlpError::NonFinite);
        }
        Ok(())
    }

    /// Activations of every layer, input first.
    pub fn forward(&self, input: &[f64]) -> Result<Vec<Vec<f64>>, MlpError> {
        self.check_input(input)?;
        Ok(self.forward_unchecked(input))
    }

    fn forward_unchecked(&self, input: &[f64]) -> Vec<Vec<f64>> {
        let mut acts = Vec::with_capacity(self.layers.len() + 1);
        acts.push(input.to_vec());
        for layer in &self.layers {
            let mut next = Vec::with_capacity(layer.outputs);
            layer.activate(acts.last().expect("non-empty"), &mut next);
            acts.push(next);
        }
        acts
    }

    /// Output layer activations.
    pub fn output(&self, input: &[f64]) -> Result<Vec<f64>, MlpError> {
        Ok(self.forward(input)?.pop().expect("output layer"))
    }

    /// `½ Σ (output - target)²`.
    pub fn loss(&self, input: &[f64], target: &[f64]) -> Result<f64, MlpError> {
        self.check_target(target)?;
        let out = self.output(input)?;
        Ok(squared_error(&out, target))
    }

    fn check_target(&self, target: &[f64]) -> Result<(), MlpError> {
        if target.len() != self.output_size() {
            return Err(MlpError::Dimension {
                expected: self.output_size(),
                found: target.len(),
            });
        }
        let ones = target.iter().filter(|&&t| t == 1.0).count();
        if ones != 1 || target.iter().any(|&t| t != 0.0 && t != 1.0) {
            return Err(MlpError::Target);
        }
        Ok(())
    }

    /// Loss and exact gradient of the loss for one example.
    pub fn gradients(&self, input: &[f64], target: &[f64]) -> Result<(f64, Gradients), MlpError> {
        self.check_input(input)?;
        self.check_target(target)?;
        Ok(self.backprop(input, target))
    }

    fn backprop(&self, input: &[f64], target: &[f64]) -> (f64, Gradients) {
        let acts = self.forward_unchecked(input);
        let out = acts.last().expect("output");
        let loss = squared_error(out, target);

        let mut grads: Vec<Layer> = self
            .layers
            .iter()
            .map(|l| Layer::zeros(l.inputs, l.outputs))
            .collect();
        // dE/dnet for the output layer: (o - t) o (1 - o)
        let mut delta: Vec<f64> = out
            .iter()
            .zip(target)
            .map(|(o, t)| (o - t) * o * (1.0 - o))
            .collect();
        for (li, layer) in self.layers.iter().enumerate().rev() {
            let prev = &acts[li];
            let g = &mut grads[li];
            for (o, d) in delta.iter().enumerate() {
                g.biases[o] = *d;
                for (gw, x) in g.weights[o * layer.inputs..(o + 1) * layer.inputs]
                    .iter_mut()
                    .zip(prev)
                {
                    *gw = d * x;
                }
            }
            if li > 0 {
                delta = (0..layer.inputs)
                    .map(|i| {
                        let back: f64 = delta
                            .iter()
                            .enumerate()
                            .map(|(o, d)| d * layer.weight(o, i))
                            .sum();
                        back * prev[i] * (1.0 - prev[i])
                    })
                    .collect();
            }
        }
        (loss, Gradients { layers: grads })
    }

    /// One gradient-descent update on a single example; returns the loss
    /// before the update.
    pub fn train_step(
        &mut self,
        input: &[f64],
        target: &[f64],
        learning_rate: f64,
    ) -> Result<f64, MlpError> {
        let (loss, grads) = self.gradients(input, target)?;
        self.apply(&grads, learning_rate);
        Ok(loss)
    }

    pub(crate) fn apply(&mut self, grads: &Gradients, learning_rate: f64) {
        if learning_rate == 0.0 {
            return;
        }
        for (layer, g) in self.layers.iter_mut().zip(&grads.layers) {
            for (w, gw) in layer.weights.iter_mut().zip(&g.weights) {
                *w -= learning_rate * gw;
            }
            for (b, gb) in layer.biases.iter_mut().zip(&g.biases) {
                *b -= learning_rate * gb;
            }
        }
    }

    pub fn parameter_count(&self) -> usize {
        self.layers
            .iter()
            .map(|l| l.weights.len() + l.biases.len())
            .sum()
    }

    fn locate(&self, mut index: usize) -> (usize, bool, usize) {
        for (li, l) in self.layers.iter().enumerate() {
            if index < l.weights.len() {
                return (li, true, index);
            }
            index -= l.weights.len();
            if index < l.biases.len() {
                return (li, false, index);
            }
            index -= l.biases.len();
        }
        panic!("parameter index out of range");
    }

    /// Parameter by flat index: each layer's weights (row-major) then biases.
    pub fn parameter(&self, index: usize) -> f64 {
        match self.locate(index) {
            (l, true, i) => self.layers[l].weights[i],
            (l, false, i) => self.layers[l].biases[i],
        }
    }

    pub fn set_parameter(&mut self, index: usize, value: f64) {
        match self.locate(index) {
            (l, true, i) => self.layers[l].weights[i] = value,
            (l, false, i) => self.layers[l].biases[i] = value,
        }
    }

    /// Stage of the strongest output.
    pub fn predict(&self, features: &[f64]) -> Result<SleepStage, MlpError> {
        if self.output_size() > SleepStage::N_CLASSES {
            return Err(MlpError::Dimension {
                expected: SleepStage::N_CLASSES,
                found: self.output_size(),
            });
        }
        Ok(argmax_stage(&self.output(features)?))
    }
}

pub(crate) fn squared_error(out: &[f64], target: &[f64]) -> f64 {
    0.5 * out
        .iter()
        .zip(target)
        .map(|(o, t)| (o - t).powi(2))
        .sum::<f64>()
}

/// Argmax over outputs in class order; ties go to the earlier stage.
pub fn argmax_stage(outputs: &[f64]) -> SleepStage {
    let mut best = 0;
    for (i, &v) in outputs.iter().enumerate().take(SleepStage::N_CLASSES) {
        if v > outputs[best] {
            best = i;
        }
    }
    SleepStage::CLASSES[best]
}

/// One-hot target of `stage` for a network with `outputs` output neurons.
pub fn one_hot(stage: SleepStage, outputs: usize) -> Result<Vec<f64>, MlpError> {
    match stage.class_index() {
        Some(i) if i < outputs => {
            let mut t = vec![0.0; outputs];
            t[i] = 1.0;
            Ok(t)
        }
        _ => Err(MlpError::ClassOutOfRange { stage, outputs }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn init_shapes() {
        let m = Mlp::init(&[5, 6, 6], 1).unwrap();
        assert_eq!(m.layers()[0].weights.len(), 30);
        assert_eq!(m.layers()[1].weights.len(), 36);
        assert_eq!(m.layers()[0].biases, vec![0.0; 6]);
        assert_eq!(m.layer_sizes(), vec![5, 6, 6]);
        let bound = 1.0 / 5f64.sqrt();
        assert!(m.layers()[0].weights.iter().all(|w| w.abs() <= bound));
        assert_eq!(m, Mlp::init(&[5, 6, 6], 1).unwrap());
        assert_ne!(m, Mlp::init(&[5, 6, 6], 2).unwrap());
    }

    #[test]
    fn init_rejects_degenerate() {
        assert!(matches!(Mlp::init(&[5], 0), Err(MlpError::Layers(_))));
        assert!(matches!(Mlp::init(&[], 0), Err(MlpError::Layers(_))));
        assert!(matches!(Mlp::init(&[5, 0, 6], 0), Err(MlpError::Layers(_))));
    }

    #[test]
    fn zero_network_outputs_half() {
        let m = Mlp::from_layers(vec![Layer::zeros(5, 6), Layer::zeros(6, 6)]).unwrap();
        assert_eq!(m.output(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap(), vec![0.5; 6]);
    }

    #[test]
    fn bias_drives_output_to_one() {
        let mut prev = 0.5;
        for b in [1.0, 5.0, 10.0, 20.0] {
            let mut l = Layer::zeros(1, 1);
            l.biases[0] = b;
            let out = Mlp::from_layers(vec![l]).unwrap().output(&[3.0]).unwrap()[0];
            assert!(out > prev && out < 1.0);
            prev = out;
        }
        assert!(prev > 1.0 - 1e-8);
    }

    #[test]
    fn hand_evaluated_two_two_one() {
        let hidden = Layer {
            inputs: 2,
            outputs: 2,
            weights: vec![0.5, -1.0, 0.25, 0.75],
            biases: vec![0.1, -0.2],
        };
        let out = Layer {
            inputs: 2,
            outputs: 1,
            weights: vec![1.5, -2.0],
            biases: vec![0.3],
        };
        let m = Mlp::from_layers(vec![hidden, out]).unwrap();
        let x = [0.8, 0.4];
        // h1 = s(0.5*0.8 - 1.0*0.4 + 0.1) = s(0.1); h2 = s(0.25*0.8 + 0.75*0.4 - 0.2) = s(0.3)
        let h1 = 1.0 / (1.0 + (-0.1f64).exp());
        let h2 = 1.0 / (1.0 + (-0.3f64).exp());
        let y = 1.0 / (1.0 + (-(1.5 * h1 - 2.0 * h2 + 0.3)).exp());
        let acts = m.forward(&x).unwrap();
        assert!((acts[1][0] - h1).abs() < 1e-12);
        assert!((acts[1][1] - h2).abs() < 1e-12);
        assert!((acts[2][0] - y).abs() < 1e-12);
    }

    #[test]
    fn forward_errors() {
        let mut m = Mlp::init(&[5, 6, 6], 1).unwrap();
        assert_eq!(
            m.forward(&[0.0; 4]),
            Err(MlpError::Dimension {
                expected: 5,
                found: 4
            })
        );
        assert_eq!(
            m.forward(&[0.0, 0.0, f64::NAN, 0.0, 0.0]),
            Err(MlpError::NonFinite)
        );
        assert_eq!(
            m.train_step(&[0.0; 5], &[0.0; 6], 0.1)
                .map(|_| ())
                .unwrap_err(),
            MlpError::Target
        );
    }

    #[test]
    fn zero_learning_rate_changes_nothing() {
        let mut m = Mlp::init(&[5, 6, 6], 3).unwrap();
        let before = m.clone();
        let target = one_hot(SleepStage::S2, 6).unwrap();
        let x = [0.1, 0.2, 0.3, 0.2, 0.2];
        let loss = m.train_step(&x, &target, 0.0).unwrap();
        assert_eq!(m, before);
        assert_eq!(loss, before.loss(&x, &target).unwrap());
    }

    #[test]
    fn repeated_steps_descend() {
        let mut m = Mlp::init(&[5, 6, 6], 4).unwrap();
        let target = one_hot(SleepStage::Rem, 6).unwrap();
        let x = [0.05, 0.6, 0.1, 0.15, 0.1];
        let mut last = f64::INFINITY;
        for _ in 0..100 {
            let loss = m.train_step(&x, &target, 0.1).unwrap();
            assert!(loss <= last);
            last = loss;
        }
    }

    #[test]
    fn argmax_and_ties() {
        assert_eq!(
            argmax_stage(&[0.9, 0.1, 0.1, 0.1, 0.1, 0.1]),
            SleepStage::Awake
        );
        assert_eq!(
            argmax_stage(&[0.1, 0.1, 0.7, 0.1, 0.1, 0.7]),
            SleepStage::S2
        );
        let outs = [0.2, 0.3, 0.1, 0.25, 0.6, 0.59];
        let scaled: Vec<f64> = outs.iter().map(|v: &f64| (3.0 * v).exp()).collect();
        assert_eq!(argmax_stage(&outs), argmax_stage(&scaled));
    }

    #[test]
    fn predict_checks_width() {
        let m = Mlp::init(&[5, 6, 6], 1).unwrap();
        assert!(m.predict(&[0.2; 5]).is_ok());
        assert!(matches!(
            m.predict(&[0.2; 10]),
            Err(MlpError::Dimension { .. })
        ));
    }

    #[test]
    fn flat_parameters_match_gradients() {
        let m = Mlp::init(&[3, 2, 2], 1).unwrap();
        assert_eq!(m.parameter_count(), 3 * 2 + 2 + 2 * 2 + 2);
        let (_, g) = m.gradients(&[0.1, 0.2, 0.3], &[0.0, 1.0]).unwrap();
        assert_eq!(g.flat().len(), m.parameter_count());
        assert_eq!(m.parameter(6), m.layers()[0].biases[0]);
        assert_eq!(m.parameter(8), m.layers()[1].weights[0]);
    }
}
