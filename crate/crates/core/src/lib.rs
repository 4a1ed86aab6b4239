//! Automatic sleep staging from a single EEG derivation.
//!
//! The pipeline reads an EDF recording ([`edf`]), cuts the chosen EEG signal
//! into 30 s epochs and reduces each to five relative band powers
//! ([`spectral`]), pairs them with an expert hypnogram ([`dataset`]), trains
//! and cross-validates a small multilayer perceptron ([`mlp`]), and reports
//! agreement and sleep architecture ([`metrics`]). [`synth`] generates
//! recordings with a known band composition for testing and demos, and
//! [`cli`] ties everything together for batch use.

pub mod cli;
pub mod dataset;
pub mod edf;
pub mod features;
pub mod metrics;
pub mod mlp;
pub mod rng;
pub mod spectral;
pub mod stage;
pub mod synth;

pub use dataset::{Hypnogram, LabeledDataset};
pub use edf::{EdfRecording, SampleSeries};
pub use mlp::{Mlp, TrainConfig};
pub use spectral::SpectralFeatures;
pub use stage::SleepStage;
