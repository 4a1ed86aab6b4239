//! Synthetic EEG with a known band composition.
//!
//! An epoch is a sum of one sinusoid per band, each sitting exactly on the
//! DFT bin at the middle of its band, with squared amplitude proportional to
//! the band's target weight, plus optional white Gaussian noise. Because the
//! tones fall on exact bins, a noise-free epoch reproduces its target
//! relative band powers to rounding error.

use std::f64::consts::PI;

use crate::dataset::{build_dataset, DatasetError, Hypnogram, LabeledDataset};
use crate::edf::SampleSeries;
use crate::rng::SeededRng;
use crate::spectral::{self, Band, Epoch, SpectralError, CROP_HIGH_HZ, CROP_LOW_HZ, EPOCH_SECONDS};
use crate::stage::SleepStage;

/// Root-sum-square amplitude of the tone mixture, µV.
pub const TONE_AMPLITUDE_UV: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SynthError {
    #[error("band weights {0:?} must be non-negative and sum to 1")]
    Weights([f64; 5]),
    #[error("noise fraction {0} must lie in [0, 1)")]
    Noise(f64),
    #[error("{0} band has no DFT bin at this sampling rate")]
    BandAboveNyquist(Band),
    #[error("profile for {0} cannot be synthesized; movement epochs are generated separately")]
    MovementProfile(SleepStage),
    #[error("profile file line {line}: {message}")]
    ProfileFile { line: usize, message: String },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
}

/// Target composition for epochs of one stage.
#[derive(Debug, Clone, PartialEq)]
pub struct StageProfile {
    pub stage: SleepStage,
    /// Target relative power per band (delta, theta, alpha, sigma, beta).
    pub band_weights: [f64; 5],
    /// Expected share of retained spectral power contributed by noise.
    pub noise_fraction: f64,
}

impl StageProfile {
    pub fn new(stage: SleepStage, band_weights: [f64; 5], noise_fraction: f64) -> Self {
        Self {
            stage,
            band_weights,
            noise_fraction,
        }
    }

    pub fn validate(&self) -> Result<(), SynthError> {
        let sum: f64 = self.band_weights.iter().sum();
        if self.band_weights.iter().any(|w| w.is_nan() || *w < 0.0) || (sum - 1.0).abs() > 1e-9 {
            return Err(SynthError::Weights(self.band_weights));
        }
        if !(0.0..1.0).contains(&self.noise_fraction) {
            return Err(SynthError::Noise(self.noise_fraction));
        }
        if self.stage == SleepStage::Movement {
            return Err(SynthError::MovementProfile(self.stage));
        }
        Ok(())
    }
}

/// Disjoint dominant band per stage; REM mixes theta and beta.
pub fn separable_profiles(noise_fraction: f64) -> Vec<StageProfile> {
    use SleepStage::*;
    [
        (Awake, [0.05, 0.05, 0.80, 0.05, 0.05]),
        (S1, [0.05, 0.80, 0.05, 0.05, 0.05]),
        (S2, [0.05, 0.05, 0.05, 0.80, 0.05]),
        (S3, [0.80, 0.05, 0.05, 0.05, 0.05]),
        (S4, [0.05, 0.05, 0.05, 0.05, 0.80]),
        (Rem, [0.05, 0.425, 0.05, 0.05, 0.425]),
    ]
    .into_iter()
    .map(|(s, w)| StageProfile::new(s, w, noise_fraction))
    .collect()
}

/// Qualitative clinical compositions: alpha while awake, theta in stage 1 and
/// REM, theta with sigma in stage 2, delta in stages 3 and 4. Stage 3 and 4
/// differ only slightly in delta share, as do stage 1 and REM.
pub fn clinical_profiles() -> Vec<StageProfile> {
    use SleepStage::*;
    [
        (Awake, [0.10, 0.10, 0.60, 0.10, 0.10], 0.3),
        (S1, [0.20, 0.44, 0.08, 0.10, 0.18], 0.5),
        (S2, [0.22, 0.36, 0.06, 0.24, 0.12], 0.5),
        (S3, [0.70, 0.12, 0.05, 0.08, 0.05], 0.5),
        (S4, [0.72, 0.11, 0.05, 0.07, 0.05], 0.5),
        (Rem, [0.20, 0.45, 0.08, 0.08, 0.19], 0.5),
    ]
    .into_iter()
    .map(|(s, w, p)| StageProfile::new(s, w, p))
    .collect()
}

/// Non-movement epoch counts of a typical clinical night, in class order.
pub const CLINICAL_NIGHT_COUNTS: [usize; 6] = [67, 54, 347, 107, 292, 233];
/// Movement epochs of the same night.
pub const CLINICAL_NIGHT_MOVEMENT: usize = 14;

/// DFT bin of each band's tone for an `n`-sample epoch of `duration_s`.
fn tone_bins(n: usize, duration_s: f64) -> [Option<usize>; 5] {
    Band::ALL.map(|b| b.bin_range(n, duration_s).map(|(lo, hi)| (lo + hi) / 2))
}

/// Number of DFT bins inside the retained 0.5-32 Hz range.
fn retained_bins(n: usize, duration_s: f64) -> usize {
    (0..=n / 2)
        .filter(|&k| {
            let f = k as f64 / duration_s;
            (CROP_LOW_HZ - 1e-9..=CROP_HIGH_HZ + 1e-9).contains(&f)
        })
        .count()
}

fn generate(
    profile: &StageProfile,
    sampling_rate: f64,
    duration_s: f64,
    rng: &mut SeededRng,
) -> Result<Vec<f64>, SynthError> {
    profile.validate()?;
    let n = spectral::samples_per_epoch(sampling_rate, duration_s)?;
    let bins = tone_bins(n, duration_s);
    let mut samples = vec![0.0; n];
    for (i, (&w, bin)) in profile.band_weights.iter().zip(bins).enumerate() {
        // Draw the phase even for silent bands so the noise stream does not
        // depend on which bands are active.
        let phase = rng.uniform(0.0, 2.0 * PI);
        if w == 0.0 {
            continue;
        }
        let k = bin.ok_or(SynthError::BandAboveNyquist(Band::ALL[i]))?;
        let amp = TONE_AMPLITUDE_UV * w.sqrt();
        let omega = 2.0 * PI * k as f64 / n as f64;
        for (t, s) in samples.iter_mut().enumerate() {
            *s += amp * (omega * t as f64 + phase).cos();
        }
    }
    let p = profile.noise_fraction;
    if p > 0.0 {
        // Tone power over the retained bins is (A N / 2)^2; white noise of
        // variance s^2 adds N s^2 per bin on average.
        let m = retained_bins(n, duration_s) as f64;
        let sigma = (p / (1.0 - p) * n as f64 * TONE_AMPLITUDE_UV.powi(2) / (4.0 * m)).sqrt();
        for s in &mut samples {
            *s += sigma * rng.normal();
        }
    }
    Ok(samples)
}

/// One synthetic epoch; deterministic in `seed`.
pub fn synth_epoch(
    profile: &StageProfile,
    sampling_rate: f64,
    duration_s: f64,
    seed: u64,
) -> Result<Epoch, SynthError> {
    let mut rng = SeededRng::new(seed);
    Ok(Epoch {
        index: 0,
        samples: generate(profile, sampling_rate, duration_s, &mut rng)?,
        sampling_rate,
        duration_s,
    })
}

/// A synthetic recording and its ground-truth scoring.
#[derive(Debug, Clone, PartialEq)]
pub struct SynthNight {
    pub series: SampleSeries,
    pub hypnogram: Hypnogram,
}

/// Concatenates `count` epochs per profile plus `movement` broadband
/// movement epochs, in a seeded random order.
pub fn synth_night(
    profiles_with_counts: &[(StageProfile, usize)],
    movement: usize,
    sampling_rate: f64,
    duration_s: f64,
    seed: u64,
) -> Result<SynthNight, SynthError> {
    for (p, _) in profiles_with_counts {
        p.validate()?;
    }
    let n = spectral::samples_per_epoch(sampling_rate, duration_s)?;
    let mut plan: Vec<Option<usize>> = profiles_with_counts
        .iter()
        .enumerate()
        .flat_map(|(i, (_, count))| std::iter::repeat_n(Some(i), *count))
        .chain(std::iter::repeat_n(None, movement))
        .collect();
    SeededRng::with_stream(seed, 0).shuffle(&mut plan);

    let mut samples = Vec::with_capacity(plan.len() * n);
    let mut labels = Vec::with_capacity(plan.len());
    for (i, slot) in plan.iter().enumerate() {
        let mut rng = SeededRng::with_stream(seed, i as u64 + 1);
        match slot {
            Some(p) => {
                let profile = &profiles_with_counts[*p].0;
                samples.extend(generate(profile, sampling_rate, duration_s, &mut rng)?);
                labels.push(profile.stage);
            }
            None => {
                samples.extend((0..n).map(|_| TONE_AMPLITUDE_UV * rng.normal()));
                labels.push(SleepStage::Movement);
            }
        }
    }
    Ok(SynthNight {
        series: SampleSeries::new("EEG synth", sampling_rate, samples),
        hypnogram: Hypnogram::new(labels, duration_s),
    })
}

/// Synthetic labeled corpus of 30 s epochs with features computed through
/// the spectral pipeline.
pub fn synth_dataset(
    profiles_with_counts: &[(StageProfile, usize)],
    sampling_rate: f64,
    seed: u64,
) -> Result<(LabeledDataset, Hypnogram), SynthError> {
    let night = synth_night(profiles_with_counts, 0, sampling_rate, EPOCH_SECONDS, seed)?;
    let features: Vec<Vec<f64>> = spectral::signal_features(&night.series, EPOCH_SECONDS)?
        .into_iter()
        .map(|f| f.map_or_else(|| vec![f64::NAN; 5], |f| f.rsp.to_vec()))
        .collect();
    let dataset = build_dataset(&features, 5, &night.hypnogram)?;
    Ok((dataset, night.hypnogram))
}

/// Pairs profiles with per-class counts given in class order; stages with no
/// profile are skipped.
pub fn with_counts(profiles: &[StageProfile], counts: &[usize; 6]) -> Vec<(StageProfile, usize)> {
    profiles
        .iter()
        .filter_map(|p| p.stage.class_index().map(|c| (p.clone(), counts[c])))
        .filter(|(_, n)| *n > 0)
        .collect()
}

/// Parses `stage,delta,theta,alpha,sigma,beta,noise` rows. A header row,
/// blank lines and `#` comments are skipped.
pub fn parse_profiles(text: &str) -> Result<Vec<StageProfile>, SynthError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("stage,") {
            continue;
        }
        let err = |message: String| SynthError::ProfileFile {
            line: line_no,
            message,
        };
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        if cells.len() != 7 {
            return Err(err(format!("expected 7 columns, found {}", cells.len())));
        }
        let stage = SleepStage::parse_name(cells[0])
            .ok_or_else(|| err(format!("unknown stage {:?}", cells[0])))?;
        let nums = cells[1..]
            .iter()
            .map(|c| {
                c.parse::<f64>()
                    .map_err(|_| err(format!("bad number {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let profile = StageProfile::new(
            stage,
            [nums[0], nums[1], nums[2], nums[3], nums[4]],
            nums[5],
        );
        profile.validate().map_err(|e| err(e.to_string()))?;
        out.push(profile);
    }
    Ok(out)
}

pub fn write_profiles(profiles: &[StageProfile]) -> String {
    let mut out = String::from("stage,delta,theta,alpha,sigma,beta,noise\n");
    for p in profiles {
        let w = p.band_weights;
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            p.stage.name(),
            w[0],
            w[1],
            w[2],
            w[3],
            w[4],
            p.noise_fraction
        ));
    }
    out
}
