//! Epoch segmentation and relative band powers.
//!
//! Each epoch is transformed with an unwindowed, unpadded DFT. Bins between
//! 0.5 Hz and 32 Hz (both inclusive) are kept, and the kept power is split
//! into five sleep bands:
//!
//! | band  | range (Hz)  |
//! |-------|-------------|
//! | delta | [0.5, 4]    |
//! | theta | ]4, 8]      |
//! | alpha | ]8, 12]     |
//! | sigma | ]12, 16]    |
//! | beta  | ]16, 32]    |
//!
//! The relative power of a band is its summed power over the total kept power.
//! With 30 s epochs the bin spacing is 1/30 Hz and every band edge falls
//! exactly on a bin.

use std::fmt;

use rustfft::{num_complex::Complex, FftPlanner};

use crate::edf::SampleSeries;

/// Lowest retained frequency (inclusive).
pub const CROP_LOW_HZ: f64 = 0.5;
/// Highest retained frequency (inclusive).
pub const CROP_HIGH_HZ: f64 = 32.0;
/// Scoring epoch length.
pub const EPOCH_SECONDS: f64 = 30.0;

/// Band edges are compared in bin units with this slack so that
/// `edge * duration` landing on an integer is never lost to rounding.
const EDGE_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    Delta,
    Theta,
    Alpha,
    Sigma,
    Beta,
}

impl Band {
    pub const ALL: [Band; 5] = [
        Band::Delta,
        Band::Theta,
        Band::Alpha,
        Band::Sigma,
        Band::Beta,
    ];

    /// `(low, high)` edges in Hz. Only delta includes its lower edge.
    pub fn edges_hz(self) -> (f64, f64) {
        match self {
            Band::Delta => (0.5, 4.0),
            Band::Theta => (4.0, 8.0),
            Band::Alpha => (8.0, 12.0),
            Band::Sigma => (12.0, 16.0),
            Band::Beta => (16.0, 32.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Band::Delta => "delta",
            Band::Theta => "theta",
            Band::Alpha => "alpha",
            Band::Sigma => "sigma",
            Band::Beta => "beta",
        }
    }

    /// Band containing `hz`, if it lies in the retained range.
    pub fn of_frequency(hz: f64) -> Option<Band> {
        Self::of_bin(hz, 1.0)
    }

    /// Band of DFT bin `bin` for an epoch of `duration_s` seconds.
    fn of_bin(bin: f64, duration_s: f64) -> Option<Band> {
        let lo = CROP_LOW_HZ * duration_s;
        if bin < lo - EDGE_EPS {
            return None;
        }
        Band::ALL
            .into_iter()
            .find(|b| bin <= b.edges_hz().1 * duration_s + EDGE_EPS)
    }

    /// Inclusive range of DFT bins belonging to this band for an epoch of
    /// `n` samples lasting `duration_s`. Empty (`None`) when the band lies
    /// above Nyquist.
    pub fn bin_range(self, n: usize, duration_s: f64) -> Option<(usize, usize)> {
        let nyquist = n / 2;
        let bins: Vec<usize> = (0..=nyquist)
            .filter(|&k| Band::of_bin(k as f64, duration_s) == Some(self))
            .collect();
        Some((*bins.first()?, *bins.last()?))
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectralError {
    #[error("epoch of {seconds} s at {rate} Hz is not a whole number of samples")]
    NonIntegerEpoch { seconds: f64, rate: f64 },
    #[error("epoch has {0} samples, need at least 2")]
    TooShort(usize),
    #[error("epoch has no power between 0.5 and 32 Hz")]
    ZeroPower,
}

/// One scoring window of a signal.
#[derive(Debug, Clone, PartialEq)]
pub struct Epoch {
    pub index: usize,
    pub samples: Vec<f64>,
    pub sampling_rate: f64,
    pub duration_s: f64,
}

/// Retained part of an epoch's power spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// DFT bin number of each retained value.
    pub bins: Vec<usize>,
    pub bin_hz: Vec<f64>,
    /// Squared DFT magnitude, µV².
    pub power: Vec<f64>,
    pub resolution_hz: f64,
    duration_s: f64,
}

impl Spectrum {
    pub fn duration_s(&self) -> f64 {
        self.duration_s
    }

    /// Band of each retained bin.
    pub fn bands(&self) -> impl Iterator<Item = Band> + '_ {
        self.bins.iter().map(|&k| {
            Band::of_bin(k as f64, self.duration_s).expect("retained bins lie inside a band")
        })
    }
}

/// Relative powers of the five bands for one epoch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralFeatures {
    pub rsp: [f64; 5],
}

impl SpectralFeatures {
    pub fn get(&self, band: Band) -> f64 {
        self.rsp[band as usize]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.rsp
    }
}

/// Samples per epoch, if `duration_s` covers a whole number of samples.
pub fn samples_per_epoch(sampling_rate: f64, duration_s: f64) -> Result<usize, SpectralError> {
    let n = sampling_rate * duration_s;
    let rounded = n.round();
    if !(n.is_finite() && rounded >= 1.0 && (n - rounded).abs() < 1e-9) {
        return Err(SpectralError::NonIntegerEpoch {
            seconds: duration_s,
            rate: sampling_rate,
        });
    }
    Ok(rounded as usize)
}

/// Cuts `series` into consecutive non-overlapping windows; a trailing
/// partial window is dropped.
pub fn segment_epochs(series: &SampleSeries, duration_s: f64) -> Result<Vec<Epoch>, SpectralError> {
    let n = samples_per_epoch(series.sampling_rate, duration_s)?;
    Ok(series
        .samples
        .chunks_exact(n)
        .enumerate()
        .map(|(index, chunk)| Epoch {
            index,
            samples: chunk.to_vec(),
            sampling_rate: series.sampling_rate,
            duration_s,
        })
        .collect())
}

/// Squared magnitude of every DFT coefficient, `0..n`.
pub fn full_power_spectrum(samples: &[f64]) -> Vec<f64> {
    let mut buf: Vec<Complex<f64>> = samples.iter().map(|&x| Complex::new(x, 0.0)).collect();
    FftPlanner::new()
        .plan_fft_forward(buf.len())
        .process(&mut buf);
    buf.iter().map(|c| c.norm_sqr()).collect()
}

/// Power spectrum of `epoch`, restricted to 0.5..=32 Hz.
pub fn power_spectrum(epoch: &Epoch) -> Result<Spectrum, SpectralError> {
    let n = epoch.samples.len();
    if n < 2 {
        return Err(SpectralError::TooShort(n));
    }
    let duration_s = n as f64 / epoch.sampling_rate;
    let full = full_power_spectrum(&epoch.samples);
    let bins: Vec<usize> = (0..=n / 2)
        .filter(|&k| Band::of_bin(k as f64, duration_s).is_some())
        .collect();
    Ok(Spectrum {
        bin_hz: bins.iter().map(|&k| k as f64 / duration_s).collect(),
        power: bins.iter().map(|&k| full[k]).collect(),
        bins,
        resolution_hz: 1.0 / duration_s,
        duration_s,
    })
}

/// Band powers (BSP) of a spectrum, in band order.
pub fn band_powers(spectrum: &Spectrum) -> [f64; 5] {
    let mut bsp = [0.0; 5];
    for (band, p) in spectrum.bands().zip(&spectrum.power) {
        bsp[band as usize] += p;
    }
    bsp
}

/// Relative spectral power per band: BSP / TSP.
pub fn relative_band_powers(spectrum: &Spectrum) -> Result<SpectralFeatures, SpectralError> {
    let bsp = band_powers(spectrum);
    let tsp: f64 = bsp.iter().sum();
    if tsp.is_nan() || tsp <= 0.0 {
        return Err(SpectralError::ZeroPower);
    }
    Ok(SpectralFeatures {
        rsp: bsp.map(|b| b / tsp),
    })
}

/// Features of one epoch; `Err(ZeroPower)` marks an unclassifiable epoch.
pub fn epoch_features(epoch: &Epoch) -> Result<SpectralFeatures, SpectralError> {
    relative_band_powers(&power_spectrum(epoch)?)
}

/// Per-epoch features of a whole signal, `None` for unclassifiable epochs.
/// Epochs are processed in parallel; output is in epoch order.
pub fn signal_features(
    series: &SampleSeries,
    duration_s: f64,
) -> Result<Vec<Option<SpectralFeatures>>, SpectralError> {
    use rayon::prelude::*;
    let epochs = segment_epochs(series, duration_s)?;
    epochs
        .par_iter()
        .map(|e| match epoch_features(e) {
            Ok(f) => Ok(Some(f)),
            Err(SpectralError::ZeroPower) => Ok(None),
            Err(e) => Err(e),
        })
        .collect()
}
