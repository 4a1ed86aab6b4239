//! EDF recordings: fixed-width text header followed by data records of
//! interleaved 16-bit little-endian samples.
//!
//! Reading maps each stored integer linearly onto the signal's physical range:
//!
//! ```text
//! phys = phys_min + (dig - dig_min) * (phys_max - phys_min) / (dig_max - dig_min)
//! ```
//!
//! Writing quantizes with round-half-away-from-zero, so a value already on the
//! digital grid survives a write/read cycle bit-exactly and any other value is
//! off by at most half a step.

mod header;

pub use header::{parse_header, EdfHeader, SignalSpec};

use std::io::Write;
use std::ops::Range;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum EdfError {
    #[error("truncated input: need {needed} bytes, have {available}")]
    Truncated { needed: usize, available: usize },
    #[error("invalid {field} field: {value:?}")]
    Field { field: &'static str, value: String },
    #[error("header declares {declared} bytes but its signal count implies {expected}")]
    HeaderSizeMismatch { declared: usize, expected: usize },
    #[error("signal {label:?}: inverted digital range {dig_min}..{dig_max}")]
    InvertedDigitalRange {
        label: String,
        dig_min: i32,
        dig_max: i32,
    },
    #[error("no signal labelled {0:?}")]
    UnknownSignal(String),
    #[error("label {0:?} matches more than one signal")]
    AmbiguousSignal(String),
    #[error("signal index {index} out of range ({n_signals} signals)")]
    SignalIndex { index: usize, n_signals: usize },
    #[error("records {start}..{end} outside recording of {n_records} records")]
    RecordRange {
        start: usize,
        end: usize,
        n_records: usize,
    },
    #[error(
        "series {label:?}: {len} samples is not a multiple of {samples_per_record} per record"
    )]
    PartialRecord {
        label: String,
        len: usize,
        samples_per_record: usize,
    },
    #[error("series {label:?}: sample {index} = {value} outside physical range [{min}, {max}]")]
    OutOfRange {
        label: String,
        index: usize,
        value: f64,
        min: f64,
        max: f64,
    },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Uniformly sampled signal in physical units.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSeries {
    pub label: String,
    pub sampling_rate: f64,
    pub samples: Vec<f64>,
}

impl SampleSeries {
    pub fn new(label: impl Into<String>, sampling_rate: f64, samples: Vec<f64>) -> Self {
        assert!(sampling_rate > 0.0, "sampling rate must be positive");
        Self {
            label: label.into(),
            sampling_rate,
            samples,
        }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sampling_rate
    }
}

/// Picks one signal out of a recording.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SignalSelector {
    Label(String),
    Index(usize),
}

impl From<&str> for SignalSelector {
    fn from(label: &str) -> Self {
        SignalSelector::Label(label.to_string())
    }
}

impl From<usize> for SignalSelector {
    fn from(index: usize) -> Self {
        SignalSelector::Index(index)
    }
}

/// A parsed header together with the raw bytes of the whole file.
#[derive(Debug, Clone)]
pub struct EdfRecording {
    header: EdfHeader,
    bytes: Vec<u8>,
}

impl EdfRecording {
    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self, EdfError> {
        let header = parse_header(&bytes)?;
        Ok(Self { header, bytes })
    }

    pub fn open(path: impl AsRef<Path>) -> Result<Self, EdfError> {
        Self::from_bytes(std::fs::read(path)?)
    }

    pub fn header(&self) -> &EdfHeader {
        &self.header
    }

    /// Resolves a selector to a signal index.
    pub fn signal_index(&self, selector: &SignalSelector) -> Result<usize, EdfError> {
        let signals = &self.header.signals;
        match selector {
            SignalSelector::Index(i) if *i < signals.len() => Ok(*i),
            SignalSelector::Index(i) => Err(EdfError::SignalIndex {
                index: *i,
                n_signals: signals.len(),
            }),
            SignalSelector::Label(label) => {
                let wanted = label.trim();
                let mut hits = signals
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.label.trim() == wanted)
                    .map(|(i, _)| i);
                match (hits.next(), hits.next()) {
                    (Some(i), None) => Ok(i),
                    (None, _) => Err(EdfError::UnknownSignal(label.clone())),
                    (Some(_), Some(_)) => Err(EdfError::AmbiguousSignal(label.clone())),
                }
            }
        }
    }

    /// Decodes one signal over the data records in `records` (all records
    /// when `None`) into physical units.
    pub fn read_signal(
        &self,
        selector: &SignalSelector,
        records: Option<Range<usize>>,
    ) -> Result<SampleSeries, EdfError> {
        let h = &self.header;
        let index = self.signal_index(selector)?;
        let records = records.unwrap_or(0..h.n_records);
        if records.start > records.end || records.end > h.n_records {
            return Err(EdfError::RecordRange {
                start: records.start,
                end: records.end,
                n_records: h.n_records,
            });
        }

        let record_bytes = h.record_bytes();
        let data_end = h.header_bytes + h.n_records * record_bytes;
        if self.bytes.len() < data_end {
            return Err(EdfError::Truncated {
                needed: data_end,
                available: self.bytes.len(),
            });
        }

        let spec = &h.signals[index];
        let offset: usize = h.signals[..index]
            .iter()
            .map(|s| s.samples_per_record * 2)
            .sum();
        let width = spec.samples_per_record * 2;
        let mut samples = Vec::with_capacity(records.len() * spec.samples_per_record);
        for r in records {
            let start = h.header_bytes + r * record_bytes + offset;
            samples.extend(
                self.bytes[start..start + width]
                    .chunks_exact(2)
                    .map(|b| spec.to_physical(i16::from_le_bytes([b[0], b[1]]))),
            );
        }
        Ok(SampleSeries {
            label: spec.label.clone(),
            sampling_rate: h.sampling_rate(index),
            samples,
        })
    }
}

/// Main-header fields supplied by the caller when writing.
#[derive(Debug, Clone, PartialEq)]
pub struct HeaderFields {
    pub patient_id: String,
    pub recording_id: String,
    pub start_date: String,
    pub start_time: String,
    pub record_duration_s: f64,
}

impl Default for HeaderFields {
    fn default() -> Self {
        Self {
            patient_id: "X X X X".into(),
            recording_id: "Startdate X X X X".into(),
            start_date: "01.01.00".into(),
            start_time: "00.00.00".into(),
            record_duration_s: 30.0,
        }
    }
}

/// Writes `signals` as one EDF stream and returns the header that was written.
///
/// Each signal's `samples_per_record` must equal its sampling rate times the
/// record duration, and every series must span the same number of records.
pub fn write_recording<W: Write>(
    signals: &[(SignalSpec, &SampleSeries)],
    fields: &HeaderFields,
    mut out: W,
) -> Result<EdfHeader, EdfError> {
    if signals.is_empty() {
        return Err(EdfError::Invalid("nothing to write".into()));
    }
    let mut n_records = None;
    for (spec, series) in signals {
        spec.validate()?;
        let expected = series.sampling_rate * fields.record_duration_s;
        if (expected - spec.samples_per_record as f64).abs() > 1e-9 {
            return Err(EdfError::Invalid(format!(
                "series {:?}: {} Hz x {} s record does not give {} samples per record",
                series.label,
                series.sampling_rate,
                fields.record_duration_s,
                spec.samples_per_record
            )));
        }
        if series.len() % spec.samples_per_record != 0 {
            return Err(EdfError::PartialRecord {
                label: series.label.clone(),
                len: series.len(),
                samples_per_record: spec.samples_per_record,
            });
        }
        let n = series.len() / spec.samples_per_record;
        match n_records {
            None => n_records = Some(n),
            Some(m) if m != n => {
                return Err(EdfError::Invalid(format!(
                    "series {:?} spans {n} records, expected {m}",
                    series.label
                )))
            }
            _ => {}
        }
    }
    let n_records = n_records.unwrap_or(0);

    // Quantize everything before emitting a byte so failures leave `out` untouched.
    let digital: Vec<Vec<i16>> = signals
        .iter()
        .map(|(spec, series)| quantize(spec, series))
        .collect::<Result<_, _>>()?;

    let header = EdfHeader {
        version: "0".into(),
        patient_id: fields.patient_id.clone(),
        recording_id: fields.recording_id.clone(),
        start_date: fields.start_date.clone(),
        start_time: fields.start_time.clone(),
        header_bytes: 256 + 256 * signals.len(),
        reserved: String::new(),
        n_records,
        record_duration_s: fields.record_duration_s,
        signals: signals.iter().map(|(spec, _)| spec.clone()).collect(),
    };
    header.validate()?;

    let mut buf = header.to_bytes()?;
    buf.reserve(n_records * header.record_bytes());
    for r in 0..n_records {
        for ((spec, _), codes) in signals.iter().zip(&digital) {
            let n = spec.samples_per_record;
            for &code in &codes[r * n..(r + 1) * n] {
                buf.extend_from_slice(&code.to_le_bytes());
            }
        }
    }
    out.write_all(&buf)?;
    Ok(header)
}

fn quantize(spec: &SignalSpec, series: &SampleSeries) -> Result<Vec<i16>, EdfError> {
    let (lo, hi) = if spec.phys_min < spec.phys_max {
        (spec.phys_min, spec.phys_max)
    } else {
        (spec.phys_max, spec.phys_min)
    };
    // Decoding the extreme codes can land an ulp outside the range.
    let slack = 1e-6 * spec.gain().abs();
    series
        .samples
        .iter()
        .enumerate()
        .map(|(index, &value)| {
            if !(lo - slack..=hi + slack).contains(&value) {
                return Err(EdfError::OutOfRange {
                    label: series.label.clone(),
                    index,
                    value,
                    min: lo,
                    max: hi,
                });
            }
            let code = spec
                .to_digital(value)
                .clamp(spec.dig_min as f64, spec.dig_max as f64);
            Ok(code as i16)
        })
        .collect()
}
