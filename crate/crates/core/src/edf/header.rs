//! Fixed-width EDF header fields.

use super::EdfError;

pub(crate) const MAIN_HEADER_LEN: usize = 256;
pub(crate) const SIGNAL_HEADER_LEN: usize = 256;

/// Per-signal header entry.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    pub label: String,
    pub transducer: String,
    pub physical_dim: String,
    pub phys_min: f64,
    pub phys_max: f64,
    pub dig_min: i32,
    pub dig_max: i32,
    pub prefilter: String,
    pub samples_per_record: usize,
    /// 32-byte reserved field, kept verbatim (trailing spaces stripped).
    pub reserved: String,
}

impl SignalSpec {
    /// A 16-bit full-range signal with the given physical range.
    pub fn new(label: &str, phys_min: f64, phys_max: f64, samples_per_record: usize) -> Self {
        Self {
            label: label.to_string(),
            transducer: String::new(),
            physical_dim: "uV".to_string(),
            phys_min,
            phys_max,
            dig_min: i16::MIN as i32,
            dig_max: i16::MAX as i32,
            prefilter: String::new(),
            samples_per_record,
            reserved: String::new(),
        }
    }

    /// Physical units per digital step.
    pub fn gain(&self) -> f64 {
        (self.phys_max - self.phys_min) / (self.dig_max - self.dig_min) as f64
    }

    pub fn to_physical(&self, digital: i16) -> f64 {
        self.phys_min + (digital as i32 - self.dig_min) as f64 * self.gain()
    }

    /// Nearest digital code, rounding half away from zero.
    pub(crate) fn to_digital(&self, physical: f64) -> f64 {
        ((physical - self.phys_min) / self.gain() + self.dig_min as f64).round()
    }

    pub(crate) fn validate(&self) -> Result<(), EdfError> {
        if self.dig_min >= self.dig_max {
            return Err(EdfError::InvertedDigitalRange {
                label: self.label.clone(),
                dig_min: self.dig_min,
                dig_max: self.dig_max,
            });
        }
        if self.dig_min < i16::MIN as i32 || self.dig_max > i16::MAX as i32 {
            return Err(EdfError::Invalid(format!(
                "signal {:?}: digital range {}..{} exceeds 16 bits",
                self.label, self.dig_min, self.dig_max
            )));
        }
        if !(self.phys_min.is_finite() && self.phys_max.is_finite())
            || self.phys_min == self.phys_max
        {
            return Err(EdfError::Invalid(format!(
                "signal {:?}: degenerate physical range {}..{}",
                self.label, self.phys_min, self.phys_max
            )));
        }
        if self.samples_per_record == 0 {
            return Err(EdfError::Invalid(format!(
                "signal {:?}: zero samples per record",
                self.label
            )));
        }
        Ok(())
    }
}

/// Parsed EDF main header plus its signal table.
#[derive(Debug, Clone, PartialEq)]
pub struct EdfHeader {
    pub version: String,
    pub patient_id: String,
    pub recording_id: String,
    /// `dd.mm.yy`
    pub start_date: String,
    /// `hh.mm.ss`
    pub start_time: String,
    pub header_bytes: usize,
    /// 44-byte reserved field, kept verbatim (trailing spaces stripped).
    pub reserved: String,
    pub n_records: usize,
    pub record_duration_s: f64,
    pub signals: Vec<SignalSpec>,
}

impl EdfHeader {
    pub fn n_signals(&self) -> usize {
        self.signals.len()
    }

    /// Recording length covered by the data records, in seconds.
    pub fn duration_s(&self) -> f64 {
        self.n_records as f64 * self.record_duration_s
    }

    /// Bytes per data record (all signals, 2 bytes per sample).
    pub fn record_bytes(&self) -> usize {
        self.signals.iter().map(|s| s.samples_per_record * 2).sum()
    }

    /// Sampling rate of signal `index` in Hz.
    pub fn sampling_rate(&self, index: usize) -> f64 {
        self.signals[index].samples_per_record as f64 / self.record_duration_s
    }

    pub(crate) fn validate(&self) -> Result<(), EdfError> {
        if self.signals.is_empty() {
            return Err(EdfError::Invalid("recording declares no signals".into()));
        }
        let expected = MAIN_HEADER_LEN + SIGNAL_HEADER_LEN * self.signals.len();
        if self.header_bytes != expected {
            return Err(EdfError::HeaderSizeMismatch {
                declared: self.header_bytes,
                expected,
            });
        }
        if !(self.record_duration_s.is_finite() && self.record_duration_s > 0.0) {
            return Err(EdfError::Invalid(format!(
                "record duration must be positive, got {}",
                self.record_duration_s
            )));
        }
        self.signals.iter().try_for_each(SignalSpec::validate)
    }

    /// Serializes the `header_bytes`-long text header.
    pub fn to_bytes(&self) -> Result<Vec<u8>, EdfError> {
        let mut out = Vec::with_capacity(self.header_bytes);
        put(&mut out, "version", &self.version, 8)?;
        put(&mut out, "patient", &self.patient_id, 80)?;
        put(&mut out, "recording", &self.recording_id, 80)?;
        put(&mut out, "start date", &self.start_date, 8)?;
        put(&mut out, "start time", &self.start_time, 8)?;
        put(&mut out, "header bytes", &self.header_bytes.to_string(), 8)?;
        put(&mut out, "reserved", &self.reserved, 44)?;
        put(&mut out, "records", &self.n_records.to_string(), 8)?;
        put(
            &mut out,
            "duration",
            &format_decimal(self.record_duration_s),
            8,
        )?;
        put(&mut out, "signal count", &self.signals.len().to_string(), 4)?;

        type Field = fn(&SignalSpec) -> String;
        let columns: [(&str, usize, Field); 10] = [
            ("label", 16, |s| s.label.clone()),
            ("transducer", 80, |s| s.transducer.clone()),
            ("physical dimension", 8, |s| s.physical_dim.clone()),
            ("physical minimum", 8, |s| format_decimal(s.phys_min)),
            ("physical maximum", 8, |s| format_decimal(s.phys_max)),
            ("digital minimum", 8, |s| s.dig_min.to_string()),
            ("digital maximum", 8, |s| s.dig_max.to_string()),
            ("prefiltering", 80, |s| s.prefilter.clone()),
            ("samples per record", 8, |s| {
                s.samples_per_record.to_string()
            }),
            ("signal reserved", 32, |s| s.reserved.clone()),
        ];
        for (name, width, field) in columns {
            for signal in &self.signals {
                put(&mut out, name, &field(signal), width)?;
            }
        }
        debug_assert_eq!(out.len(), self.header_bytes);
        Ok(out)
    }
}

/// Parses the main header and signal table. Never reads past `header_bytes`.
pub fn parse_header(raw: &[u8]) -> Result<EdfHeader, EdfError> {
    if raw.len() < MAIN_HEADER_LEN {
        return Err(EdfError::Truncated {
            needed: MAIN_HEADER_LEN,
            available: raw.len(),
        });
    }
    let mut cur = Cursor { raw, pos: 0 };
    let version = cur.text("version", 8)?;
    let patient_id = cur.text("patient", 80)?;
    let recording_id = cur.text("recording", 80)?;
    let start_date = cur.text("start date", 8)?;
    let start_time = cur.text("start time", 8)?;
    let header_bytes: usize = cur.number("header bytes", 8)?;
    let reserved = cur.text("reserved", 44)?;
    let n_records: i64 = cur.number("records", 8)?;
    let record_duration_s: f64 = cur.number("duration", 8)?;
    let n_signals: usize = cur.number("signal count", 4)?;

    if n_records < 0 {
        return Err(EdfError::Invalid(format!(
            "record count {n_records} (unknown length) is not supported"
        )));
    }
    if n_signals == 0 {
        return Err(EdfError::Invalid("recording declares no signals".into()));
    }
    let expected = MAIN_HEADER_LEN + SIGNAL_HEADER_LEN * n_signals;
    if header_bytes != expected {
        return Err(EdfError::HeaderSizeMismatch {
            declared: header_bytes,
            expected,
        });
    }
    if raw.len() < header_bytes {
        return Err(EdfError::Truncated {
            needed: header_bytes,
            available: raw.len(),
        });
    }

    let labels = cur.texts("label", 16, n_signals)?;
    let transducers = cur.texts("transducer", 80, n_signals)?;
    let dims = cur.texts("physical dimension", 8, n_signals)?;
    let phys_mins: Vec<f64> = cur.numbers("physical minimum", 8, n_signals)?;
    let phys_maxs: Vec<f64> = cur.numbers("physical maximum", 8, n_signals)?;
    let dig_mins: Vec<i32> = cur.numbers("digital minimum", 8, n_signals)?;
    let dig_maxs: Vec<i32> = cur.numbers("digital maximum", 8, n_signals)?;
    let prefilters = cur.texts("prefiltering", 80, n_signals)?;
    let spr: Vec<usize> = cur.numbers("samples per record", 8, n_signals)?;
    let sig_reserved = cur.texts("signal reserved", 32, n_signals)?;

    let signals = (0..n_signals)
        .map(|i| SignalSpec {
            label: labels[i].clone(),
            transducer: transducers[i].clone(),
            physical_dim: dims[i].clone(),
            phys_min: phys_mins[i],
            phys_max: phys_maxs[i],
            dig_min: dig_mins[i],
            dig_max: dig_maxs[i],
            prefilter: prefilters[i].clone(),
            samples_per_record: spr[i],
            reserved: sig_reserved[i].clone(),
        })
        .collect();

    let header = EdfHeader {
        version,
        patient_id,
        recording_id,
        start_date,
        start_time,
        header_bytes,
        reserved,
        n_records: n_records as usize,
        record_duration_s,
        signals,
    };
    header.validate()?;
    Ok(header)
}

struct Cursor<'a> {
    raw: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn text(&mut self, field: &'static str, width: usize) -> Result<String, EdfError> {
        let end = self.pos + width;
        if end > self.raw.len() {
            return Err(EdfError::Truncated {
                needed: end,
                available: self.raw.len(),
            });
        }
        let bytes = &self.raw[self.pos..end];
        self.pos = end;
        if let Some(&b) = bytes.iter().find(|b| !(0x20..=0x7e).contains(*b)) {
            return Err(EdfError::Field {
                field,
                value: format!("non-printable byte 0x{b:02x}"),
            });
        }
        // Printable ASCII is valid UTF-8.
        let s = std::str::from_utf8(bytes).expect("ascii");
        Ok(s.trim_end_matches(' ').to_string())
    }

    fn number<T: std::str::FromStr>(
        &mut self,
        field: &'static str,
        width: usize,
    ) -> Result<T, EdfError> {
        let s = self.text(field, width)?;
        s.trim()
            .parse()
            .map_err(|_| EdfError::Field { field, value: s })
    }

    fn texts(
        &mut self,
        field: &'static str,
        width: usize,
        n: usize,
    ) -> Result<Vec<String>, EdfError> {
        (0..n).map(|_| self.text(field, width)).collect()
    }

    fn numbers<T: std::str::FromStr>(
        &mut self,
        field: &'static str,
        width: usize,
        n: usize,
    ) -> Result<Vec<T>, EdfError> {
        (0..n).map(|_| self.number(field, width)).collect()
    }
}

fn put(out: &mut Vec<u8>, field: &'static str, value: &str, width: usize) -> Result<(), EdfError> {
    if value.len() > width || !value.bytes().all(|b| (0x20..=0x7e).contains(&b)) {
        return Err(EdfError::Field {
            field,
            value: value.to_string(),
        });
    }
    out.extend_from_slice(value.as_bytes());
    out.resize(out.len() + width - value.len(), b' ');
    Ok(())
}

/// Shortest decimal text that parses back to `x`.
fn format_decimal(x: f64) -> String {
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fixture(n_records: &str, duration: &str, signals: &[SignalSpec]) -> Vec<u8> {
        let header = EdfHeader {
            version: "0".into(),
            patient_id: "X X X X".into(),
            recording_id: "Startdate X X X X".into(),
            start_date: "01.01.00".into(),
            start_time: "22.00.00".into(),
            header_bytes: 256 + 256 * signals.len(),
            reserved: String::new(),
            n_records: 0,
            record_duration_s: 1.0,
            signals: signals.to_vec(),
        };
        let mut bytes = header.to_bytes().unwrap();
        bytes[236..244].copy_from_slice(format!("{n_records:<8}").as_bytes());
        bytes[244..252].copy_from_slice(format!("{duration:<8}").as_bytes());
        bytes
    }

    fn eeg(label: &str) -> SignalSpec {
        SignalSpec::new(label, -250.0, 250.0, 7680)
    }

    #[test]
    fn two_signal_header_size() {
        let raw = fixture("1114", "30", &[eeg("C3-A2"), eeg("C4-A1")]);
        let h = parse_header(&raw).unwrap();
        assert_eq!(h.header_bytes, 768);
        assert_eq!(h.n_signals(), 2);
        assert_eq!(h.signals[1].label, "C4-A1");
    }

    #[test]
    fn record_count_and_duration() {
        let raw = fixture("1114", "30", &[eeg("C3-A2")]);
        let h = parse_header(&raw).unwrap();
        assert_eq!(h.n_records, 1114);
        assert_eq!(h.duration_s(), 33420.0);
        assert_eq!(h.sampling_rate(0), 256.0);
    }

    #[test]
    fn inverted_digital_range_rejected() {
        let mut s = eeg("C3-A2");
        s.dig_min = 32767;
        s.dig_max = -32768;
        let raw = fixture("1", "30", &[s]);
        assert!(matches!(
            parse_header(&raw),
            Err(EdfError::InvertedDigitalRange { .. })
        ));
    }

    #[test]
    fn truncated_header() {
        let raw = fixture("1", "30", &[eeg("C3-A2")]);
        assert!(matches!(
            parse_header(&raw[..200]),
            Err(EdfError::Truncated { .. })
        ));
        assert!(matches!(
            parse_header(&raw[..400]),
            Err(EdfError::Truncated { .. })
        ));
    }

    #[test]
    fn non_numeric_field() {
        let mut raw = fixture("1", "30", &[eeg("C3-A2")]);
        raw[236..244].copy_from_slice(b"12a4    ");
        match parse_header(&raw) {
            Err(EdfError::Field { field, .. }) => assert_eq!(field, "records"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn header_bytes_must_match_signal_count() {
        let mut raw = fixture("1", "30", &[eeg("C3-A2")]);
        raw[184..192].copy_from_slice(b"768     ");
        assert!(matches!(
            parse_header(&raw),
            Err(EdfError::HeaderSizeMismatch {
                declared: 768,
                expected: 512
            })
        ));
    }

    #[test]
    fn serialize_is_byte_identical() {
        let raw = fixture("1114", "30", &[eeg("C3-A2"), eeg("EOG")]);
        let h = parse_header(&raw).unwrap();
        assert_eq!(h.to_bytes().unwrap(), raw);
    }

    #[test]
    fn oversized_field_rejected_on_write() {
        let mut s = eeg("a label that is far too long");
        s.label.push('!');
        let h = EdfHeader {
            version: "0".into(),
            patient_id: String::new(),
            recording_id: String::new(),
            start_date: "01.01.00".into(),
            start_time: "00.00.00".into(),
            header_bytes: 512,
            reserved: String::new(),
            n_records: 1,
            record_duration_s: 30.0,
            signals: vec![s],
        };
        assert!(matches!(
            h.to_bytes(),
            Err(EdfError::Field { field: "label", .. })
        ));
    }
}
