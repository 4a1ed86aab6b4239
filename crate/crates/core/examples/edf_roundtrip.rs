//! Writes a two-channel EDF file, reads it back and reports the
//! quantization error.

use somno::edf::{
    write_recording, EdfRecording, HeaderFields, SampleSeries, SignalSelector, SignalSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rate = 128.0;
    let n = 128 * 60;
    let c3: Vec<f64> = (0..n).map(|i| 40.0 * (i as f64 * 0.37).sin()).collect();
    let c4: Vec<f64> = (0..n).map(|i| 25.0 * (i as f64 * 0.11).cos()).collect();
    let signals = [
        (
            SignalSpec::new("C3-A2", -250.0, 250.0, 128 * 30),
            &SampleSeries::new("C3-A2", rate, c3),
        ),
        (
            SignalSpec::new("C4-A1", -250.0, 250.0, 128 * 30),
            &SampleSeries::new("C4-A1", rate, c4),
        ),
    ];

    let path = std::env::temp_dir().join("somno-example.edf");
    let mut bytes = Vec::new();
    let header = write_recording(&signals, &HeaderFields::default(), &mut bytes)?;
    std::fs::write(&path, &bytes)?;
    println!(
        "wrote {} ({} bytes, {} records of {} s)",
        path.display(),
        bytes.len(),
        header.n_records,
        header.record_duration_s
    );

    let recording = EdfRecording::open(&path)?;
    for (spec, original) in &signals {
        let back = recording.read_signal(&SignalSelector::from(spec.label.as_str()), None)?;
        let worst = back
            .samples
            .iter()
            .zip(&original.samples)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!(
            "{:<6} {} Hz, max error {:.2e} uV (half step {:.2e})",
            back.label,
            back.sampling_rate,
            worst,
            spec.gain() / 2.0
        );
    }

    let first_record = recording.read_signal(&SignalSelector::Index(1), Some(0..1))?;
    println!("record 0 of signal 1 holds {} samples", first_record.len());
    Ok(())
}
