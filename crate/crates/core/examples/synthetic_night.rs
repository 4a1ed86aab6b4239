//! Generates a synthetic night, stores it as EDF, then recomputes features
//! from the file and compares them with the stage profiles.

use somno::edf::{write_recording, EdfRecording, HeaderFields, SignalSelector, SignalSpec};
use somno::spectral::signal_features;
use somno::synth::{clinical_profiles, synth_night, with_counts};
use somno::SleepStage;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let profiles = clinical_profiles();
    let night = synth_night(&with_counts(&profiles, &[20; 6]), 4, 256.0, 30.0, 11)?;
    println!(
        "{} epochs, {:.0} s",
        night.hypnogram.len(),
        night.hypnogram.duration_s()
    );

    let mut bytes = Vec::new();
    write_recording(
        &[(
            SignalSpec::new("EEG synth", -250.0, 250.0, 7680),
            &night.series,
        )],
        &HeaderFields::default(),
        &mut bytes,
    )?;
    let series = EdfRecording::from_bytes(bytes)?.read_signal(&SignalSelector::Index(0), None)?;
    let features = signal_features(&series, 30.0)?;

    println!("{:<7} {:>5}   mean RSP (target weights)", "stage", "n");
    for profile in &profiles {
        let rows: Vec<&[f64]> = features
            .iter()
            .zip(&night.hypnogram.labels)
            .filter(|(_, &s)| s == profile.stage)
            .filter_map(|(f, _)| f.as_ref().map(|f| f.as_slice()))
            .collect();
        let mean: Vec<String> = (0..5)
            .map(|b| {
                let m = rows.iter().map(|r| r[b]).sum::<f64>() / rows.len() as f64;
                format!("{m:.2} ({:.2})", profile.band_weights[b])
            })
            .collect();
        println!(
            "{:<7} {:>5}   {}",
            profile.stage.name(),
            rows.len(),
            mean.join("  ")
        );
    }
    println!(
        "movement epochs: {}",
        night.hypnogram.count(SleepStage::Movement)
    );
    Ok(())
}
