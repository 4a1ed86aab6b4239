use somno::edf::{write_recording, EdfRecording, HeaderFields, SignalSelector, SignalSpec};
use somno::spectral::{epoch_features, signal_features};
use somno::stage::SleepStage;
use somno::synth::{
    clinical_profiles, separable_profiles, synth_dataset, synth_epoch, synth_night, with_counts,
    StageProfile, CLINICAL_NIGHT_COUNTS,
};

const BANDWIDTH: [f64; 5] = [3.5 / 31.5, 4.0 / 31.5, 4.0 / 31.5, 4.0 / 31.5, 16.0 / 31.5];

#[test]
fn noise_mixes_in_by_bandwidth() {
    for weights in [
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.2, 0.44, 0.08, 0.1, 0.18],
        [0.5, 0.0, 0.0, 0.0, 0.5],
    ] {
        let profile = StageProfile::new(SleepStage::S2, weights, 0.1);
        let mut mean = [0.0; 5];
        for seed in 0..50 {
            let rsp = epoch_features(&synth_epoch(&profile, 256.0, 30.0, seed).unwrap())
                .unwrap()
                .rsp;
            for (m, r) in mean.iter_mut().zip(rsp) {
                *m += r / 50.0;
            }
        }
        for i in 0..5 {
            let expected = 0.9 * weights[i] + 0.1 * BANDWIDTH[i];
            assert!(
                (mean[i] - expected).abs() <= 0.03,
                "{weights:?} band {i}: {} vs {expected}",
                mean[i]
            );
        }
    }
}

#[test]
fn features_survive_edf_quantization() {
    let pairs = with_counts(&separable_profiles(0.05), &[3; 6]);
    let night = synth_night(&pairs, 2, 256.0, 30.0, 5).unwrap();
    let direct = signal_features(&night.series, 30.0).unwrap();

    let spec = SignalSpec::new("EEG synth", -250.0, 250.0, 7680);
    let mut bytes = Vec::new();
    write_recording(
        &[(spec, &night.series)],
        &HeaderFields::default(),
        &mut bytes,
    )
    .unwrap();
    let back = EdfRecording::from_bytes(bytes)
        .unwrap()
        .read_signal(&SignalSelector::from("EEG synth"), None)
        .unwrap();
    let stored = signal_features(&back, 30.0).unwrap();

    assert_eq!(direct.len(), 20);
    for (a, b) in direct.iter().zip(&stored) {
        let (a, b) = (a.as_ref().unwrap(), b.as_ref().unwrap());
        for (p, q) in a.rsp.iter().zip(b.rsp) {
            assert!((p - q).abs() <= 1e-3, "{p} vs {q}");
        }
    }
}

#[test]
fn clinical_night_composition() {
    let (ds, hypnogram) = synth_dataset(
        &with_counts(&clinical_profiles(), &CLINICAL_NIGHT_COUNTS),
        256.0,
        1,
    )
    .unwrap();
    assert_eq!(ds.class_counts(), CLINICAL_NIGHT_COUNTS);
    assert_eq!(ds.len(), 1100);
    assert_eq!(hypnogram.len(), 1100);
}

#[test]
fn separable_dataset_is_reproducible() {
    let pairs = with_counts(&separable_profiles(0.05), &[100; 6]);
    let (a, _) = synth_dataset(&pairs, 256.0, 9).unwrap();
    let (b, _) = synth_dataset(&pairs, 256.0, 9).unwrap();
    assert_eq!(a.len(), 600);
    assert_eq!(a.class_counts(), [100; 6]);
    assert_eq!(a, b);
}
