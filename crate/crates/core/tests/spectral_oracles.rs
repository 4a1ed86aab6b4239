use proptest::prelude::*;
use somno::rng::SeededRng;
use somno::spectral::{band_powers, epoch_features, power_spectrum, Band, Epoch};

fn epoch(samples: Vec<f64>, sampling_rate: f64) -> Epoch {
    let duration_s = samples.len() as f64 / sampling_rate;
    Epoch {
        index: 0,
        samples,
        sampling_rate,
        duration_s,
    }
}

fn white(seed: u64, n: usize, sigma: f64) -> Vec<f64> {
    let mut rng = SeededRng::new(seed);
    (0..n).map(|_| sigma * rng.normal()).collect()
}

#[test]
fn white_noise_follows_bandwidth() {
    let mut mean = [0.0; 5];
    for seed in 0..100 {
        let rsp = epoch_features(&epoch(white(seed, 7680, 30.0), 256.0))
            .unwrap()
            .rsp;
        for (m, r) in mean.iter_mut().zip(rsp) {
            *m += r / 100.0;
        }
    }
    let expected = [3.5, 4.0, 4.0, 4.0, 16.0].map(|w| w / 31.5);
    for (band, (m, e)) in Band::ALL.iter().zip(mean.iter().zip(expected)) {
        assert!((m - e).abs() <= 0.03, "{band:?}: {m} vs {e}");
    }
}

#[test]
fn bands_partition_the_retained_bins() {
    let spectrum = power_spectrum(&epoch(white(1, 7680, 1.0), 256.0)).unwrap();
    let total: f64 = spectrum.power.iter().sum();
    let bsp: f64 = band_powers(&spectrum).iter().sum();
    assert!((total - bsp).abs() <= 1e-9 * total);
    let widths: Vec<usize> = Band::ALL
        .iter()
        .map(|b| b.bin_range(7680, 30.0).map(|(lo, hi)| hi - lo + 1).unwrap())
        .collect();
    assert_eq!(widths, [106, 120, 120, 120, 480]);
    assert_eq!(widths.iter().sum::<usize>(), spectrum.bins.len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn features_ignore_amplitude(seed in any::<u64>(), scale in 1e-3f64..1e3) {
        let x = white(seed, 1024, 1.0);
        let scaled: Vec<f64> = x.iter().map(|v| v * scale).collect();
        let a = epoch_features(&epoch(x, 64.0)).unwrap().rsp;
        let b = epoch_features(&epoch(scaled, 64.0)).unwrap().rsp;
        for (p, q) in a.iter().zip(b) {
            prop_assert!((p - q).abs() <= 1e-12);
        }
    }

    #[test]
    fn features_are_a_distribution(seed in any::<u64>()) {
        let rsp = epoch_features(&epoch(white(seed, 512, 1.0), 64.0)).unwrap().rsp;
        prop_assert!(rsp.iter().all(|r| (0.0..=1.0).contains(r)));
        prop_assert!((rsp.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
    }
}
