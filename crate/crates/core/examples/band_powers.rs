//! Relative band powers of a few hand-built 30 s epochs.

use std::f64::consts::PI;

use somno::rng::SeededRng;
use somno::spectral::{band_powers, epoch_features, power_spectrum, Band, Epoch};

fn epoch(f: impl Fn(f64) -> f64) -> Epoch {
    let rate = 256.0;
    Epoch {
        index: 0,
        samples: (0..7680).map(|i| f(i as f64 / rate)).collect(),
        sampling_rate: rate,
        duration_s: 30.0,
    }
}

fn main() {
    let mut rng = SeededRng::new(7);
    let noise: Vec<f64> = (0..7680).map(|_| rng.normal()).collect();
    let cases = [
        ("10 Hz alpha tone", epoch(|t| (2.0 * PI * 10.0 * t).sin())),
        (
            "2 Hz + 20 Hz",
            epoch(|t| (2.0 * PI * 2.0 * t).sin() + (2.0 * PI * 20.0 * t).sin()),
        ),
        (
            "spindle-like 14 Hz burst",
            epoch(|t| (2.0 * PI * 14.0 * t).sin() * (-(t - 15.0).powi(2)).exp()),
        ),
        (
            "white noise",
            epoch(|t| noise[(t * 256.0).round() as usize]),
        ),
    ];

    print!("{:<26}", "epoch");
    for band in Band::ALL {
        print!("{:>8}", band.name());
    }
    println!();
    for (name, e) in &cases {
        let rsp = epoch_features(e).expect("non-zero power");
        print!("{name:<26}");
        for r in rsp.as_slice() {
            print!("{r:>8.3}");
        }
        println!();
    }

    let spectrum = power_spectrum(&cases[0].1).expect("30 s epoch");
    println!(
        "\n{} retained bins, {:.4} Hz apart, {} .. {} Hz; alpha BSP {:.1}",
        spectrum.bins.len(),
        spectrum.resolution_hz,
        spectrum.bin_hz[0],
        spectrum.bin_hz[spectrum.bin_hz.len() - 1],
        band_powers(&spectrum)[Band::Alpha as usize]
    );
}
