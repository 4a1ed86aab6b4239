use proptest::prelude::*;
use somno::dataset::stratified_split;
use somno::metrics::overall_accuracy;
use somno::mlp::{argmax_stage, cross_validate, evaluate, fit, one_hot, Mlp, TrainConfig};
use somno::rng::SeededRng;
use somno::stage::SleepStage;
use somno::synth::{separable_profiles, synth_dataset, with_counts};

fn quick() -> TrainConfig {
    TrainConfig {
        max_training_epochs: 200,
        seed: 3,
        ..TrainConfig::default()
    }
}

#[test]
fn finite_differences_agree_with_backprop() {
    let h = 1e-5;
    for seed in 100..110u64 {
        let mut mlp = Mlp::init(&[5, 6, 6], seed).unwrap();
        let mut rng = SeededRng::with_stream(seed, 1);
        for _ in 0..3 {
            let input: Vec<f64> = (0..5).map(|_| rng.next_f64()).collect();
            let target = one_hot(SleepStage::CLASSES[rng.below(6) as usize], 6).unwrap();
            let (_, grads) = mlp.gradients(&input, &target).unwrap();
            for (i, g) in grads.flat().into_iter().enumerate() {
                let w = mlp.parameter(i);
                mlp.set_parameter(i, w + h);
                let up = mlp.loss(&input, &target).unwrap();
                mlp.set_parameter(i, w - h);
                let down = mlp.loss(&input, &target).unwrap();
                mlp.set_parameter(i, w);
                let numeric = (up - down) / (2.0 * h);
                if g.abs() < 1e-8 {
                    assert!((g - numeric).abs() < 1e-8, "param {i}: {g} vs {numeric}");
                } else {
                    let rel = (g - numeric).abs() / g.abs().max(numeric.abs());
                    assert!(rel <= 1e-4, "param {i}: {g} vs {numeric}");
                }
            }
        }
    }
}

#[test]
fn single_repetition_is_one_split_fit_evaluate() {
    let (ds, _) =
        synth_dataset(&with_counts(&separable_profiles(0.05), &[20; 6]), 256.0, 4).unwrap();
    let config = quick();
    let cv = cross_validate(&ds, &[5, 6, 6], &config, 1).unwrap();

    let seed = config.seed + 1;
    let (train, validation) = stratified_split(&ds, 0.8, seed).unwrap();
    let (mlp, report) = fit(
        &train,
        &validation,
        &[5, 6, 6],
        &TrainConfig { seed, ..config },
    )
    .unwrap();
    let cm = evaluate(&mlp, &validation).unwrap();
    assert_eq!(cv.pooled, cm);
    assert_eq!(cv.accuracies, vec![overall_accuracy(&cm).unwrap()]);
    assert_eq!(cv.best_epochs, vec![report.best_epoch]);
}

#[test]
fn mean_accuracy_is_the_mean_of_repetitions() {
    let (ds, _) =
        synth_dataset(&with_counts(&separable_profiles(0.3), &[15; 6]), 256.0, 8).unwrap();
    let cv = cross_validate(&ds, &[5, 6, 6], &quick(), 4).unwrap();
    let mean = cv.accuracies.iter().sum::<f64>() / 4.0;
    assert!((cv.mean_accuracy - mean).abs() <= 1e-12);
    assert_eq!(cv.pooled.total(), 4 * 18);
    assert_eq!(cv, cross_validate(&ds, &[5, 6, 6], &quick(), 4).unwrap());
}

proptest! {
    #[test]
    fn argmax_survives_monotone_maps(
        outputs in proptest::collection::vec(0.0f64..1.0, 6),
        scale in 0.01f64..100.0,
        shift in -5.0f64..5.0,
    ) {
        let mapped: Vec<f64> = outputs.iter().map(|o| (scale * o + shift).exp()).collect();
        prop_assert_eq!(argmax_stage(&outputs), argmax_stage(&mapped));
    }
}
