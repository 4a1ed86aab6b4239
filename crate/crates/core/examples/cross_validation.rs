//! Repeated stratified validation on an imbalanced synthetic night, plus a
//! hidden-layer size sweep on balanced clinical data.

use somno::metrics::render_confusion;
use somno::mlp::{cross_validate, hidden_sweep, TrainConfig};
use somno::synth::{clinical_profiles, synth_dataset, with_counts, CLINICAL_NIGHT_COUNTS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (night, _) = synth_dataset(
        &with_counts(&clinical_profiles(), &CLINICAL_NIGHT_COUNTS),
        256.0,
        2024,
    )?;
    let config = TrainConfig::default();
    let cv = cross_validate(&night, &[5, 6, 6], &config, 10)?;
    println!("imbalanced night, {} labeled epochs", night.len());
    for (r, (acc, best)) in cv.accuracies.iter().zip(&cv.best_epochs).enumerate() {
        println!(
            "  repetition {:>2}: accuracy {acc:.3}, best epoch {best}",
            r + 1
        );
    }
    println!("mean accuracy {:.3}\n", cv.mean_accuracy);
    print!("{}", render_confusion(&cv.pooled));

    let (balanced, _) = synth_dataset(&with_counts(&clinical_profiles(), &[30; 6]), 256.0, 5)?;
    let quick = TrainConfig {
        max_training_epochs: 300,
        ..config
    };
    let (results, best) = hidden_sweep(&balanced, &[2, 4, 6, 10], 6, &quick, 3)?;
    println!("\nhidden  mean accuracy");
    for r in &results {
        println!("{:>6}  {:.3}", r.hidden, r.report.mean_accuracy);
    }
    println!("best: {} hidden units", results[best].hidden);
    Ok(())
}
