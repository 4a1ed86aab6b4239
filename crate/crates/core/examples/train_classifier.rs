//! Trains one 5-6-6 network on synthetic data, prints its learning curve
//! and saves the model.

use somno::dataset::stratified_split;
use somno::metrics::{overall_accuracy, render_confusion};
use somno::mlp::{evaluate, fit, read_model, write_model, TrainConfig};
use somno::synth::{clinical_profiles, synth_dataset, with_counts};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (dataset, _) = synth_dataset(&with_counts(&clinical_profiles(), &[40; 6]), 256.0, 1)?;
    let (train, validation) = stratified_split(&dataset, 0.8, 1)?;
    let config = TrainConfig {
        seed: 1,
        ..TrainConfig::default()
    };
    let (mlp, report) = fit(&train, &validation, &[5, 6, 6], &config)?;

    println!("epoch  train     validation");
    for (i, (t, v)) in report
        .train_error
        .iter()
        .zip(&report.validation_error)
        .enumerate()
    {
        if i % 100 == 0 || i + 1 == report.best_epoch {
            println!(
                "{:>5}  {t:.5}  {v:.5}{}",
                i + 1,
                if i + 1 == report.best_epoch {
                    "  <- best"
                } else {
                    ""
                }
            );
        }
    }
    println!("stopped after {} epochs\n", report.epochs_run());

    let cm = evaluate(&mlp, &validation)?;
    print!("{}", render_confusion(&cm));
    println!("validation accuracy {:.3}", overall_accuracy(&cm)?);

    let text = write_model(&mlp);
    assert_eq!(read_model(&text)?, mlp);
    let path = std::env::temp_dir().join("somno-model.txt");
    std::fs::write(&path, text)?;
    println!("model saved to {}", path.display());
    Ok(())
}
