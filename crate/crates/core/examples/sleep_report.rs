//! Sleep architecture of a reference night and the agreement table of a
//! reference scoring.

use somno::dataset::parse_hypnogram;
use somno::metrics::{
    architecture_report, confusion_matrix, render_architecture, render_architecture_csv,
    render_confusion, ConfusionMatrix, REFERENCE_NIGHT,
};
use somno::SleepStage;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text: String = SleepStage::ALL
        .iter()
        .zip(REFERENCE_NIGHT.counts)
        .map(|(s, n)| format!("{}\n", s.token()).repeat(n))
        .collect();
    let hypnogram = parse_hypnogram(&text, 30.0)?;
    let report = architecture_report(&hypnogram)?;
    print!("{}", render_architecture(&report));
    println!();
    print!("{}", render_architecture_csv(&report));

    let published = ConfusionMatrix::from_counts([
        [59, 0, 0, 0, 5, 3],
        [11, 0, 17, 0, 2, 24],
        [3, 1, 291, 0, 21, 31],
        [0, 0, 39, 3, 52, 13],
        [1, 0, 9, 2, 278, 2],
        [7, 0, 16, 0, 6, 204],
    ]);
    println!();
    print!("{}", render_confusion(&published));

    let expert = [
        SleepStage::Awake,
        SleepStage::S2,
        SleepStage::S2,
        SleepStage::Rem,
    ];
    let machine = [
        SleepStage::Awake,
        SleepStage::S2,
        SleepStage::S3,
        SleepStage::S1,
    ];
    let small = confusion_matrix(&expert, &machine)?;
    println!("\n{} of {} epochs agree", small.trace(), small.total());
    Ok(())
}
