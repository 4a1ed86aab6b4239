//! Batch command-line front end.
//!
//! Exit status: 0 on success, 1 on usage errors, 2 on data errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::dataset::{build_dataset, parse_hypnogram, stratified_split, Hypnogram};
use crate::edf::{
    write_recording, EdfError, EdfRecording, HeaderFields, SignalSelector, SignalSpec,
};
use crate::features::{parse_features, write_features, FeatureTable};
use crate::metrics::{
    architecture_report, confusion_matrix, overall_accuracy, percent_rounded, render_architecture,
    render_architecture_csv, render_confusion, render_confusion_csv,
};
use crate::mlp::{
    cross_validate, evaluate, fit, hidden_sweep, read_model, write_model, CvReport, Mlp,
    TrainConfig, CV_TRAIN_FRACTION,
};
use crate::spectral::{signal_features, EPOCH_SECONDS};
use crate::stage::SleepStage;
use crate::synth::{
    clinical_profiles, parse_profiles, synth_night, with_counts, CLINICAL_NIGHT_COUNTS,
    CLINICAL_NIGHT_MOVEMENT,
};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "somno", version, about = "EEG spectral sleep staging toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the header of an EDF recording.
    Info {
        edf: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compute per-epoch relative band powers from one or two EEG signals.
    Features {
        edf: PathBuf,
        /// One label (5 features) or two comma-separated labels (10 features).
        #[arg(long, value_delimiter = ',', num_args = 1..=2, required = true)]
        signals: Vec<String>,
        #[arg(long, default_value_t = EPOCH_SECONDS)]
        epoch_seconds: f64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Train a classifier on features + hypnogram and write a model file.
    Train {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        train: TrainArgs,
        #[arg(long)]
        model: PathBuf,
        /// Learning curve as CSV.
        #[arg(long)]
        curve: Option<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Repeated stratified 80/20 cross-validation.
    Crossval {
        #[command(flatten)]
        data: DataArgs,
        #[command(flatten)]
        train: TrainArgs,
        #[arg(long, default_value_t = 10)]
        repetitions: usize,
        /// Hidden-layer sizes to compare; the best mean accuracy wins.
        #[arg(long, value_delimiter = ',')]
        hidden_sweep: Option<Vec<usize>>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Stage every epoch of a recording with a trained model.
    Score {
        #[arg(long)]
        model: PathBuf,
        edf: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1..=2, required = true)]
        signals: Vec<String>,
        #[arg(long, default_value_t = EPOCH_SECONDS)]
        epoch_seconds: f64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Sleep architecture of a hypnogram.
    Report {
        hypnogram: PathBuf,
        #[arg(long, default_value_t = EPOCH_SECONDS)]
        epoch_seconds: f64,
        #[arg(long)]
        csv: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Agreement between a reference and a predicted hypnogram.
    Evaluate {
        reference: PathBuf,
        predicted: PathBuf,
        #[arg(long)]
        csv: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic EDF recording and its hypnogram.
    Synth {
        /// Stage profiles (`stage,delta,theta,alpha,sigma,beta,noise`);
        /// built-in clinical profiles when omitted.
        #[arg(long)]
        profiles: Option<PathBuf>,
        /// Epochs per class in order Awake,S1,S2,S3,S4,REM.
        #[arg(long, value_delimiter = ',')]
        counts: Option<Vec<usize>>,
        #[arg(long)]
        movement: Option<usize>,
        #[arg(long, default_value_t = 256)]
        sampling_rate: u32,
        #[arg(long, default_value = "EEG synth")]
        label: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        edf: PathBuf,
        #[arg(long)]
        hypnogram: PathBuf,
    },
}

#[derive(Debug, Args)]
struct DataArgs {
    #[arg(long)]
    features: PathBuf,
    #[arg(long)]
    hypnogram: PathBuf,
}

#[derive(Debug, Args)]
struct TrainArgs {
    /// Layer sizes, input first; defaults to <feature width>,6,6.
    #[arg(long, value_delimiter = ',')]
    layers: Option<Vec<usize>>,
    #[arg(long, default_value_t = 0.2)]
    learning_rate: f64,
    #[arg(long, default_value_t = 1000)]
    max_epochs: usize,
    #[arg(long, default_value_t = 50)]
    patience: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl TrainArgs {
    fn config(&self) -> TrainConfig {
        TrainConfig {
            learning_rate: self.learning_rate,
            max_training_epochs: self.max_epochs,
            patience: self.patience,
            seed: self.seed,
        }
    }

    fn layers(&self, width: usize) -> Result<Vec<usize>> {
        let layers = self
            .layers
            .clone()
            .unwrap_or_else(|| vec![width, 6, SleepStage::N_CLASSES]);
        if layers.first() != Some(&width) {
            return Err(CliError::Usage(format!(
                "layer sizes {layers:?} do not start with the feature width {width}"
            )));
        }
        Ok(layers)
    }

    fn describe(&self, layers: &[usize]) -> String {
        format!(
            "layers {} | learning rate {} | max epochs {} | patience {} | seed {}",
            join(layers, "-"),
            self.learning_rate,
            self.max_epochs,
            self.patience,
            self.seed
        )
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn data(context: impl std::fmt::Display, err: impl std::fmt::Display) -> Self {
        CliError::Data(format!("{context}: {err}"))
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Info { edf, out } => cmd_info(&edf, out.as_deref()),
        Command::Features {
            edf,
            signals,
            epoch_seconds,
            out,
        } => {
            let rec = open_edf(&edf)?;
            let table = feature_table(&rec, &edf, &signals, epoch_seconds)?;
            emit(out.as_deref(), &write_features(&table))
        }
        Command::Train {
            data,
            train,
            model,
            curve,
            out,
        } => cmd_train(&data, &train, &model, curve.as_deref(), out.as_deref()),
        Command::Crossval {
            data,
            train,
            repetitions,
            hidden_sweep,
            out,
        } => cmd_crossval(&data, &train, repetitions, hidden_sweep, out.as_deref()),
        Command::Score {
            model,
            edf,
            signals,
            epoch_seconds,
            out,
        } => cmd_score(&model, &edf, &signals, epoch_seconds, out.as_deref()),
        Command::Report {
            hypnogram,
            epoch_seconds,
            csv,
            out,
        } => {
            let h = load_hypnogram(&hypnogram, epoch_seconds)?;
            let report =
                architecture_report(&h).map_err(|e| CliError::data(hypnogram.display(), e))?;
            let text = if csv {
                render_architecture_csv(&report)
            } else {
                let mut text = format!("Sleep architecture of {}\n\n", name(&hypnogram));
                text.push_str(&render_architecture(&report));
                text.push_str(&footer(&format!("epoch {epoch_seconds} s")));
                text
            };
            emit(out.as_deref(), &text)
        }
        Command::Evaluate {
            reference,
            predicted,
            csv,
            out,
        } => cmd_evaluate(&reference, &predicted, csv, out.as_deref()),
        Command::Synth {
            profiles,
            counts,
            movement,
            sampling_rate,
            label,
            seed,
            edf,
            hypnogram,
        } => cmd_synth(
            profiles.as_deref(),
            counts,
            movement,
            sampling_rate,
            &label,
            seed,
            &edf,
            &hypnogram,
        ),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// File name only, so reports do not depend on where they were produced.
fn name(path: &Path) -> String {
    path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    )
}

fn footer(config: &str) -> String {
    format!("\n-- somno {VERSION} | {config}\n")
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::data(path.display(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::data(path.display(), e))
}

fn open_edf(path: &Path) -> Result<EdfRecording> {
    EdfRecording::open(path).map_err(|e| CliError::data(path.display(), e))
}

fn load_hypnogram(path: &Path, epoch_seconds: f64) -> Result<Hypnogram> {
    parse_hypnogram(&read_text(path)?, epoch_seconds).map_err(|e| CliError::data(path.display(), e))
}

fn selector(rec: &EdfRecording, name: &str) -> SignalSelector {
    let label = SignalSelector::Label(name.to_string());
    match (rec.signal_index(&label), name.parse::<usize>()) {
        (Err(EdfError::UnknownSignal(_)), Ok(i)) => SignalSelector::Index(i),
        _ => label,
    }
}

fn feature_table(
    rec: &EdfRecording,
    path: &Path,
    signals: &[String],
    epoch_seconds: f64,
) -> Result<FeatureTable> {
    let derivations = signals
        .iter()
        .map(|name| {
            let series = rec
                .read_signal(&selector(rec, name), None)
                .map_err(|e| CliError::data(path.display(), e))?;
            signal_features(&series, epoch_seconds)
                .map_err(|e| CliError::data(format!("{}: signal {name:?}", path.display()), e))
        })
        .collect::<Result<Vec<_>>>()?;
    if let [a, b] = derivations.as_slice() {
        if a.len() != b.len() {
            return Err(CliError::Data(format!(
                "signals {:?} yield {} and {} epochs",
                signals,
                a.len(),
                b.len()
            )));
        }
    }
    Ok(FeatureTable::from_derivations(&derivations))
}

fn cmd_info(path: &Path, dest: Option<&Path>) -> Result<()> {
    let rec = open_edf(path)?;
    let h = rec.header();
    let mut out = String::new();
    writeln!(out, "file            {}", name(path)).unwrap();
    writeln!(out, "version         {}", h.version).unwrap();
    writeln!(out, "patient         {}", h.patient_id).unwrap();
    writeln!(out, "recording       {}", h.recording_id).unwrap();
    writeln!(out, "start           {} {}", h.start_date, h.start_time).unwrap();
    writeln!(out, "header bytes    {}", h.header_bytes).unwrap();
    writeln!(
        out,
        "records         {} x {} s = {} s",
        h.n_records,
        h.record_duration_s,
        h.duration_s()
    )
    .unwrap();
    writeln!(out, "signals         {}", h.n_signals()).unwrap();
    writeln!(
        out,
        "\n{:>3}  {:<16} {:<6} {:>10} {:>10} {:>7} {:>7} {:>8} {:>9}",
        "#", "label", "dim", "phys min", "phys max", "dig min", "dig max", "samples", "rate Hz"
    )
    .unwrap();
    for (i, s) in h.signals.iter().enumerate() {
        writeln!(
            out,
            "{:>3}  {:<16} {:<6} {:>10} {:>10} {:>7} {:>7} {:>8} {:>9}",
            i,
            s.label,
            s.physical_dim,
            s.phys_min,
            s.phys_max,
            s.dig_min,
            s.dig_max,
            s.samples_per_record,
            h.sampling_rate(i)
        )
        .unwrap();
    }
    emit(dest, &out)
}

fn load_dataset(data: &DataArgs, epoch_seconds: f64) -> Result<crate::dataset::LabeledDataset> {
    let table = parse_features(&read_text(&data.features)?)
        .map_err(|e| CliError::data(data.features.display(), e))?;
    let hypnogram = load_hypnogram(&data.hypnogram, epoch_seconds)?;
    build_dataset(&table.rows, table.width, &hypnogram).map_err(|e| {
        CliError::data(
            format!("{} + {}", data.features.display(), data.hypnogram.display()),
            e,
        )
    })
}

fn class_histogram(counts: [usize; 6]) -> String {
    SleepStage::CLASSES
        .iter()
        .zip(counts)
        .map(|(s, n)| format!("{s} {n}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_train(
    data: &DataArgs,
    args: &TrainArgs,
    model_path: &Path,
    curve: Option<&Path>,
    out: Option<&Path>,
) -> Result<()> {
    let dataset = load_dataset(data, EPOCH_SECONDS)?;
    let layers = args.layers(dataset.width())?;
    let config = args.config();
    let (train, validation) = stratified_split(&dataset, CV_TRAIN_FRACTION, config.seed)
        .map_err(|e| CliError::Data(e.to_string()))?;
    let (mlp, report) = fit(&train, &validation, &layers, &config).map_err(train_error)?;

    fs::write(model_path, write_model(&mlp))
        .map_err(|e| CliError::data(model_path.display(), e))?;
    if let Some(path) = curve {
        fs::write(path, report.to_csv()).map_err(|e| CliError::data(path.display(), e))?;
    }

    let val_cm = evaluate(&mlp, &validation).map_err(train_error)?;
    let all_cm = evaluate(&mlp, &dataset).map_err(train_error)?;
    let mut text = String::new();
    writeln!(text, "Training report (root seed {})", config.seed).unwrap();
    writeln!(
        text,
        "labeled epochs   {} ({})",
        dataset.len(),
        class_histogram(dataset.class_counts())
    )
    .unwrap();
    writeln!(
        text,
        "split            {} train / {} validation",
        train.len(),
        validation.len()
    )
    .unwrap();
    writeln!(
        text,
        "training epochs  {} run, best {} (validation error {:.6e})",
        report.epochs_run(),
        report.best_epoch,
        report.best_validation_error()
    )
    .unwrap();
    writeln!(text, "model            {}", name(model_path)).unwrap();
    writeln!(text, "\nValidation set").unwrap();
    text.push_str(&render_confusion(&val_cm));
    writeln!(text, "\nAll labeled epochs").unwrap();
    text.push_str(&render_confusion(&all_cm));
    text.push_str(&footer(&args.describe(&layers)));
    emit(out, &text)
}

fn train_error(e: crate::mlp::MlpError) -> CliError {
    match e {
        crate::mlp::MlpError::Config(_) | crate::mlp::MlpError::Layers(_) => {
            CliError::Usage(e.to_string())
        }
        e => CliError::Data(e.to_string()),
    }
}

fn render_cv(text: &mut String, report: &CvReport) {
    writeln!(
        text,
        "{:<12}{:>10}{:>12}",
        "repetition", "accuracy", "best epoch"
    )
    .unwrap();
    for (i, (acc, best)) in report
        .accuracies
        .iter()
        .zip(&report.best_epochs)
        .enumerate()
    {
        writeln!(text, "{:<12}{:>9.2}%{:>12}", i + 1, acc * 100.0, best).unwrap();
    }
    writeln!(
        text,
        "mean accuracy {:.2}% ({}%)\n",
        report.mean_accuracy * 100.0,
        percent_rounded(report.mean_accuracy)
    )
    .unwrap();
    writeln!(text, "Pooled validation confusion matrix").unwrap();
    text.push_str(&render_confusion(&report.pooled));
}

fn cmd_crossval(
    data: &DataArgs,
    args: &TrainArgs,
    repetitions: usize,
    sweep: Option<Vec<usize>>,
    out: Option<&Path>,
) -> Result<()> {
    let dataset = load_dataset(data, EPOCH_SECONDS)?;
    let config = args.config();
    let mut text = String::new();
    writeln!(
        text,
        "Cross-validation (root seed {}, {} repetitions of a stratified {:.0}/{:.0} split)",
        config.seed,
        repetitions,
        CV_TRAIN_FRACTION * 100.0,
        (1.0 - CV_TRAIN_FRACTION) * 100.0
    )
    .unwrap();
    writeln!(
        text,
        "labeled epochs {} ({})\n",
        dataset.len(),
        class_histogram(dataset.class_counts())
    )
    .unwrap();

    let layers = match sweep {
        None => {
            let layers = args.layers(dataset.width())?;
            let report =
                cross_validate(&dataset, &layers, &config, repetitions).map_err(train_error)?;
            render_cv(&mut text, &report);
            layers
        }
        Some(hidden) => {
            let outputs = *args.layers(dataset.width())?.last().expect("non-empty");
            let (results, best) = hidden_sweep(&dataset, &hidden, outputs, &config, repetitions)
                .map_err(train_error)?;
            writeln!(text, "{:<8}{:>16}", "hidden", "mean accuracy").unwrap();
            for (i, r) in results.iter().enumerate() {
                let mark = if i == best { "  <- best" } else { "" };
                writeln!(
                    text,
                    "{:<8}{:>15.2}%{mark}",
                    r.hidden,
                    r.report.mean_accuracy * 100.0
                )
                .unwrap();
            }
            let best = &results[best];
            writeln!(
                text,
                "\nBest configuration: {}-{}-{}\n",
                dataset.width(),
                best.hidden,
                outputs
            )
            .unwrap();
            render_cv(&mut text, &best.report);
            vec![dataset.width(), best.hidden, outputs]
        }
    };
    text.push_str(&footer(&format!(
        "{} | repetitions {repetitions}",
        args.describe(&layers)
    )));
    emit(out, &text)
}

fn cmd_score(
    model_path: &Path,
    edf: &Path,
    signals: &[String],
    epoch_seconds: f64,
    out: Option<&Path>,
) -> Result<()> {
    let mlp: Mlp =
        read_model(&read_text(model_path)?).map_err(|e| CliError::data(model_path.display(), e))?;
    let rec = open_edf(edf)?;
    let table = feature_table(&rec, edf, signals, epoch_seconds)?;
    if table.width != mlp.input_size() {
        return Err(CliError::Usage(format!(
            "model expects {} inputs but {} signal(s) give {}",
            mlp.input_size(),
            signals.len(),
            table.width
        )));
    }
    let labels = table
        .rows
        .iter()
        .map(|row| {
            if row.iter().all(|v| v.is_finite()) {
                mlp.predict(row).map_err(|e| CliError::Data(e.to_string()))
            } else {
                // Unclassifiable epochs are scored like movement: counted in
                // the recording time, excluded from agreement.
                Ok(SleepStage::Movement)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut text = format!(
        "# somno {VERSION} score: model {} | signals {}\n",
        name(model_path),
        signals.join(",")
    );
    text.push_str(&Hypnogram::new(labels, epoch_seconds).to_text());
    emit(out, &text)
}

fn cmd_evaluate(reference: &Path, predicted: &Path, csv: bool, out: Option<&Path>) -> Result<()> {
    let a = load_hypnogram(reference, EPOCH_SECONDS)?;
    let b = load_hypnogram(predicted, EPOCH_SECONDS)?;
    if a.len() != b.len() {
        return Err(CliError::Data(format!(
            "{} has {} epochs but {} has {}",
            reference.display(),
            a.len(),
            predicted.display(),
            b.len()
        )));
    }
    let (actual, pred): (Vec<_>, Vec<_>) = a
        .labels
        .iter()
        .zip(&b.labels)
        .filter(|(x, y)| **x != SleepStage::Movement && **y != SleepStage::Movement)
        .map(|(x, y)| (*x, *y))
        .unzip();
    let cm = confusion_matrix(&actual, &pred).map_err(|e| CliError::Data(e.to_string()))?;
    let text = if csv {
        render_confusion_csv(&cm)
    } else {
        let mut text = format!(
            "Agreement of {} (rows) and {} (columns)\n{} epochs compared, {} skipped as movement\n\n",
            name(reference),
            name(predicted),
            actual.len(),
            a.len() - actual.len()
        );
        text.push_str(&render_confusion(&cm));
        if overall_accuracy(&cm).is_err() {
            text.push_str("No comparable epochs.\n");
        }
        text.push_str(&footer("evaluate"));
        text
    };
    emit(out, &text)
}

#[allow(clippy::too_many_arguments)]
fn cmd_synth(
    profiles: Option<&Path>,
    counts: Option<Vec<usize>>,
    movement: Option<usize>,
    sampling_rate: u32,
    label: &str,
    seed: u64,
    edf: &Path,
    hypnogram: &Path,
) -> Result<()> {
    let profiles = match profiles {
        Some(path) => {
            parse_profiles(&read_text(path)?).map_err(|e| CliError::data(path.display(), e))?
        }
        None => clinical_profiles(),
    };
    let counts: [usize; 6] = match counts {
        Some(c) => c
            .try_into()
            .map_err(|_| CliError::Usage("--counts takes six values".into()))?,
        None => CLINICAL_NIGHT_COUNTS,
    };
    for (stage, &n) in SleepStage::CLASSES.iter().zip(&counts) {
        if n > 0 && !profiles.iter().any(|p| p.stage == *stage) {
            return Err(CliError::Data(format!("no profile for stage {stage}")));
        }
    }
    let movement = movement.unwrap_or(CLINICAL_NIGHT_MOVEMENT);
    let rate = sampling_rate as f64;
    let night = synth_night(
        &with_counts(&profiles, &counts),
        movement,
        rate,
        EPOCH_SECONDS,
        seed,
    )
    .map_err(|e| CliError::Data(e.to_string()))?;

    // ±250 µV unless the synthetic noise tails need more room.
    let peak = night
        .series
        .samples
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let range = if peak <= 250.0 {
        250.0
    } else {
        (peak / 50.0).ceil() * 50.0
    };
    let spr = (rate * EPOCH_SECONDS) as usize;
    let mut spec = SignalSpec::new(label, -range, range, spr);
    spec.transducer = "synthetic".into();
    let mut series = night.series;
    series.label = label.to_string();
    let fields = HeaderFields {
        recording_id: format!("Startdate X X synthetic seed {seed}"),
        ..HeaderFields::default()
    };
    let mut bytes = Vec::new();
    write_recording(&[(spec, &series)], &fields, &mut bytes)
        .map_err(|e| CliError::data(edf.display(), e))?;
    fs::write(edf, bytes).map_err(|e| CliError::data(edf.display(), e))?;

    let mut text = format!("# somno {VERSION} synth: seed {seed}\n");
    text.push_str(&night.hypnogram.to_text());
    fs::write(hypnogram, text).map_err(|e| CliError::data(hypnogram.display(), e))?;
    eprintln!(
        "wrote {} epochs ({} movement) to {} and {}",
        night.hypnogram.len(),
        movement,
        edf.display(),
        hypnogram.display()
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["somno", "frobnicate"]), 1);
        assert_eq!(run(["somno", "report"]), 1);
        assert_eq!(run(["somno", "--help"]), 0);
    }

    #[test]
    fn missing_file_is_a_data_error() {
        assert_eq!(run(["somno", "info", "/nonexistent/file.edf"]), 2);
    }
}
