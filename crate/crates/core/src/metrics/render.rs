use std::fmt::Write as _;

use super::{
    compare_with_printed, overall_accuracy, per_class_success, percent_rounded, ArchitectureReport,
    ConfusionMatrix, REFERENCE_NIGHT,
};
use crate::stage::SleepStage;

fn hms(seconds: f64) -> String {
    let s = seconds.round() as u64;
    format!("{:02}:{:02}:{:02}", s / 3600, s / 60 % 60, s % 60)
}

fn pct(ratio: f64) -> String {
    format!("{:.2} ({})", ratio * 100.0, percent_rounded(ratio))
}

/// Rows = expert stage, columns = predicted stage, with a success column.
pub fn render_confusion(cm: &ConfusionMatrix) -> String {
    let mut out = String::new();
    write!(out, "{:<8}", "as ->").unwrap();
    for s in SleepStage::CLASSES {
        write!(out, "{:>7}", s.name()).unwrap();
    }
    out.push_str("  Success\n");
    let rates = per_class_success(cm);
    for (i, s) in SleepStage::CLASSES.iter().enumerate() {
        write!(out, "{:<8}", s.name()).unwrap();
        for c in cm.counts[i] {
            write!(out, "{c:>7}").unwrap();
        }
        match rates[i] {
            Some(r) => writeln!(out, "  {:>6}%", percent_rounded(r)).unwrap(),
            None => writeln!(out, "  {:>7}", "---").unwrap(),
        }
    }
    if let Ok(acc) = overall_accuracy(cm) {
        writeln!(
            out,
            "Overall agreement: {}/{} = {:.2}% ({}%)",
            cm.trace(),
            cm.total(),
            acc * 100.0,
            percent_rounded(acc)
        )
        .unwrap();
    }
    out
}

pub fn render_confusion_csv(cm: &ConfusionMatrix) -> String {
    let mut out = String::from("actual");
    for s in SleepStage::CLASSES {
        write!(out, ",{}", s.name()).unwrap();
    }
    out.push_str(",success\n");
    let rates = per_class_success(cm);
    for (i, s) in SleepStage::CLASSES.iter().enumerate() {
        out.push_str(s.name());
        for c in cm.counts[i] {
            write!(out, ",{c}").unwrap();
        }
        match rates[i] {
            Some(r) => writeln!(out, ",{r:.6}").unwrap(),
            None => out.push_str(",\n"),
        }
    }
    out
}

/// Stage composition table. Rows whose rounded percentage differs from the
/// reference printing of the same composition get a footnote.
pub fn render_architecture(report: &ArchitectureReport) -> String {
    let discrepancies = compare_with_printed(report, &REFERENCE_NIGHT).unwrap_or_default();
    let mark = |stage: SleepStage, column: &str| {
        discrepancies
            .iter()
            .position(|d| d.stage == stage && d.column == column)
            .map(|i| format!(" [{}]", i + 1))
            .unwrap_or_default()
    };

    let mut out = String::new();
    writeln!(
        out,
        "{:<9}{:>7}{:>11}  {:<16}{:<11}%TTR",
        "Stage", "Epochs", "Duration", "%TTS", "%TV-TTS"
    )
    .unwrap();
    for line in &report.stages {
        let tts = match line.tts_ratio {
            Some(r) => pct(r) + &mark(line.stage, "%TTS"),
            None => "---".into(),
        };
        writeln!(
            out,
            "{:<9}{:>7}{:>11}  {:<16}{:<11}{}",
            line.stage.name(),
            line.epochs,
            hms(line.duration_s),
            tts,
            line.normative_tts.unwrap_or("---"),
            pct(line.ttr_ratio) + &mark(line.stage, "%TTR"),
        )
        .unwrap();
    }
    writeln!(
        out,
        "{:<9}{:>7}{:>11}  ({} s)",
        "TTS",
        report.tts_epochs,
        hms(report.tts_s),
        report.tts_s
    )
    .unwrap();
    writeln!(
        out,
        "{:<9}{:>7}{:>11}  ({} s)",
        "TTR",
        report.ttr_epochs,
        hms(report.ttr_s),
        report.ttr_s
    )
    .unwrap();
    out.push_str("Percentages: exact value, integer rounding (half up) in parentheses.\n");
    for (i, d) in discrepancies.iter().enumerate() {
        writeln!(
            out,
            "[{}] {} {}: exact {:.2}% rounds to {}, the reference table for this composition prints {}.",
            i + 1,
            d.stage.name(),
            d.column,
            d.exact_percent,
            d.rounded,
            d.printed
        )
        .unwrap();
    }
    out
}

pub fn render_architecture_csv(report: &ArchitectureReport) -> String {
    let mut out = String::from("stage,epochs,duration_s,tts_ratio,ttr_ratio,normative_tts\n");
    for line in &report.stages {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            line.stage.name(),
            line.epochs,
            line.duration_s,
            line.tts_ratio
                .map(|r| format!("{r:.6}"))
                .unwrap_or_default(),
            format_args!("{:.6}", line.ttr_ratio),
            line.normative_tts.unwrap_or("")
        )
        .unwrap();
    }
    writeln!(out, "TTS,{},{},,,", report.tts_epochs, report.tts_s).unwrap();
    writeln!(out, "TTR,{},{},,,", report.ttr_epochs, report.ttr_s).unwrap();
    out
}
