//! Agreement statistics and whole-night sleep architecture.

mod render;

pub use render::{
    render_architecture, render_architecture_csv, render_confusion, render_confusion_csv,
};

use crate::dataset::Hypnogram;
use crate::stage::SleepStage;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MetricsError {
    #[error("{actual} actual labels but {predicted} predicted labels")]
    LengthMismatch { actual: usize, predicted: usize },
    #[error("movement label at position {0}; movement epochs are not classifier output")]
    Movement(usize),
    #[error("confusion matrix is empty")]
    Empty,
    #[error("hypnogram is empty")]
    EmptyHypnogram,
}

/// Round-half-up to an integer percentage, as printed in clinical tables.
pub fn percent_rounded(ratio: f64) -> u32 {
    // The epsilon absorbs representation error in ratios such as 0.285 that
    // are exact halves in decimal.
    (ratio * 100.0 + 0.5 + 1e-9).floor() as u32
}

/// Counts indexed `[actual][predicted]`, both in class order
/// (Awake, S1, S2, S3, S4, REM).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConfusionMatrix {
    pub counts: [[u64; 6]; 6],
}

impl ConfusionMatrix {
    pub fn from_counts(counts: [[u64; 6]; 6]) -> Self {
        Self { counts }
    }

    pub fn add(&mut self, actual: SleepStage, predicted: SleepStage) {
        let (a, p) = (
            actual.class_index().expect("movement has no class"),
            predicted.class_index().expect("movement has no class"),
        );
        self.counts[a][p] += 1;
    }

    pub fn merge(&mut self, other: &ConfusionMatrix) {
        for (row, other_row) in self.counts.iter_mut().zip(&other.counts) {
            for (c, o) in row.iter_mut().zip(other_row) {
                *c += o;
            }
        }
    }

    pub fn get(&self, actual: SleepStage, predicted: SleepStage) -> u64 {
        match (actual.class_index(), predicted.class_index()) {
            (Some(a), Some(p)) => self.counts[a][p],
            _ => 0,
        }
    }

    pub fn row_sum(&self, actual: SleepStage) -> u64 {
        actual
            .class_index()
            .map_or(0, |a| self.counts[a].iter().sum())
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn trace(&self) -> u64 {
        (0..6).map(|i| self.counts[i][i]).sum()
    }
}

/// Tallies `(actual, predicted)` pairs.
pub fn confusion_matrix(
    actual: &[SleepStage],
    predicted: &[SleepStage],
) -> Result<ConfusionMatrix, MetricsError> {
    if actual.len() != predicted.len() {
        return Err(MetricsError::LengthMismatch {
            actual: actual.len(),
            predicted: predicted.len(),
        });
    }
    let mut cm = ConfusionMatrix::default();
    for (i, (&a, &p)) in actual.iter().zip(predicted).enumerate() {
        if a == SleepStage::Movement || p == SleepStage::Movement {
            return Err(MetricsError::Movement(i));
        }
        cm.add(a, p);
    }
    Ok(cm)
}

/// Recall of each class; `None` for classes with no actual samples.
pub fn per_class_success(cm: &ConfusionMatrix) -> [Option<f64>; 6] {
    std::array::from_fn(|i| {
        let row: u64 = cm.counts[i].iter().sum();
        (row > 0).then(|| cm.counts[i][i] as f64 / row as f64)
    })
}

/// Trace over total.
pub fn overall_accuracy(cm: &ConfusionMatrix) -> Result<f64, MetricsError> {
    match cm.total() {
        0 => Err(MetricsError::Empty),
        total => Ok(cm.trace() as f64 / total as f64),
    }
}

/// Reference stage percentages of total sleep time for a normal adult night.
pub const NORMATIVE_TTS: [(SleepStage, &str); 5] = [
    (SleepStage::S1, "< 10"),
    (SleepStage::S2, "~ 50"),
    (SleepStage::S3, "~ 10"),
    (SleepStage::S4, "~ 10"),
    (SleepStage::Rem, "20 to 25"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct StageLine {
    pub stage: SleepStage,
    pub epochs: usize,
    pub duration_s: f64,
    /// Fraction of total sleep time; `None` for wake/movement or when there
    /// was no sleep.
    pub tts_ratio: Option<f64>,
    pub ttr_ratio: f64,
    pub normative_tts: Option<&'static str>,
}

/// Stage composition of one night.
#[derive(Debug, Clone, PartialEq)]
pub struct ArchitectureReport {
    pub epoch_duration_s: f64,
    /// One line per label in `SleepStage::ALL` order.
    pub stages: Vec<StageLine>,
    pub tts_epochs: usize,
    pub tts_s: f64,
    pub ttr_epochs: usize,
    pub ttr_s: f64,
}

impl ArchitectureReport {
    pub fn line(&self, stage: SleepStage) -> &StageLine {
        self.stages
            .iter()
            .find(|l| l.stage == stage)
            .expect("report covers every stage")
    }

    /// Per-stage epoch counts in `SleepStage::ALL` order.
    pub fn counts(&self) -> [usize; 7] {
        std::array::from_fn(|i| self.stages[i].epochs)
    }
}

/// Counts, durations and TTS/TTR percentages of a hypnogram.
pub fn architecture_report(hypnogram: &Hypnogram) -> Result<ArchitectureReport, MetricsError> {
    if hypnogram.is_empty() {
        return Err(MetricsError::EmptyHypnogram);
    }
    let dur = hypnogram.epoch_duration_s;
    let counts: Vec<(SleepStage, usize)> = SleepStage::ALL
        .into_iter()
        .map(|s| (s, hypnogram.count(s)))
        .collect();
    let tts: usize = counts
        .iter()
        .filter(|(s, _)| s.is_sleep())
        .map(|(_, c)| c)
        .sum();
    let ttr = hypnogram.len();

    let stages = counts
        .into_iter()
        .map(|(stage, epochs)| StageLine {
            stage,
            epochs,
            duration_s: epochs as f64 * dur,
            tts_ratio: (stage.is_sleep() && tts > 0).then(|| epochs as f64 / tts as f64),
            ttr_ratio: epochs as f64 / ttr as f64,
            normative_tts: NORMATIVE_TTS
                .iter()
                .find(|(s, _)| *s == stage)
                .map(|(_, v)| *v),
        })
        .collect();
    Ok(ArchitectureReport {
        epoch_duration_s: dur,
        stages,
        tts_epochs: tts,
        tts_s: tts as f64 * dur,
        ttr_epochs: ttr,
        ttr_s: ttr as f64 * dur,
    })
}

/// Rounded percentages as printed for a previously published night, used
/// to footnote rows where recomputation from the counts disagrees.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedComposition {
    /// Epoch counts in `SleepStage::ALL` order.
    pub counts: [usize; 7],
    /// Printed %TTS per stage (`None` where the table shows none).
    pub tts_percent: [Option<u32>; 7],
    /// Printed %TTR per stage.
    pub ttr_percent: [Option<u32>; 7],
}

/// Single-night clinical reference composition (healthy adult, 30 s epochs).
pub const REFERENCE_NIGHT: PrintedComposition = PrintedComposition {
    counts: [67, 54, 347, 107, 292, 233, 14],
    tts_percent: [None, Some(5), Some(34), Some(10), Some(26), Some(21), None],
    ttr_percent: [
        Some(6),
        Some(5),
        Some(31),
        Some(10),
        Some(26),
        Some(21),
        Some(1),
    ],
};

/// A rounded percentage that differs from a printed reference value.
#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub stage: SleepStage,
    pub column: &'static str,
    pub exact_percent: f64,
    pub rounded: u32,
    pub printed: u32,
}

/// Compares a report against printed values. Returns `None` when the epoch
/// counts differ, since the percentages are then not comparable.
pub fn compare_with_printed(
    report: &ArchitectureReport,
    printed: &PrintedComposition,
) -> Option<Vec<Discrepancy>> {
    if report.counts() != printed.counts {
        return None;
    }
    let mut out = Vec::new();
    for (i, line) in report.stages.iter().enumerate() {
        let columns = [
            ("%TTS", line.tts_ratio, printed.tts_percent[i]),
            ("%TTR", Some(line.ttr_ratio), printed.ttr_percent[i]),
        ];
        for (column, ratio, printed) in columns {
            if let (Some(r), Some(p)) = (ratio, printed) {
                let rounded = percent_rounded(r);
                if rounded != p {
                    out.push(Discrepancy {
                        stage: line.stage,
                        column,
                        exact_percent: r * 100.0,
                        rounded,
                        printed: p,
                    });
                }
            }
        }
    }
    Some(out)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use SleepStage::*;

    pub(crate) const REFERENCE_CONFUSION: [[u64; 6]; 6] = [
        [59, 0, 0, 0, 5, 3],
        [11, 0, 17, 0, 2, 24],
        [3, 1, 291, 0, 21, 31],
        [0, 0, 39, 3, 52, 13],
        [1, 0, 9, 2, 278, 2],
        [7, 0, 16, 0, 6, 204],
    ];

    pub(crate) fn night(counts: [usize; 7]) -> Hypnogram {
        let labels = SleepStage::ALL
            .iter()
            .zip(counts)
            .flat_map(|(&s, n)| std::iter::repeat_n(s, n))
            .collect();
        Hypnogram::new(labels, 30.0)
    }

    #[test]
    fn perfect_predictions() {
        let labels: Vec<_> = (0..10).map(|i| SleepStage::CLASSES[i % 6]).collect();
        let cm = confusion_matrix(&labels, &labels).unwrap();
        assert_eq!(cm.trace(), 10);
        assert_eq!(cm.total(), 10);
        assert_eq!(overall_accuracy(&cm), Ok(1.0));
    }

    #[test]
    fn single_off_diagonal_cell() {
        let cm = confusion_matrix(&[Awake; 7], &[S1; 7]).unwrap();
        assert_eq!(cm.get(Awake, S1), 7);
        assert_eq!(cm.total(), 7);
        assert_eq!(overall_accuracy(&cm), Ok(0.0));
    }

    #[test]
    fn confusion_errors() {
        assert_eq!(
            confusion_matrix(&[Awake], &[]),
            Err(MetricsError::LengthMismatch {
                actual: 1,
                predicted: 0
            })
        );
        assert_eq!(
            confusion_matrix(&[Awake, Movement], &[Awake, Awake]),
            Err(MetricsError::Movement(1))
        );
        assert_eq!(
            overall_accuracy(&ConfusionMatrix::default()),
            Err(MetricsError::Empty)
        );
    }

    #[test]
    fn replayed_labels_realize_reference_matrix() {
        let mut actual = Vec::new();
        let mut predicted = Vec::new();
        for (a, row) in REFERENCE_CONFUSION.iter().enumerate() {
            for (p, &n) in row.iter().enumerate() {
                for _ in 0..n {
                    actual.push(SleepStage::CLASSES[a]);
                    predicted.push(SleepStage::CLASSES[p]);
                }
            }
        }
        let cm = confusion_matrix(&actual, &predicted).unwrap();
        assert_eq!(cm.counts, REFERENCE_CONFUSION);
    }

    #[test]
    fn reference_matrix_success_rates() {
        let cm = ConfusionMatrix::from_counts(REFERENCE_CONFUSION);
        let rates: Vec<u32> = per_class_success(&cm)
            .iter()
            .map(|r| percent_rounded(r.unwrap()))
            .collect();
        assert_eq!(rates, vec![88, 0, 84, 3, 95, 88]);
        let acc = overall_accuracy(&cm).unwrap();
        assert_eq!(cm.trace(), 835);
        assert_eq!(cm.total(), 1100);
        assert_eq!(percent_rounded(acc), 76);
    }

    #[test]
    fn empty_rows_have_no_rate() {
        let mut counts = [[0; 6]; 6];
        counts[0][0] = 3;
        let rates = per_class_success(&ConfusionMatrix::from_counts(counts));
        assert_eq!(rates[0], Some(1.0));
        assert!(rates[1..].iter().all(Option::is_none));
    }

    #[test]
    fn identity_rates() {
        let mut counts = [[0; 6]; 6];
        for (i, row) in counts.iter_mut().enumerate() {
            row[i] = 1;
        }
        let rates = per_class_success(&ConfusionMatrix::from_counts(counts));
        assert!(rates.iter().all(|r| *r == Some(1.0)));
    }

    #[test]
    fn reference_night_totals() {
        let r = architecture_report(&night(REFERENCE_NIGHT.counts)).unwrap();
        assert_eq!(r.tts_epochs, 1033);
        assert_eq!(r.tts_s, 30990.0);
        assert_eq!(r.ttr_epochs, 1114);
        assert_eq!(r.ttr_s, 33420.0);
        assert_eq!(percent_rounded(r.line(S2).tts_ratio.unwrap()), 34);
        assert_eq!(percent_rounded(r.line(S4).tts_ratio.unwrap()), 28);
        let ttr: Vec<u32> = [Awake, S2, S4, Rem]
            .iter()
            .map(|&s| percent_rounded(r.line(s).ttr_ratio))
            .collect();
        assert_eq!(ttr, vec![6, 31, 26, 21]);
        assert_eq!(r.line(Awake).tts_ratio, None);
        assert_eq!(r.line(S2).normative_tts, Some("~ 50"));
    }

    #[test]
    fn reference_night_discrepancies() {
        let r = architecture_report(&night(REFERENCE_NIGHT.counts)).unwrap();
        let d = compare_with_printed(&r, &REFERENCE_NIGHT).unwrap();
        let flagged: Vec<(SleepStage, &str, u32, u32)> = d
            .iter()
            .map(|d| (d.stage, d.column, d.rounded, d.printed))
            .collect();
        assert_eq!(flagged, vec![(S4, "%TTS", 28, 26), (Rem, "%TTS", 23, 21)]);
        assert!(compare_with_printed(
            &architecture_report(&night([1; 7])).unwrap(),
            &REFERENCE_NIGHT
        )
        .is_none());
    }

    #[test]
    fn whole_night_awake() {
        let r = architecture_report(&night([3, 0, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(r.tts_epochs, 0);
        assert!(r.stages.iter().all(|l| l.tts_ratio.is_none()));
        assert_eq!(r.line(Awake).ttr_ratio, 1.0);
        assert_eq!(
            architecture_report(&night([0; 7])),
            Err(MetricsError::EmptyHypnogram)
        );
    }

    #[test]
    fn half_up_rounding() {
        assert_eq!(percent_rounded(0.285), 29);
        assert_eq!(percent_rounded(0.2849), 28);
        assert_eq!(percent_rounded(1.0), 100);
        assert_eq!(percent_rounded(0.0), 0);
    }
}
