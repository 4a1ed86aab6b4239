use std::fs;
use std::path::Path;

use somno::dataset::parse_hypnogram;
use somno::features::parse_features;
use somno::mlp::read_model;
use somno::stage::SleepStage;

fn run(args: &[&str]) -> i32 {
    somno::cli::run(std::iter::once("somno").chain(args.iter().copied()))
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

fn synth(dir: &Path, counts: &str, movement: &str) -> (String, String) {
    let (edf, hyp) = (path(dir, "night.edf"), path(dir, "night.hyp"));
    let status = run(&[
        "synth",
        "--counts",
        counts,
        "--movement",
        movement,
        "--seed",
        "3",
        "--edf",
        &edf,
        "--hypnogram",
        &hyp,
    ]);
    assert_eq!(status, 0);
    (edf, hyp)
}

#[test]
fn evaluate_identical_hypnograms() {
    let dir = tempfile::tempdir().unwrap();
    let hyp = path(dir.path(), "a.hyp");
    fs::write(&hyp, "W\n1\n2\n2\n3\n4\nR\nM\n").unwrap();
    let out = path(dir.path(), "eval.txt");
    assert_eq!(run(&["evaluate", &hyp, &hyp, "-o", &out]), 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(
        text.contains("7 epochs compared, 1 skipped as movement"),
        "{text}"
    );
    assert!(
        text.contains("Overall agreement: 7/7 = 100.00% (100%)"),
        "{text}"
    );
}

#[test]
fn report_on_reference_night() {
    let dir = tempfile::tempdir().unwrap();
    let hyp = path(dir.path(), "night.hyp");
    let mut text = String::new();
    for (token, n) in ["W", "1", "2", "3", "4", "R", "M"]
        .iter()
        .zip([67, 54, 347, 107, 292, 233, 14])
    {
        text.push_str(&format!("{token}\n").repeat(n));
    }
    fs::write(&hyp, text).unwrap();
    let out = path(dir.path(), "report.txt");
    assert_eq!(run(&["report", &hyp, "-o", &out]), 0);
    let report = fs::read_to_string(&out).unwrap();
    assert!(report.contains("TTS         1033"), "{report}");
    assert!(report.contains("(30990 s)"), "{report}");
    assert!(report.contains("TTR         1114"), "{report}");
    assert!(report.contains("[1] S4 %TTS"), "{report}");
}

#[test]
fn scored_hypnogram_matches_model_predictions() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let (edf, hyp) = synth(d, "10,10,10,10,10,10", "4");
    let (features, model, scored) = (
        path(d, "f.csv"),
        path(d, "model.txt"),
        path(d, "scored.hyp"),
    );
    assert_eq!(
        run(&["features", &edf, "--signals", "EEG synth", "-o", &features]),
        0
    );
    assert_eq!(
        run(&[
            "train",
            "--features",
            &features,
            "--hypnogram",
            &hyp,
            "--model",
            &model,
            "--max-epochs",
            "80",
            "-o",
            &path(d, "t.txt")
        ]),
        0
    );
    assert_eq!(
        run(&[
            "score",
            "--model",
            &model,
            &edf,
            "--signals",
            "EEG synth",
            "-o",
            &scored
        ]),
        0
    );

    let mlp = read_model(&fs::read_to_string(&model).unwrap()).unwrap();
    let table = parse_features(&fs::read_to_string(&features).unwrap()).unwrap();
    let predicted = parse_hypnogram(&fs::read_to_string(&scored).unwrap(), 30.0).unwrap();
    let reference = parse_hypnogram(&fs::read_to_string(&hyp).unwrap(), 30.0).unwrap();
    assert_eq!(predicted.len(), 64);
    assert_eq!(table.len(), 64);
    let mut agree = 0;
    for ((row, &p), &r) in table
        .rows
        .iter()
        .zip(&predicted.labels)
        .zip(&reference.labels)
    {
        assert_eq!(mlp.predict(row).unwrap(), p);
        if r != SleepStage::Movement && r == p {
            agree += 1;
        }
    }

    let out = path(d, "eval.txt");
    assert_eq!(run(&["evaluate", &hyp, &scored, "-o", &out]), 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(
        text.contains(&format!("Overall agreement: {agree}/60 ")),
        "{text}"
    );
}

#[test]
fn crossval_on_clinical_night() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let (edf, hyp) = synth(d, "67,54,347,107,292,233", "14");
    let (features, out) = (path(d, "f.csv"), path(d, "cv.txt"));
    assert_eq!(
        run(&["features", &edf, "--signals", "EEG synth", "-o", &features]),
        0
    );
    assert_eq!(
        run(&[
            "crossval",
            "--features",
            &features,
            "--hypnogram",
            &hyp,
            "-o",
            &out
        ]),
        0
    );
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("labeled epochs 1100"), "{text}");
    assert!(text.contains("mean accuracy"), "{text}");
    let table_rows = ["Awake ", "S1 ", "S2 ", "S3 ", "S4 ", "REM "]
        .iter()
        .filter(|name| {
            text.lines()
                .any(|l| l.starts_with(*name) && l.ends_with('%'))
        })
        .count();
    assert_eq!(table_rows, 6, "{text}");
}

#[test]
fn info_describes_the_recording() {
    let dir = tempfile::tempdir().unwrap();
    let (edf, _) = synth(dir.path(), "1,1,1,1,1,1", "0");
    let out = path(dir.path(), "info.txt");
    assert_eq!(run(&["info", &edf, "-o", &out]), 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("records         6 x 30 s = 180 s"), "{text}");
    assert!(text.contains("EEG synth"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = path(dir.path(), "missing.hyp");
    assert_eq!(run(&["report", &missing]), 2);
    assert_eq!(run(&["report"]), 1);
    assert_eq!(run(&["frobnicate"]), 1);

    let bad = path(dir.path(), "bad.hyp");
    fs::write(&bad, "W\nX\n").unwrap();
    assert_eq!(run(&["report", &bad]), 2);

    let (edf, _) = synth(dir.path(), "1,1,1,1,1,1", "0");
    assert_eq!(run(&["features", &edf, "--signals", "Fpz-Cz"]), 2);
    assert_eq!(
        run(&[
            "synth",
            "--counts",
            "1,2",
            "--edf",
            &edf,
            "--hypnogram",
            &missing
        ]),
        1
    );
}
