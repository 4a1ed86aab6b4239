//! Line-oriented text serialization of a trained network.
//!
//! ```text
//! SOMNO-MLP 1
//! 5 6 6
//! Awake S1 S2 S3 S4 REM
//! <bias> <w_0> ... <w_n>      one line per neuron, layer by layer
//! ```
//!
//! Every value is written with 17 significant digits, which round-trips any
//! `f64` exactly.

use std::fmt::Write as _;

use super::{Layer, Mlp, MlpError};
use crate::stage::SleepStage;

pub const MODEL_MAGIC: &str = "SOMNO-MLP";
const VERSION: u32 = 1;

fn stage_names(outputs: usize) -> Vec<&'static str> {
    SleepStage::CLASSES
        .iter()
        .take(outputs)
        .map(|s| s.name())
        .collect()
}

pub fn write_model(mlp: &Mlp) -> String {
    let mut out = format!("{MODEL_MAGIC} {VERSION}\n");
    let sizes: Vec<String> = mlp.layer_sizes().iter().map(|s| s.to_string()).collect();
    writeln!(out, "{}", sizes.join(" ")).unwrap();
    writeln!(out, "{}", stage_names(mlp.output_size()).join(" ")).unwrap();
    for layer in mlp.layers() {
        for o in 0..layer.outputs {
            write!(out, "{:.16e}", layer.biases[o]).unwrap();
            for w in layer.row(o) {
                write!(out, " {w:.16e}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn read_model(text: &str) -> Result<Mlp, MlpError> {
    let err = |line: usize, message: String| MlpError::ModelFile { line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| err(0, format!("unexpected end of file, expected {what}")))
    };

    let (n, magic) = next("header")?;
    match magic.split_whitespace().collect::<Vec<_>>().as_slice() {
        [m, v] if *m == MODEL_MAGIC => {
            if v.parse::<u32>().ok() != Some(VERSION) {
                return Err(err(n, format!("unsupported model version {v:?}")));
            }
        }
        _ => return Err(err(n, format!("not a model file: {magic:?}"))),
    }

    let (n, sizes_line) = next("layer sizes")?;
    let sizes: Vec<usize> = sizes_line
        .split_whitespace()
        .map(|s| {
            s.parse()
                .map_err(|_| err(n, format!("bad layer size {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    if sizes.len() < 2 || sizes.contains(&0) {
        return Err(err(n, format!("invalid layer sizes {sizes:?}")));
    }
    let outputs = *sizes.last().expect("checked");

    let (n, names) = next("stage names")?;
    let names: Vec<&str> = names.split_whitespace().collect();
    if names != stage_names(outputs) {
        return Err(err(n, format!("unexpected output stage order {names:?}")));
    }

    let mut layers = Vec::with_capacity(sizes.len() - 1);
    for w in sizes.windows(2) {
        let (inputs, outs) = (w[0], w[1]);
        let mut layer = Layer::zeros(inputs, outs);
        for o in 0..outs {
            let (n, line) = next("weight row")?;
            let values: Vec<f64> = line
                .split_whitespace()
                .map(|s| s.parse().map_err(|_| err(n, format!("bad number {s:?}"))))
                .collect::<Result<_, _>>()?;
            if values.len() != inputs + 1 {
                return Err(err(
                    n,
                    format!("expected {} values, found {}", inputs + 1, values.len()),
                ));
            }
            if !values.iter().all(|v| v.is_finite()) {
                return Err(err(n, "non-finite parameter".into()));
            }
            layer.biases[o] = values[0];
            layer.weights[o * inputs..(o + 1) * inputs].copy_from_slice(&values[1..]);
        }
        layers.push(layer);
    }
    if let Some((n, extra)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(err(n, format!("trailing content {extra:?}")));
    }
    Mlp::from_layers(layers)
}
