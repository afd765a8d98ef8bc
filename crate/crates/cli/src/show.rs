//! Derived-quantity printers behind `nambu3 show`.
//!
//! Output is one canonical JSON value per invocation — a `[re, im]` pair
//! for scalars, nested arrays for sections — so the results are easy to
//! consume from scripts and stable across runs.

use crate::args::{ModeArg, ShowCommand};
use nambu3_core::cubic::{Direction, Matrix3};
use nambu3_core::io::{
    matrix3_from_json, read_json_file, supercubic_from_json, to_canonical_string, JsonScalar,
};
use nambu3_core::Result;
use serde_json::Value;
use std::path::Path;

pub fn run(cmd: &ShowCommand) -> Result<()> {
    match cmd {
        ShowCommand::Trace {
            matrix,
            direction,
            mode,
        } => match mode {
            ModeArg::Exact => trace::<nambu3_core::ExactScalar>(matrix, (*direction).into()),
            ModeArg::Float => trace::<nambu3_core::FloatScalar>(matrix, (*direction).into()),
        },
        ShowCommand::Supertrace { matrix, mode } => match mode {
            ModeArg::Exact => supertrace::<nambu3_core::ExactScalar>(matrix),
            ModeArg::Float => supertrace::<nambu3_core::FloatScalar>(matrix),
        },
        ShowCommand::Section {
            matrix,
            direction,
            label,
            mode,
        } => match mode {
            ModeArg::Exact => section::<nambu3_core::ExactScalar>(matrix, (*direction).into(), *label),
            ModeArg::Float => section::<nambu3_core::FloatScalar>(matrix, (*direction).into(), *label),
        },
    }
}

/// Cubic matrix from a file that may or may not carry a super structure;
/// the structure is irrelevant for traces and sections.
fn load_matrix<S: JsonScalar>(path: &Path) -> Result<Matrix3<S>> {
    let v = read_json_file(path)?;
    if v.get("super").is_some() {
        Ok(supercubic_from_json::<S>(&v)?.into_matrix())
    } else {
        matrix3_from_json(&v)
    }
}

fn print_value(v: &Value) {
    println!("{}", to_canonical_string(v));
}

fn trace<S: JsonScalar>(path: &Path, d: Direction) -> Result<()> {
    let m = load_matrix::<S>(path)?;
    print_value(&m.trace_dir(d)?.to_json()?);
    Ok(())
}

fn supertrace<S: JsonScalar>(path: &Path) -> Result<()> {
    let x = supercubic_from_json::<S>(&read_json_file(path)?)?;
    print_value(&x.supertrace().to_json()?);
    Ok(())
}

fn section<S: JsonScalar>(path: &Path, d: Direction, label: usize) -> Result<()> {
    let m = load_matrix::<S>(path)?;
    let sec = m.section(d, label)?;
    let (rows, cols) = sec.shape();
    let mut out = Vec::with_capacity(rows);
    for r in 1..=rows {
        let mut row = Vec::with_capacity(cols);
        for c in 1..=cols {
            row.push(sec.get(r, c).to_json()?);
        }
        out.push(Value::Array(row));
    }
    print_value(&Value::Array(out));
    Ok(())
}
