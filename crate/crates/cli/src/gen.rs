//! File generators behind `nambu3 gen`.
//!
//! Every generator is a pure function of its flags: the same seed and
//! shape always produce the same bytes, so generated files can serve as
//! frozen fixtures.

use crate::args::{GenCommand, ModeArg, ParityArg};
use nambu3_core::io::{
    algebra_to_json, cochain_to_json, matrix3_to_json, supercubic_to_json, to_canonical_string,
};
use nambu3_core::rng::Stream;
use nambu3_core::{
    build_gl, build_gl_super, gen_random_cubic, gen_random_super, Error, ExactScalar, FloatScalar,
    Result, SuperStructure,
};
use serde_json::Value;
use std::path::Path;

pub fn run(cmd: &GenCommand) -> Result<()> {
    match cmd {
        GenCommand::RandomCubic {
            order,
            seed,
            mode,
            range,
            out,
        } => {
            check_range(*mode, *range)?;
            let v = match mode {
                ModeArg::Exact => matrix3_to_json(&gen_random_cubic::<ExactScalar>(
                    *order,
                    &mut Stream::new(*seed),
                    *range,
                )?)?,
                ModeArg::Float => matrix3_to_json(&gen_random_cubic::<FloatScalar>(
                    *order,
                    &mut Stream::new(*seed),
                    *range,
                )?)?,
            };
            emit(&v, out.as_deref())
        }
        GenCommand::RandomSuper {
            r,
            s,
            seed,
            mode,
            range,
            parity,
            out,
        } => {
            check_range(*mode, *range)?;
            let ss = SuperStructure::new(*r, *s)?;
            let want = match parity {
                ParityArg::Mixed => None,
                ParityArg::Even => Some(false),
                ParityArg::Odd => Some(true),
            };
            let v = match mode {
                ModeArg::Exact => supercubic_to_json(&gen_random_super::<ExactScalar>(
                    ss,
                    &mut Stream::new(*seed),
                    *range,
                    want,
                )?)?,
                ModeArg::Float => supercubic_to_json(&gen_random_super::<FloatScalar>(
                    ss,
                    &mut Stream::new(*seed),
                    *range,
                    want,
                )?)?,
            };
            emit(&v, out.as_deref())
        }
        GenCommand::Gl {
            order,
            out,
            cochain_out,
        } => {
            let (g, w) = build_gl::<ExactScalar>(*order)?;
            emit(&algebra_to_json(&g)?, out.as_deref())?;
            if let Some(p) = cochain_out {
                emit(&cochain_to_json(&w)?, Some(p))?;
            }
            Ok(())
        }
        GenCommand::GlSuper {
            m,
            n,
            out,
            cochain_out,
        } => {
            let (g, w) = build_gl_super::<ExactScalar>(*m, *n)?;
            emit(&algebra_to_json(&g)?, out.as_deref())?;
            if let Some(p) = cochain_out {
                emit(&cochain_to_json(&w)?, Some(p))?;
            }
            Ok(())
        }
    }
}

fn check_range(mode: ModeArg, range: i64) -> Result<()> {
    if mode == ModeArg::Exact && range < 1 {
        return Err(Error::Config(format!(
            "exact generation needs --range >= 1, got {range}"
        )));
    }
    Ok(())
}

fn emit(v: &Value, out: Option<&Path>) -> Result<()> {
    let mut text = to_canonical_string(v);
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
