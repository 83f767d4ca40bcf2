//! Standalone fit runner: specialize a family `F_i(T, X)` over the field and
//! compare observed factorization shapes to the product-model prediction.

use super::report::Report;
use super::scan::{scan, Tally};

use super::{ExpError, ExperimentConfig};
use crate::embedmodel::{
    chebotarev_fit_counts, model_product, predicted_density, specialize_family, GaloisModel,
};
use crate::ffpoly::{parse_bipoly, parse_field_spec, BiPoly, Ctx};
use crate::permgrp::FractionMode;

/// Parse the family and build its product model, one block of size
/// `deg_X F_i` per polynomial.
pub(crate) fn family_and_model(
    ctx: &Ctx,
    polys: &[String],
) -> Result<(Vec<BiPoly>, GaloisModel), ExpError> {
    if polys.is_empty() {
        return Err(ExpError::EmptyInput);
    }
    let mut fs = Vec::new();
    let mut degrees = Vec::new();
    for text in polys {
        let f = parse_bipoly(ctx, text)?;
        let dx = f.deg_x().unwrap_or(0);
        if dx < 1 {
            return Err(ExpError::PreconditionFailed(format!(
                "`{text}` has no X part to specialize"
            )));
        }
        degrees.push(dx);
        fs.push(f);
    }
    let model = model_product(&degrees)?;
    Ok((fs, model))
}

pub(crate) fn run(cfg: &ExperimentConfig) -> Result<Report, ExpError> {
    let ctx = parse_field_spec(&cfg.field)?;
    let q = ctx.q();
    let (fs, model) = family_and_model(&ctx, &cfg.polys)?;
    let full_shape: Vec<usize> = {
        let mut v: Vec<usize> = fs.iter().map(|f| f.deg_x().unwrap()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };

    let tally = scan(
        cfg.mode,
        q,
        cfg.seed,
        cfg.workers,
        cfg.scan_bound,
        |index, t: &mut Tally| {
            let a = ctx.elem_at(index);
            let s = specialize_family(&fs, &a).expect("same field");
            t.scanned += 1;
            match s.shape {
                Some(shape) if s.accepted() => {
                    t.accepted += 1;
                    t.record_shape(shape.degrees());
                    if shape.degrees() == full_shape.as_slice() {
                        t.hits += 1;
                    }
                }
                _ => t.rejected += 1,
            }
        },
    )?;

    let fit = chebotarev_fit_counts(&model, q, &tally.shapes, tally.rejected)?;
    let predicted = predicted_density(&model, FractionMode::Exhaustive)?.value();
    let density = tally.hits as f64 / tally.accepted.max(1) as f64;
    Ok(Report {
        config_echo: Report::echo_config(cfg),
        scanned: tally.scanned,
        accepted: tally.accepted,
        hits: tally.hits,
        density,
        predicted,
        error_scale: 1.0 / (q as f64).sqrt(),
        pass: fit.pass,
        shapes: Some(fit.rows.clone()),
        fit: Some(fit),
        elapsed_s: 0.0,
    })
}
