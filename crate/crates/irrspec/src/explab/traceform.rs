//! Trace-form scan: symmetric matrices `S` against a fixed nondegenerate
//! symmetric `B`, counting irreducible characteristic polynomials of `S*B`.

use super::report::Report;
use super::scan::{scan, Tally};
use super::schinzel::{checked_pow, sample_slack};
use super::{ExpError, ExperimentConfig};
use crate::embedmodel::{chebotarev_fit_counts, model_product, predicted_density};
use crate::ffpoly::{parse_field_spec, parse_matrix, Ctx, Matrix};
use crate::permgrp::FractionMode;

/// Build the symmetric matrix whose upper triangle (row-major) is the base-q
/// digit expansion of `index`.
pub(crate) fn symmetric_at(ctx: &Ctx, n: usize, mut index: u64) -> Matrix {
    let q = ctx.q();
    let mut m = Matrix::zero(ctx, n);
    for i in 0..n {
        for j in i..n {
            let e = ctx.elem_at(index % q);
            index /= q;
            m.set(i, j, e.clone());
            m.set(j, i, e);
        }
    }
    m
}

pub(crate) fn run(cfg: &ExperimentConfig) -> Result<Report, ExpError> {
    let ctx = parse_field_spec(&cfg.field)?;
    let q = ctx.q();
    let matrix_text = cfg
        .matrix
        .as_ref()
        .ok_or_else(|| ExpError::Config("traceform needs --matrix".into()))?;
    let b = parse_matrix(&ctx, matrix_text)?;
    if !b.is_symmetric() {
        return Err(ExpError::NotSymmetric);
    }
    if ctx.is_zero(&b.det()) {
        return Err(ExpError::Degenerate);
    }
    let n = b.size();
    if n > 8 {
        return Err(ExpError::Config(
            "traceform supports matrices up to 8x8".into(),
        ));
    }

    let model = model_product(&[n])?;
    let predicted = predicted_density(&model, FractionMode::Exhaustive)?.value();

    let free = (n * (n + 1) / 2) as u32;
    let space = checked_pow(q, free)?;
    let tally = scan(
        cfg.mode,
        space,
        cfg.seed,
        cfg.workers,
        cfg.scan_bound,
        |index, t: &mut Tally| {
            let s = symmetric_at(&ctx, n, index);
            let cp = s.mul(&b).charpoly();
            let shape = cp.shape().expect("degree n >= 1");
            t.scanned += 1;
            if shape.is_squarefree() {
                t.accepted += 1;
                t.record_shape(shape.degrees());
                if shape.is_irreducible() {
                    t.hits += 1;
                }
            } else {
                t.rejected += 1;
            }
        },
    )?;

    let fit = chebotarev_fit_counts(&model, q, &tally.shapes, tally.rejected)?;
    let density = tally.hits as f64 / tally.accepted.max(1) as f64;
    let slack = sample_slack(cfg.mode, density, tally.accepted);
    let density_ok = (density - predicted).abs() <= 4.0 / (q as f64).sqrt() + slack;
    Ok(Report {
        config_echo: Report::echo_config(cfg),
        scanned: tally.scanned,
        accepted: tally.accepted,
        hits: tally.hits,
        density,
        predicted,
        error_scale: 1.0 / (q as f64).sqrt(),
        pass: density_ok && fit.pass,
        shapes: Some(fit.rows.clone()),
        fit: Some(fit),
        elapsed_s: 0.0,
    })
}
