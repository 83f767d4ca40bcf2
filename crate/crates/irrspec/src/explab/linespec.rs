//! Line-specialization scan: pairs `(a, b)` making every `f_i(T, a*T + b)`
//! irreducible of full total degree.

use serde_json::json;

use super::report::Report;
use super::scan::{scan, Tally};
use super::schinzel::{checked_pow, sample_slack};
use super::smooth::{smooth_check, SmoothVerdict};
use super::{ExpError, ExperimentConfig};
use crate::embedmodel::{model_product, predicted_density};
use crate::ffpoly::{parse_bipoly, parse_field_spec, BiPoly, Var};
use crate::permgrp::FractionMode;

pub(crate) fn run(cfg: &ExperimentConfig) -> Result<Report, ExpError> {
    let ctx = parse_field_spec(&cfg.field)?;
    let q = ctx.q();
    let p = ctx.p();
    if cfg.polys.is_empty() {
        return Err(ExpError::EmptyInput);
    }

    let mut fs: Vec<BiPoly> = Vec::new();
    let mut degrees = Vec::new();
    let mut smooth_warning = None;
    for text in &cfg.polys {
        let f = parse_bipoly(&ctx, text)?;
        let d = f.total_degree().unwrap_or(0);
        if d < 1 {
            return Err(ExpError::PreconditionFailed(format!("`{text}` is constant")));
        }
        // p must divide neither d nor d-1
        if (d as u64) % p == 0 || ((d - 1) as u64) % p == 0 {
            return Err(ExpError::PreconditionFailed(format!(
                "characteristic {p} divides d(d-1) for `{text}` (d = {d})"
            )));
        }
        certify_bivariate_irreducible(&f, text)?;
        match smooth_check(&f)? {
            SmoothVerdict::Smooth => {}
            SmoothVerdict::Singular(w) => {
                return Err(ExpError::PreconditionFailed(format!(
                    "`{text}` has a singular point at ({}:{}:{})",
                    w.coords[0], w.coords[1], w.coords[2]
                )));
            }
            SmoothVerdict::Inconclusive { reason } => {
                if !cfg.smooth_override {
                    return Err(ExpError::SmoothnessInconclusive(text.clone()));
                }
                smooth_warning = Some(reason);
            }
        }
        degrees.push(d);
        fs.push(f);
    }

    let model = model_product(&degrees)?;
    let predicted = predicted_density(&model, FractionMode::Exhaustive)?.value();

    let space = checked_pow(q, 2)?;
    let tally = scan(
        cfg.mode,
        space,
        cfg.seed,
        cfg.workers,
        cfg.scan_bound,
        |index, t: &mut Tally| {
            let a = ctx.elem_at(index % q);
            let b = ctx.elem_at(index / q);
            let mut all = true;
            for (f, &d) in fs.iter().zip(&degrees) {
                let g = f.substitute_x_linear(&a, &b);
                let full = g.degree() == Some(d);
                if !(full && g.is_irreducible().unwrap_or(false)) {
                    all = false;
                    break;
                }
            }
            t.scanned += 1;
            t.accepted += 1;
            if all {
                t.hits += 1;
            }
        },
    )?;

    let density = tally.hits as f64 / tally.accepted.max(1) as f64;
    let slack = sample_slack(cfg.mode, density, tally.scanned);
    let density_ok = (density - predicted).abs() <= 4.0 / (q as f64).sqrt() + slack;
    let count_ok = cfg.a_min.map_or(true, |a| tally.hits >= a);

    let mut echo = Report::echo_config(cfg);
    if let Some(reason) = smooth_warning {
        echo.insert("smooth_warning".into(), json!(reason));
    }
    Ok(Report {
        config_echo: echo,
        scanned: tally.scanned,
        accepted: tally.accepted,
        hits: tally.hits,
        density,
        predicted,
        error_scale: 1.0 / (q as f64).sqrt(),
        pass: density_ok && count_ok,
        shapes: None,
        fit: None,
        elapsed_s: 0.0,
    })
}

/// Certify that a bivariate polynomial is irreducible over `F_q`.
///
/// Soundness route: a content-free polynomial with one specialization
/// `T -> a` of full `X`-degree that is irreducible over `F_q` cannot factor,
/// since any bivariate factorization would survive every specialization.
/// The certificate search tries both variable orders; when the polynomial is
/// univariate the direct test decides. Irreducible inputs without a
/// certifying specialization in range are rejected as unverifiable.
fn certify_bivariate_irreducible(f: &BiPoly, text: &str) -> Result<(), ExpError> {
    let ctx = f.ctx().clone();
    let dx = f.deg_x().unwrap_or(0);
    let dt = f.deg_t().unwrap_or(0);
    if dx == 0 || dt == 0 {
        let var = if dx == 0 { Var::T } else { Var::X };
        let g = f.to_univariate(var).expect("single variable");
        if g.degree().map_or(false, |d| d >= 1) && g.is_irreducible()? {
            return Ok(());
        }
        return Err(ExpError::PreconditionFailed(format!(
            "`{text}` is reducible over F_{}",
            ctx.q()
        )));
    }
    for cand in [f.clone(), f.transpose()] {
        if cand.content_in_t().degree().map_or(false, |d| d >= 1) {
            return Err(ExpError::PreconditionFailed(format!(
                "`{text}` has a nonconstant content and is reducible"
            )));
        }
        for i in 0..ctx.q() {
            let a = ctx.elem_at(i);
            let ev = cand.eval_partial(&a);
            if ev.degree_preserved && ev.poly.is_irreducible().unwrap_or(false) {
                return Ok(());
            }
        }
    }
    Err(ExpError::PreconditionFailed(format!(
        "could not certify that `{text}` is irreducible over F_{}",
        ctx.q()
    )))
}
