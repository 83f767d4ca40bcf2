//! Substitution scan: how many monic `g` of degree `n` make every `f_i(g(T))`
//! irreducible at once.

use super::report::Report;
use super::scan::{scan, Tally};
use super::{ExpError, ExperimentConfig, Mode};
use crate::embedmodel::{model_wreath, predicted_density};
use crate::ffpoly::{parse_field_spec, parse_poly, Ctx, FieldElem, Poly};
use crate::permgrp::FractionMode;

/// The monic polynomial `T^n + a_1 T^(n-1) + ... + a_n` from a coefficient
/// tuple `(a_1, ..., a_n)`.
pub fn monic_from_tuple(ctx: &Ctx, tuple: &[FieldElem]) -> Result<Poly, ExpError> {
    if tuple.is_empty() {
        return Err(ExpError::EmptyInput);
    }
    let mut coeffs: Vec<FieldElem> = tuple.iter().rev().cloned().collect();
    coeffs.push(ctx.one());
    Ok(Poly::new(ctx, coeffs))
}

/// Map a scan index to the tuple `(a_1, ..., a_n)` by base-`q` digits.
pub(crate) fn tuple_at(ctx: &Ctx, n: usize, mut index: u64) -> Vec<FieldElem> {
    let q = ctx.q();
    (0..n)
        .map(|_| {
            let e = ctx.elem_at(index % q);
            index /= q;
            e
        })
        .collect()
}

pub(crate) fn run(cfg: &ExperimentConfig) -> Result<Report, ExpError> {
    let ctx = parse_field_spec(&cfg.field)?;
    let q = ctx.q();
    let p = ctx.p();
    let n = cfg
        .n
        .ok_or_else(|| ExpError::Config("schinzel needs --n".into()))?;
    if n < 1 {
        return Err(ExpError::PreconditionFailed("n must be >= 1".into()));
    }
    if p == 2 && n % 2 == 0 {
        return Err(ExpError::PreconditionFailed(
            "n must be odd in characteristic 2".into(),
        ));
    }
    if cfg.polys.is_empty() {
        return Err(ExpError::EmptyInput);
    }

    let mut fs = Vec::new();
    for text in &cfg.polys {
        let f = parse_poly(&ctx, text)?;
        if f.degree().map_or(true, |d| d < 1) {
            return Err(ExpError::PreconditionFailed(format!(
                "`{text}` is constant"
            )));
        }
        if !f.is_irreducible()? {
            return Err(ExpError::PreconditionFailed(format!(
                "`{text}` is reducible over F_{q}"
            )));
        }
        let sep = f.gcd(&f.derivative())?.degree() == Some(0);
        if !sep {
            return Err(ExpError::PreconditionFailed(format!(
                "`{text}` is inseparable"
            )));
        }
        fs.push(f);
    }
    for i in 0..fs.len() {
        for j in 0..i {
            if fs[i].monic() == fs[j].monic() {
                return Err(ExpError::PreconditionFailed(
                    "input polynomials must be pairwise non-associate".into(),
                ));
            }
        }
    }

    let degrees: Vec<usize> = fs.iter().map(|f| f.degree().unwrap()).collect();
    let model = model_wreath(n, &degrees, p).map_err(|e| match e {
        crate::embedmodel::ModelError::EvenNCharTwo => {
            ExpError::PreconditionFailed("n must be odd in characteristic 2".into())
        }
        other => other.into(),
    })?;
    let predicted = predicted_density(&model, FractionMode::Exhaustive)?;

    let space = checked_pow(q, n as u32)?;
    let tally = scan(
        cfg.mode,
        space,
        cfg.seed,
        cfg.workers,
        cfg.scan_bound,
        |index, t: &mut Tally| {
            let tuple = tuple_at(&ctx, n, index);
            let g = monic_from_tuple(&ctx, &tuple).expect("n >= 1");
            let mut all = true;
            for f in &fs {
                let comp = f.compose(&g).expect("same field");
                if !comp.is_irreducible().expect("degree >= 1") {
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
    let predicted_value = predicted.value();
    let slack = sample_slack(cfg.mode, density, tally.scanned);
    let pass = (density - predicted_value).abs() <= 4.0 / (q as f64).sqrt() + slack;
    Ok(Report {
        config_echo: Report::echo_config(cfg),
        scanned: tally.scanned,
        accepted: tally.accepted,
        hits: tally.hits,
        density,
        predicted: predicted_value,
        error_scale: (q as f64).powf(n as f64 - 0.5),
        pass,
        shapes: None,
        fit: None,
        elapsed_s: 0.0,
    })
}

/// `q^n` as a scan-space size; only sizes indexable by `u64` are supported
/// (the exhaustive bound is enforced separately by the scan driver).
pub(crate) fn checked_pow(q: u64, n: u32) -> Result<u64, ExpError> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(q as u128);
    }
    if acc > u64::MAX as u128 {
        return Err(ExpError::ScanSpaceTooLarge {
            space: acc,
            bound: u64::MAX,
        });
    }
    Ok(acc as u64)
}

/// Extra tolerance for sampled scans: three binomial standard deviations.
pub(crate) fn sample_slack(mode: Mode, p_hat: f64, count: u64) -> f64 {
    match mode {
        Mode::Exhaustive => 0.0,
        Mode::Sample(_) => {
            let c = count.max(1) as f64;
            3.0 * (p_hat.max(1e-9) * (1.0 - p_hat).max(1e-9) / c).sqrt()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explab::Kind;
    use crate::ffpoly::{count_irreducible, field_new};

    #[test]
    fn monic_from_tuple_order() {
        let f3 = field_new(3, 1).unwrap();
        // (a_1, a_2) = (1, 2) gives T^2 + T + 2
        let g = monic_from_tuple(&f3, &[f3.from_u64(1), f3.from_u64(2)]).unwrap();
        assert_eq!(g, Poly::from_u64_coeffs(&f3, &[2, 1, 1]));

        let z = monic_from_tuple(&f3, &[f3.zero(), f3.zero(), f3.zero()]).unwrap();
        assert_eq!(z, Poly::from_u64_coeffs(&f3, &[0, 0, 0, 1]));

        assert!(matches!(
            monic_from_tuple(&f3, &[]),
            Err(ExpError::EmptyInput)
        ));
    }

    fn base_cfg(field: &str, poly: &str, n: usize) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(Kind::Schinzel, field);
        cfg.polys = vec![poly.to_string()];
        cfg.n = Some(n);
        cfg
    }

    #[test]
    fn linear_case_counts_irreducibles() {
        // f = X - 1: hits biject with monic irreducibles of degree n.
        let cfg = base_cfg("3", "X+2", 2);
        let report = run(&cfg).unwrap();
        assert_eq!(report.scanned, 9);
        let f3 = field_new(3, 1).unwrap();
        assert_eq!(report.hits, count_irreducible(&f3, 2));
    }

    #[test]
    fn char2_even_n_is_rejected() {
        let cfg = base_cfg("2", "X", 2);
        assert!(matches!(
            run(&cfg),
            Err(ExpError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn reducible_input_is_rejected() {
        let cfg = base_cfg("5", "X^2+4", 2); // (X-1)(X+1)
        assert!(matches!(run(&cfg), Err(ExpError::PreconditionFailed(_))));
    }

    #[test]
    fn associate_inputs_are_rejected() {
        let mut cfg = base_cfg("5", "X^2+2", 2);
        cfg.polys.push("2*X^2+4".to_string());
        assert!(matches!(run(&cfg), Err(ExpError::PreconditionFailed(_))));
    }

    #[test]
    fn quadratic_over_f3_matches_trial_division_oracle() {
        // f = X^2 + 1, n = 2: factor all nine quartics (t^2+a1*t+a2)^2 + 1 by
        // trial division over F_3 and count the irreducible ones.
        let f3 = field_new(3, 1).unwrap();
        let f = Poly::from_u64_coeffs(&f3, &[1, 0, 1]);
        let mut oracle_hits = 0u64;
        for idx in 0..9u64 {
            let tuple = tuple_at(&f3, 2, idx);
            let g = monic_from_tuple(&f3, &tuple).unwrap();
            let comp = f.compose(&g).unwrap();
            // trial division by every monic of degree 1..=2
            let mut divisible = false;
            for d in 1..=2usize {
                for j in 0..3u64.pow(d as u32) {
                    let cand = Poly::monic_at(&f3, d, j);
                    if comp.rem(&cand).unwrap().is_zero() {
                        divisible = true;
                    }
                }
            }
            if !divisible {
                oracle_hits += 1;
            }
        }
        let report = run(&base_cfg("3", "X^2+1", 2)).unwrap();
        assert_eq!(report.hits, oracle_hits);
    }

    #[test]
    fn sampled_mode_is_worker_independent() {
        let mut cfg = base_cfg("5", "X^2+2", 2);
        cfg.mode = Mode::Sample(400);
        cfg.seed = 11;
        cfg.workers = 1;
        let a = run(&cfg).unwrap();
        cfg.workers = 4;
        let b = run(&cfg).unwrap();
        assert_eq!(a.hits, b.hits);
        assert_eq!(a.json_bytes(), b.json_bytes());
    }
}
