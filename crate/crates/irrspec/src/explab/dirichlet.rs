//! Progression scan: irreducible members of `a(X) + b(X)*K[X]`.
//!
//! Given coprime `a` and `b`, the runner searches seeded random multipliers
//! `c` of the requested degree until the pencil `a + tau*b*c` looks generic:
//! the factorization shapes over `tau in F_q^x` must fit the full symmetric
//! group model. It then reports how many members of the progression are
//! irreducible against the `1/n` prediction. The multiplier that passed is
//! echoed in the report as `poly_c`, so the run can be reproduced directly.

use serde_json::json;

use super::report::Report;
use super::scan::{scan, Tally};
use super::{ExpError, ExperimentConfig};
use crate::embedmodel::{chebotarev_fit_counts, model_product, specialize_family, FitReport};
use crate::ffpoly::{parse_field_spec, parse_poly, poly_to_text, BiPoly, Ctx, Poly, Rng};

const SEARCH_ATTEMPTS: u32 = 64;

/// Scan the progression `{a + tau*b*c : tau != 0}` for a fixed multiplier.
/// Returns the tally and the generic member degree `n`.
pub(crate) fn scan_progression(
    cfg: &ExperimentConfig,
    ctx: &Ctx,
    a: &Poly,
    bc: &Poly,
) -> Result<(Tally, usize), ExpError> {
    // F(T, X) = a(X) + T * (b*c)(X)
    let mut terms = Vec::new();
    for (j, coeff) in a.coeffs().iter().enumerate() {
        terms.push((0usize, j, coeff.clone()));
    }
    for (j, coeff) in bc.coeffs().iter().enumerate() {
        terms.push((1usize, j, coeff.clone()));
    }
    let pencil = BiPoly::from_terms(ctx, &terms);
    let n = pencil.deg_x().unwrap_or(0);
    if n < 1 {
        return Err(ExpError::PreconditionFailed(
            "the progression has no X part".into(),
        ));
    }
    let q = ctx.q();
    let fs = vec![pencil];
    let tally = scan(
        cfg.mode,
        q - 1,
        cfg.seed,
        cfg.workers,
        cfg.scan_bound,
        |index, t: &mut Tally| {
            let tau = ctx.elem_at(index + 1); // tau = 0 is excluded
            let s = specialize_family(&fs, &tau).expect("same field");
            t.scanned += 1;
            match s.shape {
                Some(shape) if s.accepted() => {
                    t.accepted += 1;
                    t.record_shape(shape.degrees());
                    if shape.is_irreducible() {
                        t.hits += 1;
                    }
                }
                _ => t.rejected += 1,
            }
        },
    )?;
    Ok((tally, n))
}

fn fit_tally(tally: &Tally, q: u64, n: usize) -> Result<FitReport, ExpError> {
    let model = model_product(&[n])?;
    Ok(chebotarev_fit_counts(
        &model,
        q,
        &tally.shapes,
        tally.rejected,
    )?)
}

pub(crate) fn run(cfg: &ExperimentConfig) -> Result<Report, ExpError> {
    let ctx = parse_field_spec(&cfg.field)?;
    let q = ctx.q();
    if cfg.polys.len() != 2 {
        return Err(ExpError::Config(
            "dirichlet needs exactly two --poly inputs: a then b".into(),
        ));
    }
    let a = parse_poly(&ctx, &cfg.polys[0])?;
    let b = parse_poly(&ctx, &cfg.polys[1])?;
    if b.is_zero() {
        return Err(ExpError::PreconditionFailed("b must be nonzero".into()));
    }
    if a.gcd(&b)?.degree() != Some(0) {
        return Err(ExpError::NotCoprime);
    }
    let m_deg = cfg
        .m_deg
        .ok_or_else(|| ExpError::Config("dirichlet needs --m (degree of c)".into()))?;

    let mut search_rng = Rng::new(cfg.seed ^ 0xD1C1_5EED);
    for _ in 0..SEARCH_ATTEMPTS {
        let c = Poly::random(&ctx, m_deg, false, &mut search_rng);
        if c.gcd(&a)?.degree() != Some(0) {
            continue;
        }
        let bc = &b * &c;
        let (tally, n) = scan_progression(cfg, &ctx, &a, &bc)?;
        if tally.accepted == 0 {
            continue;
        }
        let fit = fit_tally(&tally, q, n)?;
        if !fit.pass {
            continue;
        }
        let predicted = 1.0 / n as f64;
        let density = tally.hits as f64 / tally.accepted as f64;
        let tolerance = 4.0 / (q as f64).sqrt() + 4.0 / (tally.accepted as f64).sqrt();
        let mut echo = Report::echo_config(cfg);
        echo.insert("poly_c".into(), json!(poly_to_text(&c, "X")));
        return Ok(Report {
            config_echo: echo,
            scanned: tally.scanned,
            accepted: tally.accepted,
            hits: tally.hits,
            density,
            predicted,
            error_scale: 1.0 / (q as f64).sqrt(),
            pass: (density - predicted).abs() <= tolerance,
            shapes: Some(fit.rows.clone()),
            fit: Some(fit),
            elapsed_s: 0.0,
        });
    }
    Err(ExpError::SearchExhausted {
        attempts: SEARCH_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explab::Kind;

    fn cfg_with(field: &str, a: &str, b: &str, m: usize) -> ExperimentConfig {
        let mut cfg = ExperimentConfig::new(Kind::Dirichlet, field);
        cfg.polys = vec![a.to_string(), b.to_string()];
        cfg.m_deg = Some(m);
        cfg
    }

    #[test]
    fn fixed_multiplier_example() {
        // a = 1, b = X, c = X over F_3: tau = 1 gives X^2 + 1 (irreducible),
        // tau = 2 gives 2X^2 + 1 (root at 1): one hit out of two.
        let cfg = cfg_with("3", "1", "X", 1);
        let ctx = parse_field_spec("3").unwrap();
        let a = parse_poly(&ctx, "1").unwrap();
        let b = parse_poly(&ctx, "X").unwrap();
        let c = parse_poly(&ctx, "X").unwrap();
        let bc = &b * &c;
        let (tally, n) = scan_progression(&cfg, &ctx, &a, &bc).unwrap();
        assert_eq!(n, 2);
        assert_eq!(tally.scanned, 2);
        assert_eq!(tally.hits, 1);
    }

    #[test]
    fn common_factor_is_rejected() {
        let cfg = cfg_with("5", "X^2+X", "X", 2);
        assert!(matches!(run(&cfg), Err(ExpError::NotCoprime)));
    }

    #[test]
    fn search_finds_a_generic_multiplier() {
        let cfg = cfg_with("7", "1", "X", 2);
        let report = run(&cfg).unwrap();
        assert_eq!(report.scanned, 6);
        assert!(report.config_echo.contains_key("poly_c"));
        // n = deg(b) + deg(c) = 3 for a generic multiplier
        assert!((report.predicted - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn deterministic_multiplier_choice() {
        let cfg = cfg_with("7", "1", "X", 2);
        let a = run(&cfg).unwrap();
        let b = run(&cfg).unwrap();
        assert_eq!(a.config_echo["poly_c"], b.config_echo["poly_c"]);
        assert_eq!(a.json_bytes(), b.json_bytes());
    }
}
