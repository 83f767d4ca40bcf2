//! Predicted cycle-type distributions and the Chebotarev-style fit.
//!
//! Factorization shapes of accepted specializations should follow the
//! distribution of block-wise cycle types of a uniform Frobenius lift. The
//! fit statistic is total-variation distance, compared against the heuristic
//! threshold `4/sqrt(q) + 4/sqrt(accepted)`; total variation avoids the
//! empty-cell trouble chi-square runs into at small `q`.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use super::{GaloisModel, ModelError, SpecializationSample};
use crate::ffpoly::Rng;

/// Tallied cycle-type counts over the Frobenius coset. When `exact`, the
/// counts enumerate the whole coset and the probabilities are exact
/// rationals `count/total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeDistribution {
    counts: BTreeMap<Vec<usize>, u64>,
    total: u64,
    exact: bool,
}

impl ShapeDistribution {
    pub fn counts(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn prob(&self, shape: &[usize]) -> f64 {
        match self.counts.get(shape) {
            Some(&c) => c as f64 / self.total as f64,
            None => 0.0,
        }
    }

    /// Exact probability as a reduced fraction.
    pub fn prob_exact(&self, shape: &[usize]) -> (u64, u64) {
        let c = self.counts.get(shape).copied().unwrap_or(0);
        if c == 0 {
            return (0, 1);
        }
        let g = crate::ffpoly::gcd_u64(c, self.total);
        (c / g, self.total / g)
    }
}

/// How to traverse the coset when tallying shapes.
pub enum ShapeMode<'a> {
    Exhaustive,
    Sample { count: u64, rng: &'a mut Rng },
}

/// Block-wise cycle type of one group element: orbit lengths within each
/// block, combined into one multiset (an orbit of length `l` plays the part
/// of an irreducible factor of degree `l`).
fn element_shape(perm: &crate::permgrp::Perm, model: &GaloisModel) -> Vec<usize> {
    let mut out = Vec::new();
    for block in model.blocks().blocks() {
        let mut seen: Vec<bool> = vec![false; block.len()];
        let index: BTreeMap<usize, usize> =
            block.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        for (i, &start) in block.iter().enumerate() {
            if seen[i] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            loop {
                let xi = index[&x];
                if seen[xi] {
                    break;
                }
                seen[xi] = true;
                len += 1;
                x = perm.apply(x);
            }
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Distribution of block-wise cycle types of a uniform Frobenius lift.
pub fn shape_distribution(
    model: &GaloisModel,
    mode: ShapeMode<'_>,
) -> Result<ShapeDistribution, ModelError> {
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let total;
    let exact;
    match mode {
        ShapeMode::Exhaustive => {
            let coset = model.embedding_problem().frobenius_lifts()?;
            if coset.is_empty() {
                return Err(ModelError::NoWeakSolution);
            }
            for e in &coset {
                *counts.entry(element_shape(&e.perm, model)).or_insert(0) += 1;
            }
            total = coset.len() as u64;
            exact = true;
        }
        ShapeMode::Sample { count, rng } => {
            let ep = model.embedding_problem();
            for _ in 0..count {
                let e = ep.sample_lift(rng);
                *counts.entry(element_shape(&e.perm, model)).or_insert(0) += 1;
            }
            total = count;
            exact = false;
        }
    }
    Ok(ShapeDistribution {
        counts,
        total,
        exact,
    })
}

/// One row of a fit table.
#[derive(Debug, Clone, PartialEq)]
pub struct FitRow {
    pub shape: Vec<usize>,
    pub observed: u64,
    pub predicted: f64,
}

/// Observed-versus-predicted comparison for a batch of specializations.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub q: u64,
    pub accepted: u64,
    pub rejected: u64,
    pub tv: f64,
    pub threshold: f64,
    pub pass: bool,
    pub rows: Vec<FitRow>,
}

impl FitReport {
    /// Byte-stable JSON: sorted keys, shapes sorted descending then
    /// lexicographic, decimals with 12 significant digits.
    pub fn to_json(&self) -> Value {
        let shapes: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "shape": r.shape,
                    "observed": r.observed,
                    "predicted": format_sig12(r.predicted),
                })
            })
            .collect();
        let mut map = Map::new();
        map.insert("shapes".into(), Value::Array(shapes));
        map.insert("tv".into(), Value::String(format_sig12(self.tv)));
        map.insert("threshold".into(), Value::String(format_sig12(self.threshold)));
        map.insert("pass".into(), Value::Bool(self.pass));
        map.insert("q".into(), json!(self.q));
        map.insert("accepted".into(), json!(self.accepted));
        map.insert("rejected".into(), json!(self.rejected));
        Value::Object(map)
    }
}

/// Total-variation comparison of accepted sample shapes against the model's
/// exhaustive cycle-type distribution.
pub fn chebotarev_fit(
    model: &GaloisModel,
    q: u64,
    samples: &[SpecializationSample],
) -> Result<FitReport, ModelError> {
    let mut observed: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let mut rejected = 0u64;
    for s in samples {
        match &s.shape {
            Some(shape) if s.accepted() => {
                *observed
                    .entry(shape.degrees().to_vec())
                    .or_insert(0) += 1;
            }
            _ => rejected += 1,
        }
    }
    chebotarev_fit_counts(model, q, &observed, rejected)
}

/// The same fit from pre-tallied shape counts (the form parallel scans
/// produce).
pub fn chebotarev_fit_counts(
    model: &GaloisModel,
    q: u64,
    observed: &BTreeMap<Vec<usize>, u64>,
    rejected: u64,
) -> Result<FitReport, ModelError> {
    let accepted: u64 = observed.values().sum();
    if accepted == 0 {
        return Err(ModelError::NoAcceptedSamples);
    }
    let predicted = shape_distribution(model, ShapeMode::Exhaustive)?;

    let mut keys: Vec<Vec<usize>> = observed
        .keys()
        .chain(predicted.counts().keys())
        .cloned()
        .collect();
    keys.sort_unstable();
    keys.dedup();
    keys.reverse(); // descending, then lexicographic

    let mut tv = 0.0f64;
    let mut rows = Vec::with_capacity(keys.len());
    for shape in keys {
        let obs = observed.get(&shape).copied().unwrap_or(0);
        let p_emp = obs as f64 / accepted as f64;
        let p_pred = predicted.prob(&shape);
        tv += (p_emp - p_pred).abs();
        rows.push(FitRow {
            shape,
            observed: obs,
            predicted: p_pred,
        });
    }
    tv /= 2.0;
    let threshold = 4.0 / (q as f64).sqrt() + 4.0 / (accepted as f64).sqrt();
    Ok(FitReport {
        q,
        accepted,
        rejected,
        tv,
        threshold,
        pass: tv <= threshold,
        rows,
    })
}

/// Fixed decimal formatting with 12 significant digits; used by every
/// byte-stable serialization in the crate.
pub(crate) fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedmodel::{model_product, model_wreath, specialize};
    use crate::ffpoly::{field_new, parse_bipoly};

    #[test]
    fn product_s2_distribution() {
        let m = model_product(&[2]).unwrap();
        let d = shape_distribution(&m, ShapeMode::Exhaustive).unwrap();
        assert_eq!(d.prob_exact(&[1, 1]), (1, 2));
        assert_eq!(d.prob_exact(&[2]), (1, 2));
        assert_eq!(d.total(), 2);
    }

    #[test]
    fn single_point_distribution() {
        let m = model_product(&[1]).unwrap();
        let d = shape_distribution(&m, ShapeMode::Exhaustive).unwrap();
        assert_eq!(d.prob_exact(&[1]), (1, 1));
    }

    #[test]
    fn wreath_order_eight_distribution() {
        // Coset elements are 4-cycles or double transpositions, half each.
        let m = model_wreath(2, &[2], 3).unwrap();
        let d = shape_distribution(&m, ShapeMode::Exhaustive).unwrap();
        assert_eq!(d.prob_exact(&[4]), (1, 2));
        assert_eq!(d.prob_exact(&[2, 2]), (1, 2));
    }

    #[test]
    fn exhaustive_probabilities_sum_to_one() {
        for model in [
            model_product(&[2, 3]).unwrap(),
            model_wreath(2, &[2], 3).unwrap(),
            model_wreath(3, &[1], 5).unwrap(),
        ] {
            let d = shape_distribution(&model, ShapeMode::Exhaustive).unwrap();
            let sum: u64 = d.counts().values().sum();
            assert_eq!(sum, d.total());
        }
    }

    #[test]
    fn transitive_mass_equals_predicted_density() {
        use crate::permgrp::FractionMode;
        for model in [
            model_product(&[2]).unwrap(),
            model_product(&[2, 3]).unwrap(),
            model_wreath(2, &[2], 3).unwrap(),
            model_wreath(3, &[2], 3).unwrap(),
        ] {
            let d = shape_distribution(&model, ShapeMode::Exhaustive).unwrap();
            let full: Vec<usize> = {
                let mut v: Vec<usize> =
                    model.blocks().blocks().iter().map(|b| b.len()).collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            };
            let mass = d.prob_exact(&full);
            let dens = crate::embedmodel::predicted_density(&model, FractionMode::Exhaustive)
                .unwrap();
            assert_eq!(mass, dens.reduced());
        }
    }

    #[test]
    fn fit_on_exact_samples_is_tight() {
        // Feed the model's own distribution back in as observations.
        let m = model_product(&[2]).unwrap();
        let f9 = field_new(3, 2).unwrap();
        let f = parse_bipoly(&f9, "X^2+2*T").unwrap();
        let samples: Vec<_> = (0..9)
            .map(|i| specialize(&f, &f9.elem_at(i)).unwrap())
            .collect();
        let fit = chebotarev_fit(&m, 9, &samples).unwrap();
        // 8 accepted: four squares and four non-squares; X^2 at T=0 rejected.
        assert_eq!(fit.accepted, 8);
        assert_eq!(fit.rejected, 1);
        assert!(fit.tv < 1e-12, "tv = {}", fit.tv);
        assert!(fit.pass);
    }

    #[test]
    fn all_rejected_is_an_error() {
        // X^2 - T over F_2: every specialization is inseparable.
        let m = model_product(&[2]).unwrap();
        let f2 = field_new(2, 1).unwrap();
        let f = parse_bipoly(&f2, "X^2+T").unwrap();
        let samples: Vec<_> = (0..2)
            .map(|i| specialize(&f, &f2.elem_at(i)).unwrap())
            .collect();
        assert_eq!(
            chebotarev_fit(&m, 2, &samples).unwrap_err(),
            ModelError::NoAcceptedSamples
        );
    }

    #[test]
    fn sampled_distribution_tracks_exact() {
        let m = model_wreath(2, &[2], 3).unwrap();
        let mut rng = Rng::new(3);
        let d = shape_distribution(
            &m,
            ShapeMode::Sample {
                count: 4000,
                rng: &mut rng,
            },
        )
        .unwrap();
        assert!((d.prob(&[4]) - 0.5).abs() < 0.05);
        assert!(!d.is_exact());
    }

    #[test]
    fn json_shape_ordering_and_decimals() {
        let m = model_product(&[2]).unwrap();
        let f5 = field_new(5, 1).unwrap();
        let f = parse_bipoly(&f5, "X^2+4*T").unwrap();
        let samples: Vec<_> = (0..5)
            .map(|i| specialize(&f, &f5.elem_at(i)).unwrap())
            .collect();
        let fit = chebotarev_fit(&m, 5, &samples).unwrap();
        let v = fit.to_json();
        let shapes = v["shapes"].as_array().unwrap();
        assert_eq!(shapes[0]["shape"], serde_json::json!([2]));
        assert_eq!(shapes[1]["shape"], serde_json::json!([1, 1]));
        let p: String = shapes[0]["predicted"].as_str().unwrap().into();
        assert_eq!(p, "0.500000000000");
    }

    #[test]
    fn sig12_formatting() {
        assert_eq!(format_sig12(0.0), "0.000000000000");
        assert_eq!(format_sig12(0.5), "0.500000000000");
        assert_eq!(format_sig12(1.0), "1.00000000000");
        assert_eq!(format_sig12(12.25), "12.2500000000");
        assert_eq!(format_sig12(1.0 / 3.0), "0.333333333333");
    }
}
