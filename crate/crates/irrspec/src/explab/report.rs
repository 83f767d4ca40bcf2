//! Reports and their byte-stable serializations.
//!
//! The JSON and CSV forms are deterministic functions of the experiment's
//! outcome: keys sorted, decimals printed with 12 significant digits, LF line
//! endings. Wall-clock time and worker count never enter the bytes, so a
//! rerun with the same config and seed reproduces a report file exactly; the
//! measured time is only shown on the console.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Map, Value};

use super::{ExpError, ExperimentConfig, OutFormat};
use crate::embedmodel::{format_sig12, FitReport, FitRow};

/// Outcome of one experiment run.
#[derive(Debug, Clone)]
pub struct Report {
    /// Canonical echo of the effective experiment parameters.
    pub config_echo: BTreeMap<String, Value>,
    pub scanned: u64,
    pub accepted: u64,
    pub hits: u64,
    pub density: f64,
    pub predicted: f64,
    pub error_scale: f64,
    pub pass: bool,
    /// Observed-versus-predicted shape table, for the kinds that factor.
    pub shapes: Option<Vec<FitRow>>,
    /// Full fit statistics, when a Chebotarev fit ran.
    pub fit: Option<FitReport>,
    /// Measured wall-clock seconds. Console only; serialized as zero.
    pub elapsed_s: f64,
}

impl Report {
    pub(crate) fn echo_config(cfg: &ExperimentConfig) -> BTreeMap<String, Value> {
        let mut echo = BTreeMap::new();
        echo.insert("kind".into(), json!(cfg.kind.as_str()));
        echo.insert("field".into(), json!(cfg.field));
        if !cfg.polys.is_empty() {
            echo.insert("polys".into(), json!(cfg.polys));
        }
        if let Some(n) = cfg.n {
            echo.insert("n".into(), json!(n));
        }
        echo.insert("mode".into(), json!(cfg.mode.as_string()));
        echo.insert("seed".into(), json!(cfg.seed));
        echo.insert("format".into(), json!(cfg.format.as_str()));
        if let Some(m) = &cfg.matrix {
            echo.insert("matrix".into(), json!(m));
        }
        if let Some(a) = cfg.a_min {
            echo.insert("A".into(), json!(a));
        }
        if let Some(m) = cfg.m_deg {
            echo.insert("m".into(), json!(m));
        }
        echo
    }

    /// Byte-stable JSON value: sorted keys, decimal strings, zeroed timing.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("config".into(), Value::Object(Map::from_iter(
            self.config_echo.iter().map(|(k, v)| (k.clone(), v.clone())),
        )));
        map.insert("scanned".into(), json!(self.scanned));
        map.insert("accepted".into(), json!(self.accepted));
        map.insert("hits".into(), json!(self.hits));
        map.insert("density".into(), Value::String(format_sig12(self.density)));
        map.insert(
            "predicted".into(),
            Value::String(format_sig12(self.predicted)),
        );
        map.insert(
            "error_scale".into(),
            Value::String(format_sig12(self.error_scale)),
        );
        map.insert("pass".into(), Value::Bool(self.pass));
        if let Some(rows) = &self.shapes {
            let shapes: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "shape": r.shape,
                        "observed": r.observed,
                        "predicted": format_sig12(r.predicted),
                    })
                })
                .collect();
            map.insert("shapes".into(), Value::Array(shapes));
        }
        if let Some(fit) = &self.fit {
            map.insert("fit".into(), fit.to_json());
        }
        map.insert("elapsed_s".into(), Value::String(format_sig12(0.0)));
        Value::Object(map)
    }

    pub fn json_bytes(&self) -> Vec<u8> {
        let mut bytes = serde_json::to_vec_pretty(&self.to_json()).expect("serializable");
        bytes.push(b'\n');
        bytes
    }

    pub fn csv_bytes(&self) -> Vec<u8> {
        let mut out = String::new();
        out.push_str("metric,value\n");
        for (key, value) in &self.config_echo {
            out.push_str(&format!("{key},{}\n", csv_cell(&json_scalar(value))));
        }
        out.push_str(&format!("scanned,{}\n", self.scanned));
        out.push_str(&format!("accepted,{}\n", self.accepted));
        out.push_str(&format!("hits,{}\n", self.hits));
        out.push_str(&format!("density,{}\n", format_sig12(self.density)));
        out.push_str(&format!("predicted,{}\n", format_sig12(self.predicted)));
        out.push_str(&format!("error_scale,{}\n", format_sig12(self.error_scale)));
        out.push_str(&format!("pass,{}\n", self.pass));
        if let Some(fit) = &self.fit {
            out.push_str(&format!("tv,{}\n", format_sig12(fit.tv)));
            out.push_str(&format!("threshold,{}\n", format_sig12(fit.threshold)));
        }
        out.push_str(&format!("elapsed_s,{}\n", format_sig12(0.0)));
        if let Some(rows) = &self.shapes {
            out.push('\n');
            out.push_str("shape,observed,predicted\n");
            for r in rows {
                let shape: Vec<String> = r.shape.iter().map(|d| d.to_string()).collect();
                out.push_str(&format!(
                    "{},{},{}\n",
                    shape.join("+"),
                    r.observed,
                    format_sig12(r.predicted)
                ));
            }
        }
        out.into_bytes()
    }

    pub fn bytes(&self, format: OutFormat) -> Vec<u8> {
        match format {
            OutFormat::Json => self.json_bytes(),
            OutFormat::Csv => self.csv_bytes(),
        }
    }

    /// One-line console summary.
    pub fn summary(&self) -> String {
        format!(
            "scanned {} accepted {} hits {} density {:.6} predicted {:.6} pass {} ({:.3}s)",
            self.scanned,
            self.accepted,
            self.hits,
            self.density,
            self.predicted,
            self.pass,
            self.elapsed_s
        )
    }
}

fn json_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(json_scalar)
            .collect::<Vec<_>>()
            .join("|"),
        other => other.to_string(),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Write a report to a file, byte-stably.
pub fn emit(report: &Report, format: OutFormat, path: &Path) -> Result<(), ExpError> {
    let bytes = report.bytes(format);
    let mut file = std::fs::File::create(path)?;
    file.write_all(&bytes)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explab::Kind;

    fn sample_report() -> Report {
        let cfg = ExperimentConfig::new(Kind::Schinzel, "3");
        Report {
            config_echo: Report::echo_config(&cfg),
            scanned: 9,
            accepted: 9,
            hits: 3,
            density: 1.0 / 3.0,
            predicted: 1.0 / 3.0,
            error_scale: 3.0f64.powf(1.5),
            pass: true,
            shapes: Some(vec![
                FitRow {
                    shape: vec![2],
                    observed: 5,
                    predicted: 0.5,
                },
                FitRow {
                    shape: vec![1, 1],
                    observed: 4,
                    predicted: 0.5,
                },
            ]),
            fit: None,
            elapsed_s: 1.25,
        }
    }

    #[test]
    fn identical_reports_are_byte_identical() {
        let a = sample_report();
        let mut b = sample_report();
        b.elapsed_s = 99.0; // timing must not leak into bytes
        assert_eq!(a.json_bytes(), b.json_bytes());
        assert_eq!(a.csv_bytes(), b.csv_bytes());
    }

    #[test]
    fn json_keys_are_sorted() {
        let bytes = sample_report().json_bytes();
        let text = String::from_utf8(bytes).unwrap();
        let config_pos = text.find("\"config\"").unwrap();
        let accepted_pos = text.find("\"accepted\"").unwrap();
        let scanned_pos = text.find("\"scanned\"").unwrap();
        assert!(accepted_pos < config_pos);
        assert!(config_pos < scanned_pos);
        assert!(text.ends_with("}\n"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn csv_shape_table_header() {
        let bytes = sample_report().csv_bytes();
        let text = String::from_utf8(bytes).unwrap();
        assert!(text.contains("shape,observed,predicted\n"));
        assert!(text.contains("1+1,4,0.500000000000\n"));
        assert!(text.contains("density,0.333333333333\n"));
    }

    #[test]
    fn emit_writes_the_same_bytes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.json");
        let r = sample_report();
        emit(&r, OutFormat::Json, &path).unwrap();
        let on_disk = std::fs::read(&path).unwrap();
        assert_eq!(on_disk, r.json_bytes());
    }

    #[test]
    fn emit_to_unwritable_path_errors() {
        let r = sample_report();
        let path = Path::new("/definitely/not/a/real/dir/report.json");
        assert!(matches!(
            emit(&r, OutFormat::Json, path),
            Err(ExpError::Io(_))
        ));
    }
}
