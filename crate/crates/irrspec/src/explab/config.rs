//! Experiment configuration: flags, defaults, and the key=value file format.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use super::ExpError;

/// Hard ceiling on exhaustive scan spaces.
pub const DEFAULT_SCAN_BOUND: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Schinzel,
    Dirichlet,
    Linespec,
    Traceform,
    Chebotarev,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Schinzel => "schinzel",
            Kind::Dirichlet => "dirichlet",
            Kind::Linespec => "linespec",
            Kind::Traceform => "traceform",
            Kind::Chebotarev => "chebotarev",
        }
    }
}

impl FromStr for Kind {
    type Err = ExpError;
    fn from_str(s: &str) -> Result<Kind, ExpError> {
        match s {
            "schinzel" => Ok(Kind::Schinzel),
            "dirichlet" => Ok(Kind::Dirichlet),
            "linespec" => Ok(Kind::Linespec),
            "traceform" => Ok(Kind::Traceform),
            "chebotarev" => Ok(Kind::Chebotarev),
            other => Err(ExpError::Config(format!("unknown experiment kind `{other}`"))),
        }
    }
}

/// Scan mode: visit the whole space or draw a fixed number of points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample(u64),
}

impl Mode {
    pub fn as_string(&self) -> String {
        match self {
            Mode::Exhaustive => "exhaustive".to_string(),
            Mode::Sample(count) => format!("sample:{count}"),
        }
    }
}

impl FromStr for Mode {
    type Err = ExpError;
    fn from_str(s: &str) -> Result<Mode, ExpError> {
        if s == "exhaustive" {
            return Ok(Mode::Exhaustive);
        }
        if let Some(count) = s.strip_prefix("sample:") {
            let count: u64 = count
                .parse()
                .map_err(|_| ExpError::Config(format!("bad sample count in `{s}`")))?;
            if count == 0 {
                return Err(ExpError::Config("sample count must be positive".into()));
            }
            return Ok(Mode::Sample(count));
        }
        Err(ExpError::Config(format!(
            "mode must be `exhaustive` or `sample:COUNT`, got `{s}`"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

impl OutFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutFormat::Csv => "csv",
            OutFormat::Json => "json",
        }
    }
}

impl FromStr for OutFormat {
    type Err = ExpError;
    fn from_str(s: &str) -> Result<OutFormat, ExpError> {
        match s {
            "csv" => Ok(OutFormat::Csv),
            "json" => Ok(OutFormat::Json),
            other => Err(ExpError::Config(format!("unknown format `{other}`"))),
        }
    }
}

/// Everything a run needs. `workers` and `out` steer execution and emission
/// but are not part of the experiment's identity: reports do not echo them.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub kind: Kind,
    pub field: String,
    pub polys: Vec<String>,
    pub n: Option<usize>,
    pub mode: Mode,
    pub seed: u64,
    pub workers: usize,
    pub format: OutFormat,
    pub out: Option<PathBuf>,
    pub matrix: Option<String>,
    pub a_min: Option<u64>,
    pub m_deg: Option<usize>,
    pub smooth_override: bool,
    pub scan_bound: u64,
}

impl ExperimentConfig {
    pub fn new(kind: Kind, field: &str) -> ExperimentConfig {
        ExperimentConfig {
            kind,
            field: field.to_string(),
            polys: Vec::new(),
            n: None,
            mode: Mode::Exhaustive,
            seed: 0,
            workers: 1,
            format: OutFormat::Json,
            out: None,
            matrix: None,
            a_min: None,
            m_deg: None,
            smooth_override: false,
            scan_bound: DEFAULT_SCAN_BOUND,
        }
    }

    /// Apply file-sourced keys for every field the command line left unset.
    /// `cli_set` names the keys the command line provided explicitly.
    pub fn apply_file(
        &mut self,
        file: &BTreeMap<String, Vec<String>>,
        cli_set: &[&str],
    ) -> Result<(), ExpError> {
        let fresh = |key: &str| !cli_set.contains(&key);
        for (key, values) in file {
            let value = values.last().expect("parser never stores empty lists");
            match key.as_str() {
                "kind" if fresh("kind") => self.kind = value.parse()?,
                "field" if fresh("field") => self.field = value.clone(),
                "poly" if fresh("poly") => self.polys = values.clone(),
                "n" if fresh("n") => self.n = Some(parse_num(key, value)? as usize),
                "mode" if fresh("mode") => self.mode = value.parse()?,
                "seed" if fresh("seed") => self.seed = parse_num(key, value)?,
                "workers" if fresh("workers") => {
                    self.workers = parse_num(key, value)? as usize
                }
                "format" if fresh("format") => self.format = value.parse()?,
                "out" if fresh("out") => self.out = Some(PathBuf::from(value)),
                "matrix" if fresh("matrix") => self.matrix = Some(value.clone()),
                "A" if fresh("A") => self.a_min = Some(parse_num(key, value)?),
                "m" if fresh("m") => self.m_deg = Some(parse_num(key, value)? as usize),
                "smooth_override" => {
                    self.smooth_override = value == "true" || value == "1";
                }
                "scan_bound" => self.scan_bound = parse_num(key, value)?,
                _ if !fresh(key) => {} // command line wins
                other => {
                    return Err(ExpError::Config(format!("unknown config key `{other}`")))
                }
            }
        }
        Ok(())
    }
}

fn parse_num(key: &str, value: &str) -> Result<u64, ExpError> {
    value
        .parse()
        .map_err(|_| ExpError::Config(format!("bad numeric value for `{key}`: `{value}`")))
}

/// Parse the key=value config format: one pair per line, `#` comments,
/// repeated keys accumulate (used by `poly`).
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, Vec<String>>, ExpError> {
    let mut out: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            ExpError::Config(format!("line {}: expected key=value", lineno + 1))
        })?;
        out.entry(key.trim().to_string())
            .or_default()
            .push(value.trim().to_string());
    }
    Ok(out)
}
