//! Batch experiment harness.
//!
//! Five experiment kinds, all driven by one [`ExperimentConfig`]:
//!
//! - `schinzel`: scan tuples `(a_1, ..., a_n)` and count those making every
//!   `f_i(g(T))` irreducible for `g = T^n + a_1 T^(n-1) + ... + a_n`, against
//!   the wreath-model prediction.
//! - `dirichlet`: search for a multiplier `c` making the progression
//!   `a + tau*b*c` behave generically, then count irreducible members.
//! - `linespec`: scan lines `X = a*T + b` through a family of smooth plane
//!   curves and count simultaneous irreducibility, against the
//!   product-model prediction.
//! - `traceform`: scan symmetric matrices `S` and count irreducible
//!   characteristic polynomials of `S*B`.
//! - `chebotarev`: specialize `F(T, X)` over the field and fit the observed
//!   factorization shapes against the product model.
//!
//! Scans are sharded across a fixed worker pool; partial tallies merge by
//! addition, so the report is independent of the worker count, and sampled
//! scans draw from per-shard streams derived from the seed. Reports
//! serialize byte-stably.

use thiserror::Error;

mod chebotarev;
mod config;
mod dirichlet;
mod linespec;
mod report;
mod scan;
mod schinzel;
mod smooth;
mod traceform;

pub use config::{parse_config_file, ExperimentConfig, Kind, Mode, OutFormat};
pub use report::{emit, Report};
pub use schinzel::monic_from_tuple;
pub use smooth::{smooth_check, SingularWitness, SmoothVerdict};

use crate::ffpoly::FfError;
use crate::permgrp::GroupError;
use crate::embedmodel::ModelError;

#[derive(Debug, Error)]
pub enum ExpError {
    #[error(transparent)]
    Ff(#[from] FfError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("input polynomials are not coprime")]
    NotCoprime,
    #[error("no multiplier passed the fit within {attempts} attempts")]
    SearchExhausted { attempts: u32 },
    #[error("matrix B must be symmetric")]
    NotSymmetric,
    #[error("matrix B must be nondegenerate")]
    Degenerate,
    #[error("no input polynomials")]
    EmptyInput,
    #[error("smoothness check inconclusive for `{0}`; set smooth_override=true to scan anyway")]
    SmoothnessInconclusive(String),
    #[error("scan space of {space} points exceeds the exhaustive bound {bound}")]
    ScanSpaceTooLarge { space: u128, bound: u64 },
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Run the experiment a config describes.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Report, ExpError> {
    let started = std::time::Instant::now();
    let mut report = match cfg.kind {
        Kind::Schinzel => schinzel::run(cfg)?,
        Kind::Dirichlet => dirichlet::run(cfg)?,
        Kind::Linespec => linespec::run(cfg)?,
        Kind::Traceform => traceform::run(cfg)?,
        Kind::Chebotarev => chebotarev::run(cfg)?,
    };
    report.elapsed_s = started.elapsed().as_secs_f64();
    Ok(report)
}
