//! Irreducible members of polynomial progressions
//!
//! This example demonstrates:
//! - The progression a(X) + b(X)*K[X] and its pencil a + tau*b*c
//! - The seeded search for a multiplier c whose pencil looks generic
//! - Counting irreducible members against the 1/n prediction
//!
//! Run with: cargo run --example dirichlet_progression

use irrspec::explab::{run_experiment, ExperimentConfig, Kind};

fn main() {
    println!("=== Irreducible members of a + b*K[X] ===\n");

    println!("progression 1 + X*K[X] over F_7, multiplier degree 2:\n");
    let mut cfg = ExperimentConfig::new(Kind::Dirichlet, "7");
    cfg.polys = vec!["1".to_string(), "X".to_string()];
    cfg.m_deg = Some(2);
    cfg.seed = 0;
    let report = run_experiment(&cfg).unwrap();

    println!("multiplier found: c = {}", report.config_echo["poly_c"]);
    println!(
        "tau scan: {} members, {} accepted, {} irreducible",
        report.scanned, report.accepted, report.hits
    );
    println!(
        "density {:.4} vs predicted 1/n = {:.4} (pass {})",
        report.density, report.predicted, report.pass
    );
    if let Some(fit) = &report.fit {
        println!(
            "shape fit: tv {:.4} <= threshold {:.4}",
            fit.tv, fit.threshold
        );
    }

    println!("\nlarger fields tighten the fit:");
    for field in ["13", "31"] {
        let mut cfg = ExperimentConfig::new(Kind::Dirichlet, field);
        cfg.polys = vec!["1".to_string(), "X".to_string()];
        cfg.m_deg = Some(2);
        let report = run_experiment(&cfg).unwrap();
        let fit = report.fit.as_ref().unwrap();
        println!(
            "  q = {field}: irreducible {}/{} (tv {:.4})",
            report.hits, report.accepted, fit.tv
        );
    }
}
