//! Lines through plane curves
//!
//! This example demonstrates:
//! - The projective smoothness check with resultant elimination
//! - Singular witnesses, including ones in extension fields
//! - Scanning lines X = a*T + b for simultaneous irreducibility
//!
//! Run with: cargo run --example line_specializations

use irrspec::explab::{run_experiment, smooth_check, ExperimentConfig, Kind, SmoothVerdict};
use irrspec::ffpoly::{parse_bipoly, parse_field_spec};

fn main() {
    println!("=== Lines through plane curves ===\n");

    smoothness();
    scans();
}

fn smoothness() {
    println!("--- Smoothness of projective closures ---\n");

    let cases = [
        ("5", "X^2+T^2+1", "smooth conic"),
        ("7", "X^2+6*T^3", "cuspidal cubic"),
        ("7", "X^2+6*T^3+6*T^2", "nodal cubic"),
        (
            "7",
            "X^4+2*T^2*X^2+T^4+3*X^2+3*T^2+2",
            "two conics meeting only at conjugate points",
        ),
    ];
    for (field, text, label) in cases {
        let ctx = parse_field_spec(field).unwrap();
        let f = parse_bipoly(&ctx, text).unwrap();
        match smooth_check(&f).unwrap() {
            SmoothVerdict::Smooth => println!("{label}: smooth"),
            SmoothVerdict::Singular(w) => println!(
                "{label}: singular at ({} : {} : {}) over an extension of degree {}",
                w.coords[0], w.coords[1], w.coords[2], w.ext_degree
            ),
            SmoothVerdict::Inconclusive { reason } => {
                println!("{label}: inconclusive ({reason})")
            }
        }
    }
    println!();
}

fn scans() {
    println!("--- Line scans over a q-ladder ---\n");
    println!("For the conic X^2 + T^2 + 1, half of all substituted quadratics");
    println!("should be irreducible as q grows.\n");

    for field in ["5", "3^2", "13", "17"] {
        let mut cfg = ExperimentConfig::new(Kind::Linespec, field);
        cfg.polys = vec!["X^2+T^2+1".to_string()];
        cfg.a_min = Some(5);
        let report = run_experiment(&cfg).unwrap();
        println!(
            "q = {:>2}: hits {:>3} of {:>3}, density {:.4} vs predicted {:.1} (pass {})",
            report.scanned.isqrt(),
            report.hits,
            report.scanned,
            report.density,
            report.predicted,
            report.pass
        );
    }
}
