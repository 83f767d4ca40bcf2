//! Substitution scans
//!
//! This example demonstrates:
//! - Counting monic substitutions g with f(g(T)) irreducible
//! - The wreath-model prediction and the q^(n - 1/2) error scale
//! - Exhaustive versus sampled scans with a fixed seed
//!
//! Run with: cargo run --example schinzel_scan

use irrspec::explab::{monic_from_tuple, run_experiment, ExperimentConfig, Kind, Mode};
use irrspec::ffpoly::{field_new, parse_poly, poly_to_text};

fn main() {
    println!("=== Substitution scans ===\n");

    tuples();
    linear_case();
    quadratic_case();
    sampled();
}

fn tuples() {
    println!("--- Coefficient tuples ---\n");
    let f3 = field_new(3, 1).unwrap();
    let tuple = vec![f3.from_u64(1), f3.from_u64(2)];
    let g = monic_from_tuple(&f3, &tuple).unwrap();
    println!("tuple (1, 2) over F_3 -> g = {}\n", poly_to_text(&g, "T"));
}

fn linear_case() {
    println!("--- Linear f: hits are exactly the irreducible monics ---\n");
    for (q, n) in [(3u64, 2usize), (5, 2), (5, 3)] {
        let mut cfg = ExperimentConfig::new(Kind::Schinzel, &q.to_string());
        cfg.polys = vec![format!("X+{}", q - 1)]; // X - 1
        cfg.n = Some(n);
        let report = run_experiment(&cfg).unwrap();
        println!(
            "q = {q}, n = {n}: hits {} of {} (density {:.4})",
            report.hits, report.scanned, report.density
        );
    }
    println!();
}

fn quadratic_case() {
    println!("--- f = X^2 + 1 (order-8 wreath model) ---\n");
    for q in [3u64, 7, 11, 19] {
        let mut cfg = ExperimentConfig::new(Kind::Schinzel, &q.to_string());
        cfg.polys = vec!["X^2+1".to_string()];
        cfg.n = Some(2);
        let report = run_experiment(&cfg).unwrap();
        println!(
            "q = {q:>2}: hits {:>4} of {:>4}, predicted density {:.3}, |hits - pred*q^2| = {:.1} (scale q^1.5 = {:.1})",
            report.hits,
            report.scanned,
            report.predicted,
            (report.hits as f64 - report.predicted * report.scanned as f64).abs(),
            (q as f64).powf(1.5),
        );
    }
    println!();
}

fn sampled() {
    println!("--- Sampled scans ---\n");
    let mut cfg = ExperimentConfig::new(Kind::Schinzel, "19");
    cfg.polys = vec!["X^2+1".to_string()];
    cfg.n = Some(2);
    cfg.mode = Mode::Sample(2000);
    cfg.seed = 42;
    cfg.workers = 4;
    let report = run_experiment(&cfg).unwrap();
    println!(
        "sample:2000 with seed 42 over F_19: density {:.4} vs predicted {:.4}",
        report.density, report.predicted
    );
    println!("reports are byte-identical for any worker count at a fixed seed.");
}
