//! Characteristic polynomials of scaled symmetric matrices
//!
//! This example demonstrates:
//! - Division-free characteristic polynomials (Berkowitz)
//! - Scanning symmetric matrices S and factoring charpoly(S*B)
//! - Comparing the irreducible fraction against the 1/n prediction
//!
//! Run with: cargo run --example trace_forms

use irrspec::explab::{run_experiment, ExperimentConfig, Kind, Mode};
use irrspec::ffpoly::{field_new, parse_matrix, poly_to_text, Matrix};

fn main() {
    println!("=== Trace forms ===\n");

    charpolys();
    exhaustive();
    sampled();
}

fn charpolys() {
    println!("--- Characteristic polynomials ---\n");
    let f3 = field_new(3, 1).unwrap();
    let m = parse_matrix(&f3, "1,2;2,1").unwrap();
    println!(
        "charpoly of [[1,2],[2,1]] over F_3 = {}",
        poly_to_text(&m.charpoly(), "X")
    );
    println!(
        "det = {} (from the constant coefficient)\n",
        f3.fmt_elem(&m.det())
    );
    // companion matrices invert the construction
    let f = irrspec::ffpoly::parse_poly(&f3, "X^3+2*X+1").unwrap();
    let c = Matrix::companion(&f);
    assert_eq!(c.charpoly(), f);
    println!("charpoly(companion(f)) = f for monic f\n");
}

fn exhaustive() {
    println!("--- All 27 symmetric 2x2 matrices over F_3, B = I ---\n");
    let mut cfg = ExperimentConfig::new(Kind::Traceform, "3");
    cfg.matrix = Some("1,0;0,1".to_string());
    let report = run_experiment(&cfg).unwrap();
    println!(
        "scanned {} accepted {} hits {}",
        report.scanned, report.accepted, report.hits
    );
    println!(
        "density {:.4} vs predicted {:.4} (fraction of 2-cycles in S_2)",
        report.density, report.predicted
    );
    if let Some(rows) = &report.shapes {
        println!("shape table:");
        for r in rows {
            println!("  {:?}: observed {}, predicted {:.3}", r.shape, r.observed, r.predicted);
        }
    }
    println!();
}

fn sampled() {
    println!("--- Sampled runs against a nontrivial form ---\n");
    let mut cfg = ExperimentConfig::new(Kind::Traceform, "5");
    cfg.matrix = Some("2,1;1,3".to_string());
    cfg.mode = Mode::Sample(5000);
    cfg.seed = 8;
    let report = run_experiment(&cfg).unwrap();
    println!(
        "B = [[2,1],[1,3]] over F_5: sampled density {:.4} vs predicted {:.4} (pass {})",
        report.density, report.predicted, report.pass
    );
}
