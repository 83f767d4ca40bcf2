//! Cycle-type statistics
//!
//! This example demonstrates:
//! - Specializing a bivariate polynomial over every field point
//! - Acceptance flags (degree drop, inseparability)
//! - The total-variation fit between observed shapes and the model's
//!   predicted cycle-type distribution
//! - The byte-stable JSON form of a fit report
//!
//! Run with: cargo run --example chebotarev_fit

use irrspec::embedmodel::{chebotarev_fit, model_product, specialize};
use irrspec::ffpoly::{field_new, parse_bipoly};

fn main() {
    println!("=== Observed shapes vs predicted cycle types ===\n");

    let f9 = field_new(3, 2).unwrap();
    let f = parse_bipoly(&f9, "X^2+2*T").unwrap(); // X^2 - T

    println!("specializing X^2 - T over F_9:\n");
    let mut samples = Vec::new();
    for i in 0..9 {
        let a = f9.elem_at(i);
        let s = specialize(&f, &a).unwrap();
        match (&s.shape, &s.reject) {
            (Some(shape), _) => println!("  T = {:>5}: shape {shape}", f9.fmt_elem(&a)),
            (_, Some(reason)) => {
                println!("  T = {:>5}: rejected ({reason:?})", f9.fmt_elem(&a))
            }
            _ => unreachable!(),
        }
        samples.push(s);
    }

    let model = model_product(&[2]).unwrap();
    let fit = chebotarev_fit(&model, 9, &samples).unwrap();
    println!("\naccepted {} rejected {}", fit.accepted, fit.rejected);
    println!(
        "total variation {:.6} against threshold {:.6}: pass = {}",
        fit.tv, fit.threshold, fit.pass
    );
    println!("\nfit report as byte-stable JSON:\n");
    println!("{}", serde_json::to_string_pretty(&fit.to_json()).unwrap());
}
