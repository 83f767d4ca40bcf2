//! Bivariate polynomials, specialization, and resultants
//!
//! This example demonstrates:
//! - The polynomial text format for one and two variables
//! - Specializing T and reading the acceptance flags
//! - Substituting lines X = a*T + b
//! - Subresultant resultants and the common-factor test
//!
//! Run with: cargo run --example specialize_and_resultants

use irrspec::ffpoly::{
    field_new, parse_bipoly, poly_to_text, resultant, Var,
};

fn main() {
    println!("=== Bivariate polynomials ===\n");

    let f5 = field_new(5, 1).unwrap();
    let f = parse_bipoly(&f5, "X^2+4*T").unwrap(); // X^2 - T
    println!("f = {f} over F_5 (deg_T {:?}, deg_X {:?})\n", f.deg_t(), f.deg_x());

    println!("--- Specialization flags ---\n");
    for i in 0..5 {
        let a = f5.elem_at(i);
        let ev = f.eval_partial(&a);
        println!(
            "T = {}: {}  degree_preserved = {}, separable = {}",
            f5.fmt_elem(&a),
            poly_to_text(&ev.poly, "X"),
            ev.degree_preserved,
            ev.separable
        );
    }

    println!("\n--- Lines ---\n");
    let conic = parse_bipoly(&f5, "X^2+T^2+1").unwrap();
    for (a, b) in [(1u64, 3u64), (2, 0)] {
        let g = conic.substitute_x_linear(&f5.from_u64(a), &f5.from_u64(b));
        println!(
            "X = {a}*T + {b} in {conic}: {}",
            poly_to_text(&g, "T")
        );
    }

    println!("\n--- Resultants ---\n");
    let g = parse_bipoly(&f5, "X^2+T").unwrap();
    let r = resultant(&f, &g, Var::X).unwrap();
    println!(
        "Res_X(X^2+4*T, X^2+T) = {}  (vanishes at T = 0: shared root)",
        poly_to_text(&r, "T")
    );

    let h = parse_bipoly(&f5, "X+T").unwrap();
    let r = resultant(&f, &h, Var::X).unwrap();
    println!(
        "Res_X(X^2+4*T, X+T)   = {}  (zero exactly at intersections)",
        poly_to_text(&r, "T")
    );

    let r = resultant(&f, &g, Var::T).unwrap();
    println!(
        "Res_T(X^2+4*T, X^2+T) = {}",
        poly_to_text(&r, "X")
    );
}
