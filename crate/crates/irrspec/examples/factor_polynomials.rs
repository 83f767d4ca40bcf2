//! Polynomial factorization
//!
//! This example demonstrates:
//! - The Rabin irreducibility test
//! - Complete factorization (squarefree / distinct-degree / equal-degree)
//! - Factorization shapes, the cycle types of the story
//! - Deterministic seeding of the equal-degree stage
//!
//! Run with: cargo run --example factor_polynomials

use irrspec::ffpoly::{field_new, parse_poly, poly_to_text, Rng};

fn main() {
    println!("=== Factoring over finite fields ===\n");

    rabin();
    factorizations();
    shapes();
    determinism();
}

fn rabin() {
    println!("--- Rabin irreducibility ---\n");
    let f3 = field_new(3, 1).unwrap();
    let f5 = field_new(5, 1).unwrap();
    for (ctx, text) in [(&f3, "X^2+1"), (&f5, "X^2+1"), (&f5, "X^3+X+1")] {
        let f = parse_poly(ctx, text).unwrap();
        println!(
            "{:>10} over F_{}: irreducible = {}",
            text,
            ctx.q(),
            f.is_irreducible().unwrap()
        );
    }
    println!();
}

fn factorizations() {
    println!("--- Complete factorization ---\n");
    let f3 = field_new(3, 1).unwrap();
    let f = parse_poly(&f3, "X^4+1").unwrap();
    let fac = f.factor().unwrap();
    println!("X^4+1 over F_3:");
    for (g, m) in &fac.factors {
        println!("  ({})^{}", poly_to_text(g, "X"), m);
    }
    assert_eq!(fac.product(f.ctx()), f);

    let f2 = field_new(2, 1).unwrap();
    let g = parse_poly(&f2, "X^6+X^5+X^3+X^2+X+1").unwrap();
    let fac = g.factor().unwrap();
    println!("X^6+X^5+X^3+X^2+X+1 over F_2:");
    for (h, m) in &fac.factors {
        println!("  ({})^{}", poly_to_text(h, "X"), m);
    }
    println!();
}

fn shapes() {
    println!("--- Shapes ---\n");
    println!("A shape is the multiset of irreducible-factor degrees; an");
    println!("asterisk marks repeated factors (ramification).\n");
    let f3 = field_new(3, 1).unwrap();
    for text in ["X^4+1", "X^2+1", "X^2", "X^3+2*X"] {
        let f = parse_poly(&f3, text).unwrap();
        println!("  shape({text}) over F_3 = {}", f.shape().unwrap());
    }
    println!();
}

fn determinism() {
    println!("--- Seeded equal-degree splitting ---\n");
    let f5 = field_new(5, 1).unwrap();
    let mut rng_a = Rng::new(12345);
    let mut rng_b = Rng::new(12345);
    let f = parse_poly(&f5, "X^4+X^2+2").unwrap();
    let a = f.factor_seeded(&mut rng_a).unwrap();
    let b = f.factor_seeded(&mut rng_b).unwrap();
    assert_eq!(a, b);
    println!("factor_seeded with equal seeds is bit-identical; the factor");
    println!("list is also canonically ordered, so plain factor() is stable");
    println!("across runs and platforms.");
}
