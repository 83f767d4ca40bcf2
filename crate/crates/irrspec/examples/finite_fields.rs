//! Finite fields
//!
//! This example demonstrates:
//! - Building prime and extension field contexts with canonical moduli
//! - Element arithmetic, inverses, and the Frobenius map
//! - The field-spec and element text formats
//! - Counting monic irreducible polynomials with the necklace formula
//!
//! Run with: cargo run --example finite_fields

use irrspec::ffpoly::{count_irreducible, field_new, parse_field_spec};

fn main() {
    println!("=== Finite Fields ===\n");

    contexts();
    arithmetic();
    counting();
}

fn contexts() {
    println!("--- Contexts and canonical moduli ---\n");

    let f7 = field_new(7, 1).unwrap();
    println!("field_new(7, 1)  -> {} (spec `{}`)", f7, f7.spec_string());

    // The modulus for an extension is the least monic irreducible of its
    // degree, so every build of F_9 agrees: X^2 + 1 over F_3.
    let f9 = field_new(3, 2).unwrap();
    println!(
        "field_new(3, 2)  -> {} with modulus coefficients {:?} (X^2 + 1)",
        f9,
        f9.modulus()
    );

    let f16 = parse_field_spec("2^4").unwrap();
    println!(
        "parse `2^4`      -> {} with modulus coefficients {:?} (X^4 + X + 1)",
        f16,
        f16.modulus()
    );

    println!(
        "field_new(4, 1)  -> {:?}\n",
        field_new(4, 1).unwrap_err()
    );
}

fn arithmetic() {
    println!("--- Arithmetic in F_9 = F_3[i], i^2 = -1 ---\n");

    let f9 = field_new(3, 2).unwrap();
    let i = f9.from_coords(&[0, 1]).unwrap();
    let a = f9.from_coords(&[1, 1]).unwrap(); // 1 + i

    println!("i         = {}", f9.fmt_elem(&i));
    println!("i^2       = {}  (= -1)", f9.fmt_elem(&f9.mul(&i, &i)));
    println!("(1+i)^2   = {}  (= 2i)", f9.fmt_elem(&f9.mul(&a, &a)));
    let inv = f9.inv(&a).unwrap();
    println!("(1+i)^-1  = {}", f9.fmt_elem(&inv));
    assert_eq!(f9.mul(&a, &inv), f9.one());

    // Frobenius x -> x^3 fixes exactly the prime field.
    let frob = f9.pow(&a, 3);
    println!("(1+i)^3   = {}  (the conjugate 1 - i)\n", f9.fmt_elem(&frob));
}

fn counting() {
    println!("--- Monic irreducible counts ---\n");

    for spec in ["2", "3", "5", "3^2"] {
        let ctx = parse_field_spec(spec).unwrap();
        let counts: Vec<u64> = (1..=4).map(|n| count_irreducible(&ctx, n)).collect();
        println!("over F_{:<3} degrees 1..4 -> {:?}", ctx.q(), counts);
    }
    println!();
    println!("The necklace formula (1/n) sum mu(d) q^(n/d) is exact; the");
    println!("acceptance suite cross-checks it against exhaustive Rabin scans.");
}
