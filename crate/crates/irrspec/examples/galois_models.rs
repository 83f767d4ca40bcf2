//! Galois models and Frobenius lifts
//!
//! This example demonstrates:
//! - The two built-in model families: products of symmetric groups, and
//!   wreath products with a cyclic top group
//! - The embedding problem attached to a model and its weak solutions
//!   (the Frobenius lifts: elements of label 1)
//! - Predicted densities of simultaneously irreducible specializations
//! - Predicted factorization-shape distributions
//!
//! Run with: cargo run --example galois_models

use irrspec::embedmodel::{
    model_product, model_wreath, predicted_density, shape_distribution, ShapeMode,
};
use irrspec::permgrp::{FractionMode, DEFAULT_CAP};

fn main() {
    println!("=== Galois models ===\n");

    product_family();
    wreath_family();
    distributions();
}

fn product_family() {
    println!("--- model_product ---\n");
    println!("A family of curves with full symmetric monodromy and no");
    println!("constant-field extension: H = S_d1 x ... x S_ds, trivial labels.\n");

    for degrees in [vec![2usize], vec![3], vec![2, 3]] {
        let model = model_product(&degrees).unwrap();
        let density = predicted_density(&model, FractionMode::Exhaustive).unwrap();
        println!(
            "degrees {:?}: |H| = {}, predicted density = {}",
            degrees,
            model.labeled().generate(DEFAULT_CAP).unwrap().len(),
            density
        );
    }
    println!();
}

fn wreath_family() {
    println!("--- model_wreath ---\n");
    println!("Substituting a degree-n monic into a squarefree base polynomial");
    println!("whose irreducible factors have degrees d_i gives the wreath");
    println!("model S_n wr Z/m on {{1..n}} x Omega, m = lcm(d_i).\n");

    let model = model_wreath(2, &[2], 3).unwrap();
    println!(
        "n = 2 over an irreducible quadratic: |H| = {}, m = {}, domain {}",
        model.labeled().generate(DEFAULT_CAP).unwrap().len(),
        model.m(),
        model.domain_size()
    );

    let ep = model.embedding_problem();
    let lifts = ep.frobenius_lifts().unwrap();
    println!("Frobenius lifts (label 1):");
    for lift in &lifts {
        println!("  {lift}");
    }
    let density = predicted_density(&model, FractionMode::Exhaustive).unwrap();
    println!("predicted density of irreducible substitutions: {density}\n");

    println!(
        "characteristic-2 guard: model_wreath(2, (2), 2) -> {:?}\n",
        model_wreath(2, &[2], 2).unwrap_err()
    );
}

fn distributions() {
    println!("--- Shape distributions ---\n");
    println!("Each Frobenius lift predicts a factorization shape: its");
    println!("block-wise cycle type. Tallying the coset gives the predicted");
    println!("distribution of observed shapes.\n");

    for (label, model) in [
        ("product (2)", model_product(&[2]).unwrap()),
        ("product (2,3)", model_product(&[2, 3]).unwrap()),
        ("wreath n=2 over (2)", model_wreath(2, &[2], 3).unwrap()),
    ] {
        let dist = shape_distribution(&model, ShapeMode::Exhaustive).unwrap();
        println!("{label}:");
        for (shape, count) in dist.counts() {
            println!(
                "  shape {:?}: {}/{}",
                shape,
                count,
                dist.total()
            );
        }
    }
}
