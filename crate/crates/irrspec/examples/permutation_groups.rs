//! Permutation groups
//!
//! This example demonstrates:
//! - Permutations in cycle notation and the composition convention
//! - Generating groups by breadth-first closure
//! - Orbits and transitivity on blocks
//! - Labeled elements: permutations carrying values in Z/m
//!
//! Run with: cargo run --example permutation_groups

use irrspec::permgrp::{
    sym_product, wreath_cyclic, GroupGens, Perm, DEFAULT_CAP,
};

fn main() {
    println!("=== Permutation groups ===\n");

    composition();
    generation();
    orbits();
    labeled();
}

fn composition() {
    println!("--- Composition (right-to-left) ---\n");
    let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
    let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
    let c = a.compose(&b).unwrap();
    println!("({a}) after ({b}) = {c}");
    println!("inverse of {c} = {}\n", c.inverse());
}

fn generation() {
    println!("--- Breadth-first closure ---\n");
    let s4 = GroupGens::new(
        4,
        vec![
            Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ],
    )
    .unwrap();
    println!("|<(0 1), (0 1 2 3)>| = {}", s4.order(DEFAULT_CAP).unwrap());

    let (product, blocks) = sym_product(&[2, 3]).unwrap();
    println!(
        "S_2 x S_3 on blocks {:?}: order {}",
        blocks.blocks(),
        product.order(DEFAULT_CAP).unwrap()
    );
    println!();
}

fn orbits() {
    println!("--- Orbits and transitivity ---\n");
    let g = GroupGens::new(4, vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap()]).unwrap();
    println!("<(0 1)(2 3)>: orbit of 0 = {:?}", g.orbit(0).unwrap());
    println!(
        "transitive on {{0,1}}? {}",
        g.is_transitive_on(&[0, 1]).unwrap()
    );
    println!(
        "transitive on {{0,1,2,3}}? {}",
        g.is_transitive_on(&[0, 1, 2, 3]).unwrap()
    );
    println!();
}

fn labeled() {
    println!("--- Labeled groups (the wreath family) ---\n");
    // S_2 acting on two fibers, twisted by a label-1 fiber swap: order 8.
    let (h, blocks) = wreath_cyclic(2, &[2], 2).unwrap();
    let elems = h.generate(DEFAULT_CAP).unwrap();
    println!(
        "wreath_cyclic(2, (2), 2): order {}, blocks {:?}",
        elems.len(),
        blocks.blocks()
    );
    println!("elements with their labels:");
    for e in elems {
        println!("  {e}");
    }
    let kernel = h.kernel(DEFAULT_CAP).unwrap();
    println!(
        "label-0 kernel has order {} (= S_2 x S_2)",
        kernel.order(DEFAULT_CAP).unwrap()
    );
}
