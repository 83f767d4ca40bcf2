//! Finite-field laboratory for simultaneously irreducible specializations of
//! polynomial families.
//!
//! The crate has four layers:
//!
//! - [`ffpoly`]: fields `F_{p^k}`, dense polynomial arithmetic, Rabin
//!   irreducibility, complete factorization, resultants, and characteristic
//!   polynomials.
//! - [`permgrp`]: permutations on labeled root domains, generated groups,
//!   products of symmetric groups, wreath products with a cyclic top, and the
//!   executable transitivity criterion for coset-generated subgroups.
//! - [`embedmodel`]: Galois models of the two group families, Frobenius lifts
//!   as labeled coset elements, predicted irreducibility densities, and
//!   goodness-of-fit between predicted cycle types and observed factorization
//!   shapes.
//! - [`explab`]: the batch experiment harness behind the `irrspec` binary,
//!   with seeded reproducible scans and byte-stable CSV/JSON reports.
//!
//! Start with the runnable programs in `examples/`; each one walks a single
//! capability end to end.

pub mod explab;
pub mod ffpoly;
pub mod embedmodel;
pub mod permgrp;
