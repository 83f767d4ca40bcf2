//! The two group families every experiment models: direct products of
//! symmetric groups, and wreath products of `S_n` by a cyclic group acting on
//! fibered root domains.

use super::{BlockPartition, GroupError, GroupGens, LabeledElem, LabeledGens, Perm};
use crate::ffpoly::lcm_u64;

/// Generators of `S_{d_1} x ... x S_{d_s}` acting on consecutive blocks of
/// sizes `d_1, ..., d_s`, with the first point of each block as base point.
pub fn sym_product(degrees: &[usize]) -> Result<(GroupGens, BlockPartition), GroupError> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(GroupError::Precondition(
            "block degrees must be >= 1".into(),
        ));
    }
    let n: usize = degrees.iter().sum();
    let mut gens = Vec::new();
    let mut blocks = Vec::new();
    let mut offset = 0;
    for &d in degrees {
        let block: Vec<usize> = (offset..offset + d).collect();
        if d >= 2 {
            gens.push(Perm::from_cycles(n, &[&[offset, offset + 1]])?);
            let cycle: Vec<usize> = block.clone();
            gens.push(Perm::from_cycles(n, &[&cycle])?);
        }
        blocks.push(block);
        offset += d;
    }
    Ok((GroupGens::new(n, gens)?, BlockPartition::new(n, blocks)?))
}

/// The wreath product `S_n^Omega x| Z/m` acting on `{1..n} x Omega`, where
/// `Omega` splits into cycles of sizes `d_1, ..., d_s` under the canonical
/// label-1 generator. Each `d_i` must divide `m`.
///
/// The domain has size `n * (d_1 + ... + d_s)`, laid out fiber-major: point
/// `(t, omega_j)` is index `j*n + t`. Blocks are `{1..n} x Omega_i`; the
/// kernel is exactly the label-0 subgroup and is isomorphic to `S_n^Omega`.
pub fn wreath_cyclic(
    n: usize,
    orbit_sizes: &[usize],
    m: u64,
) -> Result<(LabeledGens, BlockPartition), GroupError> {
    if n < 1 || m < 1 {
        return Err(GroupError::Precondition(
            "need n >= 1 and m >= 1".into(),
        ));
    }
    if orbit_sizes.is_empty() || orbit_sizes.contains(&0) {
        return Err(GroupError::Precondition("orbit sizes must be >= 1".into()));
    }
    for &d in orbit_sizes {
        if m % d as u64 != 0 {
            return Err(GroupError::BadOrbitSize { size: d, m });
        }
    }
    let copies: usize = orbit_sizes.iter().sum();
    let domain = n * copies;

    let mut gens = Vec::new();
    // Kernel generators: a transposition and an n-cycle in each fiber.
    if n >= 2 {
        for j in 0..copies {
            let base = j * n;
            gens.push(LabeledElem::new(
                Perm::from_cycles(domain, &[&[base, base + 1]])?,
                0,
            ));
            if n >= 3 {
                let cycle: Vec<usize> = (base..base + n).collect();
                gens.push(LabeledElem::new(Perm::from_cycles(domain, &[&cycle])?, 0));
            }
        }
    }
    // The label-1 generator: rotate the fibers of each orbit.
    let mut images: Vec<usize> = (0..domain).collect();
    let mut offset = 0;
    for &d in orbit_sizes {
        for j in 0..d {
            let next = (j + 1) % d;
            for t in 0..n {
                images[(offset + j) * n + t] = (offset + next) * n + t;
            }
        }
        offset += d;
    }
    gens.push(LabeledElem::new(Perm::from_images(images)?, 1));

    let mut blocks = Vec::new();
    let mut offset = 0;
    for &d in orbit_sizes {
        blocks.push((offset * n..(offset + d) * n).collect());
        offset += d;
    }
    Ok((
        LabeledGens::new(domain, m, gens)?,
        BlockPartition::new(domain, blocks)?,
    ))
}

/// The least `m` admitting the given cycle sizes: their lcm.
pub fn orbit_lcm(orbit_sizes: &[usize]) -> u64 {
    orbit_sizes.iter().fold(1u64, |acc, &d| lcm_u64(acc, d as u64))
}
