//! Coset densities: which fraction of a labeled coset acts transitively on
//! every block at once.

use std::fmt;

use super::{BlockPartition, GroupError, GroupGens, LabeledElem, Perm, DEFAULT_CAP};
use crate::ffpoly::{gcd_u64, Rng};

/// A fraction `hits / total`, exact when it came from full enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityEstimate {
    pub hits: u64,
    pub total: u64,
    pub exact: bool,
}

impl DensityEstimate {
    pub fn value(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.hits as f64 / self.total as f64
        }
    }

    /// Numerator and denominator in lowest terms.
    pub fn reduced(&self) -> (u64, u64) {
        if self.hits == 0 {
            return (0, 1);
        }
        let g = gcd_u64(self.hits, self.total);
        (self.hits / g, self.total / g)
    }
}

impl fmt::Display for DensityEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.reduced();
        write!(f, "{n}/{d}")?;
        if !self.exact {
            write!(f, " (sampled)")?;
        }
        Ok(())
    }
}

/// How to traverse a coset.
pub enum FractionMode<'a> {
    Exhaustive,
    Sample { count: u64, rng: &'a mut Rng },
}

/// Exact uniform samplers for the kernels of the two model families. Both
/// kernels are direct products of symmetric groups on known sub-domains, so a
/// uniform element is a tuple of independent uniform shuffles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelSampler {
    /// `S_{d_1} x ... x S_{d_s}` on consecutive blocks.
    ProductSym { degrees: Vec<usize> },
    /// `S_n^c` acting on `c` consecutive fibers of size `n`.
    SymPowers { n: usize, copies: usize },
}

impl KernelSampler {
    pub fn domain_size(&self) -> usize {
        match self {
            KernelSampler::ProductSym { degrees } => degrees.iter().sum(),
            KernelSampler::SymPowers { n, copies } => n * copies,
        }
    }

    pub fn sample(&self, rng: &mut Rng) -> Perm {
        let n = self.domain_size();
        let mut images: Vec<usize> = (0..n).collect();
        let mut shuffle = |start: usize, len: usize, rng: &mut Rng| {
            // Fisher-Yates on images[start..start+len]
            for i in (1..len).rev() {
                let j = rng.below(i as u64 + 1) as usize;
                images.swap(start + i, start + j);
            }
        };
        match self {
            KernelSampler::ProductSym { degrees } => {
                let mut offset = 0;
                for &d in degrees {
                    shuffle(offset, d, rng);
                    offset += d;
                }
            }
            KernelSampler::SymPowers { n, copies } => {
                for j in 0..*copies {
                    shuffle(j * n, *n, rng);
                }
            }
        }
        Perm::from_images(images).expect("shuffles are bijections")
    }
}

/// Whether a single permutation is transitive on every block at once: the
/// cycle through each base point must sweep out its whole block.
pub fn element_transitive_on_blocks(g: &Perm, blocks: &BlockPartition) -> bool {
    for (block, &x) in blocks.blocks().iter().zip(blocks.base_points()) {
        let mut len = 1usize;
        let mut y = g.apply(x);
        while y != x {
            if len > block.len() {
                return false;
            }
            len += 1;
            y = g.apply(y);
        }
        if len != block.len() {
            return false;
        }
    }
    true
}

/// Fraction of the coset `kernel * rep` transitive on every block
/// simultaneously. Exhaustive mode enumerates the kernel; sample mode draws
/// kernel elements from the registered exact sampler.
pub fn coset_transitive_fraction(
    kernel: &GroupGens,
    rep: &LabeledElem,
    blocks: &BlockPartition,
    mode: FractionMode<'_>,
    sampler: Option<&KernelSampler>,
) -> Result<DensityEstimate, GroupError> {
    let n = blocks.domain_size();
    if kernel.domain_size() != n || rep.perm.degree() != n {
        return Err(GroupError::DomainMismatch);
    }
    match mode {
        FractionMode::Exhaustive => {
            let elems = kernel.generate(DEFAULT_CAP)?;
            let hits = elems
                .iter()
                .filter(|k| element_transitive_on_blocks(&k.mul(&rep.perm), blocks))
                .count() as u64;
            Ok(DensityEstimate {
                hits,
                total: elems.len() as u64,
                exact: true,
            })
        }
        FractionMode::Sample { count, rng } => {
            let sampler = sampler.ok_or(GroupError::NoUniformSampler)?;
            if sampler.domain_size() != n {
                return Err(GroupError::DomainMismatch);
            }
            let mut hits = 0u64;
            for _ in 0..count {
                let k = sampler.sample(rng);
                if element_transitive_on_blocks(&k.mul(&rep.perm), blocks) {
                    hits += 1;
                }
            }
            Ok(DensityEstimate {
                hits,
                total: count,
                exact: false,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{sym_product, wreath_cyclic};

    #[test]
    fn wreath_coset_fraction_is_half() {
        // Of the four elements ((p1, p2), 1) of the order-8 model, exactly
        // those with p1 p2 a transposition give a 4-cycle: 2 of 4.
        let (h, blocks) = wreath_cyclic(2, &[2], 2).unwrap();
        let kernel = h.kernel(DEFAULT_CAP).unwrap();
        let rep = h
            .generators()
            .iter()
            .find(|e| e.label == 1)
            .unwrap()
            .clone();
        let d = coset_transitive_fraction(&kernel, &rep, &blocks, FractionMode::Exhaustive, None)
            .unwrap();
        assert_eq!(d.reduced(), (1, 2));
        assert_eq!(d.total, 4);
    }

    #[test]
    fn full_s2_fraction_is_half() {
        let (g, blocks) = sym_product(&[2]).unwrap();
        let rep = LabeledElem::new(Perm::identity(2), 0);
        let d = coset_transitive_fraction(&g, &rep, &blocks, FractionMode::Exhaustive, None)
            .unwrap();
        assert_eq!(d.reduced(), (1, 2));
    }

    #[test]
    fn single_point_domain_is_always_transitive() {
        let (g, blocks) = sym_product(&[1]).unwrap();
        let rep = LabeledElem::new(Perm::identity(1), 0);
        let d = coset_transitive_fraction(&g, &rep, &blocks, FractionMode::Exhaustive, None)
            .unwrap();
        assert_eq!(d.value(), 1.0);
    }

    #[test]
    fn sampler_requires_registration() {
        let (g, blocks) = sym_product(&[2]).unwrap();
        let rep = LabeledElem::new(Perm::identity(2), 0);
        let mut rng = Rng::new(1);
        let err = coset_transitive_fraction(
            &g,
            &rep,
            &blocks,
            FractionMode::Sample { count: 10, rng: &mut rng },
            None,
        )
        .unwrap_err();
        assert_eq!(err, GroupError::NoUniformSampler);
    }

    #[test]
    fn sampled_fraction_converges_order_eight() {
        let (h, blocks) = wreath_cyclic(2, &[2], 2).unwrap();
        let rep = h.generators().iter().find(|e| e.label == 1).unwrap().clone();
        let kernel = h.kernel(DEFAULT_CAP).unwrap();
        let sampler = KernelSampler::SymPowers { n: 2, copies: 2 };
        let mut rng = Rng::new(77);
        let count = 4000u64;
        let d = coset_transitive_fraction(
            &kernel,
            &rep,
            &blocks,
            FractionMode::Sample { count, rng: &mut rng },
            Some(&sampler),
        )
        .unwrap();
        let p = 0.5f64;
        let sigma = (p * (1.0 - p) / count as f64).sqrt();
        assert!((d.value() - p).abs() <= 3.0 * sigma, "value {}", d.value());
    }

    #[test]
    fn sampled_fraction_converges_order_72() {
        // S_3 wr C_2 on 6 points: order 6^2 * 2 = 72.
        let (h, blocks) = wreath_cyclic(3, &[2], 2).unwrap();
        let rep = h.generators().iter().find(|e| e.label == 1).unwrap().clone();
        let kernel = h.kernel(DEFAULT_CAP).unwrap();
        let exact =
            coset_transitive_fraction(&kernel, &rep, &blocks, FractionMode::Exhaustive, None)
                .unwrap();
        let sampler = KernelSampler::SymPowers { n: 3, copies: 2 };
        let mut rng = Rng::new(123);
        let count = 4000u64;
        let d = coset_transitive_fraction(
            &kernel,
            &rep,
            &blocks,
            FractionMode::Sample { count, rng: &mut rng },
            Some(&sampler),
        )
        .unwrap();
        let p = exact.value();
        let sigma = (p * (1.0 - p) / count as f64).sqrt();
        assert!(
            (d.value() - p).abs() <= 3.0 * sigma,
            "sampled {} exact {}",
            d.value(),
            p
        );
    }

    #[test]
    fn product_sampler_matches_uniform_counts() {
        // Sampling S_2 x S_2: each of the four kernel elements should appear
        // with frequency near 1/4.
        let sampler = KernelSampler::ProductSym { degrees: vec![2, 2] };
        let mut rng = Rng::new(5);
        let mut counts = std::collections::HashMap::new();
        let trials = 8000;
        for _ in 0..trials {
            *counts.entry(sampler.sample(&mut rng)).or_insert(0u64) += 1;
        }
        assert_eq!(counts.len(), 4);
        for &c in counts.values() {
            let f = c as f64 / trials as f64;
            assert!((f - 0.25).abs() < 0.03, "{f}");
        }
    }
}
