//! Permutation groups on labeled root domains.
//!
//! Domains are `{0, ..., N-1}`, optionally partitioned into blocks with a base
//! point in each block. Groups are given by generators and enumerated by
//! breadth-first closure up to a cap; the intended instances are small enough
//! that no stabilizer-chain machinery is needed. Elements may carry a label in
//! `Z/m`, recording their image under a homomorphism onto a cyclic group;
//! multiplication composes permutations and adds labels.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

mod construct;
mod criterion;
mod density;

pub use construct::{orbit_lcm, sym_product, wreath_cyclic};
pub use criterion::{criterion_check, lemma3_verify, Lemma3Verdict};
pub use density::{
    coset_transitive_fraction, element_transitive_on_blocks, DensityEstimate, FractionMode,
    KernelSampler,
};

/// Default element-enumeration cap.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutations act on different domains")]
    DomainMismatch,
    #[error("enumeration exceeded the cap after {partial} elements")]
    CapExceeded { partial: usize },
    #[error("point {point} is outside the domain of size {domain}")]
    PointOutOfRange { point: usize, domain: usize },
    #[error("a generator maps the block outside itself")]
    BlockNotStable,
    #[error("orbit size {size} does not divide the cyclic order {m}")]
    BadOrbitSize { size: usize, m: u64 },
    #[error("kernel is not contained in the candidate subgroup")]
    KernelNotContained,
    #[error("no exact uniform sampler is registered for this kernel")]
    NoUniformSampler,
    #[error("image table is not a bijection")]
    NotBijection,
    #[error("bad block partition: {0}")]
    BadPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A permutation of `{0, ..., n-1}` as an image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Perm, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotBijection);
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Build from disjoint cycles over a domain of size `n`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, GroupError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(GroupError::PointOutOfRange {
                        point: from.max(to),
                        domain: n,
                    });
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// Composition `self after other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DomainMismatch);
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y as usize] = i as u32;
        }
        Perm { images }
    }

    /// The cycle of `self` through `x`.
    pub fn cycle_through(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.apply(x);
        while y != x {
            cycle.push(y);
            y = self.apply(y);
        }
        cycle
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            loop {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A partition of the domain into ordered blocks, each with a base point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    base: Vec<usize>,
}

impl BlockPartition {
    /// Blocks with the first point of each block as its base point.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<BlockPartition, GroupError> {
        let base: Vec<usize> = blocks
            .iter()
            .map(|b| b.first().copied().unwrap_or(usize::MAX))
            .collect();
        BlockPartition::with_base(n, blocks, base)
    }

    pub fn with_base(
        n: usize,
        blocks: Vec<Vec<usize>>,
        base: Vec<usize>,
    ) -> Result<BlockPartition, GroupError> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(GroupError::BadPartition("empty block".into()));
            }
            for &x in block {
                if x >= n {
                    return Err(GroupError::PointOutOfRange { point: x, domain: n });
                }
                if seen[x] {
                    return Err(GroupError::BadPartition(format!("point {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(GroupError::BadPartition("blocks do not cover the domain".into()));
        }
        if base.len() != blocks.len() {
            return Err(GroupError::BadPartition("one base point per block".into()));
        }
        for (i, (&x, block)) in base.iter().zip(&blocks).enumerate() {
            if !block.contains(&x) {
                return Err(GroupError::BadPartition(format!(
                    "base point {x} outside block {i}"
                )));
            }
        }
        Ok(BlockPartition { n, blocks, base })
    }

    pub fn domain_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn base_points(&self) -> &[usize] {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// A permutation group given by generators, with a lazily built element list.
#[derive(Debug)]
pub struct GroupGens {
    n: usize,
    gens: Vec<Perm>,
    cache: OnceLock<Vec<Perm>>,
}

impl Clone for GroupGens {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(elems) = self.cache.get() {
            let _ = cache.set(elems.clone());
        }
        GroupGens {
            n: self.n,
            gens: self.gens.clone(),
            cache,
        }
    }
}

impl GroupGens {
    pub fn new(n: usize, gens: Vec<Perm>) -> Result<GroupGens, GroupError> {
        if gens.iter().any(|g| g.degree() != n) {
            return Err(GroupError::DomainMismatch);
        }
        Ok(GroupGens {
            n,
            gens,
            cache: OnceLock::new(),
        })
    }

    pub fn trivial(n: usize) -> GroupGens {
        GroupGens::new(n, Vec::new()).expect("no generators")
    }

    pub fn domain_size(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Full element list by breadth-first closure, if the group has at most
    /// `cap` elements. The list is cached once computed.
    pub fn generate(&self, cap: usize) -> Result<&[Perm], GroupError> {
        if let Some(elems) = self.cache.get() {
            return if elems.len() <= cap {
                Ok(elems)
            } else {
                Err(GroupError::CapExceeded { partial: cap })
            };
        }
        let elems = closure_bfs(self.n, &self.gens, cap)?;
        let _ = self.cache.set(elems);
        Ok(self.cache.get().expect("just set"))
    }

    /// Group order, enumerating if necessary.
    pub fn order(&self, cap: usize) -> Result<usize, GroupError> {
        Ok(self.generate(cap)?.len())
    }

    /// Orbit of a point under the generated group, by point-level BFS. Never
    /// enumerates group elements.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>, GroupError> {
        if x >= self.n {
            return Err(GroupError::PointOutOfRange { point: x, domain: self.n });
        }
        let mut seen = vec![false; self.n];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        let mut orbit = vec![x];
        while let Some(y) = queue.pop_front() {
            for g in &self.gens {
                let z = g.apply(y);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                    queue.push_back(z);
                }
            }
        }
        orbit.sort_unstable();
        Ok(orbit)
    }

    /// Whether the group moves the block transitively. The block must be
    /// stable under every generator.
    pub fn is_transitive_on(&self, block: &[usize]) -> Result<bool, GroupError> {
        if block.is_empty() {
            return Err(GroupError::BadPartition("empty block".into()));
        }
        let members: HashSet<usize> = block.iter().copied().collect();
        for &x in block {
            if x >= self.n {
                return Err(GroupError::PointOutOfRange { point: x, domain: self.n });
            }
        }
        for g in &self.gens {
            for &x in block {
                if !members.contains(&g.apply(x)) {
                    return Err(GroupError::BlockNotStable);
                }
            }
        }
        let orbit = self.orbit(block[0])?;
        let orbit: HashSet<usize> = orbit.into_iter().collect();
        Ok(members.iter().all(|x| orbit.contains(x)))
    }
}

fn closure_bfs(n: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>, GroupError> {
    let mut elems = vec![Perm::identity(n)];
    let mut seen: HashSet<Perm> = elems.iter().cloned().collect();
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let next = elems[i].mul(g);
            if !seen.contains(&next) {
                if elems.len() >= cap {
                    return Err(GroupError::CapExceeded { partial: elems.len() });
                }
                seen.insert(next.clone());
                elems.push(next);
            }
        }
        i += 1;
    }
    Ok(elems)
}

/// A group element together with its label in `Z/m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledElem {
    pub perm: Perm,
    pub label: u64,
}

impl LabeledElem {
    pub fn new(perm: Perm, label: u64) -> LabeledElem {
        LabeledElem { perm, label }
    }
}

impl fmt::Display for LabeledElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.perm, self.label)
    }
}

/// A labeled group: permutations carrying labels in `Z/m`, closed under the
/// product (compose permutations, add labels mod m).
#[derive(Debug)]
pub struct LabeledGens {
    n: usize,
    m: u64,
    gens: Vec<LabeledElem>,
    cache: OnceLock<Vec<LabeledElem>>,
}

impl Clone for LabeledGens {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(elems) = self.cache.get() {
            let _ = cache.set(elems.clone());
        }
        LabeledGens {
            n: self.n,
            m: self.m,
            gens: self.gens.clone(),
            cache,
        }
    }
}

impl LabeledGens {
    pub fn new(n: usize, m: u64, gens: Vec<LabeledElem>) -> Result<LabeledGens, GroupError> {
        if m == 0 {
            return Err(GroupError::Precondition("label modulus must be >= 1".into()));
        }
        if gens.iter().any(|g| g.perm.degree() != n) {
            return Err(GroupError::DomainMismatch);
        }
        let gens = gens
            .into_iter()
            .map(|g| LabeledElem::new(g.perm, g.label % m))
            .collect();
        Ok(LabeledGens {
            n,
            m,
            gens,
            cache: OnceLock::new(),
        })
    }

    pub fn domain_size(&self) -> usize {
        self.n
    }

    /// Label modulus `m`.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn generators(&self) -> &[LabeledElem] {
        &self.gens
    }

    pub fn identity(&self) -> LabeledElem {
        LabeledElem::new(Perm::identity(self.n), 0)
    }

    pub fn mul(&self, a: &LabeledElem, b: &LabeledElem) -> LabeledElem {
        LabeledElem::new(a.perm.mul(&b.perm), (a.label + b.label) % self.m)
    }

    pub fn inverse(&self, a: &LabeledElem) -> LabeledElem {
        LabeledElem::new(a.perm.inverse(), (self.m - a.label % self.m) % self.m)
    }

    /// Whether the generator labels generate all of `Z/m`.
    pub fn labels_surjective(&self) -> bool {
        let g = self
            .gens
            .iter()
            .fold(self.m, |acc, e| crate::ffpoly::gcd_u64(acc, e.label));
        g == 1 || self.m == 1
    }

    pub fn generate(&self, cap: usize) -> Result<&[LabeledElem], GroupError> {
        if let Some(elems) = self.cache.get() {
            return if elems.len() <= cap {
                Ok(elems)
            } else {
                Err(GroupError::CapExceeded { partial: cap })
            };
        }
        let mut elems = vec![self.identity()];
        let mut seen: HashSet<LabeledElem> = elems.iter().cloned().collect();
        let mut i = 0;
        while i < elems.len() {
            for g in &self.gens {
                let next = self.mul(&elems[i], g);
                if !seen.contains(&next) {
                    if elems.len() >= cap {
                        return Err(GroupError::CapExceeded { partial: elems.len() });
                    }
                    seen.insert(next.clone());
                    elems.push(next);
                }
            }
            i += 1;
        }
        let _ = self.cache.set(elems);
        Ok(self.cache.get().expect("just set"))
    }

    /// The label-0 subgroup as a plain permutation group, with its full
    /// element list as generators.
    pub fn kernel(&self, cap: usize) -> Result<GroupGens, GroupError> {
        let elems = self.generate(cap)?;
        let perms: Vec<Perm> = elems
            .iter()
            .filter(|e| e.label == 0)
            .map(|e| e.perm.clone())
            .collect();
        GroupGens::new(self.n, perms)
    }

    /// All elements with the given label.
    pub fn coset(&self, label: u64, cap: usize) -> Result<Vec<LabeledElem>, GroupError> {
        let elems = self.generate(cap)?;
        Ok(elems
            .iter()
            .filter(|e| e.label == label % self.m)
            .cloned()
            .collect())
    }

    /// Project away the labels.
    pub fn perm_group(&self) -> GroupGens {
        GroupGens::new(self.n, self.gens.iter().map(|g| g.perm.clone()).collect())
            .expect("degrees already checked")
    }
}

/// Membership set for a generated group.
pub(crate) fn element_set<'a>(elems: &'a [Perm]) -> HashSet<&'a Perm> {
    elems.iter().collect()
}
