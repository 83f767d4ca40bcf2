//! Finite models of the Galois groups behind specialization experiments.
//!
//! A [`GaloisModel`] packages a labeled permutation group `H` over `Z/m`
//! (the label map is a surjective homomorphism, with `Z/m` playing the part
//! of a cyclic Galois group generated by Frobenius), a block partition of the
//! root domain, and the canonical Frobenius label `1`. Two constructions are
//! built in:
//!
//! - [`model_product`]: `H = S_{d_1} x ... x S_{d_s}` with trivial label
//!   group, one block per factor;
//! - [`model_wreath`]: `H = S_n^Omega x| Z/m` on `{1..n} x Omega`, where
//!   `Omega` carries the Frobenius cycles of the base polynomials and `m` is
//!   their lcm.
//!
//! The weak solutions of the induced embedding problem are exactly the
//! elements of label 1 (the Frobenius lifts); densities and cycle-type
//! distributions over that coset predict the outcomes of the scans in the
//! experiment harness.

use thiserror::Error;

mod fit;
mod sample;

pub use fit::{
    chebotarev_fit, chebotarev_fit_counts, shape_distribution, FitReport, FitRow,
    ShapeDistribution, ShapeMode,
};
pub(crate) use fit::format_sig12;
pub use sample::{specialize, specialize_family, RejectReason, SpecPoint, SpecializationSample};

use crate::permgrp::{
    coset_transitive_fraction, criterion_check, orbit_lcm, sym_product, wreath_cyclic,
    BlockPartition, DensityEstimate, FractionMode, GroupError, GroupGens, KernelSampler,
    LabeledElem, LabeledGens, Perm, DEFAULT_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("the substitution degree n must be odd in characteristic 2")]
    EvenNCharTwo,
    #[error("bad factor shapes: {0}")]
    BadShapes(String),
    #[error("the target coset is empty: no weak solution")]
    NoWeakSolution,
    #[error("no accepted samples to fit against")]
    NoAcceptedSamples,
}

/// Which construction produced a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Product { degrees: Vec<usize> },
    Wreath { n: usize, orbit_sizes: Vec<usize> },
}

/// A labeled group with blocks, a canonical Frobenius label, and an exact
/// kernel sampler.
#[derive(Debug, Clone)]
pub struct GaloisModel {
    labeled: LabeledGens,
    blocks: BlockPartition,
    frob_label: u64,
    rep: LabeledElem,
    sampler: KernelSampler,
    provenance: Provenance,
}

impl GaloisModel {
    pub fn labeled(&self) -> &LabeledGens {
        &self.labeled
    }

    pub fn blocks(&self) -> &BlockPartition {
        &self.blocks
    }

    /// Order of the cyclic label group.
    pub fn m(&self) -> u64 {
        self.labeled.modulus()
    }

    /// The canonical Frobenius image in `Z/m`.
    pub fn frob_label(&self) -> u64 {
        self.frob_label
    }

    /// A fixed representative of the Frobenius coset.
    pub fn frobenius_rep(&self) -> &LabeledElem {
        &self.rep
    }

    pub fn sampler(&self) -> &KernelSampler {
        &self.sampler
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The label-0 subgroup, listed in full.
    pub fn kernel(&self) -> Result<GroupGens, ModelError> {
        Ok(self.labeled.kernel(DEFAULT_CAP)?)
    }

    pub fn domain_size(&self) -> usize {
        self.labeled.domain_size()
    }

    /// The embedding problem whose weak solutions are the Frobenius lifts.
    pub fn embedding_problem(&self) -> EmbeddingProblem<'_> {
        EmbeddingProblem { model: self }
    }
}

/// `H = S_{d_1} x ... x S_{d_s}` with trivial label group: the model for
/// families whose splitting fields have no constant-field extension.
pub fn model_product(degrees: &[usize]) -> Result<GaloisModel, ModelError> {
    let (gens, blocks) = sym_product(degrees)?;
    let n = gens.domain_size();
    let labeled_gens = gens
        .generators()
        .iter()
        .map(|p| LabeledElem::new(p.clone(), 0))
        .collect();
    let labeled = LabeledGens::new(n, 1, labeled_gens)?;
    let model = GaloisModel {
        labeled,
        blocks,
        frob_label: 0,
        rep: LabeledElem::new(Perm::identity(n), 0),
        sampler: KernelSampler::ProductSym {
            degrees: degrees.to_vec(),
        },
        provenance: Provenance::Product {
            degrees: degrees.to_vec(),
        },
    };
    debug_assert!(model.labeled.labels_surjective());
    Ok(model)
}

/// `H = S_n wr Z/m` on `{1..n} x Omega` for a substitution of degree `n`
/// composed with a squarefree base polynomial whose irreducible factors have
/// the given degrees. `m` is the lcm of the factor degrees (the order of
/// Frobenius on the splitting field); `p` is the field characteristic, and
/// `n` must be odd when `p = 2`.
pub fn model_wreath(n: usize, f_shapes: &[usize], p: u64) -> Result<GaloisModel, ModelError> {
    if p == 2 && n % 2 == 0 {
        return Err(ModelError::EvenNCharTwo);
    }
    if n < 1 {
        return Err(ModelError::BadShapes("n must be >= 1".into()));
    }
    if f_shapes.is_empty() || f_shapes.contains(&0) {
        return Err(ModelError::BadShapes(
            "factor degrees must be a nonempty list of positive integers".into(),
        ));
    }
    let m = orbit_lcm(f_shapes);
    let (labeled, blocks) = wreath_cyclic(n, f_shapes, m)?;
    let frob_label = 1 % m;
    let rep = labeled
        .generators()
        .iter()
        .find(|e| e.label == frob_label)
        .cloned()
        .ok_or(ModelError::NoWeakSolution)?;
    let copies: usize = f_shapes.iter().sum();
    let model = GaloisModel {
        labeled,
        blocks,
        frob_label,
        rep,
        sampler: KernelSampler::SymPowers { n, copies },
        provenance: Provenance::Wreath {
            n,
            orbit_sizes: f_shapes.to_vec(),
        },
    };
    debug_assert!(model.labeled.labels_surjective());
    Ok(model)
}

/// The embedding problem attached to a model: find homomorphisms from the
/// procyclic Frobenius group into `H` over the label map. A weak solution is
/// an element of label 1; its powers are the image subgroup.
#[derive(Debug, Clone, Copy)]
pub struct EmbeddingProblem<'a> {
    model: &'a GaloisModel,
}

impl<'a> EmbeddingProblem<'a> {
    pub fn model(&self) -> &'a GaloisModel {
        self.model
    }

    /// All Frobenius lifts: the full coset of label `1`.
    pub fn frobenius_lifts(&self) -> Result<Vec<LabeledElem>, ModelError> {
        let coset = self
            .model
            .labeled
            .coset(self.model.frob_label, DEFAULT_CAP)?;
        Ok(coset)
    }

    pub fn has_weak_solution(&self) -> Result<bool, ModelError> {
        Ok(!self.frobenius_lifts()?.is_empty())
    }

    /// A deterministic stream of uniform lifts: uniform kernel element times
    /// the canonical representative.
    pub fn sample_lift(&self, rng: &mut crate::ffpoly::Rng) -> LabeledElem {
        let k = self.model.sampler.sample(rng);
        LabeledElem::new(k.mul(&self.model.rep.perm), self.model.frob_label)
    }

    /// The cyclic subgroup generated by one lift.
    pub fn lift_subgroup(&self, lift: &LabeledElem) -> GroupGens {
        GroupGens::new(self.model.domain_size(), vec![lift.perm.clone()])
            .expect("lift acts on the model domain")
    }
}

/// Probability that a uniform Frobenius lift is transitive on every block at
/// once; this is the predicted density of simultaneously irreducible
/// specializations.
pub fn predicted_density(
    model: &GaloisModel,
    mode: FractionMode<'_>,
) -> Result<DensityEstimate, ModelError> {
    let kernel = model.kernel()?;
    Ok(coset_transitive_fraction(
        &kernel,
        &model.rep,
        &model.blocks,
        mode,
        Some(&model.sampler),
    )?)
}

/// The candidate subgroup that witnessed the criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    Kernel,
    KernelJoinH0,
    BlockStabilizer(usize),
    FullGroup,
}

#[derive(Debug, Clone)]
pub struct Theorem2Witness {
    pub c: GroupGens,
    pub kind: WitnessKind,
}

/// Search a fixed chain of candidate subgroups `C` with `kernel <= C <= H`
/// for one satisfying the orbit criterion against `H0`; the first hit is the
/// witness. Returns `None` when no candidate works.
pub fn check_theorem2(
    model: &GaloisModel,
    h0: &GroupGens,
) -> Result<Option<Theorem2Witness>, ModelError> {
    let kernel = model.kernel()?;
    let n = model.domain_size();
    let h_elems = model.labeled.generate(DEFAULT_CAP)?;

    let mut candidates: Vec<(GroupGens, WitnessKind)> = Vec::new();
    candidates.push((kernel.clone(), WitnessKind::Kernel));
    {
        let mut gens = kernel.generators().to_vec();
        gens.extend(h0.generators().iter().cloned());
        candidates.push((GroupGens::new(n, gens)?, WitnessKind::KernelJoinH0));
    }
    for (i, block) in model.blocks.blocks().iter().enumerate() {
        let members: std::collections::HashSet<usize> = block.iter().copied().collect();
        let stab: Vec<Perm> = h_elems
            .iter()
            .map(|e| e.perm.clone())
            .filter(|p| block.iter().all(|&x| members.contains(&p.apply(x))))
            .collect();
        candidates.push((GroupGens::new(n, stab)?, WitnessKind::BlockStabilizer(i)));
    }
    candidates.push((model.labeled.perm_group(), WitnessKind::FullGroup));

    for (c, kind) in candidates {
        match criterion_check(h0, &c, &kernel, &model.blocks) {
            Ok(true) => return Ok(Some(Theorem2Witness { c, kind })),
            Ok(false) => continue,
            Err(GroupError::KernelNotContained) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Ok(None)
}
