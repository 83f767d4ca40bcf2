//! The executable transitivity criterion and its exhaustive verifier.
//!
//! `criterion_check` asks, for subgroups `H0` and `C` of a common group with
//! `kernel <= C`, whether the `(H0 n C)`-orbit of each base point equals its
//! `C`-orbit. `lemma3_verify` then certifies the consequence the criterion is
//! for: every subgroup `H1` between `H0` and the full labeled group whose
//! labels still cover `Z/m` acts transitively on every block. The verifier
//! walks the subgroup lattice above `H0` by closure under single-element
//! adjunction, so its cost is exponential in general; it is meant for the
//! small model groups the experiments use.

use std::collections::{HashMap, HashSet};

use super::{
    element_set, BlockPartition, GroupError, GroupGens, LabeledElem, LabeledGens, DEFAULT_CAP,
};
use crate::ffpoly::gcd_u64;

/// Largest labeled group `lemma3_verify` will enumerate subgroups of.
pub const LATTICE_CAP: usize = 2048;

/// Orbit-equality criterion: for every block `i`,
/// `(H0 n C) x_i = C x_i`, with the intersection computed by element
/// filtering. Requires `kernel <= C`.
pub fn criterion_check(
    h0: &GroupGens,
    c: &GroupGens,
    kernel: &GroupGens,
    blocks: &BlockPartition,
) -> Result<bool, GroupError> {
    let n = blocks.domain_size();
    if h0.domain_size() != n || c.domain_size() != n || kernel.domain_size() != n {
        return Err(GroupError::DomainMismatch);
    }
    let c_elems = c.generate(DEFAULT_CAP)?;
    let c_set = element_set(c_elems);
    for g in kernel.generators() {
        if !c_set.contains(g) {
            return Err(GroupError::KernelNotContained);
        }
    }
    let h0_elems = h0.generate(DEFAULT_CAP)?;
    let inter: Vec<_> = h0_elems.iter().filter(|g| c_set.contains(g)).collect();
    for &x in blocks.base_points() {
        let c_orbit: HashSet<usize> = c_elems.iter().map(|g| g.apply(x)).collect();
        let i_orbit: HashSet<usize> = inter.iter().map(|g| g.apply(x)).collect();
        if i_orbit != c_orbit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the exhaustive subgroup-lattice walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma3Verdict {
    /// Every label-surjective subgroup containing `H0` is transitive on every
    /// block. Carries the number of distinct subgroups examined.
    Pass { subgroups_checked: usize },
    /// A label-surjective subgroup that misses a block, as a witness.
    Counterexample {
        elements: Vec<LabeledElem>,
        block_index: usize,
    },
}

/// Verify, by exhaustion, that every subgroup `H1` with `H0 <= H1 <= H` whose
/// labels generate `Z/m` is transitive on every block.
///
/// Preconditions: `criterion_check` holds for the permutation projections of
/// `h0` and `c` against the label-0 kernel of `h`, and `|H|` is within
/// [`LATTICE_CAP`].
pub fn lemma3_verify(
    h: &LabeledGens,
    h0: &[LabeledElem],
    c: &GroupGens,
    blocks: &BlockPartition,
) -> Result<Lemma3Verdict, GroupError> {
    let elems = h.generate(LATTICE_CAP)?;
    let len = elems.len();
    let m = h.modulus();

    let kernel = h.kernel(LATTICE_CAP)?;
    let h0_perms = GroupGens::new(
        h.domain_size(),
        h0.iter().map(|e| e.perm.clone()).collect(),
    )?;
    if !criterion_check(&h0_perms, c, &kernel, blocks)? {
        return Err(GroupError::Precondition(
            "criterion_check fails for the supplied (H0, C)".into(),
        ));
    }

    // Index the group and build a multiplication table; subgroups are then
    // bitsets over indices.
    let index: HashMap<&LabeledElem, usize> =
        elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut table = vec![0u16; len * len];
    for i in 0..len {
        for j in 0..len {
            let prod = h.mul(&elems[i], &elems[j]);
            table[i * len + j] = index[&prod] as u16;
        }
    }

    let h0_idx: Vec<usize> = h0
        .iter()
        .map(|e| {
            index
                .get(e)
                .copied()
                .ok_or_else(|| GroupError::Precondition("H0 generator outside H".into()))
        })
        .collect::<Result<_, _>>()?;

    let words = len.div_ceil(64);
    let start = close_under_products(&h0_idx, &table, len, words);

    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    let mut checked = 0usize;

    while let Some(set) = queue.pop() {
        let members: Vec<usize> = iter_bits(&set, len).collect();

        // alpha(H1) = Z/m exactly when the member labels generate Z/m.
        let label_gcd = members
            .iter()
            .fold(m, |acc, &i| gcd_u64(acc, elems[i].label));
        if label_gcd == 1 || m == 1 {
            checked += 1;
            for (bi, (block, &x)) in blocks
                .blocks()
                .iter()
                .zip(blocks.base_points())
                .enumerate()
            {
                let orbit: HashSet<usize> =
                    members.iter().map(|&i| elems[i].perm.apply(x)).collect();
                if !block.iter().all(|p| orbit.contains(p)) {
                    return Ok(Lemma3Verdict::Counterexample {
                        elements: members.iter().map(|&i| elems[i].clone()).collect(),
                        block_index: bi,
                    });
                }
            }
        }

        // Adjoin one element of H and close again.
        for g in 0..len {
            if set[g / 64] >> (g % 64) & 1 == 1 {
                continue;
            }
            let mut seed = members.clone();
            seed.push(g);
            let bigger = close_under_products_from(&set, &seed, &table, len, words);
            if seen.insert(bigger.clone()) {
                queue.push(bigger);
            }
        }
    }

    Ok(Lemma3Verdict::Pass {
        subgroups_checked: checked,
    })
}

fn iter_bits<'a>(set: &'a [u64], len: usize) -> impl Iterator<Item = usize> + 'a {
    (0..len).filter(move |&i| set[i / 64] >> (i % 64) & 1 == 1)
}

fn close_under_products(seed: &[usize], table: &[u16], len: usize, words: usize) -> Vec<u64> {
    let empty = vec![0u64; words];
    let mut with_id: Vec<usize> = vec![0];
    with_id.extend_from_slice(seed);
    close_under_products_from(&empty, &with_id, table, len, words)
}

/// Close `base ∪ seed` under the group product. Index 0 is the identity.
fn close_under_products_from(
    base: &[u64],
    seed: &[usize],
    table: &[u16],
    len: usize,
    words: usize,
) -> Vec<u64> {
    let mut set = base.to_vec();
    set.resize(words, 0);
    let mut members: Vec<usize> = iter_bits(base, len).collect();
    let mut pending: Vec<usize> = Vec::new();
    if base.iter().all(|&w| w == 0) {
        set[0] |= 1;
        members.push(0);
    }
    for &s in seed {
        if set[s / 64] >> (s % 64) & 1 == 0 {
            set[s / 64] |= 1 << (s % 64);
            members.push(s);
            pending.push(s);
        }
    }
    // For elements already known the pairwise products are closed, so only
    // products involving a new element need revisiting.
    let mut cursor = if pending.is_empty() { 0 } else { members.len() - pending.len() };
    while cursor < members.len() {
        let a = members[cursor];
        let mut j = 0;
        while j < members.len() {
            let b = members[j];
            for prod in [table[a * len + b] as usize, table[b * len + a] as usize] {
                if set[prod / 64] >> (prod % 64) & 1 == 0 {
                    set[prod / 64] |= 1 << (prod % 64);
                    members.push(prod);
                }
            }
            j += 1;
        }
        cursor += 1;
    }
    set
}
