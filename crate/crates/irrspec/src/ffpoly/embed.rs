//! Canonical embeddings between extension fields of the same characteristic.
//!
//! `F_{p^k}` embeds in `F_{p^K}` exactly when `k | K`. The embedding sends
//! the generator of the small field to the least root of the small modulus in
//! the big field, so it is deterministic.

use super::{Ctx, FfError, FieldElem, Poly};

/// An embedding of `src` into `dst`.
#[derive(Debug, Clone)]
pub struct Embedding {
    src: Ctx,
    dst: Ctx,
    /// Powers of the chosen root of the source modulus: `root^0 .. root^(k-1)`.
    root_powers: Vec<FieldElem>,
}

pub fn embed(src: &Ctx, dst: &Ctx) -> Result<Embedding, FfError> {
    if src.p() != dst.p() || dst.k() % src.k() != 0 {
        return Err(FfError::Parse(format!(
            "no embedding of F_{} into F_{}",
            src.q(),
            dst.q()
        )));
    }
    let k = src.k() as usize;
    if k == 1 {
        return Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            root_powers: vec![dst.one()],
        });
    }
    if src.k() == dst.k() {
        // identity embedding: the canonical modulus is shared
        let root_powers = (0..k)
            .map(|i| {
                let mut coords = vec![0u64; k];
                coords[i] = 1;
                dst.from_coords(&coords).expect("k coords")
            })
            .collect();
        return Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            root_powers,
        });
    }
    // The source modulus splits completely over dst; take its least root.
    let lifted = Poly::from_u64_coeffs(dst, src.modulus());
    let fac = lifted.factor()?;
    let mut roots: Vec<FieldElem> = fac
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| dst.neg(&g.coeff(0)))
        .collect();
    debug_assert_eq!(roots.len(), k);
    roots.sort_by_key(|r| dst.index_of(r));
    let root = roots.into_iter().next().expect("modulus splits");
    let mut root_powers = Vec::with_capacity(k);
    let mut acc = dst.one();
    for _ in 0..k {
        root_powers.push(acc.clone());
        acc = dst.mul(&acc, &root);
    }
    Ok(Embedding {
        src: src.clone(),
        dst: dst.clone(),
        root_powers,
    })
}

impl Embedding {
    pub fn src(&self) -> &Ctx {
        &self.src
    }

    pub fn dst(&self) -> &Ctx {
        &self.dst
    }

    pub fn map(&self, e: &FieldElem) -> FieldElem {
        let mut out = self.dst.zero();
        for (c, pw) in e.coords().iter().zip(&self.root_powers) {
            if *c != 0 {
                let t = self.dst.mul(&self.dst.from_u64(*c), pw);
                out = self.dst.add(&out, &t);
            }
        }
        out
    }

    pub fn map_poly(&self, f: &Poly) -> Poly {
        Poly::new(
            &self.dst,
            f.coeffs().iter().map(|c| self.map(c)).collect(),
        )
    }
}
