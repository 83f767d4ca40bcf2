//! Projective smoothness check for plane curves.
//!
//! The curve is the closure of `f(T, X) = 0` in the projective plane. With
//! `p` not dividing the total degree `d`, the Euler relation makes the curve
//! smooth exactly when the three partials of the degree-`d` homogenization
//! have no common projective zero over the algebraic closure. On each affine
//! patch the check eliminates one variable from the partials by resultants
//! and back-substitutes candidate roots, walking into extension fields when a
//! root is not rational. An identically vanishing resultant is reported as
//! `Inconclusive` rather than decided.

use super::ExpError;
use crate::ffpoly::{
    embed, field_new, resultant, BiPoly, Ctx, FieldElem, Poly, Var,
};

/// A singular point in projective coordinates `(T : X : Z)`, written over
/// the field where it lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularWitness {
    pub coords: [String; 3],
    /// Extension degree over the scan field (1 = rational point).
    pub ext_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothVerdict {
    Smooth,
    Singular(SingularWitness),
    Inconclusive { reason: String },
}

/// Trivariate monomial list of the degree-`d` homogenization and its three
/// partials, as `(t_pow, x_pow, z_pow, coeff)`.
fn homog_partials(
    f: &BiPoly,
    d: usize,
) -> [Vec<(usize, usize, usize, FieldElem)>; 3] {
    let ctx = f.ctx().clone();
    let mut dt = Vec::new();
    let mut dx = Vec::new();
    let mut dz = Vec::new();
    for (i, j, c) in f.terms() {
        let zk = d - i - j;
        if i > 0 {
            dt.push((i - 1, j, zk, ctx.mul(&c, &ctx.from_u64(i as u64))));
        }
        if j > 0 {
            dx.push((i, j - 1, zk, ctx.mul(&c, &ctx.from_u64(j as u64))));
        }
        if zk > 0 {
            dz.push((i, j, zk - 1, ctx.mul(&c, &ctx.from_u64(zk as u64))));
        }
    }
    [dt, dx, dz]
}

/// Restrict a trivariate monomial list to an affine patch (`fixed` = 1),
/// keeping the other two variables in a fixed order as the (T, X) slots of a
/// bivariate polynomial.
fn restrict(
    ctx: &Ctx,
    terms: &[(usize, usize, usize, FieldElem)],
    fixed: usize,
) -> BiPoly {
    let picked: Vec<(usize, usize, FieldElem)> = terms
        .iter()
        .map(|&(t, x, z, ref c)| {
            let tri = [t, x, z];
            let kept: Vec<usize> = (0..3).filter(|&v| v != fixed).map(|v| tri[v]).collect();
            (kept[0], kept[1], c.clone())
        })
        .collect();
    BiPoly::from_terms(ctx, &picked)
}

/// Assemble projective coordinates from patch coordinates `(u, v)` with the
/// `fixed` variable set to 1.
fn assemble(fixed: usize, u: String, v: String) -> [String; 3] {
    let one = "1".to_string();
    match fixed {
        0 => [one, u, v],
        1 => [u, one, v],
        _ => [u, v, one],
    }
}

/// Check smoothness of the projective closure of `f(T, X) = 0`. Requires
/// `p` not dividing the total degree.
pub fn smooth_check(f: &BiPoly) -> Result<SmoothVerdict, ExpError> {
    let ctx = f.ctx().clone();
    let d = f
        .total_degree()
        .ok_or_else(|| ExpError::PreconditionFailed("zero polynomial".into()))?;
    if d == 0 {
        return Err(ExpError::PreconditionFailed("constant curve".into()));
    }
    if (d as u64) % ctx.p() == 0 {
        return Err(ExpError::PreconditionFailed(format!(
            "characteristic {} divides the total degree {d}",
            ctx.p()
        )));
    }
    let partials = homog_partials(f, d);
    let mut inconclusive: Option<String> = None;
    for fixed in 0..3usize {
        let gs: Vec<BiPoly> = partials
            .iter()
            .map(|terms| restrict(&ctx, terms, fixed))
            .collect();
        match patch_common_zero(&ctx, &gs)? {
            PatchOutcome::Clean => {}
            PatchOutcome::Zero(u, v, ext) => {
                return Ok(SmoothVerdict::Singular(SingularWitness {
                    coords: assemble(fixed, u, v),
                    ext_degree: ext,
                }));
            }
            PatchOutcome::Unknown(reason) => {
                inconclusive.get_or_insert(reason);
            }
        }
    }
    Ok(match inconclusive {
        None => SmoothVerdict::Smooth,
        Some(reason) => SmoothVerdict::Inconclusive { reason },
    })
}

enum PatchOutcome {
    Clean,
    /// Common zero at `(u, v)` living in an extension of the given degree.
    Zero(String, String, u32),
    Unknown(String),
}

/// Fields small enough to scan all rational points of a patch directly.
const RATIONAL_SCAN_LIMIT: u64 = 512;

/// Common zero of a system of bivariate polynomials over the closure: first a
/// rational point scan on small fields, then resultant elimination of the
/// second variable with back-substitution into extensions.
fn patch_common_zero(ctx: &Ctx, gs: &[BiPoly]) -> Result<PatchOutcome, ExpError> {
    let nonzero: Vec<&BiPoly> = gs.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        // Every partial vanishes identically on the patch.
        return Ok(PatchOutcome::Zero("0".into(), "0".into(), 1));
    }
    // A nonvanishing constant kills the patch.
    if nonzero
        .iter()
        .any(|g| g.deg_t() == Some(0) && g.deg_x() == Some(0))
    {
        return Ok(PatchOutcome::Clean);
    }
    if ctx.q() <= RATIONAL_SCAN_LIMIT {
        for iu in 0..ctx.q() {
            let u = ctx.elem_at(iu);
            let fibers: Vec<Poly> = nonzero.iter().map(|g| g.eval_partial(&u).poly).collect();
            for iv in 0..ctx.q() {
                let v = ctx.elem_at(iv);
                if fibers.iter().all(|f| ctx.is_zero(&f.eval(&v))) {
                    return Ok(PatchOutcome::Zero(ctx.fmt_elem(&u), ctx.fmt_elem(&v), 1));
                }
            }
        }
    }

    // All polynomials free of v: the system lives on u alone.
    if nonzero.iter().all(|g| g.deg_x().unwrap_or(0) == 0) {
        let mut h: Option<Poly> = None;
        for g in &nonzero {
            let gu = g.to_univariate(Var::T).expect("v-free");
            h = Some(match h {
                None => gu,
                Some(prev) => prev.gcd(&gu)?,
            });
        }
        let h = h.expect("nonempty");
        if h.degree() == Some(0) {
            return Ok(PatchOutcome::Clean);
        }
        let (u, ext) = root_over(ctx, &h, ctx)?;
        return Ok(PatchOutcome::Zero(u, "0".into(), ext));
    }

    // Pivot: maximal degree in the eliminated variable.
    let pivot = nonzero
        .iter()
        .max_by_key(|g| g.deg_x().unwrap_or(0))
        .expect("nonempty");
    let mut h: Option<Poly> = None;
    for g in &nonzero {
        if std::ptr::eq(*g, *pivot) {
            continue;
        }
        let r = resultant(pivot, g, Var::X)?;
        if r.is_zero() {
            return Ok(PatchOutcome::Unknown(format!(
                "resultant of partials vanishes identically on a patch \
                 (common factor between `{pivot}` and `{g}`)"
            )));
        }
        h = Some(match h {
            None => r,
            Some(prev) => prev.gcd(&r)?,
        });
    }
    let h = match h {
        // Only the pivot survives: any of its zeros is a common zero.
        None => {
            let (u, v, ext) = zero_of_bipoly(ctx, pivot)?;
            return Ok(PatchOutcome::Zero(u, v, ext));
        }
        Some(h) => h,
    };
    if h.degree() == Some(0) {
        return Ok(PatchOutcome::Clean);
    }

    // Back-substitute every u-candidate, walking into the extension where
    // each irreducible factor of h has its roots.
    let fac = h.factor()?;
    let mut factors = fac.factors;
    factors.sort_by_key(|(g, _)| g.degree());
    for (m, _) in factors {
        let e = m.degree().unwrap() as u32;
        let big = extension_of(ctx, e)?;
        let lift = embed(ctx, &big)?;
        let m_big = lift.map_poly(&m);
        let root = smallest_root(&big, &m_big)?;
        // Evaluate every partial at u = root; common v-roots certify a zero.
        let mut gcd_v: Option<Poly> = None;
        for g in &nonzero {
            let gv = eval_bipoly_at_t(&lift, g, &root);
            gcd_v = Some(match gcd_v {
                None => gv,
                Some(prev) => prev.gcd(&gv)?,
            });
        }
        let gcd_v = gcd_v.expect("nonempty");
        if gcd_v.is_zero() {
            // every partial vanishes identically along this fiber
            return Ok(PatchOutcome::Zero(
                big.fmt_elem(&root),
                "0".into(),
                e,
            ));
        }
        if gcd_v.degree() == Some(0) {
            continue; // spurious candidate
        }
        let (v, total_ext) = root_over(&big, &gcd_v, ctx)?;
        let u = if total_ext == e {
            big.fmt_elem(&root)
        } else {
            // re-express u in the larger field holding v
            let bigger = extension_of(ctx, total_ext)?;
            let up = embed(&big, &bigger)?;
            bigger.fmt_elem(&up.map(&root))
        };
        return Ok(PatchOutcome::Zero(u, v, total_ext));
    }
    Ok(PatchOutcome::Clean)
}

fn extension_of(ctx: &Ctx, e: u32) -> Result<Ctx, ExpError> {
    if e == 1 {
        return Ok(ctx.clone());
    }
    Ok(field_new(ctx.p(), ctx.k() * e)?)
}

/// Least root of a polynomial that splits at least one linear factor over
/// its own field.
fn smallest_root(ctx: &Ctx, f: &Poly) -> Result<FieldElem, ExpError> {
    let fac = f.factor()?;
    let mut roots: Vec<FieldElem> = fac
        .factors
        .iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| {
            let lead_inv = ctx.inv(&g.coeff(1)).expect("nonzero");
            ctx.neg(&ctx.mul(&g.coeff(0), &lead_inv))
        })
        .collect();
    roots.sort_by_key(|r| ctx.index_of(r));
    roots
        .into_iter()
        .next()
        .ok_or_else(|| ExpError::PreconditionFailed("expected a rational root".into()))
}

/// A root of `f` over `base_ctx`'s extension tower: factor, take the least
/// factor, extend if needed. Returns the printed root and the total extension
/// degree over the original scan field.
fn root_over(ctx: &Ctx, f: &Poly, base: &Ctx) -> Result<(String, u32), ExpError> {
    let fac = f.factor()?;
    let (m, _) = fac
        .factors
        .iter()
        .min_by_key(|(g, _)| (g.degree(), base.k()))
        .expect("nonconstant input");
    let e = m.degree().unwrap() as u32;
    let rel = ctx.k() / base.k();
    if e == 1 {
        let lead_inv = ctx.inv(&m.coeff(1)).expect("nonzero");
        let root = ctx.neg(&ctx.mul(&m.coeff(0), &lead_inv));
        return Ok((ctx.fmt_elem(&root), rel));
    }
    let bigger = extension_of(base, rel * e)?;
    let lift = embed(ctx, &bigger)?;
    let m_big = lift.map_poly(m);
    let root = smallest_root(&bigger, &m_big)?;
    Ok((bigger.fmt_elem(&root), rel * e))
}

/// Any zero of a single bivariate polynomial: specialize u until the fiber
/// polynomial has positive degree, then take a root.
fn zero_of_bipoly(ctx: &Ctx, g: &BiPoly) -> Result<(String, String, u32), ExpError> {
    for i in 0..ctx.q() {
        let u = ctx.elem_at(i);
        let fiber = g.eval_partial(&u).poly;
        if fiber.is_zero() {
            return Ok((ctx.fmt_elem(&u), "0".into(), 1));
        }
        if fiber.degree().map_or(false, |d| d >= 1) {
            let (v, ext) = root_over(ctx, &fiber, ctx)?;
            return Ok((ctx.fmt_elem(&u), v, ext));
        }
    }
    Err(ExpError::PreconditionFailed(
        "no specialization of the surviving partial drops to a root".into(),
    ))
}

/// Evaluate a bivariate polynomial at `T = a` inside an extension.
fn eval_bipoly_at_t(
    lift: &crate::ffpoly::Embedding,
    g: &BiPoly,
    a: &FieldElem,
) -> Poly {
    let big = lift.dst().clone();
    let coeffs: Vec<FieldElem> = g
        .cols()
        .iter()
        .map(|col| lift.map_poly(col).eval(a))
        .collect();
    Poly::new(&big, coeffs)
}
