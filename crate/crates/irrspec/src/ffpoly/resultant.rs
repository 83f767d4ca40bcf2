//! Resultants of bivariate polynomials by the subresultant PRS.
//!
//! `resultant(f, g, var)` eliminates `var`, returning a polynomial in the
//! other variable, with the convention
//! `Res(f, g) = lc(f)^(deg g) * prod_{f(alpha)=0} g(alpha)`.
//! The sequence runs over `F_q[other]` with pseudo-division, so no fractions
//! appear; the result is zero exactly when the inputs share a nonconstant
//! factor.

use super::{BiPoly, FfError, Poly, Var};

/// Resultant of `f` and `g` with respect to `var`.
pub fn resultant(f: &BiPoly, g: &BiPoly, var: Var) -> Result<Poly, FfError> {
    if !f.ctx().same_field(g.ctx()) {
        return Err(FfError::CtxMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Err(FfError::ZeroInput);
    }
    let a = f.coeffs_in(var);
    let b = g.coeffs_in(var);
    Ok(subresultant(a, b))
}

// ---- polynomials in an eliminated variable Y over R = F_q[kept var] ----
//
// Represented as Vec<Poly>, lowest Y-degree first, no trailing zero entries.

type Yp = Vec<Poly>;

fn norm(mut a: Yp) -> Yp {
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
    a
}

fn ydeg(a: &Yp) -> Option<usize> {
    a.len().checked_sub(1)
}

fn ylc(a: &Yp) -> Poly {
    a.last().expect("nonzero").clone()
}

fn yscale(a: &Yp, c: &Poly) -> Yp {
    norm(a.iter().map(|x| x * c).collect())
}

fn ysub(a: &Yp, b: &Yp) -> Yp {
    let ctx = a
        .first()
        .or_else(|| b.first())
        .expect("not both empty")
        .ctx()
        .clone();
    let n = a.len().max(b.len());
    let zero = Poly::zero(&ctx);
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).unwrap_or(&zero);
            let y = b.get(i).unwrap_or(&zero);
            x - y
        })
        .collect();
    norm(out)
}

fn yshift(a: &Yp, n: usize) -> Yp {
    if a.is_empty() {
        return Vec::new();
    }
    let ctx = a[0].ctx().clone();
    let mut out = vec![Poly::zero(&ctx); n];
    out.extend(a.iter().cloned());
    out
}

/// Pseudo-remainder: the R of `lc(b)^(deg a - deg b + 1) * a = q*b + R`.
fn prem(a: &Yp, b: &Yp) -> Yp {
    let db = ydeg(b).expect("b nonzero");
    let lb = ylc(b);
    let da = ydeg(a).expect("a nonzero");
    debug_assert!(da >= db);
    let mut e = da - db + 1;
    let mut r = a.clone();
    while ydeg(&r).map_or(false, |d| d >= db) {
        let dr = ydeg(&r).unwrap();
        let lr = ylc(&r);
        r = ysub(&yscale(&r, &lb), &yshift(&yscale(b, &lr), dr - db));
        e -= 1;
    }
    // Pay out the remaining powers of lc(b) so the identity holds exactly.
    let mut lead = Poly::one(lb.ctx());
    for _ in 0..e {
        lead = &lead * &lb;
    }
    yscale(&r, &lead)
}

fn ydiv_exact(a: &Yp, c: &Poly) -> Yp {
    a.iter().map(|x| x.exact_div(c)).collect()
}

fn poly_pow(base: &Poly, e: usize) -> Poly {
    let mut acc = Poly::one(base.ctx());
    for _ in 0..e {
        acc = &acc * base;
    }
    acc
}

/// Resultant over R by the subresultant polynomial remainder sequence.
fn subresultant(a0: Yp, b0: Yp) -> Poly {
    let mut a = norm(a0);
    let mut b = norm(b0);
    let ctx = a[0].ctx().clone();
    let mut negate = false;
    if ydeg(&a) < ydeg(&b) {
        if ydeg(&a).unwrap_or(0) % 2 == 1 && ydeg(&b).unwrap_or(0) % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if ydeg(&b) == Some(0) {
        let r = poly_pow(&ylc(&b), ydeg(&a).unwrap_or(0));
        return signed(r, negate);
    }
    let mut g = Poly::one(&ctx);
    let mut h = Poly::one(&ctx);
    loop {
        let da = ydeg(&a).unwrap();
        let db = ydeg(&b).unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        a = b;
        let divisor = &g * &poly_pow(&h, delta);
        b = if r.is_empty() {
            Vec::new()
        } else {
            ydiv_exact(&r, &divisor)
        };
        g = ylc(&a);
        h = if delta == 0 {
            h
        } else {
            poly_pow(&g, delta).exact_div(&poly_pow(&h, delta - 1))
        };
        if b.is_empty() {
            // Positive-degree gcd survived: the resultant vanishes.
            return Poly::zero(&ctx);
        }
        if ydeg(&b) == Some(0) {
            let da = ydeg(&a).unwrap();
            let num = poly_pow(&ylc(&b), da);
            let res = num.exact_div(&poly_pow(&h, da - 1));
            return signed(res, negate);
        }
    }
}

fn signed(p: Poly, negate: bool) -> Poly {
    if negate {
        -&p
    } else {
        p
    }
}
