//! Dense univariate polynomials over a [`FieldCtx`].

use std::ops::{Add, Mul, Neg, Sub};

use super::{Ctx, FfError, FieldElem, Rng};

/// Polynomial with coefficients in `F_q`, lowest degree first, normalized so
/// the last stored coefficient is nonzero. The zero polynomial stores no
/// coefficients and has no degree.
#[derive(Debug, Clone)]
pub struct Poly {
    ctx: Ctx,
    coeffs: Vec<FieldElem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_field(&other.ctx) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.p().hash(state);
        self.ctx.k().hash(state);
        self.coeffs.hash(state);
    }
}

impl Poly {
    pub fn new(ctx: &Ctx, coeffs: Vec<FieldElem>) -> Poly {
        let mut p = Poly {
            ctx: ctx.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn zero(ctx: &Ctx) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Poly {
        Poly::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &Ctx, c: FieldElem) -> Poly {
        Poly::new(ctx, vec![c])
    }

    /// The monomial `X`.
    pub fn x(ctx: &Ctx) -> Poly {
        Poly::new(ctx, vec![ctx.zero(), ctx.one()])
    }

    /// Build from integer coefficients, lowest degree first.
    pub fn from_u64_coeffs(ctx: &Ctx, coeffs: &[u64]) -> Poly {
        Poly::new(ctx, coeffs.iter().map(|&c| ctx.from_u64(c)).collect())
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.ctx.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficient of `X^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> FieldElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn same_ctx(&self, other: &Poly) -> bool {
        self.ctx.same_field(&other.ctx)
    }

    fn check_ctx(&self, other: &Poly) -> Result<(), FfError> {
        if self.same_ctx(other) {
            Ok(())
        } else {
            Err(FfError::CtxMismatch)
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        if self.ctx.is_zero(c) {
            return Poly::zero(&self.ctx);
        }
        Poly::new(
            &self.ctx,
            self.coeffs.iter().map(|a| self.ctx.mul(a, c)).collect(),
        )
    }

    /// Multiply by `X^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.ctx.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// Scalar multiple with leading coefficient one; `monic(0) = 0`.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = self.ctx.inv(lead).expect("leading coefficient nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.ctx.mul(c, &self.ctx.from_u64(i as u64)))
            .collect();
        Poly::new(&self.ctx, coeffs)
    }

    pub fn eval(&self, a: &FieldElem) -> FieldElem {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ctx.add(&self.ctx.mul(&acc, a), c);
        }
        acc
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), FfError> {
        self.check_ctx(d)?;
        if d.is_zero() {
            return Err(FfError::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        if self.degree().map_or(true, |n| n < dd) {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let ctx = &self.ctx;
        let lead_inv = ctx.inv(&d.leading()).expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        let qn = rem.len() - dd;
        let mut quot = vec![ctx.zero(); qn];
        for i in (0..qn).rev() {
            let c = ctx.mul(&rem[i + dd], &lead_inv);
            if !ctx.is_zero(&c) {
                quot[i] = c.clone();
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = ctx.mul(&c, dc);
                    rem[i + j] = ctx.sub(&rem[i + j], &t);
                }
            }
        }
        Ok((Poly::new(ctx, quot), Poly::new(ctx, rem)))
    }

    pub fn rem(&self, m: &Poly) -> Result<Poly, FfError> {
        Ok(self.divrem(m)?.1)
    }

    /// Exact division; panics in debug builds if the remainder is nonzero.
    pub(crate) fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic greatest common divisor; `gcd(f, 0) = monic(f)`, `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, FfError> {
        self.check_ctx(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// `base^e mod m` by square-and-multiply. Requires `deg m >= 1`.
    pub fn powmod(&self, mut e: u128, m: &Poly) -> Result<Poly, FfError> {
        self.check_ctx(m)?;
        if m.degree().map_or(true, |d| d < 1) {
            return Err(FfError::ZeroModulus);
        }
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m)?;
            }
            base = (&base * &base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `self(g)` by Horner evaluation in the polynomial ring.
    pub fn compose(&self, g: &Poly) -> Result<Poly, FfError> {
        self.check_ctx(g)?;
        let mut acc = Poly::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Poly::constant(&self.ctx, c.clone());
        }
        Ok(acc)
    }

    /// Uniformly random polynomial of exact degree `deg` (leading coefficient
    /// nonzero, or one when `monic`).
    pub fn random(ctx: &Ctx, deg: usize, monic: bool, rng: &mut Rng) -> Poly {
        let mut coeffs = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            coeffs.push(ctx.random_elem(rng));
        }
        coeffs.push(if monic {
            ctx.one()
        } else {
            ctx.random_nonzero(rng)
        });
        Poly::new(ctx, coeffs)
    }

    /// Random polynomial of degree strictly below `bound` (possibly zero).
    pub(crate) fn random_below(ctx: &Ctx, bound: usize, rng: &mut Rng) -> Poly {
        let coeffs = (0..bound).map(|_| ctx.random_elem(rng)).collect();
        Poly::new(ctx, coeffs)
    }

    /// The monic polynomial of degree `deg` whose coefficient tuple has the
    /// given index in the canonical enumeration `0..q^deg`.
    pub fn monic_at(ctx: &Ctx, deg: usize, mut index: u64) -> Poly {
        let mut coeffs = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            coeffs.push(ctx.elem_at(index % ctx.q()));
            index /= ctx.q();
        }
        coeffs.push(ctx.one());
        Poly::new(ctx, coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        assert!(self.same_ctx(other), "field mismatch");
        let ctx = &self.ctx;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ctx.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(ctx, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        assert!(self.same_ctx(other), "field mismatch");
        let ctx = &self.ctx;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| ctx.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(ctx, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let ctx = &self.ctx;
        Poly::new(ctx, self.coeffs.iter().map(|c| ctx.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        assert!(self.same_ctx(other), "field mismatch");
        let ctx = &self.ctx;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(ctx);
        }
        let mut coeffs = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = ctx.mul(a, b);
                coeffs[i + j] = ctx.add(&coeffs[i + j], &t);
            }
        }
        Poly::new(ctx, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::field_new;

    fn fp(p: u64) -> Ctx {
        field_new(p, 1).unwrap()
    }

    #[test]
    fn zero_has_no_degree() {
        let f5 = fp(5);
        assert_eq!(Poly::zero(&f5).degree(), None);
        assert_eq!(Poly::one(&f5).degree(), Some(0));
        assert_eq!(Poly::x(&f5).degree(), Some(1));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let f5 = fp(5);
        let p = Poly::from_u64_coeffs(&f5, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn divrem_reconstructs() {
        let f7 = fp(7);
        let f = Poly::from_u64_coeffs(&f7, &[3, 0, 1, 5, 2]);
        let d = Poly::from_u64_coeffs(&f7, &[1, 4, 3]);
        let (q, r) = f.divrem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, f);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
    }

    #[test]
    fn gcd_known_cases() {
        let f5 = fp(5);
        // gcd(X^2 - 1, X - 1) = X - 1 over F_5
        let a = Poly::from_u64_coeffs(&f5, &[4, 0, 1]);
        let b = Poly::from_u64_coeffs(&f5, &[4, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b.monic());

        // gcd(f, 0) = monic(f)
        let f = Poly::from_u64_coeffs(&f5, &[2, 4]);
        assert_eq!(f.gcd(&Poly::zero(&f5)).unwrap(), f.monic());
        assert_eq!(
            Poly::zero(&f5).gcd(&Poly::zero(&f5)).unwrap(),
            Poly::zero(&f5)
        );

        // gcd(X^2+1, X^2+X) = X+1 over F_2: (X+1)^2 and X(X+1)
        let f2 = fp(2);
        let a = Poly::from_u64_coeffs(&f2, &[1, 0, 1]);
        let b = Poly::from_u64_coeffs(&f2, &[0, 1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), Poly::from_u64_coeffs(&f2, &[1, 1]));
    }

    #[test]
    fn gcd_rejects_mixed_fields() {
        let a = Poly::x(&fp(3));
        let b = Poly::x(&fp(5));
        assert_eq!(a.gcd(&b).unwrap_err(), FfError::CtxMismatch);
    }

    #[test]
    fn powmod_known_cases() {
        let f3 = fp(3);
        let x = Poly::x(&f3);
        let m = Poly::from_u64_coeffs(&f3, &[1, 0, 1]); // X^2 + 1

        // X^1 mod X^2 = X
        let x2 = Poly::from_u64_coeffs(&f3, &[0, 0, 1]);
        assert_eq!(x.powmod(1, &x2).unwrap(), x);

        // X^2 = -1 mod X^2+1, so X^4 = 1 and X^9 = X
        assert_eq!(x.powmod(4, &m).unwrap(), Poly::one(&f3));
        assert_eq!(x.powmod(9, &m).unwrap(), x);
    }

    #[test]
    fn powmod_rejects_constant_modulus() {
        let f3 = fp(3);
        let x = Poly::x(&f3);
        assert_eq!(
            x.powmod(2, &Poly::one(&f3)).unwrap_err(),
            FfError::ZeroModulus
        );
        assert_eq!(
            x.powmod(2, &Poly::zero(&f3)).unwrap_err(),
            FfError::ZeroModulus
        );
    }

    #[test]
    fn compose_known_cases() {
        let f3 = fp(3);
        // (X+1)^2 = X^2 + 2X + 1 over F_3
        let f = Poly::from_u64_coeffs(&f3, &[0, 0, 1]);
        let g = Poly::from_u64_coeffs(&f3, &[1, 1]);
        assert_eq!(
            f.compose(&g).unwrap(),
            Poly::from_u64_coeffs(&f3, &[1, 2, 1])
        );

        // f(X) = f, and (X-1)(g) = g - 1
        let h = Poly::from_u64_coeffs(&f3, &[2, 1, 2]);
        assert_eq!(h.compose(&Poly::x(&f3)).unwrap(), h);
        let xm1 = Poly::from_u64_coeffs(&f3, &[2, 1]);
        assert_eq!(
            xm1.compose(&h).unwrap(),
            &h - &Poly::one(&f3)
        );
    }

    #[test]
    fn compose_degree_multiplies() {
        let f5 = fp(5);
        let f = Poly::from_u64_coeffs(&f5, &[1, 2, 3, 1]);
        let g = Poly::from_u64_coeffs(&f5, &[4, 0, 2]);
        assert_eq!(f.compose(&g).unwrap().degree(), Some(6));
    }

    #[test]
    fn random_poly_contract() {
        let f7 = fp(7);
        let mut a = Rng::new(99);
        let mut b = Rng::new(99);
        let pa = Poly::random(&f7, 3, false, &mut a);
        let pb = Poly::random(&f7, 3, false, &mut b);
        assert_eq!(pa, pb);
        assert_eq!(pa.degree(), Some(3));
        let m = Poly::random(&f7, 4, true, &mut a);
        assert_eq!(m.leading(), f7.one());
        assert_eq!(m.degree(), Some(4));
    }

    #[test]
    fn monic_enumeration_covers_all() {
        let f3 = fp(3);
        let mut seen = std::collections::HashSet::new();
        for i in 0..9 {
            let f = Poly::monic_at(&f3, 2, i);
            assert_eq!(f.degree(), Some(2));
            assert_eq!(f.leading(), f3.one());
            seen.insert(format!("{:?}", f.coeffs()));
        }
        assert_eq!(seen.len(), 9);
    }
}
