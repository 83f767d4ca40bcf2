//! Irreducibility testing and complete factorization over `F_q`.
//!
//! `is_irreducible` is the Rabin test: `f` of degree `n` is irreducible iff
//! `X^(q^n) = X (mod f)` and `gcd(X^(q^(n/l)) - X, f) = 1` for every prime
//! `l | n`. Factorization runs squarefree decomposition (with p-th root
//! extraction in characteristic `p`), then distinct-degree splitting, then
//! seeded equal-degree splitting. In characteristic 2 the equal-degree stage
//! uses the additive trace map, since the square-root trick degenerates.

use std::fmt;

use super::{Ctx, FfError, FieldElem, Poly, Rng};

/// Complete factorization: a unit and monic irreducible factors with
/// multiplicities, in a canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElem,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// Multiply the parts back together.
    pub fn product(&self, ctx: &Ctx) -> Poly {
        let mut acc = Poly::constant(ctx, self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

/// Multiset of irreducible-factor degrees (with multiplicity), plus a
/// squarefree flag. Degrees are kept sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shape {
    degrees: Vec<usize>,
    squarefree: bool,
}

impl Shape {
    pub fn new(mut degrees: Vec<usize>, squarefree: bool) -> Shape {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Shape {
            degrees,
            squarefree,
        }
    }

    /// Degrees sorted descending.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// True when the polynomial was irreducible: a single factor carrying the
    /// whole degree.
    pub fn is_irreducible(&self) -> bool {
        self.degrees.len() == 1
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("+"))?;
        if !self.squarefree {
            write!(f, "*")?;
        }
        Ok(())
    }
}

impl Poly {
    /// Rabin irreducibility test. Errors on constants and the zero polynomial.
    pub fn is_irreducible(&self) -> Result<bool, FfError> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(FfError::ConstantInput),
        };
        if n == 1 {
            return Ok(true);
        }
        let ctx = self.ctx().clone();
        let f = self.monic();
        let q = ctx.q() as u128;
        let x = Poly::x(&ctx);

        // frob[i] = X^(q^i) mod f, built by repeated q-th powering.
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.clone());
        for _ in 0..n {
            let prev = frob.last().unwrap();
            frob.push(prev.powmod(q, &f)?);
        }
        if frob[n] != x {
            return Ok(false);
        }
        for l in prime_divisors(n as u64) {
            let m = n / l as usize;
            let g = (&frob[m] - &x).gcd(&f)?;
            if g.degree() != Some(0) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Factor into monic irreducibles, with the equal-degree stage seeded from
    /// a fixed constant. Deterministic across runs and platforms.
    pub fn factor(&self) -> Result<Factorization, FfError> {
        let mut rng = Rng::new(0x1005_F0CA_CC1A_0001);
        self.factor_seeded(&mut rng)
    }

    /// Factor with a caller-supplied generator for the equal-degree stage.
    pub fn factor_seeded(&self, rng: &mut Rng) -> Result<Factorization, FfError> {
        if self.is_zero() {
            return Err(FfError::ZeroInput);
        }
        let unit = self.leading();
        let f = self.monic();
        let mut factors: Vec<(Poly, usize)> = Vec::new();
        for (part, mult) in squarefree_parts(&f)? {
            for (prod, d) in distinct_degree(&part)? {
                for irr in equal_degree(&prod, d, rng)? {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|a, b| factor_key(&a.0).cmp(&factor_key(&b.0)));
        Ok(Factorization { unit, factors })
    }

    /// Factorization shape: factor degrees with multiplicity plus a
    /// squarefree flag.
    pub fn shape(&self) -> Result<Shape, FfError> {
        if self.degree().map_or(true, |d| d < 1) {
            return Err(FfError::ZeroInput);
        }
        let fac = self.factor()?;
        let mut degrees = Vec::new();
        for (g, m) in &fac.factors {
            for _ in 0..*m {
                degrees.push(g.degree().unwrap());
            }
        }
        Ok(Shape::new(degrees, fac.is_squarefree()))
    }
}

fn factor_key(f: &Poly) -> (usize, Vec<u64>) {
    let ctx = f.ctx();
    let digits = f.coeffs().iter().rev().map(|c| ctx.index_of(c)).collect();
    (f.degree().unwrap_or(0), digits)
}

/// Pairwise-coprime squarefree parts of a monic `f` with multiplicities.
fn squarefree_parts(f: &Poly) -> Result<Vec<(Poly, usize)>, FfError> {
    let ctx = f.ctx().clone();
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(X^p); pull out the p-th root and scale multiplicities.
        let g = pth_root_poly(f);
        let inner = squarefree_parts(&g)?;
        return Ok(inner
            .into_iter()
            .map(|(h, m)| (h, m * ctx.p() as usize))
            .collect());
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&df)?;
    let mut w = f.exact_div(&c);
    let mut i = 1usize;
    while w.degree() != Some(0) {
        let y = w.gcd(&c)?;
        let z = w.exact_div(&y);
        if z.degree().map_or(false, |d| d >= 1) {
            out.push((z, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if c.degree().map_or(false, |d| d >= 1) {
        let g = pth_root_poly(&c);
        for (h, m) in squarefree_parts(&g)? {
            out.push((h, m * ctx.p() as usize));
        }
    }
    Ok(out)
}

/// Inverse of `g -> g^p` for polynomials with zero derivative: every exponent
/// is a multiple of `p` and each coefficient gets its p-th root.
fn pth_root_poly(f: &Poly) -> Poly {
    let ctx = f.ctx().clone();
    let p = ctx.p() as usize;
    let deg = f.degree().expect("nonzero");
    debug_assert_eq!(deg % p, 0);
    let coeffs = (0..=deg / p)
        .map(|i| ctx.pth_root(&f.coeff(i * p)))
        .collect();
    Poly::new(&ctx, coeffs)
}

/// Split a monic squarefree `f` into products of irreducibles of equal degree.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>, FfError> {
    let ctx = f.ctx().clone();
    let q = ctx.q() as u128;
    let x = Poly::x(&ctx);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.degree().map_or(false, |n| n >= 2 * (d + 1)) {
        d += 1;
        h = h.powmod(q, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if g.degree().map_or(false, |n| n >= 1) {
            out.push((g.clone(), d));
            rest = rest.exact_div(&g);
            h = h.rem(&rest)?;
        }
    }
    if rest.degree().map_or(false, |n| n >= 1) {
        let n = rest.degree().unwrap();
        out.push((rest, n));
    }
    Ok(out)
}

/// Cantor-Zassenhaus equal-degree splitting of a monic product of distinct
/// irreducibles of degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut Rng) -> Result<Vec<Poly>, FfError> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let ctx = f.ctx().clone();
    let g = loop {
        let a = Poly::random_below(&ctx, n, rng);
        if a.degree().map_or(true, |da| da < 1) {
            continue;
        }
        let split = if ctx.p() == 2 {
            // Sum of 2^i-th powers: the F_2-trace of a on each factor field.
            let bits = ctx.k() as usize * d;
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..bits {
                t = (&t * &t).rem(f)?;
                acc = &acc + &t;
            }
            acc.gcd(f)?
        } else {
            // a^((q^d-1)/2) = (norm-like ladder)^((q-1)/2); splits the factors
            // by quadratic-residue behavior.
            let q = ctx.q() as u128;
            let mut t = a.clone();
            let mut prod = a.clone();
            for _ in 1..d {
                t = t.powmod(q, f)?;
                prod = (&prod * &t).rem(f)?;
            }
            let b = prod.powmod((q - 1) / 2, f)?;
            (&b - &Poly::one(&ctx)).gcd(f)?
        };
        let gd = split.degree().unwrap_or(0);
        if gd >= 1 && gd < n {
            break split;
        }
    };
    let mut left = equal_degree(&g, d, rng)?;
    let right = equal_degree(&f.exact_div(&g), d, rng)?;
    left.extend(right);
    Ok(left)
}

/// Exact count of monic irreducibles of degree `n` over the field: the
/// necklace formula `(1/n) sum_{d|n} mu(d) q^(n/d)`.
///
/// Panics if the count overflows `u64`; all supported scales fit.
pub fn count_irreducible(ctx: &Ctx, n: u32) -> u64 {
    assert!(n >= 1);
    let q = ctx.q() as i128;
    let mut total: i128 = 0;
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = moebius(d as u64);
        if mu == 0 {
            continue;
        }
        let term = q.checked_pow(n / d).expect("count overflows");
        total += mu as i128 * term;
    }
    debug_assert!(total > 0 && total % n as i128 == 0);
    u64::try_from(total / n as i128).expect("count overflows")
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
