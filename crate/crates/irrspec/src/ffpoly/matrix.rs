//! Square matrices over `F_q` and division-free characteristic polynomials.

use super::{Ctx, FfError, FieldElem, Poly};

/// Square matrix over a field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ctx: Ctx,
    n: usize,
    entries: Vec<FieldElem>, // row-major
}

impl Matrix {
    pub fn new(ctx: &Ctx, n: usize, entries: Vec<FieldElem>) -> Result<Matrix, FfError> {
        if entries.len() != n * n {
            return Err(FfError::Parse(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Matrix {
            ctx: ctx.clone(),
            n,
            entries,
        })
    }

    pub fn zero(ctx: &Ctx, n: usize) -> Matrix {
        Matrix {
            ctx: ctx.clone(),
            n,
            entries: vec![ctx.zero(); n * n],
        }
    }

    pub fn identity(ctx: &Ctx, n: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.entries[i * self.n + j] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let ctx = &self.ctx;
        let mut out = Matrix::zero(ctx, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = ctx.zero();
                for k in 0..self.n {
                    let t = ctx.mul(self.get(i, k), other.get(k, j));
                    acc = ctx.add(&acc, &t);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// `det(X*I - M)` by the Berkowitz algorithm: no divisions, valid in every
    /// characteristic. The result is monic of degree `n`.
    pub fn charpoly(&self) -> Poly {
        let ctx = &self.ctx;
        let n = self.n;
        // Coefficient vector of the characteristic polynomial of the leading
        // r x r minor, highest power first; starts at r = 0 with [1].
        let mut coeffs: Vec<FieldElem> = vec![ctx.one()];
        for r in 1..=n {
            // Toeplitz column for the r-th step:
            // [1, -a, -(R S), -(R M S), -(R M^2 S), ...]
            let a = self.get(r - 1, r - 1).clone();
            let row: Vec<FieldElem> = (0..r - 1).map(|j| self.get(r - 1, j).clone()).collect();
            let col: Vec<FieldElem> = (0..r - 1).map(|i| self.get(i, r - 1).clone()).collect();

            let mut toeplitz = Vec::with_capacity(r + 1);
            toeplitz.push(ctx.one());
            toeplitz.push(ctx.neg(&a));
            let mut vec = col.clone();
            for _ in 0..r.saturating_sub(1) {
                let mut dot = ctx.zero();
                for (x, y) in row.iter().zip(&vec) {
                    dot = ctx.add(&dot, &ctx.mul(x, y));
                }
                toeplitz.push(ctx.neg(&dot));
                // vec <- M_{r-1} * vec
                let mut next = vec![ctx.zero(); r - 1];
                for i in 0..r - 1 {
                    let mut acc = ctx.zero();
                    for k in 0..r - 1 {
                        acc = ctx.add(&acc, &ctx.mul(self.get(i, k), &vec[k]));
                    }
                    next[i] = acc;
                }
                vec = next;
            }

            // coeffs <- lower-triangular Toeplitz(toeplitz) * coeffs
            let mut next = vec![ctx.zero(); r + 1];
            for (i, slot) in next.iter_mut().enumerate() {
                let mut acc = ctx.zero();
                for j in 0..coeffs.len() {
                    if i >= j && i - j < toeplitz.len() {
                        acc = ctx.add(&acc, &ctx.mul(&toeplitz[i - j], &coeffs[j]));
                    }
                }
                *slot = acc;
            }
            coeffs = next;
        }
        // coeffs holds the polynomial highest power first.
        coeffs.reverse();
        Poly::new(ctx, coeffs)
    }

    /// Determinant via the constant term of the characteristic polynomial:
    /// `det(M) = (-1)^n * charpoly(0)`.
    pub fn det(&self) -> FieldElem {
        let cp = self.charpoly();
        let c0 = cp.coeff(0);
        if self.n % 2 == 1 {
            self.ctx.neg(&c0)
        } else {
            c0
        }
    }

    /// Companion matrix of a monic polynomial.
    pub fn companion(f: &Poly) -> Matrix {
        let ctx = f.ctx().clone();
        let n = f.degree().expect("nonconstant");
        assert!(n >= 1);
        debug_assert_eq!(f.leading(), ctx.one());
        let mut m = Matrix::zero(&ctx, n);
        for i in 1..n {
            m.set(i, i - 1, ctx.one());
        }
        for i in 0..n {
            m.set(i, n - 1, ctx.neg(&f.coeff(i)));
        }
        m
    }
}
