//! Bivariate polynomials `f(T, X)` and the specialization `T -> a`.

use super::{Ctx, FfError, FieldElem, Poly};

/// Which variable of a bivariate polynomial an operation targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    T,
    X,
}

/// Dense bivariate polynomial, stored as coefficients of `X^j` that are
/// polynomials in `T`. The leading `X`-coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    ctx: Ctx,
    cols: Vec<Poly>,
}

/// Outcome of specializing `T -> a`: the resulting polynomial in `X`, whether
/// the `X`-degree survived, and whether the result is separable (its gcd with
/// its derivative is constant).
#[derive(Debug, Clone)]
pub struct SpecEval {
    pub poly: Poly,
    pub degree_preserved: bool,
    pub separable: bool,
}

impl BiPoly {
    pub fn new(ctx: &Ctx, mut cols: Vec<Poly>) -> BiPoly {
        while cols.last().map_or(false, |c| c.is_zero()) {
            cols.pop();
        }
        BiPoly {
            ctx: ctx.clone(),
            cols,
        }
    }

    pub fn zero(ctx: &Ctx) -> BiPoly {
        BiPoly {
            ctx: ctx.clone(),
            cols: Vec::new(),
        }
    }

    /// Lift a univariate polynomial in `X`.
    pub fn from_poly_in_x(f: &Poly) -> BiPoly {
        let ctx = f.ctx().clone();
        let cols = f
            .coeffs()
            .iter()
            .map(|c| Poly::constant(&ctx, c.clone()))
            .collect();
        BiPoly::new(&ctx, cols)
    }

    /// Lift a univariate polynomial in `T`.
    pub fn from_poly_in_t(f: &Poly) -> BiPoly {
        BiPoly::new(f.ctx(), vec![f.clone()])
    }

    /// Build from monomials `(t_pow, x_pow, coefficient)`.
    pub fn from_terms(ctx: &Ctx, terms: &[(usize, usize, FieldElem)]) -> BiPoly {
        let max_x = terms
            .iter()
            .filter(|(_, _, c)| !ctx.is_zero(c))
            .map(|&(_, j, _)| j)
            .max();
        let Some(max_x) = max_x else {
            return BiPoly::zero(ctx);
        };
        let mut cols: Vec<Vec<FieldElem>> = vec![Vec::new(); max_x + 1];
        for (i, j, c) in terms {
            if ctx.is_zero(c) {
                continue;
            }
            let col = &mut cols[*j];
            if col.len() <= *i {
                col.resize(*i + 1, ctx.zero());
            }
            col[*i] = ctx.add(&col[*i], c);
        }
        BiPoly::new(
            ctx,
            cols.into_iter().map(|c| Poly::new(ctx, c)).collect(),
        )
    }

    /// Monomials `(t_pow, x_pow, coefficient)` with nonzero coefficients.
    pub fn terms(&self) -> Vec<(usize, usize, FieldElem)> {
        let mut out = Vec::new();
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.coeffs().iter().enumerate() {
                if !self.ctx.is_zero(c) {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    /// Coefficients of `X^j`, as polynomials in `T`.
    pub fn cols(&self) -> &[Poly] {
        &self.cols
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.cols.len().checked_sub(1)
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.cols.iter().filter_map(|c| c.degree()).max()
    }

    /// Total degree: the largest `i + j` over nonzero monomials `T^i X^j`.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms().iter().map(|&(i, j, _)| i + j).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<usize> {
        match var {
            Var::T => self.deg_t(),
            Var::X => self.deg_x(),
        }
    }

    /// Swap the roles of `T` and `X`.
    pub fn transpose(&self) -> BiPoly {
        let terms: Vec<(usize, usize, FieldElem)> = self
            .terms()
            .into_iter()
            .map(|(i, j, c)| (j, i, c))
            .collect();
        BiPoly::from_terms(&self.ctx, &terms)
    }

    /// View as a polynomial in `var` whose coefficients live in `F_q[other]`.
    pub(crate) fn coeffs_in(&self, var: Var) -> Vec<Poly> {
        match var {
            Var::X => self.cols.clone(),
            Var::T => self.transpose().cols,
        }
    }

    /// Extract a univariate polynomial in `var`; the other variable must be
    /// absent.
    pub fn to_univariate(&self, var: Var) -> Result<Poly, FfError> {
        let other = match var {
            Var::T => Var::X,
            Var::X => Var::T,
        };
        if self.degree_in(other).unwrap_or(0) > 0 {
            return Err(FfError::Parse(format!(
                "expected a polynomial in {:?} only",
                var
            )));
        }
        let coeffs = self
            .coeffs_in(var)
            .iter()
            .map(|c| c.coeff(0))
            .collect();
        Ok(Poly::new(&self.ctx, coeffs))
    }

    /// The specialization `T -> a`, with the acceptance flags used by every
    /// sampling experiment.
    pub fn eval_partial(&self, a: &FieldElem) -> SpecEval {
        let coeffs = self.cols.iter().map(|c| c.eval(a)).collect();
        let poly = Poly::new(&self.ctx, coeffs);
        let degree_preserved = poly.degree() == self.deg_x();
        let separable = match poly.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let g = poly.gcd(&poly.derivative()).expect("same ctx");
                g.degree() == Some(0)
            }
        };
        SpecEval {
            poly,
            degree_preserved,
            separable,
        }
    }

    /// Substitute `X -> a*T + b`, producing a polynomial in `T`.
    pub fn substitute_x_linear(&self, a: &FieldElem, b: &FieldElem) -> Poly {
        let ctx = &self.ctx;
        let line = Poly::new(ctx, vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero(ctx);
        for col in self.cols.iter().rev() {
            acc = &(&acc * &line) + col;
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: Var) -> BiPoly {
        let terms: Vec<(usize, usize, FieldElem)> = self
            .terms()
            .into_iter()
            .filter_map(|(i, j, c)| {
                let (e, rest) = match var {
                    Var::T => (i, (i.wrapping_sub(1), j)),
                    Var::X => (j, (i, j.wrapping_sub(1))),
                };
                if e == 0 {
                    return None;
                }
                let scaled = self.ctx.mul(&c, &self.ctx.from_u64(e as u64));
                Some((rest.0, rest.1, scaled))
            })
            .collect();
        BiPoly::from_terms(&self.ctx, &terms)
    }

    /// `T`-content: gcd of the `X`-coefficients in `F_q[T]`.
    pub fn content_in_t(&self) -> Poly {
        let mut acc = Poly::zero(&self.ctx);
        for col in &self.cols {
            acc = acc.gcd(col).expect("same ctx");
        }
        acc
    }
}
