//! Text format for polynomials and matrices.
//!
//! Terms `c*X^e` joined by `+`, with coefficients written as integers in
//! `[0, p)` over prime fields and as `[c0,c1,...]` coordinate lists over
//! extensions. Variables are `X` and `T`. Printing is canonical (descending
//! powers, unit coefficients omitted) and round-trips through the parser.

use std::fmt;

use super::{BiPoly, Ctx, FfError, FieldElem, Matrix, Poly};

/// Split on `sep` at bracket depth zero.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_elem(ctx: &Ctx, s: &str) -> Result<FieldElem, FfError> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let coords: Result<Vec<u64>, _> = inner
            .split(',')
            .map(|c| c.trim().parse::<u64>())
            .collect();
        let coords =
            coords.map_err(|_| FfError::Parse(format!("bad coordinate list `{s}`")))?;
        ctx.from_coords(&coords)
    } else {
        let v: u64 = s
            .parse()
            .map_err(|_| FfError::Parse(format!("bad coefficient `{s}`")))?;
        Ok(ctx.from_u64(v))
    }
}

fn fmt_elem_text(ctx: &Ctx, e: &FieldElem) -> String {
    ctx.fmt_elem(e)
}

/// Parse one `+`-separated term into `(t_pow, x_pow, coefficient)`.
fn parse_term(ctx: &Ctx, term: &str) -> Result<(usize, usize, FieldElem), FfError> {
    let term = term.trim();
    if term.is_empty() {
        return Err(FfError::Parse("empty term".into()));
    }
    let mut coeff = ctx.one();
    let mut t_pow = 0usize;
    let mut x_pow = 0usize;
    for factor in split_top(term, '*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(FfError::Parse(format!("empty factor in `{term}`")));
        }
        let (var, pow_str) = match factor.split_once('^') {
            Some((v, p)) => (v.trim(), Some(p.trim())),
            None => (factor, None),
        };
        match var {
            "X" | "T" => {
                let e: usize = match pow_str {
                    Some(p) => p
                        .parse()
                        .map_err(|_| FfError::Parse(format!("bad exponent in `{factor}`")))?,
                    None => 1,
                };
                if var == "X" {
                    x_pow += e;
                } else {
                    t_pow += e;
                }
            }
            _ => {
                if pow_str.is_some() {
                    return Err(FfError::Parse(format!("bad factor `{factor}`")));
                }
                let c = parse_elem(ctx, factor)?;
                coeff = ctx.mul(&coeff, &c);
            }
        }
    }
    Ok((t_pow, x_pow, coeff))
}

/// Parse a (possibly bivariate) polynomial in `T` and `X`.
pub fn parse_bipoly(ctx: &Ctx, s: &str) -> Result<BiPoly, FfError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(FfError::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    for part in split_top(s, '+') {
        terms.push(parse_term(ctx, part)?);
    }
    Ok(BiPoly::from_terms(ctx, &terms))
}

/// Parse a univariate polynomial; either variable name is accepted but mixing
/// both is an error.
pub fn parse_poly(ctx: &Ctx, s: &str) -> Result<Poly, FfError> {
    let bp = parse_bipoly(ctx, s)?;
    match (bp.deg_t().unwrap_or(0) > 0, bp.deg_x().unwrap_or(0) > 0) {
        (true, true) => Err(FfError::Parse(format!(
            "`{s}` uses both T and X where one variable was expected"
        ))),
        (true, false) => bp.to_univariate(super::Var::T),
        _ => bp.to_univariate(super::Var::X),
    }
}

fn fmt_term(
    ctx: &Ctx,
    coeff: &FieldElem,
    parts: &[(&str, usize)],
    out: &mut Vec<String>,
) {
    let mut factors: Vec<String> = Vec::new();
    let vars: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| {
            if *e == 1 {
                (*v).to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if vars.is_empty() || coeff != &ctx.one() {
        factors.push(fmt_elem_text(ctx, coeff));
    }
    factors.extend(vars);
    out.push(factors.join("*"));
}

/// Canonical text for a univariate polynomial under a chosen variable name.
pub fn poly_to_text(f: &Poly, var: &str) -> String {
    let ctx = f.ctx();
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = Vec::new();
    for (e, c) in f.coeffs().iter().enumerate().rev() {
        if ctx.is_zero(c) {
            continue;
        }
        fmt_term(ctx, c, &[(var, e)], &mut out);
    }
    out.join("+")
}

/// Canonical text for a bivariate polynomial (descending `X` power, then
/// descending `T` power).
pub fn bipoly_to_text(f: &BiPoly) -> String {
    let ctx = f.ctx();
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms = f.terms();
    terms.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
    let mut out = Vec::new();
    for (t, x, c) in &terms {
        fmt_term(ctx, c, &[("T", *t), ("X", *x)], &mut out);
    }
    out.join("+")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_to_text(self, "X"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", bipoly_to_text(self))
    }
}

/// Parse a matrix from `row;row;...` with comma-separated entries.
pub fn parse_matrix(ctx: &Ctx, s: &str) -> Result<Matrix, FfError> {
    let rows: Vec<&str> = s.trim().split(';').collect();
    let n = rows.len();
    let mut entries = Vec::with_capacity(n * n);
    for row in &rows {
        let cells = split_top(row, ',');
        if cells.len() != n {
            return Err(FfError::Parse(format!(
                "matrix row `{row}` has {} entries, expected {n}",
                cells.len()
            )));
        }
        for cell in cells {
            entries.push(parse_elem(ctx, cell)?);
        }
    }
    Matrix::new(ctx, n, entries)
}

pub fn matrix_to_text(m: &Matrix) -> String {
    let ctx = m.ctx();
    (0..m.size())
        .map(|i| {
            (0..m.size())
                .map(|j| fmt_elem_text(ctx, m.get(i, j)))
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}
