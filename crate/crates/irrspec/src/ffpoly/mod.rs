//! Finite fields `F_{p^k}` and dense univariate polynomial arithmetic.
//!
//! A [`FieldCtx`] fixes the prime `p`, the extension degree `k`, and a
//! canonical irreducible modulus, so two contexts with the same `(p, k)` are
//! interchangeable. Elements are coordinate vectors over `F_p` with respect to
//! the modulus; polynomials are dense coefficient vectors, lowest degree
//! first, with no stored trailing zeros. The zero polynomial has no degree
//! (`degree()` is `None`) rather than a `-1` sentinel.
//!
//! The module provides the arithmetic every experiment in this crate leans
//! on: gcd, modular exponentiation, the Rabin irreducibility test, complete
//! factorization (squarefree / distinct-degree / equal-degree), bivariate
//! specialization, subresultant resultants, and division-free characteristic
//! polynomials.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

mod bipoly;
mod embed;
mod factor;
mod matrix;
mod poly;
mod resultant;
pub mod rng;
mod text;

pub use bipoly::{BiPoly, SpecEval, Var};
pub use embed::{embed, Embedding};
pub use factor::{count_irreducible, Factorization, Shape};
pub use matrix::Matrix;
pub use poly::Poly;
pub use resultant::resultant;
pub use rng::Rng;
pub use text::{
    bipoly_to_text, matrix_to_text, parse_bipoly, parse_matrix, parse_poly, poly_to_text,
};

/// Errors raised by field and polynomial operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FfError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("cardinality {p}^{k} exceeds the representable bound")]
    Overflow { p: u64, k: u32 },
    #[error("operands belong to different fields")]
    CtxMismatch,
    #[error("modulus must have degree >= 1")]
    ZeroModulus,
    #[error("operation requires degree >= 1, got a constant")]
    ConstantInput,
    #[error("operation is undefined for the zero polynomial")]
    ZeroInput,
    #[error("division by zero")]
    DivisionByZero,
    #[error("bad input: {0}")]
    Parse(String),
}

/// Largest admissible field cardinality. Keeps every product of two scalars
/// inside `u128` and every exhaustive index inside `u64`.
const MAX_Q: u128 = 1 << 62;

/// The field `F_{p^k}`, with a canonical modulus for the extension.
///
/// The modulus is the lexicographically least monic irreducible of degree `k`
/// over `F_p`, comparing coefficient tuples from the highest degree down, so
/// any two builds of the same `(p, k)` agree exactly.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    p: u64,
    k: u32,
    q: u64,
    /// Coefficients of the modulus over `F_p`, lowest degree first, length `k + 1`.
    modulus: Vec<u64>,
}

/// Shared handle to a field context.
pub type Ctx = Arc<FieldCtx>;

/// An element of `F_{p^k}`: `k` coordinates over `F_p`, all reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    c: Vec<u64>,
}

impl FieldElem {
    pub fn coords(&self) -> &[u64] {
        &self.c
    }
}

/// Build the canonical context for `F_{p^k}`.
pub fn field_new(p: u64, k: u32) -> Result<Ctx, FfError> {
    if k < 1 {
        return Err(FfError::Parse("extension degree must be >= 1".into()));
    }
    if p < 2 || !is_prime_u64(p) {
        return Err(FfError::NonPrime(p));
    }
    let mut q: u128 = 1;
    for _ in 0..k {
        q = q.checked_mul(p as u128).ok_or(FfError::Overflow { p, k })?;
        if q > MAX_Q {
            return Err(FfError::Overflow { p, k });
        }
    }
    let modulus = if k == 1 {
        vec![0, 1] // X itself; never used for reduction at k = 1
    } else {
        canonical_modulus(p, k)
    };
    Ok(Arc::new(FieldCtx {
        p,
        k,
        q: q as u64,
        modulus,
    }))
}

/// Least monic irreducible of degree `k` over `F_p` in the high-degree-first
/// coefficient order.
fn canonical_modulus(p: u64, k: u32) -> Vec<u64> {
    let base = field_new(p, 1).expect("p already checked prime");
    let mut index = 0u64;
    loop {
        // index encodes (a_{k-1}, ..., a_0) with a_{k-1} most significant
        let mut coeffs = vec![0u64; k as usize + 1];
        coeffs[k as usize] = 1;
        let mut rest = index;
        for j in 0..k as usize {
            coeffs[j] = rest % p;
            rest /= p;
        }
        if rest == 0 {
            let f = Poly::from_u64_coeffs(&base, &coeffs);
            if f.is_irreducible().expect("degree k >= 2") {
                return coeffs;
            }
        }
        index += 1;
    }
}

impl FieldCtx {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field cardinality `q = p^k`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients over `F_p`, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn same_field(&self, other: &FieldCtx) -> bool {
        self.p == other.p && self.k == other.k
    }

    /// Field spec string, `p` for prime fields and `p^k` otherwise.
    pub fn spec_string(&self) -> String {
        if self.k == 1 {
            format!("{}", self.p)
        } else {
            format!("{}^{}", self.p, self.k)
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            c: vec![0; self.k as usize],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_u64(1)
    }

    /// Embed an integer as a constant, reduced mod `p`.
    pub fn from_u64(&self, v: u64) -> FieldElem {
        let mut c = vec![0; self.k as usize];
        c[0] = v % self.p;
        FieldElem { c }
    }

    /// Build an element from up to `k` coordinates, reducing each mod `p`.
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElem, FfError> {
        if coords.len() > self.k as usize {
            return Err(FfError::Parse(format!(
                "{} coordinates for an extension of degree {}",
                coords.len(),
                self.k
            )));
        }
        let mut c = vec![0; self.k as usize];
        for (i, &v) in coords.iter().enumerate() {
            c[i] = v % self.p;
        }
        Ok(FieldElem { c })
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.c.iter().all(|&v| v == 0)
    }

    /// Index of an element in the canonical enumeration `0..q` (base-`p`
    /// digits, first coordinate least significant).
    pub fn index_of(&self, a: &FieldElem) -> u64 {
        let mut idx = 0u64;
        for &v in a.c.iter().rev() {
            idx = idx * self.p + v;
        }
        idx
    }

    /// Element with the given canonical index.
    pub fn elem_at(&self, mut index: u64) -> FieldElem {
        debug_assert!(index < self.q);
        let mut c = vec![0; self.k as usize];
        for slot in c.iter_mut() {
            *slot = index % self.p;
            index /= self.p;
        }
        FieldElem { c }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let c = a
            .c
            .iter()
            .zip(&b.c)
            .map(|(&x, &y)| addm(x, y, self.p))
            .collect();
        FieldElem { c }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let c = a
            .c
            .iter()
            .zip(&b.c)
            .map(|(&x, &y)| subm(x, y, self.p))
            .collect();
        FieldElem { c }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let c = a.c.iter().map(|&x| subm(0, x, self.p)).collect();
        FieldElem { c }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem {
                c: vec![mulm(a.c[0], b.c[0], self.p)],
            };
        }
        // Schoolbook product followed by reduction mod the modulus.
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                prod[i + j] = addm(prod[i + j], mulm(x, y, self.p), self.p);
            }
        }
        self.reduce_vec(prod)
    }

    /// Reduce an `F_p` coefficient vector modulo the field modulus.
    fn reduce_vec(&self, mut v: Vec<u64>) -> FieldElem {
        let k = self.k as usize;
        for i in (k..v.len()).rev() {
            let lead = v[i];
            if lead != 0 {
                v[i] = 0;
                // modulus is monic: X^k = -(lower part)
                for j in 0..k {
                    let m = self.modulus[j];
                    if m != 0 {
                        let t = mulm(lead, m, self.p);
                        v[i - k + j] = subm(v[i - k + j], t, self.p);
                    }
                }
            }
        }
        v.truncate(k);
        FieldElem { c: v }
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        if self.k == 1 {
            return Some(FieldElem {
                c: vec![inv_mod_p(a.c[0], self.p)],
            });
        }
        // a^(q-2) = a^{-1} in F_q^x.
        Some(self.pow(a, (self.q - 2) as u128))
    }

    /// Inverse Frobenius `a -> a^{1/p}`, i.e. `a^(p^{k-1})`.
    pub fn pth_root(&self, a: &FieldElem) -> FieldElem {
        if self.k == 1 {
            return a.clone();
        }
        let e = (self.p as u128).pow(self.k - 1);
        self.pow(a, e)
    }

    /// Uniform element drawn from the rng.
    pub fn random_elem(&self, rng: &mut Rng) -> FieldElem {
        self.elem_at(rng.below(self.q))
    }

    /// Uniform nonzero element.
    pub fn random_nonzero(&self, rng: &mut Rng) -> FieldElem {
        self.elem_at(1 + rng.below(self.q - 1))
    }

    /// Text form of an element: an integer for prime fields, a `[c0,c1,...]`
    /// coordinate list for extensions.
    pub fn fmt_elem(&self, a: &FieldElem) -> String {
        if self.k == 1 {
            format!("{}", a.c[0])
        } else {
            let coords: Vec<String> = a.c.iter().map(|v| v.to_string()).collect();
            format!("[{}]", coords.join(","))
        }
    }
}

/// Parse a field spec string `p` or `p^k`.
pub fn parse_field_spec(s: &str) -> Result<Ctx, FfError> {
    let bad = |_| FfError::Parse(format!("bad field spec `{s}`"));
    match s.split_once('^') {
        Some((p, k)) => {
            let p: u64 = p.trim().parse().map_err(bad)?;
            let k: u32 = k.trim().parse().map_err(bad)?;
            field_new(p, k)
        }
        None => {
            let p: u64 = s.trim().parse().map_err(bad)?;
            field_new(p, 1)
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

// ---- scalar arithmetic mod p ----

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + p as u128 - b as u128;
    (s % p as u128) as u64
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime, a != 0
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == sp {
            return true;
        }
        if n % sp == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This base set is deterministic for every u64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_context() {
        let f2 = field_new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.modulus(), &[0, 1]); // X
    }

    #[test]
    fn canonical_modulus_f9_is_x2_plus_1() {
        // Exhausting the 9 monic quadratics over F_3 in lexicographic order,
        // X^2 is reducible and X^2+1 is the first irreducible.
        let f9 = field_new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        assert_eq!(f9.q(), 9);
    }

    #[test]
    fn canonical_modulus_f16() {
        // X^4, X^4+1 = (X+1)^4 and X^4+X = X(X+1)^3 all fail; X^4+X+1 is first.
        let f16 = field_new(2, 4).unwrap();
        assert_eq!(f16.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn four_is_not_prime() {
        assert_eq!(field_new(4, 1).unwrap_err(), FfError::NonPrime(4));
    }

    #[test]
    fn overflow_is_reported() {
        assert!(matches!(
            field_new(2, 64).unwrap_err(),
            FfError::Overflow { .. }
        ));
    }

    #[test]
    fn extension_inverse_roundtrip() {
        let f9 = field_new(3, 2).unwrap();
        for i in 1..9 {
            let a = f9.elem_at(i);
            let inv = f9.inv(&a).unwrap();
            assert_eq!(f9.mul(&a, &inv), f9.one());
        }
        assert!(f9.inv(&f9.zero()).is_none());
    }

    #[test]
    fn extension_multiplication_uses_modulus() {
        // In F_9 = F_3[i] with i^2 = -1: (1 + i)^2 = 2i.
        let f9 = field_new(3, 2).unwrap();
        let a = f9.from_coords(&[1, 1]).unwrap();
        let sq = f9.mul(&a, &a);
        assert_eq!(sq, f9.from_coords(&[0, 2]).unwrap());
    }

    #[test]
    fn frobenius_inverse_is_pth_root() {
        let f9 = field_new(3, 2).unwrap();
        for i in 0..9 {
            let a = f9.elem_at(i);
            let r = f9.pth_root(&a);
            assert_eq!(f9.pow(&r, 3), a);
        }
    }

    #[test]
    fn index_roundtrip() {
        let f25 = field_new(5, 2).unwrap();
        for i in 0..25 {
            assert_eq!(f25.index_of(&f25.elem_at(i)), i);
        }
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(parse_field_spec("5").unwrap().q(), 5);
        assert_eq!(parse_field_spec("3^2").unwrap().q(), 9);
        assert!(parse_field_spec("6").is_err());
        assert!(parse_field_spec("x").is_err());
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(101));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
    }
}
