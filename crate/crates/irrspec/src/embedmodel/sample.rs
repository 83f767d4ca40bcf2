//! Observed specializations: factorization shapes with acceptance flags.
//!
//! A specialization is accepted only if the polynomial keeps its full degree
//! and stays separable; ramified samples are excluded from fit statistics
//! rather than corrected.

use crate::ffpoly::{BiPoly, FfError, FieldElem, Shape};

/// The substituted parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecPoint {
    Single(FieldElem),
    Tuple(Vec<FieldElem>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// The leading coefficient vanished at the point.
    DegreeDrop,
    /// The specialized polynomial has a repeated root.
    Inseparable,
}

/// One observation: a parameter value and either a shape or a rejection.
#[derive(Debug, Clone)]
pub struct SpecializationSample {
    pub point: SpecPoint,
    pub shape: Option<Shape>,
    pub reject: Option<RejectReason>,
}

impl SpecializationSample {
    pub fn accepted(&self) -> bool {
        self.reject.is_none()
    }
}

/// Specialize one polynomial at `T = a`.
pub fn specialize(f: &BiPoly, a: &FieldElem) -> Result<SpecializationSample, FfError> {
    specialize_family(std::slice::from_ref(f), a)
}

/// Specialize a family at `T = a`; the sample is accepted only if every
/// member keeps full degree and is separable, and its shape is the combined
/// multiset of factor degrees.
pub fn specialize_family(
    fs: &[BiPoly],
    a: &FieldElem,
) -> Result<SpecializationSample, FfError> {
    let point = SpecPoint::Single(a.clone());
    let mut degrees = Vec::new();
    let mut squarefree = true;
    for f in fs {
        let ev = f.eval_partial(a);
        if !ev.degree_preserved {
            return Ok(SpecializationSample {
                point,
                shape: None,
                reject: Some(RejectReason::DegreeDrop),
            });
        }
        if !ev.separable {
            return Ok(SpecializationSample {
                point,
                shape: None,
                reject: Some(RejectReason::Inseparable),
            });
        }
        let shape = ev.poly.shape()?;
        squarefree &= shape.is_squarefree();
        degrees.extend_from_slice(shape.degrees());
    }
    Ok(SpecializationSample {
        point,
        shape: Some(Shape::new(degrees, squarefree)),
        reject: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{field_new, parse_bipoly};

    #[test]
    fn acceptance_flags() {
        let f9 = field_new(3, 2).unwrap();
        // X^2 - T = X^2 + 2*T
        let f = parse_bipoly(&f9, "X^2+2*T").unwrap();

        // a = 0 gives X^2: inseparable, rejected
        let s = specialize(&f, &f9.zero()).unwrap();
        assert_eq!(s.reject, Some(RejectReason::Inseparable));
        assert!(!s.accepted());

        // a = 1 gives X^2 - 1 = (X-1)(X+1): accepted, shape 1+1
        let s = specialize(&f, &f9.one()).unwrap();
        assert!(s.accepted());
        assert_eq!(s.shape.unwrap().degrees(), &[1, 1]);
    }

    #[test]
    fn degree_drop_is_rejected() {
        let f5 = field_new(5, 1).unwrap();
        let f = parse_bipoly(&f5, "T*X").unwrap();
        let s = specialize(&f, &f5.zero()).unwrap();
        assert_eq!(s.reject, Some(RejectReason::DegreeDrop));
    }

    #[test]
    fn family_shapes_combine() {
        let f5 = field_new(5, 1).unwrap();
        // (X^2 - T) and (X - T): at T=1, X^2-1 splits and X-1 is linear.
        let a = parse_bipoly(&f5, "X^2+4*T").unwrap();
        let b = parse_bipoly(&f5, "X+4*T").unwrap();
        let s = specialize_family(&[a, b], &f5.one()).unwrap();
        assert!(s.accepted());
        assert_eq!(s.shape.unwrap().degrees(), &[1, 1, 1]);
    }
}
