use num_bigint::BigInt;

use super::{squarefree_sqrt, ArithError, Scalar};
use crate::involution::BinaryQuadratic;
use crate::projective::HomParam;

/// The projective roots of a binary quadratic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::large_enum_variant)]
pub enum RootPair {
    /// Two distinct roots; conjugate under `√d ↦ −√d` when irrational.
    Distinct(HomParam, HomParam),
    /// A root of multiplicity two.
    Double(HomParam),
}

impl RootPair {
    pub fn roots(&self) -> Vec<&HomParam> {
        match self {
            RootPair::Distinct(p, q) => vec![p, q],
            RootPair::Double(p) => vec![p],
        }
    }

    /// The roots with the point at infinity, if present, last.
    pub fn finite_first(&self) -> Vec<&HomParam> {
        let mut r = self.roots();
        r.sort_by_key(|x| x.is_infinite());
        r
    }

    pub fn is_double(&self) -> bool {
        matches!(self, RootPair::Double(_))
    }

    pub fn is_rational(&self) -> bool {
        self.roots().iter().all(|r| r.is_rational())
    }

    /// The radicand `d` of the field holding the roots, if irrational.
    pub fn radicand(&self) -> Option<&BigInt> {
        self.roots().into_iter().find_map(|r| r.radicand())
    }

    pub fn contains(&self, p: &HomParam) -> bool {
        self.roots().into_iter().any(|r| r == p)
    }
}

/// Roots `(s : t)` of `a·s² + 2b·st + c·t²`.
///
/// For `a ≠ 0` the roots are `(−b ± √Δ : a)` with `Δ = b² − ac`, the `+` root
/// first. For `a = 0` the first root is `(1 : 0)`.
pub fn quad_roots(q: &BinaryQuadratic) -> Result<RootPair, ArithError> {
    if q.is_zero() {
        return Err(ArithError::ZeroForm);
    }
    let (a, b, c) = (q.a(), q.b(), q.c());
    let param = |s: Scalar, t: Scalar| HomParam::new(s, t).map_err(|e| match e {
        crate::error::GeomError::Arith(e) => e,
        _ => unreachable!("roots are nonzero vectors"),
    });
    if a.is_zero() {
        if b.is_zero() {
            return Ok(RootPair::Double(HomParam::infinity()));
        }
        // t·(2b·s + c·t)
        let other = param(-c, b * &Scalar::from_int(2))?;
        return Ok(RootPair::Distinct(HomParam::infinity(), other));
    }
    let disc = q.discriminant()?;
    let Some(disc) = disc.as_rat() else {
        return Err(ArithError::NestedRadical);
    };
    let root = squarefree_sqrt(disc)?;
    if root.is_zero() {
        return Ok(RootPair::Double(param(-b, a.clone())?));
    }
    let nb = -b;
    let plus = param(nb.checked_add(&root)?, a.clone())?;
    let minus = param(nb.checked_sub(&root)?, a.clone())?;
    Ok(RootPair::Distinct(plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn form(a: i64, b: i64, c: i64) -> BinaryQuadratic {
        BinaryQuadratic::new(a, b, c).unwrap()
    }

    #[test]
    fn rational_roots() {
        let r = quad_roots(&form(1, 0, -1)).unwrap();
        assert_eq!(r, RootPair::Distinct(HomParam::value(1), HomParam::value(-1)));
    }

    #[test]
    fn double_root() {
        assert_eq!(quad_roots(&form(1, -1, 1)).unwrap(), RootPair::Double(HomParam::value(1)));
        assert_eq!(quad_roots(&form(0, 0, 1)).unwrap(), RootPair::Double(HomParam::infinity()));
    }

    #[test]
    fn irrational_roots_satisfy_the_form() {
        let q = form(1, 0, -3);
        let r = quad_roots(&q).unwrap();
        assert_eq!(r.radicand(), Some(&BigInt::from(3)));
        for root in r.roots() {
            assert!(q.eval(root).unwrap().is_zero());
        }
        let RootPair::Distinct(p, m) = r else { panic!() };
        assert_eq!(p.conj(), m);
        assert_eq!(p.to_value().unwrap().square(), Scalar::from_int(3));
    }

    #[test]
    fn degenerate_forms() {
        assert_eq!(
            quad_roots(&form(0, 1, 0)).unwrap(),
            RootPair::Distinct(HomParam::infinity(), HomParam::value(0))
        );
        assert_eq!(quad_roots(&BinaryQuadratic::zero()), Err(ArithError::ZeroForm));
    }

    #[test]
    fn imaginary_roots() {
        let r = quad_roots(&form(1, 0, 1)).unwrap();
        assert_eq!(r.radicand(), Some(&BigInt::from(-1)));
        let _ = int(0);
    }
}
