//! Involutions on a parametrized line, stored as symmetric bilinear
//! relations, and the apolarity invariant of binary quadratics.
//!
//! A pair of points `{u, v}` on a line is encoded by the binary quadratic
//! whose roots they are. Two pairs are harmonic exactly when their forms are
//! apolar, and `{u, v}` is a conjugate pair of the involution with fixed form
//! `F` exactly when its form is apolar to `F`. Both facts are rational even
//! when `u` and `v` live in a quadratic extension.

use std::fmt;

use crate::arith::{quad_roots, shared_radicand, ArithError, RootPair, Scalar};
use crate::error::GeomError;
use crate::linalg;
use crate::projective::HomParam;

/// `a·s² + 2b·st + c·t²`, up to scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryQuadratic {
    c: [Scalar; 3],
}

impl BinaryQuadratic {
    /// Builds the (normalized) form; the zero form is allowed and represents
    /// a line contained in a conic.
    pub fn new(a: impl Into<Scalar>, b: impl Into<Scalar>, c: impl Into<Scalar>) -> Result<Self, ArithError> {
        Self::from_coeffs([a.into(), b.into(), c.into()])
    }

    pub fn from_coeffs(mut c: [Scalar; 3]) -> Result<Self, ArithError> {
        shared_radicand(c.iter())?;
        linalg::normalize(&mut c);
        Ok(BinaryQuadratic { c })
    }

    pub fn zero() -> Self {
        BinaryQuadratic {
            c: [Scalar::zero(), Scalar::zero(), Scalar::zero()],
        }
    }

    /// The form `(t_p s − s_p t)(t_q s − s_q t)` with roots `p` and `q`.
    pub fn from_roots(p: &HomParam, q: &HomParam) -> Result<Self, ArithError> {
        let a = p.t().checked_mul(q.t())?;
        let b2 = p.t().checked_mul(q.s())?.checked_add(&p.s().checked_mul(q.t())?)?;
        let c = p.s().checked_mul(q.s())?;
        let b = -(b2 / Scalar::from_int(2));
        Self::from_coeffs([a, b, c])
    }

    pub fn a(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn b(&self) -> &Scalar {
        &self.c[1]
    }

    pub fn c(&self) -> &Scalar {
        &self.c[2]
    }

    pub fn coeffs(&self) -> &[Scalar; 3] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.c)
    }

    /// `Δ = b² − ac`; zero iff the roots coincide.
    pub fn discriminant(&self) -> Result<Scalar, ArithError> {
        self.c[1].checked_mul(&self.c[1])?.checked_sub(&self.c[0].checked_mul(&self.c[2])?)
    }

    pub fn eval(&self, p: &HomParam) -> Result<Scalar, ArithError> {
        shared_radicand(self.c.iter().chain([p.s(), p.t()]))?;
        let (s, t) = (p.s(), p.t());
        Ok(&self.c[0] * s * s + Scalar::from_int(2) * &self.c[1] * s * t + &self.c[2] * t * t)
    }

    pub fn roots(&self) -> Result<RootPair, ArithError> {
        quad_roots(self)
    }

    /// The point conjugate to `p` with respect to the symmetric bilinear
    /// form of `self`: the harmonic conjugate of `p` with respect to the
    /// roots when they are distinct.
    pub fn polar_param(&self, p: &HomParam) -> Result<HomParam, GeomError> {
        shared_radicand(self.c.iter().chain([p.s(), p.t()]))?;
        let [a, b, c] = &self.c;
        HomParam::new(b * p.s() + c * p.t(), -(a * p.s() + b * p.t()))
    }
}

impl fmt::Display for BinaryQuadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

/// The apolarity invariant `a₁c₂ + c₁a₂ − 2b₁b₂`; zero iff the two root
/// pairs are harmonic.
pub fn apolar(q1: &BinaryQuadratic, q2: &BinaryQuadratic) -> Result<Scalar, ArithError> {
    shared_radicand(q1.c.iter().chain(q2.c.iter()))?;
    let [a1, b1, c1] = &q1.c;
    let [a2, b2, c2] = &q2.c;
    Ok(a1 * c2 + c1 * a2 - Scalar::from_int(2) * b1 * b2)
}

/// The involution `A·u₁v₁ + B(u₁v₂ + u₂v₁) + C·u₂v₂ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvolutionRel {
    c: [Scalar; 3],
}

impl InvolutionRel {
    pub fn new(a: impl Into<Scalar>, b: impl Into<Scalar>, c: impl Into<Scalar>) -> Result<Self, GeomError> {
        let mut c = [a.into(), b.into(), c.into()];
        if linalg::is_zero_vec(&c) {
            return Err(GeomError::ZeroVector);
        }
        shared_radicand(c.iter())?;
        let disc = &c[1] * &c[1] - &c[0] * &c[2];
        if disc.is_zero() {
            return Err(GeomError::DegenerateRelation);
        }
        linalg::normalize(&mut c);
        Ok(InvolutionRel { c })
    }

    pub fn coeffs(&self) -> &[Scalar; 3] {
        &self.c
    }

    /// The quadratic whose roots are the fixed points.
    pub fn fixed_form(&self) -> BinaryQuadratic {
        BinaryQuadratic { c: self.c.clone() }
    }

    /// True iff `{u, v}` (encoded as a form) is a conjugate pair.
    pub fn is_conjugate_pair(&self, q: &BinaryQuadratic) -> Result<bool, ArithError> {
        Ok(apolar(q, &self.fixed_form())?.is_zero())
    }

    /// The partner of `p`.
    pub fn apply(&self, p: &HomParam) -> Result<HomParam, GeomError> {
        self.fixed_form().polar_param(p)
    }

    pub fn fixed_points(&self) -> Result<RootPair, ArithError> {
        quad_roots(&self.fixed_form())
    }

    /// The form of the conjugate pair `{p, apply(p)}`.
    pub fn pair_through(&self, p: &HomParam) -> Result<BinaryQuadratic, GeomError> {
        let q = self.apply(p)?;
        Ok(BinaryQuadratic::from_roots(p, &q)?)
    }
}

impl fmt::Display for InvolutionRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

/// Rows `(c, −2b, a)` of the linear conditions `apolar(q, (A, B, C)) = 0`.
pub(crate) fn apolarity_row(q: &BinaryQuadratic) -> Vec<Scalar> {
    vec![q.c[2].clone(), -(Scalar::from_int(2) * &q.c[1]), q.c[0].clone()]
}

/// The involution having `q1` and `q2` as conjugate pairs. A third pair, when
/// given, must be conjugate as well.
pub fn involution_from_pairs(
    q1: &BinaryQuadratic,
    q2: &BinaryQuadratic,
    q3: Option<&BinaryQuadratic>,
) -> Result<InvolutionRel, GeomError> {
    shared_radicand(q1.c.iter().chain(q2.c.iter()).chain(q3.into_iter().flat_map(|q| q.c.iter())))?;
    let rows = vec![apolarity_row(q1), apolarity_row(q2)];
    let ns = linalg::nullspace(&rows, 3);
    if ns.len() != 1 {
        return Err(GeomError::RankDeficient);
    }
    let [a, b, c]: [Scalar; 3] = ns.into_iter().next().unwrap().try_into().expect("three unknowns");
    let inv = InvolutionRel::new(a, b, c)?;
    if let Some(q3) = q3 {
        if !inv.is_conjugate_pair(q3)? {
            return Err(GeomError::Inconsistent);
        }
    }
    Ok(inv)
}

/// The unique involution fixing `m` and `n`.
pub fn involution_with_fixed_points(m: &HomParam, n: &HomParam) -> Result<InvolutionRel, GeomError> {
    if m == n {
        return Err(GeomError::CoincidentFixedPoints);
    }
    let f = BinaryQuadratic::from_roots(m, n)?;
    let [a, b, c] = f.c;
    InvolutionRel::new(a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::projective::{cross_ratio, harmonic_conjugate};
    use num_bigint::BigInt;

    fn form(a: i64, b: i64, c: i64) -> BinaryQuadratic {
        BinaryQuadratic::new(a, b, c).unwrap()
    }

    fn hp(x: i64) -> HomParam {
        HomParam::value(x)
    }

    #[test]
    fn apolar_examples() {
        assert!(apolar(&form(1, 0, -1), &form(0, 1, 0)).unwrap().is_zero());
        assert_eq!(apolar(&form(1, 0, -1), &form(1, 0, -4)).unwrap(), Scalar::from_int(-5));
        assert!(!cross_ratio(&hp(1), &hp(-1), &hp(2), &hp(-2)).unwrap().is_harmonic());
        let q = BinaryQuadratic::new(1, Scalar::Rat(rat(-3, 2)), 0).unwrap();
        assert!(apolar(&form(1, 1, -3), &q).unwrap().is_zero());
        assert_eq!(harmonic_conjugate(&hp(1), &hp(0), &hp(3)).unwrap(), hp(-3));
    }

    #[test]
    fn from_roots_matches_pairs() {
        assert_eq!(BinaryQuadratic::from_roots(&hp(1), &hp(-1)).unwrap(), form(1, 0, -1));
        assert_eq!(BinaryQuadratic::from_roots(&hp(0), &HomParam::infinity()).unwrap(), form(0, 1, 0));
        assert_eq!(BinaryQuadratic::from_roots(&hp(1), &hp(-3)).unwrap(), form(1, 1, -3));
    }

    #[test]
    fn involution_from_two_pairs() {
        let inv = involution_from_pairs(&form(1, 0, -1), &form(1, 0, -4), None).unwrap();
        assert_eq!(inv, InvolutionRel::new(0, 1, 0).unwrap());
        let zero_inf = BinaryQuadratic::from_roots(&hp(0), &HomParam::infinity()).unwrap();
        let inv = involution_from_pairs(&zero_inf, &form(1, 0, -1), None).unwrap();
        assert_eq!(inv, InvolutionRel::new(1, 0, 1).unwrap());
        assert_eq!(inv.apply(&hp(0)).unwrap(), HomParam::infinity());
        assert_eq!(inv.apply(&hp(1)).unwrap(), hp(-1));
        assert_eq!(
            involution_from_pairs(&form(1, 0, -1), &form(2, 0, -2), None),
            Err(GeomError::RankDeficient)
        );
    }

    #[test]
    fn third_pair_is_checked() {
        let q3 = BinaryQuadratic::from_roots(&hp(3), &hp(-3)).unwrap();
        assert!(involution_from_pairs(&form(1, 0, -1), &form(1, 0, -4), Some(&q3)).is_ok());
        let bad = BinaryQuadratic::from_roots(&hp(3), &hp(5)).unwrap();
        assert_eq!(
            involution_from_pairs(&form(1, 0, -1), &form(1, 0, -4), Some(&bad)),
            Err(GeomError::Inconsistent)
        );
    }

    #[test]
    fn pairs_sharing_a_point_give_a_degenerate_relation() {
        let p = BinaryQuadratic::from_roots(&hp(1), &hp(2)).unwrap();
        let q = BinaryQuadratic::from_roots(&hp(1), &hp(3)).unwrap();
        assert_eq!(involution_from_pairs(&p, &q, None), Err(GeomError::DegenerateRelation));
    }

    #[test]
    fn double_root_pair_forces_a_fixed_point() {
        let double = BinaryQuadratic::from_roots(&hp(0), &hp(0)).unwrap();
        let inv = involution_from_pairs(&double, &form(1, 0, -1), None).unwrap();
        assert_eq!(inv.apply(&hp(0)).unwrap(), hp(0));
        assert_eq!(inv, InvolutionRel::new(0, 1, 0).unwrap());
    }

    #[test]
    fn apply_examples() {
        let neg = InvolutionRel::new(0, 1, 0).unwrap();
        assert_eq!(neg.apply(&hp(5)).unwrap(), hp(-5));
        assert_eq!(neg.apply(&hp(0)).unwrap(), hp(0));
        let recip = InvolutionRel::new(1, 0, 1).unwrap();
        assert_eq!(recip.apply(&hp(2)).unwrap(), HomParam::value(Scalar::Rat(rat(-1, 2))));
    }

    #[test]
    fn fixed_point_examples() {
        let neg = InvolutionRel::new(0, 1, 0).unwrap();
        assert_eq!(neg.fixed_points().unwrap(), RootPair::Distinct(HomParam::infinity(), hp(0)));
        let i = InvolutionRel::new(1, 0, 1).unwrap().fixed_points().unwrap();
        assert_eq!(i.radicand(), Some(&BigInt::from(-1)));
        let r2 = InvolutionRel::new(1, 0, -2).unwrap().fixed_points().unwrap();
        assert_eq!(r2.radicand(), Some(&BigInt::from(2)));
        for r in r2.roots() {
            assert_eq!(r.to_value().unwrap().square(), Scalar::Rat(int(2)));
        }
    }

    #[test]
    fn involution_with_fixed_points_examples() {
        let inv = involution_with_fixed_points(&hp(0), &HomParam::infinity()).unwrap();
        assert_eq!(inv, InvolutionRel::new(0, 1, 0).unwrap());
        let inv = involution_with_fixed_points(&hp(1), &hp(-1)).unwrap();
        assert_eq!(inv, InvolutionRel::new(1, 0, -1).unwrap());
        assert_eq!(inv.apply(&hp(0)).unwrap(), HomParam::infinity());
        assert_eq!(
            involution_with_fixed_points(&hp(2), &hp(2)),
            Err(GeomError::CoincidentFixedPoints)
        );
    }

    #[test]
    fn degenerate_relation_rejected() {
        assert_eq!(InvolutionRel::new(1, 1, 1), Err(GeomError::DegenerateRelation));
    }
}
