//! Conics as symmetric 3×3 matrices.
//!
//! A conic `a·x² + b·xy + c·y² + d·xz + e·yz + f·z²` is stored by its
//! coefficient vector `[a, b, c, d, e, f]`, normalized to primitive integers
//! with positive leading entry. Its matrix has off-diagonal entries `b/2`,
//! `d/2`, `e/2`.

use std::cmp::Ordering;
use std::fmt;

use crate::arith::{shared_radicand, squarefree_sqrt, RootPair, Scalar};
use crate::error::GeomError;
use crate::involution::BinaryQuadratic;
use crate::linalg::{self, Mat3, Vec3};
use crate::projective::{join, HomParam, Line, LineChart, Point};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Conic {
    coeffs: [Scalar; 6],
    rank: u8,
}

impl Conic {
    /// Builds a conic from `[a, b, c, d, e, f]`.
    pub fn from_coeffs(mut coeffs: [Scalar; 6]) -> Result<Conic, GeomError> {
        if linalg::is_zero_vec(&coeffs) {
            return Err(GeomError::ZeroVector);
        }
        shared_radicand(coeffs.iter())?;
        linalg::normalize(&mut coeffs);
        let m = matrix_of(&coeffs);
        let rows: Vec<Vec<Scalar>> = m.iter().map(|r| r.to_vec()).collect();
        let rank = linalg::rank(&rows, 3) as u8;
        Ok(Conic { coeffs, rank })
    }

    pub fn new(
        a: impl Into<Scalar>,
        b: impl Into<Scalar>,
        c: impl Into<Scalar>,
        d: impl Into<Scalar>,
        e: impl Into<Scalar>,
        f: impl Into<Scalar>,
    ) -> Result<Conic, GeomError> {
        Conic::from_coeffs([a.into(), b.into(), c.into(), d.into(), e.into(), f.into()])
    }

    /// Builds a conic from a symmetric matrix.
    pub fn from_matrix(m: &Mat3) -> Result<Conic, GeomError> {
        let two = Scalar::from_int(2);
        Conic::from_coeffs([
            m[0][0].clone(),
            &two * &m[0][1],
            m[1][1].clone(),
            &two * &m[0][2],
            &two * &m[1][2],
            m[2][2].clone(),
        ])
    }

    /// The degenerate conic `l·mᵀ + m·lᵀ` made of two lines.
    pub fn from_line_pair(l: &Line, m: &Line) -> Conic {
        let (l, m) = (l.coords(), m.coords());
        let mat: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| &l[i] * &m[j] + &m[i] * &l[j]));
        Conic::from_matrix(&mat).expect("product of two nonzero lines is nonzero")
    }

    /// The unique conic through five points.
    pub fn through_five(points: &[Point; 5]) -> Result<Conic, GeomError> {
        shared_radicand(points.iter().flat_map(|p| p.coords().iter()))?;
        let rows: Vec<Vec<Scalar>> = points.iter().map(|p| monomials(p.coords()).to_vec()).collect();
        let ns = linalg::nullspace(&rows, 6);
        if ns.len() != 1 {
            return Err(GeomError::NoUniqueConic { nullity: ns.len() });
        }
        let v: [Scalar; 6] = ns.into_iter().next().unwrap().try_into().expect("six unknowns");
        Conic::from_coeffs(v)
    }

    /// `λ·g1 + μ·g2`, using the stored (normalized) representatives.
    pub fn combine(lambda: &Scalar, g1: &Conic, mu: &Scalar, g2: &Conic) -> Result<Conic, GeomError> {
        let c: [Scalar; 6] = std::array::from_fn(|i| lambda * &g1.coeffs[i] + mu * &g2.coeffs[i]);
        Conic::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[Scalar; 6] {
        &self.coeffs
    }

    pub fn matrix(&self) -> Mat3 {
        matrix_of(&self.coeffs)
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn is_degenerate(&self) -> bool {
        self.rank < 3
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_rational)
    }

    pub fn det(&self) -> Scalar {
        linalg::det3(&self.matrix())
    }

    /// `PᵀMP`.
    pub fn eval(&self, p: &Point) -> Result<Scalar, GeomError> {
        shared_radicand(self.coeffs.iter().chain(p.coords().iter()))?;
        Ok(linalg::dot(&self.coeffs, &monomials(p.coords())))
    }

    pub fn contains(&self, p: &Point) -> bool {
        matches!(self.eval(p), Ok(v) if v.is_zero())
    }

    /// `PᵀMQ`.
    pub fn bilinear(&self, p: &Point, q: &Point) -> Result<Scalar, GeomError> {
        shared_radicand(self.coeffs.iter().chain(p.coords().iter()).chain(q.coords().iter()))?;
        Ok(linalg::bilinear(&self.matrix(), p.coords(), q.coords()))
    }

    /// The polar line `M·P`.
    pub fn polar(&self, p: &Point) -> Result<Line, GeomError> {
        shared_radicand(self.coeffs.iter().chain(p.coords().iter()))?;
        let v = linalg::mat_vec(&self.matrix(), p.coords());
        if linalg::is_zero_vec(&v) {
            return Err(GeomError::KernelPoint);
        }
        Line::from_coords(v)
    }

    /// The pole `adj(M)·l`. For a line pair this is the vertex, defined
    /// unless `l` passes through it.
    pub fn pole(&self, l: &Line) -> Result<Point, GeomError> {
        shared_radicand(self.coeffs.iter().chain(l.coords().iter()))?;
        if self.rank < 2 {
            return Err(GeomError::NoUniquePole);
        }
        let v = linalg::mat_vec(&linalg::adj3(&self.matrix()), l.coords());
        if linalg::is_zero_vec(&v) {
            return Err(GeomError::NoUniquePole);
        }
        Point::from_coords(v)
    }

    /// Pole of the line at infinity, and whether it is an affine point.
    pub fn center(&self) -> Result<(Point, bool), GeomError> {
        if self.is_degenerate() {
            return Err(GeomError::NoUniquePole);
        }
        let c = self.pole(&Line::at_infinity())?;
        let proper = !c.is_at_infinity();
        Ok((c, proper))
    }

    /// The singular point of a line pair.
    pub fn vertex(&self) -> Option<Point> {
        if self.rank != 2 {
            return None;
        }
        let rows: Vec<Vec<Scalar>> = self.matrix().iter().map(|r| r.to_vec()).collect();
        let k = linalg::nullspace(&rows, 3).into_iter().next()?;
        Point::from_coords(k.try_into().ok()?).ok()
    }

    /// The form `(R0ᵀMR0, R0ᵀMR1, R1ᵀMR1)` cut on a chart.
    pub fn restrict_to_line(&self, chart: &LineChart) -> Result<BinaryQuadratic, GeomError> {
        let (w0, w1) = chart.representatives();
        shared_radicand(self.coeffs.iter().chain(w0.iter()).chain(w1.iter()))?;
        let m = self.matrix();
        let a = linalg::bilinear(&m, w0, w0);
        let b = linalg::bilinear(&m, w0, w1);
        let c = linalg::bilinear(&m, w1, w1);
        Ok(BinaryQuadratic::new(a, b, c)?)
    }

    /// Intersection with a line, on the line's default chart.
    pub fn intersect_line(&self, l: &Line) -> Result<IntersectionResult, GeomError> {
        let chart = LineChart::default_for(l);
        let restriction = self.restrict_to_line(&chart)?;
        if restriction.is_zero() {
            return Ok(IntersectionResult {
                kind: IntersectionKind::ComponentContained,
                points: vec![],
                params: None,
                restriction,
                chart,
            });
        }
        let roots = restriction.roots()?;
        let kind = if roots.is_double() {
            IntersectionKind::DoublePoint
        } else {
            IntersectionKind::TwoPoints
        };
        let points = roots.roots().into_iter().map(|r| chart.point_of(r)).collect();
        Ok(IntersectionResult {
            kind,
            points,
            params: Some(roots),
            restriction,
            chart,
        })
    }

    /// The affine quadratic part `[[m₁₁, m₁₂], [m₁₂, m₂₂]]` as `(m₁₁, m₁₂, m₂₂)`.
    fn affine_quadratic_part(&self) -> (Scalar, Scalar, Scalar) {
        let half = Scalar::Rat(crate::arith::rat(1, 2));
        (self.coeffs[0].clone(), &self.coeffs[1] * &half, self.coeffs[2].clone())
    }

    pub fn classify_affine(&self) -> Result<Classification, GeomError> {
        let m = self.matrix();
        let sign = |x: &Scalar| x.signum().ok_or(GeomError::NotOrderable);
        let (p, q, r) = self.affine_quadratic_part();
        let det_qp = &p * &r - &q * &q;
        let kind = match self.rank {
            3 => match sign(&det_qp)? {
                Ordering::Less => ConicKind::Hyperbola,
                Ordering::Equal => ConicKind::Parabola,
                Ordering::Greater => {
                    // real iff m₁₁ and det M have opposite signs
                    let real = sign(&(&p * &linalg::det3(&m)))? == Ordering::Less;
                    ConicKind::Ellipse { real }
                }
            },
            2 => {
                // nonzero eigenvalues have product σ₂ (sum of principal 2×2 minors)
                let sigma2 = &m[0][0] * &m[1][1] - &m[0][1] * &m[0][1] + &m[0][0] * &m[2][2]
                    - &m[0][2] * &m[0][2]
                    + &m[1][1] * &m[2][2]
                    - &m[1][2] * &m[1][2];
                let real = sign(&sigma2)? == Ordering::Less;
                let parallel = self.vertex().is_some_and(|v| v.is_at_infinity());
                ConicKind::Degenerate(DegenerateKind::LinePair { real, parallel })
            }
            _ => ConicKind::Degenerate(DegenerateKind::DoubleLine),
        };
        let rectangular = kind == ConicKind::Hyperbola && (&p + &r).is_zero();
        Ok(Classification { kind, rectangular })
    }

    /// True iff `l` is tangent to the conic at a point at infinity.
    pub fn is_asymptote(&self, l: &Line) -> Result<bool, GeomError> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        if l.is_at_infinity() {
            return Ok(false);
        }
        let hit = self.intersect_line(l)?;
        Ok(hit.kind == IntersectionKind::DoublePoint && hit.points[0].is_at_infinity())
    }

    /// The two principal axes of a central, non-circular conic, in
    /// eigen-direction order (larger eigenvalue first).
    pub fn axes(&self) -> Result<[Line; 2], GeomError> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        let (center, proper) = self.center()?;
        if !proper {
            return Err(GeomError::NoCenter);
        }
        let (p, q, r) = self.affine_quadratic_part();
        if q.is_zero() && p == r {
            return Err(GeomError::CircleHasNoUniqueAxes);
        }
        let dirs: [Vec3; 2] = if q.is_zero() {
            let (e1, e2) = ([1, 0, 0].map(Scalar::from_int), [0, 1, 0].map(Scalar::from_int));
            if (&p - &r).signum() == Some(Ordering::Less) {
                [e2, e1]
            } else {
                [e1, e2]
            }
        } else {
            // eigenvalues ((p + r) ± √D)/2 with D = (p − r)² + 4q²;
            // eigenvector (2q, r − p ± √D)
            let disc = (&p - &r).square() + Scalar::from_int(4) * q.square();
            let root = squarefree_sqrt(disc.as_rat().ok_or(GeomError::Arith(crate::arith::ArithError::NestedRadical))?)?;
            let two_q = Scalar::from_int(2) * &q;
            let base = &r - &p;
            [
                [two_q.clone(), base.checked_add(&root)?, Scalar::zero()],
                [two_q, base.checked_sub(&root)?, Scalar::zero()],
            ]
        };
        let lines = dirs.map(|d| {
            let dir = Point::from_coords(d).expect("eigenvector is nonzero");
            join(&center, &dir)
        });
        let [a, b] = lines;
        Ok([a?, b?])
    }

    /// Image under `√d ↦ −√d`.
    pub fn conj(&self) -> Conic {
        Conic::from_coeffs(self.coeffs.clone().map(|c| c.conj())).expect("nonzero")
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x²", "xy", "y²", "xz", "yz", "z²"];
        let mut first = true;
        for (c, n) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_rational() {
                write!(f, "{}{}", c, n)?;
            } else {
                write!(f, "({}){}", c, n)?;
            }
        }
        Ok(())
    }
}

/// `[x², xy, y², xz, yz, z²]`.
pub(crate) fn monomials(p: &Vec3) -> [Scalar; 6] {
    let [x, y, z] = p;
    [x * x, x * y, y * y, x * z, y * z, z * z]
}

fn matrix_of(c: &[Scalar; 6]) -> Mat3 {
    let half = Scalar::Rat(crate::arith::rat(1, 2));
    let b = &c[1] * &half;
    let d = &c[3] * &half;
    let e = &c[4] * &half;
    [
        [c[0].clone(), b.clone(), d.clone()],
        [b, c[2].clone(), e.clone()],
        [d, e, c[5].clone()],
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntersectionKind {
    TwoPoints,
    DoublePoint,
    ComponentContained,
}

/// A conic meeting a line. Two points with `d < 0` means no real
/// intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionResult {
    pub kind: IntersectionKind,
    pub points: Vec<Point>,
    pub params: Option<RootPair>,
    pub restriction: BinaryQuadratic,
    pub chart: LineChart,
}

impl IntersectionResult {
    pub fn radicand(&self) -> Option<&num_bigint::BigInt> {
        self.params.as_ref().and_then(RootPair::radicand)
    }

    /// True when there is at least one real intersection point.
    pub fn is_real(&self) -> bool {
        match self.radicand() {
            Some(d) => d > &num_bigint::BigInt::from(0),
            None => true,
        }
    }

    pub fn param_pair(&self) -> Vec<HomParam> {
        self.params.iter().flat_map(|r| r.roots().into_iter().cloned()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegenerateKind {
    LinePair { real: bool, parallel: bool },
    DoubleLine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse { real: bool },
    Parabola,
    Hyperbola,
    Degenerate(DegenerateKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Classification {
    pub kind: ConicKind,
    pub rectangular: bool,
}
