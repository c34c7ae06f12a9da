//! Homogeneous points and lines of the projective plane, charts on lines,
//! cross-ratio and harmonic conjugates.

use std::fmt;

use crate::arith::{shared_radicand, Rat, Scalar};
use crate::error::GeomError;
use crate::linalg::{self, Vec3};

macro_rules! projective_triple {
    ($name:ident) => {
        impl $name {
            /// Builds the element from homogeneous coordinates, normalized.
            pub fn new(
                a: impl Into<Scalar>,
                b: impl Into<Scalar>,
                c: impl Into<Scalar>,
            ) -> Result<Self, GeomError> {
                Self::from_coords([a.into(), b.into(), c.into()])
            }

            pub fn from_coords(mut c: [Scalar; 3]) -> Result<Self, GeomError> {
                if linalg::is_zero_vec(&c) {
                    return Err(GeomError::ZeroVector);
                }
                shared_radicand(c.iter())?;
                linalg::normalize(&mut c);
                Ok($name { c })
            }

            pub fn coords(&self) -> &[Scalar; 3] {
                &self.c
            }

            pub fn is_rational(&self) -> bool {
                self.c.iter().all(Scalar::is_rational)
            }

            pub fn radicand(&self) -> Option<&num_bigint::BigInt> {
                self.c.iter().find_map(Scalar::radicand)
            }

            /// Image under `√d ↦ −√d`.
            pub fn conj(&self) -> Self {
                let c = [self.c[0].conj(), self.c[1].conj(), self.c[2].conj()];
                Self::from_coords(c).expect("conjugate of a nonzero vector is nonzero")
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({} : {} : {})", self.c[0], self.c[1], self.c[2])
            }
        }
    };
}

/// A point `(x : y : z)` of the projective plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    c: Vec3,
}

/// A line `l₁x + l₂y + l₃z = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    c: Vec3,
}

projective_triple!(Point);
projective_triple!(Line);

impl Point {
    /// The affine point `(x, y)`, i.e. `(x : y : 1)`.
    pub fn affine(x: impl Into<Scalar>, y: impl Into<Scalar>) -> Point {
        Point::new(x, y, 1).expect("z = 1 is nonzero")
    }

    pub fn is_at_infinity(&self) -> bool {
        self.c[2].is_zero()
    }

    /// Affine coordinates `(x/z, y/z)`, or `None` at infinity.
    pub fn to_affine(&self) -> Option<(Scalar, Scalar)> {
        if self.is_at_infinity() {
            return None;
        }
        Some((&self.c[0] / &self.c[2], &self.c[1] / &self.c[2]))
    }

    /// Affine midpoint of two affine points.
    pub fn midpoint(&self, other: &Point) -> Result<Point, GeomError> {
        let (x1, y1) = self.to_affine().ok_or(GeomError::NotAffine)?;
        let (x2, y2) = other.to_affine().ok_or(GeomError::NotAffine)?;
        let half = Scalar::Rat(Rat::new(1.into(), 2.into()));
        Ok(Point::affine((x1 + x2) * &half, (y1 + y2) * &half))
    }
}

impl Line {
    pub fn at_infinity() -> Line {
        Line::new(0, 0, 1).expect("nonzero")
    }

    pub fn is_at_infinity(&self) -> bool {
        self.c[0].is_zero() && self.c[1].is_zero()
    }

    pub fn contains(&self, p: &Point) -> bool {
        incident(self, p)
    }

    /// The point where the line meets the line at infinity, `(l₂ : −l₁ : 0)`.
    pub fn point_at_infinity(&self) -> Option<Point> {
        if self.is_at_infinity() {
            return None;
        }
        Point::new(self.c[1].clone(), -&self.c[0], 0).ok()
    }
}

pub fn incident(l: &Line, p: &Point) -> bool {
    linalg::dot(&l.c, &p.c).is_zero()
}

/// The line through two distinct points.
pub fn join(p: &Point, q: &Point) -> Result<Line, GeomError> {
    shared_radicand(p.c.iter().chain(q.c.iter()))?;
    let c = linalg::cross(&p.c, &q.c);
    if linalg::is_zero_vec(&c) {
        return Err(GeomError::CoincidentPoints);
    }
    Line::from_coords(c)
}

/// The point common to two distinct lines.
pub fn meet(l: &Line, m: &Line) -> Result<Point, GeomError> {
    shared_radicand(l.c.iter().chain(m.c.iter()))?;
    let c = linalg::cross(&l.c, &m.c);
    if linalg::is_zero_vec(&c) {
        return Err(GeomError::CoincidentLines);
    }
    Point::from_coords(c)
}

/// True iff the four points are distinct and no three are collinear.
pub fn general_position(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let pts = [a, b, c, d];
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    triples
        .iter()
        .all(|&(i, j, k)| !linalg::det_rows(&pts[i].c, &pts[j].c, &pts[k].c).is_zero())
}

/// Homogeneous parameter `(s : t)` on a projective line. `(1 : 0)` is the
/// chart's first base point (the value ∞) and `(x : 1)` has value `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomParam {
    c: [Scalar; 2],
}

impl HomParam {
    pub fn new(s: impl Into<Scalar>, t: impl Into<Scalar>) -> Result<Self, GeomError> {
        let mut c = [s.into(), t.into()];
        if linalg::is_zero_vec(&c) {
            return Err(GeomError::ZeroVector);
        }
        shared_radicand(c.iter())?;
        linalg::normalize(&mut c);
        Ok(HomParam { c })
    }

    /// The affine value `x`, i.e. `(x : 1)`.
    pub fn value(x: impl Into<Scalar>) -> HomParam {
        HomParam::new(x, 1).expect("t = 1 is nonzero")
    }

    pub fn infinity() -> HomParam {
        HomParam::new(1, 0).expect("nonzero")
    }

    pub fn s(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn t(&self) -> &Scalar {
        &self.c[1]
    }

    pub fn is_infinite(&self) -> bool {
        self.c[1].is_zero()
    }

    /// `s / t`, or `None` for ∞.
    pub fn to_value(&self) -> Option<Scalar> {
        if self.is_infinite() {
            None
        } else {
            Some(&self.c[0] / &self.c[1])
        }
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(Scalar::is_rational)
    }

    pub fn radicand(&self) -> Option<&num_bigint::BigInt> {
        self.c.iter().find_map(Scalar::radicand)
    }

    pub fn conj(&self) -> HomParam {
        HomParam::new(self.c[0].conj(), self.c[1].conj()).expect("nonzero")
    }
}

impl fmt::Display for HomParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_value() {
            None => f.write_str("inf"),
            Some(v) => write!(f, "{}", v),
        }
    }
}

/// `|pq| = s_p t_q − s_q t_p`.
pub(crate) fn bracket(p: &HomParam, q: &HomParam) -> Scalar {
    &p.c[0] * &q.c[1] - &q.c[0] * &p.c[1]
}

/// Value of a cross ratio; infinity is a tag rather than a field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(Scalar),
    Infinite,
}

impl CrossRatio {
    pub fn is_harmonic(&self) -> bool {
        matches!(self, CrossRatio::Finite(v) if *v == Scalar::from_int(-1))
    }
}

impl fmt::Display for CrossRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossRatio::Finite(v) => write!(f, "{}", v),
            CrossRatio::Infinite => f.write_str("inf"),
        }
    }
}

/// `(p1, p2; p3, p4) = |p1p3|·|p2p4| / (|p1p4|·|p2p3|)`.
pub fn cross_ratio(
    p1: &HomParam,
    p2: &HomParam,
    p3: &HomParam,
    p4: &HomParam,
) -> Result<CrossRatio, GeomError> {
    shared_radicand([p1, p2, p3, p4].iter().flat_map(|p| p.c.iter()))?;
    let num = bracket(p1, p3) * bracket(p2, p4);
    let den = bracket(p1, p4) * bracket(p2, p3);
    match (num.is_zero(), den.is_zero()) {
        (true, true) => Err(GeomError::IndeterminateCrossRatio),
        (_, true) => Ok(CrossRatio::Infinite),
        _ => Ok(CrossRatio::Finite(num / den)),
    }
}

/// The unique `N` with `(M, N; P, Q) = −1`.
pub fn harmonic_conjugate(m: &HomParam, p: &HomParam, q: &HomParam) -> Result<HomParam, GeomError> {
    if p == q || m == p || m == q {
        return Err(GeomError::DegenerateRange);
    }
    shared_radicand([m, p, q].iter().flat_map(|x| x.c.iter()))?;
    // N is conjugate to M under the bilinear form whose roots are P and Q:
    // (t_P s − s_P t)(t_Q s − s_Q t) = a s² + 2b st + c t²
    let a = p.t() * q.t();
    let b2 = -(p.t() * q.s() + p.s() * q.t());
    let c = p.s() * q.s();
    let two = Scalar::from_int(2);
    let n_s = &b2 * m.s() + &two * &c * m.t();
    let n_t = -(&two * &a * m.s() + &b2 * m.t());
    HomParam::new(n_s, n_t)
}

/// A coordinatization `(s : t) ↦ s·R0 + t·R1` of a line.
///
/// The map uses fixed representative vectors of `R0` and `R1`, so parameter
/// values are meaningful and not just their projective classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineChart {
    line: Line,
    r0: Point,
    r1: Point,
    w0: Vec3,
    w1: Vec3,
}

impl LineChart {
    pub fn new(line: Line, r0: Point, r1: Point) -> Result<Self, GeomError> {
        if !incident(&line, &r0) || !incident(&line, &r1) {
            return Err(GeomError::PointOffLine);
        }
        if r0 == r1 {
            return Err(GeomError::CoincidentPoints);
        }
        let (w0, w1) = (r0.c.clone(), r1.c.clone());
        Ok(LineChart { line, r0, r1, w0, w1 })
    }

    /// Deterministic chart on `line`. For an affine line `R0` is its point at
    /// infinity and `R1` its meet with `x = 0` (with `y = 0` when the line is
    /// vertical); the representatives are scaled so that the parameter value
    /// is the x-coordinate of the point (the y-coordinate on vertical lines)
    /// and ∞ is the point at infinity. The line at infinity gets
    /// `R0 = (1:0:0)`, `R1 = (0:1:0)` and value `x/y`.
    pub fn default_for(line: &Line) -> LineChart {
        let [a, b, c] = line.coords().clone();
        let (z, o) = (Scalar::zero(), Scalar::one());
        let (w0, w1) = if line.is_at_infinity() {
            ([o.clone(), z.clone(), z.clone()], [z.clone(), o, z])
        } else if !b.is_zero() {
            ([o.clone(), -(&a / &b), z.clone()], [z, -(&c / &b), o])
        } else {
            ([z.clone(), o.clone(), z.clone()], [-(&c / &a), z, o])
        };
        LineChart {
            line: line.clone(),
            r0: Point::from_coords(w0.clone()).expect("nonzero"),
            r1: Point::from_coords(w1.clone()).expect("nonzero"),
            w0,
            w1,
        }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn r0(&self) -> &Point {
        &self.r0
    }

    pub fn r1(&self) -> &Point {
        &self.r1
    }

    pub(crate) fn representatives(&self) -> (&Vec3, &Vec3) {
        (&self.w0, &self.w1)
    }

    pub fn point_of(&self, p: &HomParam) -> Point {
        let c = [0, 1, 2].map(|i| p.s() * &self.w0[i] + p.t() * &self.w1[i]);
        Point::from_coords(c).expect("R0 and R1 are independent")
    }

    /// Chart parameter of a point on the line.
    pub fn param_of(&self, p: &Point) -> Result<HomParam, GeomError> {
        if !incident(&self.line, p) {
            return Err(GeomError::PointOffLine);
        }
        shared_radicand(p.c.iter().chain(self.w0.iter()).chain(self.w1.iter()))?;
        // P = s·W0 + t·W1  ⇒  P×W1 = s·(W0×W1),  P×W0 = −t·(W0×W1)
        let base = linalg::cross(&self.w0, &self.w1);
        let k = base.iter().position(|x| !x.is_zero()).expect("independent");
        let s = linalg::cross(&p.c, &self.w1)[k].clone();
        let t = -&linalg::cross(&p.c, &self.w0)[k];
        HomParam::new(s, t)
    }
}
