//! Butterfly points and the eleven-point conic of centers.

use serde::Serialize;

use crate::arith::Scalar;
use crate::conic::Conic;
use crate::error::GeomError;
use crate::linalg::{self, Mat3, Vec3};
use crate::pencil::{farey_sweep, Pencil, PencilParam};
use crate::projective::{join, Line, Point};

/// One incidence check of the eleven-point conic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub point: Point,
    pub value: Scalar,
    /// The value was obtained by conjugating the value at the partner point.
    pub by_conjugation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipseOfCenters {
    pub conic: Conic,
    pub rank: u8,
    /// True when the centers of the smooth members are collinear, so that no
    /// five of them determine a conic and the locus is a line pair.
    pub degenerate: bool,
    /// Whether the five-point fit through sampled centers was available and
    /// agreed with the determinantal equation of the locus.
    pub fit_agrees: Option<bool>,
    pub samples_checked: usize,
    pub witnesses: Vec<Witness>,
    pub rectangular: bool,
    /// For concyclic base points, the circle's center and the value of the
    /// conic there.
    pub circle_center: Option<(Point, Scalar)>,
}

impl EllipseOfCenters {
    pub fn all_witnesses_vanish(&self) -> bool {
        self.witnesses.iter().all(|w| w.value.is_zero())
    }
}

fn e3() -> Vec3 {
    [Scalar::zero(), Scalar::zero(), Scalar::one()]
}

fn add(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][j] + &b[i][j]))
}

/// Coefficient vectors `u1, u12, u2` with
/// `adj(λG1 + μG2)·e3 = λ²u1 + λμ·u12 + μ²u2`.
fn center_expansion(p: &Pencil) -> [Vec3; 3] {
    let (m1, m2) = (p.g1().matrix(), p.g2().matrix());
    let a1 = linalg::adj3(&m1);
    let a2 = linalg::adj3(&m2);
    let a12 = linalg::adj3(&add(&m1, &m2));
    let u1 = linalg::mat_vec(&a1, &e3());
    let u2 = linalg::mat_vec(&a2, &e3());
    let s = linalg::mat_vec(&a12, &e3());
    let u12 = std::array::from_fn(|i| &s[i] - &u1[i] - &u2[i]);
    [u1, u12, u2]
}

/// The pole of the line at infinity for the member at `t`, or `None` when
/// it is undefined (a line pair with parallel components).
pub fn center_of_member(p: &Pencil, t: &PencilParam) -> Option<Point> {
    let [u1, u12, u2] = center_expansion(p);
    let (l, m) = (t.lambda(), t.mu());
    let v: Vec3 = std::array::from_fn(|i| l * l * &u1[i] + l * m * &u12[i] + m * m * &u2[i]);
    Point::from_coords(v).ok()
}

/// The locus `det[(G1X)₁,₂ ; (G2X)₁,₂] = 0` of points that are the center of
/// some member (or the vertex of a degenerate one).
fn determinantal_locus(p: &Pencil) -> Option<Conic> {
    let (m1, m2) = (p.g1().matrix(), p.g2().matrix());
    let (r1, r2, s1, s2) = (&m1[0], &m1[1], &m2[0], &m2[1]);
    // (r1·X)(s2·X) − (r2·X)(s1·X), symmetrized
    let half = Scalar::from(crate::arith::rat(1, 2));
    let m: Mat3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let v = &r1[i] * &s2[j] + &s2[i] * &r1[j] - &r2[i] * &s1[j] - &s1[i] * &r2[j];
            &v * &half
        })
    });
    Conic::from_matrix(&m).ok()
}

/// The conic of centers of the members, with its eleven incidence witnesses.
///
/// When every member has the same center the locus collapses and
/// [`GeomError::DegenerateLocus`] reports that center.
pub fn eleven_point_conic(p: &Pencil) -> Result<EllipseOfCenters, GeomError> {
    let implicit = determinantal_locus(p);
    let mut centers: Vec<Point> = Vec::new();
    for t in farey_sweep(40) {
        if let Some(c) = center_of_member(p, &t) {
            if !centers.contains(&c) {
                centers.push(c);
            }
        }
    }
    if centers.len() <= 1 {
        let common_center = centers.into_iter().next().ok_or(GeomError::NoUniquePole)?;
        return Err(GeomError::DegenerateLocus {
            common_center: Box::new(common_center),
            implicit: implicit.map(Box::new),
        });
    }

    let (conic, degenerate, fit_agrees, samples_checked) = if centers.len() >= 5 {
        let five: [Point; 5] = centers[..5].to_vec().try_into().expect("five");
        match Conic::through_five(&five) {
            Ok(fit) => {
                let extra = &centers[5..];
                if !extra.iter().all(|c| fit.contains(c)) {
                    return Err(GeomError::NoUniqueConic { nullity: 0 });
                }
                let agrees = implicit.as_ref().map(|i| *i == fit);
                let degenerate = fit.is_degenerate();
                (fit, degenerate, agrees, extra.len())
            }
            Err(GeomError::NoUniqueConic { .. }) => {
                let i = implicit.clone().ok_or(GeomError::NoUniqueConic { nullity: 2 })?;
                let checked = centers.iter().filter(|c| i.contains(c)).count();
                if checked != centers.len() {
                    return Err(GeomError::NoUniqueConic { nullity: 2 });
                }
                (i, true, None, checked)
            }
            Err(e) => return Err(e),
        }
    } else {
        let i = implicit.clone().ok_or(GeomError::NoUniqueConic { nullity: 2 })?;
        (i, true, None, centers.len())
    };

    let mut witnesses = Vec::new();
    let diag_labels = ["AB∩CD", "AD∩BC", "AC∩BD"];
    for (label, pt) in diag_labels.iter().zip(p.diagonal_points()) {
        witnesses.push(Witness {
            label: format!("diagonal {label}"),
            value: conic.eval(&pt)?,
            point: pt,
            by_conjugation: false,
        });
    }
    let side_labels = ["AB", "AC", "AD", "BC", "BD", "CD"];
    for (label, pt) in side_labels.iter().zip(p.side_midpoints()?) {
        witnesses.push(Witness {
            label: format!("midpoint {label}"),
            value: conic.eval(&pt)?,
            point: pt,
            by_conjugation: false,
        });
    }
    let at_inf = p.desargues_involution(&Line::at_infinity())?;
    let fixed = at_inf.fixed_points()?;
    match fixed.as_slice() {
        [f1, f2] if !f1.is_rational() && *f2 == f1.conj() => {
            let v = conic.eval(f1)?;
            witnesses.push(Witness {
                label: "fixed point at infinity 1".into(),
                point: f1.clone(),
                value: v.clone(),
                by_conjugation: false,
            });
            witnesses.push(Witness {
                label: "fixed point at infinity 2".into(),
                point: f2.clone(),
                value: v.conj(),
                by_conjugation: true,
            });
        }
        _ => {
            for (i, f) in fixed.iter().enumerate() {
                witnesses.push(Witness {
                    label: format!("fixed point at infinity {}", i + 1),
                    point: f.clone(),
                    value: conic.eval(f)?,
                    by_conjugation: false,
                });
            }
        }
    }

    let c = conic.coeffs();
    let rectangular = (&c[0] + &c[2]).is_zero();
    let circle_center = match p.circle_member() {
        Some((_, circle)) => {
            let (o, _) = circle.center()?;
            let v = conic.eval(&o)?;
            Some((o, v))
        }
        None => None,
    };
    Ok(EllipseOfCenters {
        rank: conic.rank(),
        conic,
        degenerate,
        fit_agrees,
        samples_checked,
        witnesses,
        rectangular,
        circle_center,
    })
}

/// What the polars of a point with respect to the members have in common.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum AxisOutcome {
    /// The polars meet at `n`, a point at infinity, and the axis is `MN`.
    Axis { line: Line, n: Point },
    /// Every member has the same polar, so no axis is singled out.
    CoincidentPolars { polar: Line },
    /// The point is not a butterfly point.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ButterflyPoint {
    pub is_butterfly: bool,
    /// The member centered at the point, unless every member is.
    pub member_param: Option<PencilParam>,
    pub axis: AxisOutcome,
}

/// Decides whether `m` is the center of some member of the pencil.
pub fn butterfly_point(p: &Pencil, m: &Point) -> Result<ButterflyPoint, GeomError> {
    if p.base_points().contains(m) {
        return Err(GeomError::BasePoint);
    }
    let x = m.coords();
    let a = linalg::mat_vec(&p.g1().matrix(), x);
    let b = linalg::mat_vec(&p.g2().matrix(), x);
    // λ·a + μ·b ∝ (0, 0, 1): the first two coordinates must vanish
    let det = a[0].checked_mul(&b[1])?.checked_sub(&a[1].checked_mul(&b[0])?)?;
    let is_butterfly = det.is_zero();
    let member_param = if !is_butterfly {
        None
    } else if let Some(i) = (0..2).find(|&i| !a[i].is_zero() || !b[i].is_zero()) {
        Some(PencilParam::new(b[i].clone(), -&a[i])?)
    } else {
        None
    };

    let n = linalg::cross(&a, &b);
    let axis = if linalg::is_zero_vec(&n) {
        let polar = if linalg::is_zero_vec(&a) { b } else { a };
        AxisOutcome::CoincidentPolars {
            polar: Line::from_coords(polar)?,
        }
    } else if is_butterfly {
        let n = Point::from_coords(n)?;
        AxisOutcome::Axis { line: join(m, &n)?, n }
    } else {
        AxisOutcome::None
    };
    Ok(ButterflyPoint {
        is_butterfly,
        member_param,
        axis,
    })
}
