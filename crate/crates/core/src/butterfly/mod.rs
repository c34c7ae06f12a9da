//! Executable forms of the butterfly theorem and its generalizations.
//!
//! Every verifier computes the Desargues involution on the line, then checks
//! each sampled member against it with the apolarity invariant, which is
//! rational even when the intersection points are not.

mod locus;
mod variants;

pub use locus::{butterfly_point, center_of_member, eleven_point_conic, AxisOutcome, ButterflyPoint, EllipseOfCenters, Witness};
pub use variants::{scenario_axis, scenario_circle, scenario_diameter, scenario_klamkin};

use std::cmp::Ordering;

use serde::Serialize;

use crate::arith::{RootPair, Scalar};
use crate::conic::Conic;
use crate::error::GeomError;
use crate::involution::{apolar, involution_from_pairs, BinaryQuadratic, InvolutionRel};
use crate::pencil::{DesarguesInvolution, Pencil, PencilParam};
use crate::projective::{HomParam, Line, LineChart, Point};

/// How a member meets the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCase {
    /// A conjugate pair of non-real points.
    Imaginary,
    /// A single point of contact.
    Tangent,
    /// Two distinct points (real, or over a real quadratic field).
    Distinct,
    /// The line is a component of the member.
    Contained,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberCheck {
    pub param: PencilParam,
    pub restriction: BinaryQuadratic,
    pub case: PairCase,
    pub discriminant: Scalar,
    pub apolarity: Scalar,
    pub pass: bool,
}

/// The member through a fixed point, which must touch the line there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentMember {
    pub at: HomParam,
    pub point: Point,
    pub param: PencilParam,
    pub conic: Conic,
    pub tangent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop2Details {
    pub pair_a: BinaryQuadratic,
    pub pair_b: BinaryQuadratic,
    pub recovered: InvolutionRel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KlamkinDetails {
    pub midpoint: Point,
    pub witnesses: [PencilParam; 2],
    pub all_pairs_share_midpoint: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircleDetails {
    pub circle_param: PencilParam,
    pub circle: Conic,
    pub center: Point,
    pub equidistant_member: PencilParam,
    pub p: Point,
    pub q: Point,
    pub foot: Point,
    pub perpendicular: bool,
    pub asymptote_param: PencilParam,
    pub asymptote_member: Conic,
    pub is_asymptote: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiameterDetails {
    pub h_param: PencilParam,
    pub h: Conic,
    pub center: Point,
    pub n: Point,
    pub k: Line,
    pub m: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxisDetails {
    pub axes: [Line; 2],
    pub axis: Line,
    pub diameter_is_axis: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "scenario", rename_all = "snake_case")]
pub enum ScenarioDetails {
    Prop1,
    Prop2(Prop2Details),
    Klamkin(KlamkinDetails),
    Circle(CircleDetails),
    Diameter(DiameterDetails),
    Axis { axis: AxisDetails, diameter: DiameterDetails },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ButterflyReport {
    pub line: Line,
    pub chart: LineChart,
    pub involution: InvolutionRel,
    pub fixed_points: RootPair,
    pub fixed_point_coords: Vec<Point>,
    pub members: Vec<MemberCheck>,
    pub tangent_members: Vec<TangentMember>,
    /// True when the point at infinity of the line is fixed, so that every
    /// conjugate pair is symmetric about the other fixed point.
    pub midpoint_interpretation: bool,
    pub midpoint: Option<Point>,
    pub details: ScenarioDetails,
    pub pass: bool,
}

impl ButterflyReport {
    fn recompute_pass(&mut self, extra: bool) {
        self.pass = extra && self.members.iter().all(|m| m.pass) && self.tangent_members.iter().all(|t| t.tangent);
    }
}

pub(crate) fn pair_case(q: &BinaryQuadratic) -> Result<(PairCase, Scalar), GeomError> {
    if q.is_zero() {
        return Ok((PairCase::Contained, Scalar::zero()));
    }
    let d = q.discriminant()?;
    let case = if d.is_zero() {
        PairCase::Tangent
    } else if d.signum() == Some(Ordering::Less) {
        PairCase::Imaginary
    } else {
        PairCase::Distinct
    };
    Ok((case, d))
}

fn check_member(p: &Pencil, d: &DesarguesInvolution, t: &PencilParam) -> Result<MemberCheck, GeomError> {
    let restriction = p.member(t).restrict_to_line(&d.chart)?;
    let (case, discriminant) = pair_case(&restriction)?;
    let apolarity = apolar(&restriction, &d.fixed_form())?;
    let pass = apolarity.is_zero();
    Ok(MemberCheck {
        param: t.clone(),
        restriction,
        case,
        discriminant,
        apolarity,
        pass,
    })
}

fn tangent_member(p: &Pencil, d: &DesarguesInvolution, at: &HomParam) -> Result<TangentMember, GeomError> {
    let point = d.chart.point_of(at);
    let (param, conic) = p.member_through(&point)?;
    let q = conic.restrict_to_line(&d.chart)?;
    let tangent = !q.is_zero() && q.discriminant()?.is_zero() && q.eval(at)?.is_zero();
    Ok(TangentMember {
        at: at.clone(),
        point,
        param,
        conic,
        tangent,
    })
}

/// Shared core of all verifiers.
fn base_report(p: &Pencil, l: &Line, samples: &[PencilParam]) -> Result<(ButterflyReport, DesarguesInvolution), GeomError> {
    let d = p.desargues_involution(l)?;
    let fixed_points = d.involution.fixed_points()?;
    let fixed_point_coords = d.fixed_points()?;
    let members = samples
        .iter()
        .map(|t| check_member(p, &d, t))
        .collect::<Result<Vec<_>, _>>()?;
    let tangent_members = fixed_points
        .finite_first()
        .into_iter()
        .map(|r| tangent_member(p, &d, r))
        .collect::<Result<Vec<_>, _>>()?;
    let midpoint_interpretation = !l.is_at_infinity() && !fixed_points.is_double() && d.fixes(&HomParam::infinity())?;
    let midpoint = if midpoint_interpretation {
        fixed_points
            .roots()
            .into_iter()
            .find(|r| !r.is_infinite())
            .map(|r| d.chart.point_of(r))
    } else {
        None
    };
    let mut report = ButterflyReport {
        line: l.clone(),
        chart: d.chart.clone(),
        involution: d.involution.clone(),
        fixed_points,
        fixed_point_coords,
        members,
        tangent_members,
        midpoint_interpretation,
        midpoint,
        details: ScenarioDetails::Prop1,
        pass: false,
    };
    report.recompute_pass(true);
    Ok((report, d))
}

/// Every sampled member meets `l` in a pair harmonic to the fixed points
/// `{M, N}`, or touches `l` at `M` or `N`, or misses it in the real plane.
pub fn verify_prop1(p: &Pencil, l: &Line, samples: &[PencilParam]) -> Result<ButterflyReport, GeomError> {
    Ok(base_report(p, l, samples)?.0)
}

/// Recovers the fixed pair from two member pairs `qa`, `qb` (on the default
/// chart of `l`), checks it against the Desargues involution and then
/// verifies the samples as [`verify_prop1`] does.
pub fn verify_prop2(
    p: &Pencil,
    l: &Line,
    qa: &BinaryQuadratic,
    qb: &BinaryQuadratic,
    samples: &[PencilParam],
) -> Result<ButterflyReport, GeomError> {
    let recovered = involution_from_pairs(qa, qb, None)?;
    let (mut report, _) = base_report(p, l, samples)?;
    if recovered != report.involution {
        return Err(GeomError::MismatchAgainstDesargues);
    }
    report.details = ScenarioDetails::Prop2(Prop2Details {
        pair_a: qa.clone(),
        pair_b: qb.clone(),
        recovered,
    });
    Ok(report)
}

/// Chart parameter of the midpoint `−b/a` of the pair cut by `q`, when the
/// pair is two distinct points of the affine part.
pub(crate) fn pair_midpoint(q: &BinaryQuadratic) -> Option<HomParam> {
    if q.a().is_zero() || q.discriminant().ok()?.is_zero() {
        return None;
    }
    HomParam::new(-q.b(), q.a().clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::farey_sweep;

    pub(crate) fn square() -> Pencil {
        Pencil::new(Point::affine(1, 1), Point::affine(-1, 1), Point::affine(-1, -1), Point::affine(1, -1)).unwrap()
    }

    fn param(l: i64, m: i64) -> PencilParam {
        PencilParam::new(l, m).unwrap()
    }

    #[test]
    fn square_prop1() {
        let y0 = Line::new(0, 1, 0).unwrap();
        let samples = [param(1, 1), param(1, 0), param(2, 1)];
        let r = verify_prop1(&square(), &y0, &samples).unwrap();
        assert!(r.pass);
        assert_eq!(r.involution, InvolutionRel::new(0, 1, 0).unwrap());
        assert!(r.fixed_points.contains(&HomParam::value(Scalar::zero())));
        assert!(r.fixed_points.contains(&HomParam::infinity()));
        assert_eq!(r.members[0].case, PairCase::Distinct);
        assert_eq!(r.members[0].restriction, BinaryQuadratic::new(1, 0, -2).unwrap());
        assert_eq!(r.members[1].case, PairCase::Tangent);
        assert!(r.midpoint_interpretation);
        assert_eq!(r.midpoint, Some(Point::affine(0, 0)));

        let at_m = r.tangent_members.iter().find(|t| !t.at.is_infinite()).unwrap();
        assert_eq!(at_m.conic, Conic::new(1, 0, -1, 0, 0, 0).unwrap());
        assert!(at_m.tangent);
    }

    #[test]
    fn degenerate_g3_sample_is_a_double_point() {
        let y0 = Line::new(0, 1, 0).unwrap();
        let r = verify_prop1(&square(), &y0, &[param(1, -1)]).unwrap();
        assert_eq!(r.members[0].case, PairCase::Tangent);
        assert!(r.members[0].pass);
    }

    #[test]
    fn square_prop2() {
        let y0 = Line::new(0, 1, 0).unwrap();
        let qa = BinaryQuadratic::new(1, 0, -1).unwrap();
        let qb = BinaryQuadratic::new(1, 0, -4).unwrap();
        let r = verify_prop2(&square(), &y0, &qa, &qb, &farey_sweep(6)).unwrap();
        assert!(r.pass);
        // a member missing the line: x² + y² + ... with imaginary pair
        let imag = BinaryQuadratic::new(1, 0, 3).unwrap();
        assert!(verify_prop2(&square(), &y0, &qa, &imag, &[]).is_ok());
        assert_eq!(verify_prop2(&square(), &y0, &qa, &qa, &[]), Err(GeomError::RankDeficient));
        let wrong = BinaryQuadratic::new(1, -1, -2).unwrap();
        assert_eq!(verify_prop2(&square(), &y0, &qa, &wrong, &[]), Err(GeomError::MismatchAgainstDesargues));
    }

    #[test]
    fn oblique_line_with_irrational_fixed_points() {
        let p = Pencil::new(Point::affine(0, 0), Point::affine(3, 0), Point::affine(1, 2), Point::affine(-1, 5)).unwrap();
        let l = Line::new(2, 7, -4).unwrap();
        let r = verify_prop1(&p, &l, &farey_sweep(15)).unwrap();
        assert!(r.pass, "{r:#?}");
    }
}
