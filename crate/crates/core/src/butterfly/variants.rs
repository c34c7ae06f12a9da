//! Named special cases: equal midpoints, the circle, diameters and axes.

use crate::arith::Scalar;
use crate::error::GeomError;
use crate::pencil::{Pencil, PencilParam};
use crate::projective::{meet, HomParam, Line, Point};

use super::{
    base_report, pair_midpoint, AxisDetails, ButterflyReport, CircleDetails, DiameterDetails, KlamkinDetails,
    PairCase, ScenarioDetails,
};

fn require_fixed(report: &ButterflyReport, m: &HomParam) -> Result<(), GeomError> {
    let f = report.involution.fixed_form();
    if f.eval(m)?.is_zero() && f.eval(&HomParam::infinity())?.is_zero() {
        return Ok(());
    }
    Err(GeomError::FixedPointMismatch {
        m: Box::new(report.chart.point_of(m)),
        n: Box::new(report.chart.point_of(&HomParam::infinity())),
    })
}

/// Two sampled members cutting `l` in pairs with a common midpoint `M`: the
/// fixed points are then `M` and the point at infinity of `l`.
pub fn scenario_klamkin(p: &Pencil, l: &Line, samples: &[PencilParam]) -> Result<ButterflyReport, GeomError> {
    if l.is_at_infinity() {
        return Err(GeomError::NotAffine);
    }
    let (mut report, _) = base_report(p, l, samples)?;
    let mids: Vec<(usize, HomParam)> = report
        .members
        .iter()
        .enumerate()
        .filter_map(|(i, m)| pair_midpoint(&m.restriction).map(|x| (i, x)))
        .collect();
    let mut found = None;
    'outer: for (a, (i, mi)) in mids.iter().enumerate() {
        for (j, mj) in &mids[a + 1..] {
            if mi == mj && report.members[*i].restriction != report.members[*j].restriction {
                found = Some((*i, *j, mi.clone()));
                break 'outer;
            }
        }
    }
    let (i, j, m) = found.ok_or(GeomError::NoSuchConfiguration)?;
    require_fixed(&report, &m)?;
    let all_pairs_share_midpoint = mids.iter().all(|(_, x)| *x == m);
    report.details = ScenarioDetails::Klamkin(KlamkinDetails {
        midpoint: report.chart.point_of(&m),
        witnesses: [report.members[i].param.clone(), report.members[j].param.clone()],
        all_pairs_share_midpoint,
    });
    report.recompute_pass(all_pairs_share_midpoint);
    Ok(report)
}

fn dist2(a: &(Scalar, Scalar), b: &(Scalar, Scalar)) -> Result<Scalar, GeomError> {
    let dx = a.0.checked_sub(&b.0)?;
    let dy = a.1.checked_sub(&b.1)?;
    Ok(dx.checked_mul(&dx)?.checked_add(&dy.checked_mul(&dy)?)?)
}

/// Concyclic base points and a member meeting `l` in two real points
/// equidistant from the circle's center.
pub fn scenario_circle(p: &Pencil, l: &Line, samples: &[PencilParam]) -> Result<ButterflyReport, GeomError> {
    let (circle_param, circle) = p.circle_member().ok_or(GeomError::NotConcyclic)?;
    if l.is_at_infinity() {
        return Err(GeomError::NotAffine);
    }
    let (mut report, d) = base_report(p, l, samples)?;
    let (center, _) = circle.center()?;
    let o = center.to_affine().ok_or(GeomError::NoProperCenter)?;

    let mut found = None;
    for m in &report.members {
        if m.param == circle_param || m.case != PairCase::Distinct || m.restriction.a().is_zero() {
            continue;
        }
        let hit = p.member(&m.param).intersect_line(l)?;
        let pts: Vec<(Scalar, Scalar)> = hit.points.iter().filter_map(Point::to_affine).collect();
        if pts.len() == 2 && dist2(&pts[0], &o)? == dist2(&pts[1], &o)? {
            found = Some((m.param.clone(), hit.points[0].clone(), hit.points[1].clone(), m.restriction.clone()));
            break;
        }
    }
    let (equidistant_member, pp, qq, q) = found.ok_or(GeomError::EquidistanceFails)?;

    let m = pair_midpoint(&q).expect("distinct affine pair");
    let foot = d.chart.point_of(&m);
    let (fx, fy) = foot.to_affine().expect("affine");
    let [la, lb, _] = l.coords();
    // direction of l is (lb, −la)
    let perpendicular = ((&fx - &o.0) * lb - (&fy - &o.1) * la).is_zero();
    require_fixed(&report, &m)?;

    let inf = l.point_at_infinity().expect("affine line");
    let (asymptote_param, asymptote_member) = p.member_through(&inf)?;
    let is_asymptote = !asymptote_member.is_degenerate() && asymptote_member.is_asymptote(l)?;
    // a degenerate member through the point at infinity touches l there as
    // a pair of lines parallel to l
    let asymptote_ok = is_asymptote || asymptote_member.is_degenerate();

    report.details = ScenarioDetails::Circle(CircleDetails {
        circle_param,
        circle,
        center,
        equidistant_member,
        p: pp,
        q: qq,
        foot,
        perpendicular,
        asymptote_param,
        asymptote_member,
        is_asymptote,
    });
    report.recompute_pass(perpendicular && asymptote_ok);
    Ok(report)
}

/// `l` conjugate to the diameter `k` of the member `H` at `h_param`, where
/// `k` is the polar of the point at infinity of `l`; the fixed points must be
/// `M = l ∩ k` and that point at infinity.
pub fn scenario_diameter(
    p: &Pencil,
    h_param: &PencilParam,
    l: &Line,
    samples: &[PencilParam],
) -> Result<ButterflyReport, GeomError> {
    let (mut report, d, details) = diameter_core(p, h_param, l, samples)?;
    let m = d.chart.param_of(&details.m)?;
    require_fixed(&report, &m)?;
    report.details = ScenarioDetails::Diameter(details);
    report.recompute_pass(true);
    Ok(report)
}

type DiameterParts = (ButterflyReport, crate::pencil::DesarguesInvolution, DiameterDetails);

fn diameter_core(p: &Pencil, h_param: &PencilParam, l: &Line, samples: &[PencilParam]) -> Result<DiameterParts, GeomError> {
    let h = p.member(h_param);
    if h.is_degenerate() {
        return Err(GeomError::NoProperCenter);
    }
    let (center, proper) = h.center()?;
    if !proper {
        return Err(GeomError::NoProperCenter);
    }
    let n = l.point_at_infinity().ok_or(GeomError::NotAffine)?;
    let k = h.polar(&n)?;
    if !k.contains(&center) {
        return Err(GeomError::DiameterMissesCenter { k: Box::new(k) });
    }
    let (report, d) = base_report(p, l, samples)?;
    let m = meet(l, &k)?;
    if m.is_at_infinity() {
        return Err(GeomError::FixedPointMismatch { m: Box::new(m), n: Box::new(n) });
    }
    let details = DiameterDetails {
        h_param: h_param.clone(),
        h,
        center,
        n,
        k,
        m,
    };
    Ok((report, d, details))
}

/// `l` perpendicular to an axis of the member at `h_param`; reduces to the
/// diameter case with that axis.
pub fn scenario_axis(
    p: &Pencil,
    h_param: &PencilParam,
    l: &Line,
    samples: &[PencilParam],
) -> Result<ButterflyReport, GeomError> {
    let h = p.member(h_param);
    if h.is_degenerate() {
        return Err(GeomError::NoProperCenter);
    }
    let axes = match h.axes() {
        Err(GeomError::NoCenter) => return Err(GeomError::NoProperCenter),
        other => other?,
    };
    let [la, lb, _] = l.coords();
    let mut chosen = None;
    for ax in &axes {
        let [a, b, _] = ax.coords();
        // normals perpendicular ⇔ lines perpendicular
        if a.checked_mul(la)?.checked_add(&b.checked_mul(lb)?)?.is_zero() {
            chosen = Some(ax.clone());
        }
    }
    let axis = chosen.ok_or(GeomError::NotPerpendicular)?;
    let (mut report, d, diameter) = diameter_core(p, h_param, l, samples)?;
    let m = d.chart.param_of(&diameter.m)?;
    require_fixed(&report, &m)?;
    let diameter_is_axis = diameter.k == axis;
    report.details = ScenarioDetails::Axis {
        axis: AxisDetails {
            axes,
            axis,
            diameter_is_axis,
        },
        diameter,
    };
    report.recompute_pass(diameter_is_axis);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::butterfly::tests::square;
    use crate::conic::Conic;
    use crate::pencil::farey_sweep;

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(a, b, c).unwrap()
    }

    fn param(l: i64, m: i64) -> PencilParam {
        PencilParam::new(l, m).unwrap()
    }

    #[test]
    fn klamkin_square() {
        let r = scenario_klamkin(&square(), &line(0, 1, 0), &farey_sweep(8)).unwrap();
        assert!(r.pass);
        match &r.details {
            ScenarioDetails::Klamkin(k) => {
                assert_eq!(k.midpoint, Point::affine(0, 0));
                assert!(k.all_pairs_share_midpoint);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn klamkin_without_common_midpoint() {
        let l = line(1, 3, -1);
        assert_eq!(scenario_klamkin(&square(), &l, &farey_sweep(8)), Err(GeomError::NoSuchConfiguration));
    }

    #[test]
    fn circle_square_on_x_axis() {
        let r = scenario_circle(&square(), &line(0, 1, 0), &farey_sweep(8)).unwrap();
        assert!(r.pass);
        let ScenarioDetails::Circle(c) = &r.details else { panic!() };
        assert_eq!(c.center, Point::affine(0, 0));
        assert_eq!(c.foot, Point::affine(0, 0));
        assert_eq!(c.asymptote_param, param(1, 0));
    }

    #[test]
    fn circle_square_on_vertical_line() {
        let l = Line::new(1, 0, Scalar::from(rat(-1, 2))).unwrap();
        let r = scenario_circle(&square(), &l, &farey_sweep(8)).unwrap();
        assert!(r.pass);
        let ScenarioDetails::Circle(c) = &r.details else { panic!() };
        assert_eq!(c.foot, Point::affine(rat(1, 2), 0));
        assert!(!c.is_asymptote);
        assert_eq!(c.asymptote_member, Conic::new(1, 0, 0, 0, 0, -1).unwrap());
        assert!(r.fixed_point_coords.contains(&Point::new(0, 1, 0).unwrap()));
    }

    #[test]
    fn circle_rotated_square_has_no_equidistant_pair() {
        let p = Pencil::new(Point::affine(1, 0), Point::affine(0, 1), Point::affine(-1, 0), Point::affine(0, -1)).unwrap();
        let l = Line::new(1, 0, Scalar::from(rat(-1, 2))).unwrap();
        assert_eq!(scenario_circle(&p, &l, &farey_sweep(12)), Err(GeomError::EquidistanceFails));
    }

    #[test]
    fn circle_needs_concyclic_points() {
        let p = Pencil::new(Point::affine(0, 0), Point::affine(2, 0), Point::affine(0, 2), Point::affine(2, 4)).unwrap();
        assert_eq!(scenario_circle(&p, &line(0, 1, -1), &farey_sweep(8)), Err(GeomError::NotConcyclic));
    }

    #[test]
    fn diameter_square_circumcircle() {
        let r = scenario_diameter(&square(), &param(1, 1), &line(0, 1, 0), &farey_sweep(8)).unwrap();
        assert!(r.pass);
        let ScenarioDetails::Diameter(d) = &r.details else { panic!() };
        assert_eq!(d.k, line(1, 0, 0));
        assert_eq!(d.m, Point::affine(0, 0));
    }

    #[test]
    fn diameter_mismatch_and_parabola() {
        let p = Pencil::new(Point::affine(0, 0), Point::affine(3, 0), Point::affine(1, 2), Point::affine(-1, 5)).unwrap();
        let l = line(2, 7, -4);
        let h = farey_sweep(10)
            .into_iter()
            .find(|t| {
                let c = p.member(t);
                !c.is_degenerate() && c.center().unwrap().1
            })
            .unwrap();
        assert!(matches!(scenario_diameter(&p, &h, &l, &[]), Err(GeomError::FixedPointMismatch { .. })));

        // base points on y = x²
        let q = Pencil::new(Point::affine(0, 0), Point::affine(1, 1), Point::affine(-1, 1), Point::affine(2, 4)).unwrap();
        let (hp, c) = q.member_through(&Point::affine(3, 9)).unwrap();
        assert_eq!(c, Conic::new(1, 0, 0, 0, -1, 0).unwrap());
        assert_eq!(scenario_diameter(&q, &hp, &line(0, 1, -2), &[]), Err(GeomError::NoProperCenter));
    }

    #[test]
    fn axis_examples() {
        // base points on x²/4 + y² = 1, i.e. x² + 4y² = 4
        let p = Pencil::new(
            Point::affine(2, 0),
            Point::affine(0, 1),
            Point::affine(-2, 0),
            Point::affine(rat(6, 5), rat(-4, 5)),
        )
        .unwrap();
        let (h, e) = p.member_through(&Point::affine(0, -1)).unwrap();
        assert_eq!(e, Conic::new(1, 0, 4, 0, 0, -4).unwrap());
        let n = Point::new(0, 1, 0).unwrap();
        let (_, t) = p.member_through(&n).unwrap();
        let l = t.polar(&n).unwrap();
        let r = scenario_axis(&p, &h, &l, &farey_sweep(8)).unwrap();
        assert!(r.pass, "{r:#?}");

        let oblique = line(1, 1, -7);
        assert_eq!(scenario_axis(&p, &h, &oblique, &[]), Err(GeomError::NotPerpendicular));
        assert_eq!(scenario_axis(&square(), &param(1, 1), &line(0, 1, 0), &[]), Err(GeomError::CircleHasNoUniqueAxes));
    }
}
