//! The pencil of conics through four base points and the involution it
//! induces on a line.

use std::fmt;

use num_integer::Integer;

use crate::arith::{shared_radicand, Scalar};
use crate::conic::Conic;
use crate::error::GeomError;
use crate::involution::{apolarity_row, BinaryQuadratic, InvolutionRel};
use crate::linalg;
use crate::projective::{general_position, join, meet, HomParam, Line, LineChart, Point};

/// Coordinates `(λ : μ)` on a pencil; `(1:0)` is `G1` and `(0:1)` is `G2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PencilParam {
    c: [Scalar; 2],
}

impl PencilParam {
    pub fn new(lambda: impl Into<Scalar>, mu: impl Into<Scalar>) -> Result<Self, GeomError> {
        let mut c = [lambda.into(), mu.into()];
        if linalg::is_zero_vec(&c) {
            return Err(GeomError::ZeroVector);
        }
        shared_radicand(c.iter())?;
        linalg::normalize(&mut c);
        Ok(PencilParam { c })
    }

    pub fn lambda(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn mu(&self) -> &Scalar {
        &self.c[1]
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(Scalar::is_rational)
    }

    pub fn conj(&self) -> PencilParam {
        PencilParam::new(self.c[0].conj(), self.c[1].conj()).expect("nonzero")
    }
}

impl fmt::Display for PencilParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.c[0], self.c[1])
    }
}

/// The conics through `A, B, C, D`.
///
/// The degenerate members are `G1 = AB·CD`, `G2 = AD·BC` and `G3 = AC·BD`,
/// and every member is `λ·G1 + μ·G2` for the stored representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    base: [Point; 4],
    g: [Conic; 3],
    g3_param: PencilParam,
}

impl Pencil {
    pub fn new(a: Point, b: Point, c: Point, d: Point) -> Result<Pencil, GeomError> {
        if !general_position(&a, &b, &c, &d) {
            return Err(GeomError::NotGeneralPosition);
        }
        let pair = |p: &Point, q: &Point, r: &Point, s: &Point| -> Result<Conic, GeomError> {
            Ok(Conic::from_line_pair(&join(p, q)?, &join(r, s)?))
        };
        let g1 = pair(&a, &b, &c, &d)?;
        let g2 = pair(&a, &d, &b, &c)?;
        let g3 = pair(&a, &c, &b, &d)?;
        // G3 = α·G1 + β·G2: solve on the six coefficients
        let rows: Vec<Vec<Scalar>> = (0..6)
            .map(|i| vec![g1.coeffs()[i].clone(), g2.coeffs()[i].clone(), g3.coeffs()[i].clone()])
            .collect();
        let ns = linalg::nullspace(&rows, 3);
        let [x, y, z]: [Scalar; 3] = match ns.len() {
            1 => ns.into_iter().next().unwrap().try_into().expect("three unknowns"),
            _ => return Err(GeomError::NotGeneralPosition),
        };
        let g3_param = PencilParam::new(-(&x / &z), -(&y / &z))?;
        Ok(Pencil {
            base: [a, b, c, d],
            g: [g1, g2, g3],
            g3_param,
        })
    }

    pub fn base_points(&self) -> &[Point; 4] {
        &self.base
    }

    pub fn g1(&self) -> &Conic {
        &self.g[0]
    }

    pub fn g2(&self) -> &Conic {
        &self.g[1]
    }

    pub fn g3(&self) -> &Conic {
        &self.g[2]
    }

    /// `λ·G1 + μ·G2`.
    pub fn member(&self, t: &PencilParam) -> Conic {
        Conic::combine(t.lambda(), &self.g[0], t.mu(), &self.g[1]).expect("G1 and G2 are independent")
    }

    /// The unique member through `x`.
    pub fn member_through(&self, x: &Point) -> Result<(PencilParam, Conic), GeomError> {
        let e1 = self.g[0].eval(x)?;
        let e2 = self.g[1].eval(x)?;
        if e1.is_zero() && e2.is_zero() {
            return Err(GeomError::BasePoint);
        }
        let t = PencilParam::new(e2, -e1)?;
        let c = self.member(&t);
        Ok((t, c))
    }

    /// `G1`, `G2`, `G3` with their parameters.
    pub fn degenerate_members(&self) -> [(PencilParam, Conic); 3] {
        [
            (PencilParam::new(1, 0).unwrap(), self.g[0].clone()),
            (PencilParam::new(0, 1).unwrap(), self.g[1].clone()),
            (self.g3_param.clone(), self.g[2].clone()),
        ]
    }

    /// Meets of opposite sides: the vertices of `G1`, `G2`, `G3`.
    pub fn diagonal_points(&self) -> [Point; 3] {
        let [a, b, c, d] = &self.base;
        let side = |p: &Point, q: &Point| join(p, q).expect("distinct base points");
        let diag = |l: Line, m: Line| meet(&l, &m).expect("opposite sides are distinct");
        [
            diag(side(a, b), side(c, d)),
            diag(side(a, d), side(b, c)),
            diag(side(a, c), side(b, d)),
        ]
    }

    /// Midpoints of the six segments joining base points, in the order
    /// AB, AC, AD, BC, BD, CD. Base points at infinity have no midpoints.
    pub fn side_midpoints(&self) -> Result<[Point; 6], GeomError> {
        let b = &self.base;
        let idx = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mids: Vec<Point> = idx
            .iter()
            .map(|&(i, j)| b[i].midpoint(&b[j]))
            .collect::<Result<_, _>>()?;
        Ok(mids.try_into().expect("six pairs"))
    }

    /// The member with equal `x²`, `y²` coefficients and no `xy` term, when
    /// the base points are concyclic.
    pub fn circle_member(&self) -> Option<(PencilParam, Conic)> {
        let (g1, g2) = (self.g[0].coeffs(), self.g[1].coeffs());
        let rows = vec![
            vec![&g1[0] - &g1[2], &g2[0] - &g2[2]],
            vec![g1[1].clone(), g2[1].clone()],
        ];
        let ns = linalg::nullspace(&rows, 2);
        let [l, m]: [Scalar; 2] = ns.into_iter().next()?.try_into().ok()?;
        let t = PencilParam::new(l, m).ok()?;
        let c = self.member(&t);
        (!c.is_degenerate()).then_some((t, c))
    }

    pub fn passes_through_base_point(&self, l: &Line) -> bool {
        self.base.iter().any(|p| l.contains(p))
    }

    /// The involution cut on `l` by the members of the pencil.
    pub fn desargues_involution(&self, l: &Line) -> Result<DesarguesInvolution, GeomError> {
        if self.passes_through_base_point(l) {
            return Err(GeomError::LineThroughBasePoint);
        }
        let chart = LineChart::default_for(l);
        let pairs: Vec<BinaryQuadratic> = self
            .g
            .iter()
            .map(|g| g.restrict_to_line(&chart))
            .collect::<Result<_, _>>()?;
        let rows: Vec<Vec<Scalar>> = pairs.iter().map(apolarity_row).collect();
        let ns = linalg::nullspace(&rows, 3);
        if ns.len() != 1 {
            return Err(GeomError::RankDeficient);
        }
        let [a, b, c]: [Scalar; 3] = ns.into_iter().next().unwrap().try_into().expect("three unknowns");
        let involution = InvolutionRel::new(a, b, c)?;
        Ok(DesarguesInvolution {
            involution,
            chart,
            pairs: pairs.try_into().expect("three members"),
        })
    }
}

/// The Desargues involution on a line, with the chart it is expressed in and
/// the pairs cut by `G1`, `G2`, `G3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesarguesInvolution {
    pub involution: InvolutionRel,
    pub chart: LineChart,
    pub pairs: [BinaryQuadratic; 3],
}

impl DesarguesInvolution {
    pub fn fixed_form(&self) -> BinaryQuadratic {
        self.involution.fixed_form()
    }

    /// The fixed points as points of the plane.
    pub fn fixed_points(&self) -> Result<Vec<Point>, GeomError> {
        let roots = self.involution.fixed_points()?;
        Ok(roots.finite_first().into_iter().map(|r| self.chart.point_of(r)).collect())
    }

    /// True iff the point of the line at chart parameter `p` is fixed.
    pub fn fixes(&self, p: &HomParam) -> Result<bool, GeomError> {
        Ok(self.fixed_form().eval(p)?.is_zero())
    }
}

/// Deterministic parameter sweep `(1:0), (0:1), (1:1), (1:−1), (2:1), (1:2),
/// (2:−1), (1:−2), (3:1), …` of length `n`.
pub fn farey_sweep(n: usize) -> Vec<PencilParam> {
    let mut out = Vec::with_capacity(n);
    let push = |a: i64, b: i64, out: &mut Vec<PencilParam>| {
        let p = PencilParam::new(a, b).unwrap();
        if out.len() < n && !out.contains(&p) {
            out.push(p);
        }
    };
    push(1, 0, &mut out);
    push(0, 1, &mut out);
    let mut m: i64 = 1;
    while out.len() < n {
        let ks: Vec<i64> = (1..=m).filter(|k| k.gcd(&m) == 1).collect();
        for &k in &ks {
            push(m, k, &mut out);
            push(k, m, &mut out);
        }
        for &k in &ks {
            push(m, -k, &mut out);
            push(k, -m, &mut out);
        }
        m += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::conic::IntersectionKind;
    use crate::involution::apolar;

    fn square() -> Pencil {
        Pencil::new(Point::affine(1, 1), Point::affine(-1, 1), Point::affine(-1, -1), Point::affine(1, -1)).unwrap()
    }

    fn conic(c: [i64; 6]) -> Conic {
        Conic::from_coeffs(c.map(Scalar::from_int)).unwrap()
    }

    fn param(l: i64, m: i64) -> PencilParam {
        PencilParam::new(l, m).unwrap()
    }

    #[test]
    fn square_basis() {
        let p = square();
        assert_eq!(p.g1(), &conic([0, 0, 1, 0, 0, -1]));
        assert_eq!(p.g2(), &conic([1, 0, 0, 0, 0, -1]));
        assert_eq!(p.g3(), &conic([1, 0, -1, 0, 0, 0]));
        let degs = p.degenerate_members();
        assert_eq!(degs[2].0, param(1, -1));
        for (t, g) in &degs {
            assert_eq!(&p.member(t), g);
            assert!(g.det().is_zero());
        }
    }

    #[test]
    fn trapezoid_is_a_pencil_and_collinear_is_not() {
        assert!(Pencil::new(Point::affine(0, 0), Point::affine(2, 0), Point::affine(0, 2), Point::affine(2, 4)).is_ok());
        let bad = Pencil::new(Point::affine(0, 0), Point::affine(1, 0), Point::affine(2, 0), Point::affine(0, 1));
        assert_eq!(bad, Err(GeomError::NotGeneralPosition));
    }

    #[test]
    fn members() {
        let p = square();
        assert_eq!(p.member(&param(1, 1)), conic([1, 0, 1, 0, 0, -2]));
        assert_eq!(p.member(&param(1, 0)), *p.g1());
        assert_eq!(p.member(&param(0, 1)), *p.g2());
        for t in farey_sweep(12) {
            let c = p.member(&t);
            assert!(p.base_points().iter().all(|b| c.contains(b)));
        }
    }

    #[test]
    fn member_through_examples() {
        let p = square();
        let (t, c) = p.member_through(&Point::affine(0, rat(1, 2))).unwrap();
        assert_eq!(t, PencilParam::new(Scalar::one(), Scalar::from(rat(-3, 4))).unwrap());
        assert_eq!(c, conic([3, 0, -4, 0, 0, 1]));
        let (t, c) = p.member_through(&Point::affine(0, 0)).unwrap();
        assert_eq!(t, param(1, -1));
        assert_eq!(&c, p.g3());
        assert_eq!(p.member_through(&Point::affine(1, 1)), Err(GeomError::BasePoint));
    }

    #[test]
    fn circle_members() {
        let (t, c) = square().circle_member().unwrap();
        assert_eq!(t, param(1, 1));
        assert_eq!(c, conic([1, 0, 1, 0, 0, -2]));
        let trapezoid = Pencil::new(Point::affine(0, 0), Point::affine(2, 0), Point::affine(0, 2), Point::affine(2, 4)).unwrap();
        assert!(trapezoid.circle_member().is_none());
    }

    #[test]
    fn diagonal_points_are_vertices() {
        let p = square();
        let diag = p.diagonal_points();
        for ((_, g), d) in p.degenerate_members().iter().zip(&diag) {
            assert_eq!(g.vertex().as_ref(), Some(d));
        }
        assert_eq!(diag[2], Point::affine(0, 0));
    }

    #[test]
    fn square_involution_on_x_axis() {
        let p = square();
        let y0 = Line::new(0, 1, 0).unwrap();
        let d = p.desargues_involution(&y0).unwrap();
        assert_eq!(d.involution, InvolutionRel::new(0, 1, 0).unwrap());
        assert_eq!(d.pairs[0], BinaryQuadratic::new(0, 0, 1).unwrap());
        assert_eq!(d.pairs[1], BinaryQuadratic::new(1, 0, -1).unwrap());
        assert_eq!(d.pairs[2], BinaryQuadratic::new(1, 0, 0).unwrap());
        let fixed = d.fixed_points().unwrap();
        assert!(fixed.contains(&Point::affine(0, 0)));
        assert!(fixed.contains(&Point::new(1, 0, 0).unwrap()));

        let circle = p.member(&param(1, 1)).intersect_line(&y0).unwrap();
        assert_eq!(circle.kind, IntersectionKind::TwoPoints);
        assert_eq!(circle.restriction, BinaryQuadratic::new(1, 0, -2).unwrap());
        assert!(apolar(&circle.restriction, &d.fixed_form()).unwrap().is_zero());

        let through_a = Line::new(1, -1, 0).unwrap();
        assert_eq!(p.desargues_involution(&through_a), Err(GeomError::LineThroughBasePoint));
    }

    #[test]
    fn every_member_pair_is_conjugate() {
        let p = Pencil::new(Point::affine(0, 0), Point::affine(3, 0), Point::affine(1, 2), Point::affine(-1, 5)).unwrap();
        let l = Line::new(2, 7, -4).unwrap();
        let d = p.desargues_involution(&l).unwrap();
        for t in farey_sweep(20) {
            let q = p.member(&t).restrict_to_line(&d.chart).unwrap();
            assert!(d.involution.is_conjugate_pair(&q).unwrap(), "member {t}");
        }
    }

    #[test]
    fn sweep_order() {
        let expect = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (2, -1), (1, -2), (3, 1), (1, 3), (3, 2), (2, 3)];
        let got = farey_sweep(expect.len());
        assert_eq!(got, expect.map(|(a, b)| param(a, b)).to_vec());
    }
}
