//! JSON representations of the exact types.
//!
//! Rationals are strings (`"3/5"`), irrational scalars are
//! `{"a": "p/q", "b": "p/q", "d": int}`. Points, lines, conics and forms are
//! coefficient arrays. Chart parameters serialize as their value, with `"inf"`
//! for `(1:0)`; pencil parameters as `["λ", "μ"]`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::arith::{QuadExt, Rat, RootPair, Scalar};
use crate::conic::{Conic, ConicKind, DegenerateKind, IntersectionKind};
use crate::involution::{BinaryQuadratic, InvolutionRel};
use crate::pencil::PencilParam;
use crate::projective::{CrossRatio, HomParam, Line, LineChart, Point};

fn rat_string(r: &Rat) -> String {
    r.to_string()
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scalar::Rat(r) => s.serialize_str(&rat_string(r)),
            Scalar::Ext(x) => {
                let mut m = s.serialize_map(Some(3))?;
                m.serialize_entry("a", &rat_string(x.rational_part()))?;
                m.serialize_entry("b", &rat_string(x.radical_part()))?;
                match x.discriminant().to_i64() {
                    Some(d) => m.serialize_entry("d", &d)?,
                    None => m.serialize_entry("d", &x.discriminant().to_string())?,
                }
                m.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Str(String),
}

impl Number {
    fn to_rat<E: de::Error>(&self) -> Result<Rat, E> {
        match self {
            Number::Int(n) => Ok(Rat::from_integer(BigInt::from(*n))),
            Number::Str(s) => crate::arith::parse_rat(s).map_err(E::custom),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarRepr {
    Plain(Number),
    Ext { a: Number, b: Number, d: Number },
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match ScalarRepr::deserialize(d)? {
            ScalarRepr::Plain(n) => Ok(Scalar::Rat(n.to_rat()?)),
            ScalarRepr::Ext { a, b, d } => {
                let a = a.to_rat()?;
                let b = b.to_rat()?;
                let d: BigInt = match d {
                    Number::Int(n) => BigInt::from(n),
                    Number::Str(s) => s.trim().parse().map_err(de::Error::custom)?,
                };
                let x = QuadExt::new(a, b, d).map_err(de::Error::custom)?;
                Ok(Scalar::from_ext(x))
            }
        }
    }
}

fn serialize_array<S: Serializer>(items: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(items.len()))?;
    for x in items {
        seq.serialize_element(x)?;
    }
    seq.end()
}

macro_rules! triple_serde {
    ($ty:ty, $ctor:expr, $get:ident) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                serialize_array(self.$get(), s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let [a, b, c] = <[Scalar; 3]>::deserialize(d)?;
                $ctor([a, b, c]).map_err(de::Error::custom)
            }
        }
    };
}

triple_serde!(Line, Line::from_coords, coords);
triple_serde!(BinaryQuadratic, BinaryQuadratic::from_coeffs, coeffs);
triple_serde!(InvolutionRel, |[a, b, c]: [Scalar; 3]| InvolutionRel::new(a, b, c), coeffs);

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_array(self.coords(), s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Homogeneous([Scalar; 3]),
    Affine { x: Scalar, y: Scalar },
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match PointRepr::deserialize(d)? {
            PointRepr::Homogeneous(c) => Point::from_coords(c).map_err(de::Error::custom),
            PointRepr::Affine { x, y } => Point::from_coords([x, y, Scalar::one()]).map_err(de::Error::custom),
        }
    }
}

impl Serialize for Conic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_array(self.coeffs(), s)
    }
}

impl<'de> Deserialize<'de> for Conic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let c = <[Scalar; 6]>::deserialize(d)?;
        Conic::from_coeffs(c).map_err(de::Error::custom)
    }
}

impl Serialize for HomParam {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_value() {
            None => s.serialize_str("inf"),
            Some(v) => v.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for HomParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Inf(InfTag),
            Value(Scalar),
        }
        #[derive(Deserialize)]
        enum InfTag {
            #[serde(rename = "inf")]
            Inf,
        }
        match Repr::deserialize(d)? {
            Repr::Inf(_) => Ok(HomParam::infinity()),
            Repr::Value(v) => Ok(HomParam::value(v)),
        }
    }
}

impl Serialize for PencilParam {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_array(&[self.lambda().clone(), self.mu().clone()], s)
    }
}

impl<'de> Deserialize<'de> for PencilParam {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [l, m] = <[Scalar; 2]>::deserialize(d)?;
        PencilParam::new(l, m).map_err(de::Error::custom)
    }
}

impl Serialize for CrossRatio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CrossRatio::Finite(v) => v.serialize(s),
            CrossRatio::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `{"roots": [...], "double": bool, "d": int | null}`, finite roots first.
impl Serialize for RootPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let roots = self.finite_first();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("roots", &roots)?;
        m.serialize_entry("double", &self.is_double())?;
        m.serialize_entry("d", &self.radicand().map(|d| d.to_string()))?;
        m.end()
    }
}

/// A chart as its line and the two representative vectors.
impl Serialize for LineChart {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let (w0, w1) = self.representatives();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("line", self.line())?;
        m.serialize_entry("r0", &w0[..])?;
        m.serialize_entry("r1", &w1[..])?;
        m.end()
    }
}

impl Serialize for IntersectionKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            IntersectionKind::TwoPoints => "two_points",
            IntersectionKind::DoublePoint => "double_point",
            IntersectionKind::ComponentContained => "component_contained",
        })
    }
}

impl Serialize for ConicKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            ConicKind::Ellipse { real: true } => "ellipse",
            ConicKind::Ellipse { real: false } => "imaginary_ellipse",
            ConicKind::Parabola => "parabola",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Degenerate(DegenerateKind::LinePair { real: true, parallel: false }) => "line_pair",
            ConicKind::Degenerate(DegenerateKind::LinePair { real: true, parallel: true }) => "parallel_line_pair",
            ConicKind::Degenerate(DegenerateKind::LinePair { real: false, parallel: false }) => "imaginary_line_pair",
            ConicKind::Degenerate(DegenerateKind::LinePair { real: false, parallel: true }) => "imaginary_parallel_line_pair",
            ConicKind::Degenerate(DegenerateKind::DoubleLine) => "double_line",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, squarefree_sqrt};

    fn round_trip<T: Serialize + for<'de> Deserialize<'de> + PartialEq + std::fmt::Debug>(x: &T) -> String {
        let s = serde_json::to_string(x).unwrap();
        let back: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, x);
        s
    }

    #[test]
    fn scalars() {
        assert_eq!(round_trip(&Scalar::from(rat(-3, 5))), r#""-3/5""#);
        let r2 = squarefree_sqrt(&rat(8, 1)).unwrap() + Scalar::from(rat(1, 2));
        assert_eq!(round_trip(&r2), r#"{"a":"1/2","b":"2","d":2}"#);
        let x: Scalar = serde_json::from_str("7").unwrap();
        assert_eq!(x, Scalar::from_int(7));
        assert!(serde_json::from_str::<Scalar>(r#"{"a":"0","b":"1","d":4}"#).is_err());
        assert!(serde_json::from_str::<Scalar>(r#""1/0""#).is_err());
    }

    #[test]
    fn geometric_values() {
        let p = Point::affine(rat(1, 2), 3);
        assert_eq!(round_trip(&p), r#"["1","6","2"]"#);
        let q: Point = serde_json::from_str(r#"{"x":"1/2","y":3}"#).unwrap();
        assert_eq!(q, p);
        round_trip(&Line::new(0, 1, -1).unwrap());
        round_trip(&Conic::new(1, 0, 1, 0, 0, -1).unwrap());
        round_trip(&BinaryQuadratic::new(1, 0, -2).unwrap());
        round_trip(&InvolutionRel::new(0, 1, 0).unwrap());
        assert_eq!(round_trip(&PencilParam::new(1, -1).unwrap()), r#"["1","-1"]"#);
        assert_eq!(round_trip(&HomParam::infinity()), r#""inf""#);
        assert_eq!(round_trip(&HomParam::value(Scalar::from(rat(-3, 1)))), r#""-3""#);
        assert!(serde_json::from_str::<Point>(r#"["0","0","0"]"#).is_err());
    }

    #[test]
    fn root_pairs_list_finite_roots_first() {
        let f = InvolutionRel::new(0, 1, 0).unwrap().fixed_points().unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"roots":["0","inf"],"double":false,"d":null}"#);
    }
}
