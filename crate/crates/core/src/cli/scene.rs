//! Scene files: named points, lines, pencils and conics.
//!
//! ```json
//! {
//!   "points": { "A": {"x": "1", "y": "1"}, "I": ["1", "0", "0"] },
//!   "lines": { "L": ["0", "1", "0"], "K": {"through": ["A", "I"]} },
//!   "pencils": { "P": ["A", "B", "C", "D"] },
//!   "conics": { "C": ["1", "0", "1", "0", "0", "-1"], "O": {"circle_through": ["A", "B", "C"]} }
//! }
//! ```
//!
//! Names must be unique across all four sections.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::{Deserialize, Serialize};

use crate::arith::Scalar;
use crate::conic::Conic;
use crate::linalg;
use crate::pencil::Pencil;
use crate::projective::{join, Line, Point};

use super::CliError;

/// A JSON object that rejects repeated keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct UniqueMap<V>(pub BTreeMap<String, V>);

impl<V> Default for UniqueMap<V> {
    fn default() -> Self {
        UniqueMap(BTreeMap::new())
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for UniqueMap<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V_<V>(PhantomData<V>);
        impl<'de, V: Deserialize<'de>> Visitor<'de> for V_<V> {
            type Value = UniqueMap<V>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with unique keys")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut m: A) -> Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, v)) = m.next_entry::<String, V>()? {
                    if out.contains_key(&k) {
                        return Err(de::Error::custom(format!("duplicate name {k:?}")));
                    }
                    out.insert(k, v);
                }
                Ok(UniqueMap(out))
            }
        }
        d.deserialize_map(V_(PhantomData))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum LineSpec {
    Coeffs(Line),
    Through { through: [String; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum ConicSpec {
    Coeffs(Conic),
    CircleThrough { circle_through: [String; 3] },
}

/// The file format, before references are resolved.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    #[serde(default)]
    pub points: UniqueMap<Point>,
    #[serde(default)]
    pub lines: UniqueMap<LineSpec>,
    #[serde(default)]
    pub pencils: UniqueMap<[String; 4]>,
    #[serde(default)]
    pub conics: UniqueMap<ConicSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPencil {
    pub base: [String; 4],
    pub pencil: Pencil,
}

/// A scene with every reference resolved.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scene {
    pub points: BTreeMap<String, Point>,
    pub lines: BTreeMap<String, Line>,
    pub pencils: BTreeMap<String, NamedPencil>,
    pub conics: BTreeMap<String, Conic>,
}

/// The circle `a(x² + y²) + d·xz + e·yz + f·z²` through three points.
pub fn circle_through(p: &Point, q: &Point, r: &Point) -> Result<Conic, CliError> {
    let rows: Vec<Vec<Scalar>> = [p, q, r]
        .iter()
        .map(|pt| {
            let [x, y, z] = pt.coords();
            vec![x * x + y * y, x * z, y * z, z * z]
        })
        .collect();
    let ns = linalg::nullspace(&rows, 4);
    let bad = || CliError::InvalidScene("circle_through needs three non-collinear affine points".into());
    if ns.len() != 1 {
        return Err(bad());
    }
    let [a, d, e, f]: [Scalar; 4] = ns.into_iter().next().unwrap().try_into().expect("four unknowns");
    if a.is_zero() {
        return Err(bad());
    }
    Ok(Conic::from_coeffs([a.clone(), Scalar::zero(), a, d, e, f])?)
}

impl SceneFile {
    pub fn parse(text: &str) -> Result<SceneFile, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn resolve(&self) -> Result<Scene, CliError> {
        let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
        let sections: [(&str, Vec<&String>); 4] = [
            ("point", self.points.0.keys().collect()),
            ("line", self.lines.0.keys().collect()),
            ("pencil", self.pencils.0.keys().collect()),
            ("conic", self.conics.0.keys().collect()),
        ];
        for (kind, names) in &sections {
            for n in names {
                if let Some(prev) = seen.insert(n.as_str(), kind) {
                    return Err(CliError::DuplicateName(format!("{n:?} is both a {prev} and a {kind}")));
                }
            }
        }

        let points = self.points.0.clone();
        let point = |n: &String| points.get(n).cloned().ok_or_else(|| CliError::UnknownReference(format!("point {n:?}")));

        let mut lines = BTreeMap::new();
        for (name, spec) in &self.lines.0 {
            let l = match spec {
                LineSpec::Coeffs(l) => l.clone(),
                LineSpec::Through { through: [a, b] } => join(&point(a)?, &point(b)?)?,
            };
            lines.insert(name.clone(), l);
        }

        let mut pencils = BTreeMap::new();
        for (name, base) in &self.pencils.0 {
            let [a, b, c, d] = base.clone().map(|n| point(&n));
            let pencil = Pencil::new(a?, b?, c?, d?)?;
            pencils.insert(name.clone(), NamedPencil { base: base.clone(), pencil });
        }

        let mut conics = BTreeMap::new();
        for (name, spec) in &self.conics.0 {
            let c = match spec {
                ConicSpec::Coeffs(c) => c.clone(),
                ConicSpec::CircleThrough { circle_through: [a, b, c] } => circle_through(&point(a)?, &point(b)?, &point(c)?)?,
            };
            conics.insert(name.clone(), c);
        }

        Ok(Scene {
            points,
            lines,
            pencils,
            conics,
        })
    }
}

impl Scene {
    pub fn load(path: &std::path::Path) -> Result<Scene, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        SceneFile::parse(&text)?.resolve()
    }

    /// The scene written back with every line and conic as coefficients.
    pub fn to_file(&self) -> SceneFile {
        SceneFile {
            points: UniqueMap(self.points.clone()),
            lines: UniqueMap(self.lines.iter().map(|(k, v)| (k.clone(), LineSpec::Coeffs(v.clone()))).collect()),
            pencils: UniqueMap(self.pencils.iter().map(|(k, v)| (k.clone(), v.base.clone())).collect()),
            conics: UniqueMap(self.conics.iter().map(|(k, v)| (k.clone(), ConicSpec::Coeffs(v.clone()))).collect()),
        }
    }

    pub fn point(&self, name: &str) -> Result<&Point, CliError> {
        self.points.get(name).ok_or_else(|| CliError::UnknownReference(format!("point {name:?}")))
    }

    pub fn line(&self, name: &str) -> Result<&Line, CliError> {
        self.lines.get(name).ok_or_else(|| CliError::UnknownReference(format!("line {name:?}")))
    }

    pub fn pencil(&self, name: &str) -> Result<&Pencil, CliError> {
        self.pencils
            .get(name)
            .map(|p| &p.pencil)
            .ok_or_else(|| CliError::UnknownReference(format!("pencil {name:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = r#"{
        "points": {"A": {"x": 1, "y": 1}, "B": {"x": "-1", "y": "1"}, "C": ["-1", "-1", "1"], "D": {"x": 1, "y": -1}},
        "lines": {"L": ["0", "1", "0"], "K": {"through": ["A", "C"]}},
        "pencils": {"P": ["A", "B", "C", "D"]},
        "conics": {"O": {"circle_through": ["A", "B", "C"]}, "U": ["1", "0", "1", "0", "0", "-1"]}
    }"#;

    #[test]
    fn resolves_references() {
        let s = SceneFile::parse(SQUARE).unwrap().resolve().unwrap();
        assert_eq!(s.lines["K"], Line::new(1, -1, 0).unwrap());
        assert_eq!(s.conics["O"], Conic::new(1, 0, 1, 0, 0, -2).unwrap());
        assert!(s.pencil("P").is_ok());
        assert!(matches!(s.pencil("Q"), Err(CliError::UnknownReference(_))));
    }

    #[test]
    fn round_trip() {
        let s = SceneFile::parse(SQUARE).unwrap().resolve().unwrap();
        let text = serde_json::to_string(&s.to_file()).unwrap();
        let back = SceneFile::parse(&text).unwrap().resolve().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_bad_scenes() {
        let dup = r#"{"points": {"A": [1, 0, 1], "A": [2, 0, 1]}}"#;
        assert!(matches!(SceneFile::parse(dup), Err(CliError::Parse(_))));
        let cross = r#"{"points": {"A": [1, 0, 1]}, "lines": {"A": [0, 1, 0]}}"#;
        assert!(matches!(SceneFile::parse(cross).unwrap().resolve(), Err(CliError::DuplicateName(_))));
        let missing = r#"{"lines": {"L": {"through": ["A", "B"]}}}"#;
        assert!(matches!(SceneFile::parse(missing).unwrap().resolve(), Err(CliError::UnknownReference(_))));
        assert!(matches!(SceneFile::parse(r#"{"points": {"A": [0, 0, 0]}}"#), Err(CliError::Parse(_))));
        assert!(matches!(SceneFile::parse(r#"{"shapes": {}}"#), Err(CliError::Parse(_))));
        let collinear = r#"{"points": {"A": {"x":0,"y":0}, "B": {"x":1,"y":0}, "C": {"x":2,"y":0}},
            "conics": {"O": {"circle_through": ["A", "B", "C"]}}}"#;
        assert!(matches!(SceneFile::parse(collinear).unwrap().resolve(), Err(CliError::InvalidScene(_))));
    }
}
