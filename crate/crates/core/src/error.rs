use thiserror::Error;

use crate::arith::ArithError;
use crate::conic::Conic;
use crate::projective::{Line, Point};

/// Errors raised by the geometric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("homogeneous coordinates are all zero")]
    ZeroVector,
    #[error("points coincide; no unique joining line")]
    CoincidentPoints,
    #[error("lines coincide; no unique meeting point")]
    CoincidentLines,
    #[error("cross ratio is 0/0")]
    IndeterminateCrossRatio,
    #[error("harmonic conjugate needs a pair of distinct points and a third point outside it")]
    DegenerateRange,
    #[error("point does not lie on the chart's line")]
    PointOffLine,
    #[error("point is singular on the conic; its polar is undefined")]
    KernelPoint,
    #[error("no unique pole for this line")]
    NoUniquePole,
    #[error("a circle has no distinguished axes")]
    CircleHasNoUniqueAxes,
    #[error("conic has no proper center")]
    NoCenter,
    #[error("five points do not determine a unique conic (null space dimension {nullity})")]
    NoUniqueConic { nullity: usize },
    #[error("value is not real, so it has no sign")]
    NotOrderable,
    #[error("operation needs a non-degenerate conic")]
    DegenerateConic,
    #[error("the pairs do not determine a unique involution")]
    RankDeficient,
    #[error("the consistency pair is not conjugate under the involution")]
    Inconsistent,
    #[error("relation has B² = AC and is not an involution")]
    DegenerateRelation,
    #[error("an involution needs two distinct fixed points")]
    CoincidentFixedPoints,
    #[error("base points are not in general position")]
    NotGeneralPosition,
    #[error("point is a base point of the pencil")]
    BasePoint,
    #[error("line passes through a base point of the pencil")]
    LineThroughBasePoint,
    #[error("point must be affine")]
    NotAffine,
    #[error("fixed form recovered from the two pairs differs from the Desargues fixed form")]
    MismatchAgainstDesargues,
    #[error("no two sampled members share a midpoint on the line")]
    NoSuchConfiguration,
    #[error("base points are not concyclic")]
    NotConcyclic,
    #[error("no sampled member meets the line in a pair equidistant from the circle center")]
    EquidistanceFails,
    #[error("member has no proper center")]
    NoProperCenter,
    #[error("{{M, N}} are not the fixed points of the Desargues involution")]
    FixedPointMismatch { m: Box<Point>, n: Box<Point> },
    #[error("line is not perpendicular to an axis of the member")]
    NotPerpendicular,
    #[error("the locus of centers collapses to a single point")]
    DegenerateLocus { common_center: Box<Point>, implicit: Option<Box<Conic>> },
    #[error("the diameter {k} does not pass through the center")]
    DiameterMissesCenter { k: Box<Line> },
}

impl GeomError {
    /// Stable machine-readable name of the error.
    pub fn code(&self) -> &'static str {
        use GeomError::*;
        match self {
            Arith(e) => e.code(),
            ZeroVector => "ZeroVector",
            CoincidentPoints => "CoincidentPoints",
            CoincidentLines => "CoincidentLines",
            IndeterminateCrossRatio => "IndeterminateCrossRatio",
            DegenerateRange => "DegenerateRange",
            PointOffLine => "PointOffLine",
            KernelPoint => "KernelPoint",
            NoUniquePole => "NoUniquePole",
            CircleHasNoUniqueAxes => "CircleHasNoUniqueAxes",
            NoCenter => "NoCenter",
            NoUniqueConic { .. } => "NoUniqueConic",
            NotOrderable => "NotOrderable",
            DegenerateConic => "DegenerateConic",
            RankDeficient => "RankDeficient",
            Inconsistent => "Inconsistent",
            DegenerateRelation => "DegenerateRelation",
            CoincidentFixedPoints => "CoincidentFixedPoints",
            NotGeneralPosition => "NotGeneralPosition",
            BasePoint => "BasePoint",
            LineThroughBasePoint => "LineThroughBasePoint",
            NotAffine => "NotAffine",
            MismatchAgainstDesargues => "MismatchAgainstDesargues",
            NoSuchConfiguration => "NoSuchConfiguration",
            NotConcyclic => "NotConcyclic",
            EquidistanceFails => "EquidistanceFails",
            NoProperCenter => "NoProperCenter",
            FixedPointMismatch { .. } => "FixedPointMismatch",
            NotPerpendicular => "NotPerpendicular",
            DegenerateLocus { .. } => "DegenerateLocus",
            DiameterMissesCenter { .. } => "DiameterMissesCenter",
        }
    }

    /// True for errors meaning "the configuration does not satisfy the
    /// hypothesis being verified", as opposed to malformed input.
    pub fn is_hypothesis_failure(&self) -> bool {
        use GeomError::*;
        matches!(
            self,
            MismatchAgainstDesargues
                | NoSuchConfiguration
                | NotConcyclic
                | EquidistanceFails
                | FixedPointMismatch { .. }
                | NotPerpendicular
                | DiameterMissesCenter { .. }
        )
    }
}
