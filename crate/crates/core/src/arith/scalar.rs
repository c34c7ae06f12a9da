use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ArithError, Rat};

/// An element `rational_part + radical_part·√d` of `Q(√d)`.
///
/// `d` is square-free, nonzero and different from 1. A value whose radical
/// part is zero is rational; [`Scalar`] never stores such a value as an
/// extension element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    rational_part: Rat,
    radical_part: Rat,
    d: BigInt,
}

impl QuadExt {
    /// Builds `a + b√d`, checking that `d` is a valid square-free radicand.
    pub fn new(a: Rat, b: Rat, d: BigInt) -> Result<Self, ArithError> {
        let (square, core) = super::squarefree_decompose(&d, super::DEFAULT_TRIAL_BOUND)?;
        if d.is_zero() || d.is_one() || !square.is_one() || core != d {
            return Err(ArithError::InvalidRadicand(d));
        }
        Ok(QuadExt {
            rational_part: a,
            radical_part: b,
            d,
        })
    }

    pub(crate) fn new_unchecked(a: Rat, b: Rat, d: BigInt) -> Self {
        debug_assert!(!d.is_zero() && !d.is_one());
        QuadExt {
            rational_part: a,
            radical_part: b,
            d,
        }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rational_part
    }

    pub fn radical_part(&self) -> &Rat {
        &self.radical_part
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.radical_part.is_zero()
    }

    pub fn conj(&self) -> QuadExt {
        QuadExt {
            rational_part: self.rational_part.clone(),
            radical_part: -self.radical_part.clone(),
            d: self.d.clone(),
        }
    }

    /// `x·conj(x) = a² − b²d`, always rational.
    pub fn norm(&self) -> Rat {
        &self.rational_part * &self.rational_part
            - &self.radical_part * &self.radical_part * Rat::from_integer(self.d.clone())
    }
}

/// Exact scalar: a rational or an irrational element of a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rat),
    Ext(QuadExt),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rat::from_integer(BigInt::from(n)))
    }

    /// Collapses `a + 0·√d` to a rational.
    pub(crate) fn from_parts(a: Rat, b: Rat, d: Option<BigInt>) -> Self {
        match d {
            Some(d) if !b.is_zero() => Scalar::Ext(QuadExt::new_unchecked(a, b, d)),
            _ => Scalar::Rat(a),
        }
    }

    pub fn from_ext(x: QuadExt) -> Self {
        let d = x.d;
        Scalar::from_parts(x.rational_part, x.radical_part, Some(d))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Ext(_) => None,
        }
    }

    /// The radicand `d` when the value is irrational.
    pub fn radicand(&self) -> Option<&BigInt> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Ext(x) => Some(&x.d),
        }
    }

    pub fn rational_part(&self) -> &Rat {
        match self {
            Scalar::Rat(r) => r,
            Scalar::Ext(x) => &x.rational_part,
        }
    }

    pub fn radical_part(&self) -> Rat {
        match self {
            Scalar::Rat(_) => Rat::zero(),
            Scalar::Ext(x) => x.radical_part.clone(),
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Rat(_) => self.clone(),
            Scalar::Ext(x) => Scalar::Ext(x.conj()),
        }
    }

    pub fn norm(&self) -> Rat {
        match self {
            Scalar::Rat(r) => r * r,
            Scalar::Ext(x) => x.norm(),
        }
    }

    fn parts(&self) -> (&Rat, Rat, Option<&BigInt>) {
        match self {
            Scalar::Rat(r) => (r, Rat::zero(), None),
            Scalar::Ext(x) => (&x.rational_part, x.radical_part.clone(), Some(&x.d)),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        let d = common_radicand(self.radicand(), other.radicand())?;
        let (a1, b1, _) = self.parts();
        let (a2, b2, _) = other.parts();
        Ok(Scalar::from_parts(a1 + a2, b1 + b2, d))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        let d = common_radicand(self.radicand(), other.radicand())?;
        if let (Scalar::Rat(x), Scalar::Rat(y)) = (self, other) {
            return Ok(Scalar::Rat(x * y));
        }
        let (a1, b1, _) = self.parts();
        let (a2, b2, _) = other.parts();
        let dr = Rat::from_integer(d.clone().expect("irrational operand has a radicand"));
        let a = a1 * a2 + &b1 * &b2 * dr;
        let b = a1 * &b2 + a2 * &b1;
        Ok(Scalar::from_parts(a, b, d))
    }

    pub fn inv(&self) -> Result<Scalar, ArithError> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(ArithError::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            // d is not a square, so the norm of a nonzero element is nonzero
            Scalar::Ext(x) => {
                let n = x.norm();
                Ok(Scalar::from_parts(
                    &x.rational_part / &n,
                    -(&x.radical_part / &n),
                    Some(x.d.clone()),
                ))
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ArithError> {
        common_radicand(self.radicand(), other.radicand())?;
        self.checked_mul(&other.inv()?)
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// Sign of the value when it is real: always for rationals and for
    /// `d > 0`, never for irrational elements of an imaginary field.
    pub fn signum(&self) -> Option<Ordering> {
        match self {
            Scalar::Rat(r) => Some(r.cmp(&Rat::zero())),
            Scalar::Ext(x) if x.d.is_negative() => None,
            Scalar::Ext(x) => {
                let sa = x.rational_part.cmp(&Rat::zero());
                let sb = x.radical_part.cmp(&Rat::zero());
                if sa == Ordering::Equal || sa == sb {
                    return Some(sb);
                }
                // opposite signs: compare a² with b²d
                let a2 = &x.rational_part * &x.rational_part;
                let b2d = &x.radical_part * &x.radical_part * Rat::from_integer(x.d.clone());
                Some(if a2 > b2d { sa } else { sb })
            }
        }
    }

    pub fn is_real(&self) -> bool {
        self.signum().is_some()
    }

    /// Floating-point approximation; `None` for non-real values.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Scalar::Rat(r) => r.to_f64(),
            Scalar::Ext(x) if x.d.is_negative() => None,
            Scalar::Ext(x) => Some(x.rational_part.to_f64()? + x.radical_part.to_f64()? * x.d.to_f64()?.sqrt()),
        }
    }
}

/// The single radicand shared by a set of operands, or an error if two
/// different radicands meet.
pub(crate) fn common_radicand(
    x: Option<&BigInt>,
    y: Option<&BigInt>,
) -> Result<Option<BigInt>, ArithError> {
    match (x, y) {
        (Some(a), Some(b)) if a != b => Err(ArithError::MixedRadicals {
            left: a.clone(),
            right: b.clone(),
        }),
        (Some(a), _) | (None, Some(a)) => Ok(Some(a.clone())),
        (None, None) => Ok(None),
    }
}

/// Checks that all values live in one common field.
pub fn shared_radicand<'a>(
    values: impl IntoIterator<Item = &'a Scalar>,
) -> Result<Option<BigInt>, ArithError> {
    let mut acc: Option<BigInt> = None;
    for v in values {
        acc = common_radicand(acc.as_ref(), v.radicand())?;
    }
    Ok(acc)
}

impl From<Rat> for Scalar {
    fn from(r: Rat) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::Rat(Rat::from_integer(n))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Ext(x) => Scalar::Ext(QuadExt::new_unchecked(
                -x.rational_part.clone(),
                -x.radical_part.clone(),
                x.d.clone(),
            )),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// Operators panic when operands come from different quadratic fields; the
// `checked_*` methods report that case as `ArithError::MixedRadicals`.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {}", stringify!($method), e),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::Ext(x) => {
                let b = &x.radical_part;
                if !x.rational_part.is_zero() {
                    write!(f, "{}", x.rational_part)?;
                    f.write_str(if b.is_negative() { " - " } else { " + " })?;
                } else if b.is_negative() {
                    f.write_str("-")?;
                }
                let b = b.abs();
                if !b.is_one() {
                    write!(f, "{}·", b)?;
                }
                write!(f, "√{}", x.d)
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = ArithError;

    /// Parses a rational written as `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rat(s).map(Scalar::Rat)
    }
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat, ArithError> {
    let t = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(n))
        }
    }
}
