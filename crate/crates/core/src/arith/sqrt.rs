use num_bigint::{BigInt, Sign};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ArithError, Rat, Scalar};

/// Trial-division bound used when extracting square factors.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// Writes a nonzero integer as `square² · core` with `core` square-free and
/// carrying the sign of the input. `0` decomposes as `(0, 1)`.
///
/// Factors are found by trial division up to `bound`. A leftover cofactor with
/// no prime factor below the bound is certified square-free when it is not a
/// perfect square and is below `bound³` (it then has at most two prime
/// factors, which cannot be equal). Anything else is `UnreducedRadical`.
pub fn squarefree_decompose(n: &BigInt, bound: u64) -> Result<(BigInt, BigInt), ArithError> {
    if n.is_zero() {
        return Ok((BigInt::zero(), BigInt::one()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mag = n.abs();
    let (square, core) = match mag.to_u128() {
        Some(m) => {
            let (s, c) = decompose_u128(m, bound)
                .ok_or_else(|| ArithError::UnreducedRadical { radicand: n.clone() })?;
            (BigInt::from(s), BigInt::from(c))
        }
        None => decompose_big(&mag, bound)
            .ok_or_else(|| ArithError::UnreducedRadical { radicand: n.clone() })?,
    };
    Ok((square, core * sign))
}

fn decompose_u128(mut m: u128, bound: u64) -> Option<(u128, u128)> {
    let mut square: u128 = 1;
    let mut core: u128 = 1;
    let r = m.sqrt();
    if r * r == m {
        return Some((r, 1));
    }
    let bound = bound as u128;
    let mut p: u128 = 2;
    while p <= bound && p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
            let r = m.sqrt();
            if r * r == m {
                return Some((square * r, core));
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m == 1 {
        return Some((square, core));
    }
    if p * p > m || m / bound / bound < bound {
        // m is prime, or a product of two distinct primes above the bound
        return Some((square, core * m));
    }
    None
}

fn decompose_big(mag: &BigInt, bound: u64) -> Option<(BigInt, BigInt)> {
    let mut m = mag.clone();
    let mut square = BigInt::one();
    let mut core = BigInt::one();
    let r = m.sqrt();
    if &r * &r == m {
        return Some((r, core));
    }
    let mut p: u64 = 2;
    while p <= bound {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        if (&m % &bp).is_zero() {
            let mut e = 0u32;
            while (&m % &bp).is_zero() {
                m /= &bp;
                e += 1;
            }
            square *= bp.pow(e / 2);
            if e % 2 == 1 {
                core *= &bp;
            }
            let r = m.sqrt();
            if &r * &r == m {
                return Some((square * r, core));
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return Some((square, core));
    }
    let bp = BigInt::from(p);
    let b = BigInt::from(bound);
    if &bp * &bp > m || m < &b * &b * &b {
        return Some((square, core * m));
    }
    None
}

/// Exact square root of a rational: rational when `r` is a perfect square,
/// otherwise `s·√d` with `d` square-free.
pub fn squarefree_sqrt(r: &Rat) -> Result<Scalar, ArithError> {
    squarefree_sqrt_with_bound(r, DEFAULT_TRIAL_BOUND)
}

pub fn squarefree_sqrt_with_bound(r: &Rat, bound: u64) -> Result<Scalar, ArithError> {
    if r.is_zero() {
        return Ok(Scalar::zero());
    }
    // √(p/q) = √(p·q) / q
    let (p, q) = (r.numer(), r.denom());
    let (square, core) = squarefree_decompose(&(p * q), bound)?;
    let coeff = Rat::new(square, q.clone());
    if core.is_one() {
        return Ok(Scalar::Rat(coeff));
    }
    debug_assert!(core.sign() != Sign::NoSign);
    Ok(Scalar::from_parts(Rat::zero(), coeff, Some(core)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn perfect_square_is_rational() {
        assert_eq!(squarefree_sqrt(&rat(9, 4)).unwrap(), Scalar::Rat(rat(3, 2)));
        assert_eq!(squarefree_sqrt(&int(0)).unwrap(), Scalar::zero());
    }

    #[test]
    fn eight_is_two_root_two() {
        let s = squarefree_sqrt(&int(8)).unwrap();
        assert_eq!(s.radicand(), Some(&BigInt::from(2)));
        assert_eq!(s.radical_part(), int(2));
        assert_eq!(s.square(), Scalar::from_int(8));
    }

    #[test]
    fn minus_one_is_imaginary_unit() {
        let s = squarefree_sqrt(&int(-1)).unwrap();
        assert_eq!(s.radicand(), Some(&BigInt::from(-1)));
        assert_eq!(s.radical_part(), int(1));
        assert_eq!(s.square(), Scalar::from_int(-1));
    }

    #[test]
    fn fractions_rationalize_the_denominator() {
        // √(3/8) = √24 / 8 = (1/4)√6
        let s = squarefree_sqrt(&rat(3, 8)).unwrap();
        assert_eq!(s.radicand(), Some(&BigInt::from(6)));
        assert_eq!(s.radical_part(), rat(1, 4));
    }

    #[test]
    fn large_prime_cofactors() {
        // 1_000_003 is prime, 1_000_033 is prime: product is square-free
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64) * 4;
        let (s, c) = squarefree_decompose(&n, DEFAULT_TRIAL_BOUND).unwrap();
        assert_eq!(s, BigInt::from(2));
        assert_eq!(c, BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64));
    }

    #[test]
    fn unreduced_radical_when_bound_is_too_small() {
        // 101·103·107 with bound 10: cofactor exceeds bound³ and is not a square
        let n = BigInt::from(101 * 103 * 107);
        assert!(matches!(
            squarefree_decompose(&n, 10),
            Err(ArithError::UnreducedRadical { .. })
        ));
        // 101² · 103 cannot be certified either
        assert!(squarefree_decompose(&BigInt::from(101 * 101 * 103), 10).is_err());
        assert!(squarefree_decompose(&n, 200).is_ok());
    }

    #[test]
    fn big_inputs_take_the_bigint_path() {
        let n = BigInt::from(2).pow(130) * 3;
        let (s, c) = squarefree_decompose(&n, DEFAULT_TRIAL_BOUND).unwrap();
        assert_eq!(s, BigInt::from(2).pow(65));
        assert_eq!(c, BigInt::from(3));
        // u128::MAX has prime factors 6700417 and 67280421310721 beyond the bound
        let p = BigInt::from(1_000_003u64);
        let hard = BigInt::from(u128::MAX) * &p * &p;
        assert!(squarefree_decompose(&hard, DEFAULT_TRIAL_BOUND).is_err());
        assert_eq!(squarefree_decompose(&-BigInt::from(12), 10).unwrap(), (BigInt::from(2), BigInt::from(-3)));
    }
}
