//! Small exact linear algebra over [`Scalar`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Rat, Scalar};

pub(crate) type Vec3 = [Scalar; 3];
pub(crate) type Mat3 = [[Scalar; 3]; 3];

pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

/// `uᵀ M v`.
pub(crate) fn bilinear(m: &Mat3, u: &Vec3, v: &Vec3) -> Scalar {
    dot(u, &mat_vec(m, v))
}

pub(crate) fn det3(m: &Mat3) -> Scalar {
    dot(&m[0], &cross(&m[1], &m[2]))
}

pub(crate) fn det_rows(a: &Vec3, b: &Vec3, c: &Vec3) -> Scalar {
    dot(a, &cross(b, c))
}

/// Adjugate (transposed cofactor matrix); for symmetric input it is symmetric.
pub(crate) fn adj3(m: &Mat3) -> Mat3 {
    // columns of adj(M) are cross products of rows of M
    let c0 = cross(&m[1], &m[2]);
    let c1 = cross(&m[2], &m[0]);
    let c2 = cross(&m[0], &m[1]);
    [
        [c0[0].clone(), c1[0].clone(), c2[0].clone()],
        [c0[1].clone(), c1[1].clone(), c2[1].clone()],
        [c0[2].clone(), c1[2].clone(), c2[2].clone()],
    ]
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Reduced row echelon form with the first nonzero entry of each column as
/// pivot. Returns the pivot columns.
fn rref(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of the right null space, one vector per free column, in column
/// order.
pub(crate) fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][f];
            }
            v
        })
        .collect()
}

/// Canonical representative of a projective vector: the first nonzero entry
/// becomes a positive integer and every rational and radical part is an
/// integer, with no common factor. Zero vectors are left untouched.
pub(crate) fn normalize(v: &mut [Scalar]) {
    let Some(first) = v.iter().position(|x| !x.is_zero()) else {
        return;
    };
    if !v.iter().all(Scalar::is_rational) {
        let inv = v[first].inv().expect("nonzero");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
    }
    let mut parts: Vec<Rat> = Vec::with_capacity(v.len() * 2);
    for x in v.iter() {
        parts.push(x.rational_part().clone());
        if !x.is_rational() {
            parts.push(x.radical_part());
        }
    }
    let lcm = parts.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
    let gcd = parts
        .iter()
        .fold(BigInt::zero(), |acc, p| acc.gcd(&(p.numer() * (&lcm / p.denom()))));
    let mut scale = Rat::new(lcm, gcd);
    if v[first].rational_part().is_negative() && v[first].is_rational() {
        scale = -scale;
    }
    let scale = Scalar::Rat(scale);
    for x in v.iter_mut() {
        *x = &*x * &scale;
    }
}
