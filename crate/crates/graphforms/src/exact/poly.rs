//! Integer polynomials and exact interpolation.

use super::matrix::{bareiss_det, IMat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A polynomial with arbitrary-precision integer coefficients, ascending
/// degree; the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluate the matrix polynomial `f(A)`.
    pub fn eval_matrix(&self, a: &IMat) -> IMat {
        use super::matrix::{identity, mat_add, mat_mul, mat_scale};
        let n = a.len();
        let mut acc = vec![vec![BigInt::zero(); n]; n];
        for c in self.coeffs.iter().rev() {
            acc = mat_mul(&acc, a);
            let ci = mat_scale(&identity(n), c);
            acc = mat_add(&acc, &ci);
        }
        acc
    }

    pub fn all_coeffs_positive(&self) -> bool {
        !self.coeffs.is_empty() && self.coeffs.iter().all(|c| c.is_positive())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{}", i)?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Interpolate the unique polynomial of degree `< points.len()` through
/// `(x_i, y_i)`; panics if the result is not integral (callers supply values
/// of integer polynomials).
pub fn lagrange_interpolate(points: &[(BigInt, BigInt)]) -> IntPolynomial {
    let k = points.len();
    if k == 0 {
        return IntPolynomial::zero();
    }
    let xs: Vec<BigRational> =
        points.iter().map(|(x, _)| BigRational::from(x.clone())).collect();
    // Newton's divided differences
    let mut table: Vec<BigRational> =
        points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &xs[i] - &xs[i - level];
            table[i] = num / den;
        }
    }
    // expand p(x) = sum_i table[i] * prod_{j<i} (x - x_j)
    let mut coeffs = vec![BigRational::zero(); k];
    let mut basis = vec![BigRational::zero(); k];
    basis[0] = BigRational::one();
    let mut basis_len = 1usize;
    for (i, coef) in table.iter().enumerate() {
        for j in 0..basis_len {
            let term = &basis[j] * coef;
            coeffs[j] += term;
        }
        if i + 1 < k {
            // basis *= (x - x_i)
            for j in (0..basis_len).rev() {
                let shifted = basis[j].clone();
                basis[j + 1] += &shifted;
                basis[j] = -(&xs[i] * &shifted);
            }
            basis_len += 1;
        }
    }
    let ints: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated polynomial must be integral");
            c.to_integer()
        })
        .collect();
    IntPolynomial::new(ints)
}

/// Characteristic polynomial `det(x I - M)`, exact, by interpolation at
/// `x = 0..=n`.
pub fn char_poly(m: &IMat) -> IntPolynomial {
    let n = m.len();
    let points: Vec<(BigInt, BigInt)> = (0..=n as i64)
        .map(|x| {
            let xb = BigInt::from(x);
            let shifted: IMat = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut v = -m[i][j].clone();
                            if i == j {
                                v += &xb;
                            }
                            v
                        })
                        .collect()
                })
                .collect();
            (xb, bareiss_det(&shifted))
        })
        .collect();
    lagrange_interpolate(&points)
}
