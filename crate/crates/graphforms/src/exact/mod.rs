//! Exact integer and rational linear algebra on dense matrices.

mod matrix;
mod poly;

pub use matrix::{
    bareiss_det, col_echelon_kernel, identity, mat_add, mat_from_i64, mat_mul, mat_neg, mat_scale,
    mat_sub, mat_transpose, rank_q, rational_inverse, IMat, QMat,
};
pub use poly::{char_poly, lagrange_interpolate, IntPolynomial};
