//! Dense matrices over the integers and rationals.
//!
//! Matrices are `Vec<Vec<_>>` in row-major order; everything here is sized
//! for desk-scale inputs (n up to a few hundred).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;
pub type QMat = Vec<Vec<BigRational>>;

pub fn mat_from_i64(m: &[Vec<i64>]) -> IMat {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[t][j].is_zero() {
                    let prod = &a[i][t] * &b[t][j];
                    out[i][j] += prod;
                }
            }
        }
    }
    out
}

pub fn mat_transpose(a: &IMat) -> IMat {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn mat_add(a: &IMat, b: &IMat) -> IMat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_sub(a: &IMat, b: &IMat) -> IMat {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_neg(a: &IMat) -> IMat {
    a.iter().map(|r| r.iter().map(|x| -x).collect()).collect()
}

pub fn mat_scale(a: &IMat, c: &BigInt) -> IMat {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(m: &IMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IMat = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Rank over the rationals.
pub fn rank_q(m: &IMat) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: QMat = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = a[rank][c].clone();
        for j in 0..cols {
            a[rank][j] = &a[rank][j] / &inv;
        }
        for i in 0..rows {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let s = &a[rank][j] * &f;
                    a[i][j] = &a[i][j] - &s;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Exact inverse over the rationals; `None` when singular.
pub fn rational_inverse(m: &IMat) -> Option<QMat> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                m[i].iter().map(|x| BigRational::from(x.clone())).collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, piv);
        let inv = a[c][c].clone();
        for j in 0..2 * n {
            a[c][j] = &a[c][j] / &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * n {
                    let s = &a[c][j] * &f;
                    a[i][j] = &a[i][j] - &s;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Reduce `g` to column-echelon form by unimodular column operations:
/// `g * v = [h | 0]` with `h` of full column rank. Returns `(v, rank)`;
/// the last `n - rank` columns of `v` are a basis of the saturated integer
/// kernel of `g`.
pub fn col_echelon_kernel(g: &IMat) -> (IMat, usize) {
    let n = g.len();
    let mut a: IMat = g.to_vec();
    let mut v = identity(n);
    let col_addmul = |a: &mut IMat, v: &mut IMat, j: usize, k: usize, c: &BigInt| {
        for i in 0..n {
            let d = &a[i][k] * c;
            a[i][j] += d;
            let d = &v[i][k] * c;
            v[i][j] += d;
        }
    };
    let col_swap = |a: &mut IMat, v: &mut IMat, j: usize, k: usize| {
        for i in 0..n {
            a[i].swap(j, k);
            v[i].swap(j, k);
        }
    };
    let mut r = 0usize;
    for row in 0..n {
        if r == n {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (r..n).filter(|&j| !a[row][j].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let jmin = *nonzero
                .iter()
                .min_by_key(|&&j| a[row][j].abs())
                .expect("nonempty");
            if jmin != r {
                col_swap(&mut a, &mut v, r, jmin);
            }
            let others: Vec<usize> = (r + 1..n).filter(|&j| !a[row][j].is_zero()).collect();
            if others.is_empty() {
                break;
            }
            for j in others {
                let q = div_floor_big(&a[row][j], &a[row][r]);
                col_addmul(&mut a, &mut v, j, r, &-q);
            }
        }
        if !a[row][r].is_zero() {
            r += 1;
        }
    }
    (v, r)
}

fn div_floor_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}
