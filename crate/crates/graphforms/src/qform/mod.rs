//! Integer quadratic forms in exact arithmetic: matrix polynomials,
//! determinants, cofactor polynomials, p-adic symbols, local equivalence and
//! degenerate-form reduction.

mod factor;
mod padic;

pub use factor::{prime_factorization, Factorization};
pub use padic::{
    canonical_symbol, is_locally_equivalent, jordan_decomposition, padic_symbol, JordanBlock,
    PadicSymbol, QFormError, SymbolConstituent,
};

use crate::exact::{
    bareiss_det, col_echelon_kernel, lagrange_interpolate, mat_from_i64, mat_mul, mat_transpose,
    rank_q, IMat, IntPolynomial,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A symmetric integer matrix viewed up to `GL(n, Z)` congruence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerQuadraticForm {
    gram: IMat,
}

impl IntegerQuadraticForm {
    pub fn new(gram: IMat) -> Result<Self, QFormError> {
        let n = gram.len();
        if n == 0 {
            return Err(QFormError::ZeroDimension);
        }
        for row in &gram {
            if row.len() != n {
                return Err(QFormError::NotSymmetric);
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(QFormError::NotSymmetric);
                }
            }
        }
        Ok(IntegerQuadraticForm { gram })
    }

    pub fn from_i64(gram: &[Vec<i64>]) -> Result<Self, QFormError> {
        Self::new(mat_from_i64(gram))
    }

    pub fn dimension(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &IMat {
        &self.gram
    }

    pub fn into_gram(self) -> IMat {
        self.gram
    }

    /// Exact determinant (fraction-free elimination).
    pub fn det(&self) -> BigInt {
        bareiss_det(&self.gram)
    }

    /// Apply a congruence `U^T G U`.
    pub fn congruence(&self, u: &IMat) -> IntegerQuadraticForm {
        let ut = mat_transpose(u);
        IntegerQuadraticForm { gram: mat_mul(&mat_mul(&ut, &self.gram), u) }
    }
}

/// `f(A) + q J` with `J` the all-ones matrix, exact.
pub fn eval_matrix_poly(
    a: &IMat,
    f: &IntPolynomial,
    q: &BigInt,
) -> Result<IntegerQuadraticForm, QFormError> {
    let n = a.len();
    for i in 0..n {
        if a[i].len() != n {
            return Err(QFormError::NotSymmetric);
        }
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(QFormError::NotSymmetric);
            }
        }
    }
    let mut gram = f.eval_matrix(a);
    if !q.is_zero() {
        for row in &mut gram {
            for x in row.iter_mut() {
                *x += q;
            }
        }
    }
    IntegerQuadraticForm::new(gram)
}

/// Exact determinant of an arbitrary symmetric integer matrix.
pub fn exact_det(f: &IntegerQuadraticForm) -> BigInt {
    f.det()
}

/// The signed cofactor `(-1)^(x+y) A_{y,x}(u)` of `M + uI` as an exact
/// integer polynomial in `u`, recovered by interpolation at `u = 0..n-1`.
pub fn cofactor_polynomial(m: &IMat, y: usize, x: usize) -> IntPolynomial {
    let n = m.len();
    assert!(x < n && y < n, "cofactor indices in range");
    let points: Vec<(BigInt, BigInt)> = (0..n as i64)
        .map(|u| {
            let ub = BigInt::from(u);
            // minor of (M + uI) deleting row y, column x
            let minor: IMat = (0..n)
                .filter(|&i| i != y)
                .map(|i| {
                    (0..n)
                        .filter(|&j| j != x)
                        .map(|j| {
                            let mut v = m[i][j].clone();
                            if i == j {
                                v += &ub;
                            }
                            v
                        })
                        .collect()
                })
                .collect();
            let mut d = bareiss_det(&minor);
            if (x + y) % 2 == 1 {
                d = -d;
            }
            (ub, d)
        })
        .collect();
    lagrange_interpolate(&points)
}

/// Induced nondegenerate form on the quotient by the saturated integer
/// kernel, plus the corank. Prefers a coordinate complement (the quotient
/// gram is then a principal submatrix); falls back to a column-echelon
/// complement basis.
pub fn saturation_quotient(f: &IntegerQuadraticForm) -> (IntegerQuadraticForm, usize) {
    let g = &f.gram;
    let n = f.dimension();
    let (v, r) = col_echelon_kernel(g);
    let corank = n - r;
    if corank == 0 {
        return (f.clone(), 0);
    }
    // saturated kernel basis: last `corank` columns of v
    let kernel: Vec<Vec<BigInt>> =
        (0..n).map(|i| (r..n).map(|j| v[i][j].clone()).collect()).collect();

    // greedy lexicographic coordinate complement
    let mut chosen: Vec<usize> = Vec::new();
    let mut window = kernel.clone();
    for coord in 0..n {
        if chosen.len() == r {
            break;
        }
        let mut cand = window.clone();
        for (i, row) in cand.iter_mut().enumerate() {
            row.push(if i == coord { BigInt::one() } else { BigInt::zero() });
        }
        if rank_q(&cand) == corank + chosen.len() + 1 {
            window = cand;
            chosen.push(coord);
        }
    }
    if chosen.len() == r && bareiss_det(&window).abs().is_one() {
        let gram: IMat =
            chosen.iter().map(|&i| chosen.iter().map(|&j| g[i][j].clone()).collect()).collect();
        return (
            IntegerQuadraticForm::new(gram).expect("principal submatrix stays symmetric"),
            corank,
        );
    }
    // complement from the echelon transform: first r columns of v
    let c: IMat = (0..n).map(|i| (0..r).map(|j| v[i][j].clone()).collect()).collect();
    let gram = mat_mul(&mat_mul(&mat_transpose(&c), g), &c);
    (IntegerQuadraticForm::new(gram).expect("congruence stays symmetric"), corank)
}

/// Exact characteristic polynomial of the graph Laplacian (used to settle
/// cospectrality disputes).
pub fn laplacian_char_poly(g: &crate::graph::Graph) -> IntPolynomial {
    let (_, m) = g.matrices();
    crate::exact::char_poly(&mat_from_i64(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, FamilySpec};

    fn imat(rows: &[&[i64]]) -> IMat {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn eval_poly_examples() {
        let a = imat(&[&[0, 1], &[1, 0]]);
        let f = IntPolynomial::from_i64(&[4, 4, 1]); // (x + 2)^2
        let fa = eval_matrix_poly(&a, &f, &BigInt::zero()).unwrap();
        assert_eq!(fa.gram(), &imat(&[&[5, 4], &[4, 5]]));
        let idp = IntPolynomial::from_i64(&[0, 1]);
        assert_eq!(eval_matrix_poly(&a, &idp, &BigInt::zero()).unwrap().gram(), &a);
        let bad = imat(&[&[0, 1], &[2, 0]]);
        assert!(eval_matrix_poly(&bad, &idp, &BigInt::zero()).is_err());
    }

    #[test]
    fn srg_identity_rook() {
        // A^2 + (mu - lambda) A + (mu - k) I - mu J = 0 for srg(16, 6, 2, 2)
        let g = make_graph(&FamilySpec::Rook4x4).unwrap();
        let a = mat_from_i64(&g.adjacency());
        let f = IntPolynomial::from_i64(&[2 - 6, 2 - 2, 1]);
        let lhs = eval_matrix_poly(&a, &f, &BigInt::from(-2)).unwrap();
        assert!(lhs.gram().iter().all(|r| r.iter().all(|x| x.is_zero())));
    }

    #[test]
    fn det_examples() {
        let g = make_graph(&FamilySpec::Cycle(4)).unwrap();
        let lap = IntegerQuadraticForm::new(mat_from_i64(&g.laplacian())).unwrap();
        assert_eq!(exact_det(&lap), BigInt::zero());
        let a_k2 = IntegerQuadraticForm::from_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(exact_det(&a_k2), BigInt::from(-1));
        // reduced Laplacian of K_3: Matrix-Tree gives 3 spanning trees
        let red = IntegerQuadraticForm::from_i64(&[vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(exact_det(&red), BigInt::from(3));
    }

    #[test]
    fn cofactor_examples() {
        let k2 = make_graph(&FamilySpec::Path(2)).unwrap();
        let m = mat_from_i64(&k2.laplacian());
        assert_eq!(cofactor_polynomial(&m, 0, 0), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cofactor_polynomial(&m, 0, 1), IntPolynomial::from_i64(&[1]));
    }

    #[test]
    fn cofactor_positivity_small_connected() {
        for spec in [FamilySpec::Cycle(5), FamilySpec::Dumbbell(3), FamilySpec::Star(5)] {
            let g = make_graph(&spec).unwrap();
            let m = mat_from_i64(&g.laplacian());
            for x in 0..g.n() {
                for y in 0..g.n() {
                    let p = cofactor_polynomial(&m, y, x);
                    assert!(p.all_coeffs_positive(), "{:?} ({}, {}): {}", spec, x, y, p);
                }
            }
        }
    }

    #[test]
    fn saturation_quotient_examples() {
        let c3 = make_graph(&FamilySpec::Cycle(3)).unwrap();
        let lap = IntegerQuadraticForm::new(mat_from_i64(&c3.laplacian())).unwrap();
        let (q, corank) = saturation_quotient(&lap);
        assert_eq!(corank, 1);
        assert_eq!(q.gram(), &imat(&[&[2, -1], &[-1, 2]]));
        assert_eq!(q.det(), BigInt::from(3));

        let p3 = make_graph(&FamilySpec::Path(3)).unwrap();
        let lap = IntegerQuadraticForm::new(mat_from_i64(&p3.laplacian())).unwrap();
        let (q, corank) = saturation_quotient(&lap);
        assert_eq!(corank, 1);
        assert_eq!(q.gram(), &imat(&[&[1, -1], &[-1, 2]]));
        assert_eq!(q.det(), BigInt::one());

        let nondeg = IntegerQuadraticForm::from_i64(&[vec![2, 1], vec![1, 2]]).unwrap();
        let (q, corank) = saturation_quotient(&nondeg);
        assert_eq!(corank, 0);
        assert_eq!(q, nondeg);
    }

    #[test]
    fn matrix_tree_cross_check() {
        // cofactor at u = 0 equals the spanning-tree count, for every cofactor
        let g = make_graph(&FamilySpec::Cycle(5)).unwrap();
        let m = mat_from_i64(&g.laplacian());
        for x in 0..5 {
            for y in 0..5 {
                let p = cofactor_polynomial(&m, y, x);
                assert_eq!(p.eval(&BigInt::zero()), BigInt::from(5));
            }
        }
    }
}
