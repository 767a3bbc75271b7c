//! Floating-point eigen machinery: spectral projectors, the two-point
//! Green's function, the `ST` fingerprint, fractional powers and the
//! rank-one edge-deletion update.

use crate::graph::Graph;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("incompatible quantization steps {0} and {1}")]
    QuantizationMismatch(f64, f64),
}

/// Default relative eigenvalue-grouping tolerance. Graph matrices are
/// integral, so true spectral gaps are either zero or bounded below by the
/// spacing of algebraic integers; disputes are settled by exact
/// characteristic polynomials, never by floating point.
pub const DEFAULT_GROUP_TOL: f64 = 1e-8;

/// Quantization step used to order `ST` entries.
pub const ST_QUANTUM: f64 = 1e-9;

/// Default tolerance for `ST` equality comparisons.
pub const ST_EQ_TOL: f64 = 1e-6;

/// Distinct eigenvalues with their spectral projectors.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    /// Distinct eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenspace dimensions, summing to `n`.
    pub multiplicities: Vec<usize>,
    /// Projector matrices `t_k`, one per distinct eigenvalue.
    pub projectors: Vec<DMatrix<f64>>,
    /// Grouping tolerance used (relative to the spectral radius).
    pub tol: f64,
}

impl SpectralDecomposition {
    pub fn n(&self) -> usize {
        self.projectors.first().map_or(0, |p| p.nrows())
    }

    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0f64, |a, &x| a.max(x.abs()))
    }

    /// Indices of eigenvalues treated as zero modes under `cutoff_rel`.
    pub fn zero_modes(&self, cutoff_rel: f64) -> usize {
        let cut = cutoff_rel * self.spectral_radius().max(1.0);
        self.eigenvalues.iter().take_while(|&&l| l.abs() < cut).count()
    }
}

/// Eigendecompose a symmetric matrix, grouping eigenvalues whose gap is
/// below `tol * max(1, spectral radius)`.
pub fn decompose(m: &DMatrix<f64>, tol: f64) -> Result<SpectralDecomposition, SpectralError> {
    if tol <= 0.0 {
        return Err(SpectralError::BadParameter("tol must be positive".into()));
    }
    if m.nrows() != m.ncols() {
        return Err(SpectralError::BadParameter("matrix must be square".into()));
    }
    let n = m.nrows();
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let radius = eig.eigenvalues.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
    let gap = tol * radius.max(1.0);

    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut projectors = Vec::new();
    let mut i = 0usize;
    while i < n {
        let mut j = i;
        while j + 1 < n && eig.eigenvalues[order[j + 1]] - eig.eigenvalues[order[j]] < gap {
            j += 1;
        }
        let mut proj = DMatrix::zeros(n, n);
        let mut lam = 0.0;
        for &k in &order[i..=j] {
            let v = eig.eigenvectors.column(k);
            proj += v * v.transpose();
            lam += eig.eigenvalues[k];
        }
        lam /= (j - i + 1) as f64;
        eigenvalues.push(lam);
        multiplicities.push(j - i + 1);
        projectors.push(proj);
        i = j + 1;
    }
    Ok(SpectralDecomposition { eigenvalues, multiplicities, projectors, tol })
}

pub fn laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let (_, m) = g.matrices();
    DMatrix::from_fn(g.n(), g.n(), |i, j| m[i][j] as f64)
}

/// Two-point correlation function `(M + uI)^{-1}` of the graph's Laplacian.
pub fn green(g: &Graph, u: f64) -> Result<DMatrix<f64>, SpectralError> {
    if u <= 0.0 {
        return Err(SpectralError::BadParameter(format!("u must be positive, got {}", u)));
    }
    let n = g.n();
    let mut m = laplacian_matrix(g);
    for i in 0..n {
        m[(i, i)] += u;
    }
    let chol = m
        .clone()
        .cholesky()
        .ok_or_else(|| SpectralError::BadParameter("M + uI not positive definite".into()))?;
    Ok(chol.solve(&DMatrix::identity(n, n)))
}

/// Green's function of `g` with edge `(x1, x2)` deleted, via a rank-one
/// update of `green(g, u)` with the vector `e_x1 - e_x2`.
pub fn green_after_edge_deletion(
    g: &Graph,
    u: f64,
    x1: usize,
    x2: usize,
) -> Result<DMatrix<f64>, SpectralError> {
    if !g.has_edge(x1, x2) {
        return Err(SpectralError::MissingEdge(x1, x2));
    }
    let base = green(g, u)?;
    let n = g.n();
    let mut v = DVector::zeros(n);
    v[x1] = 1.0;
    v[x2] = -1.0;
    // (A - vv^T)^{-1} = A^{-1} + A^{-1} v v^T A^{-1} / (1 - v^T A^{-1} v)
    let av = &base * &v;
    let denom = 1.0 - (v.transpose() * &av)[(0, 0)];
    assert!(denom.abs() > f64::EPSILON, "rank-one update is nonsingular for u > 0");
    Ok(&base + (&av * av.transpose()) / denom)
}

/// `sum_k t_k (lambda_k + u)^alpha`.
pub fn fractional_power(g: &Graph, u: f64, alpha: f64) -> Result<DMatrix<f64>, SpectralError> {
    if u < 0.0 {
        return Err(SpectralError::BadParameter("u must be nonnegative".into()));
    }
    let dec = decompose(&laplacian_matrix(g), DEFAULT_GROUP_TOL)?;
    let cut = DEFAULT_GROUP_TOL * dec.spectral_radius().max(1.0);
    if u <= cut && alpha < 0.0 {
        return Err(SpectralError::BadParameter(
            "negative power undefined at the zero eigenvalue when u = 0".into(),
        ));
    }
    let n = dec.n();
    let mut out = DMatrix::zeros(n, n);
    for (k, t) in dec.projectors.iter().enumerate() {
        out += t * (dec.eigenvalues[k] + u).powf(alpha);
    }
    Ok(out)
}

/// One `ST` record: a projector vector `T(x, y)` (quantized) with the number
/// of ordered vertex pairs attaining it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StRecord {
    pub values: Vec<f64>,
    pub multiplicity: usize,
}

/// Label-free multiset of projector vectors `T(x, y)` over all ordered
/// vertex pairs, marked by the eigenvalue list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct STInvariant {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub records: Vec<StRecord>,
    pub quantum: f64,
}

impl STInvariant {
    pub fn total_pairs(&self) -> usize {
        self.records.iter().map(|r| r.multiplicity).sum()
    }
}

fn quantize(x: f64, quantum: f64) -> f64 {
    (x / quantum).round() * quantum
}

/// Compute the `ST` invariant of a graph from its Laplacian.
pub fn st_invariant(g: &Graph, tol: f64) -> Result<STInvariant, SpectralError> {
    let dec = decompose(&laplacian_matrix(g), tol)?;
    let n = g.n();
    let m = dec.eigenvalues.len();
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let v: Vec<f64> =
                (0..m).map(|k| quantize(dec.projectors[k][(x, y)], ST_QUANTUM)).collect();
            vectors.push(v);
        }
    }
    vectors.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b) {
            match x.total_cmp(y) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    });
    let mut records: Vec<StRecord> = Vec::new();
    for v in vectors {
        match records.last_mut() {
            Some(r) if r.values == v => r.multiplicity += 1,
            _ => records.push(StRecord { values: v, multiplicity: 1 }),
        }
    }
    Ok(STInvariant {
        eigenvalues: dec.eigenvalues,
        multiplicities: dec.multiplicities,
        records,
        quantum: ST_QUANTUM,
    })
}

/// Compare two `ST` invariants within `tol` (entrywise on the flattened,
/// canonically ordered lists).
pub fn st_equal(a: &STInvariant, b: &STInvariant, tol: f64) -> Result<bool, SpectralError> {
    if a.quantum != b.quantum {
        return Err(SpectralError::QuantizationMismatch(a.quantum, b.quantum));
    }
    if a.eigenvalues.len() != b.eigenvalues.len() || a.total_pairs() != b.total_pairs() {
        return Ok(false);
    }
    if a.multiplicities != b.multiplicities {
        return Ok(false);
    }
    for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
        if (x - y).abs() > tol {
            return Ok(false);
        }
    }
    let flat = |s: &STInvariant| -> Vec<Vec<f64>> {
        let mut out = Vec::with_capacity(s.total_pairs());
        for r in &s.records {
            for _ in 0..r.multiplicity {
                out.push(r.values.clone());
            }
        }
        out
    };
    for (va, vb) in flat(a).iter().zip(flat(b).iter()) {
        if va.len() != vb.len() {
            return Ok(false);
        }
        for (x, y) in va.iter().zip(vb) {
            if (x - y).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
