//! Sampled spectral graph distance with zero-mode exclusion.
//!
//! The distance compares the zero-mode-free Green's functions of two graphs
//! at a schedule of small mass parameters `u_j = c j lambda_1 / |V|`,
//! after sorting each graph's pair values into a label-free order.

use crate::graph::Graph;
use crate::spectral::SpectralError;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Relative cutoff below which eigenvalues count as zero modes.
pub const ZERO_MODE_CUTOFF: f64 = 1e-9;

/// Options for [`distance`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistanceOptions {
    /// Schedule scale; the reference choice is `1e-4`.
    pub c: f64,
    /// Number of samples; defaults to the vertex count.
    pub samples: Option<usize>,
    /// Sorting rule for pair values.
    pub sort_rule: SortRule,
    /// Relative zero-mode cutoff.
    pub zero_mode_cutoff: f64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            c: 1e-4,
            samples: None,
            sort_rule: SortRule::PrimaryU1Lex,
            zero_mode_cutoff: ZERO_MODE_CUTOFF,
        }
    }
}

/// Pair ordering rule: the permutation is fixed from the values at `u_1`,
/// with ties refined lexicographically by the values at `u_2`, `u_3`, ....
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SortRule {
    PrimaryU1Lex,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistanceFlags {
    /// Float spectra agree within the grouping tolerance.
    pub cospectral_within_tol: bool,
    /// Per input, whether the graph has more than one zero mode.
    pub disconnected: [bool; 2],
    /// Either input contains isolated vertices (as left by padding).
    pub padding_applied: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistanceReport {
    pub value: f64,
    pub lambda1: f64,
    pub u_schedule: Vec<f64>,
    /// Sum of squared sorted-value differences contributed at each sample.
    pub per_sample: Vec<f64>,
    pub flags: DistanceFlags,
}

/// Graph plus `k` isolated vertices (used to equalize sizes; the extra zero
/// modes are dropped by the zero-mode cutoff).
pub fn pad_isolated(g: &Graph, k: usize) -> Graph {
    let mut out = Graph::new(g.n() + k);
    for (u, v) in g.edges() {
        out.add_edge(u, v).expect("in range");
    }
    out
}

struct TildeBasis {
    /// Eigenvalues above the zero-mode cutoff, ascending.
    eigs: Vec<f64>,
    /// Matching eigenvector columns (n x r).
    vecs: DMatrix<f64>,
    /// All eigenvalues, ascending (for cospectrality checks).
    all_eigs: Vec<f64>,
}

impl TildeBasis {
    fn new(g: &Graph, cutoff_rel: f64) -> Self {
        let m = crate::spectral::laplacian_matrix(g);
        let n = g.n();
        let eig = m.symmetric_eigen();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let radius = eig.eigenvalues.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
        let cut = cutoff_rel * radius.max(1.0);
        let kept: Vec<usize> = order.iter().copied().filter(|&i| eig.eigenvalues[i] > cut).collect();
        let eigs: Vec<f64> = kept.iter().map(|&i| eig.eigenvalues[i]).collect();
        let mut vecs = DMatrix::zeros(n, kept.len());
        for (c, &i) in kept.iter().enumerate() {
            vecs.set_column(c, &eig.eigenvectors.column(i));
        }
        let all_eigs: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        TildeBasis { eigs, vecs, all_eigs }
    }

    fn zero_modes(&self) -> usize {
        self.all_eigs.len() - self.eigs.len()
    }

    /// Full matrix of pair values at `u`, flattened row-major.
    fn values_flat(&self, u: f64) -> Vec<f64> {
        let n = self.vecs.nrows();
        let r = self.eigs.len();
        let mut scaled = self.vecs.clone();
        for k in 0..r {
            let w = 1.0 / (self.eigs[k] + u);
            scaled.column_mut(k).scale_mut(w);
        }
        let m = scaled * self.vecs.transpose();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                out.push(m[(i, j)]);
            }
        }
        out
    }

    /// Single pair value at `u` (used only for tie refinement).
    fn value_at(&self, pair: usize, u: f64) -> f64 {
        let n = self.vecs.nrows();
        let (x, y) = (pair / n, pair % n);
        (0..self.eigs.len())
            .map(|k| self.vecs[(x, k)] * self.vecs[(y, k)] / (self.eigs[k] + u))
            .sum()
    }
}

/// Zero-mode-free Green's function: the sum of `t_k / (lambda_k + u)` over
/// eigenvalues above the cutoff. For connected graphs this equals
/// `green(g, u) - J/(n u)`.
pub fn tilde_green(g: &Graph, u: f64) -> Result<DMatrix<f64>, SpectralError> {
    if u <= 0.0 {
        return Err(SpectralError::BadParameter("u must be positive".into()));
    }
    let basis = TildeBasis::new(g, ZERO_MODE_CUTOFF);
    let n = g.n();
    let flat = basis.values_flat(u);
    Ok(DMatrix::from_fn(n, n, |i, j| flat[i * n + j]))
}

/// Fixed pair ordering: ascending by the value at `us[0]`, ties broken by
/// values at `us[1]`, `us[2]`, ... in order.
fn sorted_order(basis: &TildeBasis, us: &[f64]) -> Vec<usize> {
    let first = basis.values_flat(us[0]);
    let mut order: Vec<usize> = (0..first.len()).collect();
    order.sort_by(|&a, &b| first[a].total_cmp(&first[b]));
    // refine runs of exactly equal keys with later samples
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=order.len() {
        if i == order.len() || first[order[i]] != first[order[start]] {
            if i - start > 1 {
                runs.push((start, i));
            }
            start = i;
        }
    }
    for &u in &us[1..] {
        if runs.is_empty() {
            break;
        }
        let mut next_runs = Vec::new();
        for (lo, hi) in runs {
            let mut keyed: Vec<(f64, usize)> =
                order[lo..hi].iter().map(|&p| (basis.value_at(p, u), p)).collect();
            keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
            for (slot, (_, p)) in keyed.iter().enumerate() {
                order[lo + slot] = *p;
            }
            let mut s = lo;
            for i in lo + 1..=hi {
                if i == hi || keyed[i - lo].0 != keyed[s - lo].0 {
                    if i - s > 1 {
                        next_runs.push((s, i));
                    }
                    s = i;
                }
            }
        }
        runs = next_runs;
    }
    order
}

/// The sampled spectral distance between two graphs of equal vertex count.
pub fn distance(
    g1: &Graph,
    g2: &Graph,
    opts: &DistanceOptions,
) -> Result<DistanceReport, SpectralError> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(SpectralError::BadParameter("graphs must be nonempty".into()));
    }
    if g1.n() != g2.n() {
        return Err(SpectralError::BadParameter(format!(
            "vertex counts differ: {} vs {} (pad first)",
            g1.n(),
            g2.n()
        )));
    }
    if opts.c <= 0.0 {
        return Err(SpectralError::BadParameter("c must be positive".into()));
    }
    let n = g1.n();
    let b1 = TildeBasis::new(g1, opts.zero_mode_cutoff);
    let b2 = TildeBasis::new(g2, opts.zero_mode_cutoff);
    let lambda1 = match (b1.eigs.first(), b2.eigs.first()) {
        (Some(&a), Some(&b)) => a.min(b),
        _ => {
            return Err(SpectralError::BadParameter(
                "a graph with no nonzero Laplacian eigenvalue has no schedule".into(),
            ))
        }
    };
    let samples = opts.samples.unwrap_or(n).max(1);
    let us: Vec<f64> =
        (1..=samples).map(|j| opts.c * j as f64 * lambda1 / n as f64).collect();

    let o1 = sorted_order(&b1, &us);
    let o2 = sorted_order(&b2, &us);

    let mut per_sample = Vec::with_capacity(samples);
    let mut total = 0.0f64;
    for &u in &us {
        let v1 = b1.values_flat(u);
        let v2 = b2.values_flat(u);
        let s: f64 = o1
            .iter()
            .zip(&o2)
            .map(|(&p1, &p2)| {
                let d = v1[p1] - v2[p2];
                d * d
            })
            .sum();
        per_sample.push(s);
        total += s;
    }
    let value = (n * n) as f64 * (total / n as f64).sqrt();

    let radius = b1
        .all_eigs
        .iter()
        .chain(&b2.all_eigs)
        .fold(0.0f64, |a, &x| a.max(x.abs()));
    let tol = 1e-8 * radius.max(1.0);
    let cospectral = b1
        .all_eigs
        .iter()
        .zip(&b2.all_eigs)
        .all(|(a, b)| (a - b).abs() < tol);
    let isolated = |g: &Graph| g.degrees().iter().any(|&d| d == 0);
    Ok(DistanceReport {
        value,
        lambda1,
        u_schedule: us,
        per_sample,
        flags: DistanceFlags {
            cospectral_within_tol: cospectral,
            disconnected: [b1.zero_modes() > 1, b2.zero_modes() > 1],
            padding_applied: isolated(g1) || isolated(g2),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, FamilySpec};

    #[test]
    fn tilde_green_k2() {
        let k2 = make_graph(&FamilySpec::Path(2)).unwrap();
        let t = tilde_green(&k2, 1.0).unwrap();
        for (x, y, expect) in [(0, 0, 1.0 / 6.0), (0, 1, -1.0 / 6.0), (1, 1, 1.0 / 6.0)] {
            assert!((t[(x, y)] - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn tilde_green_row_sums_vanish() {
        let g = make_graph(&FamilySpec::Dumbbell(4)).unwrap();
        let t = tilde_green(&g, 0.37).unwrap();
        for i in 0..g.n() {
            let s: f64 = (0..g.n()).map(|j| t[(i, j)]).sum();
            assert!(s.abs() < 1e-8);
        }
    }

    #[test]
    fn tilde_green_drops_all_zero_modes() {
        let g = pad_isolated(&make_graph(&FamilySpec::Complete(3)).unwrap(), 2);
        let t = tilde_green(&g, 0.5).unwrap();
        // padded rows carry no weight at all
        for j in 0..5 {
            assert!(t[(3, j)].abs() < 1e-10);
            assert!(t[(4, j)].abs() < 1e-10);
        }
    }

    #[test]
    fn self_distance_is_zero() {
        let g = make_graph(&FamilySpec::Cycle(6)).unwrap();
        let d = distance(&g, &g, &DistanceOptions::default()).unwrap();
        assert_eq!(d.value, 0.0);
    }

    #[test]
    fn distance_k5_table_value() {
        let k5 = make_graph(&FamilySpec::Complete(5)).unwrap();
        let mut k5e = k5.clone();
        k5e.remove_edge(0, 1).unwrap();
        let d = distance(&k5, &k5e, &DistanceOptions::default()).unwrap();
        assert!((d.value - 3.3330).abs() / 3.3330 < 5e-4, "got {}", d.value);
    }

    #[test]
    fn distance_is_symmetric_and_relabel_invariant() {
        let g1 = make_graph(&FamilySpec::Cycle(7)).unwrap();
        let g2 = make_graph(&FamilySpec::Path(7)).unwrap();
        let a = distance(&g1, &g2, &DistanceOptions::default()).unwrap();
        let b = distance(&g2, &g1, &DistanceOptions::default()).unwrap();
        assert!((a.value - b.value).abs() < 1e-9);
        let perm = vec![4, 2, 6, 0, 1, 5, 3];
        let g1p = g1.permuted(&perm);
        let c = distance(&g1, &g1p, &DistanceOptions::default()).unwrap();
        assert!(c.value < 1e-8);
    }

    #[test]
    fn pad_isolated_counts() {
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        assert_eq!(pad_isolated(&k3, 0), k3);
        let p = pad_isolated(&k3, 2);
        assert_eq!((p.n(), p.edge_count()), (5, 3));
        let other = make_graph(&FamilySpec::Star(4)).unwrap();
        let d = distance(&pad_isolated(&k3, 1), &other, &DistanceOptions::default()).unwrap();
        assert!(d.flags.padding_applied);
        assert!(d.value.is_finite());
    }

    #[test]
    fn size_mismatch_and_empty_are_errors() {
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        let k4 = make_graph(&FamilySpec::Complete(4)).unwrap();
        assert!(distance(&k3, &k4, &DistanceOptions::default()).is_err());
        let empty = Graph::new(3);
        assert!(distance(&k3, &empty, &DistanceOptions::default()).is_err());
    }
}
