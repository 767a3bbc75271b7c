//! Named graph families.

use super::{line_graph, Graph, GraphError};
use serde::{Deserialize, Serialize};

/// A named family with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family", content = "param")]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    /// Two disjoint `K_n` joined by two bridges; see [`dumbbell_edge_classes`].
    Dumbbell(usize),
    Rook4x4,
    Shrikhande,
    Paley25,
    /// Triangular graph `T(m)`, the line graph of `K_m`.
    Triangular(usize),
}

/// Build a named family member. Strongly regular families are post-validated
/// against their `(n, k, lambda, mu)` parameters by direct counting.
pub fn make_graph(spec: &FamilySpec) -> Result<Graph, GraphError> {
    match *spec {
        FamilySpec::Complete(n) => {
            if n == 0 {
                return Err(GraphError::BadFamily("complete: n >= 1".into()));
            }
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::BadFamily("cycle: n >= 3".into()));
            }
            let mut g = Graph::new(n);
            for v in 0..n {
                g.add_edge(v, (v + 1) % n)?;
            }
            Ok(g)
        }
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(GraphError::BadFamily("path: n >= 1".into()));
            }
            let mut g = Graph::new(n);
            for v in 0..n.saturating_sub(1) {
                g.add_edge(v, v + 1)?;
            }
            Ok(g)
        }
        FamilySpec::Star(n) => {
            if n < 2 {
                return Err(GraphError::BadFamily("star: n >= 2".into()));
            }
            let mut g = Graph::new(n);
            for v in 1..n {
                g.add_edge(0, v)?;
            }
            Ok(g)
        }
        FamilySpec::Dumbbell(n) => dumbbell(n),
        FamilySpec::Rook4x4 => {
            let g = rook4x4();
            expect_srg(&g, 16, 6, 2, 2)?;
            Ok(g)
        }
        FamilySpec::Shrikhande => {
            let g = shrikhande();
            expect_srg(&g, 16, 6, 2, 2)?;
            Ok(g)
        }
        FamilySpec::Paley25 => {
            let g = paley25();
            expect_srg(&g, 25, 12, 5, 6)?;
            Ok(g)
        }
        FamilySpec::Triangular(m) => {
            if m < 3 {
                return Err(GraphError::BadFamily("triangular: m >= 3".into()));
            }
            let g = line_graph(&make_graph(&FamilySpec::Complete(m))?)?;
            if m >= 4 {
                expect_srg(&g, m * (m - 1) / 2, 2 * (m - 2), m - 2, 4)?;
            }
            Ok(g)
        }
    }
}

/// Dumbbell layout: copy one is `0..n` with attachment vertices `0` and `1`,
/// copy two is `n..2n` with attachments `n` and `n+1`; bridges `0-n` and
/// `1-(n+1)`.
fn dumbbell(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadFamily("dumbbell: n >= 3".into()));
    }
    let mut g = Graph::new(2 * n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
            g.add_edge(n + u, n + v)?;
        }
    }
    g.add_edge(0, n)?;
    g.add_edge(1, n + 1)?;
    Ok(g)
}

/// Representatives of the four edge orbits of the dumbbell graph `DB_n`:
/// `e1` a bridge, `e2` the edge between the two attachment vertices of one
/// clique, `e3` attachment-to-interior, `e4` interior-to-interior.
pub fn dumbbell_edge_classes(n: usize) -> Result<[(usize, usize); 4], GraphError> {
    if n < 4 {
        return Err(GraphError::BadFamily("dumbbell edge classes: n >= 4".into()));
    }
    Ok([(0, n), (0, 1), (0, 2), (2, 3)])
}

fn rook4x4() -> Graph {
    // vertices (i, j) of a 4x4 grid in row-major order, adjacent when they
    // share a row or a column
    let mut g = Graph::new(16);
    for a in 0..16usize {
        for b in a + 1..16 {
            let (r1, c1) = (a / 4, a % 4);
            let (r2, c2) = (b / 4, b % 4);
            if (r1 == r2) != (c1 == c2) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

/// Shrikhande graph: Z4 x Z4 with differences ±(1,0), ±(0,1), ±(1,1),
/// in a fixed vertex order.
fn shrikhande() -> Graph {
    const EDGES: [(usize, usize); 48] = [
        (0, 1), (0, 2), (0, 5), (0, 6), (0, 8), (0, 12),
        (1, 3), (1, 6), (1, 7), (1, 12), (1, 15),
        (2, 6), (2, 8), (2, 9), (2, 13), (2, 14),
        (3, 7), (3, 8), (3, 9), (3, 10), (3, 15),
        (4, 5), (4, 6), (4, 7), (4, 10), (4, 11), (4, 14),
        (5, 8), (5, 10), (5, 11), (5, 12),
        (6, 7), (6, 14),
        (7, 9), (7, 11),
        (8, 9), (8, 10),
        (9, 11), (9, 13),
        (10, 14), (10, 15),
        (11, 12), (11, 13),
        (12, 13), (12, 15),
        (13, 14), (13, 15),
        (14, 15),
    ];
    Graph::from_edges(16, &EDGES).unwrap()
}

/// Paley graph of order 25 over GF(25) = F_5[t]/(t^2 - 2); vertices are
/// `a + 5b` for the element `a + b t`, adjacent when the difference is a
/// nonzero square.
fn paley25() -> Graph {
    let mul = |x: (i64, i64), y: (i64, i64)| -> (i64, i64) {
        // (a + bt)(c + dt) with t^2 = 2
        let (a, b) = x;
        let (c, d) = y;
        (((a * c + 2 * b * d) % 5 + 5) % 5, ((a * d + b * c) % 5 + 5) % 5)
    };
    let mut squares = [false; 25];
    for a in 0..5i64 {
        for b in 0..5i64 {
            if (a, b) == (0, 0) {
                continue;
            }
            let (s, t) = mul((a, b), (a, b));
            squares[(s + 5 * t) as usize] = true;
        }
    }
    let mut g = Graph::new(25);
    for x in 0..25i64 {
        for y in x + 1..25 {
            let (a, b) = (x % 5, x / 5);
            let (c, d) = (y % 5, y / 5);
            let diff = ((((a - c) % 5) + 5) % 5, (((b - d) % 5) + 5) % 5);
            if squares[(diff.0 + 5 * diff.1) as usize] {
                g.add_edge(x as usize, y as usize).unwrap();
            }
        }
    }
    g
}

/// Validate `(n, k, lambda, mu)` by direct counting; fails loudly on mismatch.
pub fn expect_srg(g: &Graph, n: usize, k: usize, lambda: usize, mu: usize) -> Result<(), GraphError> {
    match srg_parameters(g) {
        Some(p) if p == (n, k, lambda, mu) => Ok(()),
        other => Err(GraphError::BadFamily(format!(
            "expected srg({}, {}, {}, {}), found {:?}",
            n, k, lambda, mu, other
        ))),
    }
}

/// `(n, k, lambda, mu)` if the graph is strongly regular, else `None`.
pub fn srg_parameters(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let adj = g.adjacency_lists();
    let k = adj.first().map(|a| a.len())?;
    if adj.iter().any(|a| a.len() != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    let mut row_bits: Vec<Vec<u64>> = vec![vec![0; n.div_ceil(64)]; n];
    for (v, nb) in adj.iter().enumerate() {
        for &w in nb {
            row_bits[v][w / 64] |= 1 << (w % 64);
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let common: u32 = row_bits[u]
                .iter()
                .zip(&row_bits[v])
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(common as usize),
                Some(x) if *x == common as usize => {}
                _ => return None,
            }
        }
    }
    Some((n, k, lambda?, mu?))
}
