//! Simple undirected graphs: representation, I/O, constructions and
//! structural decomposition.

mod cfi;
mod families;
mod graph6;

pub use cfi::cfi_pair;
pub use families::{make_graph, FamilySpec};
pub use graph6::{graph6_emit, graph6_parse, Graph6Error};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("duplicate vertex {0} in list")]
    DuplicateVertex(usize),
    #[error("graph must have at least one edge")]
    Edgeless,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph on {0} vertices exceeds cap {1}")]
    SizeCap(usize, usize),
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
}

/// A simple undirected labeled graph. Edges are stored as a sorted set of
/// pairs `(u, v)` with `u < v`; no loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<String>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new(), labels: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u, v));
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if !self.edges.remove(&(u.min(v), u.max(v))) {
            return Err(GraphError::MissingEdge(u, v));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        if self.labels.len() < self.n {
            self.labels.resize(self.n, String::new());
        }
        self.labels[v] = label.into();
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).map(|s| s.as_str()).filter(|s| !s.is_empty())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Adjacency and combinatorial Laplacian as integer matrices
    /// (row-major `Vec<Vec<i64>>`); `laplacian = diag(degrees) - adjacency`.
    pub fn matrices(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let n = self.n;
        let mut a = vec![vec![0i64; n]; n];
        let mut m = vec![vec![0i64; n]; n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
            m[u][v] = -1;
            m[v][u] = -1;
            m[u][u] += 1;
            m[v][v] += 1;
        }
        (a, m)
    }

    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        self.matrices().0
    }

    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        self.matrices().1
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        cnt == self.n
    }

    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Relabel vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for &(u, v) in &self.edges {
            g.add_edge(perm[u], perm[v]).expect("permutation must be a bijection on 0..n");
        }
        for v in 0..self.n {
            if let Some(l) = self.label(v) {
                g.set_label(perm[v], l.to_string());
            }
        }
        g
    }

    /// Complement all edges between `s` and its complement, keeping edges
    /// inside `s` and inside `V \ s` untouched.
    pub fn seidel_switch(&self, s: &[usize]) -> Result<Graph, GraphError> {
        let mut in_s = vec![false; self.n];
        for &v in s {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange(v, self.n));
            }
            in_s[v] = true;
        }
        let mut g = Graph::new(self.n);
        g.labels = self.labels.clone();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let cross = in_s[u] != in_s[v];
                let present = self.has_edge(u, v);
                if present != cross {
                    g.edges.insert((u, v));
                }
            }
        }
        Ok(g)
    }

    /// Serialize as the adjacency-list text format: `n m` header, then one
    /// `u v` line per edge.
    pub fn to_adjacency_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u, v));
        }
        s
    }

    pub fn from_adjacency_text(text: &str) -> Result<Graph, GraphError> {
        let mut it = text.split_whitespace();
        let bad = |m: &str| GraphError::BadFamily(m.to_string());
        let n: usize = it.next().ok_or_else(|| bad("missing vertex count"))?.parse().map_err(|_| bad("bad vertex count"))?;
        let m: usize = it.next().ok_or_else(|| bad("missing edge count"))?.parse().map_err(|_| bad("bad edge count"))?;
        let mut g = Graph::new(n);
        for _ in 0..m {
            let u: usize = it.next().ok_or_else(|| bad("truncated edge list"))?.parse().map_err(|_| bad("bad endpoint"))?;
            let v: usize = it.next().ok_or_else(|| bad("truncated edge list"))?.parse().map_err(|_| bad("bad endpoint"))?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// A multigraph: loops and parallel edges allowed. Edge identity is the index
/// into `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "endpoint out of range");
        self.edges.push((u.min(v), u.max(v)));
    }

    /// Sorted multiset of edges, loops included.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }
}

/// One-point union: identifies vertex `x` of `g1` with vertex `y` of `g2`.
/// Vertices of `g1` keep their indices; vertex `w` of `g2` becomes
/// `n1 + w` (shifted down by one past `y`), the merged vertex is `x`.
pub fn wedge_sum(g1: &Graph, x: usize, g2: &Graph, y: usize) -> Result<Graph, GraphError> {
    if x >= g1.n() {
        return Err(GraphError::VertexOutOfRange(x, g1.n()));
    }
    if y >= g2.n() {
        return Err(GraphError::VertexOutOfRange(y, g2.n()));
    }
    let n = g1.n() + g2.n() - 1;
    let mut g = Graph::new(n);
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    let map = |w: usize| -> usize {
        use std::cmp::Ordering::*;
        match w.cmp(&y) {
            Equal => x,
            Less => g1.n() + w,
            Greater => g1.n() + w - 1,
        }
    };
    for (u, v) in g2.edges() {
        g.add_edge(map(u), map(v))?;
    }
    Ok(g)
}

/// Disjoint union of `g1` and `g2` plus one new edge from `x` (in `g1`) to
/// each `y_i` (in `g2`).
pub fn bridge_join(g1: &Graph, x: usize, g2: &Graph, ys: &[usize]) -> Result<Graph, GraphError> {
    if x >= g1.n() {
        return Err(GraphError::VertexOutOfRange(x, g1.n()));
    }
    let mut seen = BTreeSet::new();
    for &y in ys {
        if y >= g2.n() {
            return Err(GraphError::VertexOutOfRange(y, g2.n()));
        }
        if !seen.insert(y) {
            return Err(GraphError::DuplicateVertex(y));
        }
    }
    let mut g = Graph::new(g1.n() + g2.n());
    for (u, v) in g1.edges() {
        g.add_edge(u, v)?;
    }
    for (u, v) in g2.edges() {
        g.add_edge(g1.n() + u, g1.n() + v)?;
    }
    for &y in ys {
        g.add_edge(x, g1.n() + y)?;
    }
    Ok(g)
}

/// Line graph: one vertex per edge of `g` (in sorted edge order), adjacency
/// between edges sharing an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::Edgeless);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut lg = Graph::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                lg.add_edge(i, j)?;
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        lg.set_label(i, format!("{{{},{}}}", a, b));
    }
    Ok(lg)
}

/// Blocks of the block–cut-vertex decomposition, each returned as a graph on
/// its own vertices (a connected graph is wedge-indecomposable iff it has no
/// cut vertex). Also returns, per block, the map from block-local vertex ids
/// to vertices of `g`.
pub fn simple_components(g: &Graph) -> Result<Vec<(Graph, Vec<usize>)>, GraphError> {
    if g.n() < 2 {
        return Err(GraphError::BadFamily("need at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    // iterative Hopcroft–Tarjan biconnected components
    let n = g.n();
    let adj = g.adjacency_lists();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut estack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    // frames: (vertex, parent, next neighbor index)
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    while let Some(&mut (v, parent, ref mut idx)) = frames.last_mut() {
        if *idx < adj[v].len() {
            let w = adj[v][*idx];
            *idx += 1;
            if disc[w] == usize::MAX {
                estack.push((v, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                frames.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                estack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            frames.pop();
            if let Some(&mut (u, _, _)) = frames.last_mut() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    // pop the block rooted at edge (u, v)
                    let mut blk = Vec::new();
                    while let Some(&(a, b)) = estack.last() {
                        if disc[a] >= disc[v] || (a == u && b == v) {
                            blk.push((a, b));
                            estack.pop();
                            if a == u && b == v {
                                break;
                            }
                        } else {
                            break;
                        }
                    }
                    blocks.push(blk);
                }
            }
        }
    }
    let mut out = Vec::new();
    for blk in blocks {
        let mut verts: Vec<usize> = blk.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.sort_unstable();
        verts.dedup();
        let index = |v: usize| verts.binary_search(&v).unwrap();
        let mut bg = Graph::new(verts.len());
        for &(a, b) in &blk {
            bg.add_edge(index(a), index(b))?;
        }
        out.push((bg, verts));
    }
    Ok(out)
}

/// Exhaustive isomorphism test for graphs on at most 10 vertices:
/// backtracking over vertex images with degree and adjacency pruning.
pub fn brute_force_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    const CAP: usize = 10;
    if g1.n() > CAP || g2.n() > CAP {
        return Err(GraphError::SizeCap(g1.n().max(g2.n()), CAP));
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let n = g1.n();
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    let deg1 = d1.clone();
    let deg2 = d2.clone();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let a1: Vec<u16> = adjacency_bits(g1);
    let a2: Vec<u16> = adjacency_bits(g2);
    // map[v] = image of v in g2
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        v: usize,
        n: usize,
        a1: &[u16],
        a2: &[u16],
        deg1: &[usize],
        deg2: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || deg1[v] != deg2[w] {
                continue;
            }
            let mut ok = true;
            for u in 0..v {
                let e1 = a1[v] >> u & 1;
                let e2 = a2[w] >> map[u] & 1;
                if e1 != e2 {
                    ok = false;
                    break;
                }
            }
            if ok {
                map[v] = w;
                used[w] = true;
                if rec(v + 1, n, a1, a2, deg1, deg2, map, used) {
                    return true;
                }
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
        false
    }
    Ok(rec(0, n, &a1, &a2, &deg1, &deg2, &mut map, &mut used))
}

fn adjacency_bits(g: &Graph) -> Vec<u16> {
    let mut rows = vec![0u16; g.n()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

/// Multigraph isomorphism by exhaustive permutation search (≤ 10 vertices),
/// respecting loop and parallel-edge multiplicities.
pub fn multigraph_isomorphic(m1: &MultiGraph, m2: &MultiGraph) -> Result<bool, GraphError> {
    const CAP: usize = 10;
    if m1.n > CAP || m2.n > CAP {
        return Err(GraphError::SizeCap(m1.n.max(m2.n), CAP));
    }
    if m1.n != m2.n || m1.edges.len() != m2.edges.len() {
        return Ok(false);
    }
    let n = m1.n;
    let mut degs1: Vec<usize> = (0..n).map(|v| m1.degree(v)).collect();
    let mut degs2: Vec<usize> = (0..n).map(|v| m2.degree(v)).collect();
    let deg1 = degs1.clone();
    let deg2 = degs2.clone();
    degs1.sort_unstable();
    degs2.sort_unstable();
    if degs1 != degs2 {
        return Ok(false);
    }
    let target = m2.edge_multiset();
    let mut perm: Vec<usize> = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        v: usize,
        n: usize,
        m1: &MultiGraph,
        target: &[(usize, usize)],
        deg1: &[usize],
        deg2: &[usize],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if v == n {
            let mut mapped: Vec<(usize, usize)> = m1
                .edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a], perm[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            return mapped == target;
        }
        for w in 0..n {
            if used[w] || deg1[v] != deg2[w] {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            if rec(v + 1, n, m1, target, deg1, deg2, perm, used) {
                return true;
            }
            used[w] = false;
            perm[v] = usize::MAX;
        }
        false
    }
    Ok(rec(0, n, m1, &target, &deg1, &deg2, &mut perm, &mut used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn matrices_basics() {
        let p2 = make_graph(&FamilySpec::Path(2)).unwrap();
        let (a, m) = p2.matrices();
        assert_eq!(a, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(m, vec![vec![1, -1], vec![-1, 1]]);
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        let (_, m) = k3.matrices();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[i][j], if i == j { 2 } else { -1 });
            }
        }
        let e3 = Graph::new(3);
        let (_, m) = e3.matrices();
        assert!(m.iter().all(|r| r.iter().all(|&x| x == 0)));
    }

    #[test]
    fn laplacian_rows_sum_zero() {
        let g = make_graph(&FamilySpec::Dumbbell(5)).unwrap();
        let (_, m) = g.matrices();
        for row in &m {
            assert_eq!(row.iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn line_graph_small() {
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        let lg = line_graph(&k3).unwrap();
        assert!(brute_force_isomorphic(&lg, &k3).unwrap());
        let p3 = make_graph(&FamilySpec::Path(3)).unwrap();
        let lp = line_graph(&p3).unwrap();
        let p2 = make_graph(&FamilySpec::Path(2)).unwrap();
        assert!(brute_force_isomorphic(&lp, &p2).unwrap());
        assert_eq!(line_graph(&Graph::new(3)).unwrap_err(), GraphError::Edgeless);
    }

    #[test]
    fn seidel_switch_trivial_and_involution() {
        let g = make_graph(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(g.seidel_switch(&[]).unwrap(), g);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(g.seidel_switch(&all).unwrap(), g);
        let s = [0, 2];
        let once = g.seidel_switch(&s).unwrap();
        assert_ne!(once, g);
        assert_eq!(once.seidel_switch(&s).unwrap(), g);
        assert!(g.seidel_switch(&[7]).is_err());
    }

    #[test]
    fn wedge_sum_examples() {
        let p2 = make_graph(&FamilySpec::Path(2)).unwrap();
        let w = wedge_sum(&p2, 1, &p2, 0).unwrap();
        let p3 = make_graph(&FamilySpec::Path(3)).unwrap();
        assert!(brute_force_isomorphic(&w, &p3).unwrap());
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        let bowtie = wedge_sum(&k3, 0, &k3, 0).unwrap();
        assert_eq!(bowtie.n(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        let single = Graph::new(1);
        let g = make_graph(&FamilySpec::Cycle(6)).unwrap();
        let w = wedge_sum(&g, 3, &single, 0).unwrap();
        assert!(brute_force_isomorphic(&w, &g).unwrap());
    }

    #[test]
    fn bridge_join_examples() {
        let p1 = Graph::new(1);
        let j = bridge_join(&p1, 0, &p1, &[0]).unwrap();
        assert_eq!(j.n(), 2);
        assert_eq!(j.edge_count(), 1);
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        let j = bridge_join(&k3, 0, &k3, &[1]).unwrap();
        assert_eq!((j.n(), j.edge_count()), (6, 7));
        assert!(bridge_join(&k3, 0, &k3, &[1, 1]).is_err());
        assert!(bridge_join(&k3, 0, &k3, &[5]).is_err());
    }

    #[test]
    fn blocks_of_small_graphs() {
        let p3 = make_graph(&FamilySpec::Path(3)).unwrap();
        let blocks = simple_components(&p3).unwrap();
        assert_eq!(blocks.len(), 2);
        for (b, _) in &blocks {
            assert_eq!((b.n(), b.edge_count()), (2, 1));
        }
        let k3 = make_graph(&FamilySpec::Complete(3)).unwrap();
        let bowtie = wedge_sum(&k3, 0, &k3, 0).unwrap();
        let blocks = simple_components(&bowtie).unwrap();
        assert_eq!(blocks.len(), 2);
        for (b, _) in &blocks {
            assert!(brute_force_isomorphic(b, &k3).unwrap());
        }
        let db = make_graph(&FamilySpec::Dumbbell(5)).unwrap();
        let blocks = simple_components(&db).unwrap();
        assert_eq!(blocks.len(), 1, "two-bridge dumbbell is 2-connected");
        assert!(simple_components(&Graph::new(3)).is_err());
    }

    #[test]
    fn brute_iso_examples() {
        let c4 = make_graph(&FamilySpec::Cycle(4)).unwrap();
        let relab = c4.permuted(&[2, 0, 3, 1]);
        assert!(brute_force_isomorphic(&c4, &relab).unwrap());
        let star = make_graph(&FamilySpec::Star(4)).unwrap();
        assert!(!brute_force_isomorphic(&c4, &star).unwrap());
        let p4 = make_graph(&FamilySpec::Path(4)).unwrap();
        assert!(!brute_force_isomorphic(&p4, &star).unwrap());
        let big = Graph::new(11);
        assert!(brute_force_isomorphic(&big, &big).is_err());
    }

    #[test]
    fn adjacency_text_round_trip() {
        let g = make_graph(&FamilySpec::Dumbbell(4)).unwrap();
        let text = g.to_adjacency_text();
        let h = Graph::from_adjacency_text(&text).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
    }
}
