//! Cai–Fürer–Immerman companion pairs.

use super::{Graph, GraphError};
use std::collections::HashMap;

/// A CFI companion pair built from a connected base graph, plus the base
/// edge whose port links are crossed in the twisted member.
#[derive(Debug, Clone)]
pub struct CfiPair {
    pub untwisted: Graph,
    pub twisted: Graph,
    /// Base edge crossed in `twisted` (the choice is irrelevant up to
    /// isomorphism for a connected base).
    pub twist_edge: (usize, usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum GadgetVertex {
    /// Middle vertex of the gadget at a base vertex, for an even subset of
    /// its incident base edges.
    Middle(usize, Vec<usize>),
    /// Port pair (a, b) per incident base edge; `true` selects the a-side.
    Port(usize, usize, bool),
}

/// Build the CFI pair of `base`: each vertex of degree `d` becomes a gadget
/// with `2^(d-1)` middle vertices (one per even subset of incident edges) and
/// an (a, b) port pair per incident edge; a middle vertex `m_S` joins
/// `a`-ports of edges in `S` and `b`-ports of the rest. Ports of the two
/// endpoints of each base edge are linked a-a and b-b, except that the
/// twisted member crosses the links of one base edge.
pub fn cfi_pair(base: &Graph) -> Result<CfiPair, GraphError> {
    if !base.is_connected() || base.n() == 0 {
        return Err(GraphError::Disconnected);
    }
    if base.degrees().iter().any(|&d| d == 0) {
        return Err(GraphError::BadFamily("cfi: base needs minimum degree 1".into()));
    }
    let base_edges: Vec<(usize, usize)> = base.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); base.n()];
    for (ei, &(u, v)) in base_edges.iter().enumerate() {
        incident[u].push(ei);
        incident[v].push(ei);
    }

    let mut ids: HashMap<GadgetVertex, usize> = HashMap::new();
    let mut order: Vec<GadgetVertex> = Vec::new();
    let mut gadget_edges: Vec<(usize, usize)> = Vec::new();
    {
        let mut vid = |k: GadgetVertex| -> usize {
            if let Some(&i) = ids.get(&k) {
                return i;
            }
            let i = order.len();
            ids.insert(k.clone(), i);
            order.push(k);
            i
        };
        for v in 0..base.n() {
            for subset in even_subsets(&incident[v]) {
                let m = vid(GadgetVertex::Middle(v, subset.clone()));
                for &e in &incident[v] {
                    let a_side = subset.contains(&e);
                    let p = vid(GadgetVertex::Port(v, e, a_side));
                    gadget_edges.push((m, p));
                }
            }
        }
    }

    let n = order.len();
    let build = |twist: Option<usize>| -> Result<Graph, GraphError> {
        let mut g = Graph::new(n);
        for &(a, b) in &gadget_edges {
            g.add_edge(a, b)?;
        }
        for (ei, &(u, v)) in base_edges.iter().enumerate() {
            let id = |k: GadgetVertex| ids[&k];
            let (ua, ub) = (
                id(GadgetVertex::Port(u, ei, true)),
                id(GadgetVertex::Port(u, ei, false)),
            );
            let (va, vb) = (
                id(GadgetVertex::Port(v, ei, true)),
                id(GadgetVertex::Port(v, ei, false)),
            );
            if twist == Some(ei) {
                g.add_edge(ua, vb)?;
                g.add_edge(ub, va)?;
            } else {
                g.add_edge(ua, va)?;
                g.add_edge(ub, vb)?;
            }
        }
        for (i, k) in order.iter().enumerate() {
            let label = match k {
                GadgetVertex::Middle(v, s) => format!("m{}:{:?}", v, s),
                GadgetVertex::Port(v, e, true) => format!("a{}:{}", v, e),
                GadgetVertex::Port(v, e, false) => format!("b{}:{}", v, e),
            };
            g.set_label(i, label);
        }
        Ok(g)
    };

    Ok(CfiPair {
        untwisted: build(None)?,
        twisted: build(Some(0))?,
        twist_edge: base_edges[0],
    })
}

/// Even-cardinality subsets of `items`, smallest cardinality first,
/// lexicographic by position within each cardinality.
fn even_subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut size = 0;
    while size <= items.len() {
        combinations(items, size, &mut out);
        size += 2;
    }
    out
}

fn combinations(items: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, FamilySpec};

    #[test]
    fn cfi_of_k4_has_40_vertices_60_edges() {
        let k4 = make_graph(&FamilySpec::Complete(4)).unwrap();
        let pair = cfi_pair(&k4).unwrap();
        for g in [&pair.untwisted, &pair.twisted] {
            assert_eq!(g.n(), 40);
            assert_eq!(g.edge_count(), 60);
            assert!(g.degrees().iter().all(|&d| d == 3));
            assert!(g.is_connected());
        }
        assert_ne!(pair.untwisted, pair.twisted);
        assert_eq!(pair.twist_edge, (0, 1));
    }

    #[test]
    fn cfi_rejects_disconnected_base() {
        let mut g = Graph::new(4);
        g.add_edge(0, 1).unwrap();
        g.add_edge(2, 3).unwrap();
        assert!(cfi_pair(&g).is_err());
    }
}
