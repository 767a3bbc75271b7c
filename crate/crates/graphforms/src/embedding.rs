//! Cellular embeddings via rotation systems: face tracing, Euler genus and
//! dual multigraphs. Orientable surfaces only.
//!
//! Darts (directed edge-ends) are numbered `2e` and `2e + 1` for the edge
//! with index `e` in the graph's sorted edge order: dart `2e` points from
//! the smaller endpoint to the larger, `2e + 1` is its reversal.

use crate::graph::{multigraph_isomorphic, Graph, GraphError, MultiGraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("rotation at vertex {0} does not list its incident darts exactly once")]
    BadRotation(usize),
    #[error("graph must be connected to trace a cellular embedding")]
    Disconnected,
    #[error("non-integral genus from face count {faces}: rotation is corrupted")]
    NonIntegralGenus { faces: usize },
}

/// Cyclic orderings of incident darts at each vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RotationSystem {
    pub graph: Graph,
    /// `rotation[v]` lists the darts with tail `v` in cyclic order.
    pub rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that each incident dart appears exactly once at its vertex.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let edges: Vec<(usize, usize)> = graph.edges().collect();
        if rotation.len() != graph.n() {
            return Err(EmbeddingError::BadRotation(rotation.len().min(graph.n())));
        }
        for v in 0..graph.n() {
            let mut expected: Vec<usize> = Vec::new();
            for (e, &(a, b)) in edges.iter().enumerate() {
                if a == v {
                    expected.push(2 * e);
                }
                if b == v {
                    expected.push(2 * e + 1);
                }
            }
            let mut got = rotation[v].clone();
            got.sort_unstable();
            if got != expected {
                return Err(EmbeddingError::BadRotation(v));
            }
        }
        Ok(RotationSystem { graph, rotation })
    }

    /// The rotation that lists darts at each vertex in ascending dart order
    /// (a canonical default embedding).
    pub fn default_rotation(graph: Graph) -> Result<Self, EmbeddingError> {
        let edges: Vec<(usize, usize)> = graph.edges().collect();
        let mut rotation = vec![Vec::new(); graph.n()];
        for (e, &(a, b)) in edges.iter().enumerate() {
            rotation[a].push(2 * e);
            rotation[b].push(2 * e + 1);
        }
        RotationSystem::new(graph, rotation)
    }

    /// Tail vertex of every dart.
    fn dart_tails(&self) -> Vec<usize> {
        let mut tails = Vec::with_capacity(2 * self.graph.edge_count());
        for (a, b) in self.graph.edges() {
            tails.push(a);
            tails.push(b);
        }
        tails
    }
}

/// Faces, face count, Euler genus and dual multigraph of a rotation system.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingReport {
    /// Each face is the closed walk of darts it traverses.
    pub faces: Vec<Vec<usize>>,
    pub face_count: usize,
    pub euler_genus: usize,
    pub dual: MultiGraph,
}

/// Trace all faces: the successor of a dart is the rotation successor of its
/// reversal at the head vertex. The dual has one vertex per face and one
/// edge per primal edge joining the faces on its two sides.
pub fn trace_faces(rs: &RotationSystem) -> Result<EmbeddingReport, EmbeddingError> {
    if !rs.graph.is_connected() || rs.graph.n() == 0 {
        return Err(EmbeddingError::Disconnected);
    }
    let edges: Vec<(usize, usize)> = rs.graph.edges().collect();
    let ndarts = 2 * edges.len();
    let tails = rs.dart_tails();
    // position of each dart in its tail's rotation
    let mut pos = vec![usize::MAX; ndarts];
    for v in 0..rs.graph.n() {
        for (i, &d) in rs.rotation[v].iter().enumerate() {
            pos[d] = i;
        }
    }
    let next = |d: usize| -> usize {
        let rev = d ^ 1;
        let rot = &rs.rotation[tails[rev]];
        rot[(pos[rev] + 1) % rot.len()]
    };
    let mut face_of = vec![usize::MAX; ndarts];
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for start in 0..ndarts {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            walk.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    let f = faces.len();
    let v = rs.graph.n();
    let e = edges.len();
    // V - E + F = 2 - 2g
    let chi = v as isize - e as isize + f as isize;
    if (2 - chi) % 2 != 0 || chi > 2 {
        return Err(EmbeddingError::NonIntegralGenus { faces: f });
    }
    let genus = ((2 - chi) / 2) as usize;
    let mut dual = MultiGraph::new(f);
    for ei in 0..e {
        dual.add_edge(face_of[2 * ei], face_of[2 * ei + 1]);
    }
    Ok(EmbeddingReport { faces: faces.clone(), face_count: f, euler_genus: genus, dual })
}

/// Brute-force multigraph isomorphism of two dual graphs (≤ 10 vertices),
/// respecting loops and multiplicities.
pub fn dual_isomorphic(r1: &EmbeddingReport, r2: &EmbeddingReport) -> Result<bool, GraphError> {
    multigraph_isomorphic(&r1.dual, &r2.dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, FamilySpec};

    #[test]
    fn triangle_embeds_in_sphere() {
        let c3 = make_graph(&FamilySpec::Cycle(3)).unwrap();
        let rs = RotationSystem::default_rotation(c3).unwrap();
        let rep = trace_faces(&rs).unwrap();
        assert_eq!(rep.face_count, 2);
        assert_eq!(rep.euler_genus, 0);
        assert_eq!(rep.dual.n, 2);
        assert_eq!(rep.dual.edges.len(), 3);
        assert!(rep.dual.edges.iter().all(|&(a, b)| (a, b) == (0, 1)));
    }

    #[test]
    fn k4_planar_rotation() {
        // a planar rotation of K_4: faces = 4 triangles
        let k4 = make_graph(&FamilySpec::Complete(4)).unwrap();
        // edges sorted: (0,1)=e0,(0,2)=e1,(0,3)=e2,(1,2)=e3,(1,3)=e4,(2,3)=e5;
        // center vertex 0, outer triangle 1-2-3 counterclockwise
        let rotation = vec![
            vec![0, 2, 4],   // at 0: darts to 1, 2, 3
            vec![6, 1, 8],   // at 1: to 2, 0, 3
            vec![10, 3, 7],  // at 2: to 3, 0, 1
            vec![9, 5, 11],  // at 3: to 1, 0, 2
        ];
        let rs = RotationSystem::new(k4, rotation).unwrap();
        let rep = trace_faces(&rs).unwrap();
        assert_eq!(rep.face_count, 4);
        assert_eq!(rep.euler_genus, 0);
        assert!(rep.faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn k5_has_positive_genus() {
        let k5 = make_graph(&FamilySpec::Complete(5)).unwrap();
        let rs = RotationSystem::default_rotation(k5).unwrap();
        let rep = trace_faces(&rs).unwrap();
        assert!(rep.euler_genus >= 1);
    }

    #[test]
    fn tree_has_one_face_and_loop_dual() {
        let star = make_graph(&FamilySpec::Star(5)).unwrap();
        let rs = RotationSystem::default_rotation(star).unwrap();
        let rep = trace_faces(&rs).unwrap();
        assert_eq!(rep.face_count, 1);
        assert_eq!(rep.euler_genus, 0);
        assert_eq!(rep.dual.n, 1);
        assert_eq!(rep.dual.edges.len(), 4);
        assert!(rep.dual.edges.iter().all(|&(a, b)| a == b));
    }

    #[test]
    fn face_walk_lengths_sum_to_2e() {
        for spec in [FamilySpec::Cycle(5), FamilySpec::Complete(5), FamilySpec::Dumbbell(4)] {
            let g = make_graph(&spec).unwrap();
            let e = g.edge_count();
            let rs = RotationSystem::default_rotation(g).unwrap();
            let rep = trace_faces(&rs).unwrap();
            let total: usize = rep.faces.iter().map(|f| f.len()).sum();
            assert_eq!(total, 2 * e);
        }
    }

    #[test]
    fn dual_comparison() {
        let c3 = make_graph(&FamilySpec::Cycle(3)).unwrap();
        let r1 = trace_faces(&RotationSystem::default_rotation(c3.clone()).unwrap()).unwrap();
        let r2 = trace_faces(&RotationSystem::default_rotation(c3).unwrap()).unwrap();
        assert!(dual_isomorphic(&r1, &r2).unwrap());
        let c4 = make_graph(&FamilySpec::Cycle(4)).unwrap();
        let r3 = trace_faces(&RotationSystem::default_rotation(c4).unwrap()).unwrap();
        assert!(!dual_isomorphic(&r1, &r3).unwrap());
    }

    #[test]
    fn genus_invariant_under_reflection() {
        let g = make_graph(&FamilySpec::Complete(5)).unwrap();
        let rs = RotationSystem::default_rotation(g.clone()).unwrap();
        let base = trace_faces(&rs).unwrap().euler_genus;
        // reflect all rotations
        let reflected: Vec<Vec<usize>> =
            rs.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let rs2 = RotationSystem::new(g, reflected).unwrap();
        assert_eq!(trace_faces(&rs2).unwrap().euler_genus, base);
    }

    #[test]
    fn bad_rotation_rejected() {
        let c3 = make_graph(&FamilySpec::Cycle(3)).unwrap();
        let bad = vec![vec![0, 2], vec![1, 4], vec![3, 3]];
        assert!(RotationSystem::new(c3, bad).is_err());
    }
}
