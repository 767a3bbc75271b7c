//! Spectral and integer quadratic-form invariants of finite graphs.
//!
//! Two invariant families live here:
//!
//! * spectral field-theory invariants built from the combinatorial Laplacian —
//!   the discrete Green's function `(M + uI)^{-1}`, the `ST` projector
//!   fingerprint and a sampled graph distance;
//! * exact-arithmetic invariants of graphs viewed as integer quadratic forms —
//!   p-adic genus symbols, local equivalence and global Z-isometry, together
//!   with the wedge-sum monoid structure on Laplacian form classes.
//!
//! The [`graph`] module holds the graph type, codecs and constructions
//! (named families, CFI pairs, Seidel switching, wedge sums); [`embedding`]
//! traces faces of rotation systems and builds dual multigraphs;
//! [`experiments`] reproduces the reference numeric tables at desk scale.

pub mod distance;
pub mod embedding;
pub mod exact;
pub mod experiments;
pub mod graph;
pub mod isometry;
pub mod qform;
pub mod spectral;

pub use graph::Graph;
pub use qform::IntegerQuadraticForm;
