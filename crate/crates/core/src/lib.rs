//! Reconstruction of polytope face lattices from edge graphs.
//!
//! Simple, 1-nearly simple and 2-nearly simple polytopes are determined by
//! their graphs; this crate implements those reconstructions on top of
//! exhaustive searches over acyclic orientations, together with the face
//! lattice machinery (closure from facets, truncation surgery, isomorphism)
//! and a small catalog census for classes where graphs stop being enough.

pub mod census;
pub mod cli;
pub mod error;
pub mod face_lattice;
pub mod fixtures;
pub mod graphs;
pub mod orientations;
pub mod reconstruct;
pub mod shapes;
pub mod vset;

pub use error::{Error, Result};
pub use face_lattice::{FaceLattice, TruncationRecord};
pub use graphs::{Certificate, Graph};
pub use orientations::{FValue, Orientation};
pub use vset::VertexSet;

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Input(format!("permutation of length {} for {n} vertices", perm.len())));
    }
    let image: VertexSet = perm.iter().copied().filter(|&v| v < n).collect();
    if image != VertexSet::full(n) {
        return Err(Error::Input("not a permutation".into()));
    }
    Ok(())
}
