//! Truncation of a face and its inverse, as substitutions on vertex sets.
//!
//! Cutting off a face `T` removes the vertices of `T` and creates one new
//! vertex on every edge that leaves `T`. A face `K` meeting `T` without lying
//! in it keeps its identity with vertex set `(K ∖ T) ∪ new(K)`, and spawns the
//! face `new(K)` one rank lower on the new facet. Faces inside `T` vanish.
//!
//! Vertex ids of the result: surviving vertices are renumbered densely in
//! ascending order, then the new vertices follow, ordered by their
//! `(cut vertex, outside vertex)` edge.

use serde::{Deserialize, Serialize};

use super::FaceLattice;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::vset::VertexSet;

/// A new vertex created on the edge from `cut_vertex` to `outside_vertex` of the
/// original polytope.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub new_vertex: usize,
    pub cut_vertex: usize,
    pub outside_vertex: usize,
}

/// Correspondence between a truncated polytope and the original one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationRecord {
    pub original_vertex_count: usize,
    /// The cut face, in original ids.
    pub truncated_face: Vec<usize>,
    /// `survivors[i]` is the original id of truncated-polytope vertex `i`.
    pub survivors: Vec<usize>,
    pub crossings: Vec<Crossing>,
}

impl TruncationRecord {
    /// Allocates ids for cutting `face` out of a graph. `cut_edges` holds the
    /// edges with exactly one endpoint in `face`, as `(inside, outside)`.
    pub(crate) fn allocate(
        original_vertex_count: usize,
        face: VertexSet,
        mut cut_edges: Vec<(usize, usize)>,
    ) -> Self {
        cut_edges.sort_unstable();
        let survivors: Vec<usize> = VertexSet::full(original_vertex_count)
            .difference(face)
            .to_vec();
        let base = survivors.len();
        let crossings = cut_edges
            .into_iter()
            .enumerate()
            .map(|(i, (cut_vertex, outside_vertex))| Crossing {
                new_vertex: base + i,
                cut_vertex,
                outside_vertex,
            })
            .collect();
        TruncationRecord {
            original_vertex_count,
            truncated_face: face.to_vec(),
            survivors,
            crossings,
        }
    }

    pub fn truncated_face_set(&self) -> VertexSet {
        self.truncated_face.iter().copied().collect()
    }

    pub fn new_vertex_count(&self) -> usize {
        self.survivors.len() + self.crossings.len()
    }

    pub fn new_facet_vertices(&self) -> VertexSet {
        self.crossings.iter().map(|c| c.new_vertex).collect()
    }

    /// Original id → truncated id for surviving vertices.
    pub(crate) fn survivor_index(&self) -> Vec<Option<usize>> {
        let mut index = vec![None; self.original_vertex_count];
        for (i, &v) in self.survivors.iter().enumerate() {
            index[v] = Some(i);
        }
        index
    }

    pub fn crossing_for(&self, cut_vertex: usize, outside_vertex: usize) -> Option<usize> {
        self.crossings
            .iter()
            .find(|c| c.cut_vertex == cut_vertex && c.outside_vertex == outside_vertex)
            .map(|c| c.new_vertex)
    }

    /// Maps a face of the truncated polytope back to original ids: survivors
    /// keep their identity, new vertices collapse onto their cut vertex.
    pub(crate) fn restore_set(&self, face: VertexSet) -> VertexSet {
        let base = self.survivors.len();
        face.iter()
            .map(|v| {
                if v < base {
                    self.survivors[v]
                } else {
                    self.crossings[v - base].cut_vertex
                }
            })
            .collect()
    }

    /// Checks the record against the original graph: it must cover exactly
    /// the edges leaving the truncated face.
    pub fn validate_against(&self, original: &Graph) -> Result<()> {
        let face = self.truncated_face_set();
        let mut expected: Vec<(usize, usize)> = face
            .iter()
            .flat_map(|t| {
                original
                    .neighbors(t)
                    .difference(face)
                    .iter()
                    .map(move |o| (t, o))
            })
            .collect();
        expected.sort_unstable();
        let actual: Vec<(usize, usize)> = self
            .crossings
            .iter()
            .map(|c| (c.cut_vertex, c.outside_vertex))
            .collect();
        if expected != actual {
            return Err(Error::input(
                "truncation record does not match the edges leaving the truncated face",
            ));
        }
        Ok(())
    }
}

impl FaceLattice {
    /// Truncates the face `face`, returning the new lattice and the id map.
    pub fn truncate(&self, face: VertexSet) -> Result<(FaceLattice, TruncationRecord)> {
        if !self.contains_face(face) {
            return Err(Error::input(format!("{:?} is not a face", face.to_vec())));
        }
        if face.is_empty() || face == self.top() {
            return Err(Error::input("cannot truncate the empty face or the polytope"));
        }
        let cut_edges: Vec<(usize, usize)> = self
            .graph()
            .edges()
            .iter()
            .filter_map(|&(a, b)| match (face.contains(a), face.contains(b)) {
                (true, false) => Some((a, b)),
                (false, true) => Some((b, a)),
                _ => None,
            })
            .collect();
        let record = TruncationRecord::allocate(self.vertex_count(), face, cut_edges);
        let survivor = record.survivor_index();
        let relabel = |s: VertexSet| -> VertexSet {
            s.iter().map(|v| survivor[v].expect("survivor")).collect()
        };

        let mut faces = Vec::with_capacity(2 * self.face_count());
        for &k in self.faces() {
            if !k.intersects(face) {
                faces.push(relabel(k));
            } else if !k.is_subset(face) {
                let spawned: VertexSet = record
                    .crossings
                    .iter()
                    .filter(|c| k.contains(c.cut_vertex) && k.contains(c.outside_vertex))
                    .map(|c| c.new_vertex)
                    .collect();
                faces.push(relabel(k.difference(face)).union(spawned));
                faces.push(spawned);
            }
        }
        let lattice = FaceLattice::from_faces(record.new_vertex_count(), faces)
            .map_err(|e| Error::failed("truncate", e))?;
        Ok((lattice, record))
    }

    /// Undoes a truncation: deletes the faces inside the new facet, maps the
    /// rest back to original ids and adds `restored`, the nonempty faces of
    /// the original cut face.
    pub fn untruncate(&self, record: &TruncationRecord, restored: &[VertexSet]) -> Result<FaceLattice> {
        if self.vertex_count() != record.new_vertex_count() {
            return Err(Error::input(format!(
                "lattice has {} vertices, record expects {}",
                self.vertex_count(),
                record.new_vertex_count()
            )));
        }
        let new_facet = record.new_facet_vertices();
        if !self.facets().contains(&new_facet) {
            return Err(Error::input(format!(
                "no facet with vertex set {:?}",
                new_facet.to_vec()
            )));
        }
        let cut = record.truncated_face_set();
        if let Some(f) = restored.iter().find(|f| f.is_empty() || !f.is_subset(cut)) {
            return Err(Error::input(format!(
                "restored face {:?} is not a nonempty subset of the cut face",
                f.to_vec()
            )));
        }
        let faces = self
            .faces()
            .iter()
            .filter(|k| !k.is_subset(new_facet))
            .map(|&k| record.restore_set(k))
            .chain(restored.iter().copied());
        FaceLattice::from_faces(record.original_vertex_count, faces)
            .map_err(|e| Error::failed("untruncate", e))
    }

    /// The nonempty faces contained in `face`.
    pub fn interval_below(&self, face: VertexSet) -> Vec<VertexSet> {
        self.faces()
            .iter()
            .copied()
            .filter(|f| !f.is_empty() && f.is_subset(face))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn round_trip(lattice: &FaceLattice, face: VertexSet) {
        let (cut, record) = lattice.truncate(face).unwrap();
        record.validate_against(lattice.graph()).unwrap();
        let back = cut.untruncate(&record, &lattice.interval_below(face)).unwrap();
        assert_eq!(&back, lattice, "round trip through {:?}", face.to_vec());
    }

    #[test]
    fn tetrahedron_at_a_vertex() {
        let (cut, record) = shapes::tetrahedron().truncate(set(&[0])).unwrap();
        assert_eq!(cut.f_vector(), vec![6, 9, 5, 1]);
        assert_eq!(record.survivors, vec![1, 2, 3]);
        assert_eq!(record.new_facet_vertices(), set(&[3, 4, 5]));
        assert!(cut.facets().contains(&set(&[3, 4, 5])));
    }

    #[test]
    fn pyramid_apex_gives_cube() {
        let (cut, _) = shapes::square_pyramid().truncate(set(&[4])).unwrap();
        assert!(cut.is_isomorphic(&shapes::cube()).unwrap());
    }

    #[test]
    fn tetrahedron_edge_gives_prism() {
        let (cut, record) = shapes::tetrahedron().truncate(set(&[0, 1])).unwrap();
        assert_eq!(cut.f_vector(), vec![6, 9, 5, 1]);
        assert_eq!(record.crossings.len(), 4);
        assert!(cut.is_isomorphic(&shapes::triangular_prism()).unwrap());
    }

    #[test]
    fn untruncate_restores_small_solids() {
        round_trip(&shapes::tetrahedron(), set(&[0]));
        round_trip(&shapes::cube(), set(&[5]));
        round_trip(&shapes::cube(), set(&[0, 1]));
        round_trip(&shapes::cube(), set(&[0, 1, 5, 4]));
        round_trip(&shapes::square_pyramid(), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn truncation_rejects_non_faces() {
        let tet = shapes::tetrahedron();
        assert!(tet.truncate(VertexSet::EMPTY).is_err());
        assert!(tet.truncate(tet.top()).is_err());
        let cube = shapes::cube();
        assert!(matches!(cube.truncate(set(&[0, 6])), Err(Error::Input(_))));
    }

    #[test]
    fn untruncate_needs_the_new_facet() {
        let tet = shapes::tetrahedron();
        let (_, record) = tet.truncate(set(&[0])).unwrap();
        let prism = shapes::triangular_prism();
        // Same vertex count, but ids 3,4,5 do not form a facet of this labeling.
        let relabeled = prism.relabel(&[3, 0, 1, 4, 2, 5]).unwrap();
        assert!(!relabeled.facets().contains(&set(&[3, 4, 5])));
        assert!(matches!(
            relabeled.untruncate(&record, &[set(&[0])]),
            Err(Error::Input(_))
        ));
    }
}
