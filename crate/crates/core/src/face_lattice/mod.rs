//! Face lattices stored as families of vertex sets.
//!
//! Polytope face lattices are atomic, so each face is identified with the set
//! of vertices it contains and the order is plain inclusion. Construction
//! checks the combinatorial axioms a polytope lattice satisfies (intersection
//! closure, gradedness, atoms, edges, polygonal 2-faces, the diamond
//! property) but not geometric realizability.

mod truncation;

pub use truncation::{Crossing, TruncationRecord};

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Certificate, Graph};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug)]
pub struct FaceLattice {
    vertex_count: usize,
    /// Sorted by `(rank, set)`.
    faces: Vec<VertexSet>,
    ranks: Vec<usize>,
    index: HashMap<VertexSet, usize>,
    graph: Graph,
}

impl PartialEq for FaceLattice {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.faces == other.faces
    }
}

impl Eq for FaceLattice {}

impl FaceLattice {
    /// Closes `{full set} ∪ facets ∪ {∅}` under intersection and validates it.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::input("a polytope needs at least one vertex"));
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: vertex_count,
            });
        }
        let mut sets = Vec::with_capacity(facets.len());
        for facet in facets {
            if let Some(&v) = facet.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::input(format!(
                    "facet {facet:?} has vertex {v} outside [0, {vertex_count})"
                )));
            }
            let set: VertexSet = facet.iter().copied().collect();
            if set.len() != facet.len() {
                return Err(Error::input(format!("facet {facet:?} repeats a vertex")));
            }
            sets.push(set);
        }
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                if i != j && a.is_subset(*b) {
                    return Err(Error::input(format!(
                        "facet {:?} is contained in facet {:?}",
                        a.to_vec(),
                        b.to_vec()
                    )));
                }
            }
        }
        // Segments are the one case where a vertex lies in a single facet.
        let is_segment = sets.iter().all(|s| s.len() == 1);
        if !is_segment {
            for v in 0..vertex_count {
                let count = sets.iter().filter(|s| s.contains(v)).count();
                if count < 2 {
                    return Err(Error::input(format!(
                        "vertex {v} lies in {count} facet(s); at least 2 required"
                    )));
                }
            }
        }

        let mut family: HashSet<VertexSet> = HashSet::new();
        family.insert(VertexSet::full(vertex_count));
        family.insert(VertexSet::EMPTY);
        let mut queue = Vec::new();
        for &s in &sets {
            if family.insert(s) {
                queue.push(s);
            }
        }
        while let Some(f) = queue.pop() {
            for &s in &sets {
                let meet = f.intersection(s);
                if family.insert(meet) {
                    queue.push(meet);
                }
            }
        }
        Self::from_faces(vertex_count, family)
    }

    /// Validates an explicit face family. The empty set and the full vertex
    /// set are always included.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if vertex_count == 0 || vertex_count > MAX_VERTICES {
            return Err(Error::input(format!(
                "vertex count {vertex_count} outside [1, {MAX_VERTICES}]"
            )));
        }
        let top = VertexSet::full(vertex_count);
        let mut family: HashSet<VertexSet> = faces.into_iter().collect();
        family.insert(VertexSet::EMPTY);
        family.insert(top);
        if let Some(f) = family.iter().find(|f| !f.is_subset(top)) {
            return Err(Error::not_polytopal(
                format!("face has a vertex outside [0, {vertex_count})"),
                Some(f.to_vec()),
            ));
        }

        let mut by_size: Vec<VertexSet> = family.iter().copied().collect();
        by_size.sort_unstable_by_key(|f| (f.len(), *f));
        for (i, &a) in by_size.iter().enumerate() {
            for &b in &by_size[i + 1..] {
                if !family.contains(&a.intersection(b)) {
                    return Err(Error::not_polytopal(
                        format!(
                            "not closed under intersection: {:?} ∩ {:?} is missing",
                            a.to_vec(),
                            b.to_vec()
                        ),
                        Some(a.intersection(b).to_vec()),
                    ));
                }
            }
        }

        // Longest chain from the empty face.
        let mut rank_of: HashMap<VertexSet, usize> = HashMap::with_capacity(by_size.len());
        for (i, &f) in by_size.iter().enumerate() {
            let r = by_size[..i]
                .iter()
                .filter(|g| g.is_proper_subset(f))
                .map(|g| rank_of[g] + 1)
                .max()
                .unwrap_or(0);
            rank_of.insert(f, r);
        }

        for &f in &by_size {
            let subfaces: Vec<VertexSet> =
                by_size.iter().copied().filter(|g| g.is_proper_subset(f)).collect();
            for &g in &subfaces {
                let covered = !subfaces
                    .iter()
                    .any(|&h| g.is_proper_subset(h) && h.is_proper_subset(f));
                if covered && rank_of[&g] + 1 != rank_of[&f] {
                    return Err(Error::not_polytopal(
                        format!(
                            "not graded: {:?} covers {:?} across {} ranks",
                            f.to_vec(),
                            g.to_vec(),
                            rank_of[&f] - rank_of[&g]
                        ),
                        Some(f.to_vec()),
                    ));
                }
                if rank_of[&g] + 2 == rank_of[&f] {
                    let between = subfaces
                        .iter()
                        .filter(|&&h| g.is_proper_subset(h))
                        .count();
                    if between != 2 {
                        return Err(Error::not_polytopal(
                            format!(
                                "diamond property fails: {between} faces between {:?} and {:?}",
                                g.to_vec(),
                                f.to_vec()
                            ),
                            Some(f.to_vec()),
                        ));
                    }
                }
            }
        }

        let mut faces: Vec<VertexSet> = by_size;
        faces.sort_unstable_by_key(|f| (rank_of[f], *f));
        let ranks: Vec<usize> = faces.iter().map(|f| rank_of[f]).collect();

        for (&f, &r) in faces.iter().zip(&ranks) {
            if r == 1 && f.len() != 1 {
                return Err(Error::not_polytopal("atom is not a single vertex", Some(f.to_vec())));
            }
            if r == 2 && f.len() != 2 && f != top {
                return Err(Error::not_polytopal("edge does not have two vertices", Some(f.to_vec())));
            }
        }
        for v in 0..vertex_count {
            let single = VertexSet::singleton(v);
            if rank_of.get(&single) != Some(&1) && !(vertex_count == 1 && single == top) {
                return Err(Error::not_polytopal(
                    format!("vertex {v} is not an atom"),
                    Some(vec![v]),
                ));
            }
        }

        let edges = faces
            .iter()
            .zip(&ranks)
            .filter(|&(f, &r)| r == 2 && f.len() == 2)
            .map(|(f, _)| {
                let v = f.to_vec();
                (v[0], v[1])
            });
        let graph = Graph::new(vertex_count, edges)?;
        for (&f, &r) in faces.iter().zip(&ranks) {
            if r == 3 && (f.len() < 3 || !graph.is_k_regular_connected_set(f, 2)) {
                return Err(Error::not_polytopal(
                    "2-face is not a polygon in the graph",
                    Some(f.to_vec()),
                ));
            }
        }

        let index = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        Ok(FaceLattice {
            vertex_count,
            faces,
            ranks,
            index,
            graph,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn top(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    /// All faces including `∅` and the polytope, sorted by rank.
    pub fn faces(&self) -> &[VertexSet] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.index.contains_key(&f)
    }

    /// Rank of `f` (length of a chain from `∅`), if `f` is a face.
    pub fn rank(&self, f: VertexSet) -> Option<usize> {
        self.index.get(&f).map(|&i| self.ranks[i])
    }

    /// Dimension of a face: rank minus one.
    pub fn face_dimension(&self, f: VertexSet) -> Option<isize> {
        self.rank(f).map(|r| r as isize - 1)
    }

    pub fn faces_of_rank(&self, r: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces
            .iter()
            .zip(&self.ranks)
            .filter(move |&(_, &fr)| fr == r)
            .map(|(&f, _)| f)
    }

    /// Faces of dimension `k`.
    pub fn faces_of_dimension(&self, k: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces_of_rank(k + 1)
    }

    pub fn dimension(&self) -> usize {
        self.ranks.last().copied().unwrap_or(1) - 1
    }

    pub fn facets(&self) -> Vec<VertexSet> {
        self.faces_of_rank(self.dimension()).collect()
    }

    /// `(f_0, ..., f_d)` with `f_d = 1`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dimension();
        let mut f = vec![0; d + 1];
        for &r in &self.ranks {
            if r >= 1 {
                f[r - 1] += 1;
            }
        }
        f
    }

    /// Number of nonempty faces, `Σ f_i` including the polytope itself.
    pub fn total_faces(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_simple_at(&self, v: usize) -> bool {
        self.graph.degree(v) == self.dimension()
    }

    pub fn non_simple_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| !self.is_simple_at(v)).collect()
    }

    /// Number of vertices at which the polytope is not simple.
    pub fn nearly_simple_index(&self) -> usize {
        self.non_simple_vertices().len()
    }

    pub fn faces_containing(&self, v: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.faces.iter().copied().filter(move |f| f.contains(v))
    }

    pub fn two_faces_containing(&self, v: usize) -> Vec<VertexSet> {
        self.faces_of_dimension(2).filter(|f| f.contains(v)).collect()
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FaceLattice> {
        crate::check_permutation(perm, self.vertex_count)?;
        let mapped = self
            .faces
            .iter()
            .map(|f| f.iter().map(|v| perm[v]).collect::<VertexSet>());
        FaceLattice::from_faces(self.vertex_count, mapped)
    }

    /// Certificate of the vertex–facet incidence graph. Atomic and coatomic
    /// lattices are determined by it, so equal certificates mean isomorphic
    /// lattices.
    pub fn incidence_certificate(&self) -> Result<Certificate> {
        let facets = self.facets();
        let n = self.vertex_count;
        let total = n + facets.len();
        if total > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertices plus facets",
                limit: MAX_VERTICES,
                actual: total,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; total];
        for (j, facet) in facets.iter().enumerate() {
            for v in facet.iter() {
                adj[v].insert(n + j);
                adj[n + j].insert(v);
            }
        }
        let colors: Vec<u32> = (0..total).map(|i| u32::from(i >= n)).collect();
        Certificate::new(&adj, &colors)
    }

    /// True iff some vertex bijection carries one face family onto the other.
    pub fn is_isomorphic(&self, other: &FaceLattice) -> Result<bool> {
        if self.vertex_count != other.vertex_count || self.f_vector() != other.f_vector() {
            return Ok(false);
        }
        Ok(self.incidence_certificate()? == other.incidence_certificate()?)
    }

    /// Facets with vertices in descending order, facets in descending
    /// lexicographic order.
    pub fn sorted_facets(&self) -> Vec<Vec<usize>> {
        let mut facets: Vec<Vec<usize>> = self.facets().into_iter().map(|f| f.to_vec_desc()).collect();
        facets.sort_unstable_by(|a, b| b.cmp(a));
        facets
    }

    pub fn to_file(&self) -> LatticeFile {
        LatticeFile {
            vertices: self.vertex_count,
            facets: self.sorted_facets(),
        }
    }

    pub fn from_file(file: &LatticeFile) -> Result<Self> {
        FaceLattice::from_facets(file.vertices, &file.facets)
    }

    /// Compact JSON in the lattice file format, newline terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("lattice file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: LatticeFile =
            serde_json::from_str(text).map_err(|e| Error::input(format!("lattice file: {e}")))?;
        FaceLattice::from_file(&file)
    }
}

/// On-disk lattice format: `{"vertices": n, "facets": [[ids...], ...]}`.
/// Only facets are stored; the lattice is recomputed on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn square_lattice() {
        let sq = FaceLattice::from_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        assert_eq!(sq.face_count(), 10);
        assert_eq!(sq.f_vector(), vec![4, 4, 1]);
        assert_eq!(sq.dimension(), 2);
    }

    #[test]
    fn small_solids() {
        let tet = shapes::tetrahedron();
        assert_eq!(tet.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(tet.dimension(), 3);
        assert_eq!(shapes::cube().f_vector(), vec![8, 12, 6, 1]);
        assert_eq!(shapes::square_pyramid().f_vector(), vec![5, 8, 5, 1]);
    }

    #[test]
    fn segment_is_accepted() {
        let seg = FaceLattice::from_facets(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(seg.f_vector(), vec![2, 1]);
        assert_eq!(seg.graph().edge_count(), 1);
    }

    #[test]
    fn graph_of_small_solids() {
        let tet = shapes::tetrahedron();
        assert_eq!(tet.graph().edge_count(), 6);
        assert!(tet.graph().is_k_regular_connected(3));

        let pyr = shapes::square_pyramid();
        let apex = 4;
        assert_eq!(pyr.graph().degree(apex), 4);
        let base = set(&[0, 1, 2, 3]);
        assert!(pyr.graph().is_k_regular_connected_set(base, 2));
    }

    #[test]
    fn simplicity_queries() {
        let cube = shapes::cube();
        assert!((0..8).all(|v| cube.is_simple_at(v)));
        assert_eq!(cube.nearly_simple_index(), 0);
        let pyr = shapes::square_pyramid();
        assert!(!pyr.is_simple_at(4));
        assert_eq!(pyr.nearly_simple_index(), 1);
    }

    #[test]
    fn two_faces_at_a_vertex() {
        let tet = shapes::tetrahedron();
        assert!((0..4).all(|v| tet.two_faces_containing(v).len() == 3));
        let pyr = shapes::square_pyramid();
        let at_apex = pyr.two_faces_containing(4);
        assert_eq!(at_apex.len(), 4);
        assert!(at_apex.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn rejects_non_polytopal_families() {
        // Two triangles glued along an edge, as a "3-polytope": vertex 0 in one facet.
        let err = FaceLattice::from_facets(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));

        // A 2-face with a chord-free hexagon that is split by an extra "edge".
        let bad = FaceLattice::from_faces(
            3,
            [set(&[0]), set(&[1]), set(&[2]), set(&[0, 1]), set(&[1, 2])],
        );
        assert!(matches!(bad, Err(Error::NotPolytopal { .. })));

        // Facets whose intersections are not graded: a square with one facet
        // being a triangle through all its vertices.
        let ungraded =
            FaceLattice::from_facets(4, &[vec![0, 1, 2], vec![2, 3], vec![0, 3], vec![1, 3]]);
        assert!(ungraded.is_err());
    }

    #[test]
    fn isomorphism_of_lattices() {
        let cube = shapes::cube();
        let relabeled = cube.relabel(&[3, 7, 1, 0, 2, 6, 4, 5]).unwrap();
        assert_ne!(cube, relabeled);
        assert!(cube.is_isomorphic(&relabeled).unwrap());
        let sq = FaceLattice::from_facets(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap();
        assert!(!shapes::tetrahedron().is_isomorphic(&sq).unwrap());
        assert!(!shapes::cube().is_isomorphic(&shapes::pentagonal_pyramid()).unwrap());
    }

    #[test]
    fn file_format_orders_facets_like_the_catalog() {
        let tet = shapes::tetrahedron();
        assert_eq!(
            tet.to_json(),
            "{\"vertices\":4,\"facets\":[[3,2,1],[3,2,0],[3,1,0],[2,1,0]]}\n"
        );
        assert_eq!(FaceLattice::from_json(&tet.to_json()).unwrap(), tet);
    }
}
