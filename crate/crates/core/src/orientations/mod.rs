//! Acyclic orientations of polytope graphs and the `f^O = Σ 2^indeg(v)`
//! objective.
//!
//! An [`Orientation`] borrows its graph and records one direction per edge
//! (addressed by the graph's lexicographic edge index). Construction always
//! checks acyclicity.

mod search;

pub use search::{
    enumerate_acyclic, min_f_o, min_f_o_with_sink, minimizers, AcyclicOrientations, Minimum,
    Minimizers, MAX_ORIENTATION_EDGES,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face_lattice::FaceLattice;
use crate::graphs::Graph;
use crate::vset::VertexSet;

/// Exact value of `f^O`. With at most 64 vertices of in-degree at most 63
/// the sum stays below `2^70`.
pub type FValue = u128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation<'g> {
    graph: &'g Graph,
    /// Bit `i` set: edge `i = (a, b)` points `a → b`; clear: `b → a`.
    forward: u64,
    outs: Vec<VertexSet>,
    ins: Vec<VertexSet>,
}

impl<'g> Orientation<'g> {
    /// Builds from the per-edge direction bits, rejecting directed cycles.
    pub fn from_bits(graph: &'g Graph, forward: u64) -> Result<Self> {
        let m = graph.edge_count();
        if m > MAX_ORIENTATION_EDGES {
            return Err(Error::Capacity {
                what: "edge count",
                limit: MAX_ORIENTATION_EDGES,
                actual: m,
            });
        }
        if m < 64 && forward >> m != 0 {
            return Err(Error::input("direction bits beyond the last edge"));
        }
        let o = Self::from_bits_unchecked(graph, forward);
        if o.topological_order().is_none() {
            return Err(Error::input("orientation has a directed cycle"));
        }
        Ok(o)
    }

    pub(crate) fn from_bits_unchecked(graph: &'g Graph, forward: u64) -> Self {
        let n = graph.vertex_count();
        let mut outs = vec![VertexSet::EMPTY; n];
        let mut ins = vec![VertexSet::EMPTY; n];
        for (i, &(a, b)) in graph.edges().iter().enumerate() {
            let (t, h) = if forward >> i & 1 == 1 { (a, b) } else { (b, a) };
            outs[t].insert(h);
            ins[h].insert(t);
        }
        Orientation {
            graph,
            forward,
            outs,
            ins,
        }
    }

    /// Builds from explicit `(tail, head)` arcs, one per edge.
    pub fn from_arcs(graph: &'g Graph, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.len() != graph.edge_count() {
            return Err(Error::input(format!(
                "{} arcs given for {} edges",
                arcs.len(),
                graph.edge_count()
            )));
        }
        let mut forward = 0u64;
        let mut seen = 0u64;
        for &(t, h) in arcs {
            let i = graph
                .edge_index(t, h)
                .ok_or_else(|| Error::input(format!("({t}, {h}) is not an edge")))?;
            if seen >> i & 1 == 1 {
                return Err(Error::input(format!("edge ({t}, {h}) directed twice")));
            }
            seen |= 1 << i;
            if t < h {
                forward |= 1 << i;
            }
        }
        Self::from_bits(graph, forward)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn bits(&self) -> u64 {
        self.forward
    }

    /// `(tail, head)` of edge `i`.
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let (a, b) = self.graph.edges()[i];
        if self.forward >> i & 1 == 1 {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.graph.edge_count()).map(|i| self.arc(i))
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.ins[v].len()
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.ins[v]
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.outs[v]
    }

    /// `Σ_v 2^indeg(v)`.
    pub fn f_o(&self) -> FValue {
        self.ins.iter().map(|s| 1u128 << s.len()).sum()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.outs[v].is_empty()
    }

    /// Vertices of `s` with no arc leaving them inside `s`.
    pub fn sinks_in(&self, s: VertexSet) -> VertexSet {
        s.iter().filter(|&v| !self.outs[v].intersects(s)).collect()
    }

    /// Every edge with exactly one endpoint in `s` points out of `s`.
    pub fn is_initial(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.ins[v].is_subset(s))
    }

    /// Kahn order; `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.graph.vertex_count();
        let mut placed = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let ready: Vec<usize> = VertexSet::full(n)
                .difference(placed)
                .iter()
                .filter(|&v| self.ins[v].is_subset(placed))
                .collect();
            if ready.is_empty() {
                return None;
            }
            for v in ready {
                placed.insert(v);
                order.push(v);
            }
        }
        Some(order)
    }

    /// `v` together with everything that reaches it.
    pub fn down_closure(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.ins[u]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn reversed(&self) -> Orientation<'g> {
        let m = self.graph.edge_count();
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        Self::from_bits_unchecked(self.graph, !self.forward & mask)
    }

    /// All initial vertex sets inducing a connected `k`-regular subgraph.
    ///
    /// Such a set is down-closed, so it is the down-closure of its own sinks,
    /// and each of those sinks has in-degree exactly `k`. The search grows
    /// unions of down-closures of in-degree-`k` vertices and abandons a
    /// branch as soon as some induced degree exceeds `k`. Results are sorted
    /// by their ascending vertex lists.
    pub fn initial_krics(&self, k: usize) -> Vec<VertexSet> {
        let candidates: Vec<usize> = (0..self.graph.vertex_count())
            .filter(|&v| self.indegree(v) == k)
            .collect();
        let closures: Vec<VertexSet> = candidates.iter().map(|&v| self.down_closure(v)).collect();
        let mut found = Vec::new();
        self.grow_krics(k, &candidates, &closures, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut found);
        found.sort_unstable_by_key(|s| s.to_vec());
        found.dedup();
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn grow_krics(
        &self,
        k: usize,
        candidates: &[usize],
        closures: &[VertexSet],
        from: usize,
        chosen: VertexSet,
        set: VertexSet,
        found: &mut Vec<VertexSet>,
    ) {
        for i in from..candidates.len() {
            let c = candidates[i];
            if set.contains(c) || chosen.iter().any(|a| closures[i].contains(a)) {
                continue;
            }
            let grown = set.union(closures[i]);
            if grown.iter().any(|v| self.graph.degree_in(v, grown) > k) {
                continue;
            }
            if self.graph.is_k_regular_connected_set(grown, k) {
                found.push(grown);
                // Any larger k-regular set would be disconnected from this one.
                continue;
            }
            self.grow_krics(k, candidates, closures, i + 1, chosen.with(c), grown, found);
        }
    }

    pub fn to_file(&self) -> OrientationFile {
        OrientationFile {
            edges: self
                .graph
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| {
                    let dir = if self.forward >> i & 1 == 1 { "ab" } else { "ba" };
                    (a, b, dir.to_string())
                })
                .collect(),
        }
    }

    pub fn from_file(graph: &'g Graph, file: &OrientationFile) -> Result<Self> {
        let arcs = file
            .edges
            .iter()
            .map(|(a, b, dir)| match dir.as_str() {
                "ab" => Ok((*a, *b)),
                "ba" => Ok((*b, *a)),
                other => Err(Error::input(format!("direction must be \"ab\" or \"ba\", got {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_arcs(graph, &arcs)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("orientation serializes");
        s.push('\n');
        s
    }
}

/// On-disk orientation format: `{"edges": [[a, b, "ab" | "ba"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientationFile {
    pub edges: Vec<(usize, usize, String)>,
}

/// Orients every edge toward the endpoint with the larger value of `⟨x, w⟩`.
pub fn linear_functional_orientation<'g>(
    graph: &'g Graph,
    coords: &[Vec<BigRational>],
    w: &[BigRational],
) -> Result<Orientation<'g>> {
    if coords.len() != graph.vertex_count() {
        return Err(Error::input(format!(
            "{} points for {} vertices",
            coords.len(),
            graph.vertex_count()
        )));
    }
    if let Some(p) = coords.iter().find(|p| p.len() != w.len()) {
        return Err(Error::input(format!(
            "point of dimension {} against functional of dimension {}",
            p.len(),
            w.len()
        )));
    }
    let values: Vec<BigRational> = coords
        .iter()
        .map(|p| p.iter().zip(w).map(|(x, y)| x * y).sum())
        .collect();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return Err(Error::Degenerate(i, j));
            }
        }
    }
    let mut forward = 0u64;
    for (i, &(a, b)) in graph.edges().iter().enumerate() {
        if values[a] < values[b] {
            forward |= 1 << i;
        }
    }
    Orientation::from_bits(graph, forward)
}

/// Integer-coordinate convenience wrapper for [`linear_functional_orientation`].
pub fn linear_functional_orientation_int<'g>(
    graph: &'g Graph,
    coords: &[Vec<i64>],
    w: &[i64],
) -> Result<Orientation<'g>> {
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let coords: Vec<Vec<BigRational>> = coords.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect();
    let w: Vec<BigRational> = w.iter().map(|&x| rat(x)).collect();
    linear_functional_orientation(graph, &coords, &w)
}

/// The three conditions that characterize orientations attaining
/// `f^O = Σ f_i`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodConditions {
    /// Every nonempty face has exactly one sink.
    pub unique_sink: bool,
    /// Every nonempty face is simple at each of its sinks.
    pub simple_at_sink: bool,
    /// Every vertex is the sink of a face containing all of its in-edges.
    pub full_star_face: bool,
}

impl GoodConditions {
    pub fn all(&self) -> bool {
        self.unique_sink && self.simple_at_sink && self.full_star_face
    }
}

pub fn good_conditions(lattice: &FaceLattice, o: &Orientation<'_>) -> Result<GoodConditions> {
    if lattice.graph() != o.graph() {
        return Err(Error::input("orientation is not on the lattice's graph"));
    }
    let g = o.graph();
    let mut unique_sink = true;
    let mut simple_at_sink = true;
    let mut star = vec![false; lattice.vertex_count()];
    for &face in lattice.faces().iter().filter(|f| !f.is_empty()) {
        let sinks = o.sinks_in(face);
        if sinks.len() != 1 {
            unique_sink = false;
        }
        let dim = lattice.face_dimension(face).expect("face") as usize;
        for s in sinks {
            if g.degree_in(s, face) != dim {
                simple_at_sink = false;
            }
            if o.in_neighbors(s).is_subset(face) {
                star[s] = true;
            }
        }
    }
    Ok(GoodConditions {
        unique_sink,
        simple_at_sink,
        full_star_face: star.iter().all(|&b| b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn f_o_of_small_orientations() {
        let p = path3();
        let o = Orientation::from_arcs(&p, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(o.f_o(), 5);
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = Orientation::from_arcs(&tri, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(t.f_o(), 7);
    }

    #[test]
    fn cyclic_assignments_are_rejected() {
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(Orientation::from_arcs(&tri, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Orientation::from_arcs(&tri, &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn initial_sets_on_a_path() {
        let p = path3();
        let o = Orientation::from_arcs(&p, &[(0, 1), (1, 2)]).unwrap();
        assert!(o.is_initial(VertexSet::EMPTY));
        assert!(o.is_initial(p.vertices()));
        assert!(o.is_initial(set(&[0, 1])));
        assert!(!o.is_initial(set(&[1, 2])));
    }

    #[test]
    fn krics_of_a_square() {
        let sq = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        // Linear order 0 < 1 < 2 < 3.
        let o = Orientation::from_arcs(&sq, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(o.initial_krics(2), vec![sq.vertices()]);
        assert_eq!(o.initial_krics(0), vec![set(&[0])]);
        assert_eq!(o.initial_krics(1), vec![set(&[0, 1])]);
    }

    #[test]
    fn krics_match_brute_force_on_the_cube() {
        let cube = shapes::cube();
        let g = cube.graph();
        for o in enumerate_acyclic(g).unwrap().step_by(97) {
            for k in 0..=3 {
                let brute: Vec<VertexSet> = (1u64..256)
                    .map(VertexSet::from_bits)
                    .filter(|&s| o.is_initial(s) && g.is_k_regular_connected_set(s, k))
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let mut fast = o.initial_krics(k);
                fast.sort();
                assert_eq!(fast, brute);
            }
        }
    }

    #[test]
    fn functional_orientation_of_unit_square() {
        let sq = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let pts = vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]];
        let o = linear_functional_orientation_int(&sq, &pts, &[1, 2]).unwrap();
        assert_eq!(o.sinks_in(sq.vertices()), set(&[2]));
        let neg = linear_functional_orientation_int(&sq, &pts, &[-1, -2]).unwrap();
        assert_eq!(neg, o.reversed());
        assert!(matches!(
            linear_functional_orientation_int(&sq, &pts, &[1, 1]),
            Err(Error::Degenerate(1, 3))
        ));
    }

    #[test]
    fn cube_functional_orientation_is_good() {
        let cube = shapes::cube();
        // prism(4) numbering: bottom square 0..4, top square 4..8.
        let pts = vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![1, 1, 1],
            vec![0, 1, 1],
        ];
        let o = linear_functional_orientation_int(cube.graph(), &pts, &[1, 2, 4]).unwrap();
        for (v, p) in pts.iter().enumerate() {
            assert_eq!(o.indegree(v), p.iter().filter(|&&x| x == 1).count());
        }
        assert_eq!(o.f_o(), 27);
        assert_eq!(cube.total_faces(), 27);
        let report = good_conditions(&cube, &o).unwrap();
        assert!(report.all());
    }

    #[test]
    fn segment_orientations_are_good() {
        let seg = crate::face_lattice::FaceLattice::from_facets(2, &[vec![0], vec![1]]).unwrap();
        for o in enumerate_acyclic(seg.graph()).unwrap() {
            assert_eq!(o.f_o(), 3);
            assert!(good_conditions(&seg, &o).unwrap().all());
        }
    }

    #[test]
    fn orientation_file_round_trip() {
        let p = path3();
        let o = Orientation::from_arcs(&p, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(o.to_json(), "{\"edges\":[[0,1,\"ba\"],[1,2,\"ab\"]]}\n");
        let back = Orientation::from_file(&p, &o.to_file()).unwrap();
        assert_eq!(back, o);
    }
}
