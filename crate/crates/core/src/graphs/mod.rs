//! Undirected simple graphs on dense vertex ids.
//!
//! Vertices are `0..vertex_count` and adjacency is stored as one [`VertexSet`]
//! per vertex, so graphs are limited to [`MAX_VERTICES`] vertices. Edges are
//! kept as `(a, b)` pairs with `a < b`, sorted lexicographically; the edge
//! index into that list is what orientations address.

mod canon;

pub use canon::{canonical_labeling, Certificate, MAX_CANON_VERTICES};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
}

/// An induced subgraph together with the map from its vertex ids back to the
/// parent graph's ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `ids[i]` is the parent id of subgraph vertex `i`.
    pub ids: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertex count",
                limit: MAX_VERTICES,
                actual: vertex_count,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; vertex_count];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::input(format!(
                    "edge ({a}, {b}) has an endpoint outside [0, {vertex_count})"
                )));
            }
            if a == b {
                return Err(Error::input(format!("self-loop at vertex {a}")));
            }
            if adj[a].contains(b) {
                return Err(Error::input(format!("duplicate edge ({a}, {b})")));
            }
            adj[a].insert(b);
            adj[b].insert(a);
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        Ok(Graph { adj, edges: list })
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let mut edges = Vec::new();
        for (a, nb) in adj.iter().enumerate() {
            for b in nb.iter().filter(|&b| b > a) {
                edges.push((a, b));
            }
        }
        Graph { adj, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.adj.len())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|n| n.len()).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(|n| n.len()).min()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].contains(b)
    }

    /// Degree of `v` counting only neighbors inside `s`.
    pub fn degree_in(&self, v: usize, s: VertexSet) -> usize {
        self.adj[v].intersection(s).len()
    }

    /// Connected component of `start` inside the vertex set `within`.
    pub fn component_in(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().first() {
            None => true,
            Some(v) => self.component_in(v, self.vertices()) == self.vertices(),
        }
    }

    /// True iff the subgraph induced by `s` is nonempty, `k`-regular and connected.
    pub fn is_k_regular_connected_set(&self, s: VertexSet, k: usize) -> bool {
        let Some(first) = s.first() else {
            return false;
        };
        s.iter().all(|v| self.degree_in(v, s) == k) && self.component_in(first, s) == s
    }

    /// True iff every vertex has degree exactly `k` and the graph is connected.
    /// The empty graph is not considered regular.
    pub fn is_k_regular_connected(&self, k: usize) -> bool {
        self.is_k_regular_connected_set(self.vertices(), k)
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::input(format!(
                "vertex set {:?} is not within [0, {})",
                s,
                self.vertex_count()
            )));
        }
        Ok(())
    }

    /// The subgraph induced by `s`, relabeled to `0..|s|` in ascending id order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        self.check_set(s)?;
        let ids = s.to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| local[w]).collect())
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_adjacency(adj),
            ids,
        })
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        crate::check_permutation(perm, self.vertex_count())?;
        Graph::new(
            self.vertex_count(),
            self.edges.iter().map(|&(a, b)| (perm[a], perm[b])),
        )
    }

    /// Canonical certificate: equal for two graphs iff they are isomorphic.
    pub fn canonical_form(&self) -> Result<Certificate> {
        let colors = vec![0u32; self.vertex_count()];
        Certificate::new(&self.adj, &colors)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertices: self.vertex_count(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_file(file: &GraphFile) -> Result<Self> {
        Graph::new(file.vertices, file.edges.iter().map(|e| (e[0], e[1])))
    }

    /// Compact JSON in the graph file format, newline terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_file()).expect("graph file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::input(format!("graph file: {e}")))?;
        Graph::from_file(&file)
    }
}

/// On-disk graph format: `{"vertices": n, "edges": [[a, b], ...]}` with
/// `a < b` and edges sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(65, []), Err(Error::Capacity { .. })));
    }

    #[test]
    fn induced_subgraph_of_square() {
        let sq = cycle(4);
        let sub = sq.induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(sub.graph, path(3));
        assert_eq!(sub.ids, vec![0, 1, 2]);

        let all = sq.induced_subgraph(sq.vertices()).unwrap();
        assert_eq!(all.graph, sq);

        let pair = sq.induced_subgraph(set(&[0, 2])).unwrap();
        assert_eq!(pair.graph.vertex_count(), 2);
        assert_eq!(pair.graph.edge_count(), 0);

        assert!(sq.induced_subgraph(set(&[0, 7])).is_err());
    }

    #[test]
    fn regular_connected_predicate() {
        assert!(cycle(3).is_k_regular_connected(2));
        assert!(!path(3).is_k_regular_connected(2));
        let two_triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_k_regular_connected(2));
        assert!(Graph::new(1, []).unwrap().is_k_regular_connected(0));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let g = Graph::new(4, [(2, 3), (0, 1), (1, 2), (0, 3)]).unwrap();
        let text = g.to_json();
        assert_eq!(text, "{\"vertices\":4,\"edges\":[[0,1],[0,3],[1,2],[2,3]]}\n");
        assert_eq!(Graph::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn certificates_of_small_graphs() {
        let c4 = cycle(4);
        let relabeled = c4.relabel(&[2, 0, 3, 1]).unwrap();
        assert_ne!(c4, relabeled);
        assert_eq!(c4.canonical_form().unwrap(), relabeled.canonical_form().unwrap());
        assert_ne!(c4.canonical_form().unwrap(), path(4).canonical_form().unwrap());
    }
}
