//! Face-lattice reconstruction from the graph alone.
//!
//! * Simple polytopes: the `k`-faces are exactly the connected `k`-regular
//!   induced subgraphs that are initial for some acyclic orientation
//!   minimizing `f^O`.
//! * One non-simple vertex `x`: the 2-faces through `x` are the initial
//!   2-regular sets containing `x` under `f^O`-minimizing orientations. They
//!   give the graph of the polytope with `x` cut off, which is simple;
//!   reconstruct that and glue `x` back.
//! * Two non-simple vertices `x < y`: 2-faces through exactly one of them
//!   come from orientations minimizing `f^O` among those with the other one
//!   as a global sink. If `x` and `y` are not adjacent, cut off `x`, fill in
//!   the at most one missing edge of the new facet, and recurse into the
//!   one-vertex case. If they are adjacent, also collect the 2-faces through
//!   both (from globally minimizing orientations), cut off the edge `xy` and
//!   use the simple case.
//!
//! Faces are always collected over every minimizing orientation, never a
//! single witness.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face_lattice::{FaceLattice, TruncationRecord};
use crate::graphs::Graph;
use crate::orientations::minimizers;
use crate::vset::VertexSet;

/// Which minimizing orientations to draw 2-faces from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CandidateMode {
    /// Minimize `f^O` over all acyclic orientations.
    GlobalMin,
    /// Minimize `f^O` over acyclic orientations with this vertex as a sink.
    SinkMin(usize),
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub lattice: FaceLattice,
    pub dimension: usize,
    /// The dimension was not supplied and was taken to be the minimum degree.
    pub dimension_assumed: bool,
    /// Number of vertices of degree above the dimension.
    pub nearly_simple_index: usize,
}

/// Metadata describing a reconstruction, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconstructionSummary {
    pub dimension: usize,
    pub dimension_assumed: bool,
    pub nearly_simple_index: usize,
    pub f_vector: Vec<usize>,
}

impl Reconstruction {
    pub fn summary(&self) -> ReconstructionSummary {
        ReconstructionSummary {
            dimension: self.dimension,
            dimension_assumed: self.dimension_assumed,
            nearly_simple_index: self.nearly_simple_index,
            f_vector: self.lattice.f_vector(),
        }
    }
}

/// Keeps capacity errors and stage failures as they are; anything else is
/// reported as a failure of `stage`.
fn at_stage<T>(stage: &'static str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Capacity { .. } | Error::ReconstructionFailed { .. } => e,
        other => Error::failed(stage, other),
    })
}

/// The claimed dimension if given, otherwise the minimum degree. The flag is
/// set when the dimension was assumed.
pub fn infer_dimension(graph: &Graph, claimed: Option<usize>) -> Result<(usize, bool)> {
    let min = graph
        .min_degree()
        .ok_or_else(|| Error::input("graph has no vertices"))?;
    match claimed {
        Some(0) => Err(Error::input("dimension must be positive")),
        Some(d) if d > min => Err(Error::input(format!(
            "claimed dimension {d} exceeds the minimum degree {min}"
        ))),
        Some(d) => Ok((d, false)),
        None if min == 0 => Err(Error::input("graph has an isolated vertex")),
        None => Ok((min, true)),
    }
}

/// Reconstructs a simple `d`-polytope from its `d`-regular graph.
pub fn reconstruct_simple(graph: &Graph, d: usize) -> Result<FaceLattice> {
    if d == 0 || !graph.is_k_regular_connected(d) {
        return Err(Error::input(format!("graph is not connected and {d}-regular")));
    }
    let mut faces: HashSet<VertexSet> = HashSet::new();
    for o in minimizers(graph, None)? {
        for k in 0..d {
            faces.extend(o.initial_krics(k));
        }
    }
    let lattice = FaceLattice::from_faces(graph.vertex_count(), faces).map_err(|e| {
        Error::failed("reconstruct-simple", format!("not a simple polytope graph: {e}"))
    })?;
    if lattice.dimension() != d || lattice.graph() != graph {
        return Err(Error::failed(
            "reconstruct-simple",
            format!(
                "not a simple polytope graph: assembled lattice has dimension {} and {} edges",
                lattice.dimension(),
                lattice.graph().edge_count()
            ),
        ));
    }
    Ok(lattice)
}

/// Vertex sets of initial 2-regular connected induced subgraphs, over every
/// orientation in the minimizing class, that contain all of `anchors` and
/// none of `excluded`. Sorted by ascending vertex lists.
pub fn two_face_candidates(
    graph: &Graph,
    anchors: VertexSet,
    excluded: VertexSet,
    mode: CandidateMode,
) -> Result<Vec<VertexSet>> {
    if anchors.is_empty() {
        return Err(Error::input("at least one anchor vertex is required"));
    }
    if !anchors.union(excluded).is_subset(graph.vertices()) {
        return Err(Error::input("anchor or excluded vertex out of range"));
    }
    let sink = match mode {
        CandidateMode::GlobalMin => None,
        CandidateMode::SinkMin(y) => Some(y),
    };
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for o in minimizers(graph, sink)? {
        for s in o.initial_krics(2) {
            if anchors.is_subset(s) && !s.intersects(excluded) {
                found.insert(s.to_vec());
            }
        }
    }
    Ok(found.into_iter().map(|v| v.into_iter().collect()).collect())
}

fn check_polygon(graph: &Graph, face: VertexSet) -> Result<()> {
    if face.len() < 3 || !graph.is_k_regular_connected_set(face, 2) {
        return Err(Error::input(format!(
            "{:?} does not induce a cycle",
            face.to_vec()
        )));
    }
    Ok(())
}

/// Builds the truncated graph from the surviving edges, the edges to the new
/// vertices, and the given new-facet edges.
fn assemble_truncated(
    graph: &Graph,
    record: &TruncationRecord,
    facet_edges: Vec<(usize, usize)>,
) -> Result<Graph> {
    let survivor = record.survivor_index();
    let cut = record.truncated_face_set();
    let mut edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .filter(|&&(a, b)| !cut.contains(a) && !cut.contains(b))
        .map(|&(a, b)| (survivor[a].expect("survivor"), survivor[b].expect("survivor")))
        .collect();
    for c in &record.crossings {
        edges.push((c.new_vertex, survivor[c.outside_vertex].expect("survivor")));
    }
    let mut seen = HashSet::new();
    for (a, b) in facet_edges {
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::input(format!(
                "two 2-faces produce the same new-facet edge ({a}, {b})"
            )));
        }
        edges.push((a, b));
    }
    Graph::new(record.new_vertex_count(), edges)
}

/// Graph of the polytope with vertex `x` cut off, given the 2-faces at `x`.
pub fn truncated_graph_at_vertex(
    graph: &Graph,
    x: usize,
    two_faces: &[VertexSet],
) -> Result<(Graph, TruncationRecord)> {
    if x >= graph.vertex_count() {
        return Err(Error::input(format!("vertex {x} out of range")));
    }
    let cut_edges = graph.neighbors(x).iter().map(|w| (x, w)).collect();
    let record = TruncationRecord::allocate(graph.vertex_count(), VertexSet::singleton(x), cut_edges);
    let mut facet_edges = Vec::with_capacity(two_faces.len());
    for &face in two_faces {
        if !face.contains(x) {
            return Err(Error::input(format!("2-face {:?} does not contain {x}", face.to_vec())));
        }
        check_polygon(graph, face)?;
        let at_x = face.intersection(graph.neighbors(x)).to_vec();
        let [w1, w2] = at_x[..] else {
            return Err(Error::input(format!(
                "2-face {:?} has {} edges at {x}",
                face.to_vec(),
                at_x.len()
            )));
        };
        let a = record.crossing_for(x, w1).expect("neighbor of x");
        let b = record.crossing_for(x, w2).expect("neighbor of x");
        facet_edges.push((a, b));
    }
    let truncated = assemble_truncated(graph, &record, facet_edges)?;
    Ok((truncated, record))
}

/// Graph of the polytope with the edge `xy` cut off, given the 2-faces
/// meeting `{x, y}`.
pub fn truncated_graph_at_edge(
    graph: &Graph,
    x: usize,
    y: usize,
    two_faces: &[VertexSet],
) -> Result<(Graph, TruncationRecord)> {
    if !graph.has_edge(x, y) {
        return Err(Error::input(format!("({x}, {y}) is not an edge")));
    }
    let cut = VertexSet::singleton(x).with(y);
    let cut_edges = cut
        .iter()
        .flat_map(|t| graph.neighbors(t).difference(cut).iter().map(move |w| (t, w)))
        .collect();
    let record = TruncationRecord::allocate(graph.vertex_count(), cut, cut_edges);
    let leaving = |t: usize, face: VertexSet| face.intersection(graph.neighbors(t)).difference(cut).to_vec();
    let mut facet_edges = Vec::with_capacity(two_faces.len());
    for &face in two_faces {
        check_polygon(graph, face)?;
        let malformed = || {
            Error::input(format!(
                "2-face {:?} does not cross the cut at {{{x}, {y}}} in exactly two edges",
                face.to_vec()
            ))
        };
        let edge = match (face.contains(x), face.contains(y)) {
            (true, true) => match (&leaving(x, face)[..], &leaving(y, face)[..]) {
                (&[wx], &[wy]) => (record.crossing_for(x, wx), record.crossing_for(y, wy)),
                _ => return Err(malformed()),
            },
            (true, false) | (false, true) => {
                let t = if face.contains(x) { x } else { y };
                match leaving(t, face)[..] {
                    [w1, w2] => (record.crossing_for(t, w1), record.crossing_for(t, w2)),
                    _ => return Err(malformed()),
                }
            }
            (false, false) => return Err(malformed()),
        };
        facet_edges.push((edge.0.expect("crossing"), edge.1.expect("crossing")));
    }
    let truncated = assemble_truncated(graph, &record, facet_edges)?;
    Ok((truncated, record))
}

/// Adds the single missing edge of a new facet graph that should be
/// `(d-1)`-regular: the two vertices of degree `d-2` must be joined.
pub fn complete_new_facet(facet: &Graph, d: usize) -> Result<Graph> {
    let fail = |detail: String| Error::ReconstructionFailed {
        stage: "complete-new-facet",
        detail: format!("facet completion impossible: {detail}"),
    };
    if d < 2 {
        return Err(fail(format!("dimension {d} has no facet edges to complete")));
    }
    let mut deficient = Vec::new();
    for v in 0..facet.vertex_count() {
        match facet.degree(v) {
            deg if deg + 1 == d => {}
            deg if deg + 2 == d => deficient.push(v),
            deg => return Err(fail(format!("vertex {v} has degree {deg}, expected {} or {}", d - 1, d - 2))),
        }
    }
    match deficient[..] {
        [] => Ok(facet.clone()),
        [a, b] if !facet.has_edge(a, b) => {
            Graph::new(facet.vertex_count(), facet.edges().iter().copied().chain([(a, b)]))
        }
        _ => Err(fail(format!("{} vertices of degree {}", deficient.len(), d - 2))),
    }
}

/// Vertices of degree above `d`, after checking no vertex has degree below it.
fn high_degree_vertices(graph: &Graph, d: usize) -> Result<Vec<usize>> {
    if !graph.is_connected() {
        return Err(Error::input("graph is not connected"));
    }
    if let Some(v) = (0..graph.vertex_count()).find(|&v| graph.degree(v) < d) {
        return Err(Error::input(format!(
            "vertex {v} has degree {} below the dimension {d}",
            graph.degree(v)
        )));
    }
    Ok((0..graph.vertex_count()).filter(|&v| graph.degree(v) > d).collect())
}

fn verify(lattice: FaceLattice, graph: &Graph, d: usize) -> Result<FaceLattice> {
    if lattice.graph() != graph || lattice.dimension() != d {
        return Err(Error::failed(
            "verify",
            "reconstructed lattice does not reproduce the input graph",
        ));
    }
    Ok(lattice)
}

fn add_edge(graph: &Graph, a: usize, b: usize) -> Result<Graph> {
    Graph::new(graph.vertex_count(), graph.edges().iter().copied().chain([(a, b)]))
}

/// Reconstructs a `d`-polytope with exactly one vertex of degree above `d`.
pub fn reconstruct_1_nearly_simple(graph: &Graph, d: usize) -> Result<FaceLattice> {
    let x = match high_degree_vertices(graph, d)?[..] {
        [x] => x,
        ref other => {
            return Err(Error::input(format!(
                "expected one non-simple vertex, found {}",
                other.len()
            )))
        }
    };
    let at_x = two_face_candidates(graph, VertexSet::singleton(x), VertexSet::EMPTY, CandidateMode::GlobalMin)?;
    let (truncated, record) = at_stage("truncate-at-vertex", truncated_graph_at_vertex(graph, x, &at_x))?;
    if !truncated.is_k_regular_connected(d) {
        return Err(Error::failed(
            "truncate-at-vertex",
            format!("truncated graph is not {d}-regular; 2-faces found at {x}: {:?}", sets(&at_x)),
        ));
    }
    let simple = reconstruct_simple(&truncated, d)?;
    let lattice = at_stage("untruncate", simple.untruncate(&record, &[VertexSet::singleton(x)]))?;
    verify(lattice, graph, d)
}

/// Reconstructs a `d`-polytope with exactly two vertices of degree above `d`.
pub fn reconstruct_2_nearly_simple(graph: &Graph, d: usize) -> Result<FaceLattice> {
    let (x, y) = match high_degree_vertices(graph, d)?[..] {
        [x, y] => (x, y),
        ref other => {
            return Err(Error::input(format!(
                "expected two non-simple vertices, found {}",
                other.len()
            )))
        }
    };
    let (sx, sy) = (VertexSet::singleton(x), VertexSet::singleton(y));
    let x_only = two_face_candidates(graph, sx, sy, CandidateMode::SinkMin(y))?;
    let y_only = two_face_candidates(graph, sy, sx, CandidateMode::SinkMin(x))?;

    if !graph.has_edge(x, y) {
        let (truncated, record) = at_stage("truncate-at-vertex", truncated_graph_at_vertex(graph, x, &x_only))?;
        let facet = record.new_facet_vertices();
        let local = at_stage("complete-new-facet", truncated.induced_subgraph(facet))?;
        let completed = complete_new_facet(&local.graph, d)?;
        let truncated = match completed.edges().iter().find(|&&(a, b)| !local.graph.has_edge(a, b)) {
            Some(&(a, b)) => add_edge(&truncated, local.ids[a], local.ids[b])?,
            None => truncated,
        };
        let inner = reconstruct_1_nearly_simple(&truncated, d)?;
        let lattice = at_stage("untruncate", inner.untruncate(&record, &[sx]))?;
        return verify(lattice, graph, d);
    }

    let both = two_face_candidates(graph, sx.union(sy), VertexSet::EMPTY, CandidateMode::GlobalMin)?;
    let faces: Vec<VertexSet> = x_only.iter().chain(&y_only).chain(&both).copied().collect();
    let (truncated, record) = at_stage("truncate-at-edge", truncated_graph_at_edge(graph, x, y, &faces))?;
    if !truncated.is_k_regular_connected(d) {
        return Err(Error::failed(
            "truncate-at-edge",
            format!("truncated graph is not {d}-regular; 2-faces found: {:?}", sets(&faces)),
        ));
    }
    let simple = reconstruct_simple(&truncated, d)?;
    let lattice = at_stage("untruncate", simple.untruncate(&record, &[sx, sy, sx.union(sy)]))?;
    verify(lattice, graph, d)
}

fn sets(s: &[VertexSet]) -> Vec<Vec<usize>> {
    s.iter().map(|f| f.to_vec()).collect()
}

/// Dispatches on the number of non-simple vertices; refuses three or more.
pub fn reconstruct(graph: &Graph, claimed_dimension: Option<usize>) -> Result<Reconstruction> {
    if !graph.is_connected() {
        return Err(Error::input("graph is not connected"));
    }
    let (d, assumed) = infer_dimension(graph, claimed_dimension)?;
    let h = (0..graph.vertex_count()).filter(|&v| graph.degree(v) > d).count();
    let lattice = match h {
        0 => reconstruct_simple(graph, d)?,
        1 => reconstruct_1_nearly_simple(graph, d)?,
        2 => reconstruct_2_nearly_simple(graph, d)?,
        _ => return Err(Error::Unsupported { h }),
    };
    Ok(Reconstruction {
        lattice,
        dimension: d,
        dimension_assumed: assumed,
        nearly_simple_index: h,
    })
}
