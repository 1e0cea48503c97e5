//! Depth-first search over acyclic orientations.
//!
//! Edges are assigned in lexicographic order; at each edge the direction
//! `a → b` is tried before `b → a`, so the enumeration order is a fixed
//! binary counter over the edge list. A partial assignment is abandoned as
//! soon as it closes a directed cycle, violates a sink constraint, or (for
//! minimization) its lower bound exceeds the current limit.
//!
//! Lower bound: each vertex contributes at least `2^indeg` for its current
//! in-degree, and each unassigned edge will raise one endpoint's term by at
//! least `2^min(indeg a, indeg b)`.

use super::{FValue, Orientation};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::vset::VertexSet;

/// Largest edge count accepted by the exhaustive searches.
pub const MAX_ORIENTATION_EDGES: usize = 64;

fn check_capacity(graph: &Graph) -> Result<()> {
    if graph.edge_count() > MAX_ORIENTATION_EDGES {
        return Err(Error::Capacity {
            what: "edge count",
            limit: MAX_ORIENTATION_EDGES,
            actual: graph.edge_count(),
        });
    }
    Ok(())
}

fn check_sink(graph: &Graph, sink: Option<usize>) -> Result<()> {
    match sink {
        Some(y) if y >= graph.vertex_count() => Err(Error::input(format!(
            "sink {y} is not a vertex of a graph on {} vertices",
            graph.vertex_count()
        ))),
        _ => Ok(()),
    }
}

struct Dfs<'g> {
    graph: &'g Graph,
    sink: Option<usize>,
    limit: Option<FValue>,
    depth: usize,
    tried: Vec<u8>,
    outs: Vec<VertexSet>,
    indeg: Vec<u32>,
    forward: u64,
    value: FValue,
    at_leaf: bool,
    done: bool,
}

impl<'g> Dfs<'g> {
    fn new(graph: &'g Graph, sink: Option<usize>, limit: Option<FValue>) -> Self {
        let n = graph.vertex_count();
        Dfs {
            graph,
            sink,
            limit,
            depth: 0,
            tried: vec![0; graph.edge_count()],
            outs: vec![VertexSet::EMPTY; n],
            indeg: vec![0; n],
            forward: 0,
            value: n as FValue,
            at_leaf: false,
            done: false,
        }
    }

    fn reaches(&self, from: usize, to: usize) -> bool {
        let mut seen = VertexSet::singleton(from);
        let mut frontier = seen;
        while !frontier.is_empty() {
            if frontier.contains(to) {
                return true;
            }
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.outs[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        false
    }

    fn bound(&self) -> FValue {
        let rest: FValue = self.graph.edges()[self.depth..]
            .iter()
            .map(|&(a, b)| 1u128 << self.indeg[a].min(self.indeg[b]))
            .sum();
        self.value + rest
    }

    fn apply(&mut self, i: usize, tail: usize, head: usize) {
        self.outs[tail].insert(head);
        self.value += 1u128 << self.indeg[head];
        self.indeg[head] += 1;
        if tail < head {
            self.forward |= 1 << i;
        }
    }

    fn undo(&mut self, i: usize) {
        let (a, b) = self.graph.edges()[i];
        let (tail, head) = if self.forward >> i & 1 == 1 { (a, b) } else { (b, a) };
        self.outs[tail].remove(head);
        self.indeg[head] -= 1;
        self.value -= 1u128 << self.indeg[head];
        self.forward &= !(1 << i);
    }

    /// Next complete assignment within the limit, as `(bits, f^O)`.
    fn next_leaf(&mut self) -> Option<(u64, FValue)> {
        let m = self.graph.edge_count();
        if self.done {
            return None;
        }
        if self.at_leaf {
            self.at_leaf = false;
            if m == 0 {
                self.done = true;
                return None;
            }
            self.depth -= 1;
            self.undo(self.depth);
        }
        loop {
            if self.depth == m {
                self.at_leaf = true;
                return Some((self.forward, self.value));
            }
            let i = self.depth;
            if self.tried[i] == 2 {
                self.tried[i] = 0;
                if i == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.undo(self.depth);
                continue;
            }
            let (a, b) = self.graph.edges()[i];
            let (tail, head) = if self.tried[i] == 0 { (a, b) } else { (b, a) };
            self.tried[i] += 1;
            if self.sink == Some(tail) || self.reaches(head, tail) {
                continue;
            }
            self.apply(i, tail, head);
            self.depth += 1;
            if let Some(limit) = self.limit {
                if self.bound() > limit {
                    self.depth -= 1;
                    self.undo(i);
                }
            }
        }
    }
}

/// Every acyclic orientation of a graph, each exactly once, in the fixed
/// binary-counter order.
pub struct AcyclicOrientations<'g> {
    dfs: Dfs<'g>,
}

impl<'g> Iterator for AcyclicOrientations<'g> {
    type Item = Orientation<'g>;

    fn next(&mut self) -> Option<Orientation<'g>> {
        let (bits, _) = self.dfs.next_leaf()?;
        Some(Orientation::from_bits_unchecked(self.dfs.graph, bits))
    }
}

pub fn enumerate_acyclic(graph: &Graph) -> Result<AcyclicOrientations<'_>> {
    check_capacity(graph)?;
    Ok(AcyclicOrientations {
        dfs: Dfs::new(graph, None, None),
    })
}

/// Minimum of `f^O` and every orientation attaining it.
#[derive(Clone, Debug)]
pub struct Minimum<'g> {
    pub value: FValue,
    pub witnesses: Vec<Orientation<'g>>,
}

/// Streams the orientations attaining the minimum, without storing them.
pub struct Minimizers<'g> {
    pub value: FValue,
    dfs: Dfs<'g>,
}

impl<'g> Iterator for Minimizers<'g> {
    type Item = Orientation<'g>;

    fn next(&mut self) -> Option<Orientation<'g>> {
        let (bits, value) = self.dfs.next_leaf()?;
        debug_assert_eq!(value, self.value);
        Some(Orientation::from_bits_unchecked(self.dfs.graph, bits))
    }
}

/// Cheap upper bound: orient along breadth-first orders (reversed when a sink
/// is required, so the sink comes last).
fn heuristic_bound(graph: &Graph, sink: Option<usize>) -> Option<FValue> {
    let n = graph.vertex_count();
    let starts: Vec<usize> = match sink {
        Some(y) => vec![y],
        None => (0..n).collect(),
    };
    let mut best: Option<FValue> = None;
    for &s in &starts {
        let order = bfs_order(graph, s);
        if order.len() != n {
            continue;
        }
        let mut rank = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        for reverse in [false, true] {
            if sink.is_some() && !reverse {
                continue;
            }
            let mut indeg = vec![0u32; n];
            for &(a, b) in graph.edges() {
                let a_first = rank[a] < rank[b];
                let head = if a_first != reverse { b } else { a };
                indeg[head] += 1;
            }
            let value: FValue = indeg.iter().map(|&d| 1u128 << d).sum();
            best = Some(best.map_or(value, |b| b.min(value)));
        }
    }
    best
}

fn bfs_order(graph: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut seen = VertexSet::singleton(start);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for w in graph.neighbors(v).difference(seen) {
            seen.insert(w);
            order.push(w);
        }
        i += 1;
    }
    order
}

/// Minimum value of `f^O` over acyclic orientations (with `sink` a global
/// sink when given), plus a stream of all orientations attaining it.
pub fn minimizers(graph: &Graph, sink: Option<usize>) -> Result<Minimizers<'_>> {
    check_capacity(graph)?;
    check_sink(graph, sink)?;
    let mut limit = heuristic_bound(graph, sink);
    let mut best = None;
    let mut dfs = Dfs::new(graph, sink, limit);
    while let Some((_, value)) = dfs.next_leaf() {
        best = Some(value);
        if value == 0 {
            break;
        }
        limit = Some(value - 1);
        dfs.limit = limit;
    }
    let value = match best {
        Some(v) => v,
        // The heuristic bound can only fail to be met when no vertex order
        // exists, which never happens for a connected search; fall back to
        // an unbounded search.
        None => {
            let mut dfs = Dfs::new(graph, sink, None);
            let mut best: Option<FValue> = None;
            while let Some((_, v)) = dfs.next_leaf() {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
            best.ok_or_else(|| Error::input("no admissible acyclic orientation"))?
        }
    };
    Ok(Minimizers {
        value,
        dfs: Dfs::new(graph, sink, Some(value)),
    })
}

/// Minimum of `f^O` over all acyclic orientations, with every witness.
pub fn min_f_o(graph: &Graph) -> Result<Minimum<'_>> {
    let m = minimizers(graph, None)?;
    Ok(Minimum {
        value: m.value,
        witnesses: m.collect(),
    })
}

/// Minimum of `f^O` over acyclic orientations in which `sink` is a sink.
pub fn min_f_o_with_sink(graph: &Graph, sink: usize) -> Result<Minimum<'_>> {
    let m = minimizers(graph, Some(sink))?;
    Ok(Minimum {
        value: m.value,
        witnesses: m.collect(),
    })
}
