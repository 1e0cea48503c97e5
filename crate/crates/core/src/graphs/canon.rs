//! Canonical labeling of small vertex-colored graphs.
//!
//! Equitable color refinement followed by individualization backtracking.
//! Every leaf of the search tree is a labeling; the canonical one is the leaf
//! with the lexicographically smallest adjacency code. Subtrees are skipped
//! when their root lies in the orbit of an already explored sibling, using
//! twin transpositions and automorphisms discovered at earlier leaves.

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// Largest vertex count accepted by [`canonical_labeling`]. Search cost grows
/// with the symmetry of the input; graphs in this crate stay well under it.
pub const MAX_CANON_VERTICES: usize = MAX_VERTICES;

/// Canonical certificate of a vertex-colored graph. Two graphs get the same
/// certificate iff a color-preserving isomorphism exists between them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn new(adj: &[VertexSet], colors: &[u32]) -> Result<Self> {
        let order = canonical_labeling(adj, colors)?;
        let n = adj.len();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut bytes = Vec::with_capacity(1 + 12 * n);
        bytes.push(n as u8);
        for &v in &order {
            bytes.extend_from_slice(&colors[v].to_le_bytes());
        }
        for &v in &order {
            let row: u64 = adj[v].iter().map(|w| 1u64 << position[w]).sum();
            bytes.extend_from_slice(&row.to_le_bytes());
        }
        Ok(Certificate(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

type Partition = Vec<Vec<usize>>;

/// Returns the canonical order: `order[i]` is the vertex placed at position `i`.
pub fn canonical_labeling(adj: &[VertexSet], colors: &[u32]) -> Result<Vec<usize>> {
    let n = adj.len();
    if n > MAX_CANON_VERTICES {
        return Err(Error::Capacity {
            what: "vertex count for canonical labeling",
            limit: MAX_CANON_VERTICES,
            actual: n,
        });
    }
    if colors.len() != n {
        return Err(Error::input("one color per vertex required"));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let partition: Partition = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();

    let mut search = Search {
        adj,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(partition, &mut Vec::new());
    Ok(search.best.expect("search reaches a leaf").1)
}

struct Search<'a> {
    adj: &'a [VertexSet],
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut partition: Partition, fixed: &mut Vec<usize>) {
        refine(self.adj, &mut partition);
        if partition.len() == self.adj.len() {
            let order: Vec<usize> = partition.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        }
        let target = partition
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = partition[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if !explored.is_empty() {
                let orbits = self.orbits(fixed);
                if explored.iter().any(|&u| orbits.same(u, v)) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(partition.len() + 1);
            child.extend_from_slice(&partition[..target]);
            child.push(vec![v]);
            child.push(cell.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&partition[target + 1..]);
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let n = self.adj.len();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let code: Vec<u64> = order
            .iter()
            .map(|&v| self.adj[v].iter().map(|w| 1u64 << position[w]).sum())
            .collect();
        match &self.best {
            Some((best_code, best_order)) if *best_code == code => {
                // order[i] and best_order[i] play the same role: an automorphism.
                let mut map = vec![0usize; n];
                for i in 0..n {
                    map[order[i]] = best_order[i];
                }
                self.automorphisms.push(map);
            }
            Some((best_code, _)) if *best_code < code => {}
            _ => self.best = Some((code, order)),
        }
    }

    /// Swapping `u` and `v` is an automorphism fixing every other vertex.
    /// Both come from the same cell, so their colors agree.
    fn twins(&self, u: usize, v: usize) -> bool {
        let mut nu = self.adj[u];
        nu.remove(v);
        let mut nv = self.adj[v];
        nv.remove(u);
        nu == nv
    }

    fn orbits(&self, fixed: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.adj.len());
        for g in &self.automorphisms {
            if fixed.iter().all(|&f| g[f] == f) {
                for (i, &gi) in g.iter().enumerate() {
                    uf.union(i, gi);
                }
            }
        }
        uf
    }
}

/// Refines to the coarsest equitable partition below `partition`. Cells are
/// split by neighbor counts into every current cell; the split pieces are
/// ordered by that signature so the result does not depend on vertex ids.
fn refine(adj: &[VertexSet], partition: &mut Partition) {
    let n = adj.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let cells = partition.len();
        let mut next: Partition = Vec::with_capacity(n);
        for cell in partition.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u8; cells];
                    for w in adj[v] {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells;
        *partition = next;
        if stable {
            return;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&self, a: usize, b: usize) -> bool {
        let mut uf = UnionFind(self.0.clone());
        uf.find(a) == uf.find(b)
    }
}
