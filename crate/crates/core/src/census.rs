//! Catalogs of polytopes, grouped by graph isomorphism class.
//!
//! A catalog entry whose graph class has no other member is unique within
//! the catalog. That is a statement about the supplied list only; it says
//! nothing about polytopes the catalog leaves out.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face_lattice::FaceLattice;
use crate::graphs::Certificate;

pub const SCOPE_NOTE: &str =
    "uniqueness is relative to the supplied catalog, not to all polytopes";

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub dimension: usize,
    /// Facets as written in the catalog, in the catalog's labels.
    pub facets: Vec<Vec<usize>>,
    /// `labels[v]` is the catalog label of lattice vertex `v`.
    pub labels: Vec<usize>,
    pub lattice: FaceLattice,
    pub graph_certificate: Certificate,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEntry {
    id: String,
    dimension: usize,
    facets: Vec<Vec<usize>>,
}

impl CatalogEntry {
    /// Builds the lattice from the facets. Labels are remapped to dense ids
    /// in ascending order.
    pub fn new(id: impl Into<String>, dimension: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let id = id.into();
        let mut labels: Vec<usize> = facets.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let dense: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let remapped: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|l| dense[l]).collect())
            .collect();
        let lattice = FaceLattice::from_facets(labels.len(), &remapped)?;
        if lattice.dimension() != dimension {
            return Err(Error::input(format!(
                "declared dimension {dimension}, facets give dimension {}",
                lattice.dimension()
            )));
        }
        let graph_certificate = lattice.graph().canonical_form()?;
        Ok(CatalogEntry {
            id,
            dimension,
            facets,
            labels,
            lattice,
            graph_certificate,
        })
    }

    /// The same polytope with catalog labels permuted: label `l` becomes `perm[l]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&l| perm.get(l).copied().ok_or_else(|| Error::input(format!("label {l} not permuted"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        CatalogEntry::new(self.id.clone(), self.dimension, facets)
    }
}

fn parse_facet(text: &str) -> std::result::Result<Vec<usize>, String> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad vertex id {t:?}")))
        .collect()
}

type RawEntry = (String, usize, Vec<Vec<usize>>);

/// On failure: the entry id if it was read, and a message.
fn parse_line(line: &str) -> std::result::Result<RawEntry, (Option<String>, String)> {
    let parts: Vec<&str> = line.split(';').map(str::trim).collect();
    let [id, dim, facets] = parts[..] else {
        return Err((None, format!("expected 3 ';'-separated fields, found {}", parts.len())));
    };
    if id.is_empty() {
        return Err((None, "empty id".into()));
    }
    let named = |m: String| (Some(id.to_string()), m);
    let dimension = dim
        .parse::<usize>()
        .ok()
        .filter(|&d| d > 0)
        .ok_or_else(|| named(format!("bad dimension {dim:?}")))?;
    let facets = facets
        .split('|')
        .map(parse_facet)
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(named)?;
    Ok((id.to_string(), dimension, facets))
}

/// Reads a catalog: either lines `id; dimension; facet | facet | ...` with
/// space-separated vertex ids (`#` starts a comment), or a JSON array of
/// `{"id", "dimension", "facets"}` objects. For JSON input the reported
/// line is the 1-based position of the entry in the array.
pub fn parse_catalog(source: &str) -> Result<Vec<CatalogEntry>> {
    let raw: Vec<(usize, String, usize, Vec<Vec<usize>>)> = if source.trim_start().starts_with('[') {
        let entries: Vec<JsonEntry> = serde_json::from_str(source).map_err(|e| Error::Catalog {
            line: e.line(),
            id: None,
            message: e.to_string(),
        })?;
        entries
            .into_iter()
            .enumerate()
            .map(|(i, e)| (i + 1, e.id, e.dimension, e.facets))
            .collect()
    } else {
        let mut raw = Vec::new();
        for (i, line) in source.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (id, dimension, facets) = parse_line(line).map_err(|(id, message)| Error::Catalog {
                line: i + 1,
                id,
                message,
            })?;
            raw.push((i + 1, id, dimension, facets));
        }
        raw
    };

    let mut seen = HashSet::new();
    raw.into_iter()
        .map(|(line, id, dimension, facets)| {
            if !seen.insert(id.clone()) {
                return Err(Error::Catalog {
                    line,
                    id: Some(id),
                    message: "duplicate id".into(),
                });
            }
            CatalogEntry::new(id.clone(), dimension, facets).map_err(|e| Error::Catalog {
                line,
                id: Some(id),
                message: e.to_string(),
            })
        })
        .collect()
}

/// Serializes entries as the JSON catalog format.
pub fn catalog_to_json(entries: &[CatalogEntry]) -> String {
    let raw: Vec<JsonEntry> = entries
        .iter()
        .map(|e| JsonEntry {
            id: e.id.clone(),
            dimension: e.dimension,
            facets: e.facets.clone(),
        })
        .collect();
    let mut s = serde_json::to_string(&raw).expect("catalog serializes");
    s.push('\n');
    s
}

/// Orders ids so that embedded numbers compare numerically: `P3 < P10`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, x), (true, y)) => {
                let (x, y) = (x.trim_start_matches('0'), y.trim_start_matches('0'));
                x.len().cmp(&y.len()).then_with(|| x.cmp(y))
            }
            ((_, x), (_, y)) => x.cmp(y),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberSummary {
    pub id: String,
    pub dimension: usize,
    pub f_vector: Vec<usize>,
    pub nearly_simple_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusGroup {
    pub vertices: usize,
    pub edges: usize,
    pub graph_certificate: String,
    pub unique_in_catalog: bool,
    pub members: Vec<MemberSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub scope: &'static str,
    pub dimension: Option<usize>,
    pub entries: usize,
    pub groups: Vec<CensusGroup>,
}

/// Groups entries (of the given dimension, if any) by graph isomorphism class.
/// Members are in natural id order; groups are ordered by their first member.
pub fn census_report(entries: &[CatalogEntry], restrict_dimension: Option<usize>) -> CensusReport {
    let mut classes: BTreeMap<&Certificate, Vec<&CatalogEntry>> = BTreeMap::new();
    let selected: Vec<&CatalogEntry> = entries
        .iter()
        .filter(|e| restrict_dimension.is_none_or(|d| e.dimension == d))
        .collect();
    for &e in &selected {
        classes.entry(&e.graph_certificate).or_default().push(e);
    }
    let mut groups: Vec<CensusGroup> = classes
        .into_iter()
        .map(|(cert, mut members)| {
            members.sort_by(|a, b| natural_cmp(&a.id, &b.id));
            let graph = members[0].lattice.graph();
            CensusGroup {
                vertices: graph.vertex_count(),
                edges: graph.edge_count(),
                graph_certificate: cert.to_hex(),
                unique_in_catalog: members.len() == 1,
                members: members
                    .iter()
                    .map(|e| MemberSummary {
                        id: e.id.clone(),
                        dimension: e.dimension,
                        f_vector: e.lattice.f_vector(),
                        nearly_simple_index: e.lattice.nearly_simple_index(),
                    })
                    .collect(),
            }
        })
        .collect();
    groups.sort_by(|a, b| natural_cmp(&a.members[0].id, &b.members[0].id));
    CensusReport {
        scope: SCOPE_NOTE,
        dimension: restrict_dimension,
        entries: selected.len(),
        groups,
    }
}

impl CensusReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let scope = match self.dimension {
            Some(d) => format!("{} entries of dimension {d}", self.entries),
            None => format!("{} entries", self.entries),
        };
        let _ = writeln!(out, "census of {scope}, {} graph classes", self.groups.len());
        let _ = writeln!(out, "note: {}", self.scope);
        let _ = writeln!(out, "{:<6} {:<4} {:<4} {:<7} members", "class", "n", "m", "unique");
        for (i, g) in self.groups.iter().enumerate() {
            let members: Vec<String> = g
                .members
                .iter()
                .map(|m| format!("{} (d={}, h={}, f={:?})", m.id, m.dimension, m.nearly_simple_index, m.f_vector))
                .collect();
            let _ = writeln!(
                out,
                "{:<6} {:<4} {:<4} {:<7} {}",
                i + 1,
                g.vertices,
                g.edges,
                if g.unique_in_catalog { "yes" } else { "no" },
                members.join(", ")
            );
        }
        out
    }
}

/// True iff the two entries have isomorphic graphs but non-isomorphic lattices.
pub fn verify_counterexample(a: &CatalogEntry, b: &CatalogEntry) -> Result<bool> {
    Ok(a.graph_certificate == b.graph_certificate && !a.lattice.is_isomorphic(&b.lattice)?)
}
