//! Bundled catalog: P3 and P4 (distinct 4-polytopes with isomorphic graphs),
//! P5 to P9 (4-polytopes on 7 vertices determined by their graphs), and
//! P10 to P12 (determined by graph and dimension).

use crate::census::{parse_catalog, CatalogEntry};

pub const CATALOG: &str = include_str!("../fixtures/catalog.txt");

pub const IDS: [&str; 10] = ["P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11", "P12"];

pub fn catalog() -> Vec<CatalogEntry> {
    parse_catalog(CATALOG).expect("bundled catalog is valid")
}

pub fn by_id(id: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.id == id)
}

/// Facet list in the bracketed form `[[7, 6, 5, 4, 3, 2], ...]`, in catalog order.
pub fn facet_list(entry: &CatalogEntry) -> String {
    let facets: Vec<String> = entry
        .facets
        .iter()
        .map(|f| {
            let ids: Vec<String> = f.iter().map(usize::to_string).collect();
            format!("[{}]", ids.join(", "))
        })
        .collect();
    format!("[{}]", facets.join(", "))
}
