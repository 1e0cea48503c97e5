use std::time::Instant;

use polyrecon::reconstruct::reconstruct;
use polyrecon::{fixtures, Error};

#[test]
fn catalog_fixtures_with_few_non_simple_vertices() {
    for id in ["P6", "P8", "P12"] {
        let entry = fixtures::by_id(id).unwrap();
        let t = Instant::now();
        let r = reconstruct(entry.lattice.graph(), Some(entry.dimension)).unwrap();
        eprintln!("{id}: {:?}", t.elapsed());
        assert_eq!(r.lattice, entry.lattice, "{id}");
    }
}

#[test]
fn counterexample_graphs_are_refused() {
    for id in ["P3", "P4"] {
        let g = fixtures::by_id(id).unwrap().lattice.graph().clone();
        assert_eq!(reconstruct(&g, None).unwrap_err(), Error::Unsupported { h: 3 });
        assert_eq!(reconstruct(&g, Some(4)).unwrap_err(), Error::Unsupported { h: 3 });
    }
}
