use polyrecon::reconstruct::{
    reconstruct_1_nearly_simple, reconstruct_2_nearly_simple, truncated_graph_at_vertex, two_face_candidates,
    CandidateMode,
};
use polyrecon::{fixtures, shapes, FaceLattice, VertexSet};

fn bundled() -> Vec<(String, FaceLattice)> {
    let mut all: Vec<(String, FaceLattice)> = shapes::all()
        .into_iter()
        .map(|(id, l)| (id.to_string(), l))
        .collect();
    all.extend(fixtures::catalog().into_iter().map(|e| (e.id, e.lattice)));
    all
}

fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort_by_key(|s| s.to_vec());
    v
}

#[test]
fn euler_relation() {
    for (id, l) in bundled() {
        let d = l.dimension();
        let f = l.f_vector();
        let alternating: i64 = (0..d).map(|i| if i % 2 == 0 { f[i] as i64 } else { -(f[i] as i64) }).sum();
        let expected = if d % 2 == 0 { 0 } else { 2 };
        assert_eq!(alternating, expected, "{id}");
    }
}

#[test]
fn degrees_at_least_dimension() {
    for (id, l) in bundled() {
        let d = l.dimension();
        assert!(l.graph().degrees().iter().all(|&deg| deg >= d), "{id}");
    }
}

#[test]
fn catalog_fixture_shapes() {
    let p3 = fixtures::by_id("P3").unwrap().lattice;
    assert_eq!((p3.vertex_count(), p3.facets().len(), p3.dimension()), (8, 7, 4));
    assert_eq!(p3.two_faces_containing(4).len(), 9);
    let p8 = fixtures::by_id("P8").unwrap().lattice;
    assert_eq!(p8.non_simple_vertices(), vec![0, 1]);
    assert_eq!(fixtures::by_id("P12").unwrap().lattice.nearly_simple_index(), 0);
    assert_eq!(fixtures::by_id("P11").unwrap().lattice.dimension(), 5);
}

#[test]
fn new_facet_is_simple_after_cutting_a_vertex_with_simple_neighbors() {
    for (id, l) in bundled() {
        let d = l.dimension();
        for x in 0..l.vertex_count() {
            if !l.graph().neighbors(x).iter().all(|w| l.is_simple_at(w)) {
                continue;
            }
            let (cut, record) = l.truncate(VertexSet::singleton(x)).unwrap();
            for v in record.new_facet_vertices() {
                assert_eq!(cut.graph().degree(v), d, "{id} cut at {x}");
            }
        }
    }
}

#[test]
fn two_face_candidates_are_the_true_two_faces() {
    for (id, l) in bundled() {
        let g = l.graph();
        match l.non_simple_vertices()[..] {
            [x] => {
                let found = two_face_candidates(g, VertexSet::singleton(x), VertexSet::EMPTY, CandidateMode::GlobalMin).unwrap();
                assert_eq!(found, sorted(l.two_faces_containing(x)), "{id}");
            }
            [x, y] => {
                let (sx, sy) = (VertexSet::singleton(x), VertexSet::singleton(y));
                let only = |a: usize, b: usize| {
                    sorted(l.two_faces_containing(a).into_iter().filter(|f| !f.contains(b)).collect())
                };
                assert_eq!(two_face_candidates(g, sx, sy, CandidateMode::SinkMin(y)).unwrap(), only(x, y), "{id}");
                assert_eq!(two_face_candidates(g, sy, sx, CandidateMode::SinkMin(x)).unwrap(), only(y, x), "{id}");
                if g.has_edge(x, y) {
                    let both = sorted(l.two_faces_containing(x).into_iter().filter(|f| f.contains(y)).collect());
                    assert_eq!(
                        two_face_candidates(g, sx.union(sy), VertexSet::EMPTY, CandidateMode::GlobalMin).unwrap(),
                        both,
                        "{id}"
                    );
                }
            }
            _ => {}
        }
    }
}

#[test]
fn one_nearly_simple_truncations_are_regular() {
    for (id, l) in bundled() {
        let [x] = l.non_simple_vertices()[..] else { continue };
        let faces = l.two_faces_containing(x);
        let (g, _) = truncated_graph_at_vertex(l.graph(), x, &faces).unwrap();
        assert!(g.is_k_regular_connected(l.dimension()), "{id}");
    }
}

#[test]
fn nearly_simple_fixtures_reconstruct() {
    for (id, l) in bundled() {
        let d = l.dimension();
        let got = match l.nearly_simple_index() {
            1 => reconstruct_1_nearly_simple(l.graph(), d).unwrap(),
            2 => reconstruct_2_nearly_simple(l.graph(), d).unwrap(),
            _ => continue,
        };
        assert_eq!(got, l, "{id}");
        assert_eq!(got.graph(), l.graph(), "{id}");
    }
}

#[test]
fn p8_round_trip_through_its_cut() {
    let p8 = fixtures::by_id("P8").unwrap().lattice;
    let edge = VertexSet::singleton(0).with(1);
    assert!(p8.contains_face(edge));
    let (cut, record) = p8.truncate(edge).unwrap();
    assert_eq!(cut.nearly_simple_index(), 0);
    let back = cut.untruncate(&record, &p8.interval_below(edge)).unwrap();
    assert_eq!(back, p8);
}
