use proptest::prelude::*;
use proptest::sample::subsequence;

use polyrecon::census::{census_report, verify_counterexample, CatalogEntry};
use polyrecon::orientations::{enumerate_acyclic, linear_functional_orientation_int, min_f_o, Orientation};
use polyrecon::reconstruct::reconstruct;
use polyrecon::{fixtures, shapes, FaceLattice, Graph};

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn graph_strategy(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let pairs = all_pairs(n);
            let top = pairs.len().min(max_m);
            (Just(n), subsequence(pairs, 0..=top))
        })
        .prop_map(|(n, edges)| Graph::new(n, edges).unwrap())
}

fn with_permutation(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.vertex_count();
    (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
}

fn simple_shapes() -> Vec<FaceLattice> {
    vec![
        shapes::tetrahedron(),
        shapes::cube(),
        shapes::triangular_prism(),
        shapes::pentagonal_prism(),
        shapes::square_pyramid(),
        shapes::pentagonal_pyramid(),
    ]
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_strategy(10, 20).prop_flat_map(with_permutation)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
    }

    #[test]
    fn graph_files_round_trip(g in graph_strategy(12, 30)) {
        let text = g.to_json();
        let back = Graph::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn full_induced_subgraph_keeps_regularity(g in graph_strategy(8, 16), k in 0usize..4) {
        let full = g.induced_subgraph(g.vertices()).unwrap();
        prop_assert_eq!(&full.graph, &g);
        prop_assert_eq!(full.graph.is_k_regular_connected(k), g.is_k_regular_connected(k));
    }

    #[test]
    fn acyclic_enumeration_matches_brute_force(g in graph_strategy(6, 9)) {
        let m = g.edge_count();
        let brute: Vec<u64> = (0..1u64 << m)
            .filter(|&bits| Orientation::from_bits(&g, bits).is_ok())
            .collect();
        let mut listed: Vec<u64> = enumerate_acyclic(&g).unwrap().map(|o| o.bits()).collect();
        listed.sort_unstable();
        prop_assert_eq!(&listed, &brute);
        if m > 0 {
            let best = brute
                .iter()
                .map(|&b| Orientation::from_bits(&g, b).unwrap().f_o())
                .min()
                .unwrap();
            let min = min_f_o(&g).unwrap();
            prop_assert_eq!(min.value, best);
            let attaining = brute
                .iter()
                .filter(|&&b| Orientation::from_bits(&g, b).unwrap().f_o() == best)
                .count();
            prop_assert_eq!(min.witnesses.len(), attaining);
        }
    }

    #[test]
    fn linear_functionals_give_acyclic_orientations(
        w in proptest::collection::vec(-20i64..20, 3),
        flips in proptest::collection::vec(any::<bool>(), 3),
    ) {
        let cube = shapes::cube();
        // Vertex i at (x, y, z) for bits of i along prism(4)'s labeling.
        let square = [(0, 0), (1, 0), (1, 1), (0, 1)];
        let coords: Vec<Vec<i64>> = (0..8)
            .map(|v| {
                let (x, y) = square[v % 4];
                let p = [x, y, (v / 4) as i64];
                p.iter().zip(&flips).map(|(&c, &f)| if f { 1 - c } else { c }).collect()
            })
            .collect();
        match linear_functional_orientation_int(cube.graph(), &coords, &w) {
            Ok(o) => {
                prop_assert!(o.topological_order().is_some());
                let neg: Vec<i64> = w.iter().map(|x| -x).collect();
                let r = linear_functional_orientation_int(cube.graph(), &coords, &neg).unwrap();
                prop_assert_eq!(r.bits(), o.reversed().bits());
            }
            Err(polyrecon::Error::Degenerate(..)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn lattice_isomorphism_ignores_labels(i in 0usize..6, seed in any::<u64>()) {
        let l = &simple_shapes()[i];
        let n = l.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let r = l.relabel(&perm).unwrap();
        prop_assert!(l.is_isomorphic(&r).unwrap());
        prop_assert_eq!(l.incidence_certificate().unwrap(), r.incidence_certificate().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reconstruction_commutes_with_relabeling(i in 0usize..6, perm in permutation(12)) {
        let l = &simple_shapes()[i];
        let n = l.vertex_count();
        // Restrict the permutation of 0..12 to 0..n, keeping relative order.
        let mut order: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        order.truncate(n);
        let r = l.relabel(&order).unwrap();
        let back = reconstruct(r.graph(), Some(3)).unwrap();
        prop_assert_eq!(&back.lattice, &r);
        prop_assert_eq!(back.lattice.graph(), r.graph());
    }

    #[test]
    fn census_ignores_order_and_labels(
        order in Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
        which in 0usize..10,
        perm in permutation(8),
    ) {
        let entries = fixtures::catalog();
        let baseline = census_report(&entries, None);
        let mut shuffled: Vec<CatalogEntry> = order.iter().map(|&i| entries[i].clone()).collect();
        let target = &entries[which];
        let n = target.labels.len();
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let pos = shuffled.iter().position(|e| e.id == target.id).unwrap();
        shuffled[pos] = target.relabel(&p).unwrap();
        let report = census_report(&shuffled, None);
        let members = |r: &polyrecon::census::CensusReport| -> Vec<Vec<String>> {
            r.groups.iter().map(|g| g.members.iter().map(|m| m.id.clone()).collect()).collect()
        };
        prop_assert_eq!(members(&report), members(&baseline));
    }

    #[test]
    fn counterexample_check_is_symmetric(a in 0usize..10, b in 0usize..10) {
        let entries = fixtures::catalog();
        prop_assert_eq!(
            verify_counterexample(&entries[a], &entries[b]).unwrap(),
            verify_counterexample(&entries[b], &entries[a]).unwrap()
        );
    }
}
