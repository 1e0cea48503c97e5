//! Small named polytopes used as fixtures and demos.

use crate::face_lattice::FaceLattice;

fn build(n: usize, facets: Vec<Vec<usize>>) -> FaceLattice {
    FaceLattice::from_facets(n, &facets).expect("built-in polytope is valid")
}

/// Prism over a `k`-gon: bottom `0..k`, top `k..2k` with `k + i` above `i`.
pub fn prism(k: usize) -> FaceLattice {
    assert!(k >= 3);
    let mut facets = vec![(0..k).collect::<Vec<_>>(), (k..2 * k).collect()];
    for i in 0..k {
        let j = (i + 1) % k;
        facets.push(vec![i, j, k + j, k + i]);
    }
    build(2 * k, facets)
}

/// Pyramid over a `k`-gon: base `0..k`, apex `k`.
pub fn pyramid(k: usize) -> FaceLattice {
    assert!(k >= 3);
    let mut facets = vec![(0..k).collect::<Vec<_>>()];
    for i in 0..k {
        facets.push(vec![i, (i + 1) % k, k]);
    }
    build(k + 1, facets)
}

/// The `d`-simplex on `d + 1` vertices.
pub fn simplex(d: usize) -> FaceLattice {
    assert!(d >= 1);
    let facets = (0..=d)
        .map(|skip| (0..=d).filter(|&v| v != skip).collect())
        .collect();
    build(d + 1, facets)
}

pub fn tetrahedron() -> FaceLattice {
    pyramid(3)
}

/// `prism(4)`: vertices `0..4` on the bottom square, `4..8` on top.
pub fn cube() -> FaceLattice {
    prism(4)
}

pub fn triangular_prism() -> FaceLattice {
    prism(3)
}

pub fn pentagonal_prism() -> FaceLattice {
    prism(5)
}

/// Apex is vertex 4.
pub fn square_pyramid() -> FaceLattice {
    pyramid(4)
}

/// Apex is vertex 5.
pub fn pentagonal_pyramid() -> FaceLattice {
    pyramid(5)
}

/// A 3-polytope whose only non-simple vertices, 2 and 3, are adjacent
/// (dual of a triangular prism with a pyramid on one square).
pub fn two_adjacent_quads_dual() -> FaceLattice {
    build(
        8,
        vec![
            vec![7, 4, 3, 0],
            vec![5, 4, 2, 0],
            vec![3, 2, 0],
            vec![7, 6, 3, 1],
            vec![6, 5, 2, 1],
            vec![3, 2, 1],
            vec![7, 6, 5, 4],
        ],
    )
}

/// The tetragonal trapezohedron: non-simple apexes 0 and 1, not adjacent.
pub fn tetragonal_trapezohedron() -> FaceLattice {
    build(
        10,
        vec![
            vec![9, 8, 2, 0],
            vec![4, 3, 2, 0],
            vec![6, 5, 4, 0],
            vec![8, 7, 6, 0],
            vec![9, 3, 2, 1],
            vec![5, 4, 3, 1],
            vec![7, 6, 5, 1],
            vec![9, 8, 7, 1],
        ],
    )
}

/// Every named shape, with a stable id.
pub fn all() -> Vec<(&'static str, FaceLattice)> {
    vec![
        ("tetrahedron", tetrahedron()),
        ("cube", cube()),
        ("triangular-prism", triangular_prism()),
        ("pentagonal-prism", pentagonal_prism()),
        ("square-pyramid", square_pyramid()),
        ("pentagonal-pyramid", pentagonal_pyramid()),
        ("two-adjacent-quads-dual", two_adjacent_quads_dual()),
        ("tetragonal-trapezohedron", tetragonal_trapezohedron()),
    ]
}

pub fn by_name(name: &str) -> Option<FaceLattice> {
    all().into_iter().find(|(n, _)| *n == name).map(|(_, l)| l)
}
