//! Shared fixtures for the criterion benches: mid-size structures that are
//! large enough to measure and small enough to build in setup code.

use ordual::{DLattice, Poset, RelSpace};

/// Upset lattice of the 6-element hexagon poset — 14 elements.
pub fn hexagon_lattice() -> DLattice {
    let hexagon = Poset::from_pairs(6, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
        .expect("hexagon is a poset");
    ordual::round_trip_poset(&hexagon).expect("hexagon dualizes").upsets.lattice
}

/// A 5-world preorder with two nontrivial clusters, already transitive.
pub fn cluster_space() -> RelSpace {
    RelSpace::new(
        5,
        &[
            (0, 1),
            (1, 0),
            (0, 2),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 3),
            (0, 3),
            (0, 4),
            (1, 3),
            (1, 4),
        ],
    )
    .expect("worlds in range")
    .reflexive_closure()
}
