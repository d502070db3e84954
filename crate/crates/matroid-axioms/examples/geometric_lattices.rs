//! Recognizing geometric lattices by atom separation.
//!
//! A finite lattice is geometric (the lattice of flats of some matroid)
//! when it is atomic and semimodular. The validator `check_geometric_lattice`
//! tests a local condition instead: at every element x whose up-set has
//! chain length 2, the atoms outside x must be partitioned by the covers
//! of x. The diagnostic below runs that shortcut next to the ground truth
//! (atomicity plus the all-members flat check on atom-sets) and reports
//! whether they agree — they usually do, but not always.
//!
//! Run with: cargo run --example geometric_lattices

use matroid_axioms::{check_geometric_lattice, geometric_diagnostic, FiniteLattice};

fn report(name: &str, lat: &FiniteLattice) {
    let diag = geometric_diagnostic(lat).expect("few atoms");
    let direct = if diag.direct.accepted() { "accepted" } else { "rejected" };
    println!(
        "{name}: direct {}, atomic {}, via flats {}, routes agree: {}",
        direct,
        diag.atomic,
        if diag.via_flats_accepted() { "accepted" } else { "rejected" },
        diag.routes_agree()
    );
}

fn main() {
    // M3, the diamond with three atoms: flats of U_{2,3}. Geometric.
    let m3 = FiniteLattice::diamond(3);
    assert!(check_geometric_lattice(&m3).accepted());
    report("M3 (diamond)", &m3);

    // Boolean lattices: flats of free matroids. Geometric.
    let b3 = FiniteLattice::boolean(3);
    assert!(check_geometric_lattice(&b3).accepted());
    report("B3 (cube)", &b3);

    // N5, the pentagon: not semimodular, and the atom check at its long
    // side catches it.
    let n5 = FiniteLattice::pentagon();
    let v = check_geometric_lattice(&n5);
    println!("N5 (pentagon): {}", v.witness().map(|w| w.to_string()).unwrap_or_default());
    assert!(!v.accepted());
    report("N5 (pentagon)", &n5);

    // Two elements with two common covers: joins are not unique, so this
    // is rejected before any axiom runs.
    let err = FiniteLattice::from_covers(
        6,
        &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
    )
    .unwrap_err();
    println!("double-cover poset: rejected at construction — {err}\n");

    // The shortcut's blind spots. A 3-element chain has no up-length-2
    // element at all, so the direct check accepts vacuously; but the chain
    // is not atomic, hence not geometric.
    let chain = FiniteLattice::from_covers(3, &[(0, 1), (1, 2)]).expect("a chain");
    report("3-chain", &chain);

    // An atomic example: 12 subsets of a 4-set, graded, every up-length-2
    // element clean, yet join of two atoms jumps two ranks — not
    // semimodular, caught only by the full flat check.
    let skewed = FiniteLattice::from_covers(
        12,
        &[
            (0, 1), (0, 2), (0, 3), (0, 4), // atoms 1..4: {0},{1},{2},{3}
            (1, 5), (1, 6), (1, 7), // {0} under {01},{02},{03}
            (2, 5), (3, 6), (4, 7), // {1},{2},{3} under their pair
            (5, 8), (5, 9), (6, 8), (6, 10), (7, 9), (7, 10), // pairs under triples
            (8, 11), (9, 11), (10, 11), // triples under E
        ],
    )
    .expect("a lattice");
    report("12-element atomic lattice", &skewed);
    let diag = geometric_diagnostic(&skewed).expect("few atoms");
    assert!(diag.direct.accepted() && !diag.via_flats_accepted());
    println!("  → the local atom check is strictly weaker than the global one");
}
