//! Circuits, flats, and the lattice duality between them.
//!
//! For a matroid given by circuits C:
//!   * the union lattice U(C), ordered by inclusion, and
//!   * the lattice of flats of the *dual* matroid
//! are anti-isomorphic via complementation: Z ↦ E ∖ Z.
//!
//! Going the other way, a flat family F yields circuits by taking minimal
//! nonempty intersections of coatom complements; the union lattice of those
//! circuits is F turned upside down.
//!
//! Run with: cargo run --example cryptomorphism

use matroid_axioms::{
    coatom_complement_circuits, dual_circuits, flats_from_circuits, uniform, UnionLattice,
    DEFAULT_UNION_CAP,
};

fn main() {
    let u24 = uniform(2, 4).expect("in range");
    let n = u24.ground().size();

    // U(C) for U_{2,4}: unions of the four 3-element circuits.
    let lat = UnionLattice::build(&u24, DEFAULT_UNION_CAP).expect("small");
    println!("U(C) of U_2,4 has {} members", lat.len());

    // Flats of the dual matroid (U_{2,4} is self-dual).
    let dual = dual_circuits(&u24).expect("is a matroid");
    let dual_flats = flats_from_circuits(&dual).expect("is a matroid");
    println!("dual matroid has {} flats", dual_flats.len());

    // Complementation carries one onto the other, reversing inclusion.
    assert_eq!(lat.len(), dual_flats.len());
    for &z in lat.members() {
        assert!(
            dual_flats.contains(z.complement_in(n)),
            "complement of a union of circuits is a flat of the dual"
        );
    }
    println!("Z ↦ E∖Z maps U(C) onto the dual's flats (inclusion reversed)\n");

    // Round trip from the flats side: recover circuits as minimal nonempty
    // intersections of coatom complements, then climb back up.
    let flats = flats_from_circuits(&u24).expect("is a matroid");
    let recovered = coatom_complement_circuits(&flats);
    println!(
        "recovered {} circuits from {} flats via coatom complements",
        recovered.len(),
        flats.len()
    );
    assert_eq!(recovered.members(), u24.members(), "round trip returns the same circuits");

    let back = UnionLattice::build(&recovered, DEFAULT_UNION_CAP).expect("small");
    for &z in back.members() {
        assert!(flats.contains(z.complement_in(n)));
    }
    println!("U(recovered circuits) is the flat family upside down");
}
