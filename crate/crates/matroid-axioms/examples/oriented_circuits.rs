//! Signed circuits and oriented elimination.
//!
//! An oriented matroid records, for each circuit, which side of the circuit
//! each element lies on. Signed elimination: whenever two signed circuits
//! X ≠ ±Y carry some element e with opposite signs, a third circuit Z must
//! avoid e, stay inside the signs of X and Y, and hit every element where X
//! and Y differ in support. The classical axiom quantifies over all such
//! pairs; `check_signed_modular` only over pairs whose supports form a
//! modular pair in the support union lattice. They agree.
//!
//! Run with: cargo run --example oriented_circuits

use matroid_axioms::{
    check_signed_classic, check_signed_modular, sign_flip_mutants, support_family,
    check_circuits_modular, graphic_signed, vector_signed, GraphSpec, IntMatrix,
};

fn main() {
    // Orientations of K4's cycles: traverse each cycle, sign edges by
    // direction of travel.
    let k4 = graphic_signed(&GraphSpec::complete(4).expect("small"));
    println!(
        "K4 signed cycles: {} signed circuits over {} edges",
        k4.len(),
        k4.ground().size()
    );
    assert!(check_signed_modular(&k4).accepted());
    assert!(check_signed_classic(&k4).accepted());
    println!("modular and classic validators both accept");

    // The unsigned shadow is the cycle matroid again.
    let shadow = support_family(&k4);
    assert!(check_circuits_modular(&shadow).accepted());
    println!("support family has {} circuits and is a matroid\n", shadow.len());

    // A realization by an integer matrix: signs of elementary kernel
    // vectors, computed with exact arithmetic.
    let m = IntMatrix::from_rows(&[
        vec![1, 0, 0, 1, 1, 0],
        vec![0, 1, 0, 1, 0, 1],
        vec![0, 0, 1, 0, 1, 1],
    ])
    .expect("well-shaped");
    let vec_om = vector_signed(&m).expect("in range");
    println!("3×6 matrix: {} signed circuits", vec_om.len());
    assert!(check_signed_modular(&vec_om).accepted());
    assert!(check_signed_classic(&vec_om).accepted());
    println!("realizable orientations are accepted\n");

    // Mutants: flip the sign of single (element, circuit) incidences. Some
    // flips reorient an element globally (still an oriented matroid); the
    // rest break elimination. The two validators never disagree.
    let mutants = sign_flip_mutants(&vec_om);
    let mut rejected = 0;
    for mutant in &mutants {
        let modular = check_signed_modular(&mutant);
        let classic = check_signed_classic(&mutant);
        assert_eq!(modular.accepted(), classic.accepted(), "validators agree on mutants");
        if !modular.accepted() {
            rejected += 1;
        }
    }
    println!("sign-flip mutants: {} of {} rejected by both validators", rejected, mutants.len());
    if let Some(w) = mutants
        .iter()
        .find_map(|m| check_signed_modular(m).witness().cloned())
    {
        println!("sample witness: {w}");
    }
}
