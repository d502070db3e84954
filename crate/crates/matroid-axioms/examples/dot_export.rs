//! Hasse diagrams as Graphviz DOT.
//!
//! Three exporters: the union lattice of a circuit family, a flat family
//! under inclusion, and an abstract finite lattice. Pipe any of them into
//! `dot -Tsvg` to render.
//!
//! Run with: cargo run --example dot_export

use matroid_axioms::io::{finite_lattice_dot, flat_family_dot, union_lattice_dot};
use matroid_axioms::{
    flats_from_circuits, uniform, FiniteLattice, UnionLattice, DEFAULT_UNION_CAP,
};

fn main() {
    let u23 = uniform(2, 3).expect("in range");

    let lat = UnionLattice::build(&u23, DEFAULT_UNION_CAP).expect("small");
    println!("// union lattice of U_2,3");
    println!("{}", union_lattice_dot(&lat));

    let flats = flats_from_circuits(&u23).expect("is a matroid");
    println!("// flats of U_2,3 under inclusion");
    println!("{}", flat_family_dot(&flats));

    println!("// the pentagon N5");
    println!("{}", finite_lattice_dot(&FiniteLattice::pentagon()));
}
