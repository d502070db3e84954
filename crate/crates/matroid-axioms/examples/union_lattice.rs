//! The union lattice of a circuit family.
//!
//! U(C) collects arbitrary unions of circuits (including the empty union)
//! ordered by inclusion. Chain length in U(C) measures how many circuits a
//! union genuinely stacks; a pair of circuits is *modular* when their union
//! has length exactly 2. For a matroid, length obeys the corank law
//! ℓ(Z) = |Z| − rank(Z).
//!
//! Run with: cargo run --example union_lattice

use matroid_axioms::{graphic_circuits, rank, GraphSpec, UnionLattice, DEFAULT_UNION_CAP};

fn main() {
    // The cycle matroid of K4: triangles and quadrilaterals of the
    // complete graph on four vertices.
    let k4 = graphic_circuits(&GraphSpec::complete(4).expect("small"));
    let lat = UnionLattice::build(&k4, DEFAULT_UNION_CAP).expect("small lattice");

    println!("K4 cycle matroid: {} circuits, {} members in U(C)", k4.len(), lat.len());
    println!("atoms (the circuits themselves): {}", lat.atoms().len());

    // Every member's chain length, grouped.
    let mut by_length = std::collections::BTreeMap::<usize, usize>::new();
    for &m in lat.members() {
        *by_length.entry(lat.length_of(m).expect("member")).or_default() += 1;
    }
    for (len, count) in &by_length {
        println!("  length {len}: {count} member(s)");
    }

    // The corank law: length in U(C) equals cardinality minus matroid rank.
    for &m in lat.members() {
        let len = lat.length_of(m).expect("member");
        assert_eq!(len, m.len() - rank(&k4, m), "corank law at {m}");
    }
    println!("corank law ℓ(Z) = |Z| − rank(Z) holds at every member");

    // Modular pairs: unions at height two. A triangle and a quadrilateral
    // sharing three edges are modular; two disjoint triangles are not.
    let members = k4.members();
    let mut modular = 0;
    let mut pairs = 0;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            pairs += 1;
            if lat.modular_pair(members[i], members[j]).expect("members") {
                modular += 1;
            }
        }
    }
    println!("modular circuit pairs: {modular} of {pairs}");

    // The cap guards against exponential blowups; a tiny cap trips early.
    let err = UnionLattice::build(&k4, 4).unwrap_err();
    println!("with cap 4 construction stops: {err}");
}
