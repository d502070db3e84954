//! Validators, enumerators and generators for matroid circuit, flat and
//! signed-circuit axioms.
//!
//! The classical axiom systems quantify over every pair (circuit
//! elimination), every member (flat separation) or every signed pair
//! (signed elimination). This crate implements both those oracles and the
//! restricted validators that only quantify over modular pairs — circuit
//! pairs whose union sits at height 2 in the union lattice, flats whose
//! up-set has chain length 2, signed pairs whose supports are modular — plus
//! the machinery to verify exhaustively that restricted and full validators
//! agree: exact small-instance enumeration, canonical matroid constructors,
//! vector and graphic realizations with exact integer arithmetic, and
//! lattice utilities including a geometric-lattice recognizer.

pub mod circuits;
pub mod experiment;
pub mod family;
pub mod flats;
pub mod generators;
pub mod ground;
pub mod io;
pub mod lattice;
pub mod matrix;
pub mod oriented;
pub mod signed;
pub mod verdict;

pub use circuits::{
    check_circuits_full, check_circuits_modular, dual_circuits, eliminates, rank, rank_checked,
    CircuitsError, MAX_ORACLE_GROUND,
};
pub use experiment::{
    circuit_corpus, random_matrices, run_experiment, sign_flip_mutants, signed_corpus,
    ExperimentKind, ExperimentOptions, ExperimentReport,
};
pub use family::{is_antichain, CircuitFamily, FamilyError};
pub use flats::{
    check_flats_full, check_flats_restricted, check_geometric_lattice,
    coatom_complement_circuits, closure, closure_step, flats_from_circuits, geometric_diagnostic,
    separation_ground, FlatFamily, FlatsError, GeometricDiagnostic,
};
pub use generators::{
    enumerate_antichains, enumerate_antichains_sharded, enumerate_moore_families,
    enumerate_moore_families_sharded, fano, graphic_circuits, graphic_signed, incidence_matrix,
    uniform, vector_circuits, vector_signed, GenError, GraphSpec,
};
pub use ground::{GroundError, GroundSet, SubsetMask, MAX_GROUND};
pub use lattice::{
    is_modular_pair, separation_atoms, separation_atoms_defect, FiniteLattice, LatticeError,
    UnionLattice, DEFAULT_UNION_CAP, MAX_LATTICE,
};
pub use matrix::{IntMatrix, MatrixError};
pub use oriented::{check_signed_classic, check_signed_modular, oe_property, support_family};
pub use signed::{check_simple_z2, SignedError, SignedFamily, SignedVector};
pub use verdict::{AtomDefect, SeparationDefect, Verdict, Witness};
