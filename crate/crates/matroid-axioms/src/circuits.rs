//! Circuit-axiom validators and the rank machinery built on them.
//!
//! The elimination property for a pair (C1, C2): for every `e` in C1 ∩ C2
//! some member of the family lies inside (C1 ∪ C2) \ {e}. The *full*
//! validator demands this for every pair of distinct members — the textbook
//! circuit axioms and the oracle here. The *modular* validator demands it
//! only for modular pairs of the union lattice; the point of this crate is
//! that the two accept exactly the same families, and the verification
//! suites check that equivalence exhaustively.

use thiserror::Error;

use crate::family::CircuitFamily;
use crate::ground::SubsetMask;
use crate::lattice::modular_pair_fast;
use crate::verdict::{Verdict, Witness};

/// Advisory bound for the exponential rank/dual/flats oracles.
pub const MAX_ORACLE_GROUND: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CircuitsError {
    #[error("circuit is not a member of the family")]
    NotAMember,
    #[error("element {element} is not in both circuits")]
    PreconditionViolation { element: usize },
    #[error("family is not a matroid: {witness}")]
    NotAMatroid { witness: Witness },
    #[error("ground set of size {size} exceeds the oracle bound {limit}")]
    GroundTooLarge { size: usize, limit: usize },
}

/// Search for a member inside (c1 ∪ c2) \ {e}, returning the first one in
/// canonical order. `c1` and `c2` must be members and `e` common to both.
pub fn eliminates(
    family: &CircuitFamily,
    c1: SubsetMask,
    c2: SubsetMask,
    e: usize,
) -> Result<Option<SubsetMask>, CircuitsError> {
    if !family.contains(c1) || !family.contains(c2) {
        return Err(CircuitsError::NotAMember);
    }
    if !c1.intersect(c2).contains(e) {
        return Err(CircuitsError::PreconditionViolation { element: e });
    }
    let region = c1.union(c2).remove(e);
    Ok(family.members().iter().copied().find(|c| c.is_subset_of(region)))
}

/// The textbook circuit axioms: elimination for every pair of distinct
/// members and every common element. This is the oracle the restricted
/// validator is measured against.
pub fn check_circuits_full(family: &CircuitFamily) -> Verdict {
    match first_elimination_failure(family.members(), false) {
        None => Verdict::Accepted,
        Some(w) => Verdict::Rejected(w),
    }
}

/// Elimination demanded only where (C1, C2) is a modular pair of the union
/// lattice, decided by the direct pairwise test.
pub fn check_circuits_modular(family: &CircuitFamily) -> Verdict {
    match first_elimination_failure(family.members(), true) {
        None => Verdict::Accepted,
        Some(w) => Verdict::Rejected(w),
    }
}

pub(crate) fn circuits_full_accepted(members: &[SubsetMask]) -> bool {
    elimination_holds(members, false)
}

pub(crate) fn circuits_modular_accepted(members: &[SubsetMask]) -> bool {
    elimination_holds(members, true)
}

fn elimination_holds(members: &[SubsetMask], modular_only: bool) -> bool {
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            if modular_only && !modular_pair_fast(members, c1, c2) {
                continue;
            }
            let both = c1.intersect(c2);
            let union = c1.union(c2);
            for e in both.elements() {
                let region = union.remove(e);
                if !members.iter().any(|c| c.is_subset_of(region)) {
                    return false;
                }
            }
        }
    }
    true
}

/// First failure in canonical scan order: earliest pair (by member order),
/// then smallest element.
fn first_elimination_failure(members: &[SubsetMask], modular_only: bool) -> Option<Witness> {
    for (i, &c1) in members.iter().enumerate() {
        for &c2 in &members[i + 1..] {
            if modular_only && !modular_pair_fast(members, c1, c2) {
                continue;
            }
            let both = c1.intersect(c2);
            let union = c1.union(c2);
            for e in both.elements() {
                let region = union.remove(e);
                if !members.iter().any(|c| c.is_subset_of(region)) {
                    return Some(Witness::Elimination { c1, c2, element: e, region });
                }
            }
        }
    }
    None
}

/// Rank of `s`: the size of a largest subset of `s` containing no member.
/// Brute-force enumeration of all subsets of `s` — an oracle, exponential in
/// `|s|` by design. Assumes the family already passed the full validator.
pub fn rank(family: &CircuitFamily, s: SubsetMask) -> usize {
    let members = family.members();
    let mut best = 0usize;
    let mut t = s.bits();
    loop {
        let candidate = SubsetMask::from_bits(t);
        if candidate.len() > best
            && !members.iter().any(|c| c.is_subset_of(candidate))
        {
            best = candidate.len();
            if best == s.len() {
                break;
            }
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & s.bits();
    }
    best
}

/// [`rank`] with the matroid precondition actually verified first.
pub fn rank_checked(family: &CircuitFamily, s: SubsetMask) -> Result<usize, CircuitsError> {
    guard_ground(family)?;
    require_matroid(family)?;
    Ok(rank(family, s))
}

/// Circuits of the dual: minimal nonempty sets whose removal drops the rank
/// of the ground set.
pub fn dual_circuits(family: &CircuitFamily) -> Result<CircuitFamily, CircuitsError> {
    guard_ground(family)?;
    require_matroid(family)?;
    let n = family.ground().size();
    let full_rank = rank(family, SubsetMask::full(n));

    let mut candidates: Vec<SubsetMask> =
        (1..(1u128 << n)).map(|b| SubsetMask::from_bits(b as u64)).collect();
    candidates.sort_by(|a, b| a.canonical_cmp(*b));

    let mut found: Vec<SubsetMask> = Vec::new();
    for d in candidates {
        if found.iter().any(|c| c.is_subset_of(d)) {
            continue; // not minimal
        }
        if rank(family, d.complement_in(n)) < full_rank {
            found.push(d);
        }
    }
    Ok(CircuitFamily::from_canonical_unchecked(family.ground().clone(), found))
}

pub(crate) fn guard_ground(family: &CircuitFamily) -> Result<(), CircuitsError> {
    let size = family.ground().size();
    if size > MAX_ORACLE_GROUND {
        return Err(CircuitsError::GroundTooLarge { size, limit: MAX_ORACLE_GROUND });
    }
    Ok(())
}

pub(crate) fn require_matroid(family: &CircuitFamily) -> Result<(), CircuitsError> {
    match check_circuits_full(family) {
        Verdict::Accepted => Ok(()),
        Verdict::Rejected(witness) => Err(CircuitsError::NotAMatroid { witness }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;

    fn family(n: usize, bits: &[u64]) -> CircuitFamily {
        let g = GroundSet::new(n).unwrap();
        CircuitFamily::new(g, bits.iter().map(|&b| SubsetMask::from_bits(b)).collect()).unwrap()
    }

    fn uniform24() -> CircuitFamily {
        family(4, &[0b0111, 0b1011, 0b1101, 0b1110])
    }

    #[test]
    fn eliminates_finds_first_candidate() {
        let fam = uniform24();
        let abc = SubsetMask::from_bits(0b0111);
        let abd = SubsetMask::from_bits(0b1011);
        // (abc ∪ abd) \ {a} = {b,c,d}, and {b,c,d} is itself a member.
        assert_eq!(
            eliminates(&fam, abc, abd, 0),
            Ok(Some(SubsetMask::from_bits(0b1110)))
        );
        assert_eq!(
            eliminates(&fam, abc, abd, 2),
            Err(CircuitsError::PreconditionViolation { element: 2 })
        );
        assert_eq!(
            eliminates(&fam, SubsetMask::from_bits(0b0011), abd, 0),
            Err(CircuitsError::NotAMember)
        );
    }

    #[test]
    fn eliminates_returns_none_when_no_candidate_exists() {
        let fam = family(3, &[0b011, 0b110]);
        let r = eliminates(&fam, SubsetMask::from_bits(0b011), SubsetMask::from_bits(0b110), 1);
        assert_eq!(r, Ok(None));
    }

    #[test]
    fn full_validator_accepts_uniform_and_rejects_mutants() {
        assert!(check_circuits_full(&uniform24()).accepted());

        // Dropping any one circuit of U(2,4) breaks elimination.
        let all = [0b0111u64, 0b1011, 0b1101, 0b1110];
        for skip in 0..4 {
            let rest: Vec<u64> =
                all.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &b)| b).collect();
            let fam = family(4, &rest);
            let verdict = check_circuits_full(&fam);
            assert!(!verdict.accepted(), "family without {skip} wrongly accepted");
            // The witness re-falsifies: no member inside the reported region.
            match verdict.witness().unwrap() {
                Witness::Elimination { c1, c2, element, region } => {
                    assert!(c1.intersect(*c2).contains(*element));
                    assert_eq!(*region, c1.union(*c2).remove(*element));
                    assert!(!fam.members().iter().any(|c| c.is_subset_of(*region)));
                }
                w => panic!("unexpected witness {w:?}"),
            }
        }
    }

    #[test]
    fn modular_validator_agrees_on_the_path_family() {
        // {ab, bc}: the only pair is modular, elimination at b fails.
        let fam = family(3, &[0b011, 0b110]);
        let full = check_circuits_full(&fam);
        let modular = check_circuits_modular(&fam);
        assert!(!full.accepted());
        assert!(!modular.accepted());
        assert_eq!(
            modular.witness(),
            Some(&Witness::Elimination {
                c1: SubsetMask::from_bits(0b011),
                c2: SubsetMask::from_bits(0b110),
                element: 1,
                region: SubsetMask::from_bits(0b101),
            })
        );
    }

    #[test]
    fn single_member_and_empty_families_are_matroids() {
        assert!(check_circuits_full(&family(3, &[0b111])).accepted());
        assert!(check_circuits_modular(&family(3, &[0b111])).accepted());
        assert!(check_circuits_full(&family(3, &[])).accepted());
        assert!(check_circuits_modular(&family(3, &[])).accepted());
    }

    #[test]
    fn rank_of_uniform_matches_formula() {
        let fam = uniform24();
        // U(2,4): rank of S is min(|S|, 2).
        for bits in 0u64..16 {
            let s = SubsetMask::from_bits(bits);
            assert_eq!(rank(&fam, s), s.len().min(2), "rank wrong at {s}");
        }
        assert_eq!(rank_checked(&fam, SubsetMask::from_bits(0b0111)), Ok(2));
    }

    #[test]
    fn rank_checked_rejects_non_matroids() {
        let fam = family(3, &[0b011, 0b110]);
        assert!(matches!(
            rank_checked(&fam, SubsetMask::full(3)),
            Err(CircuitsError::NotAMatroid { .. })
        ));
    }

    #[test]
    fn rank_treats_loops_and_free_sets() {
        // Single loop {a} on three elements: rank E = 2.
        let fam = family(3, &[0b001]);
        assert_eq!(rank(&fam, SubsetMask::full(3)), 2);
        assert_eq!(rank(&fam, SubsetMask::from_bits(0b001)), 0);
        // Free matroid: rank is cardinality.
        let free = family(3, &[]);
        assert_eq!(rank(&free, SubsetMask::full(3)), 3);
    }

    #[test]
    fn dual_of_uniform24_is_itself() {
        let fam = uniform24();
        assert_eq!(dual_circuits(&fam).unwrap(), fam);
    }

    #[test]
    fn dual_small_cases() {
        // U(1,2): the two-element circuit is self-dual.
        let u12 = family(2, &[0b11]);
        assert_eq!(dual_circuits(&u12).unwrap(), u12);
        // Free matroid: dual circuits are the singletons.
        let free = family(3, &[]);
        assert_eq!(dual_circuits(&free).unwrap(), family(3, &[0b001, 0b010, 0b100]));
        // All-loops matroid: dual is free.
        let loops = family(2, &[0b01, 0b10]);
        assert_eq!(dual_circuits(&loops).unwrap(), family(2, &[]));
    }

    #[test]
    fn dual_is_an_involution_on_small_matroids() {
        for fam in [uniform24(), family(3, &[0b111]), family(4, &[0b0011, 0b1100])] {
            let dd = dual_circuits(&dual_circuits(&fam).unwrap()).unwrap();
            assert_eq!(dd, fam);
        }
    }

    #[test]
    fn oracle_bound_is_enforced() {
        let g = GroundSet::new(21).unwrap();
        let fam = CircuitFamily::new(g, vec![]).unwrap();
        assert_eq!(
            dual_circuits(&fam).unwrap_err(),
            CircuitsError::GroundTooLarge { size: 21, limit: 20 }
        );
    }
}
