//! Signed subsets and signed families — carriers for oriented-matroid data.
//!
//! A signed vector assigns each ground element one of `-1, 0, +1`, stored as
//! a disjoint (positive, negative) mask pair.

use std::fmt;

use thiserror::Error;

use crate::family::is_antichain;
use crate::ground::{GroundSet, SubsetMask};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignedError {
    #[error("positive and negative parts overlap on {overlap}")]
    OverlappingParts { overlap: SubsetMask },
    #[error("the all-zero vector has empty support and cannot be a circuit")]
    ZeroVector,
    #[error("family is not closed under negation: missing -{0}")]
    NotZ2Closed(SignedVector),
    #[error("family is not simple: {a} and {b} share a support but are not negatives")]
    NotSimple { a: SignedVector, b: SignedVector },
    #[error("supports {a} and {b} are comparable")]
    SupportsComparable { a: SubsetMask, b: SubsetMask },
    #[error("member {member} is not a subset of the ground set")]
    OutsideGround { member: SubsetMask },
    #[error("vector is not a member of the family")]
    NotAMember,
}

/// An element of `{-1, 0, +1}^E` as a pair of disjoint masks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedVector {
    positive: SubsetMask,
    negative: SubsetMask,
}

impl SignedVector {
    pub fn new(positive: SubsetMask, negative: SubsetMask) -> Result<Self, SignedError> {
        let overlap = positive.intersect(negative);
        if !overlap.is_empty() {
            return Err(SignedError::OverlappingParts { overlap });
        }
        Ok(SignedVector { positive, negative })
    }

    pub fn positive(self) -> SubsetMask {
        self.positive
    }

    pub fn negative(self) -> SubsetMask {
        self.negative
    }

    /// The set of elements with nonzero sign.
    pub fn support(self) -> SubsetMask {
        self.positive.union(self.negative)
    }

    pub fn sign(self, e: usize) -> i8 {
        if self.positive.contains(e) {
            1
        } else if self.negative.contains(e) {
            -1
        } else {
            0
        }
    }

    pub fn negated(self) -> Self {
        SignedVector { positive: self.negative, negative: self.positive }
    }

    pub fn is_zero(self) -> bool {
        self.support().is_empty()
    }

    /// Canonical order: support size, support value, then positive part.
    pub fn canonical_cmp(self, other: Self) -> std::cmp::Ordering {
        self.support()
            .canonical_cmp(other.support())
            .then(self.positive.bits().cmp(&other.positive.bits()))
    }
}

impl fmt::Display for SignedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(usize, char)> = self.positive.elements().map(|e| (e, '+')).collect();
        parts.extend(self.negative.elements().map(|e| (e, '-')));
        parts.sort();
        let body: Vec<String> = parts.iter().map(|(e, s)| format!("{s}{e}")).collect();
        write!(f, "({})", body.join(","))
    }
}

/// True iff the list is closed under negation and no two members share a
/// support without being equal or negatives of each other.
pub fn check_simple_z2(vectors: &[SignedVector]) -> bool {
    for (i, &x) in vectors.iter().enumerate() {
        if !vectors.contains(&x.negated()) {
            return false;
        }
        for &y in &vectors[i + 1..] {
            if x.support() == y.support() && y != x && y != x.negated() {
                return false;
            }
        }
    }
    true
}

/// A candidate set of signed circuits: deduplicated, negation-closed, simple,
/// with supports forming an antichain of nonempty sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedFamily {
    ground: GroundSet,
    members: Vec<SignedVector>,
}

impl SignedFamily {
    pub fn new(ground: GroundSet, members: Vec<SignedVector>) -> Result<Self, SignedError> {
        let mut members = members;
        members.sort_by(|a, b| a.canonical_cmp(*b));
        members.dedup();
        for (i, &x) in members.iter().enumerate() {
            if x.is_zero() {
                return Err(SignedError::ZeroVector);
            }
            if !ground.contains_mask(x.support()) {
                return Err(SignedError::OutsideGround { member: x.support() });
            }
            if !members.contains(&x.negated()) {
                return Err(SignedError::NotZ2Closed(x));
            }
            for &y in &members[i + 1..] {
                if x.support() == y.support() && y != x.negated() {
                    return Err(SignedError::NotSimple { a: x, b: y });
                }
            }
        }
        // One representative per ± pair; supports must be incomparable.
        let reps = representative_supports(&members);
        for (i, &a) in reps.iter().enumerate() {
            for &b in &reps[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return Err(SignedError::SupportsComparable { a, b });
                }
            }
        }
        debug_assert!(is_antichain(&reps));
        Ok(SignedFamily { ground, members })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[SignedVector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &SignedVector) -> bool {
        self.members.contains(x)
    }

    /// The distinct supports of members, in canonical order.
    pub fn supports(&self) -> Vec<SubsetMask> {
        representative_supports(&self.members)
    }
}

fn representative_supports(members: &[SignedVector]) -> Vec<SubsetMask> {
    let mut supports: Vec<SubsetMask> = members.iter().map(|x| x.support()).collect();
    supports.sort_by(|a, b| a.canonical_cmp(*b));
    supports.dedup();
    supports
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sv(pos: u64, neg: u64) -> SignedVector {
        SignedVector::new(SubsetMask::from_bits(pos), SubsetMask::from_bits(neg)).unwrap()
    }

    #[test]
    fn vector_basics() {
        let x = sv(0b001, 0b010);
        assert_eq!(x.support(), SubsetMask::from_bits(0b011));
        assert_eq!(x.sign(0), 1);
        assert_eq!(x.sign(1), -1);
        assert_eq!(x.sign(2), 0);
        assert_eq!(x.negated().negated(), x);
        assert_eq!(x.negated().support(), x.support());
        assert_eq!(x.to_string(), "(+0,-1)");
    }

    #[test]
    fn overlapping_parts_rejected() {
        let err = SignedVector::new(SubsetMask::from_bits(0b011), SubsetMask::from_bits(0b001));
        assert_eq!(err.unwrap_err(), SignedError::OverlappingParts { overlap: SubsetMask::from_bits(0b001) });
    }

    #[test]
    fn simple_z2_predicate() {
        // {±(+0,-1)} is closed and simple.
        assert!(check_simple_z2(&[sv(0b001, 0b010), sv(0b010, 0b001)]));
        // Missing the negation.
        assert!(!check_simple_z2(&[sv(0b001, 0b010)]));
        // Two vectors on the same support that are not negatives.
        assert!(!check_simple_z2(&[
            sv(0b001, 0b010),
            sv(0b010, 0b001),
            sv(0b011, 0b000),
            sv(0b000, 0b011),
        ]));
        assert!(check_simple_z2(&[]));
    }

    #[test]
    fn family_enforces_invariants() {
        let g = GroundSet::new(3).unwrap();
        let ok = SignedFamily::new(g.clone(), vec![sv(0b001, 0b010), sv(0b010, 0b001)]).unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok.supports(), vec![SubsetMask::from_bits(0b011)]);

        assert_eq!(
            SignedFamily::new(g.clone(), vec![sv(0b001, 0b010)]).unwrap_err(),
            SignedError::NotZ2Closed(sv(0b001, 0b010))
        );
        assert_eq!(
            SignedFamily::new(g.clone(), vec![sv(0, 0)]).unwrap_err(),
            SignedError::ZeroVector
        );
        // Supports {0,1} ⊂ {0,1,2} are comparable.
        let err = SignedFamily::new(
            g,
            vec![sv(0b011, 0), sv(0, 0b011), sv(0b111, 0), sv(0, 0b111)],
        )
        .unwrap_err();
        assert_eq!(
            err,
            SignedError::SupportsComparable {
                a: SubsetMask::from_bits(0b011),
                b: SubsetMask::from_bits(0b111),
            }
        );
    }

    #[test]
    fn family_dedupes_and_orders() {
        let g = GroundSet::new(2).unwrap();
        let fam = SignedFamily::new(
            g,
            vec![sv(0b10, 0b01), sv(0b01, 0b10), sv(0b10, 0b01)],
        )
        .unwrap();
        assert_eq!(fam.members(), &[sv(0b01, 0b10), sv(0b10, 0b01)]);
    }
}
