//! Antichains of nonempty subsets — the carrier type for circuit families.

use thiserror::Error;

use crate::ground::{GroundSet, SubsetMask};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family members must be nonempty")]
    EmptyMember,
    #[error("members {a} and {b} are comparable")]
    ComparableMembers { a: SubsetMask, b: SubsetMask },
    #[error("member {member} is not a subset of the ground set")]
    OutsideGround { member: SubsetMask },
}

/// True iff no member is empty and no member is a subset of a distinct member.
///
/// Duplicate entries in the slice do not falsify the predicate; equality is
/// not "distinct". The empty list is an antichain.
pub fn is_antichain(members: &[SubsetMask]) -> bool {
    for (i, &a) in members.iter().enumerate() {
        if a.is_empty() {
            return false;
        }
        for &b in &members[i + 1..] {
            if a != b && (a.is_subset_of(b) || b.is_subset_of(a)) {
                return false;
            }
        }
    }
    true
}

/// A candidate set of matroid circuits: a deduplicated antichain of nonempty
/// subsets of a ground set, stored in canonical (size, value) order.
///
/// Canonical ordering makes equality independent of input order, and every
/// validator walks members in this order, so witnesses are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitFamily {
    ground: GroundSet,
    members: Vec<SubsetMask>,
}

impl CircuitFamily {
    /// Build a family, silently deduplicating exact repeats. Empty members
    /// and comparable member pairs are hard errors.
    pub fn new(ground: GroundSet, members: Vec<SubsetMask>) -> Result<Self, FamilyError> {
        let mut members = members;
        members.sort_by(|a, b| a.canonical_cmp(*b));
        members.dedup();
        for (i, &a) in members.iter().enumerate() {
            if a.is_empty() {
                return Err(FamilyError::EmptyMember);
            }
            if !ground.contains_mask(a) {
                return Err(FamilyError::OutsideGround { member: a });
            }
            // Canonical order refines inclusion, so only earlier members can
            // be subsets of later ones.
            for &b in &members[..i] {
                if b.is_subset_of(a) {
                    return Err(FamilyError::ComparableMembers { a: b, b: a });
                }
            }
        }
        Ok(CircuitFamily { ground, members })
    }

    /// Build from members already known to be a canonical-sorted antichain.
    pub(crate) fn from_canonical_unchecked(ground: GroundSet, members: Vec<SubsetMask>) -> Self {
        debug_assert!(is_antichain(&members));
        debug_assert!(members.windows(2).all(|w| w[0].canonical_cmp(w[1]).is_lt()));
        CircuitFamily { ground, members }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.members.contains(&mask)
    }
}
