//! Accept/reject verdicts and the witnesses that justify rejections.
//!
//! Every rejected verdict carries enough data to re-falsify the failed
//! property by direct inspection, without re-running the validator.

use std::fmt;

use crate::ground::SubsetMask;
use crate::signed::SignedVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected(Witness),
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Accepted => None,
            Verdict::Rejected(w) => Some(w),
        }
    }
}

/// Where and how a validated property failed.
///
/// Validators scan in canonical order, so the witness is always the first
/// failure: the earliest offending pair and the smallest offending element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// No member of the family lies inside `region` = (c1 ∪ c2) \ {element}.
    Elimination {
        c1: SubsetMask,
        c2: SubsetMask,
        element: usize,
        region: SubsetMask,
    },
    /// The cover differences above `flat` fail to partition its complement.
    FlatSeparation {
        flat: SubsetMask,
        defect: SeparationDefect,
    },
    /// The atom blocks above lattice element `element` fail to partition the
    /// atoms outside it.
    AtomSeparation {
        element: usize,
        defect: AtomDefect,
    },
    /// No conformal composition eliminates `separating` while staying nonzero
    /// at `differing` for the signed pair (x, y).
    SignedElimination {
        x: SignedVector,
        y: SignedVector,
        separating: usize,
        differing: usize,
    },
}

/// How a set-valued cover family failed to partition the ground complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparationDefect {
    Overlap {
        cover_a: SubsetMask,
        cover_b: SubsetMask,
        element: usize,
    },
    Uncovered {
        missing: SubsetMask,
    },
}

/// How the atom blocks of a lattice element failed to partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomDefect {
    /// A cover contributes no new atoms; partitions have nonempty blocks.
    EmptyBlock { cover: usize },
    Overlap { cover_a: usize, cover_b: usize, atom: usize },
    Uncovered { atoms: Vec<usize> },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Elimination { c1, c2, element, region } => write!(
                f,
                "elimination fails for ({c1}, {c2}) at element {element}: no member inside {region}"
            ),
            Witness::FlatSeparation { flat, defect } => match defect {
                SeparationDefect::Overlap { cover_a, cover_b, element } => write!(
                    f,
                    "separation fails at {flat}: covers {cover_a} and {cover_b} overlap on element {element}"
                ),
                SeparationDefect::Uncovered { missing } => write!(
                    f,
                    "separation fails at {flat}: elements {missing} lie in no cover block"
                ),
            },
            Witness::AtomSeparation { element, defect } => match defect {
                AtomDefect::EmptyBlock { cover } => write!(
                    f,
                    "separation fails at element {element}: cover {cover} contributes an empty atom block"
                ),
                AtomDefect::Overlap { cover_a, cover_b, atom } => write!(
                    f,
                    "separation fails at element {element}: covers {cover_a} and {cover_b} share atom {atom}"
                ),
                AtomDefect::Uncovered { atoms } => write!(
                    f,
                    "separation fails at element {element}: atoms {atoms:?} lie in no cover block"
                ),
            },
            Witness::SignedElimination { x, y, separating, differing } => write!(
                f,
                "signed elimination fails for ({x}, {y}): no conformal member is zero at {separating} and nonzero at {differing}"
            ),
        }
    }
}
