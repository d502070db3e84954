//! Ground sets and their subsets.
//!
//! Everything downstream works over a fixed finite ground set of at most 64
//! elements, so a subset is a single `u64` bitmask. Elements are indices
//! `0..n`; optional labels only matter for parsing and printing.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Hard ceiling on ground set size imposed by the `u64` mask representation.
pub const MAX_GROUND: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroundError {
    #[error("ground set has {0} elements, the maximum is {MAX_GROUND}")]
    TooLarge(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("element {element} is outside the ground set of size {size}")]
    OutOfRange { element: usize, size: usize },
}

/// A finite ground set: a size plus optional distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    /// Unlabeled ground set of `size` elements. Size zero is allowed.
    pub fn new(size: usize) -> Result<Self, GroundError> {
        if size > MAX_GROUND {
            return Err(GroundError::TooLarge(size));
        }
        Ok(GroundSet { size, labels: None })
    }

    /// Ground set whose elements carry the given distinct labels.
    pub fn with_labels(labels: Vec<String>) -> Result<Self, GroundError> {
        if labels.len() > MAX_GROUND {
            return Err(GroundError::TooLarge(labels.len()));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(GroundError::DuplicateLabel(a.clone()));
            }
        }
        Ok(GroundSet { size: labels.len(), labels: Some(labels) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Mask with all `size` low bits set.
    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.size)
    }

    /// True when every set bit of `mask` indexes an element.
    pub fn contains_mask(&self, mask: SubsetMask) -> bool {
        mask.bits() & !self.full_mask().bits() == 0
    }

    /// Label of element `i`, falling back to a generated one.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) if i < ls.len() => ls[i].clone(),
            _ => default_label(i),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size).map(|i| self.label(i)).collect()
    }

    /// Index of the element with the given label, if any.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(ls) => ls.iter().position(|l| l == label),
            None => (0..self.size).find(|&i| default_label(i) == label),
        }
    }

    /// Render a subset as `{a,b,c}` using this ground set's labels.
    pub fn format_subset(&self, mask: SubsetMask) -> String {
        if mask.is_empty() {
            return "{}".into();
        }
        let parts: Vec<String> = mask.elements().map(|e| self.label(e)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Label used when none was supplied: `a`..`z`, then `e26`, `e27`, ...
pub fn default_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("e{i}")
    }
}

/// A subset of a ground set, one bit per element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_GROUND);
        SubsetMask(1u64 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut bits = 0u64;
        for e in elems {
            debug_assert!(e < MAX_GROUND);
            bits |= 1u64 << e;
        }
        SubsetMask(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    pub fn insert(self, e: usize) -> Self {
        debug_assert!(e < MAX_GROUND);
        SubsetMask(self.0 | 1u64 << e)
    }

    pub fn remove(self, e: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement inside a ground set of `n` elements.
    pub fn complement_in(self, n: usize) -> Self {
        SubsetMask(!self.0).intersect(SubsetMask::full(n))
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self != other && self.is_subset_of(other)
    }

    /// Elements in ascending index order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Order by cardinality first, then by numeric mask value.
    ///
    /// This is the canonical order used for families throughout the crate;
    /// it refines inclusion, so a proper subset always sorts first.
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.elements().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
