//! Signed-circuit elimination and the oriented-matroid validators.
//!
//! The elimination property for a signed pair (X, Y): for every element e
//! signed oppositely by X and Y, and every element f carried by exactly one
//! of the two supports, some member Z vanishes at e, is nonzero at f, and is
//! conformal — each sign of Z already appears in X or Y at that position.
//! Oppositely-signed f are excluded: eliminating one such element can strand
//! the others even in families realized by integer matrices (two oriented
//! cycles of a graph sharing two edges traversed oppositely leave no cycle
//! through the second shared edge once the first is removed).
//!
//! [`check_signed_classic`] is the oracle: the supports must pass the full
//! circuit validator and elimination must hold for every pair with distinct
//! supports. [`check_signed_modular`] demands elimination only on pairs whose
//! supports form a modular pair of the support family, and drops the support
//! axiom entirely. The two agree — the third equivalence this crate verifies.

use crate::circuits::check_circuits_full;
use crate::family::CircuitFamily;
use crate::ground::SubsetMask;
use crate::lattice::modular_pair_fast;
use crate::signed::{SignedError, SignedFamily, SignedVector};
use crate::verdict::{Verdict, Witness};

/// Signed elimination for the pair (x, y); see the module docs. Symmetric in
/// x and y, and vacuously true when no element is oppositely signed.
pub fn oe_property(
    fam: &SignedFamily,
    x: SignedVector,
    y: SignedVector,
) -> Result<bool, SignedError> {
    if !fam.contains(&x) || !fam.contains(&y) {
        return Err(SignedError::NotAMember);
    }
    Ok(oe_failure(fam, x, y).is_none())
}

/// First (separating, differing) element pair witnessing an elimination
/// failure, scanning both in ascending order.
pub(crate) fn oe_failure(
    fam: &SignedFamily,
    x: SignedVector,
    y: SignedVector,
) -> Option<(usize, usize)> {
    let separating = x
        .positive()
        .intersect(y.negative())
        .union(x.negative().intersect(y.positive()));
    if separating.is_empty() {
        return None;
    }
    let need = sym_diff(x.support(), y.support());
    let pos_bound = x.positive().union(y.positive());
    let neg_bound = x.negative().union(y.negative());
    for e in separating.elements() {
        // Everything a conformal member vanishing at e can reach; each f may
        // use a different Z, so the union is exactly what must cover them.
        let mut covered = SubsetMask::EMPTY;
        for z in fam.members() {
            if z.sign(e) == 0
                && z.positive().is_subset_of(pos_bound)
                && z.negative().is_subset_of(neg_bound)
            {
                covered = covered.union(z.support());
            }
        }
        if let Some(f) = need.minus(covered).elements().next() {
            return Some((e, f));
        }
    }
    None
}

fn sym_diff(a: SubsetMask, b: SubsetMask) -> SubsetMask {
    a.minus(b).union(b.minus(a))
}

/// The deduplicated supports of the family's members.
pub fn support_family(fam: &SignedFamily) -> CircuitFamily {
    CircuitFamily::new(fam.ground().clone(), fam.supports())
        .expect("signed families keep their supports an antichain")
}

/// Oriented-matroid oracle: supports must form matroid circuits and signed
/// elimination must hold for every pair with distinct supports. Pairs with
/// equal supports are X and −X, for which elimination is never satisfiable.
pub fn check_signed_classic(fam: &SignedFamily) -> Verdict {
    if let Verdict::Rejected(w) = check_circuits_full(&support_family(fam)) {
        return Verdict::Rejected(w);
    }
    first_signed_failure(fam, false)
}

/// Signed elimination demanded only on pairs whose supports are a modular
/// pair of the support family, with no separate support-axiom check.
/// Acceptance nevertheless certifies an oriented matroid.
pub fn check_signed_modular(fam: &SignedFamily) -> Verdict {
    first_signed_failure(fam, true)
}

fn first_signed_failure(fam: &SignedFamily, modular_only: bool) -> Verdict {
    let supports = fam.supports();
    let members = fam.members();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if x.support() == y.support() {
                continue;
            }
            if modular_only && !modular_pair_fast(&supports, x.support(), y.support()) {
                continue;
            }
            if let Some((e, f)) = oe_failure(fam, x, y) {
                return Verdict::Rejected(Witness::SignedElimination {
                    x,
                    y,
                    separating: e,
                    differing: f,
                });
            }
        }
    }
    Verdict::Accepted
}
