//! JSON document formats for families and lattices, witness serialization,
//! and Graphviz export of Hasse diagrams.
//!
//! All set-family documents name elements by label; parsing resolves labels
//! against the declared ground set and serializing writes them back, so a
//! parse → serialize → parse round trip is the identity.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::family::{CircuitFamily, FamilyError};
use crate::flats::{FlatFamily, FlatsError};
use crate::ground::{GroundError, GroundSet, SubsetMask};
use crate::lattice::{FiniteLattice, LatticeError, UnionLattice};
use crate::signed::{SignedError, SignedFamily, SignedVector};
use crate::verdict::{AtomDefect, SeparationDefect, Witness};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown element label {label:?}")]
    UnknownLabel { label: String },
    #[error(transparent)]
    Ground(#[from] GroundError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Signed(#[from] SignedError),
    #[error(transparent)]
    Flats(#[from] FlatsError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CircuitsDoc {
    pub ground: Vec<String>,
    pub circuits: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedDoc {
    pub ground: Vec<String>,
    pub circuits: Vec<SignedEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignedEntry {
    #[serde(rename = "+", default)]
    pub plus: Vec<String>,
    #[serde(rename = "-", default)]
    pub minus: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlatsDoc {
    pub ground: Vec<String>,
    pub flats: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub elements: usize,
    pub covers: Vec<(usize, usize)>,
}

fn resolve(ground: &GroundSet, names: &[String]) -> Result<SubsetMask, IoError> {
    let mut mask = SubsetMask::EMPTY;
    for name in names {
        let i = ground
            .index_of(name)
            .ok_or_else(|| IoError::UnknownLabel { label: name.clone() })?;
        mask = mask.insert(i);
    }
    Ok(mask)
}

fn names(ground: &GroundSet, mask: SubsetMask) -> Vec<String> {
    mask.elements().map(|i| ground.label(i)).collect()
}

// ---------------------------------------------------------------------------
// circuits

pub fn read_circuits(text: &str) -> Result<CircuitFamily, IoError> {
    let doc: CircuitsDoc = serde_json::from_str(text)?;
    let ground = GroundSet::with_labels(doc.ground)?;
    let members = doc
        .circuits
        .iter()
        .map(|c| resolve(&ground, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CircuitFamily::new(ground, members)?)
}

pub fn circuits_doc(fam: &CircuitFamily) -> CircuitsDoc {
    CircuitsDoc {
        ground: fam.ground().labels(),
        circuits: fam.members().iter().map(|&m| names(fam.ground(), m)).collect(),
    }
}

// ---------------------------------------------------------------------------
// signed families

/// Parse a signed document. With `complete_negations` set, the negation of
/// every listed vector is added before validation, so a document may list
/// one representative per circuit.
pub fn read_signed(text: &str, complete_negations: bool) -> Result<SignedFamily, IoError> {
    let doc: SignedDoc = serde_json::from_str(text)?;
    let ground = GroundSet::with_labels(doc.ground)?;
    let mut members = Vec::new();
    for entry in &doc.circuits {
        let v = SignedVector::new(resolve(&ground, &entry.plus)?, resolve(&ground, &entry.minus)?)?;
        members.push(v);
        if complete_negations {
            members.push(v.negated());
        }
    }
    members.sort_by(|a, b| a.canonical_cmp(*b));
    members.dedup();
    Ok(SignedFamily::new(ground, members)?)
}

pub fn signed_doc(fam: &SignedFamily) -> SignedDoc {
    SignedDoc {
        ground: fam.ground().labels(),
        circuits: fam
            .members()
            .iter()
            .map(|v| SignedEntry {
                plus: names(fam.ground(), v.positive()),
                minus: names(fam.ground(), v.negative()),
            })
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// flats

pub fn read_flats(text: &str) -> Result<FlatFamily, IoError> {
    let doc: FlatsDoc = serde_json::from_str(text)?;
    let ground = GroundSet::with_labels(doc.ground)?;
    let members = doc
        .flats
        .iter()
        .map(|f| resolve(&ground, f))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FlatFamily::new(ground, members)?)
}

pub fn flats_doc(fam: &FlatFamily) -> FlatsDoc {
    FlatsDoc {
        ground: fam.ground().labels(),
        flats: fam.members().iter().map(|&m| names(fam.ground(), m)).collect(),
    }
}

// ---------------------------------------------------------------------------
// lattices

pub fn read_lattice(text: &str) -> Result<FiniteLattice, IoError> {
    let doc: LatticeDoc = serde_json::from_str(text)?;
    Ok(FiniteLattice::from_covers(doc.elements, &doc.covers)?)
}

pub fn lattice_doc(lat: &FiniteLattice) -> LatticeDoc {
    LatticeDoc { elements: lat.size(), covers: lat.cover_pairs().to_vec() }
}

// ---------------------------------------------------------------------------
// witnesses

/// A witness as a standalone JSON value, with elements written as labels of
/// the given ground set so it can be re-checked against the input document.
pub fn witness_value(ground: &GroundSet, witness: &Witness) -> Value {
    match witness {
        Witness::Elimination { c1, c2, element, region } => json!({
            "type": "elimination",
            "c1": names(ground, *c1),
            "c2": names(ground, *c2),
            "element": ground.label(*element),
            "region": names(ground, *region),
        }),
        Witness::FlatSeparation { flat, defect } => json!({
            "type": "flat-separation",
            "flat": names(ground, *flat),
            "defect": separation_defect_value(ground, defect),
        }),
        Witness::AtomSeparation { element, defect } => json!({
            "type": "atom-separation",
            "element": element,
            "defect": atom_defect_value(defect),
        }),
        Witness::SignedElimination { x, y, separating, differing } => json!({
            "type": "signed-elimination",
            "x": { "+": names(ground, x.positive()), "-": names(ground, x.negative()) },
            "y": { "+": names(ground, y.positive()), "-": names(ground, y.negative()) },
            "separating": ground.label(*separating),
            "differing": ground.label(*differing),
        }),
    }
}

fn separation_defect_value(ground: &GroundSet, defect: &SeparationDefect) -> Value {
    match defect {
        SeparationDefect::Overlap { cover_a, cover_b, element } => json!({
            "kind": "overlap",
            "cover_a": names(ground, *cover_a),
            "cover_b": names(ground, *cover_b),
            "element": ground.label(*element),
        }),
        SeparationDefect::Uncovered { missing } => json!({
            "kind": "uncovered",
            "missing": names(ground, *missing),
        }),
    }
}

fn atom_defect_value(defect: &AtomDefect) -> Value {
    match defect {
        AtomDefect::EmptyBlock { cover } => json!({ "kind": "empty-block", "cover": cover }),
        AtomDefect::Overlap { cover_a, cover_b, atom } => json!({
            "kind": "overlap",
            "cover_a": cover_a,
            "cover_b": cover_b,
            "atom": atom,
        }),
        AtomDefect::Uncovered { atoms } => json!({ "kind": "uncovered", "atoms": atoms }),
    }
}

/// Witness for an abstract lattice, where elements are plain indices.
pub fn lattice_witness_value(witness: &Witness) -> Value {
    match witness {
        Witness::AtomSeparation { element, defect } => json!({
            "type": "atom-separation",
            "element": element,
            "defect": atom_defect_value(defect),
        }),
        other => panic!("lattice validators only emit atom-separation witnesses, got {other:?}"),
    }
}

/// The standalone rejection document: the offending family plus the witness.
pub fn witness_document(family: Value, witness: Value) -> Value {
    json!({ "family": family, "witness": witness })
}

// ---------------------------------------------------------------------------
// DOT export

/// Hasse diagram of a union lattice: nodes labeled by member sets, grouped
/// by chain length, edges pointing upward.
pub fn union_lattice_dot(lat: &UnionLattice) -> String {
    let labels: Vec<String> =
        lat.members().iter().map(|&m| lat.ground().format_subset(m)).collect();
    let ranks: Vec<usize> = lat
        .members()
        .iter()
        .map(|&m| lat.length_of(m).expect("members rank themselves"))
        .collect();
    hasse_dot(&labels, &ranks, &lat.cover_pairs())
}

/// Hasse diagram of an explicit finite lattice, nodes labeled by index.
pub fn finite_lattice_dot(lat: &FiniteLattice) -> String {
    let labels: Vec<String> = (0..lat.size()).map(|x| x.to_string()).collect();
    let ranks: Vec<usize> = (0..lat.size()).map(|x| lat.down_length(x)).collect();
    hasse_dot(&labels, &ranks, lat.cover_pairs())
}

/// Hasse diagram of a flat family under inclusion, nodes labeled by member
/// sets, grouped by chain length from the bottom.
pub fn flat_family_dot(fam: &FlatFamily) -> String {
    let lat = fam.as_lattice();
    let labels: Vec<String> =
        fam.members().iter().map(|&m| fam.ground().format_subset(m)).collect();
    let ranks: Vec<usize> = (0..lat.size()).map(|x| lat.down_length(x)).collect();
    hasse_dot(&labels, &ranks, lat.cover_pairs())
}

fn hasse_dot(labels: &[String], ranks: &[usize], covers: &[(usize, usize)]) -> String {
    use std::fmt::Write;
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, label) in labels.iter().enumerate() {
        let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  n{i} [label=\"{escaped}\"];").unwrap();
    }
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=max_rank {
        let level: Vec<String> = (0..labels.len())
            .filter(|&i| ranks[i] == r)
            .map(|i| format!("n{i};"))
            .collect();
        if !level.is_empty() {
            writeln!(out, "  {{ rank=same; {} }}", level.join(" ")).unwrap();
        }
    }
    for &(child, parent) in covers {
        writeln!(out, "  n{child} -> n{parent};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::DEFAULT_UNION_CAP;

    const U24: &str = r#"{
        "ground": ["a", "b", "c", "d"],
        "circuits": [["a","b","c"], ["a","b","d"], ["a","c","d"], ["b","c","d"]]
    }"#;

    #[test]
    fn circuits_round_trip() {
        let fam = read_circuits(U24).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(fam.ground().size(), 4);
        let text = serde_json::to_string(&circuits_doc(&fam)).unwrap();
        let again = read_circuits(&text).unwrap();
        assert_eq!(fam, again);
    }

    #[test]
    fn unknown_labels_are_reported() {
        let bad = r#"{ "ground": ["a"], "circuits": [["z"]] }"#;
        assert!(matches!(
            read_circuits(bad),
            Err(IoError::UnknownLabel { label }) if label == "z"
        ));
        assert!(matches!(read_circuits("{"), Err(IoError::Json(_))));
    }

    #[test]
    fn signed_negation_completion() {
        let doc = r#"{
            "ground": ["a", "b", "c"],
            "circuits": [{"+": ["a"], "-": ["b"]}, {"+": ["a"], "-": ["c"]}, {"+": ["b"], "-": ["c"]}]
        }"#;
        let completed = read_signed(doc, true).unwrap();
        assert_eq!(completed.len(), 6);
        // Without completion the same document is not Z2-closed.
        assert!(read_signed(doc, false).is_err());

        let text = serde_json::to_string(&signed_doc(&completed)).unwrap();
        let again = read_signed(&text, false).unwrap();
        assert_eq!(completed, again);
    }

    #[test]
    fn flats_round_trip() {
        let doc = r#"{
            "ground": ["a", "b", "c"],
            "flats": [[], ["a"], ["b"], ["c"], ["a","b","c"]]
        }"#;
        let fam = read_flats(doc).unwrap();
        assert_eq!(fam.len(), 5);
        let text = serde_json::to_string(&flats_doc(&fam)).unwrap();
        assert_eq!(read_flats(&text).unwrap(), fam);
    }

    #[test]
    fn lattice_round_trip() {
        let doc = r#"{ "elements": 4, "covers": [[0,1],[0,2],[1,3],[2,3]] }"#;
        let lat = read_lattice(doc).unwrap();
        assert_eq!(lat.size(), 4);
        let text = serde_json::to_string(&lattice_doc(&lat)).unwrap();
        let again = read_lattice(&text).unwrap();
        assert_eq!(lat.cover_pairs(), again.cover_pairs());
    }

    #[test]
    fn witness_values_use_labels() {
        let fam = read_circuits(U24).unwrap();
        let w = Witness::Elimination {
            c1: SubsetMask::from_bits(0b0111),
            c2: SubsetMask::from_bits(0b1011),
            element: 0,
            region: SubsetMask::from_bits(0b1110),
        };
        let v = witness_value(fam.ground(), &w);
        assert_eq!(v["type"], "elimination");
        assert_eq!(v["element"], "a");
        assert_eq!(v["region"], json!(["b", "c", "d"]));
        let doc = witness_document(json!({"x": 1}), v);
        assert_eq!(doc["family"]["x"], 1);
    }

    #[test]
    fn dot_output_shape() {
        let fam = read_circuits(U24).unwrap();
        let lat = UnionLattice::build(&fam, DEFAULT_UNION_CAP).unwrap();
        let dot = union_lattice_dot(&lat);
        assert!(dot.starts_with("digraph hasse {"));
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("{a,b,c}"));
        assert_eq!(dot.matches("->").count(), lat.cover_pairs().len());

        let dot = finite_lattice_dot(&FiniteLattice::diamond(3));
        assert_eq!(dot.matches("->").count(), 6);
        assert!(dot.contains("rank=same"));
    }
}
