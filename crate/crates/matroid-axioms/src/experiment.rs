//! Verification experiments: exhaustive enumerations and corpus sweeps that
//! compare each restricted validator against its oracle and check the
//! circuit/flat/dual round trips. A clean run reports zero counterexamples;
//! any failure is serialized completely enough to re-check by hand.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::circuits::{circuits_full_accepted, circuits_modular_accepted, dual_circuits, rank};
use crate::family::CircuitFamily;
use crate::flats::{
    check_flats_full, check_flats_restricted, coatom_complement_circuits, flats_from_circuits,
    FlatFamily,
};
use crate::generators::{
    enumerate_antichains_sharded, enumerate_moore_families_sharded, fano, graphic_signed,
    uniform, vector_signed, GenError, GraphSpec,
};
use crate::io::{circuits_doc, flats_doc, signed_doc};
use crate::lattice::{UnionLattice, DEFAULT_UNION_CAP};
use crate::matrix::IntMatrix;
use crate::oriented::{check_signed_classic, check_signed_modular};
use crate::signed::{SignedFamily, SignedVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    TheoremMain,
    Newcrapo,
    OrientedEquiv,
    Cryptomorphism,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::TheoremMain => "theorem-main",
            ExperimentKind::Newcrapo => "newcrapo",
            ExperimentKind::OrientedEquiv => "oriented-equiv",
            ExperimentKind::Cryptomorphism => "cryptomorphism",
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExperimentKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "theorem-main" => Ok(ExperimentKind::TheoremMain),
            "newcrapo" => Ok(ExperimentKind::Newcrapo),
            "oriented-equiv" => Ok(ExperimentKind::OrientedEquiv),
            "cryptomorphism" => Ok(ExperimentKind::Cryptomorphism),
            other => Err(format!("unknown experiment kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentOptions {
    /// Total shards the instance space is split into.
    pub shards: usize,
    /// Run only this shard; None runs all shards locally.
    pub shard: Option<usize>,
    /// Worker threads when running all shards.
    pub threads: usize,
    pub seed: u64,
    /// Random 3×6 matrices for the oriented experiment.
    pub random_matrices: usize,
    pub union_cap: usize,
    /// Lift the size gates (antichains n=6, Moore families n=5).
    pub big: bool,
}

impl Default for ExperimentOptions {
    fn default() -> Self {
        ExperimentOptions {
            shards: 1,
            shard: None,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: 0x6d61_7472,
            random_matrices: 100,
            union_cap: DEFAULT_UNION_CAP,
            big: false,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub kind: String,
    pub n: usize,
    pub seed: u64,
    pub shards: usize,
    pub instances: u64,
    pub counterexamples: u64,
    pub witnesses: Vec<Value>,
    pub duration_ms: u64,
}

struct ShardOut {
    instances: u64,
    witnesses: Vec<Value>,
}

/// Run one experiment. Deterministic given (kind, n, seed, shards); thread
/// count only affects wall-clock time.
pub fn run_experiment(
    kind: ExperimentKind,
    n: usize,
    options: &ExperimentOptions,
) -> Result<ExperimentReport, GenError> {
    let start = Instant::now();
    let (instances, witnesses) = match kind {
        ExperimentKind::TheoremMain => theorem_main(n, options)?,
        ExperimentKind::Newcrapo => newcrapo(n, options)?,
        ExperimentKind::OrientedEquiv => oriented_equiv(options)?,
        ExperimentKind::Cryptomorphism => cryptomorphism(n, options)?,
    };
    Ok(ExperimentReport {
        kind: kind.name().to_string(),
        n,
        seed: options.seed,
        shards: options.shards,
        instances,
        counterexamples: witnesses.len() as u64,
        witnesses,
        duration_ms: start.elapsed().as_millis() as u64,
    })
}

// ---------------------------------------------------------------------------
// the four experiments

/// Circuit elimination: modular-pair validator vs the all-pairs oracle over
/// every antichain on [n].
fn theorem_main(n: usize, options: &ExperimentOptions) -> Result<(u64, Vec<Value>), GenError> {
    gate(n, 5, 6, options.big, "antichain enumeration")?;
    fan_out(options, |shards, shard| {
        let mut out = ShardOut { instances: 0, witnesses: Vec::new() };
        enumerate_antichains_sharded(n, shards, shard, |fam| {
            out.instances += 1;
            let modular = circuits_modular_accepted(fam.members());
            let full = circuits_full_accepted(fam.members());
            if modular != full {
                out.witnesses.push(json!({
                    "family": circuits_doc(fam),
                    "modular_accepted": modular,
                    "full_accepted": full,
                }));
            }
        })?;
        Ok(out)
    })
}

/// Flat separation: up-length-2 validator vs the all-members oracle over
/// every Moore family on [n].
fn newcrapo(n: usize, options: &ExperimentOptions) -> Result<(u64, Vec<Value>), GenError> {
    gate(n, 4, 5, options.big, "Moore-family enumeration")?;
    fan_out(options, |shards, shard| {
        let mut out = ShardOut { instances: 0, witnesses: Vec::new() };
        enumerate_moore_families_sharded(n, shards, shard, |fam| {
            out.instances += 1;
            let restricted = check_flats_restricted(fam).accepted();
            let full = check_flats_full(fam).accepted();
            if restricted != full {
                out.witnesses.push(json!({
                    "family": flats_doc(fam),
                    "restricted_accepted": restricted,
                    "full_accepted": full,
                }));
            }
        })?;
        Ok(out)
    })
}

/// Signed elimination: modular-support-pair validator vs the classical
/// oracle, over fixed realizations, seeded random matrices, and every
/// single-sign-flip mutant of each.
fn oriented_equiv(options: &ExperimentOptions) -> Result<(u64, Vec<Value>), GenError> {
    let instances = oriented_instances(options.seed, options.random_matrices)?;
    fan_out(options, |shards, shard| {
        let mut out = ShardOut { instances: 0, witnesses: Vec::new() };
        for (i, (name, fam)) in instances.iter().enumerate() {
            if i % shards != shard {
                continue;
            }
            out.instances += 1;
            let modular = check_signed_modular(fam).accepted();
            let classic = check_signed_classic(fam).accepted();
            if modular != classic {
                out.witnesses.push(json!({
                    "name": name,
                    "family": signed_doc(fam),
                    "modular_accepted": modular,
                    "classic_accepted": classic,
                }));
            }
        }
        Ok(out)
    })
}

/// Round trips between the axiom systems: the union lattice of the circuits
/// is the complement-reversed flats lattice of the dual, coatom complements
/// of the flats are the dual circuits, chain length in the union lattice is
/// corank, and every accepted Moore family on [n] round-trips through its
/// coatom-complement circuits.
fn cryptomorphism(n: usize, options: &ExperimentOptions) -> Result<(u64, Vec<Value>), GenError> {
    gate(n, 4, 5, options.big, "Moore-family enumeration")?;
    let corpus = circuit_corpus();
    let (corpus_instances, mut witnesses) = fan_out(options, |shards, shard| {
        let mut out = ShardOut { instances: 0, witnesses: Vec::new() };
        for (i, (name, fam)) in corpus.iter().enumerate() {
            if i % shards != shard {
                continue;
            }
            out.instances += 1;
            if let Some(problem) = matroid_round_trip_problem(fam, options.union_cap)? {
                out.witnesses.push(json!({
                    "name": name,
                    "family": circuits_doc(fam),
                    "problem": problem,
                }));
            }
        }
        Ok(out)
    })?;
    let (moore_instances, moore_witnesses) = fan_out(options, |shards, shard| {
        let mut out = ShardOut { instances: 0, witnesses: Vec::new() };
        let mut failure: Option<GenError> = None;
        enumerate_moore_families_sharded(n, shards, shard, |fam| {
            if failure.is_some() || !check_flats_full(fam).accepted() {
                return;
            }
            out.instances += 1;
            match flats_round_trip_problem(fam, options.union_cap) {
                Ok(None) => {}
                Ok(Some(problem)) => out.witnesses.push(json!({
                    "family": flats_doc(fam),
                    "problem": problem,
                })),
                Err(e) => failure = Some(e),
            }
        })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(out),
        }
    })?;
    witnesses.extend(moore_witnesses);
    Ok((corpus_instances + moore_instances, witnesses))
}

/// First broken round-trip fact for a corpus matroid, if any.
fn matroid_round_trip_problem(
    fam: &CircuitFamily,
    union_cap: usize,
) -> Result<Option<String>, GenError> {
    let n = fam.ground().size();
    let lattice = UnionLattice::build(fam, union_cap)
        .map_err(|e| GenError::BadParameters { reason: e.to_string() })?;
    let dual = dual_circuits(fam).map_err(|e| GenError::BadParameters { reason: e.to_string() })?;
    let dual_flats = flats_from_circuits(&dual)
        .map_err(|e| GenError::BadParameters { reason: e.to_string() })?;

    let complements: BTreeSet<u64> =
        lattice.members().iter().map(|m| m.complement_in(n).bits()).collect();
    let flats_set: BTreeSet<u64> = dual_flats.members().iter().map(|m| m.bits()).collect();
    if complements != flats_set {
        return Ok(Some("complemented union lattice differs from the dual's flats".into()));
    }

    let flats = flats_from_circuits(fam)
        .map_err(|e| GenError::BadParameters { reason: e.to_string() })?;
    if coatom_complement_circuits(&flats) != dual {
        return Ok(Some("coatom complements of the flats differ from the dual circuits".into()));
    }

    for &z in lattice.members() {
        let length = lattice.length_of(z).expect("members measure themselves");
        if length != z.len() - rank(fam, z) {
            return Ok(Some(format!(
                "length {length} at {z} differs from corank {}",
                z.len() - rank(fam, z)
            )));
        }
    }
    Ok(None)
}

/// Round trip for an accepted flat family: rebuilding the union lattice from
/// its coatom-complement circuits must land on the complements of its
/// members.
fn flats_round_trip_problem(
    fam: &FlatFamily,
    union_cap: usize,
) -> Result<Option<String>, GenError> {
    let n = fam.ground().size();
    let circuits = coatom_complement_circuits(fam);
    let lattice = UnionLattice::build(&circuits, union_cap)
        .map_err(|e| GenError::BadParameters { reason: e.to_string() })?;
    let rebuilt: BTreeSet<u64> = lattice.members().iter().map(|m| m.bits()).collect();
    let complements: BTreeSet<u64> =
        fam.members().iter().map(|m| m.complement_in(n).bits()).collect();
    if rebuilt != complements {
        return Ok(Some(
            "union lattice of coatom complements differs from the complemented family".into(),
        ));
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// corpora

/// The fixed circuit corpus: every uniform matroid with 0 ≤ r ≤ n ≤ 7, the
/// two smallest complete graphs with interesting cycle spaces, and the Fano
/// plane. 39 matroids.
pub fn circuit_corpus() -> Vec<(String, CircuitFamily)> {
    let mut out = Vec::new();
    for n in 0..=7usize {
        for r in 0..=n {
            out.push((format!("uniform({r},{n})"), uniform(r, n).expect("r <= n <= 7")));
        }
    }
    out.push((
        "graphic-k4".to_string(),
        crate::generators::graphic_circuits(&GraphSpec::complete(4).expect("6 edges")),
    ));
    out.push((
        "graphic-k5".to_string(),
        crate::generators::graphic_circuits(&GraphSpec::complete(5).expect("10 edges")),
    ));
    out.push(("fano".to_string(), fano()));
    out
}

/// Fixed signed realizations for the oriented experiment.
pub fn signed_corpus() -> Result<Vec<(String, SignedFamily)>, GenError> {
    let ones = IntMatrix::from_rows(&[vec![1, 1, 1]]).expect("1x3");
    let rank2 = IntMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).expect("2x4");
    let identity =
        IntMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).expect("3x3");
    Ok(vec![
        ("ones-row".to_string(), vector_signed(&ones)?),
        ("rank2-uniform".to_string(), vector_signed(&rank2)?),
        ("identity".to_string(), vector_signed(&identity)?),
        ("graphic-k4".to_string(), graphic_signed(&GraphSpec::complete(4)?)),
        ("graphic-k5".to_string(), graphic_signed(&GraphSpec::complete(5)?)),
        (
            "multigraph".to_string(),
            graphic_signed(&GraphSpec::new(3, vec![(0, 1), (0, 1), (2, 2), (1, 2)])?),
        ),
    ])
}

/// Seeded random 3×6 integer matrices with entries in [−3, 3].
pub fn random_matrices(seed: u64, count: usize) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let data: Vec<i64> = (0..18).map(|_| rng.gen_range(-3..=3)).collect();
            IntMatrix::new(3, 6, data).expect("3x6 shape")
        })
        .collect()
}

/// Every family obtained by flipping one sign of one member (negation
/// completed). Flips whose completion reproduces the original family —
/// exactly the single-element supports — are skipped.
pub fn sign_flip_mutants(fam: &SignedFamily) -> Vec<SignedFamily> {
    let mut out = Vec::new();
    for &x in fam.members() {
        // One representative per {X, −X} pair: the canonically smaller.
        if x.negated().canonical_cmp(x) == std::cmp::Ordering::Less {
            continue;
        }
        for e in x.support().elements() {
            let flipped = flip_at(x, e);
            if flipped == x.negated() {
                continue;
            }
            let members: Vec<SignedVector> = fam
                .members()
                .iter()
                .copied()
                .filter(|&m| m != x && m != x.negated())
                .chain([flipped, flipped.negated()])
                .collect();
            out.push(
                SignedFamily::new(fam.ground().clone(), members)
                    .expect("a sign flip preserves supports, simplicity and closure"),
            );
        }
    }
    out
}

fn flip_at(x: SignedVector, e: usize) -> SignedVector {
    let (mut p, mut n) = (x.positive(), x.negative());
    if p.contains(e) {
        p = p.remove(e);
        n = n.insert(e);
    } else {
        n = n.remove(e);
        p = p.insert(e);
    }
    SignedVector::new(p, n).expect("flip keeps the halves disjoint")
}

fn oriented_instances(
    seed: u64,
    random_count: usize,
) -> Result<Vec<(String, SignedFamily)>, GenError> {
    let mut originals = signed_corpus()?;
    for (i, m) in random_matrices(seed, random_count).into_iter().enumerate() {
        originals.push((format!("random-{i}"), vector_signed(&m)?));
    }
    let mut instances = Vec::new();
    for (name, fam) in originals {
        for (k, mutant) in sign_flip_mutants(&fam).into_iter().enumerate() {
            instances.push((format!("{name}-mutant-{k}"), mutant));
        }
        instances.push((name, fam));
    }
    Ok(instances)
}

// ---------------------------------------------------------------------------
// shard plumbing

fn gate(n: usize, plain: usize, big: usize, big_enabled: bool, what: &str) -> Result<(), GenError> {
    let limit = if big_enabled { big } else { plain };
    if n == 0 || n > limit {
        return Err(GenError::BadParameters {
            reason: format!("{what} supports 1..={limit} elements here, got {n}"),
        });
    }
    Ok(())
}

/// Run the shard closure over the requested shards, possibly on worker
/// threads, and merge results in shard order.
fn fan_out(
    options: &ExperimentOptions,
    run: impl Fn(usize, usize) -> Result<ShardOut, GenError> + Sync,
) -> Result<(u64, Vec<Value>), GenError> {
    let shards = options.shards.max(1);
    if let Some(s) = options.shard {
        if s >= shards {
            return Err(GenError::BadParameters {
                reason: format!("shard {s} out of range for {shards} shards"),
            });
        }
    }
    let todo: Vec<usize> = match options.shard {
        Some(s) => vec![s],
        None => (0..shards).collect(),
    };
    let workers = options.threads.max(1).min(todo.len());
    let mut outputs: Vec<Option<Result<ShardOut, GenError>>> = Vec::new();
    if workers <= 1 {
        for &s in &todo {
            outputs.push(Some(run(shards, s)));
        }
    } else {
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<Result<ShardOut, GenError>>>> =
            todo.iter().map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= todo.len() {
                        break;
                    }
                    let result = run(shards, todo[i]);
                    *slots[i].lock().unwrap() = Some(result);
                });
            }
        });
        outputs = slots.into_iter().map(|m| m.into_inner().unwrap()).collect();
    }
    let mut instances = 0u64;
    let mut witnesses = Vec::new();
    for out in outputs {
        let shard = out.expect("every shard ran")?;
        instances += shard.instances;
        witnesses.extend(shard.witnesses);
    }
    Ok((instances, witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> ExperimentOptions {
        ExperimentOptions { threads: 1, ..ExperimentOptions::default() }
    }

    #[test]
    fn theorem_main_small() {
        let report = run_experiment(ExperimentKind::TheoremMain, 4, &opts()).unwrap();
        assert_eq!(report.instances, 167);
        assert_eq!(report.counterexamples, 0);
        assert!(report.witnesses.is_empty());
        assert_eq!(report.kind, "theorem-main");
    }

    #[test]
    fn newcrapo_small() {
        let report = run_experiment(ExperimentKind::Newcrapo, 2, &opts()).unwrap();
        assert_eq!(report.instances, 7);
        assert_eq!(report.counterexamples, 0);
    }

    /// The up-length-2 flat validator is genuinely weaker than the all-members
    /// oracle under ground-set separation: {∅,{x},{x,y},{x,z},E} is clean at
    /// its only up-length-2 member {x} (blocks {y},{z}), but its bottom has a
    /// single cover {x} whose block misses y and z. The experiment's job is to
    /// find and serialize exactly these — three labelings on three elements,
    /// and 102 families on four.
    #[test]
    fn newcrapo_finds_the_ground_form_divergences() {
        let report = run_experiment(ExperimentKind::Newcrapo, 3, &opts()).unwrap();
        assert_eq!(report.instances, 61);
        assert_eq!(report.counterexamples, 3);
        let mut families: Vec<Vec<Vec<String>>> = report
            .witnesses
            .iter()
            .map(|w| {
                assert_eq!(w["restricted_accepted"], json!(true));
                assert_eq!(w["full_accepted"], json!(false));
                serde_json::from_value(w["family"]["flats"].clone()).unwrap()
            })
            .collect();
        families.sort();
        let fam = |sets: &[&str]| -> Vec<Vec<String>> {
            sets.iter()
                .map(|s| s.chars().map(|c| c.to_string()).collect())
                .collect()
        };
        let mut expected = vec![
            fam(&["", "a", "ab", "ac", "abc"]),
            fam(&["", "b", "ab", "bc", "abc"]),
            fam(&["", "c", "ac", "bc", "abc"]),
        ];
        expected.sort();
        assert_eq!(families, expected);

        let four = run_experiment(ExperimentKind::Newcrapo, 4, &opts()).unwrap();
        assert_eq!(four.instances, 2480);
        assert_eq!(four.counterexamples, 102);
        for w in &four.witnesses {
            assert_eq!(w["restricted_accepted"], json!(true));
            assert_eq!(w["full_accepted"], json!(false));
        }
    }

    #[test]
    fn sharding_and_threads_change_nothing() {
        let base = run_experiment(ExperimentKind::TheoremMain, 4, &opts()).unwrap();
        let sharded = run_experiment(
            ExperimentKind::TheoremMain,
            4,
            &ExperimentOptions { shards: 5, threads: 4, ..ExperimentOptions::default() },
        )
        .unwrap();
        assert_eq!(base.instances, sharded.instances);
        assert_eq!(base.counterexamples, sharded.counterexamples);

        // A single shard covers a strict, deterministic subset.
        let only = run_experiment(
            ExperimentKind::TheoremMain,
            4,
            &ExperimentOptions { shards: 5, shard: Some(2), threads: 1, ..Default::default() },
        )
        .unwrap();
        assert!(only.instances < base.instances);
        let again = run_experiment(
            ExperimentKind::TheoremMain,
            4,
            &ExperimentOptions { shards: 5, shard: Some(2), threads: 1, ..Default::default() },
        )
        .unwrap();
        assert_eq!(only.instances, again.instances);
    }

    #[test]
    fn oriented_equiv_mini() {
        // Tiny run: corpus plus 3 random matrices, single thread.
        let options = ExperimentOptions { random_matrices: 3, threads: 1, ..Default::default() };
        let report = run_experiment(ExperimentKind::OrientedEquiv, 0, &options).unwrap();
        assert_eq!(report.counterexamples, 0);
        assert!(report.instances > 9, "originals plus their mutants");
    }

    #[test]
    fn cryptomorphism_small() {
        let report = run_experiment(ExperimentKind::Cryptomorphism, 3, &opts()).unwrap();
        assert_eq!(report.counterexamples, 0, "witnesses: {:?}", report.witnesses);
        // 39 corpus matroids plus the accepted Moore families on [3].
        assert!(report.instances > 39);
    }

    #[test]
    fn gates_reject_out_of_range_sizes() {
        assert!(run_experiment(ExperimentKind::TheoremMain, 6, &opts()).is_err());
        assert!(run_experiment(ExperimentKind::Newcrapo, 5, &opts()).is_err());
        assert!(run_experiment(ExperimentKind::Cryptomorphism, 0, &opts()).is_err());
        let bad_shard = ExperimentOptions { shards: 2, shard: Some(2), ..Default::default() };
        assert!(run_experiment(ExperimentKind::TheoremMain, 3, &bad_shard).is_err());
    }

    #[test]
    fn corpora_have_the_documented_shapes() {
        let corpus = circuit_corpus();
        assert_eq!(corpus.len(), 39);
        assert_eq!(signed_corpus().unwrap().len(), 6);
        let mats = random_matrices(7, 5);
        assert_eq!(mats, random_matrices(7, 5), "seeded generation is stable");
        assert!(mats
            .iter()
            .all(|m| (0..3).all(|r| (0..6).all(|c| (-3..=3).contains(&m.entry(r, c))))));
    }

    #[test]
    fn mutants_change_exactly_one_pair() {
        let fam = signed_corpus().unwrap().remove(0).1; // ones-row
        let mutants = sign_flip_mutants(&fam);
        // 3 circuit pairs with 2-element supports: 6 mutants.
        assert_eq!(mutants.len(), 6);
        for m in &mutants {
            assert_ne!(m, &fam);
            assert_eq!(m.len(), fam.len());
            let same: usize =
                fam.members().iter().filter(|x| m.members().contains(x)).count();
            assert_eq!(same, fam.len() - 2);
        }
    }
}
