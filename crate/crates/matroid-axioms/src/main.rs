//! Command-line front end: validate circuit / flat / signed-circuit /
//! lattice documents, derive closures, duals and flats, generate canonical
//! families, run the exhaustive verification experiments and export Hasse
//! diagrams.
//!
//! Exit codes: 0 = accepted / zero counterexamples, 1 = rejected /
//! counterexamples found / validators disagree, 2 = malformed input,
//! 3 = a resource cap was exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_axioms::io::{self, IoError};
use matroid_axioms::{
    check_circuits_full, check_circuits_modular, check_flats_full, check_flats_restricted,
    check_geometric_lattice, check_signed_classic, check_signed_modular, closure, closure_step,
    coatom_complement_circuits, dual_circuits, fano, flats_from_circuits, graphic_circuits,
    graphic_signed, is_modular_pair, run_experiment, support_family, uniform, vector_circuits,
    vector_signed, CircuitFamily, CircuitsError, ExperimentKind, ExperimentOptions, FlatsError,
    GenError, GraphSpec, GroundSet, IntMatrix, LatticeError, MatrixError, SubsetMask,
    UnionLattice, Verdict, DEFAULT_UNION_CAP,
};

/// Environment override for the union-lattice member cap (the only
/// environment variable the tool reads).
const UNION_CAP_ENV: &str = "MATROID_AXIOMS_UNION_CAP";

#[derive(Parser)]
#[command(
    name = "matroid-axioms",
    version,
    about = "Check matroid circuit, flat, signed-circuit and geometric-lattice axioms"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a family against an axiom system.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Compute derived objects from a family.
    #[command(subcommand)]
    Derive(DeriveCmd),
    /// List the modular pairs of circuits (union at height 2 in the union lattice).
    ModularPairs {
        /// Circuit file.
        file: PathBuf,
    },
    /// Print a canonical family as a JSON document.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Run an exhaustive verification experiment and print its JSON report.
    Verify(VerifyArgs),
    /// Export diagrams.
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Circuit elimination axioms on an antichain of circuits.
    Circuits {
        /// Circuit file: {"ground": [...], "circuits": [[...], ...]}.
        file: PathBuf,
        /// Which validator to run: the modular-pair test, the all-pairs
        /// test, or both (exits 1 if they disagree).
        #[arg(long, value_enum, default_value = "both")]
        mode: CircuitCheckMode,
        /// Print the rejection witness as a standalone JSON document.
        #[arg(long)]
        witness: bool,
    },
    /// Flat separation axioms on an intersection-closed family.
    Flats {
        /// Flats file: {"ground": [...], "flats": [[...], ...]}.
        file: PathBuf,
        /// Which validator to run: separation only at flats with up-length
        /// two, separation at every flat, or both (exits 1 if they disagree).
        #[arg(long, value_enum, default_value = "both")]
        mode: FlatCheckMode,
        /// Print the rejection witness as a standalone JSON document.
        #[arg(long)]
        witness: bool,
    },
    /// Signed elimination axioms on a family of signed circuits.
    Signed {
        /// Signed file: {"ground": [...], "circuits": [{"+": [...], "-": [...]}, ...]}.
        file: PathBuf,
        /// Which validator to run: elimination on modular support pairs,
        /// classic elimination on all pairs, or both (exits 1 if they disagree).
        #[arg(long, value_enum, default_value = "both")]
        mode: SignedCheckMode,
        /// Print the rejection witness as a standalone JSON document.
        #[arg(long)]
        witness: bool,
        /// Keep the file's listing as-is instead of completing each circuit
        /// with its negation.
        #[arg(long)]
        no_complete: bool,
    },
    /// Geometric-lattice recognition via atom separation at up-length-two
    /// elements.
    Lattice {
        /// Lattice file: {"elements": n, "covers": [[i,j], ...]}.
        file: PathBuf,
        /// Print the rejection witness as a standalone JSON document.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Subcommand)]
enum DeriveCmd {
    /// Flats of the matroid given by a circuit file (closures of all subsets).
    Flats {
        /// Circuit file.
        file: PathBuf,
    },
    /// Closure of a set of elements in the matroid given by a circuit file.
    Closure {
        /// Circuit file.
        file: PathBuf,
        /// Elements of the starting set, comma-separated labels.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<String>,
        /// Iterate the one-step closure operator to its fixpoint instead of
        /// applying it once.
        #[arg(long)]
        fixpoint: bool,
    },
    /// Circuits of the dual matroid.
    Dual {
        /// Circuit file.
        file: PathBuf,
    },
    /// Circuits recovered from a flat family: minimal nonempty intersections
    /// of coatom complements. Their union lattice is the flat family upside
    /// down.
    CoatomCircuits {
        /// Flats file.
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Uniform matroid U_{r,n}: every (rank+1)-subset of an n-set is a circuit.
    Uniform {
        /// Rank r.
        #[arg(short, long)]
        rank: usize,
        /// Ground-set size n.
        #[arg(short = 'n', long)]
        size: usize,
    },
    /// Cycle matroid of a graph (simple cycles as circuits).
    Graphic {
        /// Use the complete graph on this many vertices.
        #[arg(long, conflicts_with_all = ["vertices", "edges"])]
        complete: Option<usize>,
        /// Number of vertices of an explicit graph.
        #[arg(long, requires = "edges")]
        vertices: Option<usize>,
        /// Edges of an explicit graph, comma-separated "u-v" pairs
        /// (repeated pairs give parallel edges).
        #[arg(long, value_delimiter = ',', requires = "vertices")]
        edges: Vec<String>,
        /// Emit signed circuits (cycles with a traversal orientation).
        #[arg(long)]
        signed: bool,
    },
    /// The Fano plane (smallest projective plane) as a rank-3 matroid.
    Fano,
    /// Matroid of the columns of an integer matrix, by exact arithmetic.
    Vector {
        /// Matrix rows, semicolon-separated; entries whitespace-separated,
        /// e.g. "1 0 1; 0 1 1".
        #[arg(long)]
        rows: String,
        /// Emit signed circuits (signs of elementary kernel vectors).
        #[arg(long)]
        signed: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Which equivalence to verify.
    #[arg(value_enum)]
    kind: VerifyKind,
    /// Ground-set size for the exhaustive kinds (ignored by oriented-equiv).
    #[arg(long)]
    n: Option<usize>,
    /// Split the instance space into this many shards.
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Run only this shard (0-based); default runs all shards locally.
    #[arg(long)]
    shard: Option<usize>,
    /// Seed for the random-matrix corpus.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads when running all shards.
    #[arg(long)]
    threads: Option<usize>,
    /// Number of seeded random matrices for oriented-equiv.
    #[arg(long)]
    matrices: Option<usize>,
    /// Lift the default size gates (larger n; may take a long time).
    #[arg(long)]
    big: bool,
}

#[derive(Subcommand)]
enum ExportCmd {
    /// Graphviz DOT of the Hasse diagram: the union lattice of a circuit or
    /// signed file, the inclusion order of a flats file, or an explicit
    /// lattice file.
    Dot {
        /// Circuit, signed, flats or lattice file (detected by its fields).
        file: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CircuitCheckMode {
    Modular,
    Full,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlatCheckMode {
    Restricted,
    Full,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignedCheckMode {
    Modular,
    Classic,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    /// Modular-pair vs all-pairs circuit elimination over all antichains.
    TheoremMain,
    /// Restricted vs full flat separation over all Moore families.
    Newcrapo,
    /// Modular vs classic signed elimination over realizable families.
    OrientedEquiv,
    /// Circuits -> flats -> coatom complements round-trips.
    Cryptomorphism,
}

impl VerifyKind {
    fn kind(self) -> ExperimentKind {
        match self {
            VerifyKind::TheoremMain => ExperimentKind::TheoremMain,
            VerifyKind::Newcrapo => ExperimentKind::Newcrapo,
            VerifyKind::OrientedEquiv => ExperimentKind::OrientedEquiv,
            VerifyKind::Cryptomorphism => ExperimentKind::Cryptomorphism,
        }
    }
}

// ---------------------------------------------------------------------------
// failure plumbing

/// A command that could not produce a verdict at all: either the input was
/// malformed (exit 2) or a resource cap was hit (exit 3).
enum Failure {
    Malformed(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Malformed(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Malformed(m) | Failure::Cap(m) => m,
        }
    }
}

fn io_failure(e: IoError) -> Failure {
    let msg = e.to_string();
    match &e {
        IoError::Lattice(LatticeError::TooLarge { .. })
        | IoError::Lattice(LatticeError::MemberExplosion { .. })
        | IoError::Flats(FlatsError::GroundTooLarge { .. })
        | IoError::Flats(FlatsError::TooManyAtoms { .. }) => Failure::Cap(msg),
        _ => Failure::Malformed(msg),
    }
}

fn lattice_failure(e: LatticeError) -> Failure {
    let msg = e.to_string();
    match e {
        LatticeError::TooLarge { .. } | LatticeError::MemberExplosion { .. } => Failure::Cap(msg),
        _ => Failure::Malformed(msg),
    }
}

fn gen_failure(e: GenError) -> Failure {
    match e {
        GenError::BadParameters { reason } => Failure::Malformed(reason),
        GenError::Overflow => Failure::Cap(e.to_string()),
    }
}

fn matrix_failure(e: MatrixError) -> Failure {
    let msg = e.to_string();
    match e {
        MatrixError::Overflow | MatrixError::TooManyColumns { .. } => Failure::Cap(msg),
        _ => Failure::Malformed(msg),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn union_cap() -> Result<usize, Failure> {
    match std::env::var(UNION_CAP_ENV) {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            Failure::Malformed(format!("{UNION_CAP_ENV} must be a positive integer, got {s:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_UNION_CAP),
        Err(e) => Err(Failure::Malformed(format!("{UNION_CAP_ENV}: {e}"))),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

/// Print a line to stdout. When the reader closes the pipe early (e.g.
/// `... | head`), stop with the conventional SIGPIPE status instead of
/// panicking.
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    if writeln!(std::io::stdout().lock(), "{text}").is_err() {
        std::process::exit(141); // 128 + SIGPIPE
    }
}

fn label_list(ground: &GroundSet, mask: SubsetMask) -> Vec<String> {
    mask.elements().map(|i| ground.label(i)).collect()
}

// ---------------------------------------------------------------------------
// check

/// Print verdict lines (or the witness document when `want_witness`) and
/// turn a batch of named verdicts into an exit code.
fn finish_checks(
    ground: &GroundSet,
    family_doc: Value,
    runs: &[(&str, Verdict)],
    want_witness: bool,
) -> u8 {
    if want_witness {
        if let Some((_, v)) = runs.iter().find(|(_, v)| !v.accepted()) {
            let w = v.witness().expect("rejections carry a witness");
            let doc = io::witness_document(family_doc, io::witness_value(ground, w));
            emit(pretty(&doc));
        }
    } else {
        for (name, v) in runs {
            match v.witness() {
                None => emit(format_args!("{name}: accepted")),
                Some(w) => emit(format_args!("{name}: rejected — {w}")),
            }
        }
        if runs.len() == 2 && runs[0].1.accepted() != runs[1].1.accepted() {
            emit("validators disagree");
        }
    }
    u8::from(runs.iter().any(|(_, v)| !v.accepted()))
}

fn check_circuits_cmd(
    path: &Path,
    mode: CircuitCheckMode,
    witness: bool,
) -> Result<u8, Failure> {
    let fam = io::read_circuits(&read_file(path)?).map_err(io_failure)?;
    let doc = serde_json::to_value(io::circuits_doc(&fam)).expect("doc serializes");
    let runs: Vec<(&str, Verdict)> = match mode {
        CircuitCheckMode::Modular => vec![("modular", check_circuits_modular(&fam))],
        CircuitCheckMode::Full => vec![("full", check_circuits_full(&fam))],
        CircuitCheckMode::Both => vec![
            ("modular", check_circuits_modular(&fam)),
            ("full", check_circuits_full(&fam)),
        ],
    };
    Ok(finish_checks(fam.ground(), doc, &runs, witness))
}

fn check_flats_cmd(path: &Path, mode: FlatCheckMode, witness: bool) -> Result<u8, Failure> {
    let fam = io::read_flats(&read_file(path)?).map_err(io_failure)?;
    let doc = serde_json::to_value(io::flats_doc(&fam)).expect("doc serializes");
    let runs: Vec<(&str, Verdict)> = match mode {
        FlatCheckMode::Restricted => vec![("restricted", check_flats_restricted(&fam))],
        FlatCheckMode::Full => vec![("full", check_flats_full(&fam))],
        FlatCheckMode::Both => vec![
            ("restricted", check_flats_restricted(&fam)),
            ("full", check_flats_full(&fam)),
        ],
    };
    Ok(finish_checks(fam.ground(), doc, &runs, witness))
}

fn check_signed_cmd(
    path: &Path,
    mode: SignedCheckMode,
    witness: bool,
    no_complete: bool,
) -> Result<u8, Failure> {
    let fam = io::read_signed(&read_file(path)?, !no_complete).map_err(io_failure)?;
    let doc = serde_json::to_value(io::signed_doc(&fam)).expect("doc serializes");
    let runs: Vec<(&str, Verdict)> = match mode {
        SignedCheckMode::Modular => vec![("modular", check_signed_modular(&fam))],
        SignedCheckMode::Classic => vec![("classic", check_signed_classic(&fam))],
        SignedCheckMode::Both => vec![
            ("modular", check_signed_modular(&fam)),
            ("classic", check_signed_classic(&fam)),
        ],
    };
    Ok(finish_checks(fam.ground(), doc, &runs, witness))
}

fn check_lattice_cmd(path: &Path, witness: bool) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let lat = match io::read_lattice(&text) {
        Ok(lat) => lat,
        // A well-formed bounded poset that fails to be a lattice is a
        // verdict, not a parse error: the document is rejected at
        // construction.
        Err(IoError::Lattice(e @ LatticeError::NotALattice { .. })) => {
            emit(format_args!("rejected at construction — {e}"));
            return Ok(1);
        }
        Err(e) => return Err(io_failure(e)),
    };
    let v = check_geometric_lattice(&lat);
    if witness {
        if let Some(w) = v.witness() {
            let family = serde_json::to_value(io::lattice_doc(&lat)).expect("doc serializes");
            let doc = io::witness_document(family, io::lattice_witness_value(w));
            emit(pretty(&doc));
        }
    } else {
        match v.witness() {
            None => emit("geometric: accepted"),
            Some(w) => emit(format_args!("geometric: rejected — {w}")),
        }
    }
    Ok(u8::from(!v.accepted()))
}

// ---------------------------------------------------------------------------
// derive / modular-pairs

/// Map a circuit-oracle error: a non-matroid input is a rejection (exit 1,
/// witness printed), not a malformed file.
fn circuits_op_failure(e: CircuitsError) -> Result<u8, Failure> {
    match e {
        CircuitsError::NotAMatroid { witness } => {
            emit(format_args!("rejected — {witness}"));
            Ok(1)
        }
        CircuitsError::GroundTooLarge { .. } => Err(Failure::Cap(e.to_string())),
        other => Err(Failure::Malformed(other.to_string())),
    }
}

fn flats_op_failure(e: FlatsError) -> Result<u8, Failure> {
    match e {
        FlatsError::NotAMatroid { witness } => {
            emit(format_args!("rejected — {witness}"));
            Ok(1)
        }
        FlatsError::GroundTooLarge { .. } | FlatsError::TooManyAtoms { .. } => {
            Err(Failure::Cap(e.to_string()))
        }
        other => Err(Failure::Malformed(other.to_string())),
    }
}

fn derive_flats_cmd(path: &Path) -> Result<u8, Failure> {
    let fam = io::read_circuits(&read_file(path)?).map_err(io_failure)?;
    match flats_from_circuits(&fam) {
        Ok(flats) => {
            let doc = serde_json::to_value(io::flats_doc(&flats)).expect("doc serializes");
            emit(pretty(&doc));
            Ok(0)
        }
        Err(e) => flats_op_failure(e),
    }
}

fn derive_closure_cmd(path: &Path, set: &[String], fixpoint: bool) -> Result<u8, Failure> {
    let fam = io::read_circuits(&read_file(path)?).map_err(io_failure)?;
    let mut mask = SubsetMask::EMPTY;
    for label in set {
        let i = fam
            .ground()
            .index_of(label)
            .ok_or_else(|| Failure::Malformed(format!("unknown element label {label:?}")))?;
        mask = mask.insert(i);
    }
    let result = if fixpoint { closure(&fam, mask) } else { closure_step(&fam, mask) };
    let doc = json!({
        "set": label_list(fam.ground(), mask),
        "closure": label_list(fam.ground(), result),
        "fixpoint": fixpoint,
    });
    emit(pretty(&doc));
    Ok(0)
}

fn derive_dual_cmd(path: &Path) -> Result<u8, Failure> {
    let fam = io::read_circuits(&read_file(path)?).map_err(io_failure)?;
    match dual_circuits(&fam) {
        Ok(dual) => {
            let doc = serde_json::to_value(io::circuits_doc(&dual)).expect("doc serializes");
            emit(pretty(&doc));
            Ok(0)
        }
        Err(e) => circuits_op_failure(e),
    }
}

fn derive_coatom_circuits_cmd(path: &Path) -> Result<u8, Failure> {
    let fam = io::read_flats(&read_file(path)?).map_err(io_failure)?;
    let circuits = coatom_complement_circuits(&fam);
    let doc = serde_json::to_value(io::circuits_doc(&circuits)).expect("doc serializes");
    emit(pretty(&doc));
    Ok(0)
}

fn modular_pairs_cmd(path: &Path) -> Result<u8, Failure> {
    let fam = io::read_circuits(&read_file(path)?).map_err(io_failure)?;
    let members = fam.members();
    let mut pairs = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let modular = is_modular_pair(&fam, members[i], members[j])
                .map_err(lattice_failure)?;
            if modular {
                pairs.push(json!([
                    label_list(fam.ground(), members[i]),
                    label_list(fam.ground(), members[j]),
                ]));
            }
        }
    }
    let doc = json!({
        "ground": fam.ground().labels(),
        "count": pairs.len(),
        "pairs": pairs,
    });
    emit(pretty(&doc));
    Ok(0)
}

// ---------------------------------------------------------------------------
// gen

fn parse_edges(specs: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    let mut edges = Vec::with_capacity(specs.len());
    for s in specs {
        let err = || Failure::Malformed(format!("edge {s:?} is not of the form \"u-v\""));
        let (u, v) = s.split_once('-').ok_or_else(err)?;
        let u = u.trim().parse::<usize>().map_err(|_| err())?;
        let v = v.trim().parse::<usize>().map_err(|_| err())?;
        edges.push((u, v));
    }
    Ok(edges)
}

fn parse_matrix(rows: &str) -> Result<IntMatrix, Failure> {
    let mut parsed: Vec<Vec<i64>> = Vec::new();
    for row in rows.split(';') {
        let entries = row
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Failure::Malformed(format!("matrix entry {t:?} is not an integer")))
            })
            .collect::<Result<Vec<i64>, Failure>>()?;
        parsed.push(entries);
    }
    IntMatrix::from_rows(&parsed).map_err(matrix_failure)
}

fn gen_cmd(cmd: &GenCmd) -> Result<u8, Failure> {
    let doc: Value = match cmd {
        GenCmd::Uniform { rank, size } => {
            let fam = uniform(*rank, *size).map_err(gen_failure)?;
            serde_json::to_value(io::circuits_doc(&fam)).expect("doc serializes")
        }
        GenCmd::Graphic { complete, vertices, edges, signed } => {
            let graph = match (complete, vertices) {
                (Some(k), _) => GraphSpec::complete(*k).map_err(gen_failure)?,
                (None, Some(v)) => {
                    GraphSpec::new(*v, parse_edges(edges)?).map_err(gen_failure)?
                }
                (None, None) => {
                    return Err(Failure::Malformed(
                        "pass either --complete K or --vertices V --edges ...".into(),
                    ))
                }
            };
            if *signed {
                serde_json::to_value(io::signed_doc(&graphic_signed(&graph)))
                    .expect("doc serializes")
            } else {
                serde_json::to_value(io::circuits_doc(&graphic_circuits(&graph)))
                    .expect("doc serializes")
            }
        }
        GenCmd::Fano => serde_json::to_value(io::circuits_doc(&fano())).expect("doc serializes"),
        GenCmd::Vector { rows, signed } => {
            let matrix = parse_matrix(rows)?;
            if *signed {
                let fam = vector_signed(&matrix).map_err(gen_failure)?;
                serde_json::to_value(io::signed_doc(&fam)).expect("doc serializes")
            } else {
                let fam = vector_circuits(&matrix).map_err(gen_failure)?;
                serde_json::to_value(io::circuits_doc(&fam)).expect("doc serializes")
            }
        }
    };
    emit(pretty(&doc));
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify / export

fn verify_cmd(args: &VerifyArgs) -> Result<u8, Failure> {
    let kind = args.kind.kind();
    let n = match (kind, args.n) {
        (ExperimentKind::OrientedEquiv, n) => n.unwrap_or(0),
        (_, Some(0)) => return Err(Failure::Malformed("--n must be at least 1".into())),
        (_, Some(n)) => n,
        (_, None) => {
            return Err(Failure::Malformed(format!("--n is required for {kind}")));
        }
    };
    if args.shards == 0 {
        return Err(Failure::Malformed("--shards must be at least 1".into()));
    }
    if let Some(i) = args.shard {
        if i >= args.shards {
            return Err(Failure::Malformed(format!(
                "--shard {i} is out of range for --shards {}",
                args.shards
            )));
        }
    }
    let defaults = ExperimentOptions::default();
    let options = ExperimentOptions {
        shards: args.shards,
        shard: args.shard,
        threads: args.threads.unwrap_or(defaults.threads),
        seed: args.seed.unwrap_or(defaults.seed),
        random_matrices: args.matrices.unwrap_or(defaults.random_matrices),
        union_cap: union_cap()?,
        big: args.big,
    };
    // Shard bounds were validated above, so any remaining bad-parameter
    // error is a size gate: a resource cap, not a usage mistake.
    let report = run_experiment(kind, n, &options).map_err(|e| match e {
        GenError::Overflow => Failure::Cap(e.to_string()),
        GenError::BadParameters { reason } => Failure::Cap(reason),
    })?;
    let doc = serde_json::to_value(&report).expect("reports serialize");
    emit(pretty(&doc));
    Ok(u8::from(report.counterexamples > 0))
}

fn export_dot_cmd(path: &Path) -> Result<u8, Failure> {
    let text = read_file(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Malformed(format!("malformed JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::Malformed("expected a JSON object".into()))?;

    let dot = if obj.contains_key("elements") {
        let lat = io::read_lattice(&text).map_err(io_failure)?;
        io::finite_lattice_dot(&lat)
    } else if obj.contains_key("flats") {
        let fam = io::read_flats(&text).map_err(io_failure)?;
        io::flat_family_dot(&fam)
    } else if let Some(circuits) = obj.get("circuits") {
        let signed = circuits
            .as_array()
            .and_then(|a| a.first())
            .is_some_and(Value::is_object);
        let fam: CircuitFamily = if signed {
            support_family(&io::read_signed(&text, true).map_err(io_failure)?)
        } else {
            io::read_circuits(&text).map_err(io_failure)?
        };
        let lat = UnionLattice::build(&fam, union_cap()?).map_err(lattice_failure)?;
        io::union_lattice_dot(&lat)
    } else {
        return Err(Failure::Malformed(
            "file has none of the fields \"circuits\", \"flats\", \"elements\"".into(),
        ));
    };
    emit(dot.trim_end_matches('\n'));
    Ok(0)
}

// ---------------------------------------------------------------------------

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    match &cli.cmd {
        Cmd::Check(check) => match check {
            CheckCmd::Circuits { file, mode, witness } => {
                check_circuits_cmd(file, *mode, *witness)
            }
            CheckCmd::Flats { file, mode, witness } => check_flats_cmd(file, *mode, *witness),
            CheckCmd::Signed { file, mode, witness, no_complete } => {
                check_signed_cmd(file, *mode, *witness, *no_complete)
            }
            CheckCmd::Lattice { file, witness } => check_lattice_cmd(file, *witness),
        },
        Cmd::Derive(derive) => match derive {
            DeriveCmd::Flats { file } => derive_flats_cmd(file),
            DeriveCmd::Closure { file, set, fixpoint } => {
                derive_closure_cmd(file, set, *fixpoint)
            }
            DeriveCmd::Dual { file } => derive_dual_cmd(file),
            DeriveCmd::CoatomCircuits { file } => derive_coatom_circuits_cmd(file),
        },
        Cmd::ModularPairs { file } => modular_pairs_cmd(file),
        Cmd::Gen(gen) => gen_cmd(gen),
        Cmd::Verify(args) => verify_cmd(args),
        Cmd::Export(ExportCmd::Dot { file }) => export_dot_cmd(file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
