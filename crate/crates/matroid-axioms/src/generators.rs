//! Constructors for standard matroids, vector and graphic realizations
//! (signed and unsigned), and the exhaustive enumerators behind the
//! verification suites.

use thiserror::Error;

use crate::family::CircuitFamily;
use crate::flats::FlatFamily;
use crate::ground::{GroundSet, SubsetMask};
use crate::matrix::{IntMatrix, MatrixError};
use crate::signed::{SignedFamily, SignedVector};

/// Largest ground set for subset-enumerating constructors.
pub const MAX_GEN_GROUND: usize = 20;
/// Largest ground set for antichain enumeration (7.8M families at 6).
pub const MAX_ANTICHAIN_GROUND: usize = 6;
/// Largest ground set for Moore-family enumeration (1.4M families at 5).
pub const MAX_MOORE_GROUND: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("bad parameters: {reason}")]
    BadParameters { reason: String },
    #[error("integer overflow during exact elimination")]
    Overflow,
}

impl From<MatrixError> for GenError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::Overflow => GenError::Overflow,
            other => GenError::BadParameters { reason: other.to_string() },
        }
    }
}

fn bad(reason: impl Into<String>) -> GenError {
    GenError::BadParameters { reason: reason.into() }
}

// ---------------------------------------------------------------------------
// uniform matroids

/// Circuits of the uniform matroid of rank `r` on `n` elements: every
/// (r+1)-subset. Empty when r = n (the free matroid).
pub fn uniform(r: usize, n: usize) -> Result<CircuitFamily, GenError> {
    if n > MAX_GEN_GROUND {
        return Err(bad(format!("ground set of {n} exceeds the limit {MAX_GEN_GROUND}")));
    }
    if r > n {
        return Err(bad(format!("rank {r} exceeds ground size {n}")));
    }
    let ground = GroundSet::new(n).expect("n <= 20");
    let mut members = Vec::new();
    for_each_k_subset(n, r + 1, |m| members.push(m));
    members.sort_by(|a, b| a.canonical_cmp(*b));
    // Equal-sized distinct sets are automatically an antichain.
    Ok(CircuitFamily::from_canonical_unchecked(ground, members))
}

/// Visit every k-subset of {0,..,n-1} as a mask, in lexicographic order of
/// the sorted index tuples.
fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(SubsetMask)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(SubsetMask::EMPTY);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(SubsetMask::from_elements(idx.iter().copied()));
        let mut i = k - 1;
        while idx[i] == n - k + i {
            if i == 0 {
                return;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// graphic matroids

/// A multigraph: numbered vertices and an edge list that may contain
/// parallel edges and self-loops. The stored direction of each edge is the
/// reference orientation for signed circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, GenError> {
        if vertices > 64 {
            return Err(bad(format!("{vertices} vertices exceed the limit 64")));
        }
        if edges.len() > 64 {
            return Err(bad(format!("{} edges exceed the limit 64", edges.len())));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(bad(format!("edge ({u}, {v}) has an endpoint out of range")));
        }
        Ok(GraphSpec { vertices, edges })
    }

    /// The complete graph on `k` vertices, edges in lexicographic order.
    pub fn complete(k: usize) -> Result<Self, GenError> {
        let mut edges = Vec::new();
        for u in 0..k {
            for v in u + 1..k {
                edges.push((u, v));
            }
        }
        GraphSpec::new(k, edges)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Edge sets of the simple cycles of the graph: the circuits of its cycle
/// matroid. Self-loops give 1-cycles, parallel pairs 2-cycles.
pub fn graphic_circuits(g: &GraphSpec) -> CircuitFamily {
    let ground = GroundSet::new(g.edges.len()).expect("at most 64 edges");
    let mut members = Vec::new();
    emit_cycles(g, |pos, neg| members.push(pos.union(neg)));
    members.sort_by(|a, b| a.canonical_cmp(*b));
    // Distinct simple cycles are incomparable edge sets.
    CircuitFamily::from_canonical_unchecked(ground, members)
}

/// Signed circuits of the graph: each cycle signed by traversal direction
/// against the reference orientation, emitted with both global signs.
pub fn graphic_signed(g: &GraphSpec) -> SignedFamily {
    let ground = GroundSet::new(g.edges.len()).expect("at most 64 edges");
    let mut members = Vec::new();
    emit_cycles(g, |pos, neg| {
        members.push(SignedVector::new(pos, neg).expect("cycle halves are disjoint"));
        members.push(SignedVector::new(neg, pos).expect("cycle halves are disjoint"));
    });
    SignedFamily::new(ground, members).expect("graph cycles form valid signed circuits")
}

/// Visit each simple cycle once as (forward edges, backward edges),
/// anchoring every cycle at its smallest edge id.
fn emit_cycles(g: &GraphSpec, mut f: impl FnMut(SubsetMask, SubsetMask)) {
    for (anchor, &(u, v)) in g.edges.iter().enumerate() {
        if u == v {
            f(SubsetMask::singleton(anchor), SubsetMask::EMPTY);
            continue;
        }
        // The rest of the cycle is a simple path v -> u through edges with
        // larger ids; each cycle has exactly one such path.
        let mut visited = SubsetMask::singleton(v);
        let mut pos = SubsetMask::singleton(anchor);
        let mut neg = SubsetMask::EMPTY;
        path_search(g, anchor, u, v, &mut visited, &mut pos, &mut neg, &mut f);
    }
}

#[allow(clippy::too_many_arguments)]
fn path_search(
    g: &GraphSpec,
    anchor: usize,
    target: usize,
    cur: usize,
    visited: &mut SubsetMask,
    pos: &mut SubsetMask,
    neg: &mut SubsetMask,
    f: &mut impl FnMut(SubsetMask, SubsetMask),
) {
    for (e, &(a, b)) in g.edges.iter().enumerate().skip(anchor + 1) {
        if a == b || pos.contains(e) || neg.contains(e) {
            continue;
        }
        let other = if a == cur {
            b
        } else if b == cur {
            a
        } else {
            continue;
        };
        let forward = a == cur;
        if other == target {
            let (p, n) = if forward { (pos.insert(e), *neg) } else { (*pos, neg.insert(e)) };
            f(p, n);
            continue;
        }
        if visited.contains(other) {
            continue;
        }
        *visited = visited.insert(other);
        if forward {
            *pos = pos.insert(e);
        } else {
            *neg = neg.insert(e);
        }
        path_search(g, anchor, target, other, visited, pos, neg, f);
        if forward {
            *pos = pos.remove(e);
        } else {
            *neg = neg.remove(e);
        }
        *visited = visited.remove(other);
    }
}

/// Signed vertex-edge incidence matrix: column of edge (u, v) has −1 at
/// row u and +1 at row v; self-loops give zero columns.
pub fn incidence_matrix(g: &GraphSpec) -> IntMatrix {
    let mut data = vec![0i64; g.vertices * g.edges.len()];
    let cols = g.edges.len();
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        if u != v {
            data[u * cols + e] -= 1;
            data[v * cols + e] += 1;
        }
    }
    IntMatrix::new(g.vertices, cols, data).expect("incidence shape is consistent")
}

// ---------------------------------------------------------------------------
// vector matroids

/// Minimal linearly dependent column sets of the matrix, by exact
/// arithmetic. Candidate subsets never need more than rank+1 columns.
pub fn vector_circuits(m: &IntMatrix) -> Result<CircuitFamily, GenError> {
    let masks = vector_circuit_masks(m)?;
    let ground = GroundSet::new(m.cols()).expect("at most 64 columns");
    Ok(CircuitFamily::from_canonical_unchecked(ground, masks))
}

/// Signed circuits: the sign pattern of the one-dimensional kernel of each
/// circuit's columns, emitted with both global signs.
pub fn vector_signed(m: &IntMatrix) -> Result<SignedFamily, GenError> {
    let masks = vector_circuit_masks(m)?;
    let ground = GroundSet::new(m.cols()).expect("at most 64 columns");
    let mut members = Vec::new();
    for mask in masks {
        let cols: Vec<usize> = mask.elements().collect();
        let signs = match m.kernel_sign_pattern(&cols) {
            Ok(s) => s,
            Err(MatrixError::Overflow) => return Err(GenError::Overflow),
            Err(e) => unreachable!("enumerated circuits are genuine: {e}"),
        };
        let pos = SubsetMask::from_elements(
            cols.iter().zip(&signs).filter(|&(_, &s)| s > 0).map(|(&c, _)| c),
        );
        let neg = SubsetMask::from_elements(
            cols.iter().zip(&signs).filter(|&(_, &s)| s < 0).map(|(&c, _)| c),
        );
        members.push(SignedVector::new(pos, neg).expect("kernel halves are disjoint"));
        members.push(SignedVector::new(neg, pos).expect("kernel halves are disjoint"));
    }
    Ok(SignedFamily::new(ground, members).expect("matrix kernels form valid signed circuits"))
}

fn vector_circuit_masks(m: &IntMatrix) -> Result<Vec<SubsetMask>, GenError> {
    let n = m.cols();
    let full_rank = m.column_rank(SubsetMask::full(n))?;
    let max_size = n.min(full_rank + 1);
    let work: u128 = (1..=max_size).map(|s| binomial(n as u64, s as u64)).sum();
    if work > 50_000_000 {
        return Err(bad(format!("{work} candidate column sets is beyond desk scale")));
    }
    let mut circuits: Vec<SubsetMask> = Vec::new();
    for s in 1..=max_size {
        let mut level = Vec::new();
        for_each_k_subset(n, s, |cand| level.push(cand));
        for cand in level {
            if circuits.iter().any(|c| c.is_subset_of(cand)) {
                continue;
            }
            if m.column_rank(cand)? < s {
                circuits.push(cand);
            }
        }
    }
    circuits.sort_by(|a, b| a.canonical_cmp(*b));
    Ok(circuits)
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k.min(n));
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    out
}

// ---------------------------------------------------------------------------
// the Fano plane

/// Circuits of the Fano matroid on 7 points: the 7 three-point lines and
/// their 7 four-point complements. Lines are the xor-zero triples of 1..7.
pub fn fano() -> CircuitFamily {
    let ground = GroundSet::new(7).expect("7 <= 64");
    let mut members = Vec::new();
    for a in 1u8..=7 {
        for b in a + 1..=7 {
            let c = a ^ b;
            if c > b {
                let line = SubsetMask::from_elements(
                    [a, b, c].iter().map(|&p| (p - 1) as usize),
                );
                members.push(line);
                members.push(line.complement_in(7));
            }
        }
    }
    members.sort_by(|a, b| a.canonical_cmp(*b));
    CircuitFamily::new(ground, members).expect("lines and complements form an antichain")
}

// ---------------------------------------------------------------------------
// exhaustive enumeration: antichains

/// Visit every antichain of nonempty subsets of an n-element ground set,
/// including the empty family; returns how many were visited.
pub fn enumerate_antichains(
    n: usize,
    visitor: impl FnMut(&CircuitFamily),
) -> Result<u64, GenError> {
    enumerate_antichains_sharded(n, 1, 0, visitor)
}

/// Shard of the antichain enumeration: the branch below first member i goes
/// to shard (i+1) mod shards, the empty family to shard 0. Shards are
/// disjoint and their union is the full enumeration.
pub fn enumerate_antichains_sharded(
    n: usize,
    shards: usize,
    shard: usize,
    mut visitor: impl FnMut(&CircuitFamily),
) -> Result<u64, GenError> {
    if n == 0 || n > MAX_ANTICHAIN_GROUND {
        return Err(bad(format!("antichain enumeration supports 1..={MAX_ANTICHAIN_GROUND} elements, got {n}")));
    }
    check_shard(shards, shard)?;
    let ground = GroundSet::new(n).expect("n <= 6");
    let mut subsets: Vec<SubsetMask> =
        (1..(1u64 << n)).map(SubsetMask::from_bits).collect();
    subsets.sort_by(|a, b| a.canonical_cmp(*b));
    let mut count = 0u64;
    let mut current: Vec<SubsetMask> = Vec::new();
    if shard == 0 {
        visitor(&CircuitFamily::from_canonical_unchecked(ground.clone(), Vec::new()));
        count += 1;
    }
    for i in 0..subsets.len() {
        if (i + 1) % shards != shard {
            continue;
        }
        current.push(subsets[i]);
        antichain_dfs(&ground, &subsets, i + 1, &mut current, &mut visitor, &mut count);
        current.pop();
    }
    Ok(count)
}

fn antichain_dfs(
    ground: &GroundSet,
    subsets: &[SubsetMask],
    start: usize,
    current: &mut Vec<SubsetMask>,
    visitor: &mut impl FnMut(&CircuitFamily),
    count: &mut u64,
) {
    visitor(&CircuitFamily::from_canonical_unchecked(ground.clone(), current.clone()));
    *count += 1;
    for i in start..subsets.len() {
        let cand = subsets[i];
        // Canonical order refines inclusion: earlier members can only be
        // subsets of cand, never supersets.
        if current.iter().any(|&m| m.is_subset_of(cand)) {
            continue;
        }
        current.push(cand);
        antichain_dfs(ground, subsets, i + 1, current, visitor, count);
        current.pop();
    }
}

// ---------------------------------------------------------------------------
// exhaustive enumeration: Moore families

/// Visit every intersection-closed family of subsets of an n-element ground
/// set that contains the ground set; returns how many were visited.
pub fn enumerate_moore_families(
    n: usize,
    visitor: impl FnMut(&FlatFamily),
) -> Result<u64, GenError> {
    enumerate_moore_families_sharded(n, 1, 0, visitor)
}

/// Shard of the Moore-family enumeration, split by the inclusion pattern of
/// the coatom layer (the n subsets of size n−1) modulo `shards`.
pub fn enumerate_moore_families_sharded(
    n: usize,
    shards: usize,
    shard: usize,
    mut visitor: impl FnMut(&FlatFamily),
) -> Result<u64, GenError> {
    if n == 0 || n > MAX_MOORE_GROUND {
        return Err(bad(format!("Moore-family enumeration supports 1..={MAX_MOORE_GROUND} elements, got {n}")));
    }
    check_shard(shards, shard)?;
    let ground = GroundSet::new(n).expect("n <= 5");
    // All subsets in descending (size, value) order: adding sets in this
    // order keeps every forced intersection strictly ahead of the cursor.
    let mut order: Vec<SubsetMask> = (0..(1u64 << n)).map(SubsetMask::from_bits).collect();
    order.sort_by(|a, b| b.canonical_cmp(*a));
    let mut position = vec![0usize; 1 << n];
    for (p, &m) in order.iter().enumerate() {
        position[m.bits() as usize] = p;
    }
    let layer = n; // positions 1..=n hold the size n−1 subsets
    let mut count = 0u64;
    for pattern in 0u64..(1 << layer) {
        if (pattern as usize) % shards != shard {
            continue;
        }
        let mut family: Vec<SubsetMask> = vec![order[0]];
        let mut family_bits: u64 = 1;
        for j in 0..layer {
            if pattern & (1 << j) != 0 {
                family.push(order[1 + j]);
                family_bits |= 1 << (1 + j);
            }
        }
        let mut forced: u64 = 0;
        for i in 1..family.len() {
            for j in i + 1..family.len() {
                let inter = family[i].intersect(family[j]);
                let p = position[inter.bits() as usize];
                if family_bits & (1 << p) == 0 {
                    forced |= 1 << p;
                }
            }
        }
        moore_dfs(
            &ground,
            &order,
            &position,
            layer + 1,
            &mut family,
            family_bits,
            forced,
            &mut visitor,
            &mut count,
        );
    }
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn moore_dfs(
    ground: &GroundSet,
    order: &[SubsetMask],
    position: &[usize],
    pos: usize,
    family: &mut Vec<SubsetMask>,
    family_bits: u64,
    forced: u64,
    visitor: &mut impl FnMut(&FlatFamily),
    count: &mut u64,
) {
    if pos == order.len() {
        debug_assert_eq!(forced, 0, "forced sets always lie ahead of the cursor");
        let mut members = family.clone();
        members.reverse();
        visitor(&FlatFamily::from_canonical_unchecked(ground.clone(), members));
        *count += 1;
        return;
    }
    let bit = 1u64 << pos;
    if forced & bit == 0 {
        moore_dfs(ground, order, position, pos + 1, family, family_bits, forced, visitor, count);
    }
    // Include order[pos]: intersections with the current members become
    // forced; every one of them is strictly smaller, hence ahead of us.
    let cand = order[pos];
    let mut new_forced = forced & !bit;
    for &m in family.iter() {
        let inter = cand.intersect(m);
        if inter == cand {
            continue;
        }
        let p = position[inter.bits() as usize];
        debug_assert!(p > pos);
        if (family_bits | bit) & (1 << p) == 0 {
            new_forced |= 1 << p;
        }
    }
    family.push(cand);
    moore_dfs(
        ground,
        order,
        position,
        pos + 1,
        family,
        family_bits | bit,
        new_forced,
        visitor,
        count,
    );
    family.pop();
}

fn check_shard(shards: usize, shard: usize) -> Result<(), GenError> {
    if shards == 0 {
        return Err(bad("shard count must be positive"));
    }
    if shard >= shards {
        return Err(bad(format!("shard {shard} out of range for {shards} shards")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{check_circuits_full, rank};
    use crate::flats::check_flats_full;
    use crate::oriented::check_signed_classic;

    #[test]
    fn uniform_families() {
        let u24 = uniform(2, 4).unwrap();
        let got: Vec<u64> = u24.members().iter().map(|m| m.bits()).collect();
        assert_eq!(got, vec![0b0111, 0b1011, 0b1101, 0b1110]);
        assert!(uniform(3, 3).unwrap().is_empty());
        let loops = uniform(0, 2).unwrap();
        let got: Vec<u64> = loops.members().iter().map(|m| m.bits()).collect();
        assert_eq!(got, vec![0b01, 0b10]);
        assert!(uniform(3, 2).is_err());
        assert!(uniform(1, 21).is_err());
    }

    #[test]
    fn triangle_circuits_and_signs() {
        let g = GraphSpec::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let circuits = graphic_circuits(&g);
        assert_eq!(circuits.members(), &[SubsetMask::from_bits(0b111)]);
        // Traverse 0→1 on edge 0, 1→2 on edge 2 (forward), 2→0 on edge 1
        // (against its stored direction).
        let signed = graphic_signed(&g);
        assert_eq!(signed.len(), 2);
        let expected = SignedVector::new(
            SubsetMask::from_bits(0b101),
            SubsetMask::from_bits(0b010),
        )
        .unwrap();
        assert!(signed.contains(&expected));
        assert!(signed.contains(&expected.negated()));
    }

    #[test]
    fn k4_circuits_match_the_known_seven() {
        let circuits = graphic_circuits(&GraphSpec::complete(4).unwrap());
        let got: Vec<u64> = circuits.members().iter().map(|m| m.bits()).collect();
        assert_eq!(
            got,
            vec![0b001011, 0b010101, 0b100110, 0b111000, 0b011110, 0b101101, 0b110011]
        );
        assert!(check_circuits_full(&circuits).accepted());
    }

    #[test]
    fn degenerate_graph_pieces() {
        let parallel = GraphSpec::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(
            graphic_circuits(&parallel).members(),
            &[SubsetMask::from_bits(0b11)]
        );
        let loop_graph = GraphSpec::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(
            graphic_circuits(&loop_graph).members(),
            &[SubsetMask::from_bits(0b01)]
        );
        let lonely = GraphSpec::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(graphic_circuits(&lonely).is_empty());
        assert!(GraphSpec::new(2, vec![(0, 2)]).is_err());
        assert!(GraphSpec::complete(12).is_err());
    }

    #[test]
    fn graphic_and_incidence_realizations_agree() {
        for g in [
            GraphSpec::complete(4).unwrap(),
            GraphSpec::new(3, vec![(0, 1), (0, 1), (2, 2), (1, 2)]).unwrap(),
        ] {
            let m = incidence_matrix(&g);
            assert_eq!(vector_circuits(&m).unwrap(), graphic_circuits(&g));
            assert_eq!(vector_signed(&m).unwrap(), graphic_signed(&g));
        }
    }

    #[test]
    fn vector_realizations() {
        let ones = IntMatrix::from_rows(&[vec![1, 1, 1]]).unwrap();
        let signed = vector_signed(&ones).unwrap();
        assert_eq!(signed.len(), 6);
        for (p, n) in [(0b001, 0b010), (0b001, 0b100), (0b010, 0b100)] {
            let v = SignedVector::new(SubsetMask::from_bits(p), SubsetMask::from_bits(n)).unwrap();
            assert!(signed.contains(&v), "missing {v}");
            assert!(signed.contains(&v.negated()));
        }

        let u24 = IntMatrix::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(vector_circuits(&u24).unwrap(), uniform(2, 4).unwrap());
        assert!(check_signed_classic(&vector_signed(&u24).unwrap()).accepted());

        let id = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(vector_circuits(&id).unwrap().is_empty());

        let with_loop = IntMatrix::from_rows(&[vec![1, 0]]).unwrap();
        let circs = vector_circuits(&with_loop).unwrap();
        assert_eq!(circs.members(), &[SubsetMask::from_bits(0b10)]);
    }

    #[test]
    fn fano_has_the_expected_shape() {
        let f = fano();
        assert_eq!(f.len(), 14);
        assert!(check_circuits_full(&f).accepted());
        assert_eq!(rank(&f, SubsetMask::full(7)), 3);
        let lines: Vec<SubsetMask> =
            f.members().iter().copied().filter(|m| m.len() == 3).collect();
        assert_eq!(lines.len(), 7);
        for (i, &a) in lines.iter().enumerate() {
            for &b in &lines[i + 1..] {
                assert_eq!(a.intersect(b).len(), 1, "lines {a} and {b}");
            }
        }
    }

    #[test]
    fn antichain_counts() {
        for (n, expected) in [(1, 2u64), (2, 5), (3, 19), (4, 167), (5, 7580)] {
            let mut seen = 0u64;
            let count = enumerate_antichains(n, |_| seen += 1).unwrap();
            assert_eq!(count, expected, "n = {n}");
            assert_eq!(seen, expected);
        }
        assert!(enumerate_antichains(0, |_| {}).is_err());
        assert!(enumerate_antichains(7, |_| {}).is_err());
    }

    #[test]
    fn moore_family_counts() {
        for (n, expected) in [(1, 2u64), (2, 7), (3, 61), (4, 2480)] {
            let mut all_valid = true;
            let count = enumerate_moore_families(n, |f| {
                all_valid &= f.contains(SubsetMask::full(n));
            })
            .unwrap();
            assert_eq!(count, expected, "n = {n}");
            assert!(all_valid);
        }
        assert!(enumerate_moore_families(0, |_| {}).is_err());
        assert!(enumerate_moore_families(6, |_| {}).is_err());
    }

    #[test]
    #[ignore = "about a minute: 1.4M families"]
    fn moore_family_count_n5() {
        assert_eq!(enumerate_moore_families(5, |_| {}).unwrap(), 1385552);
    }

    #[test]
    fn shards_partition_the_enumerations() {
        let mut whole: Vec<Vec<u64>> = Vec::new();
        enumerate_antichains(4, |f| {
            whole.push(f.members().iter().map(|m| m.bits()).collect())
        })
        .unwrap();
        let mut sharded: Vec<Vec<u64>> = Vec::new();
        let mut total = 0;
        for shard in 0..3 {
            total += enumerate_antichains_sharded(4, 3, shard, |f| {
                sharded.push(f.members().iter().map(|m| m.bits()).collect())
            })
            .unwrap();
        }
        assert_eq!(total, 167);
        whole.sort();
        sharded.sort();
        assert_eq!(whole, sharded);

        let mut whole: Vec<Vec<u64>> = Vec::new();
        enumerate_moore_families(3, |f| {
            whole.push(f.members().iter().map(|m| m.bits()).collect())
        })
        .unwrap();
        let mut sharded: Vec<Vec<u64>> = Vec::new();
        for shard in 0..4 {
            enumerate_moore_families_sharded(3, 4, shard, |f| {
                sharded.push(f.members().iter().map(|m| m.bits()).collect())
            })
            .unwrap();
        }
        whole.sort();
        sharded.sort();
        assert_eq!(whole, sharded);

        assert!(enumerate_antichains_sharded(3, 2, 2, |_| {}).is_err());
        assert!(enumerate_moore_families_sharded(3, 0, 0, |_| {}).is_err());
    }

    #[test]
    fn generated_families_pass_their_validators() {
        for fam in [
            uniform(2, 4).unwrap(),
            uniform(0, 3).unwrap(),
            uniform(4, 4).unwrap(),
            graphic_circuits(&GraphSpec::complete(4).unwrap()),
            fano(),
        ] {
            assert!(check_circuits_full(&fam).accepted());
        }
        assert!(check_signed_classic(&graphic_signed(&GraphSpec::complete(4).unwrap())).accepted());
        // Moore families generated at n = 3 really are flat families.
        enumerate_moore_families(3, |f| {
            let _ = check_flats_full(f);
        })
        .unwrap();
    }
}
