//! Counting and enumerating Gallai and transitive partitions and colorings.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{complete_graph, is_gallai, is_transitive};
use crate::error::{Error, Result};
use crate::matroid::{
    complete_edge_index, DirectedGraph, Family, Matroid, OrientedMatroid, RootSystemId, SignedCircuit,
    VectorConfig,
};
use crate::partition::{Coloring, SetPartition};
use crate::poly::{binomial, factorial, FallingPolynomial, QPolynomial};
use crate::set::ElementSet;

/// Largest ground set for scans over all 2-colorings or reorientations.
pub const TWO_COLORING_LIMIT: usize = 30;
/// Largest `n` for the brute-force count of maximal Gallai partitions of `K_n`.
pub const MAX_GALLAI_BRUTE_LIMIT: usize = 6;
/// Largest `k^m` for a direct scan over all colorings.
pub const COLORING_SCAN_LIMIT: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Gallai,
    Transitive,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Gallai => "gallai",
            Mode::Transitive => "transitive",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gallai" => Ok(Mode::Gallai),
            "transitive" => Ok(Mode::Transitive),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A matroid with the Gallai condition, or an oriented matroid with the transitive one.
#[derive(Clone, Copy, Debug)]
pub enum Problem<'a> {
    Gallai(&'a Matroid),
    Transitive(&'a OrientedMatroid),
}

impl<'a> Problem<'a> {
    pub fn mode(&self) -> Mode {
        match self {
            Problem::Gallai(_) => Mode::Gallai,
            Problem::Transitive(_) => Mode::Transitive,
        }
    }

    pub fn matroid(&self) -> &'a Matroid {
        match self {
            Problem::Gallai(m) => m,
            Problem::Transitive(om) => om.underlying(),
        }
    }

    pub fn size(&self) -> usize {
        self.matroid().size()
    }

    pub fn rank(&self) -> usize {
        self.matroid().rank()
    }

    /// Loopless for Gallai, acyclic for transitive.
    pub fn validate(&self) -> Result<()> {
        match self {
            Problem::Gallai(m) => m.require_loopless(),
            Problem::Transitive(om) => {
                om.underlying().require_loopless()?;
                om.require_acyclic()
            }
        }
    }

    pub fn is_valid(&self, c: &Coloring) -> Result<bool> {
        match self {
            Problem::Gallai(m) => Ok(is_gallai(m, c)),
            Problem::Transitive(om) => is_transitive(om, c),
        }
    }

    fn checker(&self) -> Checker {
        let m = self.size();
        let mut gallai = vec![Vec::new(); m];
        let mut trans = vec![Vec::new(); m];
        match self {
            Problem::Gallai(mat) => {
                for c in mat.circuits() {
                    gallai[ElementSet::max(*c).unwrap()].push(*c);
                }
            }
            Problem::Transitive(om) => {
                for c in om.signed_circuits() {
                    trans[c.support().max().unwrap()].push((c.pos, c.neg));
                }
            }
        }
        Checker {
            mode: self.mode(),
            gallai,
            trans,
        }
    }
}

/// Circuits grouped by their largest element, so each is tested once, right
/// after its last element receives a block.
struct Checker {
    mode: Mode,
    gallai: Vec<Vec<ElementSet>>,
    trans: Vec<Vec<(ElementSet, ElementSet)>>,
}

impl Checker {
    #[inline]
    fn ok(&self, d: usize, blk: &[u8]) -> bool {
        let mask = |s: ElementSet| s.iter().fold(0u64, |m, e| m | 1u64 << blk[e]);
        match self.mode {
            Mode::Gallai => self.gallai[d]
                .iter()
                .all(|c| (mask(*c).count_ones() as usize) < c.len()),
            Mode::Transitive => self.trans[d].iter().all(|(p, n)| mask(*p) & mask(*n) != 0),
        }
    }
}

/// Depth-first search over restricted growth strings.
struct State {
    m: usize,
    maxb: usize,
    target: Option<usize>,
    stop: usize,
    base: usize,
    blk: Vec<u8>,
    used: Vec<u8>,
    cand: Vec<u8>,
    depth: usize,
    pending_root: bool,
    done: bool,
}

impl State {
    fn new(m: usize, maxb: usize, target: Option<usize>, stop: usize, prefix: &[u8], prefix_used: u8) -> Self {
        let mut blk = vec![0u8; m];
        blk[..prefix.len()].copy_from_slice(prefix);
        let mut used = vec![0u8; m + 1];
        used[prefix.len()] = prefix_used;
        let base = prefix.len();
        let pending_root = base == stop
            && (stop < m || target.map_or(true, |t| t == prefix_used as usize));
        State {
            m,
            maxb,
            target,
            stop,
            base,
            blk,
            used,
            cand: vec![0u8; m + 1],
            depth: base,
            pending_root,
            done: base == stop,
        }
    }

    /// Advances to the next valid assignment of the first `stop` elements.
    fn advance(&mut self, chk: &Checker) -> bool {
        if self.pending_root {
            self.pending_root = false;
            return true;
        }
        if self.done {
            return false;
        }
        loop {
            let d = self.depth;
            if d == self.stop {
                self.depth -= 1;
                continue;
            }
            let u = self.used[d];
            let limit = (u as usize + 1).min(self.maxb);
            if self.cand[d] as usize >= limit {
                if d == self.base {
                    self.done = true;
                    return false;
                }
                self.depth -= 1;
                continue;
            }
            let b = self.cand[d];
            self.cand[d] += 1;
            self.blk[d] = b;
            let nu = u.max(b + 1);
            if let Some(t) = self.target {
                if (nu as usize) + (self.m - d - 1) < t {
                    continue;
                }
            }
            if !chk.ok(d, &self.blk) {
                continue;
            }
            self.used[d + 1] = nu;
            self.cand[d + 1] = 0;
            self.depth = d + 1;
            if self.depth == self.stop
                && (self.stop < self.m || self.target.map_or(true, |t| nu as usize == t))
            {
                return true;
            }
        }
    }

    fn blocks(&self) -> usize {
        self.used[self.stop] as usize
    }
}

/// Valid partitions in restricted-growth lexicographic order.
pub struct PartitionStream {
    chk: Checker,
    state: State,
}

impl Iterator for PartitionStream {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.state.advance(&self.chk) {
            Some(SetPartition::from_rgs(self.state.blk.clone()).expect("search yields restricted growth strings"))
        } else {
            None
        }
    }
}

/// Streams the valid partitions with exactly `j` blocks.
pub fn enumerate_partitions(p: Problem, j: usize) -> Result<PartitionStream> {
    p.validate()?;
    let m = p.size();
    if j > m {
        return Err(Error::invalid(format!("{j} blocks requested for a ground set of size {m}")));
    }
    Ok(PartitionStream {
        chk: p.checker(),
        state: State::new(m, j, Some(j), m, &[], 0),
    })
}

const SPLIT_MIN_SIZE: usize = 14;
const SPLIT_DEPTH: usize = 7;

/// Applies `f` to every valid partition (given as an RGS and its block count)
/// with at most `maxb` blocks, or exactly `target` blocks, in RGS order.
/// Work is split across threads by prefix; output order is deterministic.
fn par_collect<T, F>(p: Problem, maxb: usize, target: Option<usize>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[u8], usize) -> Option<T> + Sync,
{
    p.validate()?;
    let chk = p.checker();
    let m = p.size();
    let run = |prefix: &[u8], used: u8| {
        let mut st = State::new(m, maxb, target, m, prefix, used);
        let mut out = Vec::new();
        while st.advance(&chk) {
            if let Some(x) = f(&st.blk, st.blocks()) {
                out.push(x);
            }
        }
        out
    };
    if m < SPLIT_MIN_SIZE {
        return Ok(run(&[], 0));
    }
    let mut prefixes = Vec::new();
    let mut st = State::new(m, maxb, target, SPLIT_DEPTH, &[], 0);
    while st.advance(&chk) {
        prefixes.push((st.blk[..SPLIT_DEPTH].to_vec(), st.used[SPLIT_DEPTH]));
    }
    let parts: Vec<Vec<T>> = prefixes.par_iter().map(|(pre, u)| run(pre, *u)).collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Visits valid partitions with exactly `j` blocks (or every block count up
/// to the rank when `j` is `None`), mapping each through `f`.
pub fn map_partitions<T, F>(p: Problem, j: Option<usize>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&SetPartition) -> Option<T> + Sync,
{
    let maxb = j.unwrap_or(p.rank()).min(p.size());
    par_collect(p, maxb, j, |rgs, blocks| f(&SetPartition::from_rgs_unchecked(rgs, blocks)))
}

/// Number of valid partitions with `j` blocks, for `j = 0..=rank`.
pub fn partition_count_vector(p: Problem) -> Result<Vec<u64>> {
    let r = p.rank();
    let blocks = par_collect(p, r.max(1).min(p.size().max(1)), None, |_, b| Some(b))?;
    let mut counts = vec![0u64; r + 1];
    for b in blocks {
        counts[b] += 1;
    }
    Ok(counts)
}

/// The counting polynomial `Σ_j a_j (x)_j`, `a_j` = number of valid `j`-partitions.
pub fn partition_counts(p: Problem) -> Result<FallingPolynomial> {
    let v = partition_count_vector(p)?;
    Ok(FallingPolynomial::new(v.into_iter().map(BigInt::from).collect()))
}

pub fn count_colorings(p: Problem, k: u64) -> Result<BigInt> {
    Ok(partition_counts(p)?.eval(k))
}

/// Direct scan over all `k^m` colorings.
pub fn count_colorings_scan(p: Problem, k: usize) -> Result<u64> {
    p.validate()?;
    let m = p.size();
    let total = (k as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
    if total > COLORING_SCAN_LIMIT {
        return Err(Error::budget("coloring scan", COLORING_SCAN_LIMIT, total));
    }
    let mut values = vec![0usize; m];
    let mut count = 0;
    for mut code in 0..total {
        for v in values.iter_mut() {
            *v = (code % k as u64) as usize;
            code /= k as u64;
        }
        if p.is_valid(&Coloring::new(values.clone(), k)?)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `2^(number of parallel classes)`.
pub fn gallai_2count(m: &Matroid) -> Result<BigInt> {
    m.require_loopless()?;
    Ok(BigInt::one() << m.parallel_classes().num_blocks())
}

fn require_small(m: usize) -> Result<()> {
    if m > TWO_COLORING_LIMIT {
        Err(Error::budget("2-coloring scan ground size", TWO_COLORING_LIMIT as u64, m as u64))
    } else {
        Ok(())
    }
}

/// Transitive colorings with palette `{1,2}`, by depth-first scan over sign
/// vectors with each circuit checked once its last element is fixed.
pub fn transitive_2count(om: &OrientedMatroid) -> Result<BigInt> {
    om.require_acyclic()?;
    let m = om.size();
    require_small(m)?;
    let mut by_max: Vec<Vec<SignedCircuit>> = vec![Vec::new(); m];
    for c in om.signed_circuits() {
        by_max[c.support().max().unwrap()].push(*c);
    }
    fn go(e: usize, m: usize, ones: u64, by_max: &[Vec<SignedCircuit>]) -> u64 {
        if e == m {
            return 1;
        }
        let mut total = 0;
        for bit in [0u64, 1] {
            let s = ones | bit << e;
            let ok = by_max[e].iter().all(|c| {
                let cp = c.pos.bits() & s;
                let cn = c.neg.bits() & s;
                // a color is shared iff both sides meet color 1 or both meet color 0
                (cp != 0 && cn != 0) || (cp != c.pos.bits() && cn != c.neg.bits())
            });
            if ok {
                total += go(e + 1, m, s, by_max);
            }
        }
        total
    }
    Ok(BigInt::from(go(0, m, 0, &by_max)))
}

/// Distinct acyclic oriented matroids obtained by reorienting `om`, counted
/// by collecting the reoriented circuit signatures.
pub fn acyclic_reorientation_classes(om: &OrientedMatroid) -> Result<BigInt> {
    om.require_acyclic()?;
    let m = om.size();
    require_small(m)?;
    let circuits = om.signed_circuits().to_vec();
    let mut by_max: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, c) in circuits.iter().enumerate() {
        by_max[c.support().max().unwrap()].push(i);
    }
    let mut seen: HashSet<Vec<SignedCircuit>> = HashSet::new();
    fn go(
        e: usize,
        a: ElementSet,
        circuits: &[SignedCircuit],
        by_max: &[Vec<usize>],
        seen: &mut HashSet<Vec<SignedCircuit>>,
    ) {
        if e == by_max.len() {
            seen.insert(circuits.iter().map(|c| c.reorient(a)).collect());
            return;
        }
        for flip in [false, true] {
            let a2 = if flip { a.with(e) } else { a };
            if by_max[e].iter().all(|&i| !circuits[i].reorient(a2).is_positive()) {
                go(e + 1, a2, circuits, by_max, seen);
            }
        }
    }
    go(0, ElementSet::EMPTY, &circuits, &by_max, &mut seen);
    Ok(BigInt::from(seen.len()))
}

/// `transitive_2count / 2^c` with `c` the number of connected components;
/// the division must be exact.
pub fn reorientation_classes_by_division(om: &OrientedMatroid) -> Result<BigInt> {
    let t = transitive_2count(om)?;
    let c = om.connected_components().num_blocks();
    let d = BigInt::one() << c;
    let (q, r) = t.div_rem(&d);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("{t} transitive 2-colorings over 2^{c}")));
    }
    Ok(q)
}

/// Chromatic polynomial of the underlying simple graph, by deletion–contraction.
pub fn chromatic_polynomial(g: &DirectedGraph) -> QPolynomial {
    let n = g.n();
    let mut adj = vec![0u64; n];
    for &(u, v) in g.edges() {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    let mut memo = HashMap::new();
    chromatic_rec(adj, &mut memo)
}

fn chromatic_rec(adj: Vec<u64>, memo: &mut HashMap<Vec<u64>, QPolynomial>) -> QPolynomial {
    let n = adj.len();
    let Some(u) = (0..n).find(|&u| adj[u] != 0) else {
        return QPolynomial::monomial(BigInt::one(), n);
    };
    if let Some(p) = memo.get(&adj) {
        return p.clone();
    }
    let v = adj[u].trailing_zeros() as usize;
    let mut del = adj.clone();
    del[u] &= !(1 << v);
    del[v] &= !(1 << u);
    // contract v into u, then drop vertex v
    let mut con = del.clone();
    let nv = con[v];
    con[u] |= nv;
    for w in 0..n {
        if nv >> w & 1 == 1 {
            con[w] |= 1 << u;
        }
    }
    con[u] &= !(1 << u);
    let con: Vec<u64> = (0..n)
        .filter(|&w| w != v)
        .map(|w| {
            let x = con[w] & !(1 << v);
            let low = x & ((1 << v) - 1);
            let high = (x >> (v + 1)) << v;
            low | high
        })
        .collect();
    let p = &chromatic_rec(del, memo) - &chromatic_rec(con, memo);
    memo.insert(adj, p.clone());
    p
}

/// Orientations of the edges (each edge reversed or not) containing no directed cycle.
pub fn acyclic_orientation_count(g: &DirectedGraph) -> Result<BigInt> {
    let m = g.edges().len();
    require_small(m)?;
    let count = (0u64..1 << m)
        .into_par_iter()
        .filter(|&bits| g.reversed(ElementSet::from_bits(bits)).is_acyclic())
        .count();
    Ok(BigInt::from(count))
}

/// `Σ_{S ⊆ E} (-1)^|S| t^{r(E) - r(S)}`.
pub fn characteristic_polynomial(m: &Matroid) -> Result<QPolynomial> {
    let table = m.rank_table()?;
    let r = m.rank();
    let mut coeffs = vec![0i64; r + 1];
    for (s, &rs) in table.iter().enumerate() {
        let sign = if (s as u64).count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[r - rs as usize] += sign;
    }
    Ok(QPolynomial::from_i64(&coeffs))
}

/// Regions of the hyperplane arrangement dual to `v`: `(-1)^d χ_A(-1)` with
/// `χ_A(t) = t^{d-r} χ_M(t)`.
pub fn chamber_count(v: &VectorConfig) -> Result<BigInt> {
    let om = OrientedMatroid::from_vectors(v)?;
    let m = om.underlying();
    let chi = characteristic_polynomial(m)?;
    let d = v.dimension;
    let r = m.rank();
    let chi_a = chi.shift(d - r);
    let val = chi_a.eval_i64(-1);
    Ok(if d % 2 == 0 { val } else { -val })
}

pub fn maximal_gallai_partitions_kn(n: usize) -> Result<Vec<SetPartition>> {
    let k = complete_graph(n);
    enumerate_partitions(Problem::Gallai(&k), n.saturating_sub(1)).map(|s| s.collect())
}

/// Brute force: enumerate all Gallai `(n-1)`-partitions of `K_n`.
pub fn maximal_gallai_count_kn_brute(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    if n > MAX_GALLAI_BRUTE_LIMIT {
        return Err(Error::budget("brute-force maximal Gallai n", MAX_GALLAI_BRUTE_LIMIT as u64, n as u64));
    }
    let k = complete_graph(n);
    let count = map_partitions(Problem::Gallai(&k), Some(n - 1), |_| Some(()))?.len();
    Ok(BigInt::from(count))
}

/// Extension recursion: every maximal Gallai partition of `K_{n-1}` is
/// encoded by its binary total partition tree, and the ways to add vertex `n`
/// are the attachment points of a new leaf, `ext(leaf) = 1` and
/// `ext(node) = 1 + ext(left) + ext(right)`. Trees for `[n-1]` are generated
/// by the same insertion step.
pub fn maximal_gallai_count_kn_recursive(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    const NONE: usize = usize::MAX;
    struct T {
        kids: Vec<[usize; 2]>,
        parent: Vec<usize>,
        root: usize,
    }
    fn ext(t: &T, x: usize) -> u64 {
        match t.kids[x] {
            [NONE, NONE] => 1,
            [a, b] => 1 + ext(t, a) + ext(t, b),
        }
    }
    fn grow(t: &mut T, leaves: usize, target: usize) -> u64 {
        if leaves == target {
            return ext(t, t.root);
        }
        let mut total = 0;
        for x in 0..t.kids.len() {
            let leaf = t.kids.len();
            let y = leaf + 1;
            let p = t.parent[x];
            t.kids.push([NONE, NONE]);
            t.kids.push([x, leaf]);
            t.parent.push(y);
            t.parent.push(p);
            t.parent[x] = y;
            let old_root = t.root;
            if p == NONE {
                t.root = y;
            } else {
                let slot = usize::from(t.kids[p][1] == x);
                t.kids[p][slot] = y;
            }
            total += grow(t, leaves + 1, target);
            if p == NONE {
                t.root = old_root;
            } else {
                let slot = usize::from(t.kids[p][1] == y);
                t.kids[p][slot] = x;
            }
            t.parent[x] = p;
            t.kids.truncate(leaf);
            t.parent.truncate(leaf);
        }
        total
    }
    let mut t = T {
        kids: vec![[NONE, NONE]],
        parent: vec![NONE],
        root: 0,
    };
    Ok(BigInt::from(grow(&mut t, 1, n - 1)))
}

pub fn tournament(n: usize) -> OrientedMatroid {
    OrientedMatroid::from_digraph(&DirectedGraph::tournament(n))
}

pub fn maximal_transitive_partitions_tournament(n: usize) -> Result<Vec<SetPartition>> {
    let t = tournament(n);
    enumerate_partitions(Problem::Transitive(&t), n.saturating_sub(1)).map(|s| s.collect())
}

pub fn maximal_transitive_count_tournament(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let t = tournament(n);
    let count = map_partitions(Problem::Transitive(&t), Some(n - 1), |_| Some(()))?.len();
    Ok(BigInt::from(count))
}

/// Maximal Gallai partitions of `K_n` in which the path `1,2,...,n` is rainbow.
pub fn partitions_per_rainbow_path(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let k = complete_graph(n);
    let hits = map_partitions(Problem::Gallai(&k), Some(n - 1), |p| {
        let mut seen = 0u64;
        for i in 1..n {
            let b = p.block_of(complete_edge_index(n, i, i + 1));
            if seen >> b & 1 == 1 {
                return None;
            }
            seen |= 1 << b;
        }
        Some(())
    })?;
    Ok(BigInt::from(hits.len()))
}

fn require_maximal_transitive_tournament(p: &SetPartition) -> Result<usize> {
    let n = crate::coloring::complete_order(p.len())?;
    let t = tournament(n);
    if n < 2 || p.num_blocks() != n - 1 || !is_transitive(&t, &Coloring::from_partition(p))? {
        return Err(Error::NotMaximal("transitive"));
    }
    Ok(n)
}

/// Number of minimal edges: `(i,j)` is minimal when every `(a,b)` in its
/// block has `i <= a`.
pub fn edgeright(p: &SetPartition) -> Result<usize> {
    let n = require_maximal_transitive_tournament(p)?;
    Ok(edgeright_unchecked(n, p))
}

fn edgeright_unchecked(n: usize, p: &SetPartition) -> usize {
    let edges = crate::matroid::complete_edges(n);
    let mut min_tail = vec![usize::MAX; p.num_blocks()];
    for (e, &(a, _)) in edges.iter().enumerate() {
        let b = p.block_of(e);
        min_tail[b] = min_tail[b].min(a);
    }
    edges
        .iter()
        .enumerate()
        .filter(|(e, (i, _))| *i <= min_tail[p.block_of(*e)])
        .count()
}

/// `Σ_p q^{edgeright(p)}` over maximal transitive partitions of the tournament.
pub fn qcatalan_distribution(n: usize) -> Result<QPolynomial> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let t = tournament(n);
    let stats = map_partitions(Problem::Transitive(&t), Some(n - 1), |p| Some(edgeright_unchecked(n, p)))?;
    let mut coeffs = vec![0i64; n * (n - 1) / 2 + 1];
    for s in stats {
        coeffs[s] += 1;
    }
    Ok(QPolynomial::from_i64(&coeffs))
}

/// `C_{n+1}(q) = Σ_{k=0}^{n} q^{(k+1)(n-k)} C_k(q) C_{n-k}(q)`, `C_0 = 1`.
pub fn carlitz_riordan(n: usize) -> QPolynomial {
    let mut c = vec![QPolynomial::one()];
    for m in 0..n {
        let mut next = QPolynomial::zero();
        for k in 0..=m {
            next = &next + &(&c[k] * &c[m - k]).shift((k + 1) * (m - k));
        }
        c.push(next);
    }
    c.swap_remove(n)
}

/// Maximal transitive colorings (all `n-1` colors used) of the `n`-cycle with
/// `m_cw` clockwise edges, counted as partitions times `(n-1)!`.
pub fn cycle_maximal_transitive_count(n: usize, m_cw: usize) -> Result<BigInt> {
    if n < 3 || m_cw == 0 || m_cw >= n {
        return Err(Error::invalid(format!("need n >= 3 and 0 < m < n, got n={n}, m={m_cw}")));
    }
    let om = OrientedMatroid::from_digraph(&DirectedGraph::cycle(n, m_cw)?);
    let count = enumerate_partitions(Problem::Transitive(&om), n - 1)?.count();
    Ok(BigInt::from(count) * factorial(n as u64 - 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralCounts {
    pub two_colorings: BigInt,
    pub max_transitive_partitions: BigInt,
    pub max_gallai_partitions: BigInt,
}

/// Counts for `I2(n)` from the generic engines.
pub fn dihedral_counts(n: usize) -> Result<DihedralCounts> {
    let om = OrientedMatroid::root_system(RootSystemId::new(Family::I2, n)?)?;
    let r = om.rank();
    let t = enumerate_partitions(Problem::Transitive(&om), r)?.count();
    let g = enumerate_partitions(Problem::Gallai(om.underlying()), r)?.count();
    Ok(DihedralCounts {
        two_colorings: transitive_2count(&om)?,
        max_transitive_partitions: BigInt::from(t),
        max_gallai_partitions: BigInt::from(g),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeBReport {
    pub n: usize,
    pub enumerated: BigInt,
    pub formula: BigInt,
    pub matches: bool,
}

/// `Σ_k (3k+1)/(n+k+1) · C(2n-k, n-2k)`.
pub fn type_b_formula(n: usize) -> Result<BigInt> {
    let n = n as i64;
    let mut total = BigRational::zero();
    for k in 0..=n / 2 {
        total += BigRational::new(BigInt::from(3 * k + 1), BigInt::from(n + k + 1))
            * BigRational::from_integer(binomial(2 * n - k, n - 2 * k));
    }
    if !total.is_integer() {
        return Err(Error::InexactDivision(format!("type B sum at n={n} is {total}")));
    }
    Ok(total.to_integer())
}

/// Maximal transitive partitions of `Φ⁺(B_n)` against the conjectured formula.
pub fn type_b_conjecture_check(n: usize) -> Result<TypeBReport> {
    let om = OrientedMatroid::root_system(RootSystemId::new(Family::B, n)?)?;
    let count = map_partitions(Problem::Transitive(&om), Some(n), |_| Some(()))?.len();
    let enumerated = BigInt::from(count);
    let formula = type_b_formula(n)?;
    Ok(TypeBReport {
        n,
        matches: enumerated == formula,
        enumerated,
        formula,
    })
}

/// `u64` view, for small counts in reports.
pub fn to_u64(x: &BigInt) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{catalan, double_factorial_odd};

    fn t3() -> OrientedMatroid {
        tournament(3)
    }

    fn rgs(ps: &[SetPartition]) -> Vec<String> {
        ps.iter().map(|p| p.to_rgs_string()).collect()
    }

    #[test]
    fn three_tournament_partitions() {
        let om = t3();
        let p: Vec<_> = enumerate_partitions(Problem::Transitive(&om), 2).unwrap().collect();
        // a=12 b=23 c=13: {ac|b} and {a|bc}
        assert_eq!(rgs(&p), vec!["010", "011"]);
        let k3 = om.underlying();
        assert_eq!(enumerate_partitions(Problem::Gallai(k3), 2).unwrap().count(), 3);
        assert_eq!(enumerate_partitions(Problem::Gallai(k3), 3).unwrap().count(), 0);
    }

    #[test]
    fn counting_polynomials() {
        let a = partition_counts(Problem::Transitive(&t3())).unwrap();
        assert_eq!(a.coeffs(), &[0.into(), 1.into(), 2.into()]);
        assert_eq!(a.eval(2), 6.into());
        let b = partition_counts(Problem::Gallai(t3().underlying())).unwrap();
        assert_eq!(b.eval(2), 8.into());
        let t4 = partition_counts(Problem::Transitive(&tournament(4))).unwrap();
        assert_eq!(t4.coeffs(), &[0.into(), 1.into(), 11.into(), 5.into()]);
        assert_eq!(count_colorings(Problem::Transitive(&tournament(5)), 2).unwrap(), 120.into());
        assert_eq!(count_colorings(Problem::Gallai(&complete_graph(4)), 2).unwrap(), 64.into());
    }

    #[test]
    fn empty_ground() {
        let g = DirectedGraph::new(1, vec![]).unwrap();
        let om = OrientedMatroid::from_digraph(&g);
        assert_eq!(count_colorings(Problem::Transitive(&om), 3).unwrap(), 1.into());
        assert_eq!(enumerate_partitions(Problem::Transitive(&om), 0).unwrap().count(), 1);
    }

    #[test]
    fn scan_agrees_with_polynomial() {
        let om = tournament(4);
        for k in 1..=3 {
            for p in [Problem::Transitive(&om), Problem::Gallai(om.underlying())] {
                assert_eq!(BigInt::from(count_colorings_scan(p, k).unwrap()), count_colorings(p, k as u64).unwrap());
            }
        }
    }

    #[test]
    fn two_colorings() {
        assert_eq!(gallai_2count(&complete_graph(4)).unwrap(), 64.into());
        let triple = OrientedMatroid::from_digraph(&DirectedGraph::new(2, vec![(1, 2), (1, 2), (1, 2)]).unwrap());
        assert_eq!(gallai_2count(triple.underlying()).unwrap(), 2.into());
        let doubled = OrientedMatroid::from_digraph(&DirectedGraph::new(3, vec![(1, 2), (2, 3), (1, 3), (1, 3)]).unwrap());
        assert_eq!(gallai_2count(doubled.underlying()).unwrap(), 8.into());
        assert_eq!(transitive_2count(&t3()).unwrap(), 6.into());
        assert_eq!(acyclic_reorientation_classes(&t3()).unwrap(), 3.into());
        let two = t3().direct_sum(&t3()).unwrap();
        assert_eq!(transitive_2count(&two).unwrap(), 36.into());
        assert_eq!(acyclic_reorientation_classes(&two).unwrap(), 9.into());
        assert_eq!(reorientation_classes_by_division(&two).unwrap(), 9.into());
    }

    #[test]
    fn chromatic_and_orientations() {
        let k3 = DirectedGraph::tournament(3);
        assert_eq!(chromatic_polynomial(&k3), QPolynomial::from_i64(&[0, 2, -3, 1]));
        let empty = DirectedGraph::new(3, vec![]).unwrap();
        assert_eq!(chromatic_polynomial(&empty), QPolynomial::from_i64(&[0, 0, 0, 1]));
        let k4 = DirectedGraph::tournament(4);
        let f = chromatic_polynomial(&k4);
        assert_eq!(f, QPolynomial::from_i64(&[0, -6, 11, -6, 1]));
        assert_eq!(f.eval_i64(-1), 24.into());
        assert_eq!(acyclic_orientation_count(&k4).unwrap(), 24.into());
    }

    #[test]
    fn characteristic_and_chambers() {
        let v = DirectedGraph::tournament(3).incidence_config();
        let om = OrientedMatroid::from_vectors(&v).unwrap();
        assert_eq!(characteristic_polynomial(om.underlying()).unwrap(), QPolynomial::from_i64(&[2, -3, 1]));
        assert_eq!(chamber_count(&v).unwrap(), 6.into());
        let single = VectorConfig::new(2, vec![vec![crate::rational::q_int(1), crate::rational::q_int(2)]]).unwrap();
        assert_eq!(chamber_count(&single).unwrap(), 2.into());
        let b2 = OrientedMatroid::root_system(RootSystemId { family: Family::B, n: 2 }).unwrap();
        let crate::matroid::Representation::Vector(vb) = b2.representation() else { panic!() };
        assert_eq!(chamber_count(vb).unwrap(), 8.into());
    }

    #[test]
    fn maximal_counts() {
        for n in 2..=5 {
            assert_eq!(maximal_gallai_count_kn_brute(n).unwrap(), double_factorial_odd(n as i64 - 1));
            assert_eq!(maximal_transitive_count_tournament(n).unwrap(), catalan(n as u64 - 1));
            assert_eq!(partitions_per_rainbow_path(n).unwrap(), catalan(n as u64 - 1));
        }
        for n in 2..=8 {
            assert_eq!(maximal_gallai_count_kn_recursive(n).unwrap(), double_factorial_odd(n as i64 - 1));
        }
        assert!(maximal_gallai_count_kn_brute(7).is_err());
    }

    #[test]
    fn q_catalan() {
        assert_eq!(qcatalan_distribution(3).unwrap(), QPolynomial::from_i64(&[0, 0, 1, 1]));
        assert_eq!(carlitz_riordan(2), QPolynomial::from_i64(&[1, 1]));
        assert_eq!(carlitz_riordan(3).eval_i64(1), 5.into());
        for n in 2..=5 {
            let lhs = qcatalan_distribution(n).unwrap();
            let rhs = carlitz_riordan(n - 1).reverse(n * (n - 1) / 2);
            assert_eq!(lhs, rhs);
        }
        let p = SetPartition::parse("010").unwrap();
        assert_eq!(edgeright(&p).unwrap(), 3);
        assert_eq!(edgeright(&SetPartition::parse("011").unwrap()).unwrap(), 2);
        assert!(edgeright(&SetPartition::parse("000").unwrap()).is_err());
    }

    #[test]
    fn cycles_and_dihedral() {
        assert_eq!(cycle_maximal_transitive_count(3, 1).unwrap(), 4.into());
        assert_eq!(cycle_maximal_transitive_count(4, 2).unwrap(), 24.into());
        assert_eq!(cycle_maximal_transitive_count(4, 1).unwrap(), 18.into());
        assert!(cycle_maximal_transitive_count(4, 0).is_err());
        let d = dihedral_counts(3).unwrap();
        assert_eq!((d.two_colorings, d.max_transitive_partitions, d.max_gallai_partitions), (6.into(), 2.into(), 3.into()));
        let d = dihedral_counts(4).unwrap();
        assert_eq!((d.two_colorings, d.max_transitive_partitions, d.max_gallai_partitions), (8.into(), 3.into(), 7.into()));
        let d = dihedral_counts(2).unwrap();
        assert_eq!((d.two_colorings, d.max_transitive_partitions, d.max_gallai_partitions), (4.into(), 1.into(), 1.into()));
    }

    #[test]
    fn type_b_formula_values() {
        assert_eq!(type_b_formula(2).unwrap(), 3.into());
        assert_eq!(type_b_formula(3).unwrap(), 9.into());
        assert_eq!(type_b_formula(4).unwrap(), 29.into());
    }
}
