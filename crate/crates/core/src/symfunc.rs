//! Quasisymmetric functions in the fundamental basis, Schur expansions, and
//! descent-set families of maximal partitions, matchings and permutations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::coloring::{complete_graph, complete_order};
use crate::enumeration::{map_partitions, tournament, Mode, Problem};
use crate::error::{Error, Result};
use crate::matroid::{complete_edge_index, DirectedGraph, OrientedMatroid};
use crate::partition::SetPartition;
use crate::poly::{catalan, double_factorial_odd};
use crate::report::Check;
use crate::set::ElementSet;

/// Largest tableau size for SYT enumeration.
pub const SYT_CELL_LIMIT: usize = 16;
/// Largest `n` for 321-avoiding indecomposable permutation generation.
pub const PERM_321_LIMIT: usize = 12;
/// Largest number of points for perfect matching enumeration.
pub const MATCHING_POINT_LIMIT: usize = 16;

/// `{1,3}` style, one-based positions.
pub fn subset_key(s: ElementSet) -> String {
    let parts: Vec<String> = s.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// No two consecutive elements.
pub fn is_sparse(s: ElementSet) -> bool {
    s.bits() & (s.bits() >> 1) == 0
}

fn positions(n: usize) -> ElementSet {
    // [n-1] as bits 1..n-1
    ElementSet::full(n).without(0)
}

/// Degree-`n` quasisymmetric function `Σ c_J F_J`, `J ⊆ [n-1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct QSymF {
    degree: usize,
    coeffs: BTreeMap<ElementSet, BigInt>,
}

impl QSymF {
    pub fn zero(degree: usize) -> Self {
        QSymF {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, j: ElementSet) -> BigInt {
        self.coeffs.get(&j).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementSet, &BigInt)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, j: ElementSet, c: &BigInt) -> Result<()> {
        if !j.is_subset(positions(self.degree)) {
            return Err(Error::invalid(format!("{} is not a subset of [{}]", subset_key(j), self.degree.saturating_sub(1))));
        }
        let e = self.coeffs.entry(j).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&j);
        }
        Ok(())
    }

    pub fn add(&mut self, other: &QSymF) -> Result<()> {
        if other.degree != self.degree {
            return Err(Error::invalid("degree mismatch"));
        }
        for (j, c) in other.terms() {
            self.add_term(j, c)?;
        }
        Ok(())
    }

    pub fn scaled(&self, c: &BigInt) -> QSymF {
        let mut out = QSymF::zero(self.degree);
        if !c.is_zero() {
            for (j, v) in self.terms() {
                out.coeffs.insert(j, v * c);
            }
        }
        out
    }

    /// Terms in order of size, then lexicographic.
    pub fn sorted_terms(&self) -> Vec<(ElementSet, BigInt)> {
        let mut v: Vec<_> = self.coeffs.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.lex_cmp(b.0)));
        v
    }
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (j, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            if !c.abs().is_one() {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "F{}", subset_key(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSymF[{}]({self})", self.degree)
    }
}

struct TermMap<'a>(&'a QSymF);

impl Serialize for TermMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.0.sorted_terms();
        let mut m = s.serialize_map(Some(terms.len()))?;
        for (j, c) in &terms {
            m.serialize_entry(&subset_key(*j), &crate::report::big_json(c))?;
        }
        m.end()
    }
}

impl Serialize for QSymF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("degree", &self.degree)?;
        m.serialize_entry("F", &TermMap(self))?;
        m.end()
    }
}

/// Sum of `F_J` over a family of descent sets.
pub fn qsym_of_family<I: IntoIterator<Item = ElementSet>>(sets: I, n: usize) -> Result<QSymF> {
    let mut q = QSymF::zero(n);
    let one = BigInt::one();
    for j in sets {
        q.add_term(j, &one)?;
    }
    Ok(q)
}

/// Positions `i` of `[n-1]` whose edge `(i,i+1)` is a singleton block, where
/// `index(i)` gives the ground index of that edge.
pub fn descent_set_by(p: &SetPartition, n: usize, index: impl Fn(usize) -> usize) -> ElementSet {
    let sizes = p.block_sizes();
    (1..n).filter(|&i| sizes[p.block_of(index(i))] == 1).collect()
}

/// Descent set of a partition of the edges of `K_n` in tournament order.
pub fn descent_set(p: &SetPartition) -> Result<ElementSet> {
    let n = complete_order(p.len())?;
    Ok(descent_set_by(p, n, |i| complete_edge_index(n, i, i + 1)))
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntPartition(Vec<usize>);

impl IntPartition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::invalid(format!("{parts:?} is not a partition")));
        }
        Ok(IntPartition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn dominates(&self, other: &IntPartition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `(n-j, 1^j)`.
    pub fn hook(n: usize, j: usize) -> IntPartition {
        let mut parts = vec![n - j];
        parts.extend(std::iter::repeat(1).take(j));
        IntPartition(parts)
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for IntPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(IntPartition(Vec::new()));
        }
        let parts: std::result::Result<Vec<usize>, _> = inner.split(',').map(|t| t.trim().parse()).collect();
        IntPartition::new(parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?)
    }
}

/// Partitions of `n` in lexicographically decreasing order, a linear
/// extension of dominance.
pub fn partitions_of(n: usize) -> Vec<IntPartition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if rem == 0 {
            out.push(IntPartition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Standard Young tableau in English notation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SYTableau {
    rows: Vec<Vec<usize>>,
}

impl SYTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        IntPartition::new(rows.iter().map(|r| r.len()).collect())?;
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(Error::invalid(format!("entry {v} repeated or out of range")));
                }
                seen[v] = true;
                if (j > 0 && r[j - 1] > v) || (i > 0 && rows[i - 1][j] > v) {
                    return Err(Error::invalid("rows and columns must increase"));
                }
            }
        }
        Ok(SYTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntPartition {
        IntPartition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Row of each entry, indexed by entry.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (i, r) in self.rows.iter().enumerate() {
            for &v in r {
                out[v] = i;
            }
        }
        out
    }

    /// `{i : i+1 lies in a lower row than i}`.
    pub fn descent_set(&self) -> ElementSet {
        let row = self.row_of();
        (1..self.size()).filter(|&i| row[i + 1] > row[i]).collect()
    }
}

/// All SYT of shape `λ`, in order of the row sequence of `1, 2, ...`.
pub fn syt_enumerate(shape: &IntPartition) -> Result<Vec<SYTableau>> {
    let n = shape.size();
    if n > SYT_CELL_LIMIT {
        return Err(Error::budget("SYT cells", SYT_CELL_LIMIT as u64, n as u64));
    }
    let lam = shape.parts();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lam.len()];
    let mut out = Vec::new();
    fn go(v: usize, n: usize, lam: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<SYTableau>) {
        if v > n {
            out.push(SYTableau { rows: rows.clone() });
            return;
        }
        for r in 0..lam.len() {
            let len = rows[r].len();
            if len < lam[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(v);
                go(v + 1, n, lam, rows, out);
                rows[r].pop();
            }
        }
    }
    go(1, n, lam, &mut rows, &mut out);
    Ok(out)
}

/// `s_λ = Σ_T F_{Des(T)}`.
pub fn schur_in_f(shape: &IntPartition) -> Result<QSymF> {
    let t = syt_enumerate(shape)?;
    qsym_of_family(t.iter().map(|t| t.descent_set()), shape.size())
}

/// Semistandard tableaux of shape `λ` and content `μ`, peeling horizontal
/// strips of the largest entry.
pub fn kostka(lambda: &IntPartition, mu: &IntPartition) -> BigInt {
    let mut memo = HashMap::new();
    kostka_memo(lambda.parts(), mu.parts(), &mut memo)
}

fn kostka_memo(lam: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>) -> BigInt {
    let size: usize = lam.iter().sum();
    let content: usize = mu.iter().sum();
    if size != content {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let strip = mu[mu.len() - 1];
    let rest = &mu[..mu.len() - 1];
    // ν_i ranges over [λ_{i+1}, λ_i] with total removal `strip`
    let mut total = BigInt::zero();
    let mut nu = vec![0usize; lam.len()];
    fn strips(
        i: usize,
        left: usize,
        lam: &[usize],
        nu: &mut Vec<usize>,
        rest: &[usize],
        total: &mut BigInt,
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), BigInt>,
    ) {
        if i == lam.len() {
            if left == 0 {
                let mut shape = nu.clone();
                while shape.last() == Some(&0) {
                    shape.pop();
                }
                *total += kostka_memo(&shape, rest, memo);
            }
            return;
        }
        let low = lam.get(i + 1).copied().unwrap_or(0);
        for take in 0..=(lam[i] - low).min(left) {
            nu[i] = lam[i] - take;
            strips(i + 1, left - take, lam, nu, rest, total, memo);
        }
    }
    strips(0, strip, lam, &mut nu, rest, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

/// `K = {k_1 < ... < k_t}` to `(k_1, k_2 - k_1, ..., n - k_t)`.
pub fn composition_of(k: ElementSet, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut prev = 0;
    for i in k.iter() {
        out.push(i - prev);
        prev = i;
    }
    out.push(n - prev);
    out
}

pub fn subset_of_composition(c: &[usize]) -> ElementSet {
    let mut s = ElementSet::EMPTY;
    let mut acc = 0;
    for &p in &c[..c.len().saturating_sub(1)] {
        acc += p;
        s.insert(acc);
    }
    s
}

/// Monomial-basis coefficients: `F_J = Σ_{K ⊇ J} M_K`, so the coefficient of
/// `M_K` is `Σ_{J ⊆ K} c_J`.
pub fn f_to_monomial(q: &QSymF) -> BTreeMap<ElementSet, BigInt> {
    let full = positions(q.degree);
    let mut out: BTreeMap<ElementSet, BigInt> = BTreeMap::new();
    for (j, c) in q.terms() {
        let free = full.difference(j).bits();
        let mut sub = free;
        loop {
            let k = ElementSet::from_bits(j.bits() | sub);
            *out.entry(k).or_default() += c;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Inverse of [`f_to_monomial`]: `c_J = Σ_{K ⊆ J} (-1)^{|J \ K|} d_K`.
pub fn monomial_to_f(n: usize, d: &BTreeMap<ElementSet, BigInt>) -> Result<QSymF> {
    let mut q = QSymF::zero(n);
    let full = positions(n);
    for (k, c) in d {
        let free = full.difference(*k).bits();
        let mut sub = free;
        loop {
            let j = ElementSet::from_bits(k.bits() | sub);
            let term = if sub.count_ones() % 2 == 0 { c.clone() } else { -c };
            q.add_term(j, &term)?;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    Ok(q)
}

fn sorted_composition_subset(k: ElementSet, n: usize) -> ElementSet {
    let mut c = composition_of(k, n);
    c.sort_unstable_by(|a, b| b.cmp(a));
    subset_of_composition(&c)
}

/// True iff monomial coefficients agree on compositions that are
/// rearrangements of each other.
pub fn is_symmetric(q: &QSymF) -> bool {
    let d = f_to_monomial(q);
    let n = q.degree;
    if n == 0 {
        return true;
    }
    let full = positions(n).bits();
    let get = |k: ElementSet| d.get(&k).cloned().unwrap_or_default();
    let mut sub = full;
    loop {
        let k = ElementSet::from_bits(sub);
        if get(k) != get(sorted_composition_subset(k, n)) {
            return false;
        }
        if sub == 0 {
            return true;
        }
        sub = (sub - 1) & full;
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<IntPartition, BigInt>,
}

impl SchurExpansion {
    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn coeff(&self, l: &IntPartition) -> BigInt {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    /// Terms in lexicographically decreasing order of shape.
    pub fn sorted_terms(&self) -> Vec<(&IntPartition, &BigInt)> {
        self.coeffs.iter().rev().collect()
    }

    /// Expansion back in the fundamental basis.
    pub fn to_qsym(&self, n: usize) -> Result<QSymF> {
        let mut q = QSymF::zero(n);
        for (l, c) in &self.coeffs {
            q.add(&schur_in_f(l)?.scaled(c))?;
        }
        Ok(q)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            if !c.abs().is_one() {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

struct SchurTerms<'a>(&'a SchurExpansion);

impl Serialize for SchurTerms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.0.sorted_terms();
        let mut m = s.serialize_map(Some(terms.len()))?;
        for (l, c) in terms {
            m.serialize_entry(&l.to_string(), &crate::report::big_json(c))?;
        }
        m.end()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("schur", &SchurTerms(self))?;
        m.serialize_entry("positive", &self.is_positive())?;
        m.end()
    }
}

/// Schur coefficients by unitriangular solve against the Kostka matrix, with
/// shapes taken from the top of dominance order down.
pub fn schur_expand(q: &QSymF) -> Result<SchurExpansion> {
    if !is_symmetric(q) {
        return Err(Error::NotSymmetric);
    }
    let n = q.degree;
    let d = f_to_monomial(q);
    let shapes = partitions_of(n);
    let mut memo = HashMap::new();
    let mut coeffs: BTreeMap<IntPartition, BigInt> = BTreeMap::new();
    for mu in &shapes {
        let mut c = d.get(&subset_of_composition(mu.parts())).cloned().unwrap_or_default();
        for (lam, a) in &coeffs {
            c -= a * kostka_memo(lam.parts(), mu.parts(), &mut memo);
        }
        if !c.is_zero() {
            coeffs.insert(mu.clone(), c);
        }
    }
    Ok(SchurExpansion { coeffs })
}

/// Restriction of `χ^λ` to `S_m` in the fundamental basis.
pub fn restrict_character(shape: &IntPartition, m: usize) -> Result<QSymF> {
    if m > shape.size() {
        return Err(Error::invalid(format!("cannot restrict {shape} to S_{m}")));
    }
    let window = positions(m);
    let t = syt_enumerate(shape)?;
    qsym_of_family(t.iter().map(|t| t.descent_set().intersection(window)), m)
}

/// `#{T ∈ SYT(n-1,n-1) : J ⊆ Des(T)}`.
pub fn syt_fiber_count(n: usize, j: ElementSet) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let shape = IntPartition(vec![n - 1, n - 1]);
    let count = syt_enumerate(&shape)?
        .iter()
        .filter(|t| j.is_subset(t.descent_set()))
        .count();
    Ok(BigInt::from(count))
}

/// `C_{n-|J|-1}` for sparse `J`, else 0.
pub fn syt_fiber_closed_form(n: usize, j: ElementSet) -> BigInt {
    if is_sparse(j) && j.len() < n {
        catalan((n - j.len() - 1) as u64)
    } else {
        BigInt::zero()
    }
}

/// Perfect matching of `1..=2n`, pairs `(a,b)` with `a < b`, sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let points = 2 * pairs.len();
        let mut seen = vec![false; points + 1];
        for &(a, b) in &pairs {
            for v in [a, b] {
                if v == 0 || v > points || seen[v] {
                    return Err(Error::invalid(format!("point {v} repeated or out of range")));
                }
                seen[v] = true;
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn points(&self) -> usize {
        2 * self.pairs.len()
    }

    /// `{i : (i,i+1) ∈ m}`.
    pub fn short_set(&self) -> ElementSet {
        self.pairs.iter().filter(|(a, b)| b - a == 1).map(|&(a, _)| a).collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs.serialize(s)
    }
}

/// All perfect matchings of `2n` points, pairing the smallest free point first.
pub fn matchings(n: usize) -> Result<Vec<Matching>> {
    if 2 * n > MATCHING_POINT_LIMIT {
        return Err(Error::budget("matching points", MATCHING_POINT_LIMIT as u64, 2 * n as u64));
    }
    fn go(free: u32, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free == 0 {
            let mut pairs = cur.clone();
            pairs.sort_unstable();
            out.push(Matching { pairs });
            return;
        }
        let a = free.trailing_zeros();
        let rest = free & !(1 << a);
        let mut others = rest;
        while others != 0 {
            let b = others.trailing_zeros();
            others &= others - 1;
            cur.push((a as usize + 1, b as usize + 1));
            go(rest & !(1 << b), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(((1u64 << (2 * n)) - 1) as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `a_r`: matchings of `2r` points with no chord `(i,i+1)`.
pub fn no_short_chord_count(r: usize) -> Result<BigInt> {
    Ok(BigInt::from(matchings(r)?.iter().filter(|m| m.short_set().is_empty()).count()))
}

pub fn perm_descent_set(p: &[usize]) -> ElementSet {
    (1..p.len()).filter(|&i| p[i - 1] > p[i]).collect()
}

/// No `r < n` with `{π(1..r)} = {1..r}`.
pub fn is_indecomposable(p: &[usize]) -> bool {
    let mut max = 0;
    for (i, &v) in p.iter().enumerate().take(p.len().saturating_sub(1)) {
        max = max.max(v);
        if max == i + 1 {
            return false;
        }
    }
    true
}

pub fn avoids_321(p: &[usize]) -> bool {
    let mut max = 0;
    let mut second = 0;
    for &v in p {
        if v < second {
            return false;
        }
        if v < max {
            second = second.max(v);
        }
        max = max.max(v);
    }
    true
}

/// 321-avoiding indecomposable permutations of `[n]` in lexicographic order.
pub fn perm_family_321_indec(n: usize) -> Result<Vec<Vec<usize>>> {
    if n > PERM_321_LIMIT {
        return Err(Error::budget("321-avoiding permutation n", PERM_321_LIMIT as u64, n as u64));
    }
    fn go(n: usize, used: u32, max: usize, second: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if used >> v & 1 == 1 || v < second {
                continue;
            }
            let m = max.max(v);
            if cur.len() + 1 < n && m == cur.len() + 1 {
                continue;
            }
            let s = if v < max { second.max(v) } else { second };
            cur.push(v);
            go(n, used | 1 << v, m, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Descent sets of the Gallai (on `K_n`) or transitive (on the tournament)
/// `k`-partitions.
pub fn family_descents(mode: Mode, n: usize, k: usize) -> Result<Vec<ElementSet>> {
    let index = |i: usize| complete_edge_index(n, i, i + 1);
    match mode {
        Mode::Gallai => {
            let g = complete_graph(n);
            map_partitions(Problem::Gallai(&g), Some(k), |p| Some(descent_set_by(p, n, index)))
        }
        Mode::Transitive => {
            let t = tournament(n);
            map_partitions(Problem::Transitive(&t), Some(k), |p| Some(descent_set_by(p, n, index)))
        }
    }
}

/// `Q(G_{n,k})` or `Q(T_{n,k})`.
pub fn family_qsym(mode: Mode, n: usize, k: usize) -> Result<QSymF> {
    qsym_of_family(family_descents(mode, n, k)?, n)
}

fn mode_letter(mode: Mode) -> &'static str {
    match mode {
        Mode::Gallai => "G",
        Mode::Transitive => "T",
    }
}

/// Symmetry and Schur positivity of `Q(G_{n,k})` and `Q(T_{n,k})`.
pub fn verify_m1g(n: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for mode in [Mode::Gallai, Mode::Transitive] {
        let q = family_qsym(mode, n, k)?;
        let name = format!("Q({}_{{{n},{k}}})", mode_letter(mode));
        let sym = is_symmetric(&q);
        out.push(Check::holds(format!("{name} symmetric"), sym, &q));
        if sym {
            let s = schur_expand(&q)?;
            out.push(Check::holds(format!("{name} Schur-positive"), s.is_positive(), &s));
            out.push(Check::eq(format!("{name} Schur expansion reconstructs"), q.clone(), s.to_qsym(n)?));
        }
    }
    Ok(out)
}

/// `Q(T_{n,n-1}) = χ^{(n-1,n-1)}↓S_n`.
pub fn verify_m3d(n: usize) -> Result<Vec<Check>> {
    let lhs = family_qsym(Mode::Transitive, n, n - 1)?;
    let rhs = restrict_character(&IntPartition(vec![n - 1, n - 1]), n)?;
    Ok(vec![Check::eq(format!("Q(T_{{{n},{}}}) = restricted (n-1,n-1)", n - 1), rhs, lhs)])
}

/// `Q(G_{n,n-1})` against the matching formula and the restricted characters
/// `Σ_r a_r χ^{(n-1+r, n-1-r)}↓S_n`.
pub fn verify_m3u(n: usize) -> Result<Vec<Check>> {
    let lhs = family_qsym(Mode::Gallai, n, n - 1)?;
    let window = positions(n);
    let via_matchings = qsym_of_family(matchings(n - 1)?.iter().map(|m| m.short_set().intersection(window)), n)?;
    let mut via_chars = QSymF::zero(n);
    for r in 0..n {
        let a = no_short_chord_count(r)?;
        if a.is_zero() {
            continue;
        }
        let shape = IntPartition::new(vec![n - 1 + r, n - 1 - r])?;
        via_chars.add(&restrict_character(&shape, n)?.scaled(&a))?;
    }
    Ok(vec![
        Check::eq(format!("Q(G_{{{n},{}}}) = matching short sets", n - 1), via_matchings, lhs.clone()),
        Check::eq(format!("Q(G_{{{n},{}}}) = Σ a_r restricted characters", n - 1), via_chars, lhs),
    ])
}

/// `Q(T_{n,n-1}) = Q(S*_n(321))`.
pub fn verify_321(n: usize) -> Result<Vec<Check>> {
    let lhs = family_qsym(Mode::Transitive, n, n - 1)?;
    let perms = perm_family_321_indec(n)?;
    let rhs = qsym_of_family(perms.iter().map(|p| perm_descent_set(p)), n)?;
    Ok(vec![
        Check::eq(format!("Q(T_{{{n},{}}}) = Q(321-avoiding indecomposable)", n - 1), rhs, lhs),
        Check::eq(format!("321-avoiding indecomposable count n={n}"), catalan(n as u64 - 1), BigInt::from(perms.len())),
    ])
}

fn sparse_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    let full = positions(n).bits();
    let mut sub = full;
    let mut done = false;
    std::iter::from_fn(move || loop {
        if done {
            return None;
        }
        let s = ElementSet::from_bits(sub);
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & full;
        }
        if is_sparse(s) {
            return Some(s);
        }
    })
}

fn fiber(family: &[ElementSet], j: ElementSet) -> usize {
    family.iter().filter(|d| j.is_subset(**d)).count()
}

/// Sparse descents and fiber sizes depending only on `|J|`, equal to the
/// size of the family with `|J|` fewer vertices and blocks.
pub fn verify_fiber_premise(mode: Mode, n: usize, k: usize) -> Result<Vec<Check>> {
    let family = family_descents(mode, n, k)?;
    let name = format!("{}_{{{n},{k}}}", mode_letter(mode));
    let mut out = vec![Check::holds(
        format!("{name} descent sets sparse"),
        family.iter().all(|d| is_sparse(*d)),
        "a descent set has consecutive elements",
    )];
    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for j in sparse_subsets(n) {
        by_size.entry(j.len()).or_default().push(fiber(&family, j));
    }
    let uniform = by_size.values().all(|v| v.iter().all(|x| *x == v[0]));
    out.push(Check::holds(format!("{name} sparse fibers depend only on |J|"), uniform, format!("{by_size:?}")));
    for (&size, v) in &by_size {
        if size == 0 || size >= k {
            continue;
        }
        let smaller = family_descents(mode, n - size, k - size)?.len();
        out.push(Check::eq(format!("{name} fiber at |J|={size}"), smaller, v[0]));
    }
    Ok(out)
}

/// `Σ_{m∈M_{2n}} F_{Short(m)} = Σ_k a_{n-k} s_{(2n-k,k)}`.
pub fn verify_matching_schur(n: usize) -> Result<Vec<Check>> {
    let lhs = qsym_of_family(matchings(n)?.iter().map(|m| m.short_set()), 2 * n)?;
    let mut expected = BTreeMap::new();
    for k in 0..=n {
        let a = no_short_chord_count(n - k)?;
        if !a.is_zero() {
            expected.insert(IntPartition::new(vec![2 * n - k, k])?, a);
        }
    }
    let expected = SchurExpansion { coeffs: expected };
    let actual = schur_expand(&lhs)?;
    Ok(vec![Check::eq(format!("M_{} short-set Schur expansion", 2 * n), expected, actual)])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleQSym {
    pub qsym: QSymF,
    /// `m_{n,k,j}` for `j = 0..n-1`.
    pub hooks: Vec<BigInt>,
    pub fibers_uniform: bool,
    pub hook_expansion: bool,
}

/// `Q` of the Gallai `k`-partitions of the undirected `n`-cycle, or the
/// transitive ones of the acyclic directed cycle `(1,2),...,(n-1,n),(1,n)`.
pub fn cycle_qsym(mode: Mode, n: usize, k: usize) -> Result<CycleQSym> {
    if n < 3 {
        return Err(Error::invalid("cycle needs n >= 3"));
    }
    let om = OrientedMatroid::from_digraph(&DirectedGraph::path_closed_cycle(n));
    let index = |i: usize| i - 1;
    let problem = match mode {
        Mode::Gallai => Problem::Gallai(om.underlying()),
        Mode::Transitive => Problem::Transitive(&om),
    };
    let family = map_partitions(problem, Some(k), |p| Some(descent_set_by(p, n, index)))?;
    let qsym = qsym_of_family(family.iter().copied(), n)?;
    let full = positions(n).bits();
    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut sub = full;
    loop {
        let j = ElementSet::from_bits(sub);
        by_size.entry(j.len()).or_default().push(fiber(&family, j));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    let fibers_uniform = by_size.values().all(|v| v.iter().all(|x| *x == v[0]));
    let mut hooks = vec![BigInt::zero(); n];
    for (j, c) in qsym.terms() {
        hooks[j.len()] = c.clone();
    }
    let expansion = schur_expand(&qsym)?;
    let hook_coeffs: BTreeMap<IntPartition, BigInt> = (0..n)
        .filter(|&j| !hooks[j].is_zero())
        .map(|j| (IntPartition::hook(n, j), hooks[j].clone()))
        .collect();
    let hook_expansion = expansion.coeffs == hook_coeffs;
    Ok(CycleQSym {
        qsym,
        hooks,
        fibers_uniform,
        hook_expansion,
    })
}

/// `|{p ∈ G_{n,n-1} : J ⊆ Des(p)}| = (2n-2|J|-3)!!` and the transitive
/// analogue `C_{n-|J|-1}` for sparse `J`, zero otherwise.
pub fn verify_descent_fibers(mode: Mode, n: usize) -> Result<Vec<Check>> {
    let family = family_descents(mode, n, n - 1)?;
    let full = positions(n).bits();
    let mut bad = Vec::new();
    let mut sub = full;
    loop {
        let j = ElementSet::from_bits(sub);
        let expected = if !is_sparse(j) {
            BigInt::zero()
        } else {
            match mode {
                Mode::Gallai => double_factorial_odd(n as i64 - j.len() as i64 - 1),
                Mode::Transitive => catalan((n - j.len() - 1) as u64),
            }
        };
        let actual = BigInt::from(fiber(&family, j));
        if expected != actual {
            bad.push(format!("{}: {expected} vs {actual}", subset_key(j)));
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & full;
    }
    Ok(vec![Check::holds(
        format!("{}_{{{n},{}}} descent fibers", mode_letter(mode), n - 1),
        bad.is_empty(),
        bad.join("; "),
    )])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    fn lam(v: &[usize]) -> IntPartition {
        IntPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn descent_sets_of_partitions() {
        // K_3 edges in order 12, 23, 13
        assert_eq!(descent_set(&SetPartition::parse("010").unwrap()).unwrap(), set(&[2]));
        assert_eq!(descent_set(&SetPartition::parse("000").unwrap()).unwrap(), ElementSet::EMPTY);
        assert!(descent_set(&SetPartition::parse("0000").unwrap()).is_err());
        let t = family_qsym(Mode::Transitive, 3, 2).unwrap();
        assert_eq!(t.to_string(), "F{1}+F{2}");
        let g = family_qsym(Mode::Gallai, 3, 2).unwrap();
        assert_eq!(g.to_string(), "F{}+F{1}+F{2}");
        assert!(qsym_of_family(vec![], 3).unwrap().is_zero());
    }

    #[test]
    fn tableaux() {
        let t = syt_enumerate(&lam(&[2, 2])).unwrap();
        let des: Vec<_> = t.iter().map(|t| t.descent_set()).collect();
        assert_eq!(des, vec![set(&[2]), set(&[1, 3])]);
        assert_eq!(schur_in_f(&lam(&[3])).unwrap().to_string(), "F{}");
        assert_eq!(schur_in_f(&lam(&[2, 1])).unwrap().to_string(), "F{1}+F{2}");
        assert!(SYTableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(SYTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn monomial_basis() {
        let mut f = QSymF::zero(2);
        f.add_term(ElementSet::EMPTY, &BigInt::one()).unwrap();
        let d = f_to_monomial(&f);
        assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![ElementSet::EMPTY, set(&[1])]);
        assert!(is_symmetric(&f));
        let f1 = qsym_of_family(vec![set(&[1])], 2).unwrap();
        assert!(is_symmetric(&f1));
        let g = qsym_of_family(vec![set(&[1])], 3).unwrap();
        let d = f_to_monomial(&g);
        assert_eq!(d.keys().copied().collect::<Vec<_>>(), vec![set(&[1]), set(&[1, 2])]);
        assert!(!is_symmetric(&g));
        assert_eq!(monomial_to_f(3, &d).unwrap(), g);
        assert!(matches!(schur_expand(&g), Err(Error::NotSymmetric)));
    }

    #[test]
    fn schur_expansions() {
        let t = family_qsym(Mode::Transitive, 3, 2).unwrap();
        assert_eq!(schur_expand(&t).unwrap().to_string(), "s(2,1)");
        let g = family_qsym(Mode::Gallai, 3, 2).unwrap();
        assert_eq!(schur_expand(&g).unwrap().to_string(), "s(3)+s(2,1)");
        for n in 1..=6 {
            for l in partitions_of(n) {
                let e = schur_expand(&schur_in_f(&l).unwrap()).unwrap();
                assert_eq!(e.coeffs.len(), 1);
                assert_eq!(e.coeff(&l), BigInt::one());
            }
        }
        let json = serde_json::to_string(&schur_expand(&g).unwrap()).unwrap();
        assert_eq!(json, r#"{"schur":{"(3)":1,"(2,1)":1},"positive":true}"#);
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"degree":3,"F":{"{}":1,"{1}":1,"{2}":1}}"#);
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka(&lam(&[2, 1]), &lam(&[1, 1, 1])), BigInt::from(2));
        assert_eq!(kostka(&lam(&[3, 2]), &lam(&[2, 2, 1])), BigInt::from(2));
        assert_eq!(kostka(&lam(&[2, 2]), &lam(&[3, 1])), BigInt::zero());
        assert_eq!(kostka(&lam(&[3, 1]), &lam(&[3, 1])), BigInt::one());
    }

    #[test]
    fn restriction() {
        let r = restrict_character(&lam(&[2, 2]), 3).unwrap();
        assert_eq!(r.to_string(), "F{1}+F{2}");
        assert_eq!(restrict_character(&lam(&[4]), 3).unwrap().to_string(), "F{}");
        assert_eq!(restrict_character(&lam(&[2, 1]), 3).unwrap(), schur_in_f(&lam(&[2, 1])).unwrap());
    }

    #[test]
    fn syt_fibers() {
        assert_eq!(syt_fiber_count(3, ElementSet::EMPTY).unwrap(), BigInt::from(2));
        assert_eq!(syt_fiber_count(3, set(&[1])).unwrap(), BigInt::one());
        assert_eq!(syt_fiber_count(4, set(&[1, 2])).unwrap(), BigInt::zero());
        assert_eq!(syt_fiber_closed_form(4, set(&[1, 2])), BigInt::zero());
        assert_eq!(syt_fiber_closed_form(3, set(&[1])), BigInt::one());
    }

    #[test]
    fn matching_short_sets() {
        let m = matchings(2).unwrap();
        let shorts: Vec<_> = m.iter().map(|m| m.short_set()).collect();
        assert_eq!(m[0].to_string(), "(1,2),(3,4)");
        assert_eq!(shorts, vec![set(&[1, 3]), ElementSet::EMPTY, set(&[2])]);
        let a: Vec<BigInt> = (0..5).map(|r| no_short_chord_count(r).unwrap()).collect();
        assert_eq!(a, [1, 0, 1, 5, 36].map(BigInt::from).to_vec());
        let m6 = matchings(3).unwrap();
        assert_eq!(m6.iter().filter(|m| m.short_set().contains(1)).count(), 3);
    }

    #[test]
    fn permutations_321() {
        assert_eq!(perm_family_321_indec(3).unwrap(), vec![vec![2, 3, 1], vec![3, 1, 2]]);
        assert_eq!(perm_family_321_indec(2).unwrap(), vec![vec![2, 1]]);
        assert!(!is_indecomposable(&[3, 1, 2, 5, 4]));
        assert!(is_indecomposable(&[4, 3, 1, 5, 2]));
        assert!(!avoids_321(&[3, 2, 1]));
        assert_eq!(perm_descent_set(&[2, 3, 1]), set(&[2]));
    }

    #[test]
    fn small_theorem_instances() {
        for checks in [verify_m3d(3).unwrap(), verify_m3u(3).unwrap(), verify_321(3).unwrap(), verify_m1g(4, 2).unwrap()] {
            for c in checks {
                assert!(c.pass, "{c:?}");
            }
        }
        for c in verify_fiber_premise(Mode::Gallai, 5, 3).unwrap() {
            assert!(c.pass, "{c:?}");
        }
        for c in verify_matching_schur(3).unwrap() {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn cycles() {
        let c = cycle_qsym(Mode::Transitive, 3, 1).unwrap();
        assert_eq!(c.qsym.to_string(), "F{}");
        assert_eq!(c.hooks[0], BigInt::one());
        let c = cycle_qsym(Mode::Transitive, 3, 2).unwrap();
        assert_eq!(c.qsym.to_string(), "F{1}+F{2}");
        let c = cycle_qsym(Mode::Transitive, 4, 2).unwrap();
        assert!(c.fibers_uniform && c.hook_expansion);
        assert!(c.hooks.iter().all(|h| !h.is_negative()));
    }
}
