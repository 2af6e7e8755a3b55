//! Filtered Hilbert series of the coloring algebras, evaluated on the
//! variety of valid colorings, and the `[k]_j` decomposition.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumeration::{map_partitions, partition_count_vector, tournament, Mode, Problem};
use crate::error::{Error, Result};
use crate::matroid::complete_edges;
use crate::poly::{catalan, factorial, QPolynomial};
use crate::rational::{q_int, Q};
use crate::report::{poly_json, Check};
use crate::set::ElementSet;

/// Largest number of variety points for Hilbert computations.
pub const HILBERT_POINT_LIMIT: usize = 50_000;
/// Largest orbit-representative count for the exact rational cross-check.
pub const EXACT_REP_LIMIT: usize = 128;
/// Largest `n` for the monomial basis `B_n`.
pub const BASIS_LIMIT: usize = 8;
/// Largest `n` for the evaluation-rank spanning check of `B_n`.
pub const BASIS_RANK_LIMIT: usize = 6;
/// Largest `n` for Stirling permutation enumeration.
pub const STIRLING_LIMIT: usize = 6;

const PRIME_FLOOR: u64 = 1_000_000;

/// Exponent vectors of `ζ` at the valid `k`-colorings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyPoints {
    pub k: usize,
    pub points: Vec<Vec<u8>>,
}

fn injective_colorings(p: &[u8], blocks: usize, k: usize, first: Option<u8>, out: &mut Vec<Vec<u8>>) {
    let mut assign = vec![0u8; blocks];
    fn go(b: usize, used: u64, k: usize, assign: &mut Vec<u8>, p: &[u8], first: Option<u8>, out: &mut Vec<Vec<u8>>) {
        if b == assign.len() {
            out.push(p.iter().map(|&x| assign[x as usize]).collect());
            return;
        }
        let choices: Vec<u8> = match (b, first) {
            (0, Some(c)) => vec![c],
            _ => (0..k as u8).collect(),
        };
        for c in choices {
            if used >> c & 1 == 0 {
                assign[b] = c;
                go(b + 1, used | 1 << c, k, assign, p, first, out);
            }
        }
    }
    go(0, 0, k, &mut assign, p, first, out);
}

fn coloring_points(p: Problem, k: usize, first: Option<u8>, limit: usize) -> Result<Vec<Vec<u8>>> {
    if k == 0 {
        return Err(Error::invalid("k must be positive"));
    }
    let counts = partition_count_vector(p)?;
    let total: BigInt = crate::poly::FallingPolynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect()).eval(k as u64);
    if total > BigInt::from(limit) {
        return Err(Error::budget("variety points", limit as u64, u64::try_from(total).unwrap_or(u64::MAX)));
    }
    let maxj = k.min(p.rank());
    let parts = map_partitions(p, None, |q| (q.num_blocks() <= maxj).then(|| (q.rgs().to_vec(), q.num_blocks())))?;
    let mut out = Vec::new();
    for (rgs, b) in parts {
        injective_colorings(&rgs, b, k, first, &mut out);
    }
    out.sort_unstable();
    Ok(out)
}

/// One point per valid `k`-coloring, coordinates in `0..k`.
pub fn variety_points(p: Problem, k: usize) -> Result<VarietyPoints> {
    Ok(VarietyPoints {
        k,
        points: coloring_points(p, k, None, HILBERT_POINT_LIMIT)?,
    })
}

/// Incremental row echelon form over some field; reports whether a new
/// evaluation vector (given as exponents of `ζ`) is independent.
trait Eliminator {
    fn insert(&mut self, exps: &[u8]) -> bool;
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of multiplicative order exactly `k` modulo `p`.
pub fn root_of_unity(k: u64, p: u64) -> u64 {
    let factors = prime_factors(k);
    (2..p)
        .map(|g| pow_mod(g, (p - 1) / k, p))
        .find(|&z| factors.iter().all(|&q| pow_mod(z, k / q, p) != 1))
        .expect("p = 1 mod k has a primitive k-th root")
}

/// Three distinct primes `p ≡ 1 (mod k)` above `10^6`: the smallest ones for
/// seed 0, otherwise starting from a seeded offset.
pub fn hilbert_primes(k: usize, seed: u64) -> [u64; 3] {
    let k = k.max(1) as u64;
    let mut start = PRIME_FLOOR;
    if seed != 0 {
        start += ChaCha8Rng::seed_from_u64(seed).gen_range(0..PRIME_FLOOR);
    }
    let mut c = start + 1 + (k - start % k) % k;
    let mut out = Vec::new();
    while out.len() < 3 {
        if is_prime(c) {
            out.push(c);
        }
        c += k;
    }
    [out[0], out[1], out[2]]
}

struct ModP {
    p: u64,
    zpow: Vec<u64>,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModP {
    fn new(p: u64, k: usize) -> Self {
        let z = root_of_unity(k as u64, p);
        let zpow = (0..k as u64).map(|e| pow_mod(z, e, p)).collect();
        ModP { p, zpow, rows: Vec::new() }
    }
}

impl Eliminator for ModP {
    fn insert(&mut self, exps: &[u8]) -> bool {
        let p = self.p;
        let mut v: Vec<u64> = exps.iter().map(|&e| self.zpow[e as usize]).collect();
        // entries stay below 2^64: each step adds less than p^2 < 2^42
        for (piv, row) in &self.rows {
            let c = v[*piv] % p;
            if c != 0 {
                let f = p - c;
                for (x, r) in v.iter_mut().zip(row) {
                    *x += f * r;
                }
            }
        }
        for x in v.iter_mut() {
            *x %= p;
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(v[piv], p - 2, p);
        for x in v.iter_mut() {
            *x = x.wrapping_mul(inv) % p;
        }
        self.rows.push((piv, v));
        true
    }
}

/// Exact elimination over the rationals for `ζ = -1`.
struct ExactSign {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Eliminator for ExactSign {
    fn insert(&mut self, exps: &[u8]) -> bool {
        let mut v: Vec<Q> = exps.iter().map(|&e| q_int(if e == 0 { 1 } else { -1 })).collect();
        for (piv, row) in &self.rows {
            if !v[*piv].is_zero() {
                let c = v[*piv].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= &c * r;
                }
            }
        }
        let Some(piv) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Q::one() / &v[piv];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((piv, v));
        true
    }
}

/// Counts standard monomials degree by degree under graded lexicographic
/// order. Standard monomials form an order ideal, so a monomial is a
/// candidate only when each of its divisors `a - e_i` is standard. Degree-`d`
/// monomials are eigenvectors of the cyclic color shift with eigenvalue
/// `ζ^d`, so each residue class of `d mod k` has its own eliminator working
/// on orbit representatives only.
fn standard_profile<E: Eliminator>(reps: &[Vec<u8>], m: usize, k: usize, mut make: impl FnMut() -> E) -> Result<Vec<u64>> {
    let target = reps.len() * k;
    let mut elim: Vec<E> = (0..k).map(|_| make()).collect();
    let one = vec![0u8; m];
    if !elim[0].insert(&vec![0u8; reps.len()]) {
        return Err(Error::invalid("empty variety"));
    }
    let mut h = vec![1u64];
    let mut found = 1;
    let mut layer: Vec<Vec<u8>> = vec![one];
    let mut d = 0;
    while found < target {
        d += 1;
        let prev: HashSet<&Vec<u8>> = layer.iter().collect();
        let mut cand = BTreeSet::new();
        for a in &layer {
            for i in 0..m {
                if (a[i] as usize) + 1 >= k {
                    continue;
                }
                let mut b = a.clone();
                b[i] += 1;
                let ok = (0..m).filter(|&j| b[j] > 0).all(|j| {
                    let mut c = b.clone();
                    c[j] -= 1;
                    prev.contains(&c)
                });
                if ok {
                    cand.insert(b);
                }
            }
        }
        if cand.is_empty() {
            return Err(Error::invalid(format!("filtration stalled at degree {d} with {found} of {target}")));
        }
        let e = &mut elim[d % k];
        let mut next = Vec::new();
        for b in cand {
            let exps: Vec<u8> = reps
                .iter()
                .map(|p| (b.iter().zip(p).map(|(&x, &y)| x as usize * y as usize).sum::<usize>() % k) as u8)
                .collect();
            if e.insert(&exps) {
                next.push(b);
            }
        }
        found += next.len();
        h.push(next.len() as u64);
        layer = next;
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub k: usize,
    pub increments: Vec<u64>,
    pub dim: u64,
    pub primes: Vec<u64>,
    pub agreed: bool,
    /// Whether an exact rational computation was also run and agreed.
    pub exact: bool,
}

impl HilbertProfile {
    pub fn polynomial(&self) -> QPolynomial {
        QPolynomial::new(self.increments.iter().map(|&h| BigInt::from(h)).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "increments": self.increments,
            "dim": self.dim,
            "primes": self.primes,
            "agreed": self.agreed,
            "exact": self.exact,
        })
    }
}

/// `h_d = rank(≤ d) - rank(≤ d-1)` for the evaluation of monomials at the
/// valid colorings, computed modulo three primes and, for `k = 2` and small
/// varieties, exactly.
pub fn hilbert_series(p: Problem, k: usize, seed: u64) -> Result<HilbertProfile> {
    hilbert_series_with_limit(p, k, seed, HILBERT_POINT_LIMIT)
}

/// As [`hilbert_series`] with an explicit bound on the number of points.
pub fn hilbert_series_with_limit(p: Problem, k: usize, seed: u64, point_limit: usize) -> Result<HilbertProfile> {
    p.validate()?;
    let m = p.size();
    if k == 1 || m == 0 {
        return Ok(HilbertProfile {
            k,
            increments: vec![1],
            dim: 1,
            primes: Vec::new(),
            agreed: true,
            exact: true,
        });
    }
    let reps = coloring_points(p, k, Some(0), point_limit)?;
    let primes = hilbert_primes(k, seed);
    let profiles: Vec<Result<Vec<u64>>> = primes
        .par_iter()
        .map(|&q| standard_profile(&reps, m, k, || ModP::new(q, k)))
        .collect();
    let profiles: Vec<Vec<u64>> = profiles.into_iter().collect::<Result<_>>()?;
    if profiles.iter().any(|h| *h != profiles[0]) {
        return Err(Error::PrimeDisagreement(format!("{profiles:?} for primes {primes:?}")));
    }
    let increments = profiles.into_iter().next().unwrap();
    let mut exact = false;
    if k == 2 && reps.len() <= EXACT_REP_LIMIT {
        let h = standard_profile(&reps, m, k, || ExactSign { rows: Vec::new() })?;
        if h != increments {
            return Err(Error::PrimeDisagreement(format!("exact {h:?} vs modular {increments:?}")));
        }
        exact = true;
    }
    Ok(HilbertProfile {
        k,
        dim: increments.iter().sum(),
        increments,
        primes: primes.to_vec(),
        agreed: true,
        exact,
    })
}

/// `[k]_j = [k]_q [k-1]_q ... [k-j+1]_q`, zero for `j > k`.
pub fn q_falling(k: usize, j: usize) -> QPolynomial {
    if j > k {
        return QPolynomial::zero();
    }
    (0..j).fold(QPolynomial::one(), |acc, i| &acc * &QPolynomial::q_integer(k - i))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KjDecomposition {
    /// `P_1, ..., P_r`.
    pub polys: Vec<QPolynomial>,
}

impl KjDecomposition {
    pub fn is_nonnegative(&self) -> bool {
        self.polys.iter().all(|p| p.is_nonnegative())
    }

    /// `Σ_j P_j [k]_j`.
    pub fn reconstruct(&self, k: usize) -> QPolynomial {
        self.polys
            .iter()
            .enumerate()
            .fold(QPolynomial::zero(), |acc, (i, p)| &acc + &(p * &q_falling(k, i + 1)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.polys.iter().map(poly_json).collect())
    }
}

/// Solves `Hilb_k = Σ_{j ≤ k} P_j [k]_j` for `k = 1, 2, ...` by forward
/// substitution; each step is an exact division by `[k]_k`.
pub fn kj_decompose(series: &[QPolynomial]) -> Result<KjDecomposition> {
    let mut polys: Vec<QPolynomial> = Vec::new();
    for (i, h) in series.iter().enumerate() {
        let k = i + 1;
        let mut rest = h.clone();
        for (j, pj) in polys.iter().enumerate() {
            rest = &rest - &(pj * &q_falling(k, j + 1));
        }
        polys.push(rest.div_exact(&q_falling(k, k))?);
    }
    Ok(KjDecomposition { polys })
}

fn complete_problem_series(mode: Mode, n: usize, ks: std::ops::RangeInclusive<usize>, seed: u64) -> Result<Vec<HilbertProfile>> {
    let t = tournament(n);
    let p = match mode {
        Mode::Gallai => Problem::Gallai(t.underlying()),
        Mode::Transitive => Problem::Transitive(&t),
    };
    ks.map(|k| hilbert_series(p, k, seed)).collect()
}

/// Decomposition for `K_n` or the tournament from the series at `k = 1..n-1`,
/// with the overdetermined check at `k = n` when `check_next` is set.
pub fn kj_for_complete(mode: Mode, n: usize, seed: u64, check_next: bool) -> Result<(KjDecomposition, Vec<Check>)> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let profiles = complete_problem_series(mode, n, 1..=n - 1, seed)?;
    let series: Vec<QPolynomial> = profiles.iter().map(|h| h.polynomial()).collect();
    let dec = kj_decompose(&series)?;
    let letter = if mode == Mode::Gallai { "Q" } else { "P" };
    let mut checks = vec![Check::holds(
        format!("{letter}_{{{n},j}} nonnegative"),
        dec.is_nonnegative(),
        dec.polys.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
    )];
    let t = tournament(n);
    let p = match mode {
        Mode::Gallai => Problem::Gallai(t.underlying()),
        Mode::Transitive => Problem::Transitive(&t),
    };
    let counts = partition_count_vector(p)?;
    for (j, pj) in dec.polys.iter().enumerate() {
        checks.push(Check::eq(format!("{letter}_{{{n},{}}}(1) = a_{}", j + 1, j + 1), BigInt::from(counts[j + 1]), pj.eval_i64(1)));
    }
    if mode == Mode::Transitive {
        let expected = QPolynomial::monomial(catalan(n as u64 - 1), (n - 1) * (n - 2) / 2);
        checks.push(Check::eq(format!("P_{{{n},{}}} leading form", n - 1), expected, dec.polys[n - 2].clone()));
    }
    if check_next {
        let h = hilbert_series(p, n, seed)?;
        checks.push(Check::eq(format!("reconstruction at k={n}"), h.polynomial(), dec.reconstruct(n)));
    }
    Ok((dec, checks))
}

/// `E(n, j)` by `E(n,j) = (j+1)E(n-1,j) + (2n-1-j)E(n-1,j-1)`.
pub fn second_order_eulerian(n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for j in 0..m {
            if j < e.len() {
                next[j] += &e[j] * (j + 1);
            }
            if j >= 1 {
                next[j] += &e[j - 1] * (2 * m - 1 - j);
            }
        }
        e = next;
    }
    e
}

/// Stirling permutations of `1,1,...,n,n` (entries between the two copies of
/// `m` exceed `m`), enumerated by keeping open values nested.
pub fn stirling_permutations(n: usize) -> Result<Vec<Vec<usize>>> {
    if n > STIRLING_LIMIT {
        return Err(Error::budget("Stirling permutation n", STIRLING_LIMIT as u64, n as u64));
    }
    fn go(n: usize, count: &mut Vec<u8>, stack: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == 2 * n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            let top = stack.last().copied();
            let opening = count[v] == 0 && top.map_or(true, |t| v > t);
            let closing = count[v] == 1 && top == Some(v);
            if !opening && !closing {
                continue;
            }
            count[v] += 1;
            cur.push(v);
            if opening {
                stack.push(v);
            } else {
                stack.pop();
            }
            go(n, count, stack, cur, out);
            if opening {
                stack.pop();
            } else {
                stack.push(v);
            }
            cur.pop();
            count[v] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![0; n + 1], &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// Descent distribution over Stirling permutations.
pub fn second_order_eulerian_brute(n: usize) -> Result<Vec<BigInt>> {
    let mut e = vec![BigInt::zero(); n.max(1)];
    for w in stirling_permutations(n)? {
        e[w.windows(2).filter(|p| p[0] > p[1]).count()] += 1;
    }
    Ok(e)
}

/// `Q_{n,n-1}` against `q^{C(n,2)-1} Σ_j E(n-1,j) q^{-j}`.
pub fn verify_q_conjecture(n: usize, seed: u64) -> Result<Vec<Check>> {
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    let e = second_order_eulerian(n - 1);
    let top = n * (n - 1) / 2 - 1;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (j, c) in e.iter().enumerate() {
        coeffs[top - j] += c;
    }
    let predicted = QPolynomial::new(coeffs);
    let (dec, _) = kj_for_complete(Mode::Gallai, n, seed, false)?;
    let mut out = vec![Check::eq(format!("Q_{{{n},{}}} = Eulerian prediction", n - 1), predicted, dec.polys[n - 2].clone())];
    if n - 1 <= STIRLING_LIMIT {
        let brute = second_order_eulerian_brute(n - 1)?;
        out.push(Check::eq(format!("E({},·) recurrence = Stirling count", n - 1), fmt_vec(&e), fmt_vec(&brute)));
    }
    Ok(out)
}

fn fmt_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Square-free monomials in `x_ij` (edge order of the tournament) with no
/// factor `x_im x_jm`, `i < j < m`.
pub fn monomial_basis_bn(n: usize) -> Result<Vec<ElementSet>> {
    if n > BASIS_LIMIT {
        return Err(Error::budget("basis n", BASIS_LIMIT as u64, n as u64));
    }
    let edges = complete_edges(n);
    let forbidden = |e: usize, f: usize| {
        let (a, b) = (edges[e], edges[f]);
        a.1 == b.1
    };
    let mut out = Vec::new();
    fn go(i: usize, cur: ElementSet, m: usize, forbidden: &dyn Fn(usize, usize) -> bool, out: &mut Vec<ElementSet>) {
        if i == m {
            out.push(cur);
            return;
        }
        go(i + 1, cur, m, forbidden, out);
        if cur.iter().all(|e| !forbidden(e, i)) {
            go(i + 1, cur.with(i), m, forbidden, out);
        }
    }
    go(0, ElementSet::EMPTY, edges.len(), &forbidden, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    Ok(out)
}

/// `∏_{i=0}^{n-1} (1 + iq)`.
pub fn stirling_product(n: usize) -> QPolynomial {
    (0..n as i64).fold(QPolynomial::one(), |acc, i| &acc * &QPolynomial::from_i64(&[1, i]))
}

/// Size and degree profile of `B_n`; for small `n`, also that its
/// evaluations at the transitive 2-colorings have full rank and that the
/// profile matches the Hilbert series.
pub fn verify_basis(n: usize, seed: u64) -> Result<Vec<Check>> {
    let basis = monomial_basis_bn(n)?;
    let mut degrees = vec![BigInt::zero(); n.max(1)];
    for s in &basis {
        degrees[s.len()] += 1;
    }
    let mut out = vec![
        Check::eq(format!("|B_{n}| = n!"), factorial(n as u64), BigInt::from(basis.len())),
        Check::eq(format!("B_{n} degree profile"), stirling_product(n), QPolynomial::new(degrees.clone())),
    ];
    if (2..=BASIS_RANK_LIMIT).contains(&n) {
        let t = tournament(n);
        let points = coloring_points(Problem::Transitive(&t), 2, None, HILBERT_POINT_LIMIT)?;
        let prime = hilbert_primes(2, seed)[0];
        let mut elim = ModP::new(prime, 2);
        let rank = basis
            .iter()
            .filter(|s| {
                let exps: Vec<u8> = points
                    .iter()
                    .map(|p| (s.iter().map(|e| p[e] as usize).sum::<usize>() % 2) as u8)
                    .collect();
                elim.insert(&exps)
            })
            .count();
        out.push(Check::eq(format!("B_{n} evaluation rank"), factorial(n as u64), BigInt::from(rank)));
        let h = hilbert_series(Problem::Transitive(&t), 2, seed)?;
        out.push(Check::eq(format!("B_{n} profile = Hilbert series"), h.polynomial(), QPolynomial::new(degrees)));
    }
    Ok(out)
}

/// `Hilb(T_{n,2}) = ∏_{i<n} (1 + iq)`.
pub fn ot_identity_check(n: usize, seed: u64) -> Result<Check> {
    let t = tournament(n);
    let h = hilbert_series(Problem::Transitive(&t), 2, seed)?;
    Ok(Check::eq(format!("Hilb(T_{{{n},2}}) = ∏(1+iq)"), stirling_product(n), h.polynomial()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::complete_graph;

    fn qp(v: &[i64]) -> QPolynomial {
        QPolynomial::from_i64(v)
    }

    #[test]
    fn points() {
        let t = tournament(3);
        assert_eq!(variety_points(Problem::Transitive(&t), 2).unwrap().points.len(), 6);
        let k3 = complete_graph(3);
        assert_eq!(variety_points(Problem::Gallai(&k3), 2).unwrap().points.len(), 8);
        assert_eq!(variety_points(Problem::Gallai(&k3), 1).unwrap().points, vec![vec![0, 0, 0]]);
    }

    #[test]
    fn primes_and_roots() {
        let ps = hilbert_primes(3, 0);
        for &p in &ps {
            assert!(p > PRIME_FLOOR && p % 3 == 1 && is_prime(p));
            let z = root_of_unity(3, p);
            assert_eq!(pow_mod(z, 3, p), 1);
            assert_ne!(z, 1);
        }
        assert_ne!(hilbert_primes(2, 7), hilbert_primes(2, 0));
    }

    #[test]
    fn small_series() {
        let t = tournament(3);
        let h = hilbert_series(Problem::Transitive(&t), 2, 0).unwrap();
        assert_eq!(h.increments, vec![1, 3, 2]);
        assert!(h.exact && h.agreed);
        let k3 = complete_graph(3);
        assert_eq!(hilbert_series(Problem::Gallai(&k3), 2, 0).unwrap().increments, vec![1, 3, 3, 1]);
        assert_eq!(hilbert_series(Problem::Gallai(&k3), 1, 0).unwrap().increments, vec![1]);
        let t4 = tournament(4);
        assert_eq!(hilbert_series(Problem::Transitive(&t4), 2, 0).unwrap().increments, vec![1, 6, 11, 6]);
        assert_eq!(hilbert_series(Problem::Transitive(&t4), 3, 0).unwrap().increments, vec![1, 6, 17, 27, 27, 16, 5]);
    }

    #[test]
    fn decomposition() {
        let d = kj_decompose(&[qp(&[1]), qp(&[1, 3, 2])]).unwrap();
        assert_eq!(d.polys, vec![qp(&[1]), qp(&[0, 2])]);
        let g = kj_decompose(&[qp(&[1]), qp(&[1, 3, 3, 1])]).unwrap();
        assert_eq!(g.polys, vec![qp(&[1]), qp(&[0, 2, 1])]);
        assert_eq!(g.reconstruct(2), qp(&[1, 3, 3, 1]));
        assert!(kj_decompose(&[qp(&[1]), qp(&[1, 2])]).is_err());
        assert_eq!(q_falling(2, 3), QPolynomial::zero());
        let (d, checks) = kj_for_complete(Mode::Transitive, 4, 0, true).unwrap();
        assert_eq!(d.polys, vec![qp(&[1]), qp(&[0, 5, 6]), qp(&[0, 0, 0, 5])]);
        for c in checks {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn tournament5_decomposition() {
        let (d, checks) = kj_for_complete(Mode::Transitive, 5, 0, false).unwrap();
        assert_eq!(d.polys[3], qp(&[0, 0, 0, 0, 0, 0, 14]));
        for c in verify_q_conjecture(4, 0).unwrap().into_iter().chain(checks) {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn eulerian() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(second_order_eulerian(1), b(&[1]));
        assert_eq!(second_order_eulerian(2), b(&[1, 2]));
        assert_eq!(second_order_eulerian(4), b(&[1, 22, 58, 24]));
        assert_eq!(stirling_permutations(2).unwrap(), vec![vec![1, 1, 2, 2], vec![1, 2, 2, 1], vec![2, 2, 1, 1]]);
        for n in 1..=5 {
            assert_eq!(second_order_eulerian_brute(n).unwrap(), second_order_eulerian(n));
        }
        for c in verify_q_conjecture(3, 0).unwrap() {
            assert!(c.pass, "{c:?}");
        }
    }

    #[test]
    fn basis() {
        let b2 = monomial_basis_bn(2).unwrap();
        assert_eq!(b2, vec![ElementSet::EMPTY, ElementSet::singleton(0)]);
        assert_eq!(monomial_basis_bn(3).unwrap().len(), 6);
        for c in verify_basis(4, 0).unwrap() {
            assert!(c.pass, "{c:?}");
        }
        assert!(ot_identity_check(2, 0).unwrap().pass);
        assert_eq!(stirling_product(3), qp(&[1, 3, 2]));
    }
}
