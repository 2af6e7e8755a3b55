//! Verification suites: seeded fixtures and named families of checks.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{kj_for_complete, monomial_basis_bn, ot_identity_check, verify_basis, verify_q_conjecture};
use crate::bijections::{verify_bijections, verify_worked_example};
use crate::coloring::{
    is_gallai, is_transitive, max_gallai_coloring, max_transitive_coloring, rainbow_hamiltonian_paths,
    singleton_colors,
};
use crate::enumeration::{
    acyclic_orientation_count, acyclic_reorientation_classes, carlitz_riordan, chamber_count, chromatic_polynomial,
    count_colorings, count_colorings_scan, cycle_maximal_transitive_count, dihedral_counts, gallai_2count,
    maximal_gallai_count_kn_brute, maximal_gallai_count_kn_recursive, maximal_gallai_partitions_kn,
    maximal_transitive_count_tournament, partition_counts, partitions_per_rainbow_path, qcatalan_distribution,
    reorientation_classes_by_division, tournament, transitive_2count, type_b_conjecture_check, Mode, Problem,
};
use crate::error::{Error, Result};
use crate::matroid::{DirectedGraph, Family, GroundSet, OrientedMatroid, RootSystemId, VectorConfig};
use crate::partition::{Coloring, SetPartition};
use crate::poly::{catalan, double_factorial_odd, factorial};
use crate::rational::Q;
use crate::report::Check;
use crate::set::ElementSet;
use crate::symfunc::{
    cycle_qsym, syt_fiber_closed_form, syt_fiber_count, verify_321, verify_descent_fibers, verify_m1g, verify_m3d,
    verify_m3u, verify_matching_schur, verify_fiber_premise,
};

/// Default seed for fixtures and prime selection.
pub const DEFAULT_SEED: u64 = 20_240_229;
/// Ground size up to which every set partition is checked directly.
pub const EXHAUSTIVE_GROUND_LIMIT: usize = 7;

/// Random loopless digraph on at most `max_n` vertices, oriented along a
/// random vertex order so it is acyclic, with occasional parallel edges.
pub fn random_digraph(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> DirectedGraph {
    let n = rng.gen_range(2..=max_n);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if edges.len() < max_edges && rng.gen_bool(0.5) {
                edges.push((order[i], order[j]));
                if edges.len() < max_edges && rng.gen_bool(0.1) {
                    edges.push((order[i], order[j]));
                }
            }
        }
    }
    if edges.is_empty() {
        edges.push((order[0], order[1]));
    }
    DirectedGraph::new(n, edges).expect("fixture edges are valid")
}

/// Random multigraph with many parallel edges, as a digraph.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_n: usize, max_edges: usize) -> DirectedGraph {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(1..=max_edges);
    let edges = (0..m)
        .map(|_| {
            let u = rng.gen_range(1..=n);
            let mut v = rng.gen_range(1..n);
            if v >= u {
                v += 1;
            }
            (u.min(v), u.max(v))
        })
        .collect();
    DirectedGraph::new(n, edges).expect("fixture edges are valid")
}

/// Random rational configuration with positive first coordinates, hence
/// loopless and acyclic.
pub fn random_config(rng: &mut ChaCha8Rng, max_cols: usize) -> VectorConfig {
    let d = rng.gen_range(2..=4);
    let m = rng.gen_range(2..=max_cols);
    let columns = (0..m)
        .map(|_| {
            (0..d)
                .map(|i| {
                    let den = rng.gen_range(1..=2i64);
                    let num = if i == 0 { rng.gen_range(1..=3i64) } else { rng.gen_range(-2..=2i64) };
                    Q::new(num.into(), den.into())
                })
                .collect()
        })
        .collect();
    VectorConfig::new(d, columns).expect("fixture columns are valid")
}

/// The circuit system of `om` without its representation.
pub fn as_abstract(om: &OrientedMatroid) -> Result<OrientedMatroid> {
    OrientedMatroid::from_signed_circuits(GroundSet::new(om.size()), om.signed_circuits().to_vec())
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn root(family: Family, n: usize) -> Result<OrientedMatroid> {
    OrientedMatroid::root_system(RootSystemId::new(family, n)?)
}

fn named_roots(a: RangeInclusive<usize>, b: RangeInclusive<usize>, i2: RangeInclusive<usize>) -> Result<Vec<(String, OrientedMatroid)>> {
    let mut out = Vec::new();
    for n in a {
        out.push((format!("A_{n}"), root(Family::A, n)?));
    }
    for n in b {
        out.push((format!("B_{n}"), root(Family::B, n)?));
    }
    for n in i2 {
        out.push((format!("I2({n})"), root(Family::I2, n)?));
    }
    Ok(out)
}

/// Every set partition of `0..m` by restricted growth strings.
fn all_set_partitions(m: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0u8; m];
    fn go(i: usize, top: u8, rgs: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            out.push(SetPartition::from_rgs(rgs.clone()).expect("valid rgs"));
            return;
        }
        for b in 0..=top {
            rgs[i] = b;
            go(i + 1, if b == top { top + 1 } else { top }, rgs, out);
        }
    }
    if m == 0 {
        return vec![SetPartition::from_rgs(Vec::new()).expect("empty rgs")];
    }
    go(1, 1, &mut rgs, &mut out);
    out
}

/// Largest block count over all valid partitions, by direct scan.
fn exhaustive_max_blocks(p: Problem) -> Result<usize> {
    let mut best = 0;
    for q in all_set_partitions(p.size()) {
        if q.num_blocks() > best && p.is_valid(&Coloring::from_partition(&q))? {
            best = q.num_blocks();
        }
    }
    Ok(best)
}

/// Maximal colorings are valid with `rank` colors; for small ground sets no
/// valid coloring uses more.
fn rank_checks(label: &str, om: Option<&OrientedMatroid>, m: &crate::matroid::Matroid) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let r = m.rank();
    let c = max_gallai_coloring(m, None)?;
    if !is_gallai(m, &c) || c.colors_used() != r {
        bad.push(format!("{label}: Gallai coloring {:?} with rank {r}", c.values()));
    }
    if m.size() <= EXHAUSTIVE_GROUND_LIMIT {
        let best = exhaustive_max_blocks(Problem::Gallai(m))?;
        if best != r {
            bad.push(format!("{label}: exhaustive Gallai maximum {best}, rank {r}"));
        }
    }
    if let Some(om) = om {
        let c = max_transitive_coloring(om)?;
        if !is_transitive(om, &c)? || c.colors_used() != r {
            bad.push(format!("{label}: transitive coloring {:?} with rank {r}", c.values()));
        }
        if om.size() <= EXHAUSTIVE_GROUND_LIMIT {
            let best = exhaustive_max_blocks(Problem::Transitive(om))?;
            if best != r {
                bad.push(format!("{label}: exhaustive transitive maximum {best}, rank {r}"));
            }
        }
    }
    Ok(bad)
}

fn collect(name: impl Into<String>, total: usize, result: Result<Vec<String>>) -> Check {
    let name = name.into();
    match result {
        Ok(bad) => Check::holds(format!("{name} ({total} cases)"), bad.is_empty(), bad.join("; ")),
        Err(e) => Check::error(name, e),
    }
}

fn over<T>(items: &[T], f: impl Fn(&T) -> Result<Vec<String>>) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for x in items {
        bad.extend(f(x)?);
    }
    Ok(bad)
}

/// Maximal Gallai and transitive colorings use exactly `rank` colors.
pub fn rank_theorems(seed: u64, graphs: usize, configs: usize) -> Vec<Check> {
    let mut r = rng(seed, 1);
    let gs: Vec<DirectedGraph> = (0..graphs).map(|_| random_digraph(&mut r, 7, 12)).collect();
    let vs: Vec<VectorConfig> = (0..configs).map(|_| random_config(&mut r, 8)).collect();
    let mut out = vec![
        collect(
            "rank theorems on random graphs",
            gs.len(),
            over(&gs, |g| {
                let om = OrientedMatroid::from_digraph(g);
                rank_checks(&format!("{g:?}"), Some(&om), om.underlying())
            }),
        ),
        collect(
            "rank theorems on random configurations",
            vs.len(),
            over(&vs, |v| {
                let om = OrientedMatroid::from_vectors(v)?;
                rank_checks(&format!("{v:?}"), Some(&om), om.underlying())
            }),
        ),
    ];
    match named_roots(1..=5, 2..=4, 2..=8) {
        Ok(roots) => out.push(collect(
            "rank theorems on root systems",
            roots.len(),
            over(&roots, |(name, om)| rank_checks(name, Some(om), om.underlying())),
        )),
        Err(e) => out.push(Check::error("rank theorems on root systems", e)),
    }
    out
}

fn polynomial_checks(label: &str, p: Problem) -> Result<Vec<String>> {
    let poly = partition_counts(p)?;
    let mut bad = Vec::new();
    for k in 1..=4usize {
        let counted = count_colorings(p, k as u64)?;
        let scanned = BigInt::from(count_colorings_scan(p, k)?);
        let falling = poly.eval(k as u64);
        if counted != scanned || falling != scanned {
            bad.push(format!("{label} {} k={k}: {counted} / {falling} vs scan {scanned}", p.mode()));
        }
    }
    Ok(bad)
}

/// Coloring counts agree with a brute-force scan and with `Σ a_j (k)_j`.
pub fn polynomiality(seed: u64, graphs: usize, configs: usize) -> Vec<Check> {
    let mut r = rng(seed, 1);
    let gs: Vec<DirectedGraph> = (0..graphs).map(|_| random_digraph(&mut r, 7, 8)).collect();
    let vs: Vec<VectorConfig> = (0..configs).map(|_| random_config(&mut r, 8)).collect();
    let mut oms: Vec<(String, OrientedMatroid)> = Vec::new();
    for g in &gs {
        oms.push((format!("{g:?}"), OrientedMatroid::from_digraph(g)));
    }
    for v in &vs {
        match OrientedMatroid::from_vectors(v) {
            Ok(om) => oms.push((format!("{v:?}"), om)),
            Err(e) => return vec![Check::error("polynomiality", e)],
        }
    }
    match named_roots(1..=3, 2..=2, 2..=8) {
        Ok(roots) => oms.extend(roots),
        Err(e) => return vec![Check::error("polynomiality", e)],
    }
    oms.retain(|(_, om)| om.size() <= 8);
    vec![collect(
        "count_colorings = scan = Σ a_j (k)_j, k = 1..4",
        oms.len(),
        over(&oms, |(name, om)| {
            let mut bad = polynomial_checks(name, Problem::Gallai(om.underlying()))?;
            bad.extend(polynomial_checks(name, Problem::Transitive(om))?);
            Ok(bad)
        }),
    )]
}

/// Transitive 2-colorings of the tournament number `n!`.
pub fn tournament_factorials(ns: RangeInclusive<usize>) -> Vec<Check> {
    ns.map(|n| {
        let t = tournament(n);
        match count_colorings(Problem::Transitive(&t), 2) {
            Ok(c) => Check::eq(format!("p_T{n}(2) = {n}!"), factorial(n as u64), c),
            Err(e) => Check::error(format!("p_T{n}(2)"), e),
        }
    })
    .collect()
}

/// Gallai 2-colorings number `2^(parallel classes)`, against partition
/// enumeration and a direct scan.
pub fn gallai_two_colorings(seed: u64, fixtures: usize) -> Vec<Check> {
    let mut r = rng(seed, 2);
    let gs: Vec<DirectedGraph> = (0..fixtures).map(|_| random_multigraph(&mut r, 6, 12)).collect();
    vec![collect(
        "Gallai 2-count = 2^(parallel classes) on multigraphs",
        gs.len(),
        over(&gs, |g| {
            let om = OrientedMatroid::from_digraph(g);
            let m = om.underlying();
            let p = Problem::Gallai(m);
            let formula = gallai_2count(m)?;
            let counted = count_colorings(p, 2)?;
            let scanned = BigInt::from(count_colorings_scan(p, 2)?);
            Ok(if formula == counted && counted == scanned {
                Vec::new()
            } else {
                vec![format!("{g:?}: 2^c = {formula}, enumerated {counted}, scanned {scanned}")]
            })
        }),
    )]
}

fn two_count_checks(label: &str, om: &OrientedMatroid) -> Result<Vec<String>> {
    let t = transitive_2count(om)?;
    let c = om.connected_components().num_blocks();
    let classes = acyclic_reorientation_classes(om)?;
    let by_division = reorientation_classes_by_division(om)?;
    let expected = &classes << c;
    Ok(if t == expected && classes == by_division {
        Vec::new()
    } else {
        vec![format!("{label}: 2-count {t}, 2^{c} x {classes} classes, division {by_division}")]
    })
}

/// `transitive_2count = 2^c × reorientation classes`; for digraphs it also
/// equals the acyclic orientation count and `(-1)^n χ_G(-1)`.
pub fn transitive_two_colorings(seed: u64, fixtures: usize) -> Vec<Check> {
    let mut r = rng(seed, 3);
    let gs: Vec<DirectedGraph> = (0..fixtures).map(|_| random_digraph(&mut r, 7, 12)).collect();
    let abstract_check = over(&gs, |g| {
        let om = as_abstract(&OrientedMatroid::from_digraph(g))?;
        two_count_checks(&format!("{g:?}"), &om)
    });
    let sums = over(&gs.chunks(2).filter(|c| c.len() == 2).collect::<Vec<_>>(), |pair| {
        let a = as_abstract(&OrientedMatroid::from_digraph(&pair[0]))?;
        let b = as_abstract(&OrientedMatroid::from_digraph(&pair[1]))?;
        if a.size() + b.size() > 16 {
            return Ok(Vec::new());
        }
        two_count_checks(&format!("{:?} + {:?}", pair[0], pair[1]), &a.direct_sum(&b)?)
    });
    let graphs = over(&gs, |g| {
        let om = OrientedMatroid::from_digraph(g);
        let t = transitive_2count(&om)?;
        let acyclic = acyclic_orientation_count(g)?;
        let chi = chromatic_polynomial(g).eval_i64(-1);
        let chromatic = if g.n() % 2 == 0 { chi } else { -chi };
        Ok(if t == acyclic && acyclic == chromatic {
            Vec::new()
        } else {
            vec![format!("{g:?}: 2-count {t}, acyclic orientations {acyclic}, (-1)^n f(-1) = {chromatic}")]
        })
    });
    vec![
        collect("2-count = 2^c x reorientation classes (abstract)", gs.len(), abstract_check),
        collect("2-count = 2^c x reorientation classes (direct sums)", gs.len() / 2, sums),
        collect("2-count = acyclic orientations = (-1)^n f(-1)", gs.len(), graphs),
    ]
}

/// Acyclic reorientations counted directly over all sign flips.
pub fn acyclic_reorientation_scan(om: &OrientedMatroid) -> Result<BigInt> {
    if om.size() > 20 {
        return Err(Error::Budget {
            what: "reorientation scan ground size",
            limit: 20,
            actual: om.size() as u64,
        });
    }
    let count = (0u64..1 << om.size())
        .filter(|&a| om.reorient(ElementSet::from_bits(a)).is_acyclic())
        .count();
    Ok(BigInt::from(count))
}

/// Chamber counts of Coxeter arrangements and of random configurations.
pub fn chambers(seed: u64, configs: usize, max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let a = root(Family::A, n - 1).and_then(|om| transitive_2count(&om));
        out.push(match a {
            Ok(c) => Check::eq(format!("Φ⁺(A_{}) 2-count = {n}!", n - 1), factorial(n as u64), c),
            Err(e) => Check::error(format!("Φ⁺(A_{})", n - 1), e),
        });
        let b = root(Family::B, n).and_then(|om| transitive_2count(&om));
        out.push(match b {
            Ok(c) => Check::eq(format!("Φ⁺(B_{n}) 2-count = 2^{n} {n}!"), factorial(n as u64) << n, c),
            Err(e) => Check::error(format!("Φ⁺(B_{n})"), e),
        });
    }
    let mut r = rng(seed, 4);
    let vs: Vec<VectorConfig> = (0..configs).map(|_| random_config(&mut r, 8)).collect();
    out.push(collect(
        "Zaslavsky chamber count = direct scan = 2-count",
        vs.len(),
        over(&vs, |v| {
            let om = OrientedMatroid::from_vectors(v)?;
            let z = chamber_count(v)?;
            let scan = acyclic_reorientation_scan(&om)?;
            let t = transitive_2count(&om)?;
            Ok(if z == scan && scan == t {
                Vec::new()
            } else {
                vec![format!("{v:?}: Zaslavsky {z}, scan {scan}, 2-count {t}")]
            })
        }),
    ));
    out
}

fn check_or_error(name: String, r: Result<(BigInt, BigInt)>) -> Check {
    match r {
        Ok((e, a)) => Check::eq(name, e, a),
        Err(err) => Check::error(name, err),
    }
}

/// `G_{n,n-1} = (2n-3)!!` by brute force and by recursion.
pub fn double_factorial_counts(brute: RangeInclusive<usize>, recursive: RangeInclusive<usize>) -> Vec<Check> {
    let mut out: Vec<Check> = brute
        .map(|n| {
            check_or_error(
                format!("G_{{{n},{}}} = (2n-3)!! (brute force)", n - 1),
                maximal_gallai_count_kn_brute(n).map(|c| (double_factorial_odd(n as i64 - 1), c)),
            )
        })
        .collect();
    out.extend(recursive.map(|n| {
        check_or_error(
            format!("G_{{{n},{}}} = (2n-3)!! (recursion)", n - 1),
            maximal_gallai_count_kn_recursive(n).map(|c| (double_factorial_odd(n as i64 - 1), c)),
        )
    }));
    out
}

/// Every maximal Gallai coloring of `K_n` has `2^{n-1}` rainbow Hamiltonian
/// paths and a singleton color.
pub fn rainbow_paths(ns: RangeInclusive<usize>) -> Vec<Check> {
    ns.map(|n| {
        let name = format!("K_{n}: 2^{} rainbow Hamiltonian paths and a singleton color", n - 1);
        let result = maximal_gallai_partitions_kn(n).and_then(|ps| {
            over(&ps, |p| {
                let c = Coloring::from_partition(p);
                let paths = rainbow_hamiltonian_paths(&c)?.len();
                let singles = singleton_colors(&c).len();
                Ok(if paths == 1 << (n - 1) && singles >= 1 {
                    Vec::new()
                } else {
                    vec![format!("{}: {paths} paths, {singles} singleton colors", p.to_rgs_string())]
                })
            })
        });
        collect(name, 0, result)
    })
    .collect()
}

/// `T_{n,n-1} = C_{n-1}` and the Catalan count of partitions per rainbow path.
pub fn catalan_counts(tournaments: RangeInclusive<usize>, per_path: RangeInclusive<usize>) -> Vec<Check> {
    let mut out: Vec<Check> = tournaments
        .map(|n| {
            check_or_error(
                format!("T_{{{n},{}}} = C_{}", n - 1, n - 1),
                maximal_transitive_count_tournament(n).map(|c| (catalan(n as u64 - 1), c)),
            )
        })
        .collect();
    out.extend(per_path.map(|n| {
        check_or_error(
            format!("partitions per rainbow path of K_{n} = C_{}", n - 1),
            partitions_per_rainbow_path(n).map(|c| (catalan(n as u64 - 1), c)),
        )
    }));
    out
}

/// `Σ q^{edgeright} = q^{C(n,2)} C_{n-1}(q^{-1})`.
pub fn qcatalan(ns: RangeInclusive<usize>) -> Vec<Check> {
    ns.map(|n| {
        let name = format!("q-Catalan n={n}");
        match qcatalan_distribution(n) {
            Ok(lhs) => Check::eq(name, carlitz_riordan(n - 1).reverse(n * (n - 1) / 2), lhs),
            Err(e) => Check::error(name, e),
        }
    })
    .collect()
}

fn flatten(name: String, r: Result<Vec<Check>>) -> Vec<Check> {
    r.unwrap_or_else(|e| vec![Check::error(name, e)])
}

/// Symmetry and Schur positivity for `1 <= k < n`, with the fiber premise.
pub fn m1g(ns: RangeInclusive<usize>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        for k in 1..n {
            out.extend(flatten(format!("m1g n={n} k={k}"), verify_m1g(n, k)));
            for mode in [Mode::Gallai, Mode::Transitive] {
                out.extend(flatten(format!("fiber premise {mode} n={n} k={k}"), verify_fiber_premise(mode, n, k)));
            }
        }
    }
    out
}

/// `Q(T_{n,n-1})` as a restricted character, and the SYT fiber counts.
pub fn m3d(ns: RangeInclusive<usize>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        out.extend(flatten(format!("m3d n={n}"), verify_m3d(n)));
        let mut bad = Vec::new();
        let mut failed = None;
        for bits in 0u64..1 << (n - 1) {
            let j = ElementSet::from_bits(bits << 1);
            match syt_fiber_count(n, j) {
                Ok(c) if c == syt_fiber_closed_form(n, j) => {}
                Ok(c) => bad.push(format!("{j:?}: {c}")),
                Err(e) => failed = Some(e),
            }
        }
        let name = format!("SYT({0},{0}) fibers = C_(n-|J|-1), n={n}", n - 1);
        out.push(match failed {
            Some(e) => Check::error(name, e),
            None => Check::holds(name, bad.is_empty(), bad.join("; ")),
        });
        out.extend(flatten(format!("transitive descent fibers n={n}"), verify_descent_fibers(Mode::Transitive, n)));
    }
    out
}

/// `Q(G_{n,n-1})` through matchings, with the matching Schur identity.
pub fn m3u(ns: RangeInclusive<usize>, matchings: RangeInclusive<usize>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        out.extend(flatten(format!("m3u n={n}"), verify_m3u(n)));
        out.extend(flatten(format!("Gallai descent fibers n={n}"), verify_descent_fibers(Mode::Gallai, n)));
    }
    for n in matchings {
        out.extend(flatten(format!("matching Schur identity n={n}"), verify_matching_schur(n)));
    }
    out
}

pub fn pattern_321(ns: RangeInclusive<usize>) -> Vec<Check> {
    ns.flat_map(|n| flatten(format!("321 n={n}"), verify_321(n))).collect()
}

/// Hook-Schur expansions of the cycle families and the maximal transitive
/// count `m(n-m)(n-1)!` of cycles with `m` clockwise edges.
pub fn cycles(ns: RangeInclusive<usize>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        for mode in [Mode::Gallai, Mode::Transitive] {
            let mut bad = Vec::new();
            let mut failed = None;
            for k in 1..n {
                match cycle_qsym(mode, n, k) {
                    Ok(c) => {
                        if !c.fibers_uniform || !c.hook_expansion || c.hooks.iter().any(|h| h < &BigInt::zero()) {
                            bad.push(format!("k={k}: hooks {:?}, uniform {}, hook expansion {}", c.hooks, c.fibers_uniform, c.hook_expansion));
                        }
                    }
                    Err(e) => failed = Some(e),
                }
            }
            let name = format!("{mode} cycle n={n}: hook-Schur positive for all k");
            out.push(match failed {
                Some(e) => Check::error(name, e),
                None => Check::holds(name, bad.is_empty(), bad.join("; ")),
            });
        }
        if n <= 7 {
            for m in 1..n {
                out.push(check_or_error(
                    format!("maximal transitive colorings of C_{n} with {m} clockwise = m(n-m)(n-1)!"),
                    cycle_maximal_transitive_count(n, m).map(|c| (factorial(n as u64 - 1) * (m * (n - m)), c)),
                ));
            }
        }
    }
    out
}

pub fn bijections(ns: RangeInclusive<usize>) -> Vec<Check> {
    let mut out: Vec<Check> = ns.flat_map(|n| flatten(format!("bijections n={n}"), verify_bijections(n))).collect();
    out.extend(flatten("worked example".into(), verify_worked_example()));
    out
}

/// Hilbert series of `T_{n,2}` and the monomial basis `B_n`.
pub fn hilbert(ns: RangeInclusive<usize>, basis_sizes: RangeInclusive<usize>, seed: u64) -> Vec<Check> {
    let mut out: Vec<Check> = ns
        .clone()
        .map(|n| ot_identity_check(n, seed).unwrap_or_else(|e| Check::error(format!("Hilb(T_{{{n},2}})"), e)))
        .collect();
    for n in ns.filter(|&n| n >= 2) {
        out.extend(flatten(format!("basis B_{n}"), verify_basis(n, seed)));
    }
    for n in basis_sizes {
        out.push(check_or_error(
            format!("|B_{n}| = {n}!"),
            monomial_basis_bn(n).map(|b| (factorial(n as u64), BigInt::from(b.len()))),
        ));
    }
    out
}

/// `[k]_j` decompositions for the tournament and `K_n`.
pub fn kj(transitive: RangeInclusive<usize>, gallai: RangeInclusive<usize>, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    for (mode, ns) in [(Mode::Transitive, transitive), (Mode::Gallai, gallai)] {
        for n in ns {
            out.extend(flatten(
                format!("{mode} [k]_j decomposition n={n}"),
                kj_for_complete(mode, n, seed, n <= 4).map(|(_, c)| c),
            ));
        }
    }
    out
}

pub fn eulerian(ns: RangeInclusive<usize>, seed: u64) -> Vec<Check> {
    ns.flat_map(|n| flatten(format!("Eulerian prediction n={n}"), verify_q_conjecture(n, seed))).collect()
}

/// Type-B maximal transitive partitions against the conjectured formula.
pub fn type_b(ns: RangeInclusive<usize>) -> Vec<Check> {
    ns.map(|n| match type_b_conjecture_check(n) {
        Ok(r) => Check::eq(format!("type B n={n}: enumerated vs formula"), r.formula, r.enumerated),
        Err(e) => Check::error(format!("type B n={n}"), e),
    })
    .collect()
}

/// `I2(n)`: `2n` transitive 2-colorings, `n-1` maximal transitive and
/// `2^{n-1}-1` maximal Gallai partitions.
pub fn dihedral(ns: RangeInclusive<usize>) -> Vec<Check> {
    let mut out = Vec::new();
    for n in ns {
        match dihedral_counts(n) {
            Ok(d) => {
                out.push(Check::eq(format!("I2({n}) 2-count = {}", 2 * n), BigInt::from(2 * n), d.two_colorings));
                out.push(Check::eq(format!("I2({n}) maximal transitive = n-1"), BigInt::from(n - 1), d.max_transitive_partitions));
                out.push(Check::eq(
                    format!("I2({n}) maximal Gallai = 2^(n-1)-1"),
                    (BigInt::one() << (n - 1)) - 1,
                    d.max_gallai_partitions,
                ));
            }
            Err(e) => out.push(Check::error(format!("I2({n})"), e)),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    RankTheorems,
    Polynomiality,
    TwoColorings,
    Catalan,
    DoubleFact,
    QCatalan,
    M1g,
    M3d,
    M3u,
    Pattern321,
    Bijections,
    Hilbert,
    Kj,
    Eulerian,
    TypeB,
    Dihedral,
    Cycles,
}

impl Suite {
    pub const ALL: [Suite; 17] = [
        Suite::RankTheorems,
        Suite::Polynomiality,
        Suite::TwoColorings,
        Suite::Catalan,
        Suite::DoubleFact,
        Suite::QCatalan,
        Suite::M1g,
        Suite::M3d,
        Suite::M3u,
        Suite::Pattern321,
        Suite::Bijections,
        Suite::Hilbert,
        Suite::Kj,
        Suite::Eulerian,
        Suite::TypeB,
        Suite::Dihedral,
        Suite::Cycles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RankTheorems => "rank-theorems",
            Suite::Polynomiality => "polynomiality",
            Suite::TwoColorings => "2-colorings",
            Suite::Catalan => "catalan",
            Suite::DoubleFact => "doublefact",
            Suite::QCatalan => "qcatalan",
            Suite::M1g => "m1g",
            Suite::M3d => "m3d",
            Suite::M3u => "m3u",
            Suite::Pattern321 => "321",
            Suite::Bijections => "bijections",
            Suite::Hilbert => "hilbert",
            Suite::Kj => "kj",
            Suite::Eulerian => "eulerian",
            Suite::TypeB => "typeB",
            Suite::Dihedral => "dihedral",
            Suite::Cycles => "cycles",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Run only this size where the suite is indexed by `n`.
    pub n: Option<usize>,
    /// Reduced ranges and fixture counts.
    pub small: bool,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n: None,
            small: false,
            seed: DEFAULT_SEED,
        }
    }
}

impl SuiteOptions {
    fn range(&self, lo: usize, full: usize, small: usize) -> RangeInclusive<usize> {
        match self.n {
            Some(n) => n..=n,
            None if self.small => lo..=small.min(full),
            None => lo..=full,
        }
    }

    fn fixtures(&self, full: usize) -> usize {
        if self.small {
            (full / 5).max(1)
        } else {
            full
        }
    }
}

/// Runs one suite; errors become failing checks.
pub fn run_suite(suite: Suite, o: &SuiteOptions) -> Vec<Check> {
    let seed = o.seed;
    match suite {
        Suite::RankTheorems => rank_theorems(seed, o.fixtures(200), o.fixtures(50)),
        Suite::Polynomiality => polynomiality(seed, o.fixtures(200), o.fixtures(50)),
        Suite::TwoColorings => {
            let mut out = tournament_factorials(o.range(2, 7, 6));
            out.extend(gallai_two_colorings(seed, o.fixtures(100)));
            out.extend(transitive_two_colorings(seed, o.fixtures(100)));
            out.extend(chambers(seed, o.fixtures(30), 4));
            out
        }
        Suite::Catalan => catalan_counts(o.range(2, 7, 6), o.range(2, 5, 5)),
        Suite::DoubleFact => {
            let mut out = double_factorial_counts(o.range(2, 6, 5), o.range(2, 10, 8));
            out.extend(rainbow_paths(o.range(2, 5, 4)));
            out
        }
        Suite::QCatalan => qcatalan(o.range(2, 6, 5)),
        Suite::M1g => m1g(o.range(2, 6, 5)),
        Suite::M3d => m3d(o.range(2, 7, 6)),
        Suite::M3u => m3u(o.range(2, 6, 5), o.range(1, 5, 4)),
        Suite::Pattern321 => pattern_321(o.range(2, 7, 6)),
        Suite::Bijections => bijections(o.range(2, 5, 5)),
        Suite::Hilbert => hilbert(o.range(1, 6, 5), o.range(1, 8, 7), seed),
        Suite::Kj => kj(o.range(2, 5, 4), o.range(2, 4, 4), seed),
        Suite::Eulerian => eulerian(o.range(2, 4, 4), seed),
        Suite::TypeB => type_b(o.range(2, 4, 3)),
        Suite::Dihedral => dihedral(o.range(2, 8, 6)),
        Suite::Cycles => cycles(o.range(3, 8, 6)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn set_partitions_are_bell_many() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (m, &b) in bell.iter().enumerate() {
            assert_eq!(all_set_partitions(m).len(), b);
        }
    }

    #[test]
    fn fixtures_are_deterministic() {
        let a = random_config(&mut rng(5, 4), 8);
        let b = random_config(&mut rng(5, 4), 8);
        assert_eq!(a, b);
        let g = random_digraph(&mut rng(5, 1), 7, 12);
        assert!(OrientedMatroid::from_digraph(&g).is_acyclic());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let o = SuiteOptions {
            n: Some(4),
            small: true,
            seed: DEFAULT_SEED,
        };
        for s in [Suite::Catalan, Suite::QCatalan, Suite::M3d, Suite::Dihedral, Suite::Cycles, Suite::Bijections] {
            let checks = run_suite(s, &o);
            assert!(all_pass(&checks), "{s}: {checks:?}");
        }
    }
}
