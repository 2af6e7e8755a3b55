use std::collections::BTreeMap;

use gallai_core::bijections::{gallai_to_matching, matching_to_gallai};
use gallai_core::enumeration::{
    acyclic_orientation_count, chamber_count, chromatic_polynomial, count_colorings, count_colorings_scan,
    maximal_gallai_partitions_kn, partition_counts, transitive_2count, Problem,
};
use gallai_core::matroid::{orthogonal, GroundSet, OrientedMatroid, SignedCircuit};
use gallai_core::set::ElementSet;
use gallai_core::symfunc::{
    f_to_monomial, kostka, monomial_to_f, partitions_of, schur_expand, schur_in_f, IntPartition, QSymF,
};
use gallai_core::verify::{random_config, random_digraph};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn permute(s: ElementSet, perm: &[usize]) -> ElementSet {
    let mut out = ElementSet::EMPTY;
    for e in s.iter() {
        out.insert(perm[e]);
    }
    out
}

fn relabeled(om: &OrientedMatroid, perm: &[usize]) -> OrientedMatroid {
    let circuits = om
        .signed_circuits()
        .iter()
        .map(|c| SignedCircuit::new(permute(c.pos, perm), permute(c.neg, perm)))
        .collect();
    OrientedMatroid::from_signed_circuits(GroundSet::new(om.size()), circuits).unwrap()
}

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_match_scan(seed in any::<u64>(), k in 1usize..=3) {
        let g = random_digraph(&mut ChaCha8Rng::seed_from_u64(seed), 6, 8);
        let om = OrientedMatroid::from_digraph(&g);
        for p in [Problem::Gallai(om.underlying()), Problem::Transitive(&om)] {
            let scanned = BigInt::from(count_colorings_scan(p, k).unwrap());
            prop_assert_eq!(count_colorings(p, k as u64).unwrap(), scanned);
        }
    }

    #[test]
    fn counts_invariant_under_relabeling(seed in any::<u64>(), pseed in any::<u64>()) {
        let g = random_digraph(&mut ChaCha8Rng::seed_from_u64(seed), 6, 10);
        let om = OrientedMatroid::from_digraph(&g);
        let other = relabeled(&om, &shuffled(om.size(), pseed));
        prop_assert_eq!(partition_counts(Problem::Transitive(&om)).unwrap(), partition_counts(Problem::Transitive(&other)).unwrap());
        prop_assert_eq!(
            partition_counts(Problem::Gallai(om.underlying())).unwrap(),
            partition_counts(Problem::Gallai(other.underlying())).unwrap()
        );
    }

    #[test]
    fn reorientation_is_an_involution(seed in any::<u64>(), bits in any::<u64>()) {
        let g = random_digraph(&mut ChaCha8Rng::seed_from_u64(seed), 6, 10);
        let om = OrientedMatroid::from_digraph(&g);
        let a = ElementSet::from_bits(bits).intersection(ElementSet::full(om.size()));
        let back = om.reorient(a).reorient(a);
        prop_assert_eq!(back.signed_circuits(), om.signed_circuits());
    }

    #[test]
    fn graphic_circuits_match_incidence_vectors(seed in any::<u64>()) {
        let g = random_digraph(&mut ChaCha8Rng::seed_from_u64(seed), 7, 10);
        let graphic = OrientedMatroid::from_digraph(&g);
        let vector = OrientedMatroid::from_vectors(&g.incidence_config()).unwrap();
        let mut a = graphic.signed_circuits().to_vec();
        let mut b = vector.signed_circuits().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn circuits_orthogonal_to_cocircuits(seed in any::<u64>()) {
        let v = random_config(&mut ChaCha8Rng::seed_from_u64(seed), 7);
        let om = OrientedMatroid::from_vectors(&v).unwrap();
        let cocircuits = om.abstract_cocircuits(ElementSet::full(om.size())).unwrap();
        for x in om.signed_circuits() {
            for y in &cocircuits {
                prop_assert!(orthogonal(*x, *y));
            }
        }
    }

    #[test]
    fn chambers_equal_two_count(seed in any::<u64>()) {
        let v = random_config(&mut ChaCha8Rng::seed_from_u64(seed), 7);
        let om = OrientedMatroid::from_vectors(&v).unwrap();
        prop_assert_eq!(chamber_count(&v).unwrap(), transitive_2count(&om).unwrap());
    }

    #[test]
    fn chromatic_at_minus_one_counts_acyclic_orientations(seed in any::<u64>()) {
        let g = random_digraph(&mut ChaCha8Rng::seed_from_u64(seed), 7, 12);
        let chi = chromatic_polynomial(&g).eval_i64(-1);
        let signed = if g.n() % 2 == 0 { chi } else { -chi };
        prop_assert_eq!(signed, acyclic_orientation_count(&g).unwrap());
    }

    #[test]
    fn monomial_round_trip(n in 1usize..=6, coeffs in proptest::collection::vec(-3i64..=3, 32)) {
        let mut q = QSymF::zero(n);
        for (bits, c) in coeffs.iter().enumerate().take(1 << (n - 1)) {
            q.add_term(ElementSet::from_bits((bits as u64) << 1), &BigInt::from(*c)).unwrap();
        }
        let d: BTreeMap<_, _> = f_to_monomial(&q);
        prop_assert_eq!(monomial_to_f(n, &d).unwrap(), q);
    }
}

#[test]
fn kostka_is_unitriangular() {
    for n in 1..=7 {
        let ps = partitions_of(n);
        for l in &ps {
            assert_eq!(kostka(l, l), BigInt::from(1));
            for m in &ps {
                if !l.dominates(m) {
                    assert_eq!(kostka(l, m), BigInt::from(0), "K({l},{m})");
                }
            }
        }
    }
}

#[test]
fn schur_functions_expand_to_themselves() {
    for n in 1..=6 {
        for l in partitions_of(n) {
            let s = schur_expand(&schur_in_f(&l).unwrap()).unwrap();
            let expected: BTreeMap<IntPartition, BigInt> = [(l.clone(), BigInt::from(1))].into_iter().collect();
            assert_eq!(s.coeffs, expected);
        }
    }
}

#[test]
fn matching_bijection_round_trips() {
    for n in 2..=6 {
        for p in maximal_gallai_partitions_kn(n).unwrap() {
            let m = gallai_to_matching(&p).unwrap();
            assert_eq!(matching_to_gallai(&m, n).unwrap(), p);
        }
    }
}
