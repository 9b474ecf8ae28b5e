use num_bigint::BigUint;
use num_rational::BigRational;
use permchan_core::counting::{
    alternating_substitution, count_ancilla_polya, count_classical_burnside, count_group,
    count_named, count_quantum_totally_orthogonal, cycle_index_of_group, cycle_index_symmetric,
    series_coefficient_nq, QuantumStrategy,
};
use permchan_core::perm_core::{make_named_group, orbits, GroupKind};
use permchan_core::rep_theory::{na_oracle, nq_oracle};
use permchan_core::Error;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn triple(kind: GroupKind, n: usize, d: usize) -> (BigUint, BigUint, BigUint) {
    let r = count_named(kind, n, d).unwrap();
    (r.classical.value, r.quantum.unwrap().value, r.ancilla.value)
}

#[test]
fn reference_values() {
    // brute-force sums over explicit group elements
    let cases = [
        (GroupKind::Cyclic, 4, 2, (6, 16, 70)),
        (GroupKind::Symmetric, 3, 2, (4, 6, 20)),
        (GroupKind::Dihedral, 4, 2, (6, 13, 55)),
        (GroupKind::Dihedral, 6, 3, (92, 489, 46185)),
        (GroupKind::Dihedral, 5, 2, (8, 20, 136)),
        (GroupKind::Dihedral, 3, 3, (10, 19, 165)),
        (GroupKind::Symmetric, 5, 3, (21, 69, 1287)),
        (GroupKind::Symmetric, 4, 2, (5, 9, 35)),
        (GroupKind::Cyclic, 6, 3, (130, 729, 88725)),
    ];
    for (kind, n, d, (c, q, a)) in cases {
        assert_eq!(
            triple(kind, n, d),
            (big(c), big(q), big(a)),
            "{kind} n={n} d={d}"
        );
    }
}

#[test]
fn burnside_matches_orbit_enumeration() {
    for kind in [GroupKind::Cyclic, GroupKind::Dihedral, GroupKind::Symmetric] {
        for n in 1..=8 {
            if kind == GroupKind::Symmetric && n > 6 {
                continue;
            }
            let g = make_named_group(kind, n).unwrap();
            for d in 1..=3 {
                let brute = orbits(&g, d).unwrap().len();
                assert_eq!(count_classical_burnside(&g, d).unwrap(), big(brute as u64));
            }
        }
    }
}

#[test]
fn closed_forms_match_generic_sums() {
    for kind in [GroupKind::Cyclic, GroupKind::Dihedral, GroupKind::Symmetric] {
        for n in 1..=8 {
            if kind == GroupKind::Symmetric && n > 7 {
                continue;
            }
            let g = make_named_group(kind, n).unwrap();
            for d in 1..=3 {
                let closed = count_named(kind, n, d).unwrap();
                let generic = count_group(&g, d, QuantumStrategy::OracleFallback).unwrap();
                let label = format!("{kind} n={n} d={d}");
                assert_eq!(closed.classical.value, generic.classical.value, "{label}");
                assert_eq!(closed.ancilla.value, generic.ancilla.value, "{label}");
                assert_eq!(
                    closed.quantum.unwrap().value,
                    generic.quantum.unwrap().value,
                    "{label}"
                );
            }
        }
    }
}

#[test]
fn quantum_counts_agree_with_the_character_oracle() {
    for (kind, max_n) in [(GroupKind::Dihedral, 7), (GroupKind::Symmetric, 5)] {
        for n in 3..=max_n {
            let g = make_named_group(kind, n).unwrap();
            for d in 2..=3 {
                let formula = count_quantum_totally_orthogonal(&g, d, true).unwrap();
                assert_eq!(formula, nq_oracle(&g, d).unwrap(), "{kind} n={n} d={d}");
                assert_eq!(
                    count_ancilla_polya(&g, d).unwrap(),
                    na_oracle(&g, d).unwrap()
                );
            }
        }
    }
}

#[test]
fn certification_rejects_cyclic_groups() {
    for n in 3..=6 {
        let g = make_named_group(GroupKind::Cyclic, n).unwrap();
        assert!(matches!(
            count_quantum_totally_orthogonal(&g, 2, true),
            Err(Error::NotTotallyOrthogonal { .. })
        ));
        let generic = count_group(&g, 2, QuantumStrategy::CertifiedOnly).unwrap();
        assert!(generic.quantum.is_none());
        assert!(generic
            .quantum_note
            .unwrap()
            .contains("not totally orthogonal"));
    }
}

#[test]
fn series_coefficient_equals_cycle_index_evaluation() {
    for n in 0..=12 {
        for d in 1..=4 {
            let via_index = cycle_index_symmetric(n, &alternating_substitution(n, d)).unwrap();
            let series = series_coefficient_nq(n, d).unwrap();
            assert_eq!(
                via_index,
                BigRational::from_integer(series.into()),
                "n={n} d={d}"
            );
        }
    }
}

#[test]
fn partition_sum_matches_element_sum() {
    for n in 1..=6 {
        let g = make_named_group(GroupKind::Symmetric, n).unwrap();
        let a = alternating_substitution(n, 3);
        assert_eq!(
            cycle_index_symmetric(n, &a).unwrap(),
            cycle_index_of_group(&g, &a).unwrap()
        );
    }
}

#[test]
fn hierarchy_is_strict_for_nontrivial_sizes() {
    for kind in [GroupKind::Cyclic, GroupKind::Dihedral, GroupKind::Symmetric] {
        for n in 2..=12 {
            for d in 2..=4 {
                let r = count_named(kind, n, d).unwrap();
                assert!(r.satisfies_hierarchy(), "{kind} n={n} d={d}");
                assert!(r.strictly_ordered(), "{kind} n={n} d={d}");
            }
        }
    }
}

#[test]
fn unary_alphabet_counts_one() {
    for kind in [GroupKind::Cyclic, GroupKind::Dihedral, GroupKind::Symmetric] {
        for n in 1..=10 {
            assert_eq!(triple(kind, n, 1), (big(1), big(1), big(1)));
        }
    }
}
