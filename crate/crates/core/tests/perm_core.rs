use std::collections::HashSet;

use num_bigint::BigUint;
use permchan_core::perm_core::{
    generate_group, make_named_group, orbits, partitions, ColoredString, GroupKind, Partition,
    Permutation,
};
use proptest::prelude::*;

fn permutation(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(|n| {
        prop::collection::vec(any::<u32>(), n).prop_map(|keys| {
            let mut order: Vec<usize> = (0..keys.len()).collect();
            order.sort_by_key(|&i| (keys[i], i));
            Permutation::new(order).unwrap()
        })
    })
}

fn named_groups() -> Vec<(GroupKind, usize)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((GroupKind::Cyclic, n));
        out.push((GroupKind::Dihedral, n));
    }
    for n in 1..=5 {
        out.push((GroupKind::Symmetric, n));
    }
    out
}

proptest! {
    #[test]
    fn inverse_composes_to_identity(p in permutation(9)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn cycle_lengths_partition_the_degree(p in permutation(12)) {
        let dec = p.cycle_decomposition();
        let total: usize = dec.cycle_counts.iter().map(|(len, count)| len * count).sum();
        prop_assert_eq!(total, p.degree());
        prop_assert_eq!(dec.total_cycles, p.cycle_count());
        prop_assert_eq!(Partition::cycle_type(&p).n(), p.degree());
    }

    #[test]
    fn squaring_splits_even_cycles(p in permutation(12)) {
        // an even k-cycle squares to two k/2-cycles, an odd one to a single k-cycle
        let dec = p.cycle_decomposition();
        let expected: usize = dec
            .cycle_counts
            .iter()
            .map(|(len, count)| if len % 2 == 0 { 2 * count } else { *count })
            .sum();
        prop_assert_eq!(p.square().cycle_count(), expected);
    }

    #[test]
    fn fixed_strings_number_d_to_the_cycle_count(p in permutation(7), d in 1usize..=3) {
        let n = p.degree();
        let total = (d as u64).pow(n as u32);
        let fixed = (0..total)
            .map(|i| ColoredString::from_index(i, n, d))
            .filter(|x| x.permuted(&p).unwrap() == *x)
            .count() as u64;
        prop_assert_eq!(fixed, (d as u64).pow(p.cycle_count() as u32));
    }

    #[test]
    fn action_is_a_left_action(p in permutation(6), seed in any::<u64>()) {
        let n = p.degree();
        let q = Permutation::rotation(n).pow((seed % n as u64) as usize);
        let x = ColoredString::from_index(seed % 3u64.pow(n as u32), n, 3);
        let two_steps = x.permuted(&q).unwrap().permuted(&p).unwrap();
        prop_assert_eq!(two_steps, x.permuted(&p.compose(&q)).unwrap());
    }

    #[test]
    fn order_returns_to_identity(p in permutation(10)) {
        prop_assert!(p.pow(p.order()).is_identity());
    }
}

#[test]
fn orbit_stabilizer_on_named_groups() {
    for (kind, n) in named_groups() {
        let g = make_named_group(kind, n).unwrap();
        for d in 1..=3 {
            for orbit in orbits(&g, d).unwrap() {
                assert_eq!(
                    orbit.size * orbit.stabilizer_order,
                    g.order(),
                    "{kind} n={n} d={d}"
                );
                let stab = g.stabilizer(&orbit.representative).unwrap();
                assert_eq!(stab.order(), orbit.stabilizer_order);
            }
        }
    }
}

#[test]
fn orbits_partition_the_string_space() {
    for (kind, n) in named_groups() {
        let g = make_named_group(kind, n).unwrap();
        let orbits = orbits(&g, 2).unwrap();
        let mut seen = HashSet::new();
        for orbit in &orbits {
            for x in &orbit.members {
                assert!(seen.insert(x.index()));
            }
            assert_eq!(&orbit.representative, orbit.members.iter().min().unwrap());
        }
        assert_eq!(seen.len(), 1 << n);
        for pair in orbits.windows(2) {
            assert!(pair[0].representative < pair[1].representative);
        }
    }
}

#[test]
fn conjugacy_classes_partition_the_group() {
    for (kind, n) in named_groups() {
        let g = make_named_group(kind, n).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), g.order());
        assert!(classes[0].representative.is_identity());
        for class in &classes {
            // conjugation preserves cycle type
            assert!(class
                .members
                .iter()
                .all(|m| Partition::cycle_type(m) == class.partition));
            for h in g.elements() {
                let conj = class.representative.conjugate_by(h);
                assert!(class.members.contains(&conj));
            }
        }
    }
}

#[test]
fn symmetric_class_sizes_match_the_centralizer_formula() {
    for n in 1..=6 {
        let g = make_named_group(GroupKind::Symmetric, n).unwrap();
        let classes = g.conjugacy_classes();
        assert_eq!(classes.len(), partitions(n).len());
        for class in classes {
            assert_eq!(
                BigUint::from(class.size),
                class.partition.symmetric_class_size(),
                "n={n} {}",
                class.partition
            );
        }
    }
}

#[test]
fn square_root_counts_are_class_functions() {
    for (kind, n) in named_groups() {
        let g = make_named_group(kind, n).unwrap();
        let counts = g.square_root_counts();
        assert_eq!(counts.iter().sum::<usize>(), g.order());
        for class in g.conjugacy_classes() {
            let first = counts[class.member_indices[0]];
            assert!(class.member_indices.iter().all(|&i| counts[i] == first));
        }
    }
}

#[test]
fn group_orders() {
    let expect = |kind, n, order| assert_eq!(make_named_group(kind, n).unwrap().order(), order);
    expect(GroupKind::Cyclic, 7, 7);
    expect(GroupKind::Dihedral, 5, 10);
    expect(GroupKind::Dihedral, 2, 2);
    expect(GroupKind::Dihedral, 1, 1);
    expect(GroupKind::Symmetric, 5, 120);
    let klein = generate_group(
        4,
        &[
            Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(klein.order(), 4);
}
