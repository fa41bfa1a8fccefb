mod support;

use facealg::combinatorics::{
    compositions_rearranging_to, conjugacy_classes, factorial, partitions_of,
    set_partitions_of, Partition, Permutation, SetPartition,
};
use proptest::prelude::*;

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    for n in 0..=12 {
        assert_eq!(partitions_of(n).len() as u64, support::partition_count(n));
    }
    assert_eq!(partitions_of(8).len(), 22);
}

#[test]
fn set_partition_counts_match_bell_numbers() {
    for n in 1..=8 {
        assert_eq!(set_partitions_of(n).len() as u64, support::bell(n));
    }
    assert_eq!(set_partitions_of(3).len(), 5);
}

#[test]
fn set_partitions_are_distinct_and_canonical() {
    for n in 1..=6 {
        let all = set_partitions_of(n);
        for x in &all {
            let rebuilt = SetPartition::new(n, &x.blocks());
            assert_eq!(*x, rebuilt);
        }
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }
}

#[test]
fn rearrangement_counts_match_multinomials() {
    for n in 1..=7 {
        for mu in partitions_of(n) {
            let count = compositions_rearranging_to(&mu).len() as u64;
            assert_eq!(count, support::multiset_permutations(mu.parts()));
        }
    }
}

#[test]
fn class_sizes_match_direct_enumeration() {
    for n in 1..=5 {
        let classes = conjugacy_classes(n);
        let mut by_type: std::collections::BTreeMap<Vec<u32>, u64> = Default::default();
        for images in support::all_permutations(n) {
            *by_type.entry(support::cycle_type_of(&images)).or_insert(0) += 1;
        }
        assert_eq!(classes.len(), by_type.len());
        for c in &classes {
            assert_eq!(by_type[c.cycle_type.parts()], c.size);
        }
    }
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 1..=8 {
        let total: u64 = conjugacy_classes(n).iter().map(|c| c.size).sum();
        assert_eq!(total, factorial(n as u64));
    }
}

#[test]
fn s3_classes_are_frozen() {
    let classes = conjugacy_classes(3);
    let got: Vec<(Vec<u32>, u64)> = classes
        .iter()
        .map(|c| (c.cycle_type.parts().to_vec(), c.size))
        .collect();
    assert_eq!(got, vec![(vec![3], 2), (vec![2, 1], 3), (vec![1, 1, 1], 1)]);
}

#[test]
fn dominance_is_a_partial_order_with_extremes() {
    for n in 1..=7 {
        let all = partitions_of(n);
        let top = Partition::new(vec![n]);
        let bottom = Partition::rectangular(1, n);
        for a in &all {
            assert!(a.dominates(a));
            assert!(top.dominates(a));
            assert!(a.dominates(&bottom));
            for b in &all {
                if a.dominates(b) && b.dominates(a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.dominates(b) && b.dominates(c) {
                        assert!(a.dominates(c));
                    }
                }
            }
        }
    }
}

#[test]
fn refinement_is_reflexive_transitive_with_bottom() {
    for n in 1..=7 {
        let all = partitions_of(n);
        let bottom = Partition::rectangular(1, n);
        for a in &all {
            assert!(a.refines(a));
            assert!(bottom.refines(a));
            for b in &all {
                for c in &all {
                    if a.refines(b) && b.refines(c) {
                        assert!(a.refines(c), "{a} refines {b} refines {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn meet_is_associative_commutative_idempotent() {
    let all = set_partitions_of(4);
    for x in &all {
        assert_eq!(x.meet(x), *x);
        for y in &all {
            assert_eq!(x.meet(y), y.meet(x));
            assert!(x.meet(y).leq(x));
            for z in &all {
                assert_eq!(x.meet(y).meet(z), x.meet(&y.meet(z)));
            }
        }
    }
}

#[test]
fn block_size_type_is_orbit_invariant() {
    for n in 1..=5 {
        for x in set_partitions_of(n) {
            for pi in Permutation::all(n) {
                assert_eq!(x.act(&pi).block_size_type(), x.block_size_type());
            }
        }
    }
}

#[test]
fn leq_agrees_with_blockwise_containment() {
    for x in set_partitions_of(4) {
        for y in set_partitions_of(4) {
            let direct = x
                .blocks()
                .iter()
                .all(|bx| y.blocks().iter().any(|by| bx.iter().all(|e| by.contains(e))));
            assert_eq!(x.leq(&y), direct);
        }
    }
}

proptest! {
    #[test]
    fn refinement_implies_domination_by_the_coarser(seed in 0usize..10_000) {
        // Derive a refinement pair by splitting parts of a random
        // partition of 9; the coarser partition must dominate.
        let all = partitions_of(9);
        let lambda = &all[seed % all.len()];
        let mut parts = Vec::new();
        for (i, &p) in lambda.parts().iter().enumerate() {
            let cut = (seed / (i + 1)) as u32 % p;
            if cut == 0 {
                parts.push(p);
            } else {
                parts.push(p - cut);
                parts.push(cut);
            }
        }
        let mu = Partition::from_unsorted(parts);
        prop_assert!(mu.refines(lambda));
        prop_assert!(lambda.dominates(&mu));
    }

    #[test]
    fn cycle_type_is_conjugation_invariant(a in 0usize..720, b in 0usize..720) {
        let perms = Permutation::all(6);
        let x = &perms[a % perms.len()];
        let g = &perms[b % perms.len()];
        let conj = g.compose(x).compose(&g.inverse());
        prop_assert_eq!(conj.cycle_type(), x.cycle_type());
    }
}
