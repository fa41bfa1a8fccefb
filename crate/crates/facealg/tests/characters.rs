mod support;

use facealg::characters::{character_table, character_value, dimension};
use facealg::combinatorics::{factorial, partitions_of, Partition};

#[test]
fn hook_dimension_equals_identity_column() {
    for n in 1..=8 {
        let one = Partition::rectangular(1, n);
        for lambda in partitions_of(n) {
            assert_eq!(
                dimension(&lambda) as i64,
                character_value(&lambda, &one),
                "mismatch at {lambda}"
            );
        }
    }
}

#[test]
fn squared_dimensions_sum_to_group_order() {
    for n in 1..=8 {
        let total: u64 = partitions_of(n).iter().map(|l| dimension(l).pow(2)).sum();
        assert_eq!(total, factorial(n as u64));
    }
}

#[test]
fn row_orthogonality_with_class_sizes() {
    // sum_rho |C_rho| chi^a(rho) chi^b(rho) = n! delta_{ab}.
    for n in 1..=7u32 {
        let parts = partitions_of(n);
        for a in &parts {
            for b in &parts {
                let dot: i64 = parts
                    .iter()
                    .map(|rho| {
                        let class = (factorial(n as u64) / rho.centralizer_order()) as i64;
                        class * character_value(a, rho) * character_value(b, rho)
                    })
                    .sum();
                let expect = if a == b { factorial(n as u64) as i64 } else { 0 };
                assert_eq!(dot, expect);
            }
        }
    }
}

#[test]
fn s3_table_is_frozen() {
    // Classes in enumeration order: (3), (2,1), (1,1,1).
    let classes = partitions_of(3);
    let rows: Vec<(Vec<u32>, Vec<i64>)> = partitions_of(3)
        .iter()
        .map(|l| {
            (
                l.parts().to_vec(),
                classes.iter().map(|r| character_value(l, r)).collect(),
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            (vec![3], vec![1, 1, 1]),
            (vec![2, 1], vec![-1, 0, 2]),
            (vec![1, 1, 1], vec![1, -1, 1]),
        ]
    );
}

#[test]
fn young_rule_ties_characters_to_tabloid_fixed_points() {
    // The permutation character on row tabloids of shape mu must equal
    // sum_lambda K_{lambda,mu} chi^lambda, with Kostka numbers from
    // independent tableau enumeration and fixed points from direct
    // enumeration.
    for n in 1..=5u32 {
        let parts = partitions_of(n);
        for mu in &parts {
            for rho in &parts {
                let lhs: i64 = parts
                    .iter()
                    .map(|lambda| {
                        support::ssyt_count(lambda.parts(), mu.parts()) as i64
                            * character_value(lambda, rho)
                    })
                    .sum();
                let rhs = support::tabloid_fixed_points(mu.parts(), rho.parts()) as i64;
                assert_eq!(lhs, rhs, "n={n} mu={mu} rho={rho}");
            }
        }
    }
}

#[test]
fn table_lookup_matches_scalar_calls() {
    let t = character_table(6);
    for l in partitions_of(6) {
        for r in partitions_of(6) {
            assert_eq!(t.value(&l, &r), character_value(&l, &r));
        }
    }
}
