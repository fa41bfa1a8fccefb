//! Irreducible characters of the symmetric group.
//!
//! Values are computed by the border-strip (Murnaghan-Nakayama)
//! recursion on beta-sets, dimensions by the hook-length formula, and
//! whole tables are built lazily per degree and cached behind a lock,
//! so concurrent readers see either absence or a completed table.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinatorics::{factorial, partitions_of, Partition};

/// All irreducible character values of one symmetric group.
#[derive(Debug)]
pub struct CharacterTable {
    n: u32,
    values: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterTable {
    /// χ^λ(ρ); both partitions must have size `n`.
    pub fn value(&self, lambda: &Partition, rho: &Partition) -> i64 {
        *self
            .values
            .get(&(lambda.clone(), rho.clone()))
            .unwrap_or_else(|| panic!("no entry for ({lambda}, {rho}) in S_{}", self.n))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn build(n: u32) -> CharacterTable {
        let parts = partitions_of(n);
        let mut memo = HashMap::new();
        let mut values = BTreeMap::new();
        for lambda in &parts {
            for rho in &parts {
                let v = strip_recursion(lambda.parts(), rho.parts(), &mut memo);
                values.insert((lambda.clone(), rho.clone()), v);
            }
        }
        let table = CharacterTable { n, values };
        table.check_orthogonality(&parts);
        table
    }

    // Column orthogonality and positive dimensions; cheap insurance on
    // every build.
    fn check_orthogonality(&self, parts: &[Partition]) {
        let one = Partition::rectangular(1, self.n);
        for rho in parts {
            for sigma in parts {
                let dot: i64 = parts
                    .iter()
                    .map(|l| self.value(l, rho) * self.value(l, sigma))
                    .sum();
                let expect = if rho == sigma { rho.centralizer_order() as i64 } else { 0 };
                assert_eq!(dot, expect, "orthogonality failed at ({rho}, {sigma})");
            }
        }
        for lambda in parts {
            assert!(self.value(lambda, &one) >= 1, "nonpositive dimension at {lambda}");
        }
    }
}

/// χ^λ(ρ) over beta-sets: remove a border strip of length ρ_1 in every
/// possible way, with sign (-1)^height, and recurse on the rest of ρ.
fn strip_recursion(
    lambda: &[u32],
    rho: &[u32],
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if rho.is_empty() {
        assert!(lambda.is_empty());
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0] as i64;
    let ell = lambda.len();
    let beta: Vec<i64> = (0..ell)
        .map(|i| lambda[i] as i64 + (ell - 1 - i) as i64)
        .collect();
    let mut acc = 0i64;
    for i in 0..ell {
        let target = beta[i] - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&b| target < b && b < beta[i]).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        // Back to partition form, dropping trailing zeros.
        let next: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| (b - (nb.len() - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        acc += sign * strip_recursion(&next, &rho[1..], memo);
    }
    memo.insert(key, acc);
    acc
}

fn table_cache() -> &'static Mutex<HashMap<u32, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The character table of S_n, built on first use and shared.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    if let Some(t) = table_cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    // Build outside the lock; a racing builder just produces the same
    // table and the first insert wins.
    let built = Arc::new(CharacterTable::build(n));
    let mut guard = table_cache().lock().unwrap();
    guard.entry(n).or_insert(built).clone()
}

/// χ^λ(ρ) through the cached table of degree |λ|.
pub fn character_value(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "size mismatch");
    character_table(lambda.size()).value(lambda, rho)
}

/// f^λ by the hook-length formula.
pub fn dimension(lambda: &Partition) -> u64 {
    let n = lambda.size() as u64;
    let conj = lambda.conjugate();
    let mut denom = 1u64;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let hook = (row as u64 - j as u64) + (conj.parts()[j] as u64 - i as u64) - 1;
            denom *= hook;
        }
    }
    factorial(n) / denom
}
