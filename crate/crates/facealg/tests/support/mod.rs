//! Independent oracles for the integration suite.
//!
//! Everything here is computed from first principles (recurrences,
//! exhaustive enumeration, closed formulas) without touching the
//! library's own algorithms, so library outputs can be checked against
//! a second route.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{One, Zero};

/// p(n) by the pentagonal-number recurrence.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut acc = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                acc += sign * p[i - g2];
            }
            k += 1;
        }
        p[i] = acc;
    }
    p[n] as u64
}

/// Bell numbers by the Bell triangle.
pub fn bell(n: u32) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &v in &row {
            next.push(next.last().unwrap() + v);
        }
        row = next;
    }
    row[0]
}

/// Ordered set partition counts (Fubini numbers) by the binomial
/// recurrence a(n) = sum_k C(n, k) a(n - k).
pub fn ordered_bell(n: u32) -> u64 {
    let n = n as usize;
    let mut a = vec![0u64; n + 1];
    a[0] = 1;
    for i in 1..=n {
        a[i] = (1..=i).map(|k| binomial(i as u64, k as u64) * a[i - k]).sum();
    }
    a[n]
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Number of distinct rearrangements of a multiset of parts.
pub fn multiset_permutations(parts: &[u32]) -> u64 {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut acc = factorial(parts.len() as u64);
    for &m in counts.values() {
        acc /= factorial(m);
    }
    acc
}

/// Möbius function by trial division.
pub fn moebius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut primes = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 { 1 } else { -1 }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Number of primitive (aperiodic) necklaces whose letter multiset has
/// `content[i]` copies of the i-th letter, by the Witt-style content
/// formula: (1/k) sum over d | gcd(content) of mu(d) * multinomial(k/d
/// over content/d).
pub fn primitive_necklace_count(content: &[u32]) -> u64 {
    assert!(!content.is_empty() && content.iter().all(|&c| c >= 1));
    let k: u64 = content.iter().map(|&c| c as u64).sum();
    let g = content.iter().fold(0u64, |a, &c| gcd(a, c as u64));
    let mut total = 0i64;
    for d in 1..=g {
        if g % d != 0 {
            continue;
        }
        let mut ways = factorial(k / d);
        for &c in content {
            ways /= factorial(c as u64 / d);
        }
        total += moebius(d) * ways as i64;
    }
    assert!(total >= 0 && total % k as i64 == 0);
    total as u64 / k
}

/// Count semistandard Young tableaux of the given shape and content by
/// backtracking (rows weakly increase, columns strictly increase);
/// this is the Kostka number K_{shape, content}.
pub fn ssyt_count(shape: &[u32], content: &[u32]) -> u64 {
    let total: u32 = shape.iter().sum();
    if content.iter().sum::<u32>() != total {
        return 0;
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&r| vec![0; r as usize]).collect();
    let mut remaining: Vec<u32> = content.to_vec();

    fn fill(
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<u32>,
        shape: &[u32],
        r: usize,
        c: usize,
    ) -> u64 {
        let rows = shape.len();
        if r == rows {
            return 1;
        }
        let (nr, nc) = if c + 1 < shape[r] as usize { (r, c + 1) } else { (r + 1, 0) };
        let min_left = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_up = if r > 0 && c < shape[r - 1] as usize { grid[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_up);
        let mut acc = 0;
        for v in lo..=remaining.len() as u32 {
            if remaining[(v - 1) as usize] == 0 {
                continue;
            }
            remaining[(v - 1) as usize] -= 1;
            grid[r][c] = v;
            acc += fill(grid, remaining, shape, nr, nc);
            remaining[(v - 1) as usize] += 1;
        }
        grid[r][c] = 0;
        acc
    }

    if rows == 0 {
        return 1;
    }
    fill(&mut grid, &mut remaining, shape, 0, 0)
}

/// Exact multivariate polynomials, exponent vectors of fixed width.
/// Used as an independent model of symmetric-function arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Poly {
    pub fn zero(vars: usize) -> Self {
        Poly { terms: BTreeMap::new(), vars }
    }

    pub fn constant(vars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn add_term(&mut self, expo: Vec<u32>, c: BigRational) {
        assert_eq!(expo.len(), self.vars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.vars, other.vars);
        let mut out = Poly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// The power sum x_1^k + ... + x_m^k.
    pub fn power_sum(vars: usize, k: u32) -> Poly {
        let mut p = Poly::zero(vars);
        for i in 0..vars {
            let mut e = vec![0; vars];
            e[i] = k;
            p.add_term(e, BigRational::one());
        }
        p
    }

    /// Expand a power-sum combination, given as (partition, coeff)
    /// pairs, into `vars` variables.
    pub fn from_power_sums(vars: usize, terms: &[(Vec<u32>, BigRational)]) -> Poly {
        let mut out = Poly::zero(vars);
        for (rho, c) in terms {
            let mut m = Poly::constant(vars, c.clone());
            for &k in rho {
                m = m.mul(&Poly::power_sum(vars, k));
            }
            out = out.add(&m);
        }
        out
    }

    /// Monomial substitution plethysm: expand `outer` (given in power
    /// sums) in one variable per monomial of `self`, counted with
    /// multiplicity. Requires all coefficients of `self` to be
    /// nonnegative integers.
    pub fn plethysm_outer(&self, outer: &[(Vec<u32>, BigRational)]) -> Poly {
        use num::ToPrimitive;
        let mut monomials: Vec<Vec<u32>> = Vec::new();
        for (e, c) in &self.terms {
            assert!(c.is_integer(), "plethysm substitution needs integer coefficients");
            let reps = c.to_integer().to_u64().expect("positive multiplicity");
            for _ in 0..reps {
                monomials.push(e.clone());
            }
        }
        // p_k of the substituted alphabet is the sum of k-th powers of
        // the listed monomials.
        let pk = |k: u32| -> Poly {
            let mut p = Poly::zero(self.vars);
            for m in &monomials {
                p.add_term(m.iter().map(|&e| e * k).collect(), BigRational::one());
            }
            p
        };
        let mut out = Poly::zero(self.vars);
        for (rho, c) in outer {
            let mut term = Poly::constant(self.vars, c.clone());
            for &k in rho {
                term = term.mul(&pk(k));
            }
            out = out.add(&term);
        }
        out
    }
}

/// All permutations of {1..n} as image vectors (Heap's algorithm kept
/// simple with recursion over positions).
pub fn all_permutations(n: u32) -> Vec<Vec<u32>> {
    fn rec(pool: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pool.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..pool.len() {
            let v = pool.remove(i);
            cur.push(v);
            rec(pool, cur, out);
            cur.pop();
            pool.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Sorted cycle lengths of a one-line permutation.
pub fn cycle_type_of(images: &[u32]) -> Vec<u32> {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = (images[i] - 1) as usize;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// Descent positions of a one-line permutation.
pub fn descents_of(images: &[u32]) -> Vec<u32> {
    (1..images.len() as u32)
        .filter(|&i| images[(i - 1) as usize] > images[i as usize])
        .collect()
}

/// Count permutations of S_n with the given cycle type and descent set
/// {1, ..., n-1} (every position a descent).
pub fn full_descent_count(n: u32, cycle_type: &[u32]) -> u64 {
    let full: Vec<u32> = (1..n).collect();
    all_permutations(n)
        .iter()
        .filter(|im| cycle_type_of(im) == cycle_type && descents_of(im) == full)
        .count() as u64
}

/// Fixed points of the class representative of `rho` acting on row
/// tabloids of shape `mu`: ordered block sequences (B_1, ..., B_l) with
/// |B_i| = mu_i, fixed blockwise. Computed by brute-force enumeration.
pub fn tabloid_fixed_points(mu: &[u32], rho: &[u32]) -> u64 {
    let n: u32 = mu.iter().sum();
    assert_eq!(rho.iter().sum::<u32>(), n);
    // Canonical representative: cycles of sizes rho laid consecutively.
    let mut images = vec![0u32; n as usize];
    let mut start = 1u32;
    for &len in rho {
        for off in 0..len {
            images[(start + off - 1) as usize] = start + (off + 1) % len;
        }
        start += len;
    }
    // Enumerate assignments of elements to rows with given sizes.
    fn rec(images: &[u32], sizes: &[u32], row_of: &mut Vec<usize>, i: usize, left: &mut Vec<u32>) -> u64 {
        if i == row_of.len() {
            // Check fixedness: each element's row equals its image's row.
            for e in 0..row_of.len() {
                if row_of[e] != row_of[(images[e] - 1) as usize] {
                    return 0;
                }
            }
            return 1;
        }
        let mut acc = 0;
        for r in 0..sizes.len() {
            if left[r] > 0 {
                left[r] -= 1;
                row_of[i] = r;
                acc += rec(images, sizes, row_of, i + 1, left);
                left[r] += 1;
            }
        }
        acc
    }
    rec(
        &images,
        mu,
        &mut vec![0; n as usize],
        0,
        &mut mu.to_vec(),
    )
}
