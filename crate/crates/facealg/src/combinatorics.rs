//! Integer partitions, compositions, set partitions, and permutations:
//! the index language of every other module.
//!
//! Orders are fixed once so tables and serialized output are
//! reproducible: partitions of equal size are listed reverse
//! lexicographically (so `4, 31, 22, 211, 1111` for n = 4), and set
//! partitions are kept in a canonical form (blocks by minimum element,
//! elements ascending within a block).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

/// A weakly decreasing sequence of positive integers; the empty
/// sequence is the empty partition `()`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from weakly decreasing positive parts.
    ///
    /// Panics if a part is zero or the sequence increases.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "partition parts must be positive");
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        Partition { parts }
    }

    /// Build from positive parts in any order.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(λ), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part value → multiplicity, ascending by part value.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// The conjugate partition (column lengths of the diagram).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiply every part by `k` (k ≥ 1).
    pub fn scale(&self, k: u32) -> Partition {
        assert!(k >= 1, "scale factor must be positive");
        Partition { parts: self.parts.iter().map(|&p| p * k).collect() }
    }

    /// The partition with `count` copies of `part`.
    pub fn rectangular(part: u32, count: u32) -> Partition {
        Partition::new(vec![part; count as usize])
    }

    /// Order of the centralizer of a permutation of this cycle type:
    /// z_λ = Π_i i^{m_i} m_i!.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities()
            .iter()
            .map(|(&i, &m)| (i as u64).pow(m) * factorial(m as u64))
            .product()
    }

    /// Dominance: every partial sum of `self` weakly exceeds the
    /// corresponding partial sum of `other`. Requires equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size(), "dominance needs equal sizes");
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Refinement of multisets: the parts of `self` can be grouped so
    /// the group sums are exactly the parts of `coarser`. Requires
    /// equal sizes. Decided by backtracking over part assignments.
    pub fn refines(&self, coarser: &Partition) -> bool {
        assert_eq!(self.size(), coarser.size(), "refinement needs equal sizes");
        // Assign each part of self (largest first) to a bin with
        // remaining capacity; largest-first pruning keeps this fast at
        // the tiny lengths that occur here.
        fn assign(parts: &[u32], remaining: &mut Vec<u32>) -> bool {
            let Some((&p, rest)) = parts.split_first() else {
                return remaining.iter().all(|&r| r == 0);
            };
            let mut tried = BTreeSet::new();
            for i in 0..remaining.len() {
                if remaining[i] >= p && tried.insert(remaining[i]) {
                    remaining[i] -= p;
                    if assign(rest, remaining) {
                        remaining[i] += p;
                        return true;
                    }
                    remaining[i] += p;
                }
            }
            false
        }
        assign(&self.parts, &mut coarser.parts.clone())
    }
}

/// Total order: by size, then reverse lexicographic within a size, so
/// iteration over keyed maps matches the enumeration order of
/// [`partitions_of`].
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "{}", self.parts.iter().join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order; `n = 0` gives
/// the empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn gen(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            gen(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// A finite sequence of positive integers, order significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics if a part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Sort the parts into a partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.parts.iter().copied())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

/// All distinct orderings of the parts of `mu`, lexicographically
/// ascending. The count is the multinomial ℓ! / Π m_i!.
pub fn compositions_rearranging_to(mu: &Partition) -> Vec<Composition> {
    assert!(!mu.is_empty(), "rearrangements of the empty partition are not indexed");
    let k = mu.len();
    let distinct: BTreeSet<Vec<u32>> = mu
        .parts()
        .iter()
        .copied()
        .permutations(k)
        .collect();
    distinct.into_iter().map(Composition::new).collect()
}

/// An unordered partition of {1..n} into nonempty blocks, stored
/// canonically: blocks as bitmasks sorted by minimum element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<u64>,
}

fn mask_to_elems(mask: u64) -> Vec<u32> {
    let mut m = mask;
    let mut out = Vec::new();
    while m != 0 {
        let i = m.trailing_zeros();
        out.push(i + 1);
        m &= m - 1;
    }
    out
}

fn elems_to_mask(elems: &[u32]) -> u64 {
    let mut m = 0u64;
    for &e in elems {
        assert!(e >= 1, "elements are 1-based");
        m |= 1u64 << (e - 1);
    }
    m
}

pub(crate) fn full_mask(n: u32) -> u64 {
    assert!(n <= 63, "ground sets only up to 63 elements");
    (1u64 << n) - 1
}

impl SetPartition {
    /// Build from explicit blocks; they must disjointly cover {1..n}.
    pub fn new(n: u32, blocks: &[Vec<u32>]) -> Self {
        let masks = blocks.iter().map(|b| elems_to_mask(b)).collect();
        SetPartition::from_masks(n, masks)
    }

    pub(crate) fn from_masks(n: u32, mut blocks: Vec<u64>) -> Self {
        let mut seen = 0u64;
        for &b in &blocks {
            assert!(b != 0, "empty block");
            assert_eq!(seen & b, 0, "blocks must be disjoint");
            seen |= b;
        }
        assert_eq!(seen, full_mask(n), "blocks must cover the ground set");
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        SetPartition { n, blocks }
    }

    /// The one-block partition, the maximum of the refinement order.
    pub fn single_block(n: u32) -> Self {
        SetPartition { n, blocks: vec![full_mask(n)] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub(crate) fn masks(&self) -> &[u64] {
        &self.blocks
    }

    /// Blocks as ascending element lists, in canonical block order.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|&b| mask_to_elems(b)).collect()
    }

    /// Sorted block sizes; the orbit label of the S_n action.
    pub fn block_size_type(&self) -> Partition {
        Partition::from_unsorted(self.blocks.iter().map(|b| b.count_ones()))
    }

    /// Common refinement: the meet in the refinement order (one block
    /// on top).
    pub fn meet(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.n, other.n, "meet needs equal ground sets");
        let mut blocks = Vec::new();
        for &a in &self.blocks {
            for &b in &other.blocks {
                let c = a & b;
                if c != 0 {
                    blocks.push(c);
                }
            }
        }
        SetPartition::from_masks(self.n, blocks)
    }

    /// True iff `self` refines `other` (every block of `self` lies
    /// inside a block of `other`); this is ≤ in the lattice.
    pub fn leq(&self, other: &SetPartition) -> bool {
        assert_eq!(self.n, other.n, "comparison needs equal ground sets");
        self.blocks
            .iter()
            .all(|&a| other.blocks.iter().any(|&b| a & b == a))
    }

    /// Apply a permutation elementwise to every block.
    pub fn act(&self, pi: &Permutation) -> SetPartition {
        assert_eq!(self.n, pi.n(), "degree mismatch");
        let blocks = self.blocks.iter().map(|&b| pi.apply_mask(b)).collect();
        SetPartition::from_masks(self.n, blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .blocks()
            .iter()
            .map(|b| b.iter().join(""))
            .join("|");
        write!(f, "{{{body}}}")
    }
}

/// All set partitions of {1..n}, by restricted-growth enumeration;
/// deterministic order.
pub fn set_partitions_of(n: u32) -> Vec<SetPartition> {
    assert!(n >= 1, "the empty ground set is not indexed");
    fn gen(n: u32, i: u32, blocks: &mut Vec<u64>, out: &mut Vec<SetPartition>) {
        if i > n {
            out.push(SetPartition::from_masks(n, blocks.clone()));
            return;
        }
        let bit = 1u64 << (i - 1);
        for j in 0..blocks.len() {
            blocks[j] |= bit;
            gen(n, i + 1, blocks, out);
            blocks[j] &= !bit;
        }
        blocks.push(bit);
        gen(n, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    gen(n, 1, &mut Vec::new(), &mut out);
    out
}

/// A permutation of {1..n} in one-line notation (1-based images).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Panics unless `images` is a bijection on {1..n}.
    pub fn new(images: Vec<u32>) -> Self {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            assert!(v >= 1 && v <= n, "image out of range");
            assert!(!seen[(v - 1) as usize], "images must be distinct");
            seen[(v - 1) as usize] = true;
        }
        Permutation { images }
    }

    pub fn identity(n: u32) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn image(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&i| self.image(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// Image of a subset given as a bitmask.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut m = mask;
        let mut out = 0u64;
        while m != 0 {
            let i = m.trailing_zeros();
            out |= 1u64 << (self.images[i as usize] - 1);
            m &= m - 1;
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = (self.images[i] - 1) as usize;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// Positions i with π(i) > π(i+1).
    pub fn descent_set(&self) -> Vec<u32> {
        (1..self.images.len() as u32)
            .filter(|&i| self.image(i) > self.image(i + 1))
            .collect()
    }

    /// All n! permutations, lexicographic by one-line notation.
    pub fn all(n: u32) -> Vec<Permutation> {
        (1..=n)
            .permutations(n as usize)
            .map(|images| Permutation { images })
            .collect()
    }

    /// Canonical representative of a cycle type: cycles laid out
    /// consecutively, so (3,2) ⊢ 5 gives (1 2 3)(4 5) = [2,3,1,5,4].
    pub fn from_cycle_type(rho: &Partition) -> Permutation {
        let n = rho.size();
        let mut images = vec![0u32; n as usize];
        let mut start = 1u32;
        for &len in rho.parts() {
            for off in 0..len {
                let from = start + off;
                let to = start + (off + 1) % len;
                images[(from - 1) as usize] = to;
            }
            start += len;
        }
        let p = Permutation { images };
        debug_assert_eq!(p.cycle_type(), *rho);
        p
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}

/// One conjugacy class of S_n.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: u64,
    pub representative: Permutation,
}

/// The conjugacy classes of S_n in [`partitions_of`] order, with sizes
/// n!/z_ρ.
pub fn conjugacy_classes(n: u32) -> Vec<ConjugacyClass> {
    partitions_of(n)
        .into_iter()
        .map(|rho| ConjugacyClass {
            size: factorial(n as u64) / rho.centralizer_order(),
            representative: Permutation::from_cycle_type(&rho),
            cycle_type: rho,
        })
        .collect()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
