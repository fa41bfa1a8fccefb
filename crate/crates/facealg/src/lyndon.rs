//! Lyndon words, Duval factorization, and necklaces.
//!
//! A Lyndon word is a nonempty word on a totally ordered alphabet that
//! is strictly smaller than all of its proper suffixes (equivalently,
//! strictly smaller than all of its proper cyclic rotations).  Every
//! word factors uniquely into a lexicographically weakly decreasing
//! concatenation of Lyndon words.
//!
//! A necklace is a word up to cyclic rotation, stored here via its
//! lexicographically minimal rotation.  [`psi`] and [`theta`] are
//! mutually inverse maps between primitive necklaces of partitions and
//! primitive necklaces of partition tuples: `psi` rotates a necklace so
//! that the word of bead lengths reads as a power of its Lyndon root
//! `w` and then groups consecutive beads into tuples of length
//! `w.len()`, while `theta` flattens the tuples back out.  Both
//! preserve the evaluation pair (bead-length content, part content).

use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;

use crate::combinatorics::{Composition, Partition};

/// Whether `word` is a Lyndon word (strictly smaller than every proper
/// suffix).
///
/// Panics on an empty word.
pub fn is_lyndon(word: &[u32]) -> bool {
    assert!(!word.is_empty(), "empty word");
    (1..word.len()).all(|i| word < &word[i..])
}

/// The unique factorization of `word` into weakly decreasing Lyndon
/// factors, by Duval's algorithm.
///
/// Panics on an empty word.
pub fn duval_factorization(word: &[u32]) -> Vec<Vec<u32>> {
    assert!(!word.is_empty(), "empty word");
    let n = word.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && word[k] <= word[j] {
            if word[k] < word[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        // word[i..j] is (Lyndon factor of length j - k) repeated, plus
        // a proper prefix; emit the full repetitions.
        let len = j - k;
        while i <= k {
            factors.push(word[i..i + len].to_vec());
            i += len;
        }
    }
    factors
}

/// The partition formed by the letter sums of the Lyndon factors of a
/// composition.
pub fn lyndon_type(alpha: &Composition) -> Partition {
    let sums = duval_factorization(alpha.parts())
        .iter()
        .map(|factor| factor.iter().sum::<u32>())
        .collect::<Vec<_>>();
    Partition::from_unsorted(sums)
}

/// All Lyndon words on the positive integers with letter sum at most
/// `max_sum`, ordered by (letter sum, lexicographic).
pub fn lyndon_words_up_to(max_sum: u32) -> Vec<Vec<u32>> {
    assert!(max_sum >= 1, "max_sum must be positive");
    let mut words = Vec::new();
    collect_bounded_words(max_sum, &mut Vec::new(), &mut words);
    words.retain(|w| is_lyndon(w));
    words.sort_by_key(|w| (w.iter().sum::<u32>(), w.clone()));
    words
}

fn collect_bounded_words(budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    for letter in 1..=budget {
        prefix.push(letter);
        out.push(prefix.clone());
        collect_bounded_words(budget - letter, prefix, out);
        prefix.pop();
    }
}

/// A cyclic word, stored as its lexicographically minimal rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Necklace<B: Ord + Clone> {
    beads: Vec<B>,
}

impl<B: Ord + Clone> Necklace<B> {
    /// The necklace represented by `beads`; any rotation of a word
    /// yields the same necklace.
    ///
    /// Panics if `beads` is empty.
    pub fn new(mut beads: Vec<B>) -> Self {
        assert!(!beads.is_empty(), "empty necklace");
        let start = minimal_rotation(&beads);
        beads.rotate_left(start);
        Necklace { beads }
    }

    /// The canonical (minimal-rotation) representative word.
    pub fn beads(&self) -> &[B] {
        &self.beads
    }

    pub fn num_beads(&self) -> usize {
        self.beads.len()
    }

    /// Whether no representative word is a power of a shorter word.
    pub fn is_primitive(&self) -> bool {
        smallest_period(&self.beads) == self.beads.len()
    }
}

/// Start index of the lexicographically minimal rotation, by the
/// two-candidate duel refinement of Booth's algorithm.
fn minimal_rotation<B: Ord>(beads: &[B]) -> usize {
    let n = beads.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < n && j < n && k < n {
        match beads[(i + k) % n].cmp(&beads[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j == i {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Length of the shortest prefix whose repetitions form the whole
/// sequence; equals the length exactly when the sequence is primitive.
fn smallest_period<B: Eq>(beads: &[B]) -> usize {
    let n = beads.len();
    (1..=n)
        .find(|&p| n % p == 0 && (0..n).all(|t| beads[t] == beads[t % p]))
        .expect("the full length is always a period")
}

/// Decomposes a necklace of positive integers as `(w, i)` where `w` is
/// the Lyndon word whose `i`-th power is the minimal representative.
pub fn f_map(eta: &Necklace<u32>) -> (Vec<u32>, u32) {
    let beads = eta.beads();
    let p = smallest_period(beads);
    let root = beads[..p].to_vec();
    debug_assert!(is_lyndon(&root));
    (root, (beads.len() / p) as u32)
}

/// A necklace bead grouping partitions into a tuple; ordered
/// lexicographically by the partition order.
pub type PartitionTuple = Vec<Partition>;

/// Groups a primitive necklace of partitions into a primitive necklace
/// of partition tuples, each tuple's bead lengths spelling the Lyndon
/// root of the bead-length word.  Inverse of [`theta`].
///
/// Panics if `eta` is not primitive.
pub fn psi(eta: &Necklace<Partition>) -> Necklace<PartitionTuple> {
    assert!(eta.is_primitive(), "necklace is not primitive");
    let k = eta.num_beads();
    let lengths: Vec<u32> = eta.beads().iter().map(|nu| nu.len() as u32).collect();
    let (w, repeats) = f_map(&Necklace::new(lengths.clone()));
    let i = w.len();
    let spells_root_power =
        |j: usize| (0..k).all(|t| lengths[(j + t) % k] == w[t % i]);
    // Exactly `repeats` rotations align with the root because w is
    // Lyndon; any of them yields the same necklace.
    debug_assert_eq!((0..k).filter(|&j| spells_root_power(j)).count(), repeats as usize);
    let j = (0..k)
        .find(|&j| spells_root_power(j))
        .expect("the minimal rotation of the length word is a root power");
    let rotated: Vec<Partition> = (0..k).map(|t| eta.beads()[(j + t) % k].clone()).collect();
    Necklace::new(rotated.chunks(i).map(<[Partition]>::to_vec).collect())
}

/// Flattens a primitive necklace of partition tuples back into a
/// necklace of partitions.  Inverse of [`psi`].
///
/// Panics if `tau` is not primitive, or if the tuple bead lengths do
/// not all spell one common Lyndon word.
pub fn theta(tau: &Necklace<PartitionTuple>) -> Necklace<Partition> {
    assert!(tau.is_primitive(), "necklace is not primitive");
    let length_word = |tuple: &PartitionTuple| {
        tuple.iter().map(|nu| nu.len() as u32).collect::<Vec<_>>()
    };
    let w = length_word(&tau.beads()[0]);
    assert!(is_lyndon(&w), "tuple lengths must spell a Lyndon word");
    assert!(
        tau.beads().iter().all(|tuple| length_word(tuple) == w),
        "all tuples must spell the same length word"
    );
    Necklace::new(tau.beads().iter().flatten().cloned().collect())
}

/// The pair (bead-length content, part content) of a necklace of
/// partitions: the first collects each bead's number of parts, the
/// second all parts of all beads.
pub fn eval_partitions(eta: &Necklace<Partition>) -> (Partition, Partition) {
    eval_of(eta.beads().iter())
}

/// The evaluation pair of a necklace of partition tuples; grouping is
/// invisible to evaluation, so this matches [`eval_partitions`] across
/// [`psi`] and [`theta`].
pub fn eval_tuples(tau: &Necklace<PartitionTuple>) -> (Partition, Partition) {
    eval_of(tau.beads().iter().flatten())
}

fn eval_of<'a>(beads: impl Iterator<Item = &'a Partition>) -> (Partition, Partition) {
    let mut lengths = Vec::new();
    let mut parts = Vec::new();
    for nu in beads {
        lengths.push(nu.len() as u32);
        parts.extend_from_slice(nu.parts());
    }
    (Partition::from_unsorted(lengths), Partition::from_unsorted(parts))
}

/// Number of distinct primitive necklaces whose letter multiset has
/// `content.parts()[i]` copies of the letter `i + 1`, counted by
/// enumerating all arrangements.
pub fn primitive_necklaces_with_content(content: &Partition) -> u64 {
    assert!(!content.is_empty(), "empty content");
    let letters: Vec<u32> = content
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &mult)| std::iter::repeat(i as u32 + 1).take(mult as usize))
        .collect();
    let k = letters.len();
    let necklaces: BTreeSet<Necklace<u32>> =
        letters.into_iter().permutations(k).map(Necklace::new).collect();
    necklaces.into_iter().filter(Necklace::is_primitive).count() as u64
}
