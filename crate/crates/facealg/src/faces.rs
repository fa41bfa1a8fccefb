//! The face monoid: ordered set partitions of {1..n} under the
//! blockwise-intersection (Tits) product, the support map down to
//! unordered set partitions, the symmetric-group action, and sparse
//! exact-rational linear combinations of faces.
//!
//! The product of f = (P_1, ..., P_k) and g = (Q_1, ..., Q_l) lists the
//! intersections P_i ∩ Q_j in lexicographic (i, j) order with empty
//! intersections removed. It is associative, every face is idempotent,
//! and fgf = fg.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::combinatorics::{full_mask, Composition, Permutation, SetPartition};

/// An ordered sequence of disjoint nonempty blocks covering {1..n};
/// block order is significant, elements within a block are not.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Face {
    n: u32,
    blocks: Vec<u64>,
}

impl Face {
    /// Build from explicit blocks in the given order; they must
    /// disjointly cover {1..n}.
    pub fn new(n: u32, blocks: &[Vec<u32>]) -> Self {
        let masks = blocks
            .iter()
            .map(|b| {
                let mut m = 0u64;
                for &e in b {
                    assert!(e >= 1 && e <= n, "element out of range");
                    m |= 1u64 << (e - 1);
                }
                m
            })
            .collect();
        Face::from_masks(n, masks)
    }

    pub(crate) fn from_masks(n: u32, blocks: Vec<u64>) -> Self {
        let mut seen = 0u64;
        for &b in &blocks {
            assert!(b != 0, "empty block");
            assert_eq!(seen & b, 0, "blocks must be disjoint");
            seen |= b;
        }
        assert_eq!(seen, full_mask(n), "blocks must cover the ground set");
        Face { n, blocks }
    }

    /// The identity of the monoid: the single-block face (12...n).
    pub fn identity(n: u32) -> Self {
        Face { n, blocks: vec![full_mask(n)] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks as ascending element lists, in face order.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        self.blocks
            .iter()
            .map(|&b| {
                let mut m = b;
                let mut out = Vec::new();
                while m != 0 {
                    out.push(m.trailing_zeros() + 1);
                    m &= m - 1;
                }
                out
            })
            .collect()
    }

    /// Block sizes in face order.
    pub fn composition_type(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.count_ones()).collect())
    }

    /// The Tits product: intersections P_i ∩ Q_j in lexicographic
    /// (i, j) order, empties removed.
    pub fn product(&self, other: &Face) -> Face {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut blocks = Vec::with_capacity(self.blocks.len().max(other.blocks.len()));
        for &p in &self.blocks {
            for &q in &other.blocks {
                let c = p & q;
                if c != 0 {
                    blocks.push(c);
                }
            }
        }
        Face { n: self.n, blocks }
    }

    /// Forget block order.
    pub fn support(&self) -> SetPartition {
        SetPartition::from_masks(self.n, self.blocks.clone())
    }

    /// Apply a permutation elementwise to every block, keeping block
    /// order.
    pub fn act(&self, pi: &Permutation) -> Face {
        assert_eq!(self.n, pi.n(), "degree mismatch");
        Face {
            n: self.n,
            blocks: self.blocks.iter().map(|&b| pi.apply_mask(b)).collect(),
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .blocks()
            .iter()
            .map(|b| b.iter().join(""))
            .join(",");
        write!(f, "({body})")
    }
}

/// All faces of degree `n` (ordered set partitions of {1..n}), sorted
/// by number of blocks and then lexicographically on the block
/// sequence.
pub fn enumerate_faces(n: u32) -> Vec<Face> {
    let mut out = Vec::new();
    for x in crate::combinatorics::set_partitions_of(n) {
        let masks = x.masks();
        let k = masks.len();
        for perm in (0..k).permutations(k) {
            let blocks = perm.iter().map(|&i| masks[i]).collect();
            out.push(Face { n, blocks });
        }
    }
    out.sort_by_cached_key(|f| (f.num_blocks(), f.blocks()));
    out
}

/// All faces whose block-size sequence equals `shape`, in
/// lexicographic order of the block sequence.
pub fn faces_with_composition(n: u32, shape: &Composition) -> Vec<Face> {
    assert_eq!(shape.size(), n, "composition must have size n");
    fn gen(n: u32, rest: &[u32], free: u64, blocks: &mut Vec<u64>, out: &mut Vec<Face>) {
        let Some((&size, tail)) = rest.split_first() else {
            out.push(Face { n, blocks: blocks.clone() });
            return;
        };
        let elems: Vec<u64> = {
            let mut v = Vec::new();
            let mut m = free;
            while m != 0 {
                v.push(m & m.wrapping_neg());
                m &= m - 1;
            }
            v
        };
        for combo in elems.iter().combinations(size as usize) {
            let mask = combo.into_iter().fold(0u64, |a, &b| a | b);
            blocks.push(mask);
            gen(n, tail, free & !mask, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    gen(n, shape.parts(), full_mask(n), &mut Vec::new(), &mut out);
    out
}

/// The invariant algebra element attached to a subset J of {1..n-1}:
/// the sum, with coefficient one, of all faces whose block-size
/// sequence is (a_1, a_2 - a_1, ..., n - a_k) for J = {a_1 < ... < a_k}.
/// J = {} gives the identity face.
pub fn descent_subset_image(n: u32, j: &[u32]) -> FaceAlgebraElement {
    let mut j = j.to_vec();
    j.sort_unstable();
    j.dedup();
    assert!(j.iter().all(|&a| a >= 1 && a < n), "J must lie in {{1..n-1}}");
    let mut parts = Vec::new();
    let mut prev = 0;
    for &a in &j {
        parts.push(a - prev);
        prev = a;
    }
    parts.push(n - prev);
    let shape = Composition::new(parts);
    let mut el = FaceAlgebraElement::zero(n);
    for f in faces_with_composition(n, &shape) {
        el.add_face(&f, &BigRational::one());
    }
    el
}

/// A sparse linear combination of equal-degree faces with exact
/// rational coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceAlgebraElement {
    n: u32,
    terms: BTreeMap<Face, BigRational>,
}

impl FaceAlgebraElement {
    pub fn zero(n: u32) -> Self {
        FaceAlgebraElement { n, terms: BTreeMap::new() }
    }

    /// The basis element of a single face with coefficient one.
    pub fn from_face(f: &Face) -> Self {
        let mut el = FaceAlgebraElement::zero(f.n());
        el.terms.insert(f.clone(), BigRational::one());
        el
    }

    /// The multiplicative identity: the single-block face.
    pub fn one(n: u32) -> Self {
        FaceAlgebraElement::from_face(&Face::identity(n))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Face, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, f: &Face) -> BigRational {
        self.terms.get(f).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Add `c · f` in place.
    pub fn add_face(&mut self, f: &Face, c: &BigRational) {
        assert_eq!(self.n, f.n(), "degree mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f.clone()) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Add `c · other` in place.
    pub fn add_scaled(&mut self, other: &FaceAlgebraElement, c: &BigRational) {
        assert_eq!(self.n, other.n, "degree mismatch");
        if c.is_zero() {
            return;
        }
        for (f, d) in &other.terms {
            self.add_face(f, &(d * c));
        }
    }

    pub fn add(&self, other: &FaceAlgebraElement) -> FaceAlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one());
        out
    }

    pub fn sub(&self, other: &FaceAlgebraElement) -> FaceAlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one());
        out
    }

    pub fn scale(&self, c: &BigRational) -> FaceAlgebraElement {
        if c.is_zero() {
            return FaceAlgebraElement::zero(self.n);
        }
        FaceAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(f, d)| (f.clone(), d * c)).collect(),
        }
    }

    /// Bilinear extension of the face product.
    pub fn multiply(&self, other: &FaceAlgebraElement) -> FaceAlgebraElement {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut out = FaceAlgebraElement::zero(self.n);
        for (f, c) in &self.terms {
            for (g, d) in &other.terms {
                out.add_face(&f.product(g), &(c * d));
            }
        }
        out
    }

    /// Right-multiply a single face into the element: `self · g`.
    pub fn multiply_face_right(&self, g: &Face) -> FaceAlgebraElement {
        let mut out = FaceAlgebraElement::zero(self.n);
        for (f, c) in &self.terms {
            out.add_face(&f.product(g), c);
        }
        out
    }

    /// Left-multiply a single face onto the element: `f · self`.
    pub fn multiply_face_left(&self, f: &Face) -> FaceAlgebraElement {
        let mut out = FaceAlgebraElement::zero(self.n);
        for (g, c) in &self.terms {
            out.add_face(&f.product(g), c);
        }
        out
    }

    /// Linear extension of the permutation action; an algebra
    /// automorphism.
    pub fn act(&self, pi: &Permutation) -> FaceAlgebraElement {
        FaceAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(f, c)| (f.act(pi), c.clone())).collect(),
        }
    }

    /// Sum of the coefficients of the faces with the given support.
    pub fn support_fiber_sum(&self, x: &SetPartition) -> BigRational {
        let mut acc = BigRational::zero();
        for (f, c) in &self.terms {
            if f.support() == *x {
                acc += c;
            }
        }
        acc
    }
}

impl fmt::Display for FaceAlgebraElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (f, c) in &self.terms {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(out, "-")?;
                }
                first = false;
            } else {
                write!(out, " {sign} ")?;
            }
            if mag.is_one() {
                write!(out, "{f}")?;
            } else {
                write!(out, "{mag} {f}")?;
            }
        }
        Ok(())
    }
}
