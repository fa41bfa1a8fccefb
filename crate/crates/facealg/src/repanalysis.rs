//! Brute-force module analysis of the face algebra by exact linear
//! algebra.
//!
//! For orbit idempotents E_λ and E_μ, the two-sided projection
//! T(x) = E_λ·x·E_μ is assembled column by column over the face basis.
//! Because T is a projection commuting with the permutation action, the
//! image E_λ ℂF_n E_μ has dimension trace(T) and its symmetric-group
//! character is read off from the twisted traces tr(w ∘ T), one
//! conjugacy-class representative each.  Every quantity that admits a
//! second, independent computation (rank vs. trace, trace formulas vs.
//! closed counting formulas) is computed both ways and cross-checked at
//! runtime; disagreement aborts with [`Error::Consistency`].

use std::collections::{BTreeMap, BTreeSet};

use num::rational::BigRational;
use num::{BigInt, Signed, ToPrimitive, Zero};

use crate::characters::{character_value, dimension};
use crate::combinatorics::{
    compositions_rearranging_to, conjugacy_classes, factorial, partitions_of, Partition,
    Permutation,
};
use crate::faces::{enumerate_faces, Face, FaceAlgebraElement};
use crate::idempotents::IdempotentFamily;
use crate::symfunc::{frobenius_from_traces, SymFunc};
use crate::{par, Error, Result};

/// The projection T(x) = E_λ·x·E_μ on the face algebra, stored through
/// its columns T(f) over the face basis, together with the rank of its
/// image E_λ ℂF_n E_μ.
#[derive(Clone, Debug)]
pub struct ProjectedSpace {
    n: u32,
    left: Partition,
    right: Partition,
    faces: Vec<Face>,
    index: BTreeMap<Face, usize>,
    columns: Vec<FaceAlgebraElement>,
    dimension: u64,
}

impl ProjectedSpace {
    /// Assembles T for the pair (λ, μ), verifying that its trace is a
    /// nonnegative integer equal to its column rank, and that the space
    /// vanishes when μ does not refine λ.
    pub fn build(
        family: &IdempotentFamily,
        left: &Partition,
        right: &Partition,
    ) -> Result<ProjectedSpace> {
        Self::build_in(family, left, right, true)
    }

    /// Sequential variant of [`Self::build`]; same result, no rayon.
    pub fn build_seq(
        family: &IdempotentFamily,
        left: &Partition,
        right: &Partition,
    ) -> Result<ProjectedSpace> {
        Self::build_in(family, left, right, false)
    }

    fn build_in(
        family: &IdempotentFamily,
        left: &Partition,
        right: &Partition,
        parallel: bool,
    ) -> Result<ProjectedSpace> {
        let n = family.n();
        assert_eq!(left.size(), n, "left partition must have size {n}");
        assert_eq!(right.size(), n, "right partition must have size {n}");
        let faces = enumerate_faces(n);
        let e_left = family.orbit_idempotent(left);
        let e_right = family.orbit_idempotent(right);

        // f·E_μ vanishes unless μ refines the block-size type of
        // support(f); the annihilation sweep of the family build backs
        // skipping those columns outright.
        let right_products: Vec<FaceAlgebraElement> = par::map_slice_in(parallel, &faces, |f| {
            if right.refines(&f.support().block_size_type()) {
                e_right.multiply_face_left(f)
            } else {
                FaceAlgebraElement::zero(n)
            }
        });

        // Left factors E_λ·h are shared across every column touching h.
        let needed: Vec<Face> = right_products
            .iter()
            .flat_map(|r| r.terms().map(|(h, _)| h.clone()))
            .collect::<BTreeSet<Face>>()
            .into_iter()
            .collect();
        let left_factors: BTreeMap<Face, FaceAlgebraElement> = needed
            .iter()
            .cloned()
            .zip(par::map_slice_in(parallel, &needed, |h| e_left.multiply_face_right(h)))
            .collect();

        let columns: Vec<FaceAlgebraElement> = par::map_slice_in(parallel, &right_products, |r| {
            let mut column = FaceAlgebraElement::zero(n);
            for (h, c) in r.terms() {
                column.add_scaled(&left_factors[h], c);
            }
            column
        });

        let mut trace = BigRational::zero();
        for (f, column) in faces.iter().zip(&columns) {
            trace += column.coefficient(f);
        }
        let dimension = rational_to_count(&trace).ok_or_else(|| {
            Error::Consistency(format!(
                "trace of the ({left}, {right}) projection is not a nonnegative integer: {trace}"
            ))
        })?;
        let rank = column_rank(&columns);
        if rank != dimension {
            return Err(Error::Consistency(format!(
                "({left}, {right}) projection has trace {dimension} but column rank {rank}"
            )));
        }
        if !right.refines(left) && dimension != 0 {
            return Err(Error::Consistency(format!(
                "space for ({left}, {right}) should vanish because {right} does not refine {left}"
            )));
        }
        let index = faces.iter().cloned().zip(0..).collect();
        Ok(ProjectedSpace { n, left: left.clone(), right: right.clone(), faces, index, columns, dimension })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn left(&self) -> &Partition {
        &self.left
    }

    pub fn right(&self) -> &Partition {
        &self.right
    }

    /// dim E_λ ℂF_n E_μ = trace(T) = rank(T).
    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    /// T applied to an arbitrary element, by expanding its columns.
    pub fn apply(&self, x: &FaceAlgebraElement) -> FaceAlgebraElement {
        assert_eq!(x.n(), self.n, "degree mismatch");
        let mut out = FaceAlgebraElement::zero(self.n);
        for (f, c) in x.terms() {
            out.add_scaled(&self.columns[self.index[f]], c);
        }
        out
    }

    /// The Frobenius characteristic of E_λ ℂF_n E_μ as a symmetric
    /// function, from the twisted traces tr(w_ρ ∘ T); its Schur
    /// expansion is verified to be nonnegative and integral.
    pub fn character(&self) -> Result<SymFunc> {
        let mut traces = BTreeMap::new();
        for class in conjugacy_classes(self.n) {
            let w = &class.representative;
            let mut tr = BigRational::zero();
            for (f, column) in self.faces.iter().zip(&self.columns) {
                tr += column.act(w).coefficient(f);
            }
            traces.insert(class.cycle_type.clone(), tr);
        }
        let ch = frobenius_from_traces(self.n, &traces);
        ensure_schur_positive(&ch, || format!("character of ({}, {})", self.left, self.right))?;
        Ok(ch)
    }
}

/// Rank of the column family by sparse elimination; pivot rows are
/// keyed by their leading face.
fn column_rank(columns: &[FaceAlgebraElement]) -> u64 {
    let mut pivots: BTreeMap<Face, BTreeMap<Face, BigRational>> = BTreeMap::new();
    for column in columns {
        let mut row: BTreeMap<Face, BigRational> =
            column.terms().map(|(f, c)| (f.clone(), c.clone())).collect();
        loop {
            row.retain(|_, c| !c.is_zero());
            let Some((lead, lc)) = row.iter().next().map(|(f, c)| (f.clone(), c.clone())) else {
                break;
            };
            match pivots.get(&lead) {
                Some(pivot) => {
                    for (f, c) in pivot {
                        let entry = row.entry(f.clone()).or_insert_with(BigRational::zero);
                        *entry -= &lc * c;
                    }
                }
                None => {
                    let normalized = row.iter().map(|(f, c)| (f.clone(), c / &lc)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len() as u64
}

fn rational_to_count(x: &BigRational) -> Option<u64> {
    if x.is_integer() && !x.is_negative() {
        x.to_integer().to_u64()
    } else {
        None
    }
}

fn ensure_schur_positive(ch: &SymFunc, what: impl Fn() -> String) -> Result<()> {
    for (lambda, c) in ch.schur_expand() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Consistency(format!(
                "{} has Schur coefficient {c} at {lambda}",
                what()
            )));
        }
    }
    Ok(())
}

/// Twisted traces tr(w_ρ ∘ R_μ) of right multiplication by E_μ, one
/// per cycle type.
fn right_multiplication_traces(
    family: &IdempotentFamily,
    mu: &Partition,
) -> BTreeMap<Partition, BigRational> {
    let n = family.n();
    let e_right = family.orbit_idempotent(mu);
    let faces = enumerate_faces(n);
    let columns = par::map_slice(&faces, |f| e_right.multiply_face_left(f));
    let mut traces = BTreeMap::new();
    for class in conjugacy_classes(n) {
        let w = &class.representative;
        let mut tr = BigRational::zero();
        for (f, column) in faces.iter().zip(&columns) {
            tr += column.act(w).coefficient(f);
        }
        traces.insert(class.cycle_type.clone(), tr);
    }
    traces
}

/// ch(ℂF_n E_μ) computed from projector traces; verified to equal
/// #{compositions rearranging to μ} · h_μ before returning.
pub fn ch_of_right_module(family: &IdempotentFamily, mu: &Partition) -> Result<SymFunc> {
    let n = family.n();
    assert_eq!(mu.size(), n, "partition must have size {n}");
    let ch = frobenius_from_traces(n, &right_multiplication_traces(family, mu));
    let count = compositions_rearranging_to(mu).len() as i64;
    let expected = SymFunc::h_of(mu.parts()).scale(&BigRational::from(BigInt::from(count)));
    if ch != expected {
        return Err(Error::Consistency(format!(
            "ch(right module at {mu}) disagrees with {count}·h[{mu}]"
        )));
    }
    Ok(ch)
}

/// dim (ℂF_n E_μ)^ν, computed from the trace of the composite
/// projector π_ν ∘ R_μ and cross-checked against the closed product
/// f^ν · #{α ∼ μ} · K_{ν,μ}.
pub fn isotypic_dimension(family: &IdempotentFamily, nu: &Partition, mu: &Partition) -> Result<u64> {
    let n = family.n();
    assert_eq!(nu.size(), n, "partition must have size {n}");
    assert_eq!(mu.size(), n, "partition must have size {n}");

    let kostka = SymFunc::s(nu).hall_inner(&SymFunc::h_of(mu.parts()));
    let count = compositions_rearranging_to(mu).len() as u64;
    let closed = BigRational::from(BigInt::from(dimension(nu) * count)) * kostka;

    let traces = right_multiplication_traces(family, mu);
    let mut weighted = BigRational::zero();
    for class in conjugacy_classes(n) {
        let chi = BigRational::from(BigInt::from(character_value(nu, &class.cycle_type)));
        let size = BigRational::from(BigInt::from(class.size));
        weighted += chi * size * &traces[&class.cycle_type];
    }
    let by_trace = weighted * BigRational::new(
        BigInt::from(dimension(nu)),
        BigInt::from(factorial(n as u64)),
    );

    if closed != by_trace {
        return Err(Error::Consistency(format!(
            "isotypic dimension at (ν={nu}, μ={mu}): projector trace gives {by_trace}, \
             closed formula gives {closed}"
        )));
    }
    rational_to_count(&closed).ok_or_else(|| {
        Error::Consistency(format!(
            "isotypic dimension at (ν={nu}, μ={mu}) is not a nonnegative integer: {closed}"
        ))
    })
}

/// Multiplicity of the simple indexed by λ in any composition series of
/// the descent-algebra module (ℂF_n E_μ)^ν: f^ν·⟨s_ν, ch(E_λℂF_nE_μ)⟩.
pub fn composition_multiplicity(
    family: &IdempotentFamily,
    nu: &Partition,
    mu: &Partition,
    lambda: &Partition,
) -> Result<u64> {
    let space = ProjectedSpace::build(family, lambda, mu)?;
    let ch = space.character()?;
    let value =
        BigRational::from(BigInt::from(dimension(nu))) * SymFunc::s(nu).hall_inner(&ch);
    rational_to_count(&value).ok_or_else(|| {
        Error::Consistency(format!(
            "multiplicity at (ν={nu}, μ={mu}, λ={lambda}) is not a nonnegative integer: {value}"
        ))
    })
}

/// dim (ℂF_n)^{sign}: the sign-isotypic dimension of the whole face
/// algebra, from fixed-face counts — no idempotents required.
pub fn sign_isotypic_dimension(n: u32) -> Result<u64> {
    assert!(n >= 1, "degree must be positive");
    let faces = enumerate_faces(n);
    let mut acc = BigRational::zero();
    for class in conjugacy_classes(n) {
        let w = &class.representative;
        let fixed = faces.iter().filter(|f| f.act(w) == **f).count();
        let sign = if (n as usize - class.cycle_type.len()) % 2 == 0 { 1 } else { -1 };
        acc += BigRational::from(BigInt::from(sign * class.size as i64 * fixed as i64));
    }
    acc /= BigRational::from(BigInt::from(factorial(n as u64)));
    rational_to_count(&acc).ok_or_else(|| {
        Error::Consistency(format!("sign-isotypic dimension of degree {n} is not integral: {acc}"))
    })
}

/// Cycle type of the order-reversing permutation, the longest element:
/// (2, …, 2) for even n and (2, …, 2, 1) for odd n.
pub fn longest_element_cycle_type(n: u32) -> Partition {
    Permutation::new((1..=n).rev().collect()).cycle_type()
}

/// The label λ of the unique simple composition factor of the
/// sign-isotypic part of ℂF_n E_{1^n}; verified unique and equal to
/// [`longest_element_cycle_type`].
pub fn sign_isotypic_type(family: &IdempotentFamily) -> Result<Partition> {
    let n = family.n();
    let sign = Partition::rectangular(1, n);
    let mut label = None;
    for lambda in partitions_of(n) {
        if composition_multiplicity(family, &sign, &sign, &lambda)? == 0 {
            continue;
        }
        if let Some(previous) = label {
            return Err(Error::Consistency(format!(
                "sign-isotypic part at degree {n} has two composition factors: \
                 {previous} and {lambda}"
            )));
        }
        label = Some(lambda);
    }
    let Some(label) = label else {
        return Err(Error::Consistency(format!(
            "sign-isotypic part at degree {n} has no composition factor"
        )));
    };
    let expected = longest_element_cycle_type(n);
    if label != expected {
        return Err(Error::Consistency(format!(
            "sign-isotypic label at degree {n} is {label}, expected {expected}"
        )));
    }
    Ok(label)
}
