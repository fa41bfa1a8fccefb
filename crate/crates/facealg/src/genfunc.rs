//! The bivariate generating series that packages every projected-space
//! character at once.
//!
//! The series lives in bookkeeping variables y_λ and z_μ (indexed by
//! partitions) with symmetric-function coefficients.  It is defined as
//! the product, over all Lyndon words w of letter sum at most the
//! truncation degree, of the factors
//!
//! ```text
//!   1 + Σ_ρ  y_{ρ·|w|} · z_{w repeated ℓ(ρ)... |ρ| times} · L_ρ[h_w]
//! ```
//!
//! where ρ runs over nonempty partitions with |ρ|·|w| within the
//! truncation, L_ρ is the higher Lie character, h_w the product of
//! complete homogeneous functions over the letters of w, and the square
//! bracket is plethysm.  The y-index scales ρ by the letter sum of w;
//! the z-index repeats the letter multiset of w once per unit of |ρ|.
//!
//! The headline identity states that the coefficient of y_λ z_μ equals
//! the Frobenius characteristic of the two-sided projected space for
//! the pair (λ, μ).  [`verify_main_theorem`] checks that coefficient by
//! coefficient against the exact linear-algebra route, and the Cartan
//! functions cross-check the invariant-part specialization against a
//! direct count of Lyndon factorization types.

use std::collections::BTreeMap;

use num::{Signed, ToPrimitive};

use crate::combinatorics::{compositions_rearranging_to, partitions_of, Partition};
use crate::idempotents::IdempotentFamily;
use crate::lyndon::{lyndon_type, lyndon_words_up_to};
use crate::repanalysis::ProjectedSpace;
use crate::symfunc::{higher_lie, SymFunc};
use crate::{par, Error, Result};

/// A formal series in y and z variables with symmetric-function
/// coefficients, truncated to total degree `trunc`.  Every stored key
/// (λ, μ) satisfies |λ| = |μ| ≤ trunc with μ refining λ, and carries a
/// coefficient homogeneous of that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    trunc: u32,
    terms: BTreeMap<(Partition, Partition), SymFunc>,
}

impl BivariateSeries {
    fn one(trunc: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((Partition::empty(), Partition::empty()), SymFunc::one());
        BivariateSeries { trunc, terms }
    }

    /// The truncation degree.
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// The coefficient of y_λ z_μ; zero if absent.
    pub fn coefficient(&self, y: &Partition, z: &Partition) -> SymFunc {
        self.terms.get(&(y.clone(), z.clone())).cloned().unwrap_or_else(SymFunc::zero)
    }

    /// All stored (y, z) keys with their coefficients, in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &SymFunc)> {
        self.terms.iter()
    }

    /// Multiply by `1 + Σ terms`, discarding degrees above `trunc`.
    fn multiply_factor(&mut self, factor: &[((Partition, Partition), SymFunc)]) {
        let mut extra: Vec<((Partition, Partition), SymFunc)> = Vec::new();
        for ((fy, fz), fv) in factor {
            let d = fy.size();
            for ((sy, sz), sv) in &self.terms {
                if sy.size() + d > self.trunc {
                    continue;
                }
                let key = (merge(sy, fy), merge(sz, fz));
                extra.push((key, sv.multiply(fv)));
            }
        }
        for (key, value) in extra {
            match self.terms.get_mut(&key) {
                Some(existing) => *existing = existing.add(&value),
                None => {
                    self.terms.insert(key, value);
                }
            }
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

/// Concatenate two partitions as multisets.
fn merge(a: &Partition, b: &Partition) -> Partition {
    Partition::from_unsorted(a.parts().iter().chain(b.parts()).copied())
}

/// The nonconstant terms of the factor attached to one Lyndon word.
fn word_factor(word: &[u32], trunc: u32) -> Vec<((Partition, Partition), SymFunc)> {
    let weight: u32 = word.iter().sum();
    let h_word = SymFunc::h_of(word);
    let mut terms = Vec::new();
    for k in 1..=trunc / weight {
        for rho in partitions_of(k) {
            let y = rho.scale(weight);
            let z = Partition::from_unsorted(
                (0..k).flat_map(|_| word.iter().copied()),
            );
            debug_assert_eq!(y.size(), k * weight);
            debug_assert!(z.refines(&y));
            let value = higher_lie(&rho).plethysm(&h_word);
            debug_assert!(value.degrees().iter().all(|&d| d == k * weight));
            terms.push(((y, z), value));
        }
    }
    terms
}

/// The full product series truncated at total degree `trunc`, with the
/// per-word factors prepared in parallel.
pub fn rhs_series(trunc: u32) -> BivariateSeries {
    rhs_series_in(trunc, true)
}

/// Sequential variant of [`rhs_series`]; same result, no rayon.
pub fn rhs_series_seq(trunc: u32) -> BivariateSeries {
    rhs_series_in(trunc, false)
}

fn rhs_series_in(trunc: u32, parallel: bool) -> BivariateSeries {
    assert!(trunc >= 1, "truncation degree must be positive");
    let words = lyndon_words_up_to(trunc);
    let factors = par::map_slice_in(parallel, &words, |w| word_factor(w, trunc));
    let mut series = BivariateSeries::one(trunc);
    for factor in &factors {
        series.multiply_factor(factor);
    }
    series
}

/// Cartan invariants by direct counting: the (λ, μ) entry is the number
/// of compositions rearranging to μ whose Lyndon factorization sums
/// form λ.  Zero entries are omitted.
pub fn cartan_via_counts(n: u32) -> BTreeMap<(Partition, Partition), u64> {
    assert!(n >= 1, "degree must be positive");
    let mut out = BTreeMap::new();
    for mu in partitions_of(n) {
        for alpha in compositions_rearranging_to(&mu) {
            *out.entry((lyndon_type(&alpha), mu.clone())).or_insert(0) += 1;
        }
    }
    out
}

/// Cartan invariants from the series: the invariant part
/// ⟨s_{(n)}, coefficient(λ, μ)⟩ of each degree-n coefficient.  Each
/// must be a nonnegative integer; zero entries are omitted.
pub fn cartan_via_series(
    series: &BivariateSeries,
    n: u32,
) -> Result<BTreeMap<(Partition, Partition), u64>> {
    assert!(n >= 1 && n <= series.trunc(), "degree must be within the series truncation");
    let s_top = SymFunc::s(&Partition::new(vec![n]));
    let mut out = BTreeMap::new();
    for lam in partitions_of(n) {
        for mu in partitions_of(n) {
            let value = s_top.hall_inner(&series.coefficient(&lam, &mu));
            if value.is_integer() && !value.is_negative() {
                let c = value.to_integer().to_u64().unwrap();
                if c > 0 {
                    out.insert((lam.clone(), mu.clone()), c);
                }
            } else {
                return Err(Error::Consistency(format!(
                    "invariant part of the series coefficient at ({lam}, {mu}) \
                     is not a nonnegative integer: {value}"
                )));
            }
        }
    }
    Ok(out)
}

/// The Cartan matrix at degree n, computed both ways and cross-checked.
pub fn cartan_matrix(n: u32) -> Result<BTreeMap<(Partition, Partition), u64>> {
    let counted = cartan_via_counts(n);
    let from_series = cartan_via_series(&rhs_series(n), n)?;
    if counted != from_series {
        return Err(Error::Consistency(format!(
            "Cartan invariants at degree {n} disagree: counting Lyndon types gives \
             {counted:?}, the series gives {from_series:?}"
        )));
    }
    Ok(counted)
}

/// One verified coefficient of the headline identity.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub left: Partition,
    pub right: Partition,
    pub dimension: u64,
    pub character: SymFunc,
}

/// The outcome of checking every (λ, μ) coefficient at one degree.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub n: u32,
    pub pairs: Vec<PairReport>,
}

impl TheoremReport {
    /// Σ over pairs of the projected-space dimensions; equals the
    /// number of faces when the identity holds.
    pub fn total_dimension(&self) -> u64 {
        self.pairs.iter().map(|p| p.dimension).sum()
    }
}

/// Checks, coefficient by coefficient, that the series reproduces the
/// character of every two-sided projected space at the family's degree.
pub fn verify_main_theorem(family: &IdempotentFamily) -> Result<TheoremReport> {
    verify_main_theorem_in(family, true)
}

/// Sequential variant of [`verify_main_theorem`]; same checks, no rayon.
pub fn verify_main_theorem_seq(family: &IdempotentFamily) -> Result<TheoremReport> {
    verify_main_theorem_in(family, false)
}

fn verify_main_theorem_in(family: &IdempotentFamily, parallel: bool) -> Result<TheoremReport> {
    let n = family.n();
    let series = rhs_series_in(n, parallel);
    let mut pairs = Vec::new();
    for lam in partitions_of(n) {
        for mu in partitions_of(n) {
            pairs.push((lam.clone(), mu.clone()));
        }
    }
    let reports = par::map_slice_in(parallel, &pairs, |(lam, mu)| -> Result<PairReport> {
        let space = ProjectedSpace::build_seq(family, lam, mu)?;
        let character = space.character()?;
        let expected = series.coefficient(lam, mu);
        if character != expected {
            return Err(Error::Verification(format!(
                "series coefficient at ({lam}, {mu}) is {}, but the projected space \
                 has character {}",
                expected.schur_string(),
                character.schur_string()
            )));
        }
        Ok(PairReport {
            left: lam.clone(),
            right: mu.clone(),
            dimension: space.dimension(),
            character,
        })
    });
    let pairs = reports.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport { n, pairs })
}
