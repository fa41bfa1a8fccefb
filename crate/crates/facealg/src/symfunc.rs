//! Symmetric functions with exact rational coefficients, stored in the
//! power-sum basis.
//!
//! The power-sum basis makes products (index concatenation), the Hall
//! inner product (diagonal with weights z_ρ), and plethysm (index
//! rescaling) purely combinatorial; conversions to Schur and complete
//! homogeneous functions go through exact character data. Elements may
//! mix degrees; truncation is always explicit at call sites.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

use crate::characters::character_value;
use crate::combinatorics::{partitions_of, Partition};

/// A finite rational combination of power-sum basis elements p_ρ; the
/// empty partition indexes the constant 1.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, BigRational>,
}

fn big(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn constant(c: BigRational) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(&Partition::empty(), &c);
        f
    }

    pub fn one() -> Self {
        SymFunc::constant(BigRational::one())
    }

    /// The power sum p_ρ.
    pub fn p(rho: &Partition) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(rho, &BigRational::one());
        f
    }

    /// The single power sum p_k (k ≥ 1).
    pub fn p_single(k: u32) -> Self {
        SymFunc::p(&Partition::new(vec![k]))
    }

    /// The complete homogeneous function h_k = Σ_{ρ⊢k} p_ρ / z_ρ;
    /// h_0 = 1.
    pub fn h(k: u32) -> Self {
        let mut f = SymFunc::zero();
        for rho in partitions_of(k) {
            let z = big(rho.centralizer_order() as i64);
            f.add_term(&rho, &z.recip());
        }
        f
    }

    /// h_α = h_{α_1} h_{α_2} ... for any finite index sequence; the
    /// value depends only on the multiset of entries.
    pub fn h_of(parts: &[u32]) -> Self {
        let mut f = SymFunc::one();
        for &k in parts {
            f = f.multiply(&SymFunc::h(k));
        }
        f
    }

    /// The Schur function s_λ = Σ_{ρ⊢|λ|} χ^λ(ρ) p_ρ / z_ρ.
    pub fn s(lambda: &Partition) -> Self {
        let mut f = SymFunc::zero();
        for rho in partitions_of(lambda.size()) {
            let chi = big(character_value(lambda, &rho));
            let z = big(rho.centralizer_order() as i64);
            f.add_term(&rho, &(chi / z));
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of p_ρ.
    pub fn p_coefficient(&self, rho: &Partition) -> BigRational {
        self.terms.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, rho: &Partition, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(rho.clone()) {
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

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(r, &-c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(r, d)| (r.clone(), d * c)).collect(),
        }
    }

    /// Product: p_ρ p_σ is the part-multiset union.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (r, c) in &self.terms {
            for (s, d) in &other.terms {
                let merged = Partition::from_unsorted(
                    r.parts().iter().chain(s.parts()).copied(),
                );
                out.add_term(&merged, &(c * d));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        let mut out = SymFunc::one();
        for _ in 0..k {
            out = out.multiply(self);
        }
        out
    }

    /// Hall inner product: ⟨p_ρ, p_σ⟩ = δ_{ρσ} z_ρ; terms of different
    /// degree pair to zero because their indices differ.
    pub fn hall_inner(&self, other: &SymFunc) -> BigRational {
        let mut acc = BigRational::zero();
        for (r, c) in &self.terms {
            if let Some(d) = other.terms.get(r) {
                acc += c * d * big(r.centralizer_order() as i64);
            }
        }
        acc
    }

    /// The degrees present.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|r| r.size()).collect()
    }

    /// The homogeneous component of degree `d`.
    pub fn degree_component(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(r, _)| r.size() == d)
                .map(|(r, c)| (r.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop all terms of degree above `d`.
    pub fn truncate(&self, d: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(r, _)| r.size() <= d)
                .map(|(r, c)| (r.clone(), c.clone()))
                .collect(),
        }
    }

    /// Plethysm F[G]: for F = Σ_ρ c_ρ p_ρ, each p_r acts on G by
    /// multiplying every power-sum index by r, extended
    /// multiplicatively over the parts of ρ and linearly over ρ.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (rho, c) in &self.terms {
            let mut term = SymFunc::constant(c.clone());
            for &r in rho.parts() {
                let scaled = SymFunc {
                    terms: g
                        .terms
                        .iter()
                        .map(|(sigma, d)| (sigma.scale_allow_empty(r), d.clone()))
                        .collect(),
                };
                term = term.multiply(&scaled);
            }
            out = out.add(&term);
        }
        out
    }

    /// Coefficients ⟨F, s_λ⟩ over every degree present; reconstructing
    /// Σ c_λ s_λ recovers F when F is a character image.
    pub fn schur_expand(&self) -> BTreeMap<Partition, BigRational> {
        let mut out = BTreeMap::new();
        for d in self.degrees() {
            let comp = self.degree_component(d);
            for lambda in partitions_of(d) {
                let c = comp.hall_inner(&SymFunc::s(&lambda));
                if !c.is_zero() {
                    out.insert(lambda, c);
                }
            }
        }
        out
    }

    /// Coefficient of the monomial x^ν, via ⟨F, h_ν⟩.
    pub fn monomial_coefficient(&self, nu: &Partition) -> BigRational {
        self.degree_component(nu.size()).hall_inner(&SymFunc::h_of(nu.parts()))
    }

    /// Render in the Schur basis, e.g. `s[3,1] + 2 s[2,1,1]`.
    pub fn schur_string(&self) -> String {
        format_expansion(&self.schur_expand(), "s")
    }
}

impl Partition {
    fn scale_allow_empty(&self, k: u32) -> Partition {
        if self.is_empty() { self.clone() } else { self.scale(k) }
    }
}

/// Format a basis expansion like `2 b[2,1] - 1/2 b[1,1,1]`.
pub fn format_expansion(terms: &BTreeMap<Partition, BigRational>, basis: &str) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (rho, c) in terms {
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let sym = if rho.is_empty() {
            "1".to_string()
        } else {
            format!("{basis}[{rho}]")
        };
        if mag.is_one() && !rho.is_empty() {
            out.push_str(&sym);
        } else if rho.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag} {sym}"));
        }
    }
    out
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_expansion(&self.terms, "p"))
    }
}

/// Build Σ_ρ t(ρ) p_ρ / z_ρ from per-class traces; every class of S_n
/// must be present.
pub fn frobenius_from_traces(n: u32, traces: &BTreeMap<Partition, BigRational>) -> SymFunc {
    let mut f = SymFunc::zero();
    for rho in partitions_of(n) {
        let t = traces
            .get(&rho)
            .unwrap_or_else(|| panic!("missing class {rho} in trace map"));
        let z = big(rho.centralizer_order() as i64);
        f.add_term(&rho, &(t / z));
    }
    f
}

/// Möbius function by trial factorization; supported up to 64.
pub fn moebius(n: u32) -> i64 {
    assert!((1..=64).contains(&n), "out of the supported range");
    let mut m = n;
    let mut primes = 0;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            primes += 1;
        }
        d += 1;
    }
    if m > 1 {
        primes += 1;
    }
    if primes % 2 == 0 { 1 } else { -1 }
}

/// The degree-n Lie character: (1/n) Σ_{d|n} μ(d) p_d^{n/d}.
fn lie_top(n: u32) -> SymFunc {
    assert!(n >= 1);
    let mut f = SymFunc::zero();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        let mu = moebius(d);
        if mu == 0 {
            continue;
        }
        let rho = Partition::rectangular(d, n / d);
        f.add_term(&rho, &(big(mu) / big(n as i64)));
    }
    f
}

/// The higher Lie character L_λ = Π_i h_{m_i}[L_i] over the distinct
/// part values i of λ with multiplicities m_i; the empty partition
/// gives 1. The Schur expansion is checked to be nonnegative and
/// integral on every call.
pub fn higher_lie(lambda: &Partition) -> SymFunc {
    let mut f = SymFunc::one();
    for (&value, &mult) in &lambda.multiplicities() {
        f = f.multiply(&SymFunc::h(mult).plethysm(&lie_top(value)));
    }
    for (l, c) in f.schur_expand() {
        assert!(
            c.is_integer() && !c.is_negative(),
            "higher Lie character has a bad Schur coefficient {c} at {l}"
        );
    }
    f
}
