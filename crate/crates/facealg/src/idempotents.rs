//! A complete family of primitive orthogonal idempotents for the face
//! algebra, one idempotent per set partition.
//!
//! The family is built by a downward recursion over the refinement
//! lattice.  Writing u_X for the uniform average of the k! faces
//! supported on a k-block set partition X, the idempotents are
//!
//! ```text
//! E_X = u_X − u_X · Σ_{Y strictly finer than X} E_Y,
//! ```
//!
//! processed from the all-singletons partition (finest) up to the
//! one-block partition (coarsest), so each E_X only needs already-built
//! finer idempotents.  Averaging over the whole support fiber makes the
//! construction manifestly equivariant: permuting an idempotent gives
//! the idempotent of the permuted set partition.
//!
//! Because the recursion realizes a construction whose properties are
//! established elsewhere rather than forced by the code shape, a build
//! re-verifies the defining axioms at runtime (completeness,
//! orthogonality, idempotency, equivariance, support triangularity and
//! the annihilation rule) before handing the family out.  Primitivity
//! itself is not a runtime check: it follows from counting — the family
//! has one idempotent per set partition, matching the number of simple
//! modules of the algebra.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{BigInt, One};

use crate::combinatorics::{Partition, Permutation, SetPartition};
use crate::faces::{enumerate_faces, Face, FaceAlgebraElement};
use crate::{par, Error, Result};

/// Largest degree for which a family can be built; the verification
/// sweeps are exhaustive and the face count grows like the ordered Bell
/// numbers.
pub const MAX_DEGREE: u32 = 6;

/// Largest degree at which [`IdempotentFamily::build`] verifies by
/// default; degree 6 verification takes minutes and is opt-in through
/// [`IdempotentFamily::build_with`].
pub const MAX_VERIFIED_DEGREE: u32 = 5;

/// The idempotents `E_X` keyed by support, together with their orbit
/// sums `E_λ` keyed by block-size type.
#[derive(Clone, Debug)]
pub struct IdempotentFamily {
    n: u32,
    by_support: BTreeMap<SetPartition, FaceAlgebraElement>,
    by_orbit: BTreeMap<Partition, FaceAlgebraElement>,
}

/// Outcome of the exhaustive annihilation sweep: `f · E_μ` over all
/// faces `f` and all orbit idempotents whose partition μ does not
/// refine the block-size type of `support(f)`.
#[derive(Clone, Debug)]
pub struct AnnihilationReport {
    /// Number of (face, μ) pairs the rule constrains.
    pub pairs_checked: usize,
    /// Pairs whose product failed to vanish; empty for a valid family.
    pub violations: Vec<(Face, Partition)>,
}

impl IdempotentFamily {
    /// Builds the family for degree `n`, verifying every axiom for
    /// `n ≤ 5`; degree 6 builds unverified (see [`Self::build_with`]).
    pub fn build(n: u32) -> Result<IdempotentFamily> {
        Self::build_with(n, n <= MAX_VERIFIED_DEGREE)
    }

    /// Builds the family, optionally running the full verification
    /// sweep.  At degree 6 verification is a multi-minute computation.
    ///
    /// Panics if `n` is outside `1..=6`.
    pub fn build_with(n: u32, verify: bool) -> Result<IdempotentFamily> {
        assert!(
            (1..=MAX_DEGREE).contains(&n),
            "degree {n} outside supported range 1..={MAX_DEGREE}"
        );
        let mut fibers: BTreeMap<SetPartition, Vec<Face>> = BTreeMap::new();
        for f in enumerate_faces(n) {
            fibers.entry(f.support()).or_default().push(f);
        }
        let mut by_support: BTreeMap<SetPartition, FaceAlgebraElement> = BTreeMap::new();
        for level in (1..=n as usize).rev() {
            let supports: Vec<&SetPartition> =
                fibers.keys().filter(|x| x.num_blocks() == level).collect();
            let built = par::map_slice(&supports, |&x| {
                let u = fiber_average(n, &fibers[x]);
                let mut finer = FaceAlgebraElement::zero(n);
                for (y, e) in &by_support {
                    if y.leq(x) {
                        finer = finer.add(e);
                    }
                }
                u.sub(&u.multiply(&finer))
            });
            for (x, e) in supports.into_iter().zip(built) {
                by_support.insert(x.clone(), e);
            }
        }
        let mut by_orbit: BTreeMap<Partition, FaceAlgebraElement> = BTreeMap::new();
        for (x, e) in &by_support {
            by_orbit
                .entry(x.block_size_type())
                .or_insert_with(|| FaceAlgebraElement::zero(n))
                .add_scaled(e, &BigRational::one());
        }
        let family = IdempotentFamily { n, by_support, by_orbit };
        if verify {
            family.verify()?;
        }
        Ok(family)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The idempotent `E_X`.
    pub fn support_idempotent(&self, x: &SetPartition) -> &FaceAlgebraElement {
        self.by_support
            .get(x)
            .unwrap_or_else(|| panic!("no idempotent for {x} in a degree-{} family", self.n))
    }

    /// The orbit sum `E_λ` over all set partitions of block-size type λ.
    pub fn orbit_idempotent(&self, lambda: &Partition) -> &FaceAlgebraElement {
        self.by_orbit
            .get(lambda)
            .unwrap_or_else(|| panic!("no orbit idempotent for {lambda} in a degree-{} family", self.n))
    }

    pub fn by_support(&self) -> &BTreeMap<SetPartition, FaceAlgebraElement> {
        &self.by_support
    }

    pub fn by_orbit(&self) -> &BTreeMap<Partition, FaceAlgebraElement> {
        &self.by_orbit
    }

    /// Exhaustively re-checks every defining property of the family,
    /// returning the first violation as a [`Error::Verification`].
    pub fn verify(&self) -> Result<()> {
        self.check_support_restriction()?;
        self.check_fiber_normalization()?;
        self.check_completeness()?;
        self.check_orbit_sums()?;
        self.check_idempotency()?;
        self.check_left_annihilation()?;
        self.check_orthogonality()?;
        self.check_triangularity()?;
        self.check_equivariance()?;
        let report = self.annihilation_report();
        if let Some((f, mu)) = report.violations.first() {
            return Err(Error::Verification(format!(
                "face {f} is not annihilated by the orbit idempotent for {mu} \
                 although {mu} does not refine its support type"
            )));
        }
        Ok(())
    }

    /// `f · E_μ` must vanish whenever μ does not refine the block-size
    /// type of `support(f)`; sweeps all faces against all orbit sums.
    pub fn annihilation_report(&self) -> AnnihilationReport {
        let faces = enumerate_faces(self.n);
        let per_face = par::map_slice(&faces, |f| {
            let ty = f.support().block_size_type();
            let mut checked = 0;
            let mut violations = Vec::new();
            for (mu, e) in &self.by_orbit {
                if mu.refines(&ty) {
                    continue;
                }
                checked += 1;
                if !e.multiply_face_left(f).is_zero() {
                    violations.push((f.clone(), mu.clone()));
                }
            }
            (checked, violations)
        });
        let mut report = AnnihilationReport { pairs_checked: 0, violations: Vec::new() };
        for (checked, violations) in per_face {
            report.pairs_checked += checked;
            report.violations.extend(violations);
        }
        report
    }

    fn check_completeness(&self) -> Result<()> {
        let mut total = FaceAlgebraElement::zero(self.n);
        for e in self.by_support.values() {
            total = total.add(e);
        }
        if total != FaceAlgebraElement::one(self.n) {
            return Err(Error::Verification(
                "the support idempotents do not sum to the identity face".into(),
            ));
        }
        Ok(())
    }

    fn check_orbit_sums(&self) -> Result<()> {
        let mut sums: BTreeMap<Partition, FaceAlgebraElement> = BTreeMap::new();
        for (x, e) in &self.by_support {
            sums.entry(x.block_size_type())
                .or_insert_with(|| FaceAlgebraElement::zero(self.n))
                .add_scaled(e, &BigRational::one());
        }
        if sums != self.by_orbit {
            return Err(Error::Verification(
                "orbit idempotents disagree with the sums of their support fibers".into(),
            ));
        }
        Ok(())
    }

    fn check_support_restriction(&self) -> Result<()> {
        for (x, e) in &self.by_support {
            for (f, _) in e.terms() {
                if !f.support().leq(x) {
                    return Err(Error::Verification(format!(
                        "idempotent for {x} has a term {f} supported outside its lower interval"
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_fiber_normalization(&self) -> Result<()> {
        for (x, e) in &self.by_support {
            if e.support_fiber_sum(x) != BigRational::one() {
                return Err(Error::Verification(format!(
                    "idempotent for {x} has support-fiber coefficient sum ≠ 1"
                )));
            }
        }
        Ok(())
    }

    fn check_idempotency(&self) -> Result<()> {
        let entries: Vec<(&SetPartition, &FaceAlgebraElement)> = self.by_support.iter().collect();
        let failures = par::map_slice(&entries, |&(x, e)| {
            if e.multiply(e) == *e {
                None
            } else {
                Some(format!("idempotent for {x} does not square to itself"))
            }
        });
        first_failure(failures)
    }

    fn check_orthogonality(&self) -> Result<()> {
        // A zero product E_X · E_Y is forced termwise by left
        // annihilation unless Y is strictly finer than X, so degree 6
        // restricts the direct products to those pairs; smaller degrees
        // multiply out every ordered pair.
        let mut pairs: Vec<(&SetPartition, &SetPartition)> = Vec::new();
        for x in self.by_support.keys() {
            for y in self.by_support.keys() {
                let comparable = y.leq(x) && y != x;
                if (self.n <= MAX_VERIFIED_DEGREE && y != x) || comparable {
                    pairs.push((x, y));
                }
            }
        }
        let failures = par::map_slice(&pairs, |&(x, y)| {
            let product = self.by_support[x].multiply(&self.by_support[y]);
            if product.is_zero() {
                None
            } else {
                Some(format!("idempotents for {x} and {y} have a nonzero product"))
            }
        });
        first_failure(failures)
    }

    fn check_left_annihilation(&self) -> Result<()> {
        let faces = enumerate_faces(self.n);
        let failures = par::map_slice(&faces, |f| {
            let support = f.support();
            for (x, e) in &self.by_support {
                if !x.leq(&support) && !e.multiply_face_left(f).is_zero() {
                    return Some(format!(
                        "face {f} times the idempotent for {x} is nonzero although {x} \
                         does not refine its support"
                    ));
                }
            }
            None
        });
        first_failure(failures)
    }

    fn check_triangularity(&self) -> Result<()> {
        let faces = enumerate_faces(self.n);
        let failures = par::map_slice(&faces, |f| {
            let x = f.support();
            let mut remainder = self.by_support[&x].multiply_face_left(f);
            remainder.add_face(f, &-BigRational::one());
            for (g, _) in remainder.terms() {
                let s = g.support();
                if !(s.leq(&x) && s != x) {
                    return Some(format!(
                        "face {f} times its support idempotent is not {f} plus \
                         strictly-finer-support terms"
                    ));
                }
            }
            None
        });
        first_failure(failures)
    }

    fn check_equivariance(&self) -> Result<()> {
        // The action is multiplicative in the permutation, so adjacent
        // transpositions generate the full check; smaller degrees sweep
        // every permutation anyway.
        let perms: Vec<Permutation> = if self.n <= MAX_VERIFIED_DEGREE {
            Permutation::all(self.n)
        } else {
            (1..self.n)
                .map(|i| {
                    let mut images: Vec<u32> = (1..=self.n).collect();
                    images.swap(i as usize - 1, i as usize);
                    Permutation::new(images)
                })
                .collect()
        };
        let failures = par::map_slice(&perms, |pi| {
            for (x, e) in &self.by_support {
                if e.act(pi) != self.by_support[&x.act(pi)] {
                    return Some(format!(
                        "permuting the idempotent for {x} does not give the idempotent \
                         of the permuted set partition"
                    ));
                }
            }
            None
        });
        first_failure(failures)
    }
}

fn first_failure(failures: Vec<Option<String>>) -> Result<()> {
    match failures.into_iter().flatten().next() {
        Some(msg) => Err(Error::Verification(msg)),
        None => Ok(()),
    }
}

/// Uniform average of the faces in one support fiber; coefficient sum 1.
fn fiber_average(n: u32, fiber: &[Face]) -> FaceAlgebraElement {
    let weight = BigRational::new(BigInt::one(), BigInt::from(fiber.len() as u64));
    let mut u = FaceAlgebraElement::zero(n);
    for f in fiber {
        u.add_face(f, &weight);
    }
    u
}
