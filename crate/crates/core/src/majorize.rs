//! Majorization of exponent vectors and monomials under a variable ordering.
//!
//! `α ⪰ β` when `|α| = |β|` and every proper prefix sum of `α` dominates the
//! matching prefix sum of `β`. Under an ordering `x_σ(1) ≥ ... ≥ x_σ(n)` both
//! vectors are first read in the order `σ(1), ..., σ(n)`.
//!
//! The module also carries the termination obstruction for successive
//! difference substitution: if some negative term of `f` is not majorized by
//! any positive term under some ordering, then along the branch
//! `B_σ, K, K, ...` the coefficient of that term (read in σ order) never
//! changes sign, so no depth makes every image trivially positive.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::form::{ExponentVector, Form, Point};
use crate::rational::{self, Rational};
use crate::subst::{
    self, apply_substitution, build_b, build_k, mat_pow, Matrix, Permutation, SubstError,
    SubstitutionTemplate,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MajorizeError {
    #[error("exponent vectors have lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("exponent vectors have degrees {left} and {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("{0} majorizes {1} under the ordering; no separating point exists")]
    NoSeparatingPoint(ExponentVector, ExponentVector),
    #[error("matrix must be upper triangular with positive entries on and above the diagonal")]
    NotPositiveUpperTriangular,
    #[error("{0} is not a term of the form")]
    NotATerm(ExponentVector),
    #[error("branch length must be at least 1")]
    ZeroLength,
    #[error(transparent)]
    Subst(#[from] SubstError),
}

fn check_compatible(alpha: &ExponentVector, beta: &ExponentVector) -> Result<(), MajorizeError> {
    if alpha.len() != beta.len() {
        return Err(MajorizeError::LengthMismatch {
            left: alpha.len(),
            right: beta.len(),
        });
    }
    if alpha.degree() != beta.degree() {
        return Err(MajorizeError::DegreeMismatch {
            left: alpha.degree(),
            right: beta.degree(),
        });
    }
    Ok(())
}

/// 1-based index of the first prefix `k < n` where `Σα < Σβ`, if any.
fn first_failing_prefix(alpha: &[u32], beta: &[u32]) -> Option<usize> {
    let (mut sa, mut sb) = (0u64, 0u64);
    let n = alpha.len();
    for k in 0..n.saturating_sub(1) {
        sa += alpha[k] as u64;
        sb += beta[k] as u64;
        if sa < sb {
            return Some(k + 1);
        }
    }
    None
}

pub fn majorizes(alpha: &ExponentVector, beta: &ExponentVector) -> Result<bool, MajorizeError> {
    check_compatible(alpha, beta)?;
    Ok(first_failing_prefix(alpha.entries(), beta.entries()).is_none())
}

/// `(X^α)_σ ⪰ (X^β)_σ`: majorization after reading both vectors in σ order.
pub fn majorizes_under(
    alpha: &ExponentVector,
    beta: &ExponentVector,
    sigma: &Permutation,
) -> Result<bool, MajorizeError> {
    check_compatible(alpha, beta)?;
    check_perm(alpha.len(), sigma)?;
    Ok(first_failing_prefix(
        &sigma.reorder(alpha.entries()),
        &sigma.reorder(beta.entries()),
    )
    .is_none())
}

fn check_perm(n: usize, sigma: &Permutation) -> Result<(), MajorizeError> {
    if sigma.n() != n {
        return Err(SubstError::DimensionMismatch {
            expected: n,
            found: sigma.n(),
        }
        .into());
    }
    Ok(())
}

/// A point in the cone `x_σ(1) ≥ ... ≥ x_σ(n) ≥ 0` where `X^β > X^α`.
///
/// With `k` the first failing prefix, coordinates `σ(1..=k)` are 2 and the
/// rest 1, so the two monomials evaluate to 2 raised to their `k`-th prefix
/// sums.
pub fn separating_point(
    alpha: &ExponentVector,
    beta: &ExponentVector,
    sigma: &Permutation,
) -> Result<Point, MajorizeError> {
    check_compatible(alpha, beta)?;
    check_perm(alpha.len(), sigma)?;
    let k = first_failing_prefix(
        &sigma.reorder(alpha.entries()),
        &sigma.reorder(beta.entries()),
    )
    .ok_or_else(|| MajorizeError::NoSeparatingPoint(alpha.clone(), beta.clone()))?;
    let mut coords = vec![1u64; alpha.len()];
    for i in 1..=k {
        coords[sigma.image(i) - 1] = 2;
    }
    Ok(Point::from_integers(&coords))
}

/// Support of the expansion of the single monomial `X^α` under `X → M·X`,
/// obtained by literally expanding it.
pub fn expansion_support(
    alpha: &ExponentVector,
    m: &Matrix,
) -> Result<BTreeSet<ExponentVector>, MajorizeError> {
    let n = m.n();
    if alpha.len() != n {
        return Err(SubstError::DimensionMismatch {
            expected: n,
            found: alpha.len(),
        }
        .into());
    }
    let qualifies = (0..n).all(|i| {
        (0..n).all(|j| {
            let v = m.get(i, j);
            if j < i {
                v.is_zero()
            } else {
                v.is_positive()
            }
        })
    });
    if !qualifies {
        return Err(MajorizeError::NotPositiveUpperTriangular);
    }
    let mono = Form::monomial(alpha.clone(), rational::one());
    let expanded = apply_substitution(&mono, m)?;
    Ok(expanded.terms().map(|(e, _)| e.clone()).collect())
}

/// A negative term together with an ordering under which no positive term
/// majorizes it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub term: ExponentVector,
    pub ordering: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorizationReport {
    pub holds: bool,
    /// Sorted by term (graded lex), then ordering (lex).
    pub violations: Vec<Violation>,
    pub checked_orderings: usize,
}

/// Checks that every negative term is majorized by some positive term under
/// every ordering of the variables. Every failing `(term, ordering)` pair is
/// reported.
pub fn necessary_condition(f: &Form) -> Result<MajorizationReport, MajorizeError> {
    necessary_condition_with_limit(f, subst::DEFAULT_MAX_VARS)
}

pub fn necessary_condition_with_limit(
    f: &Form,
    max_vars: usize,
) -> Result<MajorizationReport, MajorizeError> {
    subst::check_guard(f.n(), max_vars)?;
    let positive: Vec<&ExponentVector> = f.positive_terms().collect();
    let negative: Vec<&ExponentVector> = f.negative_terms().collect();
    let sigmas: Vec<Permutation> = Permutation::all(f.n()).collect();
    let checked_orderings = sigmas.len();

    let mut violations: Vec<Violation> = sigmas
        .par_iter()
        .flat_map_iter(|sigma| {
            let pos: Vec<Vec<u32>> = positive
                .iter()
                .map(|p| sigma.reorder(p.entries()))
                .collect();
            negative
                .iter()
                .filter(move |lambda| {
                    let target = sigma.reorder(lambda.entries());
                    !pos.iter()
                        .any(|p| first_failing_prefix(p, &target).is_none())
                })
                .map(move |lambda| Violation {
                    term: (*lambda).clone(),
                    ordering: sigma.clone(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    violations.sort();
    Ok(MajorizationReport {
        holds: violations.is_empty(),
        violations,
        checked_orderings,
    })
}

/// True when no other term of `f` majorizes `λ` under σ.
pub fn is_unmajorized(
    f: &Form,
    lambda: &ExponentVector,
    sigma: &Permutation,
) -> Result<bool, MajorizeError> {
    for (e, _) in f.terms() {
        if e != lambda && majorizes_under(e, lambda, sigma)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The monomial `X^λ` as it appears after substituting `B_σ`: the exponent of
/// the new `j`-th variable is `λ_σ(j)`.
pub fn persistent_monomial(lambda: &ExponentVector, sigma: &Permutation) -> ExponentVector {
    ExponentVector::new(sigma.reorder(lambda.entries()))
}

/// Coefficient of the persistent monomial of `λ` in `f(B_σ K^(m-1) X)`,
/// computed by full expansion.
pub fn persistent_coefficient(
    f: &Form,
    sigma: &Permutation,
    t: &SubstitutionTemplate,
    m: u32,
    lambda: &ExponentVector,
) -> Result<Rational, MajorizeError> {
    if m == 0 {
        return Err(MajorizeError::ZeroLength);
    }
    if f.coefficient(lambda).is_none() {
        return Err(MajorizeError::NotATerm(lambda.clone()));
    }
    let branch = build_b(sigma, t)?.mul(&mat_pow(&build_k(t), m - 1));
    let expanded = apply_substitution(f, &branch)?;
    Ok(expanded
        .coefficient(&persistent_monomial(lambda, sigma))
        .cloned()
        .unwrap_or_else(Rational::zero))
}

/// Closed form `C_λ · (Π_j q_j^{λ_σ(j)})^m` for an unmajorized term.
pub fn predicted_persistent_coefficient(
    f: &Form,
    sigma: &Permutation,
    t: &SubstitutionTemplate,
    m: u32,
    lambda: &ExponentVector,
) -> Result<Rational, MajorizeError> {
    let c = f
        .coefficient(lambda)
        .ok_or_else(|| MajorizeError::NotATerm(lambda.clone()))?;
    let weight = persistent_monomial(lambda, sigma)
        .entries()
        .iter()
        .zip(t.weights())
        .fold(rational::one(), |acc, (e, q)| acc * rational::pow(q, *e));
    Ok(c * rational::pow(&weight, m))
}
