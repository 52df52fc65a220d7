//! Exact successive difference substitution (SDS) for homogeneous
//! polynomials on the nonnegative orthant.
//!
//! * [`form`]: sparse forms over `ℚ`, parsing, evaluation, trivial tests.
//! * [`subst`]: the substitution matrices `K`, `P_σ`, `B_σ = P_σ K` and
//!   expansion of `f(M·X)`.
//! * [`majorize`]: majorization of monomials under a variable ordering and
//!   the obstruction it gives to a positive answer.
//! * [`search`]: the level-by-level substitution search with exact
//!   witnesses.
//! * [`cli`] / [`report`]: the `ksds` command line and its JSON schema.
//!
//! ```
//! use ksds::{parse_form, ksds_run, SearchOptions, SubstitutionTemplate, VerdictKind};
//!
//! let f = parse_form("x1^2 - 2*x1*x2 + x2^2", None).unwrap();
//! let verdict = ksds_run(&f, &SubstitutionTemplate::an(2), &SearchOptions::default()).unwrap();
//! assert_eq!(verdict.kind, VerdictKind::Psd);
//! ```

pub mod cli;
pub mod form;
pub mod majorize;
pub mod rational;
pub mod report;
pub mod search;
pub mod subst;

pub use form::{parse_form, ExponentVector, Form, FormError, Point};
pub use majorize::{
    expansion_support, majorizes, majorizes_under, necessary_condition, persistent_coefficient,
    separating_point, MajorizationReport, MajorizeError, Violation,
};
pub use rational::Rational;
pub use search::{
    expand_frontier, ksds_run, witness_point, SearchError, SearchNode, SearchOptions, SearchStats,
    Verdict, VerdictKind, Witness,
};
pub use subst::{
    apply_substitution, build_b, build_k, mat_pow, perm_matrix, preimage_nonneg, sds_set, Matrix,
    Permutation, SubstError, SubstitutionTemplate,
};
