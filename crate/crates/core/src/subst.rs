//! Substitution matrices and linear changes of variables.
//!
//! `K` is the upper triangular matrix whose column `j` holds `q_j` on rows
//! `1..=j`. `B_σ = P_σ K` permutes its rows so that the image of the
//! nonnegative orthant under `B_σ` is exactly the cone
//! `x_σ(1) ≥ x_σ(2) ≥ ... ≥ x_σ(n) ≥ 0` (when `q` is all ones), i.e. row
//! `σ(i)` of `B_σ` is row `i` of `K`.

use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::form::{ExponentVector, Form, FormError, Point};
use crate::rational::{self, Rational};

/// Largest variable count for which the `n!` permutations are enumerated.
pub const DEFAULT_MAX_VARS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("substitution weights must be positive (entry {index} is {value})")]
    NonPositiveWeight { index: usize, value: String },
    #[error("substitution template is empty")]
    EmptyTemplate,
    #[error("`{0:?}` is not a permutation of 1..=n")]
    InvalidPermutation(Vec<usize>),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{n} variables exceed the permutation guard of {limit} ({n}! branches)")]
    TooManyVariables { n: usize, limit: usize },
    #[error(transparent)]
    Form(#[from] FormError),
}

/// The positive weights `(q_1, ..., q_n)` defining `K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubstitutionTemplate {
    q: Vec<Rational>,
}

impl SubstitutionTemplate {
    pub fn new(q: Vec<Rational>) -> Result<Self, SubstError> {
        if q.is_empty() {
            return Err(SubstError::EmptyTemplate);
        }
        if let Some((index, value)) = q.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(SubstError::NonPositiveWeight {
                index,
                value: value.to_string(),
            });
        }
        Ok(SubstitutionTemplate { q })
    }

    /// `q = (1, ..., 1)`, giving `A_n`.
    pub fn an(n: usize) -> Self {
        SubstitutionTemplate {
            q: vec![Rational::one(); n],
        }
    }

    /// `q = (1, 1/2, ..., 1/n)`, giving `G_n`.
    pub fn gn(n: usize) -> Self {
        SubstitutionTemplate {
            q: (1..=n as i64).map(|j| rational::ratio(1, j)).collect(),
        }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.q.len()
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, SubstError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(SubstError::InvalidPermutation(images));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images })
    }

    /// The permutation listing indices so that `values` is read in
    /// descending order (ties keep index order).
    pub fn sorting_descending<T: Ord>(values: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..values.len()).collect();
        idx.sort_by(|&a, &b| values[b].cmp(&values[a]));
        Permutation {
            images: idx.into_iter().map(|i| i + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &s)| s == i + 1)
    }

    /// `(v_σ(1), ..., v_σ(n))`.
    pub fn reorder<T: Clone>(&self, values: &[T]) -> Vec<T> {
        self.images.iter().map(|&s| values[s - 1].clone()).collect()
    }

    /// The ordering `x_σ(1) ≥ ... ≥ x_σ(n)` as text.
    pub fn ordering_string(&self) -> String {
        self.images.iter().map(|s| format!("x{s}")).join(" ≥ ")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

/// Square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, SubstError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(SubstError::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integer_rows(rows: &[&[i64]]) -> Result<Self, SubstError> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| rational::int(*v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.entries.chunks(self.n.max(1))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.n, v.len(), "vector length differs from matrix size");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.iter().join(", "))?;
        }
        Ok(())
    }
}

pub fn build_k(t: &SubstitutionTemplate) -> Matrix {
    let n = t.n();
    let mut m = Matrix::zeros(n);
    for j in 0..n {
        for i in 0..=j {
            m.set(i, j, t.q[j].clone());
        }
    }
    m
}

/// `P_σ` with `P_σ[σ(j)][j] = 1`, so `(P_σ v)_σ(j) = v_j`.
pub fn perm_matrix(sigma: &Permutation) -> Matrix {
    let n = sigma.n();
    let mut m = Matrix::zeros(n);
    for j in 1..=n {
        m.set(sigma.image(j) - 1, j - 1, Rational::one());
    }
    m
}

/// `B_σ = P_σ K`: row `σ(i)` of the result is row `i` of `K`.
pub fn build_b(sigma: &Permutation, t: &SubstitutionTemplate) -> Result<Matrix, SubstError> {
    if sigma.n() != t.n() {
        return Err(SubstError::DimensionMismatch {
            expected: t.n(),
            found: sigma.n(),
        });
    }
    Ok(perm_matrix(sigma).mul(&build_k(t)))
}

pub fn mat_pow(m: &Matrix, exp: u32) -> Matrix {
    let mut result = Matrix::identity(m.n());
    let mut base = m.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// Expands `f(M·X)`: each `x_i` becomes `Σ_j M[i][j] x_j`.
pub fn apply_substitution(f: &Form, m: &Matrix) -> Result<Form, SubstError> {
    if f.n() != m.n() {
        return Err(SubstError::DimensionMismatch {
            expected: f.n(),
            found: m.n(),
        });
    }
    let n = f.n();
    if f.is_zero() {
        return Ok(Form::zero(n, f.degree()));
    }
    let linear: Vec<Form> = m.rows().map(Form::linear).collect();
    let mut max_power = vec![0u32; n];
    for (e, _) in f.terms() {
        for (slot, &k) in max_power.iter_mut().zip(e.entries()) {
            *slot = (*slot).max(k);
        }
    }
    // powers[i][k] = (row i)^k
    let powers: Vec<Vec<Form>> = linear
        .iter()
        .zip(&max_power)
        .map(|(l, &top)| {
            let mut table = Vec::with_capacity(top as usize + 1);
            table.push(Form::one(n));
            for k in 1..=top as usize {
                let next = table[k - 1].mul(l);
                table.push(next);
            }
            table
        })
        .collect();

    let mut acc = Form::zero(n, f.degree());
    for (e, c) in f.terms() {
        let mut product = Form::monomial(ExponentVector::zeros(n), c.clone());
        for (i, &k) in e.entries().iter().enumerate() {
            if k > 0 {
                product = product.mul(&powers[i][k as usize]);
            }
        }
        acc = acc.add(&product);
    }
    if acc.is_zero() {
        return Ok(Form::zero(n, f.degree()));
    }
    Ok(acc)
}

pub fn check_guard(n: usize, max_vars: usize) -> Result<(), SubstError> {
    if n > max_vars {
        return Err(SubstError::TooManyVariables { n, limit: max_vars });
    }
    Ok(())
}

/// All `n!` images `f(B_σ X)`, σ in lexicographic order, duplicates kept.
pub fn sds_set(f: &Form, t: &SubstitutionTemplate) -> Result<Vec<(Permutation, Form)>, SubstError> {
    sds_set_with_limit(f, t, DEFAULT_MAX_VARS)
}

pub fn sds_set_with_limit(
    f: &Form,
    t: &SubstitutionTemplate,
    max_vars: usize,
) -> Result<Vec<(Permutation, Form)>, SubstError> {
    if f.n() != t.n() {
        return Err(SubstError::DimensionMismatch {
            expected: f.n(),
            found: t.n(),
        });
    }
    check_guard(f.n(), max_vars)?;
    let sigmas: Vec<Permutation> = Permutation::all(f.n()).collect();
    sigmas
        .into_par_iter()
        .map(|sigma| {
            let b = build_b(&sigma, t)?;
            let image = apply_substitution(f, &b)?;
            Ok((sigma, image))
        })
        .collect()
}

/// Solves `B_σ y = p`; returns `y` when it lies in the nonnegative orthant.
pub fn preimage_nonneg(
    p: &Point,
    sigma: &Permutation,
    t: &SubstitutionTemplate,
) -> Result<Option<Point>, SubstError> {
    let n = t.n();
    if p.len() != n || sigma.n() != n {
        return Err(SubstError::DimensionMismatch {
            expected: n,
            found: if p.len() != n { p.len() } else { sigma.n() },
        });
    }
    // K y = w with w_i = p_σ(i); K's structure gives q_i y_i = w_i - w_{i+1}.
    let w = sigma.reorder(p.coords());
    let y: Vec<Rational> = (0..n)
        .map(|i| {
            let next = if i + 1 < n {
                w[i + 1].clone()
            } else {
                Rational::zero()
            };
            (&w[i] - next) / &t.q[i]
        })
        .collect();
    if y.iter().any(|v| v.is_negative()) {
        return Ok(None);
    }
    Ok(Some(Point::new(y)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::parse_form;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn rows(m: &Matrix) -> Vec<Vec<Rational>> {
        m.rows().map(|r| r.to_vec()).collect()
    }

    fn q(v: &[(i64, i64)]) -> SubstitutionTemplate {
        SubstitutionTemplate::new(v.iter().map(|(a, b)| ratio(*a, *b)).collect()).unwrap()
    }

    #[test]
    fn k_presets() {
        let a3 = build_k(&SubstitutionTemplate::an(3));
        assert_eq!(
            a3,
            Matrix::from_integer_rows(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap()
        );
        let g3 = build_k(&SubstitutionTemplate::gn(3));
        let (h, t) = (ratio(1, 2), ratio(1, 3));
        assert_eq!(
            rows(&g3),
            vec![
                vec![int(1), h.clone(), t.clone()],
                vec![int(0), h, t.clone()],
                vec![int(0), int(0), t],
            ]
        );
        assert_eq!(rows(&build_k(&q(&[(5, 1)]))), vec![vec![int(5)]]);
    }

    #[test]
    fn template_rejects_nonpositive() {
        assert!(SubstitutionTemplate::new(vec![int(1), int(0)]).is_err());
        assert!(SubstitutionTemplate::new(vec![int(-1)]).is_err());
        assert!(SubstitutionTemplate::new(vec![]).is_err());
    }

    #[test]
    fn permutation_validation_and_order() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        let all: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        let s = perm(&[2, 3, 1]);
        assert_eq!(s.inverse(), perm(&[3, 1, 2]));
        assert_eq!(s.reorder(&['a', 'b', 'c']), vec!['b', 'c', 'a']);
        assert_eq!(perm(&[1, 3, 2]).ordering_string(), "x1 ≥ x3 ≥ x2");
    }

    #[test]
    fn permutation_matrices() {
        assert_eq!(
            perm_matrix(&perm(&[1, 3, 2])),
            Matrix::from_integer_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]).unwrap()
        );
        assert_eq!(perm_matrix(&Permutation::identity(4)), Matrix::identity(4));
        assert_eq!(
            perm_matrix(&perm(&[2, 1])),
            Matrix::from_integer_rows(&[&[0, 1], &[1, 0]]).unwrap()
        );
    }

    #[test]
    fn b_matrices() {
        let b = build_b(&perm(&[1, 3, 2]), &q(&[(2, 1), (3, 1), (5, 1)])).unwrap();
        assert_eq!(
            b,
            Matrix::from_integer_rows(&[&[2, 3, 5], &[0, 0, 5], &[0, 3, 5]]).unwrap()
        );
        let t = q(&[(1, 1), (7, 3), (2, 5)]);
        assert_eq!(build_b(&Permutation::identity(3), &t).unwrap(), build_k(&t));
        assert_eq!(
            build_b(&perm(&[2, 1]), &SubstitutionTemplate::an(2)).unwrap(),
            Matrix::from_integer_rows(&[&[0, 1], &[1, 1]]).unwrap()
        );
    }

    #[test]
    fn b_rows_follow_sigma() {
        // σ = (2,3,1): row σ(i) of B is row i of K
        let t = q(&[(2, 1), (3, 1), (5, 1)]);
        let k = build_k(&t);
        let b = build_b(&perm(&[2, 3, 1]), &t).unwrap();
        assert_eq!(b.row(1), k.row(0));
        assert_eq!(b.row(2), k.row(1));
        assert_eq!(b.row(0), k.row(2));
    }

    #[test]
    fn matrix_powers() {
        let a2 = build_k(&SubstitutionTemplate::an(2));
        assert_eq!(
            mat_pow(&a2, 2),
            Matrix::from_integer_rows(&[&[1, 2], &[0, 1]]).unwrap()
        );
        assert_eq!(mat_pow(&a2, 0), Matrix::identity(2));
        let p = perm_matrix(&perm(&[1, 3, 2]));
        let a3 = build_k(&SubstitutionTemplate::an(3));
        // A_3^m = I + mN + C(m,2)N^2, so the corner entry is m(m+1)/2
        for m in 1..=6i64 {
            let expected =
                Matrix::from_integer_rows(&[&[1, m, m * (m + 1) / 2], &[0, 0, 1], &[0, 1, m]])
                    .unwrap();
            assert_eq!(p.mul(&mat_pow(&a3, m as u32)), expected, "m = {m}");
        }
    }

    #[test]
    fn substitution_examples() {
        let square = parse_form("x1^2 - 2*x1*x2 + x2^2", None).unwrap();
        let a2 = build_k(&SubstitutionTemplate::an(2));
        assert_eq!(
            apply_substitution(&square, &a2).unwrap(),
            parse_form("x1^2", Some(2)).unwrap()
        );
        let x1 = parse_form("x1", Some(2)).unwrap();
        let k = build_k(&q(&[(3, 1), (7, 1)]));
        assert_eq!(
            apply_substitution(&x1, &k).unwrap(),
            parse_form("3*x1 + 7*x2", None).unwrap()
        );
        let top = parse_form("x3^4", None).unwrap();
        let k3 = build_k(&q(&[(2, 1), (3, 1), (5, 2)]));
        assert_eq!(
            apply_substitution(&top, &k3).unwrap(),
            parse_form("625/16*x3^4", None).unwrap()
        );
        assert!(matches!(
            apply_substitution(&top, &a2),
            Err(SubstError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn sds_set_examples() {
        let square = parse_form("x1^2 - 2*x1*x2 + x2^2", None).unwrap();
        let images = sds_set(&square, &SubstitutionTemplate::an(2)).unwrap();
        let t1sq = parse_form("x1^2", Some(2)).unwrap();
        assert_eq!(
            images,
            vec![
                (Permutation::identity(2), t1sq.clone()),
                (perm(&[2, 1]), t1sq)
            ]
        );

        let pos = parse_form("x1^2 + 3*x1*x2 + x2*x3", None).unwrap();
        let images = sds_set(&pos, &SubstitutionTemplate::gn(3)).unwrap();
        assert_eq!(images.len(), 6);
        assert!(images.iter().all(|(_, g)| g.is_trivially_positive()));

        let single = parse_form("2*x1^3", None).unwrap();
        let images = sds_set(&single, &q(&[(3, 1)])).unwrap();
        assert_eq!(
            images,
            vec![(
                Permutation::identity(1),
                parse_form("54*x1^3", None).unwrap()
            )]
        );
    }

    #[test]
    fn sds_set_guard() {
        let f = parse_form("x9", None).unwrap();
        assert!(matches!(
            sds_set(&f, &SubstitutionTemplate::an(9)),
            Err(SubstError::TooManyVariables { n: 9, limit: 8 })
        ));
    }

    #[test]
    fn preimages() {
        let an3 = SubstitutionTemplate::an(3);
        let an2 = SubstitutionTemplate::an(2);
        let y =
            preimage_nonneg(&Point::from_integers(&[3, 1, 2]), &perm(&[1, 3, 2]), &an3).unwrap();
        assert_eq!(y, Some(Point::ones(3)));
        let id2 = Permutation::identity(2);
        assert_eq!(
            preimage_nonneg(&Point::from_integers(&[1, 2]), &id2, &an2).unwrap(),
            None
        );
        assert_eq!(
            preimage_nonneg(&Point::from_integers(&[2, 1]), &id2, &an2).unwrap(),
            Some(Point::ones(2))
        );
    }

    #[test]
    fn sorting_permutation() {
        assert_eq!(
            Permutation::sorting_descending(&[1, 5, 3]),
            perm(&[2, 3, 1])
        );
        assert_eq!(Permutation::sorting_descending(&[2, 2]), perm(&[1, 2]));
    }

    fn arb_template(n: usize) -> impl Strategy<Value = SubstitutionTemplate> {
        proptest::collection::vec((1i64..=9, 1i64..=5), n).prop_map(|v| {
            SubstitutionTemplate::new(v.into_iter().map(|(a, b)| ratio(a, b)).collect()).unwrap()
        })
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            Matrix::from_rows(
                v.chunks(n)
                    .map(|r| r.iter().map(|x| int(*x)).collect())
                    .collect(),
            )
            .unwrap()
        })
    }

    fn arb_form(n: usize) -> impl Strategy<Value = Form> {
        let term = (proptest::collection::vec(0u32..=2, n), -5i64..=5);
        proptest::collection::vec(term, 1..5).prop_map(move |raw| {
            // pad every term to degree 2n with the last variable
            let d = 2 * n as u32;
            let terms = raw.into_iter().map(|(mut e, c)| {
                let s: u32 = e.iter().sum();
                e[n - 1] += d - s;
                (ExponentVector::new(e), int(c))
            });
            Form::from_terms(n, terms).unwrap()
        })
    }

    fn arb_setup() -> impl Strategy<Value = (Form, Matrix, Matrix, Vec<Rational>)> {
        (1usize..=3).prop_flat_map(|n| {
            (
                arb_form(n),
                arb_matrix(n),
                arb_matrix(n),
                proptest::collection::vec((-6i64..=6, 1i64..=4), n)
                    .prop_map(|v| v.into_iter().map(|(a, b)| ratio(a, b)).collect()),
            )
        })
    }

    proptest! {
        #[test]
        fn identity_b_is_k(t in (1usize..=5).prop_flat_map(arb_template)) {
            prop_assert_eq!(build_b(&Permutation::identity(t.n()), &t).unwrap(), build_k(&t));
        }

        #[test]
        fn evaluation_commutes_with_substitution((f, m, _, p) in arb_setup()) {
            let g = apply_substitution(&f, &m).unwrap();
            prop_assert!(g.is_zero() || g.degree() == f.degree());
            prop_assert!(g.terms().all(|(e, _)| e.degree() == f.degree()));
            prop_assert_eq!(g.evaluate_at(&p).unwrap(), f.evaluate_at(&m.mul_vec(&p)).unwrap());
        }

        #[test]
        fn substitution_composes((f, m1, m2, _) in arb_setup()) {
            // f((M1 M2) X) == g(M2 X) with g(Y) = f(M1 Y)
            let direct = apply_substitution(&f, &m1.mul(&m2)).unwrap();
            let staged = apply_substitution(&apply_substitution(&f, &m1).unwrap(), &m2).unwrap();
            prop_assert_eq!(direct, staged);
        }

        #[test]
        fn powers_add((m, a, b) in (1usize..=3).prop_flat_map(|n| (arb_matrix(n), 0u32..5, 0u32..5))) {
            prop_assert_eq!(mat_pow(&m, a + b), mat_pow(&m, a).mul(&mat_pow(&m, b)));
        }

        #[test]
        fn descending_sort_covers_point(raw in (1usize..=4).prop_flat_map(|n| {
            proptest::collection::vec((0i64..=50, 1i64..=7), n)
        })) {
            let p = Point::new(raw.iter().map(|(a, b)| ratio(*a, *b)).collect()).unwrap();
            let t = SubstitutionTemplate::an(p.len());
            let sigma = Permutation::sorting_descending(p.coords());
            let y = preimage_nonneg(&p, &sigma, &t).unwrap().expect("sorted cone contains p");
            let back = build_b(&sigma, &t).unwrap().mul_vec(y.coords());
            prop_assert_eq!(back.as_slice(), p.coords());
        }
    }
}
