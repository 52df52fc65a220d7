//! Shared oracles, generators and the form corpus for the integration tests.
//!
//! The oracles here deliberately avoid the library's own arithmetic paths:
//! substitution is expanded with the multinomial theorem over explicit
//! compositions, and majorization is checked with its own prefix loop.
#![allow(dead_code)]

use std::collections::BTreeMap;

use ksds::rational::{int, ratio};
use ksds::{parse_form, ExponentVector, Form, Matrix, Permutation, Point, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub const CYCLIC: &str =
    "x1^4*x2^2 - x1^3*x2*x3^2 + x2^4*x3^2 - x1^2*x2^3*x3 + x1^2*x3^4 - x1*x2^2*x3^3";

pub fn rng(seed: u64) -> TestRng {
    TestRng::seed_from_u64(seed)
}

pub fn form(text: &str) -> Form {
    parse_form(text, None).unwrap()
}

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

/// All vectors of `n` nonnegative integers summing to `d`.
pub fn compositions(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `(Σ_j c_j t_j)^k` via the multinomial theorem.
fn linear_power(coeffs: &[Rational], k: u32) -> BTreeMap<Vec<u32>, Rational> {
    let mut out = BTreeMap::new();
    for e in compositions(coeffs.len(), k) {
        let mut c = Rational::from_integer(factorial(k));
        for (ej, cj) in e.iter().zip(coeffs) {
            c /= Rational::from_integer(factorial(*ej));
            for _ in 0..*ej {
                c *= cj;
            }
        }
        if !c.is_zero() {
            out.insert(e, c);
        }
    }
    out
}

fn poly_mul(
    a: &BTreeMap<Vec<u32>, Rational>,
    b: &BTreeMap<Vec<u32>, Rational>,
) -> BTreeMap<Vec<u32>, Rational> {
    let mut out: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Independent expansion of `f(M·X)`, as a map exponent → coefficient.
pub fn oracle_expand(f: &Form, m: &Matrix) -> BTreeMap<Vec<u32>, Rational> {
    let n = f.n();
    let mut total: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (e, c) in f.terms() {
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        acc.insert(vec![0; n], c.clone());
        for (i, &k) in e.entries().iter().enumerate() {
            if k > 0 {
                acc = poly_mul(&acc, &linear_power(m.row(i), k));
            }
        }
        for (e, c) in acc {
            *total.entry(e).or_insert_with(Rational::zero) += c;
        }
    }
    total.retain(|_, c| !c.is_zero());
    total
}

pub fn form_as_map(f: &Form) -> BTreeMap<Vec<u32>, Rational> {
    f.terms()
        .map(|(e, c)| (e.entries().to_vec(), c.clone()))
        .collect()
}

/// Prefix-sum majorization written independently of the library.
pub fn oracle_majorizes(alpha: &[u32], beta: &[u32]) -> bool {
    let mut sa = 0i64;
    let mut sb = 0i64;
    for k in 0..alpha.len() {
        sa += alpha[k] as i64;
        sb += beta[k] as i64;
        if k + 1 < alpha.len() && sa < sb {
            return false;
        }
    }
    sa == sb
}

pub fn random_composition(rng: &mut TestRng, n: usize, d: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

pub fn random_permutation(rng: &mut TestRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        images.swap(i, j);
    }
    Permutation::new(images).unwrap()
}

pub fn random_positive_rational(rng: &mut TestRng) -> Rational {
    ratio(rng.gen_range(1..=9), rng.gen_range(1..=5))
}

/// A random point in `[0, 10]^n` with small denominators.
pub fn random_point(rng: &mut TestRng, n: usize) -> Point {
    let coords = (0..n)
        .map(|_| {
            let den = rng.gen_range(1..=12i64);
            ratio(rng.gen_range(0..=10 * den), den)
        })
        .collect();
    Point::new(coords).unwrap()
}

/// A random point in the cone `x_σ(1) ≥ ... ≥ x_σ(n) ≥ 0`.
pub fn random_sorted_point(rng: &mut TestRng, sigma: &Permutation) -> Point {
    let mut values: Vec<Rational> = random_point(rng, sigma.n()).coords().to_vec();
    values.sort_by(|a, b| b.cmp(a));
    let mut coords = vec![Rational::zero(); sigma.n()];
    for (rank, v) in values.into_iter().enumerate() {
        coords[sigma.image(rank + 1) - 1] = v;
    }
    Point::new(coords).unwrap()
}

/// Upper triangular with strictly positive entries on and above the diagonal.
pub fn random_positive_upper(rng: &mut TestRng, n: usize) -> Matrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < i {
                        int(0)
                    } else {
                        random_positive_rational(rng)
                    }
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).unwrap()
}

/// Random form with `1..=max_terms` terms and nonzero integer coefficients.
pub fn random_form(rng: &mut TestRng, n: usize, d: u32, max_terms: usize) -> Form {
    loop {
        let count = rng.gen_range(1..=max_terms);
        let terms = (0..count).map(|_| {
            let mut c = rng.gen_range(-6i64..=6);
            if c == 0 {
                c = 1;
            }
            (ev(&random_composition(rng, n, d)), int(c))
        });
        let f = Form::from_terms(n, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// Forms used for the engine-wide soundness and consistency checks.
pub fn corpus() -> Vec<&'static str> {
    vec![
        "x1^2 - 2*x1*x2 + x2^2",
        "x1^2 - 3*x1*x2 + x2^2",
        "x1^2 - x1*x2 + x2^2",
        "x1^2 - 6*x1*x2 + 89/10*x2^2",
        "x1^2 - 6*x1*x2 + 10*x2^2",
        "x1^3 - x1^2*x2 - x1*x2^2 + x2^3",
        "x1^4 - 2*x1^2*x2^2 + x2^4",
        "x1^2 - x1*x2",
        "x1*x2 - 1/100*x2^2",
        "x1^3 + x2^3 + x3^3 - 3*x1*x2*x3",
        "x1^3 + x2^3 + x3^3 - 4*x1*x2*x3",
        "x1^3 + x2^3 + x3^3 + 3*x1*x2*x3 - x1^2*x2 - x1^2*x3 - x2^2*x1 - x2^2*x3 - x3^2*x1 - x3^2*x2",
        "x1^2 + x2^2 + x3^2 - x1*x2 - x2*x3 - x3*x1",
        "x1^2 + x2^2 + x3^2 - 2*x1*x2 - 2*x2*x3 + 2*x3*x1",
        "x1^2 + x2^2 - 3*x2*x3 + x3^2",
        CYCLIC,
        "x1^2 + x2^2 + x3^2 + x4^2 - x1*x2 - x2*x3 - x3*x4 - x4*x1",
        "x1*x2 + x3*x4 - x1*x3",
        "2*x1^3 + x2^3 - 3*x1*x2^2",
        "x1^4 + x2^4 + x3^4 - x1^2*x2*x3 - x2^2*x3*x1 - x3^2*x1*x2",
    ]
}
