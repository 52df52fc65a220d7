//! Compare monomials under an ordering of the variables.
//!
//!     cargo run --example majorization

use ksds::{majorizes_under, separating_point, ExponentVector, Permutation};

fn show(alpha: &[u32], beta: &[u32], sigma: &[usize]) {
    let a = ExponentVector::new(alpha.to_vec());
    let b = ExponentVector::new(beta.to_vec());
    let s = Permutation::new(sigma.to_vec()).unwrap();
    let holds = majorizes_under(&a, &b, &s).unwrap();
    print!(
        "{} ⪰ {} on {}: {holds}",
        a.monomial_string(),
        b.monomial_string(),
        s.ordering_string()
    );
    if holds {
        println!();
    } else {
        let p = separating_point(&a, &b, &s).unwrap();
        println!(
            "  (at {p}: {} < {})",
            a.eval(p.coords()),
            b.eval(p.coords())
        );
    }
}

fn main() {
    show(&[3, 1, 1], &[2, 1, 2], &[1, 2, 3]);
    show(&[4, 3, 1], &[2, 4, 2], &[1, 2, 3]);
    show(&[3, 4, 1], &[4, 2, 2], &[1, 2, 3]);
    show(&[4, 2, 2], &[3, 4, 1], &[1, 2, 3]);
    show(&[3, 4, 1], &[4, 2, 2], &[2, 1, 3]);
}
