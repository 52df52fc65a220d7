//! Build the difference-substitution matrices for a template and apply one.
//!
//!     cargo run --example substitution_matrices

use ksds::rational::{int, ratio};
use ksds::{
    apply_substitution, build_b, build_k, mat_pow, parse_form, Permutation, SubstitutionTemplate,
};

fn main() {
    let an = SubstitutionTemplate::an(3);
    let gn = SubstitutionTemplate::gn(3);
    println!("K for A_3:\n{}\n", build_k(&an));
    println!("K for G_3:\n{}\n", build_k(&gn));

    // Permutations are written in one-line notation: 1,3,2 is the cycle (1)(23).
    let sigma = Permutation::new(vec![1, 3, 2]).unwrap();
    let custom = SubstitutionTemplate::new(vec![int(2), int(3), int(5)]).unwrap();
    println!(
        "B for ordering {} with q = (2,3,5):\n{}\n",
        sigma.ordering_string(),
        build_b(&sigma, &custom).unwrap()
    );

    let a3 = build_k(&an);
    for m in 1..=4 {
        println!("A_3^{m}:\n{}\n", mat_pow(&a3, m));
    }

    let f = parse_form("x1^2 - x1*x2 + 1/2*x2^2", None).unwrap();
    let t = SubstitutionTemplate::new(vec![int(1), ratio(1, 2)]).unwrap();
    for sigma in Permutation::all(2) {
        let b = build_b(&sigma, &t).unwrap();
        let g = apply_substitution(&f, &b).unwrap();
        println!("{} : f(B X) = {g}", sigma.ordering_string());
    }
}
