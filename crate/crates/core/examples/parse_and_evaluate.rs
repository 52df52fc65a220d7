//! Parse a form, inspect its terms and evaluate it exactly.
//!
//!     cargo run --example parse_and_evaluate -- "x1^2 - 3*x1*x2 + x2^2" 2,1

use ksds::rational::parse_rational;
use ksds::{parse_form, Point};

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args
        .next()
        .unwrap_or_else(|| "x1^3 - 2*x1^2*x2 + 1/3*x2^3".to_string());
    let point = args.next().unwrap_or_else(|| "2,1".to_string());

    let f = match parse_form(&text, None) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("cannot parse {text:?}: {e}");
            std::process::exit(1);
        }
    };
    println!("form:       {f}");
    println!("variables:  {}", f.n());
    println!("degree:     {}", f.degree());
    for (exp, coeff) in f.terms() {
        println!("  {exp:<12} {coeff}");
    }
    println!(
        "sum of coefficients (value at all ones): {}",
        f.coefficient_sum()
    );
    println!("trivially positive: {}", f.is_trivially_positive());

    let coords = point
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Option<Vec<_>>>()
        .and_then(|c| Point::new(c).ok());
    match coords.map(|p| (f.evaluate(&p), p)) {
        Some((Ok(v), p)) => println!("f{p} = {v}"),
        _ => eprintln!(
            "point {point:?} is not a nonnegative point with {} coordinates",
            f.n()
        ),
    }
}
