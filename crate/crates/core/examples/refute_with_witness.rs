//! Refute nonnegativity and check the exact witness point.
//!
//!     cargo run --example refute_with_witness -- "x1^2 - 6*x1*x2 + 89/10*x2^2"

use ksds::{ksds_run, parse_form, witness_point, SearchOptions, SubstitutionTemplate};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "x1^2 - 6*x1*x2 + 89/10*x2^2".to_string());
    let f = parse_form(&text, None).unwrap();
    let t = SubstitutionTemplate::an(f.n());
    let v = ksds_run(&f, &t, &SearchOptions::default()).unwrap();
    println!("{f}: {} at depth {}", v.kind.as_str(), v.depth_reached);

    let Some(w) = v.witness else {
        println!("no witness");
        return;
    };
    let path: Vec<String> = w.path.iter().map(|s| s.ordering_string()).collect();
    println!("substitution path: {}", path.join("  then  "));
    println!("witness point:     {}", w.point);
    println!("value there:       {}", w.value);
    // The point is recomputed from the path and re-evaluated from scratch.
    let again = witness_point(&w.path, &t).unwrap();
    assert_eq!(again, w.point);
    assert_eq!(f.evaluate(&again).unwrap(), w.value);
    println!("re-checked by direct evaluation");
}
