//! Prove forms nonnegative on the orthant by successive difference substitution.
//!
//!     cargo run --example prove_psd -- "x1^3 + x2^3 + x3^3 - 3*x1*x2*x3" gn

use ksds::{ksds_run, parse_form, SearchOptions, SubstitutionTemplate, VerdictKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let inputs: Vec<String> = match args.next() {
        Some(text) => vec![text],
        None => vec![
            "x1^2 - 2*x1*x2 + x2^2".into(),
            "x1^2 + x2^2 + x3^2 - x1*x2 - x2*x3 - x3*x1".into(),
            "x1^3 + x2^3 + x3^3 - 3*x1*x2*x3".into(),
            "x1^2 - 6*x1*x2 + 10*x2^2".into(),
        ],
    };
    let use_gn = args.next().as_deref() == Some("gn");

    for text in inputs {
        let f = parse_form(&text, None).unwrap();
        let t = if use_gn {
            SubstitutionTemplate::gn(f.n())
        } else {
            SubstitutionTemplate::an(f.n())
        };
        let v = ksds_run(&f, &t, &SearchOptions::default()).unwrap();
        let outcome = match v.kind {
            VerdictKind::Psd => format!("nonnegative, proven at depth {}", v.depth_reached),
            VerdictKind::NotPsd => "not nonnegative".to_string(),
            VerdictKind::Inconclusive => format!("undecided after depth {}", v.depth_reached),
        };
        println!(
            "{f}\n  {outcome}; {} nodes expanded, {} pruned",
            v.stats.nodes_expanded, v.stats.trivially_positive_pruned
        );
    }
}
