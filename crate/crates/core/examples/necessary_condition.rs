//! Detect inputs on which the search can never prove positivity, and show the
//! negative coefficient that survives every substitution.
//!
//!     cargo run --example necessary_condition

use ksds::majorize::persistent_monomial;
use ksds::{
    ksds_run, necessary_condition, parse_form, persistent_coefficient, SearchOptions,
    SubstitutionTemplate,
};

const CYCLIC: &str =
    "x1^4*x2^2 - x1^3*x2*x3^2 + x2^4*x3^2 - x1^2*x2^3*x3 + x1^2*x3^4 - x1*x2^2*x3^3";

fn main() {
    let f = parse_form(CYCLIC, None).unwrap();
    println!("f = {f}\n");

    let report = necessary_condition(&f).unwrap();
    println!(
        "necessary condition holds: {} ({} orderings checked)",
        report.holds, report.checked_orderings
    );
    for v in &report.violations {
        println!(
            "  {} is majorized by no positive term on {}",
            v.term.monomial_string(),
            v.ordering.ordering_string()
        );
    }

    let v = report
        .violations
        .iter()
        .find(|v| v.ordering.images() == [1, 3, 2])
        .unwrap_or(&report.violations[0]);
    let t = SubstitutionTemplate::an(3);
    let target = persistent_monomial(&v.term, &v.ordering);
    println!(
        "\ncoefficient of {} after m substitutions along {}:",
        target.monomial_string(),
        v.ordering.ordering_string()
    );
    for m in 1..=5 {
        let c = persistent_coefficient(&f, &v.ordering, &t, m, &v.term).unwrap();
        println!("  m = {m}: {c}");
    }

    let verdict = ksds_run(
        &f,
        &t,
        &SearchOptions::default()
            .with_max_depth(4)
            .with_check_necessary(true),
    )
    .unwrap();
    println!(
        "\nsearch to depth 4: {} ({} nodes expanded)",
        verdict.kind.as_str(),
        verdict.stats.nodes_expanded
    );
}
