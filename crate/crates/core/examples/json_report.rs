//! Emit the versioned JSON report and read it back with exact values.
//!
//!     cargo run --example json_report

use ksds::report::VerdictJson;
use ksds::{ksds_run, parse_form, SearchOptions, SubstitutionTemplate};

fn main() {
    let f = parse_form("x1^2 - 3*x1*x2 + x2^2", None).unwrap();
    let v = ksds_run(
        &f,
        &SubstitutionTemplate::gn(2),
        &SearchOptions::default().with_check_necessary(true),
    )
    .unwrap();
    let json = serde_json::to_string_pretty(&VerdictJson::from(&v)).unwrap();
    println!("{json}");

    let back: VerdictJson = serde_json::from_str(&json).unwrap();
    if let Some((point, value)) = back.witness.as_ref().and_then(|w| w.decode()) {
        assert_eq!(f.evaluate_at(&point).unwrap(), value);
        println!("\ndecoded witness evaluates to {value} exactly");
    }
}
