//! Runs every rule in the registry on one election and prints the winners.
//!
//! ```text
//! cargo run --example rules_overview
//! ```

use abcelect::model::TieOrder;
use abcelect::profile::parse_profile;
use abcelect::rules::{compute_rule, parse_rule_id, render_result, RULE_NAMES};

fn main() {
    // Twelve ballots over seven candidates, four seats: a steering
    // committee election small enough to read at a glance.
    let profile = "\
7 4
names: a b c d e f g
3 * 0 1
3 * 0 2
2 * 0 3
1 2 5
4
5
6
";
    let inst = parse_profile(profile).expect("profile parses");
    let tie = TieOrder::default_for(&inst);

    for name in RULE_NAMES {
        let rule = parse_rule_id(name).expect("registry name");
        let result = compute_rule(&rule, &inst, &tie).expect("desk-scale instance");
        println!("{name}:");
        for line in render_result(&inst, &result).lines() {
            println!("  {line}");
        }
    }
}
