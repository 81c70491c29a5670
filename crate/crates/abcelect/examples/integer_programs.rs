//! Exports the optimization rules with NP-hard winner determination as
//! plain-text integer programs for external solvers.
//!
//! ```text
//! cargo run --example integer_programs
//! ```

use abcelect::ilp::{export_ip, parse_ip, IpRule};
use abcelect::profile::parse_profile;

fn main() {
    let inst = parse_profile("3 2\n2 * 0 1\n1 2\n").unwrap();

    for (name, rule) in [("harmonic maximization", IpRule::Pav), ("minimax", IpRule::Mav)] {
        let model = export_ip(&inst, rule);
        let text = model.to_string();
        println!("--- {name} ---");
        print!("{text}");
        // The document re-parses under its own grammar.
        assert_eq!(parse_ip(&text).unwrap(), model);
    }
}
