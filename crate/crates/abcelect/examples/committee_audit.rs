//! Audits two rival committees against the axiom catalog and prints the
//! witnesses: cohesive groups left behind, deviating coalitions, price
//! systems, perfect partitions.
//!
//! ```text
//! cargo run --example committee_audit
//! ```

use abcelect::axioms::{
    check_ejr, check_jr, check_perfect_representation, check_pjr, find_core_violation,
    CoreParams, GroupCheck, JrCheck, PrCheck,
};
use abcelect::model::Committee;
use abcelect::phragmen::{check_priceability, PriceabilityCheck};
use abcelect::profile::{format_committee, parse_profile};

fn main() {
    // Six voters, fifteen candidates, twelve seats. The first three voters
    // share a three-candidate slate plus one personal favorite each; the
    // other three have disjoint three-candidate slates.
    let profile = "\
15 12
0 1 2 3
0 1 2 4
0 1 2 5
6 7 8
9 10 11
12 13 14
";
    let inst = parse_profile(profile).unwrap();
    let balanced = Committee::new(vec![0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 13]);
    let welfarist = Committee::new(vec![0, 1, 2, 6, 7, 8, 9, 10, 11, 12, 13, 14]);

    for committee in [&balanced, &welfarist] {
        println!("committee {}:", format_committee(&inst, committee));

        match check_jr(&inst, committee) {
            JrCheck::Satisfied => println!("  justified representation: ok"),
            JrCheck::Violated(v) => println!(
                "  justified representation: violated by candidate {} with group {:?}",
                v.candidate, v.group.voters
            ),
        }
        for (axiom, outcome) in [
            ("proportional representation", check_pjr(&inst, committee).unwrap()),
            ("extended representation", check_ejr(&inst, committee).unwrap()),
        ] {
            match outcome {
                GroupCheck::Satisfied => println!("  {axiom}: ok"),
                GroupCheck::Violated(group) => println!(
                    "  {axiom}: level-{} group {:?} is under-served",
                    group.level, group.voters
                ),
            }
        }
        match find_core_violation(&inst, committee, &CoreParams::default()).unwrap() {
            None => println!("  core: stable"),
            Some(dev) => println!(
                "  core: voters {:?} would rather elect {:?}",
                dev.voters, dev.alternatives
            ),
        }
        match check_priceability(&inst, committee) {
            PriceabilityCheck::Priceable(system) => {
                println!("  priceable with per-voter budget {}", system.budget)
            }
            PriceabilityCheck::NotPriceable => println!("  not priceable"),
        }
        match check_perfect_representation(&inst, committee) {
            PrCheck::Represented(partition) => {
                println!("  perfect representation with {} groups", partition.groups.len())
            }
            PrCheck::Violated => println!("  perfect representation: impossible"),
            PrCheck::NotApplicable => {
                println!("  perfect representation: seats do not divide voters")
            }
        }
    }
}
