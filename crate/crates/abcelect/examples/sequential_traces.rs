//! Round-by-round traces of the sequential rules: load balancing, the
//! budget-based two-phase rule, and greedy balanced assignment. All
//! quantities are exact rationals.
//!
//! ```text
//! cargo run --example sequential_traces
//! ```

use abcelect::model::TieOrder;
use abcelect::monroe::greedy_monroe;
use abcelect::phragmen::{rule_x, seq_phragmen};
use abcelect::profile::{format_committee, parse_profile};

fn main() {
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
    let inst = parse_profile(profile).unwrap();
    let tie = TieOrder::default_for(&inst);

    println!("sequential load balancing:");
    let phragmen = seq_phragmen(&inst, &tie);
    for (round, step) in phragmen.rounds.iter().enumerate() {
        match &step.new_load {
            Some(load) => println!(
                "  round {}: seat {} at load {load}",
                round + 1,
                inst.candidate_label(step.candidate)
            ),
            None => println!(
                "  round {}: seat {} by tie order",
                round + 1,
                inst.candidate_label(step.candidate)
            ),
        }
    }
    println!("  winners: {}", format_committee(&inst, &phragmen.committee));

    println!("budget rule (everyone starts with k/n = 1/3):");
    let budget = rule_x(&inst, &tie);
    for (round, step) in budget.phase1.iter().enumerate() {
        println!(
            "  phase 1 round {}: buy {} at price {} ({} contributors)",
            round + 1,
            inst.candidate_label(step.candidate),
            step.price,
            step.payments.len()
        );
    }
    for (round, step) in budget.phase2.iter().enumerate() {
        println!(
            "  phase 2 round {}: seat {} at load {}",
            round + 1,
            inst.candidate_label(step.candidate),
            step.new_load.as_ref().expect("approved candidates remain")
        );
    }
    println!("  winners: {}", format_committee(&inst, &budget.committee));

    println!("greedy balanced assignment:");
    let greedy = greedy_monroe(&inst, &tie);
    for (round, step) in greedy.rounds.iter().enumerate() {
        let voters: Vec<String> = step.group.iter().map(|v| (v + 1).to_string()).collect();
        println!(
            "  round {}: pick {} for voters {{{}}} (cap {})",
            round + 1,
            inst.candidate_label(step.candidate),
            voters.join(","),
            step.cap
        );
    }
    println!("  winners: {}", format_committee(&inst, &greedy.committee));
}
