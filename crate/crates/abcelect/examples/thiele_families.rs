//! The weight-function spectrum: approval counting, harmonic weights,
//! coverage, geometric decay and hand-rolled marginals, plus a scoring
//! rule outside the family (split approval).
//!
//! ```text
//! cargo run --example thiele_families
//! ```

use abcelect::profile::{format_committee, parse_profile};
use abcelect::rat::frac;
use abcelect::thiele::{
    abc_scoring_exact, make_weights, thiele_exact, ScoringFunction, WeightKind,
};

fn main() {
    let profile = "\
6 3
names: a b c d e f
4 * 0 1
3 * 0 2
2 * 3 4
1 * 5
";
    let inst = parse_profile(profile).unwrap();

    let families = vec![
        make_weights(WeightKind::Av, 3).unwrap(),
        make_weights(WeightKind::Pav, 3).unwrap(),
        make_weights(WeightKind::Cc, 3).unwrap(),
        make_weights(WeightKind::Geometric(frac(3, 2)), 3).unwrap(),
        make_weights(
            WeightKind::Custom(vec![frac(1, 1), frac(1, 4), frac(1, 16)]),
            3,
        )
        .unwrap(),
    ];
    for w in &families {
        println!(
            "{:<24} marginal gains {:?}",
            w.label(),
            w.marginals_up_to(3)
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
        );
        let out = thiele_exact(&inst, w).unwrap();
        for committee in &out.committees {
            println!("    {}  score {}", format_committee(&inst, committee), out.score);
        }
    }

    // Split approval: each voter's point spreads over her ballot, so it is
    // not a weight-family rule.
    let sav = abc_scoring_exact(&inst, &ScoringFunction::sav(inst.num_candidates())).unwrap();
    println!("sav");
    for committee in &sav.committees {
        println!("    {}  score {}", format_committee(&inst, committee), sav.score);
    }
}
