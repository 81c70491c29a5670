//! Detects party-list structure in an approval profile and shows that the
//! proportional committee rules reduce to classic apportionment on it.
//!
//! ```text
//! cargo run --example party_list
//! ```

use abcelect::apportion::{as_party_list, dhondt, to_apportionment, PartyListCheck};
use abcelect::model::TieOrder;
use abcelect::phragmen::{rule_x, seq_phragmen};
use abcelect::profile::parse_profile;
use abcelect::thiele::{make_weights, seq_thiele, thiele_exact, WeightKind};

fn main() {
    // Three parties with four-candidate slates; 10, 6 and 2 voters.
    let profile = "\
12 4
10 * 0 1 2 3
6 * 4 5 6 7
2 * 8 9 10 11
";
    let inst = parse_profile(profile).unwrap();
    let structure = match as_party_list(&inst) {
        PartyListCheck::Parties(ps) => ps,
        PartyListCheck::NotPartyList { voter_a, voter_b } => {
            println!("not a party-list profile: ballots of voters {voter_a} and {voter_b} overlap");
            return;
        }
    };
    println!(
        "party-list profile with {} parties, sizes {:?}",
        structure.parties.len(),
        structure.vote_counts()
    );

    let apportionment = to_apportionment(&structure, inst.committee_size()).unwrap();
    let reference = dhondt(&apportionment).seats;
    println!("divisor-method reference allocation: {reference:?}");

    let tie = TieOrder::default_for(&inst);
    let w = make_weights(WeightKind::Pav, inst.committee_size()).unwrap();
    let harmonic = thiele_exact(&inst, &w).unwrap();
    let mut vectors: Vec<Vec<usize>> = harmonic
        .committees
        .iter()
        .map(|c| structure.seat_counts(c))
        .collect();
    vectors.dedup();
    for vector in vectors {
        println!(
            "harmonic optimizer seats per party:  {vector:?} ({} tied committees)",
            harmonic.committees.len()
        );
    }
    let sequential = seq_thiele(&inst, &w, &tie);
    println!(
        "sequential harmonic seats per party: {:?}",
        structure.seat_counts(&sequential.committee)
    );
    let phragmen = seq_phragmen(&inst, &tie);
    println!(
        "load balancing seats per party:      {:?}",
        structure.seat_counts(&phragmen.committee)
    );
    let budget = rule_x(&inst, &tie);
    println!(
        "budget rule seats per party:         {:?}",
        structure.seat_counts(&budget.committee)
    );
}
