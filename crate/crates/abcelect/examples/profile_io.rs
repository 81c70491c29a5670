//! The profile file format: comments, multiplicity lines, candidate
//! labels, empty ballots, and the round-trip guarantee.
//!
//! ```text
//! cargo run --example profile_io
//! ```

use abcelect::profile::{parse_profile, serialize_profile};

fn main() {
    let text = "\
# club board election
5 2
names: alba boro cyra dov evi
2 * 0 1
0 2
3 4
1 *
";
    let inst = parse_profile(text).unwrap();
    println!(
        "{} voters, {} candidates, {} seats",
        inst.num_voters(),
        inst.num_candidates(),
        inst.committee_size()
    );
    for v in 0..inst.num_voters() {
        let labels: Vec<String> = inst
            .ballot(v)
            .iter()
            .map(|&c| inst.candidate_label(c))
            .collect();
        println!("  voter {v} approves {{{}}}", labels.join(","));
    }
    let empty = inst.empty_ballots();
    if !empty.is_empty() {
        println!("note: voters {empty:?} approve nobody");
    }

    // Serialization expands multiplicities to one line per voter and
    // parses back to the identical instance.
    let rendered = serialize_profile(&inst);
    println!("--- canonical form ---\n{rendered}");
    assert_eq!(parse_profile(&rendered).unwrap(), inst);
}
