//! Seat allocation among parties under the three classic methods, with
//! the divisor-round trace.
//!
//! ```text
//! cargo run --example apportionment
//! ```

use abcelect::apportion::{dhondt, largest_remainder, sainte_lague, ApportionmentInstance};

fn main() {
    let inst = ApportionmentInstance::new(vec![60, 20, 10, 8, 2], 10).unwrap();
    println!("votes: {:?}, seats: {}", inst.votes(), inst.seats());

    let dh = dhondt(&inst);
    println!("highest averages (divisors 1, 2, 3, ...): {:?}", dh.seats);
    for (round, step) in dh.rounds.iter().enumerate() {
        println!(
            "  round {:>2}: party {} wins at quotient {}",
            round + 1,
            step.party,
            step.quotient
        );
    }

    let sl = sainte_lague(&inst);
    println!("highest averages (divisors 1, 3, 5, ...): {:?}", sl.seats);

    let lrm = largest_remainder(&inst);
    println!("floor quotas plus largest remainders:     {:?}", lrm.seats);
    for step in &lrm.rounds {
        println!(
            "  leftover seat to party {} (remainder {})",
            step.party, step.quotient
        );
    }
}
