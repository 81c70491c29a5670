//! Party-list seat allocation (D'Hondt, Sainte-Laguë, largest remainders)
//! and the bridge from approval profiles to apportionment instances.
//!
//! A profile is a party-list profile when every two ballots are either
//! identical or disjoint; ballots then partition the voters into parties.
//! Divisor comparisons use exact rationals via cross-multiplication, so
//! quota ties are resolved only by the documented tie policy: larger vote
//! count first, then input order.

use crate::model::{Committee, ElectionInstance};
use crate::rat::{frac_usize, rat_usize, Rat};
use crate::Error;


/// Votes per party plus the number of seats to distribute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApportionmentInstance {
    votes: Vec<u64>,
    seats: usize,
}

impl ApportionmentInstance {
    pub fn new(votes: Vec<u64>, seats: usize) -> Result<Self, Error> {
        if seats < 1 {
            return Err(Error::Invalid("at least one seat is required".into()));
        }
        if votes.is_empty() || votes.iter().all(|&v| v == 0) {
            return Err(Error::Invalid("total vote count must be positive".into()));
        }
        Ok(ApportionmentInstance { votes, seats })
    }

    pub fn votes(&self) -> &[u64] {
        &self.votes
    }

    pub fn seats(&self) -> usize {
        self.seats
    }

    pub fn total_votes(&self) -> u64 {
        self.votes.iter().sum()
    }
}

/// One divisor-method round: which party won the seat and at what quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeatRound {
    pub party: usize,
    pub quotient: Rat,
    /// Whether the winning quotient was shared by another party.
    pub tied: bool,
}

/// A completed seat allocation with its round-by-round trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Apportionment {
    pub seats: Vec<usize>,
    pub rounds: Vec<SeatRound>,
}

impl Apportionment {
    /// Count of rounds whose winner was determined by tie-breaking.
    pub fn tied_rounds(&self) -> usize {
        self.rounds.iter().filter(|r| r.tied).count()
    }
}

/// D'Hondt: seat `r` goes to the party maximizing `votes / (seats + 1)`.
pub fn dhondt(inst: &ApportionmentInstance) -> Apportionment {
    divisor_method(inst, |assigned| (assigned + 1) as u64)
}

/// Sainte-Laguë: seat `r` goes to the party maximizing `votes / (2*seats + 1)`.
pub fn sainte_lague(inst: &ApportionmentInstance) -> Apportionment {
    divisor_method(inst, |assigned| (2 * assigned + 1) as u64)
}

fn divisor_method(inst: &ApportionmentInstance, divisor: impl Fn(usize) -> u64) -> Apportionment {
    let p = inst.votes.len();
    let mut seats = vec![0usize; p];
    let mut rounds = Vec::with_capacity(inst.seats);
    for _ in 0..inst.seats {
        let mut best: Option<usize> = None;
        let mut tied = false;
        for party in 0..p {
            let better = match best {
                None => true,
                Some(b) => {
                    // votes[party]/div(party) vs votes[b]/div(b) by
                    // cross-multiplication; ties prefer more votes, then
                    // lower index.
                    let lhs = inst.votes[party] as u128 * divisor(seats[b]) as u128;
                    let rhs = inst.votes[b] as u128 * divisor(seats[party]) as u128;
                    if lhs == rhs {
                        tied = true;
                    }
                    lhs > rhs || (lhs == rhs && inst.votes[party] > inst.votes[b])
                }
            };
            if better {
                best = Some(party);
            }
        }
        let winner = best.expect("at least one party");
        let quotient = Rat::new(
            (inst.votes[winner] as i64).into(),
            (divisor(seats[winner]) as i64).into(),
        );
        seats[winner] += 1;
        rounds.push(SeatRound {
            party: winner,
            quotient,
            tied,
        });
    }
    Apportionment { seats, rounds }
}

/// Largest remainders: floor quotas first, then one extra seat each to the
/// parties with the largest fractional remainders.
pub fn largest_remainder(inst: &ApportionmentInstance) -> Apportionment {
    let p = inst.votes.len();
    let total = inst.total_votes() as usize;
    let mut seats = vec![0usize; p];
    let mut remainders: Vec<Rat> = Vec::with_capacity(p);
    let mut assigned = 0usize;
    for party in 0..p {
        let quota = frac_usize(inst.seats * inst.votes[party] as usize, total);
        let floor = (inst.seats as u64 * inst.votes[party] / total as u64) as usize;
        seats[party] = floor;
        assigned += floor;
        remainders.push(quota - rat_usize(floor));
    }
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by(|&a, &b| {
        remainders[b]
            .cmp(&remainders[a])
            .then(inst.votes[b].cmp(&inst.votes[a]))
            .then(a.cmp(&b))
    });
    let mut rounds = Vec::new();
    let extra = inst.seats - assigned;
    for idx in 0..extra {
        let party = order[idx];
        // A tie matters when the next party in line has the same remainder.
        let tied = order
            .get(idx + 1)
            .is_some_and(|&next| remainders[next] == remainders[party])
            || (idx > 0 && remainders[order[idx - 1]] == remainders[party]);
        seats[party] += 1;
        rounds.push(SeatRound {
            party,
            quotient: remainders[party].clone(),
            tied,
        });
    }
    Apportionment { seats, rounds }
}

/// One party of a party-list profile: the shared ballot and its voters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Party {
    pub candidates: Vec<usize>,
    pub voters: Vec<usize>,
}

/// The party decomposition of a party-list profile, in order of first
/// appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartyStructure {
    pub parties: Vec<Party>,
    /// Whether every ballot has at least `k` candidates (the condition for
    /// a full party-list instance).
    pub all_ballots_at_least_k: bool,
}

impl PartyStructure {
    /// Party index of a candidate, when some voter approves it.
    pub fn party_of(&self, candidate: usize) -> Option<usize> {
        self.parties
            .iter()
            .position(|p| p.candidates.binary_search(&candidate).is_ok())
    }

    /// True when every candidate of the instance belongs to some party.
    pub fn covers_all_candidates(&self, inst: &ElectionInstance) -> bool {
        let owned: usize = self.parties.iter().map(|p| p.candidates.len()).sum();
        owned == inst.num_candidates()
    }

    /// Per-party vote counts (empty-ballot parties excluded).
    pub fn vote_counts(&self) -> Vec<u64> {
        self.parties
            .iter()
            .filter(|p| !p.candidates.is_empty())
            .map(|p| p.voters.len() as u64)
            .collect()
    }

    /// Seats a committee gives to each party.
    pub fn seat_counts(&self, committee: &Committee) -> Vec<usize> {
        self.parties
            .iter()
            .filter(|p| !p.candidates.is_empty())
            .map(|p| {
                p.candidates
                    .iter()
                    .filter(|&&c| committee.contains(c))
                    .count()
            })
            .collect()
    }
}

/// Result of party-list detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartyListCheck {
    Parties(PartyStructure),
    /// Two voters whose ballots overlap without being equal.
    NotPartyList { voter_a: usize, voter_b: usize },
}

/// Groups voters with identical ballots into parties and verifies that
/// distinct ballots are disjoint. Voters with empty ballots form a party
/// without candidates.
pub fn as_party_list(inst: &ElectionInstance) -> PartyListCheck {
    let mut parties: Vec<Party> = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; inst.num_candidates()];
    for v in 0..inst.num_voters() {
        let ballot = inst.ballot(v);
        if let Some(idx) = parties.iter().position(|p| p.candidates == ballot) {
            parties[idx].voters.push(v);
            continue;
        }
        // New distinct ballot: every candidate on it must be unclaimed.
        for &c in ballot {
            if let Some(other) = owner[c] {
                let witness: usize = parties[other].voters[0];
                return PartyListCheck::NotPartyList {
                    voter_a: witness,
                    voter_b: v,
                };
            }
        }
        let idx = parties.len();
        for &c in ballot {
            owner[c] = Some(idx);
        }
        parties.push(Party {
            candidates: ballot.to_vec(),
            voters: vec![v],
        });
    }
    let k = inst.committee_size();
    let all_ballots_at_least_k = parties.iter().all(|p| p.candidates.len() >= k);
    PartyListCheck::Parties(PartyStructure {
        parties,
        all_ballots_at_least_k,
    })
}

/// The apportionment instance induced by a party-list profile (parties with
/// candidates only, in order of first appearance).
pub fn to_apportionment(
    structure: &PartyStructure,
    seats: usize,
) -> Result<ApportionmentInstance, Error> {
    ApportionmentInstance::new(structure.vote_counts(), seats)
}

/// Checks the lower-quota property of a seat vector.
pub fn satisfies_lower_quota(inst: &ApportionmentInstance, seats: &[usize]) -> bool {
    let total = inst.total_votes() as usize;
    seats.iter().enumerate().all(|(i, &s)| {
        let quota = frac_usize(inst.seats * inst.votes[i] as usize, total);
        rat_usize(s) >= quota.floor()
    })
}

/// Checks the upper-quota property of a seat vector.
pub fn satisfies_upper_quota(inst: &ApportionmentInstance, seats: &[usize]) -> bool {
    let total = inst.total_votes() as usize;
    seats.iter().enumerate().all(|(i, &s)| {
        let quota = frac_usize(inst.seats * inst.votes[i] as usize, total);
        let ceil = if quota.is_integer() {
            quota
        } else {
            quota.floor() + Rat::new(1.into(), 1.into())
        };
        rat_usize(s) <= ceil
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::parse_profile;
    use num::ToPrimitive;

    fn sum_is_seats(a: &Apportionment, k: usize) {
        assert_eq!(a.seats.iter().sum::<usize>(), k);
    }

    #[test]
    fn dhondt_textbook() {
        let inst = ApportionmentInstance::new(vec![60, 20, 10, 8, 2], 10).unwrap();
        let a = dhondt(&inst);
        assert_eq!(a.seats, vec![7, 2, 1, 0, 0]);
        sum_is_seats(&a, 10);
    }

    #[test]
    fn sainte_lague_textbook() {
        let inst = ApportionmentInstance::new(vec![60, 20, 10, 8, 2], 10).unwrap();
        let a = sainte_lague(&inst);
        assert_eq!(a.seats, vec![6, 2, 1, 1, 0]);
    }

    #[test]
    fn largest_remainder_textbook() {
        let inst = ApportionmentInstance::new(vec![60, 20, 10, 8, 2], 10).unwrap();
        let a = largest_remainder(&inst);
        assert_eq!(a.seats, vec![6, 2, 1, 1, 0]);
        // The single leftover seat goes to the party with remainder 4/5.
        assert_eq!(a.rounds.len(), 1);
        assert_eq!(a.rounds[0].party, 3);
        assert_eq!(a.rounds[0].quotient.to_f64().unwrap(), 0.8);
    }

    #[test]
    fn single_party_and_symmetry() {
        let inst = ApportionmentInstance::new(vec![17], 5).unwrap();
        assert_eq!(dhondt(&inst).seats, vec![5]);
        assert_eq!(sainte_lague(&inst).seats, vec![5]);
        assert_eq!(largest_remainder(&inst).seats, vec![5]);

        let inst = ApportionmentInstance::new(vec![7, 7, 7], 3).unwrap();
        assert_eq!(sainte_lague(&inst).seats, vec![1, 1, 1]);
        assert_eq!(largest_remainder(&inst).seats, vec![1, 1, 1]);
    }

    #[test]
    fn hand_run_dhondt_small() {
        // Four rounds on (50, 31): 50, 31, 25, 50/3 -> seats (3, 1).
        let inst = ApportionmentInstance::new(vec![50, 31], 4).unwrap();
        assert_eq!(dhondt(&inst).seats, vec![3, 1]);
    }

    #[test]
    fn lrm_two_parties() {
        let inst = ApportionmentInstance::new(vec![50, 31], 4).unwrap();
        assert_eq!(largest_remainder(&inst).seats, vec![2, 2]);
    }

    #[test]
    fn exact_quotas_have_no_remainders() {
        let inst = ApportionmentInstance::new(vec![30, 20, 10], 6).unwrap();
        let a = largest_remainder(&inst);
        assert_eq!(a.seats, vec![3, 2, 1]);
        assert!(a.rounds.is_empty());
    }

    #[test]
    fn party_list_detection() {
        let text = "5 2\n2 * 0 1\n3 * 2 3\n1 *\n";
        let inst = parse_profile(text).unwrap();
        match as_party_list(&inst) {
            PartyListCheck::Parties(ps) => {
                assert_eq!(ps.parties.len(), 3);
                assert_eq!(ps.vote_counts(), vec![2, 3]);
                assert!(!ps.all_ballots_at_least_k);
                assert!(!ps.covers_all_candidates(&inst));
                let w = Committee::new(vec![0, 2]);
                assert_eq!(ps.seat_counts(&w), vec![1, 1]);
            }
            other => panic!("expected parties, got {other:?}"),
        }

        // Overlap without equality.
        let inst = parse_profile("3 1\n0 1\n0 2\n").unwrap();
        assert!(matches!(
            as_party_list(&inst),
            PartyListCheck::NotPartyList { .. }
        ));
    }

    #[test]
    fn quota_properties_on_textbook_instance() {
        let inst = ApportionmentInstance::new(vec![60, 20, 10, 8, 2], 10).unwrap();
        assert!(satisfies_lower_quota(&inst, &dhondt(&inst).seats));
        let lrm = largest_remainder(&inst).seats;
        assert!(satisfies_lower_quota(&inst, &lrm));
        assert!(satisfies_upper_quota(&inst, &lrm));
    }
}
