//! Monroe's rule and its greedy variant.
//!
//! Monroe scores a committee by the best balanced assignment of voters to
//! committee members: every member represents between `floor(n/k)` and
//! `ceil(n/k)` voters, and the score counts voters who approve their
//! assigned representative. The optimal assignment is found with a
//! min-cost flow (approved member-voter edges carry cost -1, so the
//! cheapest n-unit flow maximizes satisfied voters).

use crate::apportion::{as_party_list, PartyListCheck, PartyStructure};
use crate::flow::{min_cost_flow, FlowNetwork, FlowOutcome};
use crate::model::{Committee, ElectionInstance, TieOrder};
use crate::rat::rat_usize;
use crate::subsets::{ensure_enumerable, KSubsets, ENUMERATION_CAP};
use crate::thiele::{expand_seat_vectors, optimal_seat_vectors};
use crate::Error;

/// A balanced voter-to-member assignment witnessing a Monroe score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonroeAssignment {
    /// Assigned committee member per voter.
    pub representative: Vec<usize>,
    /// Whether the voter approves her representative.
    pub satisfied: Vec<bool>,
}

impl MonroeAssignment {
    pub fn satisfied_count(&self) -> usize {
        self.satisfied.iter().filter(|&&s| s).count()
    }

    /// Checks the balancedness requirement for the given committee.
    pub fn is_balanced(&self, inst: &ElectionInstance, committee: &Committee) -> bool {
        let n = inst.num_voters();
        let k = inst.committee_size();
        committee.iter().all(|c| {
            let assigned = self.representative.iter().filter(|&&r| r == c).count();
            assigned >= n / k && assigned <= n.div_ceil(k)
        })
    }
}

/// Maximum number of voters satisfiable by a balanced assignment to `W`,
/// with a witnessing optimal assignment.
pub fn monroe_score(inst: &ElectionInstance, committee: &Committee) -> (usize, MonroeAssignment) {
    let n = inst.num_voters();
    let k = inst.committee_size();
    debug_assert_eq!(committee.len(), k);
    let members: Vec<usize> = committee.iter().collect();

    // Nodes: 0 source, 1..=k members, k+1..=k+n voters, k+n+1 sink.
    let source = 0;
    let sink = k + n + 1;
    let mut net = FlowNetwork::new(k + n + 2, source, sink);
    for (j, _) in members.iter().enumerate() {
        net.arc(source, 1 + j, n.div_ceil(k) as u64, (n / k) as u64, 0);
    }
    for (j, &c) in members.iter().enumerate() {
        for v in 0..n {
            let cost = if inst.approves(v, c) { -1 } else { 0 };
            net.arc(1 + j, k + 1 + v, 1, 0, cost);
        }
    }
    for v in 0..n {
        net.arc(k + 1 + v, sink, 1, 0, 0);
    }

    match min_cost_flow(&net, n as u64) {
        FlowOutcome::Flow { arc_flows, cost } => {
            let mut representative = vec![usize::MAX; n];
            // Member-to-voter arcs start after the k source arcs.
            for (j, &c) in members.iter().enumerate() {
                for v in 0..n {
                    let arc_idx = k + j * n + v;
                    if arc_flows[arc_idx] == 1 {
                        representative[v] = c;
                    }
                }
            }
            debug_assert!(representative.iter().all(|&r| r != usize::MAX));
            let satisfied: Vec<bool> = (0..n)
                .map(|v| inst.approves(v, representative[v]))
                .collect();
            let assignment = MonroeAssignment {
                representative,
                satisfied,
            };
            debug_assert!(assignment.is_balanced(inst, committee));
            debug_assert_eq!(assignment.satisfied_count() as i64, -cost);
            ((-cost) as usize, assignment)
        }
        FlowOutcome::Infeasible => unreachable!("a balanced assignment always exists"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonroeExact {
    pub committees: Vec<Committee>,
    pub score: usize,
}

/// All committees with maximum Monroe score.
pub fn monroe_exact(inst: &ElectionInstance) -> Result<MonroeExact, Error> {
    if let PartyListCheck::Parties(ps) = as_party_list(inst) {
        if ps.covers_all_candidates(inst) && ps.parties.iter().all(|p| !p.candidates.is_empty()) {
            return Ok(party_list_monroe(inst, &ps));
        }
    }
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    let mut best_score = 0usize;
    let mut best: Vec<Committee> = Vec::new();
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        let (score, _) = monroe_score(inst, &committee);
        if score > best_score || best.is_empty() {
            best_score = score;
            best = vec![committee];
        } else if score == best_score {
            best.push(committee);
        }
    }
    Ok(MonroeExact {
        committees: best,
        score: best_score,
    })
}

/// On party-list profiles the Monroe score depends only on per-party seat
/// counts: a party with `s` seats satisfies `min(voters, capacity)` of its
/// supporters, where the capacity distributes the oversized groups among
/// the seats.
fn party_list_monroe(inst: &ElectionInstance, structure: &PartyStructure) -> MonroeExact {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let small = n / k;
    let oversized = n - small * k; // this many groups hold one extra voter
    let party_sizes: Vec<usize> = structure
        .parties
        .iter()
        .filter(|p| !p.candidates.is_empty())
        .map(|p| p.voters.len())
        .collect();
    let score_of = |seats: &[usize]| -> crate::rat::Rat {
        // With all groups at the small size, party i satisfies
        // min(voters_i, s_i * small). Each oversized group adds one unit of
        // capacity to one party; a unit helps exactly when the party still
        // has an unserved supporter, capped at one unit per seat.
        let base: usize = seats
            .iter()
            .zip(&party_sizes)
            .map(|(&s, &voters)| voters.min(s * small))
            .sum();
        let slack: usize = seats
            .iter()
            .zip(&party_sizes)
            .map(|(&s, &voters)| voters.saturating_sub(s * small).min(s))
            .sum();
        rat_usize(base + slack.min(oversized))
    };
    let (score, vectors) = optimal_seat_vectors(structure, k, score_of);
    let mut committees = expand_seat_vectors(structure, &vectors);
    committees.sort();
    use num::ToPrimitive;
    MonroeExact {
        committees,
        score: score.to_integer().to_usize().expect("count"),
    }
}

/// One greedy round: the chosen candidate, its assigned voter group and
/// the group-size cap for the round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyMonroeRound {
    pub candidate: usize,
    pub group: Vec<usize>,
    pub cap: usize,
    /// Candidates that tied for the round's maximal support.
    pub tied_candidates: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyMonroeOutcome {
    pub committee: Committee,
    pub rounds: Vec<GreedyMonroeRound>,
}

impl GreedyMonroeOutcome {
    /// Number of voters assigned to a representative they approve.
    pub fn satisfied_count(&self) -> usize {
        self.rounds.iter().map(|r| r.group.len()).sum()
    }
}

/// Greedy Monroe: in each of `k` rounds, picks the candidate approved by
/// the most not-yet-assigned voters (ties by candidate priority) and
/// assigns up to the round's cap of its unassigned supporters (by voter
/// priority). Group caps follow the balancedness pattern: the first
/// `n mod k` rounds may take `ceil(n/k)` voters, the rest `floor(n/k)`.
///
/// When no remaining candidate has unassigned support, the seat is filled
/// purely by tie order with an empty group.
pub fn greedy_monroe(inst: &ElectionInstance, tie: &TieOrder) -> GreedyMonroeOutcome {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let small = n / k;
    let oversized = n - small * k;
    let mut assigned = vec![false; n];
    let mut chosen: Vec<usize> = Vec::new();
    let mut rounds = Vec::new();
    for round in 0..k {
        let cap = if round < oversized { small + 1 } else { small };
        let mut best: Option<(usize, usize)> = None;
        for c in 0..inst.num_candidates() {
            if chosen.contains(&c) {
                continue;
            }
            let support = inst
                .supporters(c)
                .iter()
                .filter(|&&v| !assigned[v])
                .count();
            let better = match best {
                None => true,
                Some((bc, bs)) => {
                    support > bs || (support == bs && tie.prefers_candidate(c, bc))
                }
            };
            if better {
                best = Some((c, support));
            }
        }
        let (candidate, support) = best.expect("k <= m leaves candidates");
        let tied_candidates: Vec<usize> = (0..inst.num_candidates())
            .filter(|&c| !chosen.contains(&c) && c != candidate)
            .filter(|&c| {
                inst.supporters(c).iter().filter(|&&v| !assigned[v]).count() == support
            })
            .collect();
        let unassigned_supporters: Vec<usize> = inst
            .supporters(candidate)
            .iter()
            .copied()
            .filter(|&v| !assigned[v])
            .collect();
        let mut group = tie.voters_by_priority(&unassigned_supporters);
        group.truncate(cap);
        group.sort_unstable();
        for &v in &group {
            assigned[v] = true;
        }
        chosen.push(candidate);
        rounds.push(GreedyMonroeRound {
            candidate,
            group,
            cap,
            tied_candidates,
        });
    }
    GreedyMonroeOutcome {
        committee: Committee::new(chosen),
        rounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::parse_profile;

    fn steering_committee() -> ElectionInstance {
        let text = "7 4\nnames: a b c d e f g\n3 * 0 1\n3 * 0 2\n2 * 0 3\n1 2 5\n4\n5\n6\n";
        parse_profile(text).unwrap()
    }

    #[test]
    fn score_of_named_committee() {
        let inst = steering_committee();
        let (score, assignment) = monroe_score(&inst, &Committee::new(vec![0, 1, 2, 4]));
        assert_eq!(score, 10);
        assert!(assignment.is_balanced(&inst, &Committee::new(vec![0, 1, 2, 4])));
        assert_eq!(assignment.satisfied_count(), 10);
    }

    #[test]
    fn six_optimal_committees() {
        let inst = steering_committee();
        let out = monroe_exact(&inst).unwrap();
        assert_eq!(out.score, 10);
        assert_eq!(out.committees.len(), 6);
        assert!(out.committees.contains(&Committee::new(vec![0, 1, 2, 4])));
    }

    #[test]
    fn single_voter_single_seat() {
        let inst = parse_profile("2 1\n1\n").unwrap();
        let (score, _) = monroe_score(&inst, &Committee::new(vec![1]));
        assert_eq!(score, 1);
        let (score, _) = monroe_score(&inst, &Committee::new(vec![0]));
        assert_eq!(score, 0);
    }

    #[test]
    fn greedy_rounds_on_steering_committee() {
        let inst = steering_committee();
        let out = greedy_monroe(&inst, &TieOrder::default_for(&inst));
        assert_eq!(out.committee, Committee::new(vec![0, 2, 3, 5]));
        assert_eq!(out.rounds[0].candidate, 0);
        assert_eq!(out.rounds[0].group, vec![0, 1, 2]);
        assert_eq!(out.rounds[1].candidate, 2);
        assert_eq!(out.rounds[1].group, vec![3, 4, 5]);
        assert_eq!(out.rounds[2].candidate, 3);
        assert_eq!(out.rounds[2].group, vec![6, 7]);
        assert_eq!(out.rounds[3].candidate, 5);
        assert_eq!(out.rounds[3].group, vec![8, 10]);
    }

    #[test]
    fn greedy_each_voter_own_candidate() {
        let inst = parse_profile("3 3\n0\n1\n2\n").unwrap();
        let out = greedy_monroe(&inst, &TieOrder::default_for(&inst));
        assert_eq!(out.committee, Committee::new(vec![0, 1, 2]));
        assert!(out.rounds.iter().all(|r| r.group.len() == 1));
    }

    #[test]
    fn greedy_assigns_by_voter_priority() {
        // Candidate 0 has four supporters but room for two; the voter
        // priority decides who joins the group.
        let inst = parse_profile("2 2\n4 * 0\n").unwrap();
        let reversed =
            TieOrder::new(&[0, 1], &[3, 2, 1, 0]).unwrap();
        let out = greedy_monroe(&inst, &reversed);
        assert_eq!(out.rounds[0].group, vec![2, 3]);
        let default = greedy_monroe(&inst, &TieOrder::default_for(&inst));
        assert_eq!(default.rounds[0].group, vec![0, 1]);
    }

    #[test]
    fn greedy_fills_unsupported_seats_by_tie_order() {
        let inst = parse_profile("3 2\n2 * 0\n").unwrap();
        let out = greedy_monroe(&inst, &TieOrder::default_for(&inst));
        assert_eq!(out.committee, Committee::new(vec![0, 1]));
        assert!(out.rounds[1].group.is_empty());
    }

    #[test]
    fn party_list_path_matches_flow_path() {
        // 7 * party {0,1,2}, 5 * party {3,4,5}; k = 3, n = 12.
        let inst = parse_profile("6 3\n7 * 0 1 2\n5 * 3 4 5\n").unwrap();
        let fast = monroe_exact(&inst).unwrap();
        // Recompute by enumeration + flow.
        let mut best_score = 0usize;
        let mut best = Vec::new();
        for members in KSubsets::new(6, 3) {
            let committee = Committee::new(members);
            let (score, _) = monroe_score(&inst, &committee);
            if score > best_score || best.is_empty() {
                best_score = score;
                best = vec![committee];
            } else if score == best_score {
                best.push(committee);
            }
        }
        assert_eq!(fast.score, best_score);
        assert_eq!(fast.committees, best);
    }
}
