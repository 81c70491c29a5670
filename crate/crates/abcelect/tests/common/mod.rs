//! Shared test support: seeded instance generators and independent
//! brute-force oracles. The oracles deliberately take different routes
//! than the library (voter-subset bitmasks, exhaustive assignments,
//! vertex enumeration) so agreement is meaningful.

#![allow(dead_code)]

use abcelect::apportion::{
    as_party_list, dhondt, largest_remainder, to_apportionment, ApportionmentInstance,
    PartyListCheck, PartyStructure,
};
use abcelect::model::{Committee, ElectionInstance};
use abcelect::rat::{frac_usize, Rat};
use abcelect::subsets::KSubsets;
use abcelect::thiele::{thiele_score, ThieleWeights};
use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random instance with `1..=max_n` voters, `1..=max_m` candidates and a
/// feasible committee size up to `max_k`. Ballots pick each candidate with
/// probability ~2/5; empty ballots are re-rolled unless allowed.
pub fn random_instance(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_m: usize,
    max_k: usize,
    allow_empty_ballots: bool,
) -> ElectionInstance {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(1..=max_m);
    let k = rng.gen_range(1..=max_k.min(m));
    let mut ballots = Vec::with_capacity(n);
    for _ in 0..n {
        loop {
            let ballot: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.4)).collect();
            if !ballot.is_empty() || (allow_empty_ballots && rng.gen_bool(0.5)) {
                ballots.push(ballot);
                break;
            }
        }
    }
    ElectionInstance::new(m, k, ballots, None).expect("generated instance is valid")
}

/// A party-list instance: `p` disjoint parties, each with exactly `k`
/// candidates, each voter approving her party's full slate.
pub struct PartyListSample {
    pub inst: ElectionInstance,
    pub structure: PartyStructure,
    pub apportionment: ApportionmentInstance,
}

/// Draws a party-list instance suitable for deterministic seat-count
/// comparisons: divisor and remainder ties are rejected, as are instances
/// whose winner sets would blow up when expanded from seat vectors.
pub fn random_party_list(
    rng: &mut ChaCha8Rng,
    max_p: usize,
    max_k: usize,
    divisible: bool,
) -> PartyListSample {
    loop {
        let p = rng.gen_range(1..=max_p);
        let k = rng.gen_range(1..=max_k);
        let mut votes: Vec<u64> = (0..p).map(|_| rng.gen_range(1..=12)).collect();
        if divisible {
            let total: u64 = votes.iter().sum();
            let remainder = (total % k as u64) as usize;
            if remainder != 0 {
                votes[p - 1] += (k - remainder) as u64;
            }
        }
        let mut ballots = Vec::new();
        for (party, &count) in votes.iter().enumerate() {
            let slate: Vec<usize> = (party * k..(party + 1) * k).collect();
            for _ in 0..count {
                ballots.push(slate.clone());
            }
        }
        let inst = match ElectionInstance::new(p * k, k, ballots, None) {
            Ok(inst) => inst,
            Err(_) => continue,
        };
        let structure = match as_party_list(&inst) {
            PartyListCheck::Parties(ps) => ps,
            PartyListCheck::NotPartyList { .. } => unreachable!("slates are disjoint"),
        };
        let apportionment = to_apportionment(&structure, k).expect("votes are positive");

        // Reject tie-prone instances: ties make seat counts depend on
        // the tie order, which differs per rule.
        let dh = dhondt(&apportionment);
        if dh.tied_rounds() > 0 {
            continue;
        }
        let lrm = largest_remainder(&apportionment);
        if lrm.rounds.iter().any(|r| r.tied) {
            continue;
        }
        if divisible && greedy_support_tie(&votes, k) {
            continue;
        }
        // Keep winner-set expansions manageable.
        let expansion: u128 = dh
            .seats
            .iter()
            .map(|&s| binomial_u128(k, s))
            .product();
        if expansion > 20_000 {
            continue;
        }
        return PartyListSample {
            inst,
            structure,
            apportionment,
        };
    }
}

/// Simulates the per-round support counts of a greedy quota-filling pass
/// and reports whether any round had a cross-party tie (only meaningful
/// when `k` divides the vote total).
fn greedy_support_tie(votes: &[u64], k: usize) -> bool {
    let total: u64 = votes.iter().sum();
    let quota = total / k as u64;
    let mut remaining: Vec<u64> = votes.to_vec();
    for _ in 0..k {
        let best = *remaining.iter().max().unwrap();
        if remaining.iter().filter(|&&r| r == best).count() > 1 {
            return true;
        }
        let winner = remaining.iter().position(|&r| r == best).unwrap();
        remaining[winner] = remaining[winner].saturating_sub(quota);
    }
    false
}

fn binomial_u128(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result * (m - i) as u128 / (i + 1) as u128;
    }
    result
}

/// Per-ballot recount of representation counts.
pub fn welfare_oracle(inst: &ElectionInstance, committee: &Committee) -> Vec<usize> {
    (0..inst.num_voters())
        .map(|v| {
            inst.ballot(v)
                .iter()
                .filter(|&&c| committee.members().contains(&c))
                .count()
        })
        .collect()
}

/// Exhaustive balanced-assignment search for the Monroe score.
pub fn monroe_brute(inst: &ElectionInstance, committee: &Committee) -> usize {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let members: Vec<usize> = committee.iter().collect();
    let floor = n / k;
    let ceil = n.div_ceil(k);

    fn search(
        inst: &ElectionInstance,
        members: &[usize],
        counts: &mut Vec<usize>,
        voter: usize,
        satisfied: usize,
        floor: usize,
        ceil: usize,
        best: &mut usize,
    ) {
        let n = inst.num_voters();
        if voter == n {
            if counts.iter().all(|&c| c >= floor) {
                *best = (*best).max(satisfied);
            }
            return;
        }
        // Feasibility: the remaining voters must be able to top every
        // member up to the floor.
        let deficit: usize = counts.iter().map(|&c| floor.saturating_sub(c)).sum();
        if deficit > n - voter {
            return;
        }
        for (j, &c) in members.iter().enumerate() {
            if counts[j] == ceil {
                continue;
            }
            counts[j] += 1;
            let gained = usize::from(inst.approves(voter, c));
            search(
                inst,
                members,
                counts,
                voter + 1,
                satisfied + gained,
                floor,
                ceil,
                best,
            );
            counts[j] -= 1;
        }
    }

    let mut best = 0;
    let mut counts = vec![0usize; members.len()];
    search(inst, &members, &mut counts, 0, 0, floor, ceil, &mut best);
    best
}

fn voters_of_mask(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

fn common_candidates(inst: &ElectionInstance, voters: &[usize]) -> Vec<usize> {
    (0..inst.num_candidates())
        .filter(|&c| voters.iter().all(|&v| inst.approves(v, c)))
        .collect()
}

fn group_large_enough(size: usize, level: usize, n: usize, k: usize) -> bool {
    // |V| >= level * n / k, compared exactly by cross-multiplication.
    size * k >= level * n
}

/// Voter-subset enumeration oracle for justified representation.
pub fn jr_oracle_satisfied(inst: &ElectionInstance, committee: &Committee) -> bool {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let welfare = welfare_oracle(inst, committee);
    for mask in 1u32..(1 << n) {
        let voters = voters_of_mask(mask, n);
        if !group_large_enough(voters.len(), 1, n, k) {
            continue;
        }
        if common_candidates(inst, &voters).is_empty() {
            continue;
        }
        if voters.iter().all(|&v| welfare[v] == 0) {
            return false;
        }
    }
    true
}

/// Voter-subset enumeration oracle for extended justified representation.
pub fn ejr_oracle_satisfied(inst: &ElectionInstance, committee: &Committee) -> bool {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let welfare = welfare_oracle(inst, committee);
    for mask in 1u32..(1 << n) {
        let voters = voters_of_mask(mask, n);
        let common = common_candidates(inst, &voters);
        for level in 1..=k {
            if common.len() >= level
                && group_large_enough(voters.len(), level, n, k)
                && voters.iter().all(|&v| welfare[v] < level)
            {
                return false;
            }
        }
    }
    true
}

/// Voter-subset enumeration oracle for proportional justified
/// representation.
pub fn pjr_oracle_satisfied(inst: &ElectionInstance, committee: &Committee) -> bool {
    let n = inst.num_voters();
    let k = inst.committee_size();
    for mask in 1u32..(1 << n) {
        let voters = voters_of_mask(mask, n);
        let common = common_candidates(inst, &voters);
        let union_in_committee = committee
            .iter()
            .filter(|&c| voters.iter().any(|&v| inst.approves(v, c)))
            .count();
        for level in 1..=k {
            if common.len() >= level
                && group_large_enough(voters.len(), level, n, k)
                && union_in_committee < level
            {
                return false;
            }
        }
    }
    true
}

/// Full (V, T) double-loop oracle for exact-core deviations.
pub fn core_oracle_has_deviation(inst: &ElectionInstance, committee: &Committee) -> bool {
    let n = inst.num_voters();
    let m = inst.num_candidates();
    let k = inst.committee_size();
    let welfare = welfare_oracle(inst, committee);
    for voter_mask in 1u32..(1 << n) {
        let voters = voters_of_mask(voter_mask, n);
        for alt_mask in 1u32..(1 << m) {
            let alternatives: Vec<usize> =
                (0..m).filter(|&c| alt_mask & (1 << c) != 0).collect();
            // |T|/k <= |V|/n, by cross-multiplication.
            if alternatives.len() * n > voters.len() * k {
                continue;
            }
            let all_gain = voters.iter().all(|&v| {
                let gained = inst
                    .ballot(v)
                    .iter()
                    .filter(|c| alternatives.contains(c))
                    .count();
                gained > welfare[v]
            });
            if all_gain {
                return true;
            }
        }
    }
    false
}

/// Minimal average representation over cohesive groups, by full voter
/// subset enumeration.
pub fn proportionality_degree_oracle(
    inst: &ElectionInstance,
    committee: &Committee,
    level: usize,
) -> Option<Rat> {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let welfare = welfare_oracle(inst, committee);
    let mut minimum: Option<Rat> = None;
    for mask in 1u32..(1 << n) {
        let voters = voters_of_mask(mask, n);
        if !group_large_enough(voters.len(), level, n, k) {
            continue;
        }
        if common_candidates(inst, &voters).len() < level {
            continue;
        }
        let total: usize = voters.iter().map(|&v| welfare[v]).sum();
        let average = if total == 0 {
            Rat::zero()
        } else {
            frac_usize(total, voters.len())
        };
        if minimum.as_ref().is_none_or(|m| average < *m) {
            minimum = Some(average);
        }
    }
    minimum
}

/// Unpruned enumeration of all Thiele maximizers.
pub fn thiele_brute(
    inst: &ElectionInstance,
    weights: &ThieleWeights,
) -> (Rat, Vec<Committee>) {
    let mut best_score: Option<Rat> = None;
    let mut best: Vec<Committee> = Vec::new();
    for members in KSubsets::new(inst.num_candidates(), inst.committee_size()) {
        let committee = Committee::new(members);
        let score = thiele_score(inst, &committee, weights);
        match &best_score {
            Some(b) if *b > score => {}
            Some(b) if *b == score => best.push(committee),
            _ => {
                best_score = Some(score);
                best = vec![committee];
            }
        }
    }
    (best_score.unwrap(), best)
}

/// Seat counts of a committee per party, to compare with apportionment.
pub fn seat_counts(structure: &PartyStructure, committee: &Committee) -> Vec<usize> {
    structure.seat_counts(committee)
}
