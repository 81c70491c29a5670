//! Load-balancing and budget-based rules.
//!
//! Seating a candidate costs one unit, shouldered by its approvers. The
//! sequential rule keeps every voter's accumulated load as low as possible
//! round by round; the lexmin variant minimizes the sorted load vector
//! globally; the two-phase budget rule hands each voter `k/n` upfront and
//! buys the cheapest affordable candidates, completing the committee with
//! the sequential rule on the budgets already spent. Priceability asks
//! whether a committee can be supported by any uniform budget at all.

use crate::apportion::{as_party_list, PartyListCheck, PartyStructure};
use crate::lp::{lp_solve, Direction, LinearProgram, LpOutcome, Rel};
use crate::model::{Committee, ElectionInstance, TieOrder};
use crate::rat::{frac_usize, rat_usize, Rat};
use crate::subsets::{ensure_enumerable, KSubsets, ENUMERATION_CAP};
use crate::thiele::{expand_seat_vectors, for_each_seat_vector};
use crate::Error;
use num::{One, Zero};

/// One sequential round: the seated candidate and the load its approvers
/// end up with. `new_load` is absent for seats filled purely by tie order
/// (possible only when every remaining candidate is approved by nobody).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhragmenRound {
    pub candidate: usize,
    pub new_load: Option<Rat>,
    pub loads: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqPhragmenOutcome {
    pub committee: Committee,
    pub rounds: Vec<PhragmenRound>,
    pub final_loads: Vec<Rat>,
}

/// Phragmén's sequential rule from zero starting loads.
pub fn seq_phragmen(inst: &ElectionInstance, tie: &TieOrder) -> SeqPhragmenOutcome {
    seq_phragmen_from(
        inst,
        tie,
        vec![Rat::zero(); inst.num_voters()],
        &[],
        inst.committee_size(),
    )
}

/// The sequential rule continued from given per-voter loads with some
/// candidates already seated. Each round seats the candidate minimizing
/// `(1 + sum of approver loads) / #approvers` and lifts its approvers to
/// that load. Candidates without approvers are skipped; if nothing else
/// remains, seats are filled by tie order with loads unchanged.
pub fn seq_phragmen_from(
    inst: &ElectionInstance,
    tie: &TieOrder,
    initial_loads: Vec<Rat>,
    already_seated: &[usize],
    seats_to_fill: usize,
) -> SeqPhragmenOutcome {
    let mut loads = initial_loads;
    let mut seated: Vec<usize> = already_seated.to_vec();
    let mut rounds = Vec::new();
    for _ in 0..seats_to_fill {
        let mut best: Option<(usize, Rat)> = None;
        for c in 0..inst.num_candidates() {
            if seated.contains(&c) || inst.supporters(c).is_empty() {
                continue;
            }
            let supporter_load: Rat = inst.supporters(c).iter().map(|&v| &loads[v]).sum();
            let new_load = (Rat::one() + supporter_load) / rat_usize(inst.approval_count(c));
            let better = match &best {
                None => true,
                Some((bc, bl)) => {
                    new_load < *bl || (new_load == *bl && tie.prefers_candidate(c, *bc))
                }
            };
            if better {
                best = Some((c, new_load));
            }
        }
        match best {
            Some((candidate, new_load)) => {
                for &v in inst.supporters(candidate) {
                    loads[v] = new_load.clone();
                }
                seated.push(candidate);
                rounds.push(PhragmenRound {
                    candidate,
                    new_load: Some(new_load),
                    loads: loads.clone(),
                });
            }
            None => {
                // Only unapproved candidates remain.
                let candidate = (0..inst.num_candidates())
                    .filter(|c| !seated.contains(c))
                    .min_by_key(|&c| tie.candidate_rank(c))
                    .expect("k <= m");
                seated.push(candidate);
                rounds.push(PhragmenRound {
                    candidate,
                    new_load: None,
                    loads: loads.clone(),
                });
            }
        }
    }
    SeqPhragmenOutcome {
        committee: Committee::new(seated),
        rounds,
        final_loads: loads,
    }
}

/// A valid split of each committee member's unit cost among its approvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadDistribution {
    /// Total load carried by each voter.
    pub voter_loads: Vec<Rat>,
    /// Per committee member (aligned with the committee's member order):
    /// the voters paying for it and their shares.
    pub member_shares: Vec<Vec<(usize, Rat)>>,
}

impl LoadDistribution {
    /// Voter loads sorted descending.
    pub fn sorted_desc(&self) -> Vec<Rat> {
        let mut v = self.voter_loads.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn max_load(&self) -> Rat {
        self.voter_loads.iter().max().cloned().unwrap_or_default()
    }
}

/// The lexicographically minimal valid load distribution for a committee:
/// among all ways to split each member's unit cost over its approvers, the
/// one whose descending per-voter load vector is lexicographically
/// smallest. Fails when some member has no approver.
pub fn lexmin_loads(
    inst: &ElectionInstance,
    committee: &Committee,
) -> Result<LoadDistribution, Error> {
    for c in committee.iter() {
        if inst.supporters(c).is_empty() {
            return Err(Error::Infeasible(format!(
                "candidate {c} has no approvers, its cost cannot be distributed"
            )));
        }
    }
    let members: Vec<usize> = committee.iter().collect();
    let n = inst.num_voters();

    // Variables: one share per (member, approver) pair, then the bound z.
    let mut share_index: Vec<Vec<usize>> = Vec::with_capacity(members.len());
    let mut num_shares = 0usize;
    for &c in &members {
        let idxs: Vec<usize> = inst
            .supporters(c)
            .iter()
            .map(|_| {
                let i = num_shares;
                num_shares += 1;
                i
            })
            .collect();
        share_index.push(idxs);
    }
    let z = num_shares;
    let num_vars = num_shares + 1;

    let voter_rows = |inst: &ElectionInstance| -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (mi, &c) in members.iter().enumerate() {
            for (si, &v) in inst.supporters(c).iter().enumerate() {
                rows[v].push(share_index[mi][si]);
            }
        }
        rows
    };
    let per_voter_vars = voter_rows(inst);

    // Iterative exact minimax: fix the voters pinned at the current
    // maximum, then minimize the maximum over the rest.
    let mut fixed: Vec<Option<Rat>> = vec![None; n];
    loop {
        let unfixed: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
        if unfixed.is_empty() {
            break;
        }
        let build_base = |minimize_var: Option<usize>, cap: Option<&Rat>| -> LinearProgram {
            let mut lp = LinearProgram::with_vars(num_vars);
            for var in 0..num_shares {
                lp.bound_lower(var, Rat::zero());
            }
            lp.bound_lower(z, Rat::zero());
            // Unit cost per member.
            for idxs in &share_index {
                let mut coeffs = vec![Rat::zero(); num_vars];
                for &i in idxs {
                    coeffs[i] = Rat::one();
                }
                lp.constraint(coeffs, Rel::Eq, Rat::one());
            }
            for v in 0..n {
                let mut coeffs = vec![Rat::zero(); num_vars];
                for &i in &per_voter_vars[v] {
                    coeffs[i] = Rat::one();
                }
                match &fixed[v] {
                    Some(value) => lp.constraint(coeffs, Rel::Eq, value.clone()),
                    None => {
                        // load_v <= z (or <= explicit cap when probing).
                        match cap {
                            None => {
                                coeffs[z] = -Rat::one();
                                lp.constraint(coeffs, Rel::Le, Rat::zero());
                            }
                            Some(bound) => lp.constraint(coeffs, Rel::Le, bound.clone()),
                        }
                    }
                }
            }
            if let Some(var) = minimize_var {
                let mut obj = vec![Rat::zero(); num_vars];
                obj[var] = Rat::one();
                lp.objective(obj, Direction::Minimize);
            }
            lp
        };

        // Smallest achievable maximum among unfixed voters.
        let lp = build_base(Some(z), None);
        let level = match lp_solve(&lp) {
            LpOutcome::Optimal { value, .. } => value,
            _ => unreachable!("a valid distribution exists once members have approvers"),
        };

        // Probe each unfixed voter: can its load stay below the level in
        // some distribution where nobody exceeds it?
        let mut to_pin = Vec::new();
        for &v in &unfixed {
            let mut probe = build_base(None, Some(&level));
            let mut obj = vec![Rat::zero(); num_vars];
            for &i in &per_voter_vars[v] {
                obj[i] = Rat::one();
            }
            probe.objective(obj, Direction::Minimize);
            let minimum = match lp_solve(&probe) {
                LpOutcome::Optimal { value, .. } => value,
                _ => unreachable!("level is achievable"),
            };
            if minimum >= level {
                to_pin.push(v);
            }
        }
        debug_assert!(!to_pin.is_empty(), "each round pins at least one voter");
        for v in to_pin {
            fixed[v] = Some(level.clone());
        }
    }

    // Recover a witnessing distribution for the fixed loads.
    let mut lp = LinearProgram::with_vars(num_vars);
    for var in 0..num_shares {
        lp.bound_lower(var, Rat::zero());
    }
    lp.bound_lower(z, Rat::zero());
    for idxs in &share_index {
        let mut coeffs = vec![Rat::zero(); num_vars];
        for &i in idxs {
            coeffs[i] = Rat::one();
        }
        lp.constraint(coeffs, Rel::Eq, Rat::one());
    }
    for v in 0..n {
        let mut coeffs = vec![Rat::zero(); num_vars];
        for &i in &per_voter_vars[v] {
            coeffs[i] = Rat::one();
        }
        lp.constraint(coeffs, Rel::Eq, fixed[v].clone().unwrap());
    }
    let assignment = match lp_solve(&lp) {
        LpOutcome::Optimal { assignment, .. } => assignment,
        _ => unreachable!("the pinned loads are feasible by construction"),
    };
    let member_shares: Vec<Vec<(usize, Rat)>> = members
        .iter()
        .enumerate()
        .map(|(mi, &c)| {
            inst.supporters(c)
                .iter()
                .enumerate()
                .map(|(si, &v)| (v, assignment[share_index[mi][si]].clone()))
                .collect()
        })
        .collect();
    Ok(LoadDistribution {
        voter_loads: fixed.into_iter().map(Option::unwrap).collect(),
        member_shares,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexminOutcome {
    pub committees: Vec<Committee>,
    /// The optimal descending load vector shared by all winners.
    pub sorted_loads: Vec<Rat>,
}

/// All committees whose lexmin load vector is lexicographically minimal.
/// Committees containing unapproved candidates are considered only when no
/// fully-approved committee exists (fewer approved candidates than seats);
/// their comparison then ignores the unapprovable members.
pub fn lexmin_phragmen(inst: &ElectionInstance) -> Result<LexminOutcome, Error> {
    if let PartyListCheck::Parties(ps) = as_party_list(inst) {
        if ps.covers_all_candidates(inst) && ps.parties.iter().all(|p| !p.candidates.is_empty()) {
            return Ok(party_list_lexmin(inst, &ps));
        }
    }
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;

    // Stage 1: keep only committees with the fewest unapprovable members
    // and the smallest minimax load among those.
    let mut stage: Option<(usize, Rat, Vec<Committee>)> = None;
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        let unapproved = committee
            .iter()
            .filter(|&c| inst.supporters(c).is_empty())
            .count();
        let approved_part: Vec<usize> = committee
            .iter()
            .filter(|&c| !inst.supporters(c).is_empty())
            .collect();
        let max_load = if approved_part.is_empty() {
            Rat::zero()
        } else {
            minimax_load(inst, &approved_part)
        };
        let replace = match &stage {
            None => true,
            Some((bu, bl, _)) => {
                unapproved < *bu || (unapproved == *bu && max_load < *bl)
            }
        };
        if replace {
            stage = Some((unapproved, max_load, vec![committee]));
        } else {
            let (bu, bl, list) = stage.as_mut().unwrap();
            if unapproved == *bu && max_load == *bl {
                list.push(committee);
            }
        }
    }
    let (_, _, shortlist) = stage.expect("k <= m");

    // Stage 2: full lexicographic comparison within the shortlist.
    let mut best: Option<(Vec<Rat>, Vec<Committee>)> = None;
    for committee in shortlist {
        let approved_part: Vec<usize> = committee
            .iter()
            .filter(|&c| !inst.supporters(c).is_empty())
            .collect();
        let loads = if approved_part.is_empty() {
            vec![Rat::zero(); inst.num_voters()]
        } else {
            lexmin_loads(inst, &Committee::new(approved_part))?.sorted_desc()
        };
        match &mut best {
            None => best = Some((loads, vec![committee])),
            Some((best_loads, list)) => {
                if loads < *best_loads {
                    *best_loads = loads;
                    *list = vec![committee];
                } else if loads == *best_loads {
                    list.push(committee);
                }
            }
        }
    }
    let (sorted_loads, mut committees) = best.expect("shortlist is non-empty");
    committees.sort();
    Ok(LexminOutcome {
        committees,
        sorted_loads,
    })
}

/// Minimal achievable maximum voter load for a committee (all of whose
/// members must have approvers).
fn minimax_load(inst: &ElectionInstance, members: &[usize]) -> Rat {
    let n = inst.num_voters();
    let mut num_shares = 0usize;
    let mut share_index: Vec<Vec<usize>> = Vec::with_capacity(members.len());
    for &c in members {
        let idxs: Vec<usize> = inst
            .supporters(c)
            .iter()
            .map(|_| {
                let i = num_shares;
                num_shares += 1;
                i
            })
            .collect();
        share_index.push(idxs);
    }
    let z = num_shares;
    let mut lp = LinearProgram::with_vars(num_shares + 1);
    for var in 0..=num_shares {
        lp.bound_lower(var, Rat::zero());
    }
    for idxs in &share_index {
        let mut coeffs = vec![Rat::zero(); num_shares + 1];
        for &i in idxs {
            coeffs[i] = Rat::one();
        }
        lp.constraint(coeffs, Rel::Eq, Rat::one());
    }
    let mut per_voter: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (mi, &c) in members.iter().enumerate() {
        for (si, &v) in inst.supporters(c).iter().enumerate() {
            per_voter[v].push(share_index[mi][si]);
        }
    }
    for vars in per_voter.iter().filter(|vs| !vs.is_empty()) {
        let mut coeffs = vec![Rat::zero(); num_shares + 1];
        for &i in vars {
            coeffs[i] = Rat::one();
        }
        coeffs[z] = -Rat::one();
        lp.constraint(coeffs, Rel::Le, Rat::zero());
    }
    let mut obj = vec![Rat::zero(); num_shares + 1];
    obj[z] = Rat::one();
    lp.objective(obj, Direction::Minimize);
    match lp_solve(&lp) {
        LpOutcome::Optimal { value, .. } => value,
        _ => unreachable!("splitting each unit over its approvers is feasible"),
    }
}

/// On party-list profiles the lexmin distribution gives every supporter of
/// a party with `s` seats and `v` voters a load of `s/v`.
fn party_list_lexmin(inst: &ElectionInstance, structure: &PartyStructure) -> LexminOutcome {
    let k = inst.committee_size();
    let sizes: Vec<usize> = structure
        .parties
        .iter()
        .filter(|p| !p.candidates.is_empty())
        .map(|p| p.voters.len())
        .collect();
    let empty_party_voters: usize = structure
        .parties
        .iter()
        .filter(|p| p.candidates.is_empty())
        .map(|p| p.voters.len())
        .sum();
    let key_of = |seats: &[usize]| -> Vec<Rat> {
        let mut loads: Vec<Rat> = Vec::with_capacity(inst.num_voters());
        for (&s, &v) in seats.iter().zip(&sizes) {
            let load = frac_usize(s, v);
            loads.extend(std::iter::repeat_n(load, v));
        }
        loads.extend(std::iter::repeat_n(Rat::zero(), empty_party_voters));
        loads.sort_unstable_by(|a, b| b.cmp(a));
        loads
    };
    let caps: Vec<usize> = structure
        .parties
        .iter()
        .filter(|p| !p.candidates.is_empty())
        .map(|p| p.candidates.len())
        .collect();
    let mut best: Option<(Vec<Rat>, Vec<Vec<usize>>)> = None;
    for_each_seat_vector(&caps, k, &mut |seats| {
        let key = key_of(seats);
        match &mut best {
            None => best = Some((key, vec![seats.to_vec()])),
            Some((bk, list)) => {
                if key < *bk {
                    *bk = key;
                    *list = vec![seats.to_vec()];
                } else if key == *bk {
                    list.push(seats.to_vec());
                }
            }
        }
    });
    let (sorted_loads, vectors) = best.expect("capacities cover k");
    let mut committees = expand_seat_vectors(structure, &vectors);
    committees.sort();
    LexminOutcome {
        committees,
        sorted_loads,
    }
}

/// One buying round of the budget rule's first phase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleXRound {
    pub candidate: usize,
    /// The uniform per-voter price cap: approvers pay `min(price, budget)`.
    pub price: Rat,
    /// Non-zero payments charged this round.
    pub payments: Vec<(usize, Rat)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleXOutcome {
    pub committee: Committee,
    pub phase1: Vec<RuleXRound>,
    /// Sequential-rule rounds used to complete the committee, if any.
    pub phase2: Vec<PhragmenRound>,
    /// Budgets left after phase one.
    pub remaining_budgets: Vec<Rat>,
}

/// The two-phase budget rule. Every voter starts with `k/n`. While some
/// candidate's approvers jointly hold one unit, the candidate with the
/// smallest clearing price is bought (approvers pay up to the price, capped
/// by their budget). Once nothing is affordable, the committee is completed
/// by the sequential rule with starting loads `k/n - remaining budget`.
pub fn rule_x(inst: &ElectionInstance, tie: &TieOrder) -> RuleXOutcome {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let starting = frac_usize(k, n);
    let mut budgets = vec![starting.clone(); n];
    let mut chosen: Vec<usize> = Vec::new();
    let mut phase1 = Vec::new();

    while chosen.len() < k {
        let mut best: Option<(usize, Rat)> = None;
        for c in 0..inst.num_candidates() {
            if chosen.contains(&c) || inst.supporters(c).is_empty() {
                continue;
            }
            let pool: Rat = inst.supporters(c).iter().map(|&v| &budgets[v]).sum();
            if pool < Rat::one() {
                continue;
            }
            let price = clearing_price(inst.supporters(c), &budgets);
            let better = match &best {
                None => true,
                Some((bc, bp)) => price < *bp || (price == *bp && tie.prefers_candidate(c, *bc)),
            };
            if better {
                best = Some((c, price));
            }
        }
        let Some((candidate, price)) = best else {
            break;
        };
        let mut payments = Vec::new();
        for &v in inst.supporters(candidate) {
            let paid = budgets[v].clone().min(price.clone());
            if !paid.is_zero() {
                budgets[v] -= &paid;
                payments.push((v, paid));
            }
        }
        chosen.push(candidate);
        phase1.push(RuleXRound {
            candidate,
            price,
            payments,
        });
    }

    let remaining_budgets = budgets.clone();
    let phase2 = if chosen.len() < k {
        let initial_loads: Vec<Rat> = budgets.iter().map(|b| &starting - b).collect();
        let completion =
            seq_phragmen_from(inst, tie, initial_loads, &chosen, k - chosen.len());
        let rounds = completion.rounds;
        for r in &rounds {
            chosen.push(r.candidate);
        }
        rounds
    } else {
        Vec::new()
    };

    RuleXOutcome {
        committee: Committee::new(chosen),
        phase1,
        phase2,
        remaining_budgets,
    }
}

/// The smallest uniform price at which the supporters' capped payments sum
/// to one unit. Assumes the pooled budgets reach one.
fn clearing_price(supporters: &[usize], budgets: &[Rat]) -> Rat {
    let mut sorted: Vec<&Rat> = supporters.iter().map(|&v| &budgets[v]).collect();
    sorted.sort();
    let t = sorted.len();
    let mut prefix = Rat::zero();
    for (paying_full, budget) in sorted.iter().enumerate() {
        // Voters up to `paying_full` pay their whole budget, the rest pay
        // the price: prefix + (t - paying_full) * price = 1.
        let price = (Rat::one() - &prefix) / rat_usize(t - paying_full);
        if price <= **budget {
            return price;
        }
        prefix += *budget;
    }
    unreachable!("pooled budgets reach one unit")
}

/// A priceability witness: a uniform voter budget and per-voter payments
/// to the committee members they approve, such that every member collects
/// exactly one unit and no unelected candidate's supporters retain more
/// than one unit of spare budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PriceSystem {
    pub budget: Rat,
    /// Payments per voter: (committee member, amount), non-zero entries.
    pub payments: Vec<Vec<(usize, Rat)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PriceabilityCheck {
    Priceable(PriceSystem),
    NotPriceable,
}

/// Decides priceability of a committee by exact LP feasibility.
pub fn check_priceability(inst: &ElectionInstance, committee: &Committee) -> PriceabilityCheck {
    let n = inst.num_voters();
    // Variables: payment x_{v,c} for each voter and approved member, then
    // the budget p.
    let mut var_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // voter -> (member, var)
    let mut num_vars = 0usize;
    for v in 0..n {
        for &c in inst.ballot(v) {
            if committee.contains(c) {
                var_of[v].push((c, num_vars));
                num_vars += 1;
            }
        }
    }
    let p = num_vars;
    let total_vars = num_vars + 1;

    let mut lp = LinearProgram::with_vars(total_vars);
    for var in 0..num_vars {
        lp.bound_lower(var, Rat::zero());
        lp.bound_upper(var, Rat::one());
    }
    lp.bound_lower(p, Rat::zero());

    // Every voter spends at most her budget.
    for vars in var_of.iter() {
        let mut coeffs = vec![Rat::zero(); total_vars];
        for &(_, var) in vars {
            coeffs[var] = Rat::one();
        }
        coeffs[p] = -Rat::one();
        lp.constraint(coeffs, Rel::Le, Rat::zero());
    }
    // Every member collects exactly one unit.
    for c in committee.iter() {
        let mut coeffs = vec![Rat::zero(); total_vars];
        for vars in var_of.iter() {
            for &(member, var) in vars {
                if member == c {
                    coeffs[var] = Rat::one();
                }
            }
        }
        lp.constraint(coeffs, Rel::Eq, Rat::one());
    }
    // Supporters of an unelected candidate keep at most one unit combined.
    for c in 0..inst.num_candidates() {
        if committee.contains(c) || inst.supporters(c).is_empty() {
            continue;
        }
        let mut coeffs = vec![Rat::zero(); total_vars];
        for &v in inst.supporters(c) {
            coeffs[p] += Rat::one();
            for &(_, var) in &var_of[v] {
                coeffs[var] -= Rat::one();
            }
        }
        lp.constraint(coeffs, Rel::Le, Rat::one());
    }

    match lp_solve(&lp) {
        LpOutcome::Optimal { assignment, .. } => {
            let payments: Vec<Vec<(usize, Rat)>> = var_of
                .iter()
                .map(|vars| {
                    vars.iter()
                        .filter(|(_, var)| !assignment[*var].is_zero())
                        .map(|&(member, var)| (member, assignment[var].clone()))
                        .collect()
                })
                .collect();
            PriceabilityCheck::Priceable(PriceSystem {
                budget: assignment[p].clone(),
                payments,
            })
        }
        LpOutcome::Infeasible => PriceabilityCheck::NotPriceable,
        LpOutcome::Unbounded => unreachable!("feasibility problem"),
    }
}

/// Validates all five priceability conditions for a witness.
pub fn verify_price_system(
    inst: &ElectionInstance,
    committee: &Committee,
    system: &PriceSystem,
) -> bool {
    let mut collected: Vec<Rat> = vec![Rat::zero(); inst.num_candidates()];
    for (v, payments) in system.payments.iter().enumerate() {
        let mut spent = Rat::zero();
        for (c, amount) in payments {
            if *amount < Rat::zero() || !inst.approves(v, *c) || !committee.contains(*c) {
                return false;
            }
            collected[*c] += amount;
            spent += amount;
        }
        if spent > system.budget {
            return false;
        }
    }
    for c in committee.iter() {
        if collected[c] != Rat::one() {
            return false;
        }
    }
    for c in 0..inst.num_candidates() {
        if committee.contains(c) {
            continue;
        }
        let spare: Rat = inst
            .supporters(c)
            .iter()
            .map(|&v| {
                let spent: Rat = system.payments[v].iter().map(|(_, a)| a.clone()).sum();
                &system.budget - spent
            })
            .sum();
        if spare > Rat::one() {
            return false;
        }
    }
    true
}
