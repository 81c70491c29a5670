//! Committee-level axiom checkers with explicit witnesses.
//!
//! Every checker returns a certificate rather than a bare boolean: a
//! dominating committee, a cohesive group left unserved, a deviating
//! coalition with its preferred alternatives, a voter partition, or a
//! price system. Several of the underlying decision problems are hard in
//! general, so the checkers enumerate; the shared cap keeps this at desk
//! scale. Size thresholds such as `l*n/k` are compared as exact rationals
//! and never rounded.

use crate::flow::{min_cost_flow, FlowNetwork, FlowOutcome};
use crate::model::{
    dominates, sorted_intersection_size, welfare_vector, Committee, ElectionInstance,
};
use crate::rat::{ceil_to_usize, frac_usize, rat_usize, Rat};
use crate::subsets::{ensure_enumerable, KSubsets, ENUMERATION_CAP};
use crate::thiele::{make_weights, thiele_exact, WeightKind};
use crate::Error;
use num::Zero;

/// A group of voters jointly approving enough common candidates to deserve
/// `level` committee seats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohesiveGroup {
    pub voters: Vec<usize>,
    pub level: usize,
    /// Candidates approved by every group member (at least `level` many).
    pub common: Vec<usize>,
}

impl CohesiveGroup {
    /// Validates the size and common-approval requirements.
    pub fn is_valid(&self, inst: &ElectionInstance) -> bool {
        let size_ok = rat_usize(self.voters.len())
            >= rat_usize(self.level * inst.num_voters())
                / rat_usize(inst.committee_size());
        size_ok
            && self.common.len() >= self.level
            && self
                .voters
                .iter()
                .all(|&v| self.common.iter().all(|&c| inst.approves(v, c)))
    }
}

/// Outcome of the Pareto check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParetoCheck {
    Optimal,
    /// The lexicographically first committee dominating the input.
    DominatedBy(Committee),
}

/// Scans all committees for one that dominates `committee`.
pub fn check_pareto_optimal(
    inst: &ElectionInstance,
    committee: &Committee,
) -> Result<ParetoCheck, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    for members in KSubsets::new(m, k) {
        let rival = Committee::new(members);
        if dominates(inst, &rival, committee) {
            return Ok(ParetoCheck::DominatedBy(rival));
        }
    }
    Ok(ParetoCheck::Optimal)
}

/// True when, against every rival committee, a strict majority of voters
/// strictly prefers `committee`.
pub fn check_condorcet_committee(
    inst: &ElectionInstance,
    committee: &Committee,
) -> Result<bool, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    let welfare = welfare_vector(inst, committee);
    let n = inst.num_voters();
    for members in KSubsets::new(m, k) {
        let rival = Committee::new(members);
        if rival == *committee {
            continue;
        }
        let prefer = (0..n)
            .filter(|&v| {
                welfare[v] > sorted_intersection_size(inst.ballot(v), rival.members())
            })
            .count();
        if 2 * prefer <= n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First committee (lexicographically) beating all rivals by majority.
pub fn find_condorcet_committee(inst: &ElectionInstance) -> Result<Option<Committee>, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        if check_condorcet_committee(inst, &committee)? {
            return Ok(Some(committee));
        }
    }
    Ok(None)
}

/// A justified-representation violation: an unserved cohesive group of
/// level one and the candidate it agrees on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JrViolation {
    pub candidate: usize,
    pub group: CohesiveGroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JrCheck {
    Satisfied,
    Violated(JrViolation),
}

/// Justified representation: no candidate outside the committee is
/// approved by `n/k` or more voters who have no representative at all.
pub fn check_jr(inst: &ElectionInstance, committee: &Committee) -> JrCheck {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let threshold = frac_usize(n, k);
    let welfare = welfare_vector(inst, committee);
    for c in 0..inst.num_candidates() {
        if committee.contains(c) {
            continue;
        }
        let voters: Vec<usize> = inst
            .supporters(c)
            .iter()
            .copied()
            .filter(|&v| welfare[v] == 0)
            .collect();
        if rat_usize(voters.len()) >= threshold {
            return JrCheck::Violated(JrViolation {
                candidate: c,
                group: CohesiveGroup {
                    voters,
                    level: 1,
                    common: vec![c],
                },
            });
        }
    }
    JrCheck::Satisfied
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupCheck {
    Satisfied,
    Violated(CohesiveGroup),
}

/// Extended justified representation: every cohesive group of level `l`
/// must contain a voter with at least `l` representatives. The checker
/// enumerates candidate sets `T` of size `l`; the witness group is the set
/// of `T`-supporters all below `l` representatives.
pub fn check_ejr(inst: &ElectionInstance, committee: &Committee) -> Result<GroupCheck, Error> {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let welfare = welfare_vector(inst, committee);
    for level in 1..=k {
        let threshold = frac_usize(level * n, k);
        for common in KSubsets::new(inst.num_candidates(), level) {
            let deprived: Vec<usize> = (0..n)
                .filter(|&v| {
                    welfare[v] < level
                        && common.iter().all(|&c| inst.approves(v, c))
                })
                .collect();
            if rat_usize(deprived.len()) >= threshold {
                return Ok(GroupCheck::Violated(CohesiveGroup {
                    voters: deprived,
                    level,
                    common,
                }));
            }
        }
    }
    Ok(GroupCheck::Satisfied)
}

/// Proportional justified representation: for every cohesive group of
/// level `l`, the committee contains at least `l` candidates approved by
/// somebody in the group. Violating groups are found by shrinking the
/// supporter set of each candidate set `T` to the minimal admissible size,
/// over all subsets of that size.
pub fn check_pjr(inst: &ElectionInstance, committee: &Committee) -> Result<GroupCheck, Error> {
    let n = inst.num_voters();
    let k = inst.committee_size();
    for level in 1..=k {
        let threshold = frac_usize(level * n, k);
        let group_size = ceil_to_usize(&threshold);
        if group_size == 0 || group_size > n {
            continue;
        }
        for common in KSubsets::new(inst.num_candidates(), level) {
            let supporters: Vec<usize> = (0..n)
                .filter(|&v| common.iter().all(|&c| inst.approves(v, c)))
                .collect();
            if supporters.len() < group_size {
                continue;
            }
            // A superset of a violating group only enlarges the union, so
            // checking the minimal admissible size is enough.
            for picked in KSubsets::new(supporters.len(), group_size) {
                let voters: Vec<usize> = picked.into_iter().map(|i| supporters[i]).collect();
                let union_in_committee = committee
                    .iter()
                    .filter(|&c| voters.iter().any(|&v| inst.approves(v, c)))
                    .count();
                if union_in_committee < level {
                    return Ok(GroupCheck::Violated(CohesiveGroup {
                        voters,
                        level,
                        common,
                    }));
                }
            }
        }
    }
    Ok(GroupCheck::Satisfied)
}

/// For each level `l`, the smallest average number of representatives over
/// all cohesive groups of that level (`None` when no such group exists).
pub fn proportionality_degree(
    inst: &ElectionInstance,
    committee: &Committee,
) -> Result<Vec<Option<Rat>>, Error> {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let welfare = welfare_vector(inst, committee);
    let mut degrees = Vec::with_capacity(k);
    for level in 1..=k {
        let threshold = frac_usize(level * n, k);
        let group_size = ceil_to_usize(&threshold);
        let mut minimum: Option<Rat> = None;
        if group_size >= 1 && group_size <= n {
            for common in KSubsets::new(inst.num_candidates(), level) {
                let mut reps: Vec<usize> = (0..n)
                    .filter(|&v| common.iter().all(|&c| inst.approves(v, c)))
                    .map(|v| welfare[v])
                    .collect();
                if reps.len() < group_size {
                    continue;
                }
                // The minimizing group keeps the least-served supporters;
                // growing it only raises the average.
                reps.sort_unstable();
                let total: usize = reps[..group_size].iter().sum();
                let average = if total == 0 {
                    Rat::zero()
                } else {
                    frac_usize(total, group_size)
                };
                if minimum.as_ref().is_none_or(|m| average < *m) {
                    minimum = Some(average);
                }
            }
        }
        degrees.push(minimum);
    }
    Ok(degrees)
}

/// A coalition that prefers its own candidate set to the committee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDeviation {
    pub voters: Vec<usize>,
    pub alternatives: Vec<usize>,
}

/// Relaxation parameters for the core check; `default()` is the exact
/// core. A deviation needs `beta * |T|/k <= |V|/n`, and every deviating
/// voter must gain: `|A(i) ∩ T| > gamma * |A(i) ∩ W| + eta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreParams {
    pub gamma: Rat,
    pub eta: Rat,
    pub beta: Rat,
}

impl Default for CoreParams {
    fn default() -> Self {
        CoreParams {
            gamma: rat_usize(1),
            eta: Rat::zero(),
            beta: rat_usize(1),
        }
    }
}

/// Searches all candidate sets `T` up to size `k` for a deviation; the
/// deviating coalition is the full set of voters who strictly gain, which
/// is the best possible coalition for any given `T`. Returns the first
/// deviation in (size, lexicographic) order.
pub fn find_core_violation(
    inst: &ElectionInstance,
    committee: &Committee,
    params: &CoreParams,
) -> Result<Option<CoreDeviation>, Error> {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let welfare = welfare_vector(inst, committee);
    // A voter joins the coalition for T when her satisfaction in T strictly
    // exceeds this precomputed bar.
    let bars: Vec<Rat> = welfare
        .iter()
        .map(|&w| &params.gamma * rat_usize(w) + &params.eta)
        .collect();
    let counts: Vec<Rat> = (0..=inst.num_candidates()).map(rat_usize).collect();
    for size in 1..=k.min(inst.num_candidates()) {
        for alternatives in KSubsets::new(inst.num_candidates(), size) {
            let voters: Vec<usize> = (0..n)
                .filter(|&v| {
                    let gained = sorted_intersection_size(inst.ballot(v), &alternatives);
                    counts[gained] > bars[v]
                })
                .collect();
            if voters.is_empty() {
                continue;
            }
            let entitled =
                &params.beta * frac_usize(size, k) <= frac_usize(voters.len(), n);
            if entitled {
                return Ok(Some(CoreDeviation {
                    voters,
                    alternatives,
                }));
            }
        }
    }
    Ok(None)
}

/// A perfect-representation witness: `k` equal voter groups, each with its
/// own committee member approved by all group members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrPartition {
    /// (committee member, its voter group of size n/k).
    pub groups: Vec<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrCheck {
    Represented(PrPartition),
    Violated,
    /// Perfect representation is defined only when k divides n.
    NotApplicable,
}

/// Decides perfect representation via a constrained bipartite matching
/// (each member must absorb exactly n/k approving voters).
pub fn check_perfect_representation(inst: &ElectionInstance, committee: &Committee) -> PrCheck {
    let n = inst.num_voters();
    let k = inst.committee_size();
    if !n.is_multiple_of(k) {
        return PrCheck::NotApplicable;
    }
    let quota = (n / k) as u64;
    let members: Vec<usize> = committee.iter().collect();
    let source = 0;
    let sink = k + n + 1;
    let mut net = FlowNetwork::new(k + n + 2, source, sink);
    for j in 0..k {
        net.arc(source, 1 + j, quota, quota, 0);
    }
    let mut member_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k]; // (arc idx, voter)
    for (j, &c) in members.iter().enumerate() {
        for &v in inst.supporters(c) {
            member_arcs[j].push((net.arcs.len(), v));
            net.arc(1 + j, k + 1 + v, 1, 0, 0);
        }
    }
    for v in 0..n {
        net.arc(k + 1 + v, sink, 1, 0, 0);
    }
    match min_cost_flow(&net, n as u64) {
        FlowOutcome::Flow { arc_flows, .. } => {
            let groups: Vec<(usize, Vec<usize>)> = members
                .iter()
                .enumerate()
                .map(|(j, &c)| {
                    let voters: Vec<usize> = member_arcs[j]
                        .iter()
                        .filter(|&&(arc, _)| arc_flows[arc] == 1)
                        .map(|&(_, v)| v)
                        .collect();
                    (c, voters)
                })
                .collect();
            debug_assert!(groups.iter().all(|(_, g)| g.len() == n / k));
            PrCheck::Represented(PrPartition { groups })
        }
        FlowOutcome::Infeasible => PrCheck::Violated,
    }
}

/// First committee (lexicographically) admitting perfect representation.
pub fn exists_pr_committee(
    inst: &ElectionInstance,
) -> Result<Option<(Committee, PrPartition)>, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    if !inst.num_voters().is_multiple_of(k) {
        return Err(Error::Invalid(
            "perfect representation needs the committee size to divide the voter count".into(),
        ));
    }
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        if let PrCheck::Represented(partition) = check_perfect_representation(inst, &committee) {
            return Ok(Some((committee, partition)));
        }
    }
    Ok(None)
}

/// Instance-level efficiency ratios of a committee: its approval score
/// relative to the best achievable, and its voter coverage relative to the
/// best achievable.
pub fn ratios(inst: &ElectionInstance, committee: &Committee) -> Result<(Rat, Rat), Error> {
    let k = inst.committee_size();
    let welfare = welfare_vector(inst, committee);
    let av_score: usize = welfare.iter().sum();
    let coverage = welfare.iter().filter(|&&x| x > 0).count();

    // Best approval score: the k most approved candidates.
    let mut counts: Vec<usize> = (0..inst.num_candidates())
        .map(|c| inst.approval_count(c))
        .collect();
    counts.sort_unstable_by(|a, b| b.cmp(a));
    let best_av: usize = counts[..k].iter().sum();
    // Best coverage via exhaustive coverage maximization.
    let cc = thiele_exact(inst, &make_weights(WeightKind::Cc, k)?)?;
    let best_coverage = cc.score;

    let utilitarian = if best_av == 0 {
        rat_usize(1)
    } else {
        frac_usize(av_score, best_av)
    };
    let representation = if best_coverage.is_zero() {
        rat_usize(1)
    } else {
        rat_usize(coverage) / best_coverage
    };
    Ok((utilitarian, representation))
}

/// Verdict of the committee-monotonicity probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotonicityProbe {
    ChainHolds,
    /// The first committee size whose winner fails to contain the previous
    /// one, with both committees as evidence.
    BreaksAt {
        size: usize,
        smaller: Committee,
        larger: Committee,
    },
}

/// Runs a resolute rule for committee sizes `1..=max_size` and checks that
/// each winner contains its predecessor.
pub fn probe_committee_monotonicity(
    rule: &mut dyn FnMut(&ElectionInstance) -> Result<Committee, Error>,
    inst: &ElectionInstance,
    max_size: usize,
) -> Result<MonotonicityProbe, Error> {
    let mut previous: Option<Committee> = None;
    for size in 1..=max_size.min(inst.num_candidates()) {
        let winner = rule(&inst.with_committee_size(size)?)?;
        if let Some(prev) = &previous {
            if !prev.is_subset_of(&winner) {
                return Ok(MonotonicityProbe::BreaksAt {
                    size,
                    smaller: prev.clone(),
                    larger: winner,
                });
            }
        }
        previous = Some(winner);
    }
    Ok(MonotonicityProbe::ChainHolds)
}

/// An axiom check that only applies under structural preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability<T> {
    Applicable(T),
    NotApplicable(String),
}

/// Disjoint diversity: on a party-list instance, some winning committee
/// intersects each of the `min(p, k)` largest parties.
pub fn check_disjoint_diversity(
    inst: &ElectionInstance,
    winners: &[Committee],
) -> Applicability<bool> {
    use crate::apportion::{as_party_list, PartyListCheck};
    let structure = match as_party_list(inst) {
        PartyListCheck::Parties(ps) => ps,
        PartyListCheck::NotPartyList { .. } => {
            return Applicability::NotApplicable("profile is not a party-list profile".into())
        }
    };
    let mut parties: Vec<&crate::apportion::Party> = structure
        .parties
        .iter()
        .filter(|p| !p.candidates.is_empty())
        .collect();
    if parties.is_empty() {
        return Applicability::NotApplicable("no party approves any candidate".into());
    }
    parties.sort_by_key(|p| std::cmp::Reverse(p.voters.len()));
    let top = parties.len().min(inst.committee_size());
    let covered = winners.iter().any(|w| {
        parties[..top]
            .iter()
            .all(|party| party.candidates.iter().any(|&c| w.contains(c)))
    });
    Applicability::Applicable(covered)
}

/// Disjoint equality: when every candidate is approved at most once and at
/// least `k` candidates are approved, the winners must be exactly the
/// committees made of approved candidates.
pub fn check_disjoint_equality(
    inst: &ElectionInstance,
    winners: &[Committee],
) -> Applicability<bool> {
    let k = inst.committee_size();
    if (0..inst.num_candidates()).any(|c| inst.approval_count(c) > 1) {
        return Applicability::NotApplicable("some candidate is approved more than once".into());
    }
    let approved: Vec<usize> = (0..inst.num_candidates())
        .filter(|&c| inst.approval_count(c) == 1)
        .collect();
    if approved.len() < k {
        return Applicability::NotApplicable("fewer approved candidates than seats".into());
    }
    let mut expected: Vec<Committee> = KSubsets::new(approved.len(), k)
        .map(|idxs| Committee::new(idxs.into_iter().map(|i| approved[i]).collect()))
        .collect();
    expected.sort();
    let mut actual = winners.to_vec();
    actual.sort();
    actual.dedup();
    Applicability::Applicable(actual == expected)
}
