//! Thiele methods and generic ABC scoring rules.
//!
//! A Thiele method scores a committee as the sum over voters of `w(x)`,
//! where `x` is the voter's number of approved committee members and `w`
//! is a non-decreasing weight function with `w(0) = 0`. Weights are stored
//! as marginal gains `w(x) - w(x-1)`, so sequential rules can evaluate the
//! effect of adding one candidate in constant time per voter.
//!
//! Exact optimization enumerates committees, with two accelerations that do
//! not change the result: branch-and-bound pruning for non-increasing
//! marginals on large search spaces, and a seat-vector reduction on
//! party-list profiles (where a committee's score depends only on how many
//! seats each party receives).

use crate::apportion::{as_party_list, PartyListCheck, PartyStructure};
use crate::model::{sorted_intersection_size, Committee, ElectionInstance, TieOrder};
use crate::rat::{frac_usize, rat_usize, Rat};
use crate::subsets::{ensure_enumerable, KSubsets, ENUMERATION_CAP};
use crate::Error;
use num::{One, Zero};

/// The weight families addressable by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightKind {
    /// `w(x) = x`: multi-winner approval voting.
    Av,
    /// `w(x) = min(1, x)`: approval Chamberlin-Courant.
    Cc,
    /// Harmonic weights `1, 1/2, 1/3, ...`: proportional approval voting.
    Pav,
    /// Marginals `(1/p)^x` for a parameter `p > 1`.
    Geometric(Rat),
    /// Explicit non-negative marginal gains; zero beyond the list.
    Custom(Vec<Rat>),
}

/// A Thiele weight function, queried through its marginal gains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThieleWeights {
    kind: WeightKind,
    label: String,
}

/// Builds a weight function and validates its parameters: geometric needs
/// `p > 1`, custom marginals must be non-negative and cover `k` levels.
pub fn make_weights(kind: WeightKind, k: usize) -> Result<ThieleWeights, Error> {
    let label = match &kind {
        WeightKind::Av => "av".to_string(),
        WeightKind::Cc => "cc".to_string(),
        WeightKind::Pav => "pav".to_string(),
        WeightKind::Geometric(p) => {
            if *p <= Rat::one() {
                return Err(Error::Invalid(format!(
                    "geometric parameter must exceed 1, got {p}"
                )));
            }
            format!("geom:{p}")
        }
        WeightKind::Custom(marginals) => {
            if marginals.iter().any(|m| m < &Rat::zero()) {
                return Err(Error::Invalid("negative custom marginal".into()));
            }
            if marginals.len() < k {
                return Err(Error::Invalid(format!(
                    "custom weights cover {} levels but the committee has {k} seats",
                    marginals.len()
                )));
            }
            let rendered: Vec<String> = marginals.iter().map(Rat::to_string).collect();
            format!("custom:{}", rendered.join(","))
        }
    };
    Ok(ThieleWeights { kind, label })
}

impl ThieleWeights {
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Gain from a voter's representation rising from `level - 1` to
    /// `level` (`level >= 1`).
    pub fn marginal(&self, level: usize) -> Rat {
        debug_assert!(level >= 1);
        match &self.kind {
            WeightKind::Av => Rat::one(),
            WeightKind::Cc => {
                if level == 1 {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            }
            WeightKind::Pav => frac_usize(1, level),
            WeightKind::Geometric(p) => {
                let mut value = Rat::one();
                for _ in 0..level {
                    value /= p;
                }
                value
            }
            WeightKind::Custom(marginals) => {
                marginals.get(level - 1).cloned().unwrap_or_else(Rat::zero)
            }
        }
    }

    /// `w(level)`: the cumulative weight.
    pub fn cumulative(&self, level: usize) -> Rat {
        (1..=level).map(|x| self.marginal(x)).sum()
    }

    /// Marginal gains for levels `1..=len`.
    pub fn marginals_up_to(&self, len: usize) -> Vec<Rat> {
        (1..=len).map(|x| self.marginal(x)).collect()
    }

    /// Whether the marginals never increase (true for all named families;
    /// checked explicitly for custom weights). Pruning relies on this.
    fn marginals_non_increasing(&self, up_to: usize) -> bool {
        match &self.kind {
            WeightKind::Custom(m) => {
                let mut prev: Option<&Rat> = None;
                for x in m.iter().take(up_to) {
                    if prev.is_some_and(|p| x > p) {
                        return false;
                    }
                    prev = Some(x);
                }
                // Beyond the list the marginal drops to zero, which keeps
                // the sequence non-increasing.
                true
            }
            _ => true,
        }
    }
}

/// Exact Thiele score of a committee.
pub fn thiele_score(inst: &ElectionInstance, committee: &Committee, w: &ThieleWeights) -> Rat {
    (0..inst.num_voters())
        .map(|v| w.cumulative(sorted_intersection_size(inst.ballot(v), committee.members())))
        .sum()
}

/// All committees attaining the maximum score, lexicographically sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactOutcome {
    pub committees: Vec<Committee>,
    pub score: Rat,
}

/// Exhaustive Thiele optimization.
pub fn thiele_exact(inst: &ElectionInstance, w: &ThieleWeights) -> Result<ExactOutcome, Error> {
    if let Some(structure) = party_structure_for_reduction(inst) {
        return Ok(party_list_thiele(inst, w, &structure));
    }
    let m = inst.num_candidates();
    let k = inst.committee_size();
    let count = ensure_enumerable(m, k, ENUMERATION_CAP)?;
    if count < 100_000 || !w.marginals_non_increasing(k) {
        let mut best: Option<ExactOutcome> = None;
        for members in KSubsets::new(m, k) {
            let committee = Committee::new(members);
            let score = thiele_score(inst, &committee, w);
            record_max(&mut best, committee, score);
        }
        Ok(best.expect("k <= m guarantees at least one committee"))
    } else {
        Ok(branch_and_bound(inst, w))
    }
}

fn record_max(best: &mut Option<ExactOutcome>, committee: Committee, score: Rat) {
    match best {
        None => {
            *best = Some(ExactOutcome {
                committees: vec![committee],
                score,
            })
        }
        Some(cur) => {
            if score > cur.score {
                cur.score = score;
                cur.committees.clear();
                cur.committees.push(committee);
            } else if score == cur.score {
                cur.committees.push(committee);
            }
        }
    }
}

/// Depth-first search over candidates in index order, pruning with the
/// admissible bound "current score plus the largest remaining one-step
/// gains". Valid because non-increasing marginals make one-step gains an
/// upper bound on any later gain of the same candidate.
fn branch_and_bound(inst: &ElectionInstance, w: &ThieleWeights) -> ExactOutcome {
    struct Search<'a> {
        inst: &'a ElectionInstance,
        w: &'a ThieleWeights,
        best: Option<ExactOutcome>,
        chosen: Vec<usize>,
        reps: Vec<usize>,
    }
    impl Search<'_> {
        fn gain(&self, candidate: usize) -> Rat {
            self.inst
                .supporters(candidate)
                .iter()
                .map(|&v| self.w.marginal(self.reps[v] + 1))
                .sum()
        }

        fn visit(&mut self, next: usize, score: Rat) {
            let k = self.inst.committee_size();
            let m = self.inst.num_candidates();
            if self.chosen.len() == k {
                record_max(&mut self.best, Committee::new(self.chosen.clone()), score);
                return;
            }
            let need = k - self.chosen.len();
            if m - next < need {
                return;
            }
            // Upper bound: add the `need` largest immediate gains.
            let mut gains: Vec<Rat> = (next..m).map(|c| self.gain(c)).collect();
            gains.sort_unstable_by(|a, b| b.cmp(a));
            let bound: Rat = score.clone() + gains[..need].iter().cloned().sum::<Rat>();
            if let Some(cur) = &self.best {
                if bound < cur.score {
                    return;
                }
            }
            for c in next..=(m - need) {
                let gain = self.gain(c);
                self.chosen.push(c);
                for &v in self.inst.supporters(c) {
                    self.reps[v] += 1;
                }
                self.visit(c + 1, score.clone() + &gain);
                for &v in self.inst.supporters(c) {
                    self.reps[v] -= 1;
                }
                self.chosen.pop();
            }
        }
    }
    let mut search = Search {
        inst,
        w,
        best: None,
        chosen: Vec::new(),
        reps: vec![0; inst.num_voters()],
    };
    search.visit(0, Rat::zero());
    let mut out = search.best.expect("non-empty search space");
    out.committees.sort();
    out
}

/// Fast path usable when the profile is party-list and every candidate
/// belongs to a party.
fn party_structure_for_reduction(inst: &ElectionInstance) -> Option<PartyStructure> {
    match as_party_list(inst) {
        PartyListCheck::Parties(ps) if ps.covers_all_candidates(inst) => Some(ps),
        _ => None,
    }
}

/// Enumerates per-party seat vectors instead of committees. The score of a
/// committee on a party-list profile depends only on its seat vector, so
/// the maximizers are exactly the expansions of the optimal vectors.
fn party_list_thiele(
    inst: &ElectionInstance,
    w: &ThieleWeights,
    structure: &PartyStructure,
) -> ExactOutcome {
    let k = inst.committee_size();
    let score_of = |seats: &[usize]| -> Rat {
        structure
            .parties
            .iter()
            .filter(|p| !p.candidates.is_empty())
            .zip(seats)
            .map(|(party, &s)| rat_usize(party.voters.len()) * w.cumulative(s))
            .sum()
    };
    let (score, vectors) = optimal_seat_vectors(structure, k, score_of);
    let mut committees = expand_seat_vectors(structure, &vectors);
    committees.sort();
    ExactOutcome { committees, score }
}

/// Maximizes a seat-vector score over all ways to distribute `k` seats
/// among the parties (respecting party sizes). Returns all maximizers.
pub(crate) fn optimal_seat_vectors(
    structure: &PartyStructure,
    k: usize,
    score_of: impl Fn(&[usize]) -> Rat,
) -> (Rat, Vec<Vec<usize>>) {
    let caps: Vec<usize> = structure
        .parties
        .iter()
        .filter(|p| !p.candidates.is_empty())
        .map(|p| p.candidates.len())
        .collect();
    let mut best_score: Option<Rat> = None;
    let mut best: Vec<Vec<usize>> = Vec::new();
    for_each_seat_vector(&caps, k, &mut |seats| {
        let s = score_of(seats);
        match &best_score {
            Some(b) if *b > s => {}
            Some(b) if *b == s => best.push(seats.to_vec()),
            _ => {
                best_score = Some(s);
                best = vec![seats.to_vec()];
            }
        }
    });
    (
        best_score.expect("party capacities cover the committee size"),
        best,
    )
}

/// Visits every way to distribute `seats` over parties with the given
/// per-party capacities.
pub(crate) fn for_each_seat_vector(
    caps: &[usize],
    seats: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    fn search(
        caps: &[usize],
        remaining: usize,
        index: usize,
        current: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if index == caps.len() {
            if remaining == 0 {
                visit(current);
            }
            return;
        }
        let tail_capacity: usize = caps[index + 1..].iter().sum();
        let low = remaining.saturating_sub(tail_capacity);
        let high = remaining.min(caps[index]);
        for s in low..=high {
            current[index] = s;
            search(caps, remaining - s, index + 1, current, visit);
        }
    }
    let mut current = vec![0usize; caps.len()];
    search(caps, seats, 0, &mut current, visit);
}

/// All committees realizing any of the given seat vectors.
pub(crate) fn expand_seat_vectors(
    structure: &PartyStructure,
    vectors: &[Vec<usize>],
) -> Vec<Committee> {
    let parties: Vec<&crate::apportion::Party> = structure
        .parties
        .iter()
        .filter(|p| !p.candidates.is_empty())
        .collect();
    let mut committees = Vec::new();
    for vector in vectors {
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for (party, &s) in parties.iter().zip(vector) {
            let mut next = Vec::new();
            for choice in KSubsets::new(party.candidates.len(), s).map(|idxs| {
                idxs.into_iter()
                    .map(|i| party.candidates[i])
                    .collect::<Vec<_>>()
            }) {
                for stem in &partial {
                    let mut grown = stem.clone();
                    grown.extend_from_slice(&choice);
                    next.push(grown);
                }
            }
            partial = next;
        }
        committees.extend(partial.into_iter().map(Committee::new));
    }
    committees
}

/// One round of a sequential Thiele run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqRound {
    pub candidate: usize,
    pub gain: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqOutcome {
    pub committee: Committee,
    pub rounds: Vec<SeqRound>,
    pub score: Rat,
}

/// Sequential Thiele: adds, in each of `k` rounds, the candidate whose
/// inclusion raises the committee's score the most (ties by `tie`).
pub fn seq_thiele(inst: &ElectionInstance, w: &ThieleWeights, tie: &TieOrder) -> SeqOutcome {
    let mut reps = vec![0usize; inst.num_voters()];
    let mut chosen: Vec<usize> = Vec::new();
    let mut rounds = Vec::new();
    let mut score = Rat::zero();
    for _ in 0..inst.committee_size() {
        let mut best: Option<(usize, Rat)> = None;
        for c in 0..inst.num_candidates() {
            if chosen.contains(&c) {
                continue;
            }
            let gain: Rat = inst
                .supporters(c)
                .iter()
                .map(|&v| w.marginal(reps[v] + 1))
                .sum();
            let better = match &best {
                None => true,
                Some((bc, bg)) => gain > *bg || (gain == *bg && tie.prefers_candidate(c, *bc)),
            };
            if better {
                best = Some((c, gain));
            }
        }
        let (candidate, gain) = best.expect("k <= m leaves a candidate to add");
        for &v in inst.supporters(candidate) {
            reps[v] += 1;
        }
        chosen.push(candidate);
        score += &gain;
        rounds.push(SeqRound { candidate, gain });
    }
    SeqOutcome {
        committee: Committee::new(chosen),
        rounds,
        score,
    }
}

/// One removal step of reverse-sequential Thiele.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalRound {
    pub candidate: usize,
    /// By how much the removal lowered the committee's score.
    pub score_drop: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevSeqOutcome {
    pub committee: Committee,
    pub removals: Vec<RemovalRound>,
    pub score: Rat,
}

/// Reverse-sequential Thiele: starts from all candidates and repeatedly
/// removes the one whose removal lowers the score the least.
pub fn revseq_thiele(inst: &ElectionInstance, w: &ThieleWeights, tie: &TieOrder) -> RevSeqOutcome {
    let m = inst.num_candidates();
    let mut present = vec![true; m];
    let mut reps: Vec<usize> = (0..inst.num_voters())
        .map(|v| inst.ballot(v).len())
        .collect();
    let mut score: Rat = (0..inst.num_voters())
        .map(|v| w.cumulative(reps[v]))
        .sum();
    let mut removals = Vec::new();
    for _ in 0..m - inst.committee_size() {
        let mut best: Option<(usize, Rat)> = None;
        for c in 0..m {
            if !present[c] {
                continue;
            }
            let drop: Rat = inst
                .supporters(c)
                .iter()
                .map(|&v| w.marginal(reps[v]))
                .sum();
            let better = match &best {
                None => true,
                Some((bc, bd)) => drop < *bd || (drop == *bd && tie.prefers_candidate(c, *bc)),
            };
            if better {
                best = Some((c, drop));
            }
        }
        let (candidate, drop) = best.expect("more candidates than seats remain");
        present[candidate] = false;
        for &v in inst.supporters(candidate) {
            reps[v] -= 1;
        }
        score -= &drop;
        removals.push(RemovalRound {
            candidate,
            score_drop: drop,
        });
    }
    let committee = Committee::new((0..m).filter(|&c| present[c]).collect());
    RevSeqOutcome {
        committee,
        removals,
        score,
    }
}

/// A generic ABC scoring function `f(x, y)`: the satisfaction of a voter
/// with `y` approved candidates of whom `x` sit in the committee. Stored as
/// a table over `0 <= x <= y <= m`; must be non-decreasing in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoringFunction {
    table: Vec<Vec<Rat>>,
    label: String,
}

impl ScoringFunction {
    pub fn new(
        max_ballot: usize,
        label: &str,
        f: impl Fn(usize, usize) -> Rat,
    ) -> Result<Self, Error> {
        let mut table = Vec::with_capacity(max_ballot + 1);
        for y in 0..=max_ballot {
            let row: Vec<Rat> = (0..=y).map(|x| f(x, y)).collect();
            for x in 1..=y {
                if row[x] < row[x - 1] {
                    return Err(Error::Invalid(format!(
                        "scoring function decreases at x={x}, y={y}"
                    )));
                }
            }
            table.push(row);
        }
        Ok(ScoringFunction {
            table,
            label: label.to_string(),
        })
    }

    /// Satisfaction approval voting: each voter spreads one point evenly
    /// over her approved candidates. Empty ballots contribute nothing.
    pub fn sav(max_ballot: usize) -> Self {
        Self::new(max_ballot, "sav", |x, y| {
            if y == 0 {
                Rat::zero()
            } else {
                frac_usize(x, y)
            }
        })
        .expect("x/y is monotone in x")
    }

    /// The scoring function of a Thiele method: `f(x, y) = w(x)`.
    pub fn from_weights(w: &ThieleWeights, max_ballot: usize) -> Self {
        Self::new(max_ballot, w.label(), |x, _| w.cumulative(x))
            .expect("non-negative marginals are monotone")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn value(&self, in_committee: usize, ballot_size: usize) -> Rat {
        self.table[ballot_size][in_committee].clone()
    }
}

/// Score of a committee under a generic scoring function.
pub fn abc_scoring_score(
    inst: &ElectionInstance,
    committee: &Committee,
    f: &ScoringFunction,
) -> Rat {
    (0..inst.num_voters())
        .map(|v| {
            let ballot = inst.ballot(v);
            f.value(
                sorted_intersection_size(ballot, committee.members()),
                ballot.len(),
            )
        })
        .sum()
}

/// All committees maximizing the generic score.
pub fn abc_scoring_exact(
    inst: &ElectionInstance,
    f: &ScoringFunction,
) -> Result<ExactOutcome, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    let mut best: Option<ExactOutcome> = None;
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        let score = abc_scoring_score(inst, &committee, f);
        record_max(&mut best, committee, score);
    }
    Ok(best.expect("k <= m"))
}
