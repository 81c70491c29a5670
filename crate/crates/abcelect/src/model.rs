//! The shared domain model: election instances, committees, tie-breaking
//! orders and the primitives (welfare vectors, dominance, Hamming distance)
//! used by every rule and axiom checker.

use crate::rat::Rat;
use crate::Error;

/// An approval election: `m` candidates, a committee size `k`, and one
/// approval ballot per voter. Candidates and voters are 0-based indices;
/// candidate labels, when present, are presentation-only.
///
/// Instances are immutable after construction. Per-candidate supporter
/// lists are precomputed since almost every rule needs them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElectionInstance {
    num_candidates: usize,
    committee_size: usize,
    ballots: Vec<Vec<usize>>,
    supporters: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

impl ElectionInstance {
    /// Builds an instance, validating `1 <= k <= m`, `n >= 1` and that every
    /// ballot is a duplicate-free set of candidate indices below `m`.
    /// Ballots are stored sorted. Empty ballots are permitted.
    pub fn new(
        num_candidates: usize,
        committee_size: usize,
        ballots: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
    ) -> Result<Self, Error> {
        if committee_size < 1 || committee_size > num_candidates {
            return Err(Error::Invalid(format!(
                "committee size {committee_size} out of range 1..={num_candidates}"
            )));
        }
        if ballots.is_empty() {
            return Err(Error::Invalid("at least one voter is required".into()));
        }
        if let Some(ref labels) = names {
            if labels.len() != num_candidates {
                return Err(Error::Invalid(format!(
                    "{} labels given for {num_candidates} candidates",
                    labels.len()
                )));
            }
        }
        let mut sorted_ballots = Vec::with_capacity(ballots.len());
        for (voter, ballot) in ballots.into_iter().enumerate() {
            let mut b = ballot;
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Invalid(format!(
                    "ballot of voter {voter} lists a candidate twice"
                )));
            }
            if let Some(&c) = b.last() {
                if c >= num_candidates {
                    return Err(Error::Invalid(format!(
                        "ballot of voter {voter} names candidate {c}, but there are only {num_candidates} candidates"
                    )));
                }
            }
            sorted_ballots.push(b);
        }
        let mut supporters = vec![Vec::new(); num_candidates];
        for (voter, ballot) in sorted_ballots.iter().enumerate() {
            for &c in ballot {
                supporters[c].push(voter);
            }
        }
        Ok(Self {
            num_candidates,
            committee_size,
            ballots: sorted_ballots,
            supporters,
            names,
        })
    }

    pub fn num_candidates(&self) -> usize {
        self.num_candidates
    }

    pub fn num_voters(&self) -> usize {
        self.ballots.len()
    }

    pub fn committee_size(&self) -> usize {
        self.committee_size
    }

    /// The sorted approval set of a voter.
    pub fn ballot(&self, voter: usize) -> &[usize] {
        &self.ballots[voter]
    }

    pub fn ballots(&self) -> &[Vec<usize>] {
        &self.ballots
    }

    pub fn approves(&self, voter: usize, candidate: usize) -> bool {
        self.ballots[voter].binary_search(&candidate).is_ok()
    }

    /// Voters approving the given candidate, ascending.
    pub fn supporters(&self, candidate: usize) -> &[usize] {
        &self.supporters[candidate]
    }

    pub fn approval_count(&self, candidate: usize) -> usize {
        self.supporters[candidate].len()
    }

    /// Voters that approve nobody. Such ballots are legal but neutral for
    /// every score-based rule, so parsers surface them as a diagnostic.
    pub fn empty_ballots(&self) -> Vec<usize> {
        (0..self.num_voters())
            .filter(|&v| self.ballots[v].is_empty())
            .collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Label of a candidate: its name when names are given, else its index.
    pub fn candidate_label(&self, candidate: usize) -> String {
        match &self.names {
            Some(labels) => labels[candidate].clone(),
            None => candidate.to_string(),
        }
    }

    /// The same profile with a different committee size.
    pub fn with_committee_size(&self, committee_size: usize) -> Result<Self, Error> {
        Self::new(
            self.num_candidates,
            committee_size,
            self.ballots.clone(),
            self.names.clone(),
        )
    }
}

/// A sorted, duplicate-free set of candidate indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Committee(Vec<usize>);

impl Committee {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Committee(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, candidate: usize) -> bool {
        self.0.binary_search(&candidate).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset_of(&self, other: &Committee) -> bool {
        self.0.iter().all(|&c| other.contains(c))
    }
}

impl From<&[usize]> for Committee {
    fn from(members: &[usize]) -> Self {
        Committee::new(members.to_vec())
    }
}

/// Fixed priorities used to resolve ties deterministically: a permutation of
/// candidate indices and one of voter indices, earlier means preferred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TieOrder {
    candidate_rank: Vec<usize>,
    voter_rank: Vec<usize>,
}

impl TieOrder {
    /// Default order: ascending candidate index, ascending voter index.
    pub fn default_for(inst: &ElectionInstance) -> Self {
        Self::ascending(inst.num_candidates(), inst.num_voters())
    }

    pub fn ascending(num_candidates: usize, num_voters: usize) -> Self {
        TieOrder {
            candidate_rank: (0..num_candidates).collect(),
            voter_rank: (0..num_voters).collect(),
        }
    }

    /// Builds a tie order from explicit priority lists (most preferred
    /// first). Both lists must be permutations of their index ranges.
    pub fn new(candidate_priority: &[usize], voter_priority: &[usize]) -> Result<Self, Error> {
        Ok(TieOrder {
            candidate_rank: ranks_of(candidate_priority, "candidate")?,
            voter_rank: ranks_of(voter_priority, "voter")?,
        })
    }

    pub fn candidate_rank(&self, candidate: usize) -> usize {
        self.candidate_rank[candidate]
    }

    pub fn voter_rank(&self, voter: usize) -> usize {
        self.voter_rank[voter]
    }

    /// True when `a` is preferred over `b`.
    pub fn prefers_candidate(&self, a: usize, b: usize) -> bool {
        self.candidate_rank[a] < self.candidate_rank[b]
    }

    /// Voters sorted by priority.
    pub fn voters_by_priority(&self, voters: &[usize]) -> Vec<usize> {
        let mut sorted = voters.to_vec();
        sorted.sort_by_key(|&v| self.voter_rank[v]);
        sorted
    }
}

fn ranks_of(priority: &[usize], what: &str) -> Result<Vec<usize>, Error> {
    let mut rank = vec![usize::MAX; priority.len()];
    for (pos, &idx) in priority.iter().enumerate() {
        if idx >= priority.len() || rank[idx] != usize::MAX {
            return Err(Error::Invalid(format!(
                "{what} priority list is not a permutation"
            )));
        }
        rank[idx] = pos;
    }
    Ok(rank)
}

/// Outcome of a rule: all tied winning committees (a singleton for resolute
/// sequential rules), an optional exact score, and an optional textual log
/// of the selection or assignment steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleResult {
    pub committees: Vec<Committee>,
    pub score: Option<Rat>,
    pub trace: Vec<String>,
}

impl RuleResult {
    pub fn new(committees: Vec<Committee>, score: Option<Rat>) -> Self {
        RuleResult {
            committees,
            score,
            trace: Vec::new(),
        }
    }
}

/// Per-voter representation counts `|A(i) ∩ W|`.
pub fn welfare_vector(inst: &ElectionInstance, committee: &Committee) -> Vec<usize> {
    (0..inst.num_voters())
        .map(|v| sorted_intersection_size(inst.ballot(v), committee.members()))
        .collect()
}

/// True when every voter has at least as many representatives in `first` as
/// in `second`, and some voter has strictly more.
pub fn dominates(inst: &ElectionInstance, first: &Committee, second: &Committee) -> bool {
    let mut strict = false;
    for v in 0..inst.num_voters() {
        let a = sorted_intersection_size(inst.ballot(v), first.members());
        let b = sorted_intersection_size(inst.ballot(v), second.members());
        if a < b {
            return false;
        }
        if a > b {
            strict = true;
        }
    }
    strict
}

/// Size of the symmetric difference of two sorted index sets.
pub fn hamming(left: &[usize], right: &[usize]) -> usize {
    let common = sorted_intersection_size(left, right);
    (left.len() - common) + (right.len() - common)
}

/// `|left ∩ right|` for sorted slices.
pub fn sorted_intersection_size(left: &[usize], right: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        match left[i].cmp(&right[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
