//! Minimax approval voting and its lexicographic refinement.
//!
//! Both rules judge a committee by per-voter Hamming distances between the
//! ballot and the committee. Minimax keeps only the largest distance; the
//! refinement compares the whole distance tuple sorted in decreasing
//! order, so ties on the worst-off voter are broken by the second worst,
//! and so on.

use crate::model::{hamming, Committee, ElectionInstance};
use crate::subsets::{ensure_enumerable, KSubsets, ENUMERATION_CAP};
use crate::Error;

/// Per-voter Hamming distances to a committee with their sorted view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub distances: Vec<usize>,
    pub sorted_desc: Vec<usize>,
}

pub fn distance_profile(inst: &ElectionInstance, committee: &Committee) -> DistanceProfile {
    let distances: Vec<usize> = (0..inst.num_voters())
        .map(|v| hamming(inst.ballot(v), committee.members()))
        .collect();
    let mut sorted_desc = distances.clone();
    sorted_desc.sort_unstable_by(|a, b| b.cmp(a));
    DistanceProfile {
        distances,
        sorted_desc,
    }
}

/// The largest Hamming distance any voter has to the committee.
pub fn mav_score(inst: &ElectionInstance, committee: &Committee) -> usize {
    (0..inst.num_voters())
        .map(|v| hamming(inst.ballot(v), committee.members()))
        .max()
        .expect("at least one voter")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MavOutcome {
    pub committees: Vec<Committee>,
    pub score: usize,
}

/// All committees minimizing the largest Hamming distance.
pub fn mav_exact(inst: &ElectionInstance) -> Result<MavOutcome, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    let mut best: Option<MavOutcome> = None;
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        let score = mav_score(inst, &committee);
        match &mut best {
            None => {
                best = Some(MavOutcome {
                    committees: vec![committee],
                    score,
                })
            }
            Some(cur) => {
                if score < cur.score {
                    cur.score = score;
                    cur.committees = vec![committee];
                } else if score == cur.score {
                    cur.committees.push(committee);
                }
            }
        }
    }
    Ok(best.expect("k <= m"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexMavOutcome {
    pub committees: Vec<Committee>,
    /// The optimal decreasing distance tuple shared by all winners.
    pub sorted_distances: Vec<usize>,
}

/// All committees whose decreasing distance tuple is lexicographically
/// minimal. Always a subset of the minimax winners.
pub fn lex_mav_exact(inst: &ElectionInstance) -> Result<LexMavOutcome, Error> {
    let m = inst.num_candidates();
    let k = inst.committee_size();
    ensure_enumerable(m, k, ENUMERATION_CAP)?;
    let mut best: Option<LexMavOutcome> = None;
    for members in KSubsets::new(m, k) {
        let committee = Committee::new(members);
        let tuple = distance_profile(inst, &committee).sorted_desc;
        match &mut best {
            None => {
                best = Some(LexMavOutcome {
                    committees: vec![committee],
                    sorted_distances: tuple,
                })
            }
            Some(cur) => {
                if tuple < cur.sorted_distances {
                    cur.sorted_distances = tuple;
                    cur.committees = vec![committee];
                } else if tuple == cur.sorted_distances {
                    cur.committees.push(committee);
                }
            }
        }
    }
    Ok(best.expect("k <= m"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::parse_profile;

    #[test]
    fn lone_dissenter_moves_the_winner() {
        // 99 x {a}, 1 x {b,c}: the majority choice has distance 3 to the
        // dissenting ballot, so a single seat goes to b or c.
        let inst = parse_profile("3 1\n99 * 0\n1 2\n").unwrap();
        assert_eq!(mav_score(&inst, &Committee::new(vec![0])), 3);
        let out = mav_exact(&inst).unwrap();
        assert_eq!(out.score, 2);
        assert_eq!(
            out.committees,
            vec![Committee::new(vec![1]), Committee::new(vec![2])]
        );
    }

    #[test]
    fn lexicographic_refinement_respects_majority() {
        // 99 x {a}, 1 x {a,b,c}: all three singletons tie at distance 2,
        // but only {a} leaves everyone else at distance zero.
        let inst = parse_profile("3 1\n99 * 0\n0 1 2\n").unwrap();
        let mav = mav_exact(&inst).unwrap();
        assert_eq!(mav.score, 2);
        assert_eq!(mav.committees.len(), 3);
        let lex = lex_mav_exact(&inst).unwrap();
        assert_eq!(lex.committees, vec![Committee::new(vec![0])]);
        assert_eq!(lex.sorted_distances[0], 2);
        assert!(lex.sorted_distances[1..].iter().all(|&d| d == 0));
        // Refinement output is always a subset of the minimax winners.
        assert!(lex
            .committees
            .iter()
            .all(|w| mav.committees.contains(w)));
    }

    #[test]
    fn exact_ballot_reproduced() {
        let inst = parse_profile("4 2\n1 3\n").unwrap();
        let mav = mav_exact(&inst).unwrap();
        assert_eq!(mav.committees, vec![Committee::new(vec![1, 3])]);
        assert_eq!(mav.score, 0);
        let lex = lex_mav_exact(&inst).unwrap();
        assert_eq!(lex.committees, vec![Committee::new(vec![1, 3])]);
    }
}
