//! The rule registry: every rule addressable by name, producing a uniform
//! [`RuleResult`] with optional trace lines. Sequential rules are resolute;
//! optimization rules list all tied winners. `resolute_committee` narrows
//! any rule to a single committee by taking the lexicographically first
//! winner.

use crate::minimax::{lex_mav_exact, mav_exact};
use crate::model::{Committee, ElectionInstance, RuleResult, TieOrder};
use crate::monroe::{greedy_monroe, monroe_exact};
use crate::phragmen::{lexmin_phragmen, rule_x, seq_phragmen};
use crate::profile::format_committee;
use crate::rat::{parse_rat, rat_usize, Rat};
use crate::thiele::{
    abc_scoring_exact, make_weights, seq_thiele, revseq_thiele, thiele_exact, ScoringFunction,
    ThieleWeights, WeightKind,
};
use crate::Error;

/// Identifiers of all computable rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleId {
    Av,
    Cc,
    Pav,
    SeqPav,
    RevSeqPav,
    SeqCc,
    Geometric(Rat),
    Custom(Vec<Rat>),
    Sav,
    Mav,
    LexMav,
    Monroe,
    GreedyMonroe,
    SeqPhragmen,
    LexminPhragmen,
    RuleX,
}

/// All fixed rule names (parameterized families excluded).
pub const RULE_NAMES: &[&str] = &[
    "av",
    "cc",
    "pav",
    "seq-pav",
    "revseq-pav",
    "seq-cc",
    "sav",
    "mav",
    "lex-mav",
    "monroe",
    "greedy-monroe",
    "seq-phragmen",
    "lexmin-phragmen",
    "rule-x",
];

/// Parses a rule name: one of [`RULE_NAMES`], `geom:<p>` with a rational
/// `p > 1`, or `custom:<w1,w2,...>` with rational marginal gains.
pub fn parse_rule_id(name: &str) -> Result<RuleId, Error> {
    match name {
        "av" => return Ok(RuleId::Av),
        "cc" => return Ok(RuleId::Cc),
        "pav" => return Ok(RuleId::Pav),
        "seq-pav" => return Ok(RuleId::SeqPav),
        "revseq-pav" => return Ok(RuleId::RevSeqPav),
        "seq-cc" => return Ok(RuleId::SeqCc),
        "sav" => return Ok(RuleId::Sav),
        "mav" => return Ok(RuleId::Mav),
        "lex-mav" => return Ok(RuleId::LexMav),
        "monroe" => return Ok(RuleId::Monroe),
        "greedy-monroe" => return Ok(RuleId::GreedyMonroe),
        "seq-phragmen" => return Ok(RuleId::SeqPhragmen),
        "lexmin-phragmen" => return Ok(RuleId::LexminPhragmen),
        "rule-x" => return Ok(RuleId::RuleX),
        _ => {}
    }
    if let Some(param) = name.strip_prefix("geom:") {
        return Ok(RuleId::Geometric(parse_rat(param)?));
    }
    if let Some(params) = name.strip_prefix("custom:") {
        let marginals: Result<Vec<Rat>, Error> = params.split(',').map(parse_rat).collect();
        return Ok(RuleId::Custom(marginals?));
    }
    Err(Error::UnknownRule(name.to_string()))
}

impl RuleId {
    pub fn name(&self) -> String {
        match self {
            RuleId::Av => "av".into(),
            RuleId::Cc => "cc".into(),
            RuleId::Pav => "pav".into(),
            RuleId::SeqPav => "seq-pav".into(),
            RuleId::RevSeqPav => "revseq-pav".into(),
            RuleId::SeqCc => "seq-cc".into(),
            RuleId::Geometric(p) => format!("geom:{p}"),
            RuleId::Custom(m) => {
                let parts: Vec<String> = m.iter().map(Rat::to_string).collect();
                format!("custom:{}", parts.join(","))
            }
            RuleId::Sav => "sav".into(),
            RuleId::Mav => "mav".into(),
            RuleId::LexMav => "lex-mav".into(),
            RuleId::Monroe => "monroe".into(),
            RuleId::GreedyMonroe => "greedy-monroe".into(),
            RuleId::SeqPhragmen => "seq-phragmen".into(),
            RuleId::LexminPhragmen => "lexmin-phragmen".into(),
            RuleId::RuleX => "rule-x".into(),
        }
    }

    fn weights(&self, inst: &ElectionInstance) -> Result<Option<ThieleWeights>, Error> {
        let k = inst.committee_size();
        let kind = match self {
            RuleId::Av => WeightKind::Av,
            RuleId::Cc | RuleId::SeqCc => WeightKind::Cc,
            RuleId::Pav | RuleId::SeqPav | RuleId::RevSeqPav => WeightKind::Pav,
            RuleId::Geometric(p) => WeightKind::Geometric(p.clone()),
            RuleId::Custom(m) => WeightKind::Custom(m.clone()),
            _ => return Ok(None),
        };
        make_weights(kind, k).map(Some)
    }
}

/// Runs a rule and renders its outcome uniformly.
pub fn compute_rule(
    id: &RuleId,
    inst: &ElectionInstance,
    tie: &TieOrder,
) -> Result<RuleResult, Error> {
    let label = |c: usize| inst.candidate_label(c);
    match id {
        RuleId::Av | RuleId::Cc | RuleId::Pav | RuleId::Geometric(_) | RuleId::Custom(_) => {
            let w = id.weights(inst)?.expect("optimization weights");
            let out = thiele_exact(inst, &w)?;
            Ok(RuleResult::new(out.committees, Some(out.score)))
        }
        RuleId::SeqPav | RuleId::SeqCc => {
            let w = id.weights(inst)?.expect("sequential weights");
            let out = seq_thiele(inst, &w, tie);
            let mut result = RuleResult::new(vec![out.committee], Some(out.score));
            result.trace = out
                .rounds
                .iter()
                .enumerate()
                .map(|(r, round)| {
                    format!(
                        "round {}: add {}  gain {}",
                        r + 1,
                        label(round.candidate),
                        round.gain
                    )
                })
                .collect();
            Ok(result)
        }
        RuleId::RevSeqPav => {
            let w = id.weights(inst)?.expect("sequential weights");
            let out = revseq_thiele(inst, &w, tie);
            let mut result = RuleResult::new(vec![out.committee], Some(out.score));
            result.trace = out
                .removals
                .iter()
                .enumerate()
                .map(|(r, removal)| {
                    format!(
                        "round {}: remove {}  score drop {}",
                        r + 1,
                        label(removal.candidate),
                        removal.score_drop
                    )
                })
                .collect();
            Ok(result)
        }
        RuleId::Sav => {
            let f = ScoringFunction::sav(inst.num_candidates());
            let out = abc_scoring_exact(inst, &f)?;
            Ok(RuleResult::new(out.committees, Some(out.score)))
        }
        RuleId::Mav => {
            let out = mav_exact(inst)?;
            Ok(RuleResult::new(
                out.committees,
                Some(rat_usize(out.score)),
            ))
        }
        RuleId::LexMav => {
            let out = lex_mav_exact(inst)?;
            let mut result = RuleResult::new(
                out.committees,
                Some(rat_usize(out.sorted_distances[0])),
            );
            let rendered: Vec<String> = out
                .sorted_distances
                .iter()
                .map(usize::to_string)
                .collect();
            result.trace = vec![format!("distances {}", rendered.join(" "))];
            Ok(result)
        }
        RuleId::Monroe => {
            let out = monroe_exact(inst)?;
            Ok(RuleResult::new(
                out.committees,
                Some(rat_usize(out.score)),
            ))
        }
        RuleId::GreedyMonroe => {
            let out = greedy_monroe(inst, tie);
            let mut result = RuleResult::new(
                vec![out.committee.clone()],
                Some(rat_usize(out.satisfied_count())),
            );
            result.trace = out
                .rounds
                .iter()
                .enumerate()
                .map(|(r, round)| {
                    let voters: Vec<String> =
                        round.group.iter().map(usize::to_string).collect();
                    format!(
                        "round {}: pick {}  voters [{}]  cap {}",
                        r + 1,
                        label(round.candidate),
                        voters.join(","),
                        round.cap
                    )
                })
                .collect();
            Ok(result)
        }
        RuleId::SeqPhragmen => {
            let out = seq_phragmen(inst, tie);
            let mut result = RuleResult::new(vec![out.committee], None);
            result.trace = out
                .rounds
                .iter()
                .enumerate()
                .map(|(r, round)| match &round.new_load {
                    Some(load) => format!(
                        "round {}: seat {}  load {}",
                        r + 1,
                        label(round.candidate),
                        load
                    ),
                    None => format!(
                        "round {}: seat {} by tie order (no approvers left)",
                        r + 1,
                        label(round.candidate)
                    ),
                })
                .collect();
            Ok(result)
        }
        RuleId::LexminPhragmen => {
            let out = lexmin_phragmen(inst)?;
            let max_load = out.sorted_loads.first().cloned();
            let mut result = RuleResult::new(out.committees, max_load);
            let rendered: Vec<String> =
                out.sorted_loads.iter().map(Rat::to_string).collect();
            result.trace = vec![format!("loads {}", rendered.join(" "))];
            Ok(result)
        }
        RuleId::RuleX => {
            let out = rule_x(inst, tie);
            let mut result = RuleResult::new(vec![out.committee], None);
            let mut trace = Vec::new();
            for (r, round) in out.phase1.iter().enumerate() {
                trace.push(format!(
                    "phase 1 round {}: buy {}  price {}",
                    r + 1,
                    label(round.candidate),
                    round.price
                ));
            }
            for (r, round) in out.phase2.iter().enumerate() {
                match &round.new_load {
                    Some(load) => trace.push(format!(
                        "phase 2 round {}: seat {}  load {}",
                        r + 1,
                        label(round.candidate),
                        load
                    )),
                    None => trace.push(format!(
                        "phase 2 round {}: seat {} by tie order (no approvers left)",
                        r + 1,
                        label(round.candidate)
                    )),
                }
            }
            result.trace = trace;
            Ok(result)
        }
    }
}

/// The lexicographically first winning committee of a rule.
pub fn resolute_committee(
    id: &RuleId,
    inst: &ElectionInstance,
    tie: &TieOrder,
) -> Result<Committee, Error> {
    let mut result = compute_rule(id, inst, tie)?;
    result.committees.sort();
    Ok(result.committees.remove(0))
}

/// Renders a rule result the way the command-line tool prints it: one
/// winner per line with the score appended.
pub fn render_result(inst: &ElectionInstance, result: &RuleResult) -> String {
    let mut out = String::new();
    for committee in &result.committees {
        out.push_str(&format_committee(inst, committee));
        if let Some(score) = &result.score {
            out.push_str(&format!("  score {score}"));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::parse_profile;
    use crate::rat::frac;

    #[test]
    fn parse_names() {
        assert_eq!(parse_rule_id("pav").unwrap(), RuleId::Pav);
        assert_eq!(
            parse_rule_id("geom:3/2").unwrap(),
            RuleId::Geometric(frac(3, 2))
        );
        assert_eq!(
            parse_rule_id("custom:1,1/2").unwrap(),
            RuleId::Custom(vec![frac(1, 1), frac(1, 2)])
        );
        assert!(parse_rule_id("borda").is_err());
        for name in RULE_NAMES {
            assert!(parse_rule_id(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn render_with_labels_and_score() {
        let inst =
            parse_profile("7 4\nnames: a b c d e f g\n3 * 0 1\n3 * 0 2\n2 * 0 3\n1 2 5\n4\n5\n6\n")
                .unwrap();
        let tie = TieOrder::default_for(&inst);
        let result = compute_rule(&RuleId::Pav, &inst, &tie).unwrap();
        assert_eq!(render_result(&inst, &result), "{a,b,c,f}  score 83/6\n");
    }

    #[test]
    fn resolute_takes_lexicographic_first() {
        let inst =
            parse_profile("7 4\nnames: a b c d e f g\n3 * 0 1\n3 * 0 2\n2 * 0 3\n1 2 5\n4\n5\n6\n")
                .unwrap();
        let tie = TieOrder::default_for(&inst);
        let committee = resolute_committee(&RuleId::Av, &inst, &tie).unwrap();
        assert_eq!(committee, Committee::new(vec![0, 1, 2, 3]));
    }
}
