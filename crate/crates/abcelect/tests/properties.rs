//! Property and invariant tests: structural laws of the model, solver
//! cross-checks against independent oracles, and the axiom implications
//! the rules are supposed to obey on arbitrary instances.

mod common;

use abcelect::apportion::{
    dhondt, largest_remainder, sainte_lague, satisfies_lower_quota, satisfies_upper_quota,
    ApportionmentInstance,
};
use abcelect::axioms::{check_ejr, check_jr, check_pjr, GroupCheck, JrCheck};
use abcelect::flow::{conserves_flow, min_cost_flow, FlowNetwork, FlowOutcome};
use abcelect::lp::{lp_solve, Direction, LinearProgram, LpOutcome, Rel};
use abcelect::model::{dominates, welfare_vector, Committee, ElectionInstance, TieOrder};
use abcelect::monroe::{greedy_monroe, monroe_score};
use abcelect::phragmen::{lexmin_loads, rule_x, seq_phragmen};
use abcelect::profile::{parse_profile, serialize_profile};
use abcelect::rat::{frac, rat, rat_usize, Rat};
use abcelect::rules::{resolute_committee, RuleId};
use abcelect::subsets::{binomial, KSubsets};
use abcelect::thiele::{
    abc_scoring_exact, make_weights, seq_thiele, thiele_exact, thiele_score, ScoringFunction,
    WeightKind,
};
use common::*;
use num::{One, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::Rng;

fn ballots_strategy(m: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0..m, 0..=m), 1..8)
        .prop_map(|sets| sets.into_iter().map(|s| s.into_iter().collect()).collect())
}

fn instance_strategy() -> impl Strategy<Value = ElectionInstance> {
    (1usize..=6)
        .prop_flat_map(|m| (Just(m), 1usize..=m, ballots_strategy(m)))
        .prop_map(|(m, k, ballots)| ElectionInstance::new(m, k, ballots, None).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_serialize_parse_is_identity(inst in instance_strategy()) {
        let text = serialize_profile(&inst);
        let reparsed = parse_profile(&text).unwrap();
        prop_assert_eq!(inst, reparsed);
    }

    #[test]
    fn welfare_entries_bounded(inst in instance_strategy()) {
        let k = inst.committee_size();
        let committee = Committee::new((0..k).collect());
        let welfare = welfare_vector(&inst, &committee);
        for (v, &count) in welfare.iter().enumerate() {
            prop_assert!(count <= k.min(inst.ballot(v).len()));
        }
        prop_assert_eq!(welfare, welfare_oracle(&inst, &committee));
    }

    #[test]
    fn exact_thiele_winners_share_optimal_score(inst in instance_strategy()) {
        let w = make_weights(WeightKind::Pav, inst.committee_size()).unwrap();
        let out = thiele_exact(&inst, &w).unwrap();
        for committee in &out.committees {
            prop_assert_eq!(thiele_score(&inst, committee, &w), out.score.clone());
        }
        // Every non-winning committee scores strictly less.
        for members in KSubsets::new(inst.num_candidates(), inst.committee_size()) {
            let committee = Committee::new(members);
            if !out.committees.contains(&committee) {
                prop_assert!(thiele_score(&inst, &committee, &w) < out.score);
            }
        }
    }
}

#[test]
fn dominance_is_irreflexive_and_transitive() {
    let mut rng = rng(11);
    for _ in 0..40 {
        let inst = random_instance(&mut rng, 6, 6, 4, true);
        let committees: Vec<Committee> =
            KSubsets::new(inst.num_candidates(), inst.committee_size())
                .map(Committee::new)
                .collect();
        for a in &committees {
            assert!(!dominates(&inst, a, a));
        }
        for a in &committees {
            for b in &committees {
                if !dominates(&inst, a, b) {
                    continue;
                }
                assert!(!dominates(&inst, b, a), "antisymmetry");
                for c in &committees {
                    if dominates(&inst, b, c) {
                        assert!(dominates(&inst, a, c), "transitivity");
                    }
                }
            }
        }
    }
}

#[test]
fn committee_enumeration_is_exact_and_duplicate_free() {
    for (m, k) in [(4usize, 2usize), (7, 4), (9, 3), (12, 5), (20, 2)] {
        let all: Vec<Vec<usize>> = KSubsets::new(m, k).collect();
        let expected = binomial(m, k).to_u64().unwrap() as usize;
        assert_eq!(all.len(), expected);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), expected, "no duplicates");
        assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
    }
}

/// Random three-variable programs, cross-checked against exhaustive
/// vertex enumeration over the constraint planes and box bounds.
#[test]
fn lp_agrees_with_vertex_enumeration() {
    let mut rng = rng(23);
    for round in 0..60 {
        let num_constraints = rng.gen_range(2..=4);
        let mut planes: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for _ in 0..num_constraints {
            let coeffs: Vec<Rat> = (0..3).map(|_| rat(rng.gen_range(-3..=3))).collect();
            let rhs = rat(rng.gen_range(-2..=6));
            planes.push((coeffs, rhs));
        }
        let objective: Vec<Rat> = (0..3).map(|_| rat(rng.gen_range(-3..=3))).collect();

        let mut lp = LinearProgram::with_vars(3);
        for v in 0..3 {
            lp.bound_lower(v, rat(0));
            lp.bound_upper(v, rat(4));
        }
        for (coeffs, rhs) in &planes {
            lp.constraint(coeffs.clone(), Rel::Le, rhs.clone());
        }
        lp.objective(objective.clone(), Direction::Maximize);

        // Oracle: all planes incl. bounds x_i = 0 and x_i = 4.
        let mut hyperplanes: Vec<(Vec<Rat>, Rat)> = planes.clone();
        for v in 0..3 {
            let mut unit = vec![rat(0); 3];
            unit[v] = rat(1);
            hyperplanes.push((unit.clone(), rat(0)));
            hyperplanes.push((unit, rat(4)));
        }
        let feasible = |point: &[Rat]| -> bool {
            point.iter().all(|x| *x >= rat(0) && *x <= rat(4))
                && planes.iter().all(|(c, rhs)| {
                    c.iter().zip(point).map(|(a, x)| a * x).sum::<Rat>() <= *rhs
                })
        };
        let mut best_value: Option<Rat> = None;
        for i in 0..hyperplanes.len() {
            for j in i + 1..hyperplanes.len() {
                for l in j + 1..hyperplanes.len() {
                    if let Some(point) =
                        solve3(&hyperplanes[i], &hyperplanes[j], &hyperplanes[l])
                    {
                        if feasible(&point) {
                            let value: Rat =
                                objective.iter().zip(&point).map(|(c, x)| c * x).sum();
                            if best_value.as_ref().is_none_or(|b| value > *b) {
                                best_value = Some(value);
                            }
                        }
                    }
                }
            }
        }

        match (lp_solve(&lp), best_value) {
            (LpOutcome::Optimal { assignment, value }, Some(oracle)) => {
                assert!(lp.satisfies(&assignment), "round {round}");
                assert_eq!(value, oracle, "round {round}");
            }
            (LpOutcome::Infeasible, None) => {}
            (got, oracle) => panic!("round {round}: solver {got:?} vs oracle {oracle:?}"),
        }
    }
}

/// Cramer's rule for a 3x3 rational system; `None` when singular.
fn solve3(a: &(Vec<Rat>, Rat), b: &(Vec<Rat>, Rat), c: &(Vec<Rat>, Rat)) -> Option<Vec<Rat>> {
    let m = [a.0.clone(), b.0.clone(), c.0.clone()];
    let rhs = [a.1.clone(), b.1.clone(), c.1.clone()];
    let det3 = |m: &[Vec<Rat>; 3]| -> Rat {
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    };
    let det = det3(&m);
    if det.is_zero() {
        return None;
    }
    let mut point = Vec::with_capacity(3);
    for col in 0..3 {
        let mut replaced = m.clone();
        for row in 0..3 {
            replaced[row][col] = rhs[row].clone();
        }
        point.push(det3(&replaced) / &det);
    }
    Some(point)
}

/// Random bipartite assignment networks, checked against permutation
/// enumeration.
#[test]
fn flow_agrees_with_assignment_enumeration() {
    let mut rng = rng(37);
    for _ in 0..60 {
        let size = 4usize;
        // allowed[l][r] with cost when allowed.
        let mut allowed = [[None::<i64>; 4]; 4];
        for row in allowed.iter_mut() {
            for cell in row.iter_mut() {
                if rng.gen_bool(0.7) {
                    *cell = Some(rng.gen_range(-3..=3));
                }
            }
        }
        let source = 0;
        let sink = 2 * size + 1;
        let mut net = FlowNetwork::new(2 * size + 2, source, sink);
        for l in 0..size {
            net.arc(source, 1 + l, 1, 0, 0);
        }
        for l in 0..size {
            for r in 0..size {
                if let Some(cost) = allowed[l][r] {
                    net.arc(1 + l, 1 + size + r, 1, 0, cost);
                }
            }
        }
        for r in 0..size {
            net.arc(1 + size + r, sink, 1, 0, 0);
        }

        // Oracle: all 4! assignments over allowed edges.
        let mut best: Option<i64> = None;
        let mut perm = [0usize, 1, 2, 3];
        permutations(&mut perm, 0, &mut |p| {
            let mut cost = 0i64;
            for (l, &r) in p.iter().enumerate() {
                match allowed[l][r] {
                    Some(c) => cost += c,
                    None => return,
                }
            }
            best = Some(best.map_or(cost, |b: i64| b.min(cost)));
        });

        match (min_cost_flow(&net, size as u64), best) {
            (FlowOutcome::Flow { arc_flows, cost }, Some(oracle)) => {
                assert_eq!(cost, oracle);
                assert!(conserves_flow(&net, &arc_flows));
            }
            (FlowOutcome::Infeasible, None) => {}
            (got, oracle) => panic!("flow {got:?} vs oracle {oracle:?}"),
        }
    }
}

fn permutations(items: &mut [usize; 4], at: usize, visit: &mut impl FnMut(&[usize; 4])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permutations(items, at + 1, visit);
        items.swap(at, i);
    }
}

#[test]
fn monroe_flow_matches_brute_force_assignments() {
    let mut rng = rng(41);
    for _ in 0..30 {
        let inst = random_instance(&mut rng, 8, 6, 3, true);
        for members in KSubsets::new(inst.num_candidates(), inst.committee_size()) {
            let committee = Committee::new(members);
            let (score, assignment) = monroe_score(&inst, &committee);
            assert_eq!(score, monroe_brute(&inst, &committee));
            assert!(assignment.is_balanced(&inst, &committee));
            // A Monroe score never beats full coverage.
            let coverage = welfare_vector(&inst, &committee)
                .iter()
                .filter(|&&x| x > 0)
                .count();
            assert!(score <= coverage && score <= inst.num_voters());
        }
    }
}

#[test]
fn sequential_loads_sum_to_committee_size() {
    let mut rng = rng(43);
    for _ in 0..60 {
        let inst = random_instance(&mut rng, 9, 7, 5, false);
        let out = seq_phragmen(&inst, &TieOrder::default_for(&inst));
        let mut seated = 0usize;
        for round in &out.rounds {
            if round.new_load.is_some() {
                seated += 1;
                let total: Rat = round.loads.iter().sum();
                assert_eq!(total, rat_usize(seated));
            }
        }
    }
}

#[test]
fn budget_rule_conserves_money() {
    let mut rng = rng(47);
    for _ in 0..60 {
        let inst = random_instance(&mut rng, 9, 7, 5, true);
        let out = rule_x(&inst, &TieOrder::default_for(&inst));
        let starting = frac(
            inst.committee_size() as i64,
            inst.num_voters() as i64,
        );
        for round in &out.phase1 {
            let collected: Rat = round.payments.iter().map(|(_, paid)| paid.clone()).sum();
            assert_eq!(collected, Rat::one(), "each selected candidate costs one");
            for (_, paid) in &round.payments {
                assert!(*paid <= round.price);
            }
        }
        for budget in &out.remaining_budgets {
            assert!(*budget >= Rat::zero() && *budget <= starting);
        }
    }
}

#[test]
fn lexmin_distribution_is_valid() {
    let mut rng = rng(53);
    for _ in 0..25 {
        let inst = random_instance(&mut rng, 6, 5, 3, false);
        // Pick the first committee whose members all have approvers.
        let committee = KSubsets::new(inst.num_candidates(), inst.committee_size())
            .map(Committee::new)
            .find(|w| w.iter().all(|c| !inst.supporters(c).is_empty()));
        let Some(committee) = committee else { continue };
        let dist = lexmin_loads(&inst, &committee).unwrap();
        for (shares, c) in dist.member_shares.iter().zip(committee.iter()) {
            let total: Rat = shares.iter().map(|(_, s)| s.clone()).sum();
            assert_eq!(total, Rat::one());
            for (v, share) in shares {
                assert!(*share >= Rat::zero());
                if !share.is_zero() {
                    assert!(inst.approves(*v, c));
                }
            }
        }
        // Voter loads match the share matrix.
        let mut recomputed = vec![Rat::zero(); inst.num_voters()];
        for shares in &dist.member_shares {
            for (v, share) in shares {
                recomputed[*v] += share;
            }
        }
        assert_eq!(recomputed, dist.voter_loads);
    }
}

#[test]
fn thiele_exact_is_anonymous_and_neutral() {
    let mut rng = rng(59);
    for _ in 0..25 {
        let inst = random_instance(&mut rng, 6, 6, 3, true);
        let w = make_weights(WeightKind::Pav, inst.committee_size()).unwrap();
        let base = thiele_exact(&inst, &w).unwrap();

        // Anonymity: shuffling voters leaves the outcome unchanged.
        let mut ballots: Vec<Vec<usize>> =
            (0..inst.num_voters()).map(|v| inst.ballot(v).to_vec()).collect();
        ballots.reverse();
        let shuffled = ElectionInstance::new(
            inst.num_candidates(),
            inst.committee_size(),
            ballots,
            None,
        )
        .unwrap();
        let anon = thiele_exact(&shuffled, &w).unwrap();
        assert_eq!(base.committees, anon.committees);
        assert_eq!(base.score, anon.score);

        // Neutrality: renaming candidates renames the winners.
        let m = inst.num_candidates();
        let perm: Vec<usize> = (0..m).map(|c| (c + 1) % m).collect();
        let renamed_ballots: Vec<Vec<usize>> = (0..inst.num_voters())
            .map(|v| inst.ballot(v).iter().map(|&c| perm[c]).collect())
            .collect();
        let renamed =
            ElectionInstance::new(m, inst.committee_size(), renamed_ballots, None).unwrap();
        let neut = thiele_exact(&renamed, &w).unwrap();
        let mut mapped: Vec<Committee> = base
            .committees
            .iter()
            .map(|c| Committee::new(c.iter().map(|x| perm[x]).collect()))
            .collect();
        mapped.sort();
        assert_eq!(mapped, neut.committees);
    }
}

#[test]
fn scoring_rules_are_consistent_across_electorates() {
    let mut rng = rng(61);
    let mut observed = 0;
    for _ in 0..400 {
        let m = rng.gen_range(2..=5);
        let k = rng.gen_range(1..=m);
        let draw = |rng: &mut rand_chacha::ChaCha8Rng| {
            let n = rng.gen_range(1..=4);
            let ballots: Vec<Vec<usize>> = (0..n)
                .map(|_| (0..m).filter(|_| rng.gen_bool(0.5)).collect())
                .collect();
            ElectionInstance::new(m, k, ballots, None).unwrap()
        };
        let first = draw(&mut rng);
        let second = draw(&mut rng);
        let w = make_weights(WeightKind::Pav, k).unwrap();
        let a = thiele_exact(&first, &w).unwrap();
        let b = thiele_exact(&second, &w).unwrap();
        let intersection: Vec<Committee> = a
            .committees
            .iter()
            .filter(|c| b.committees.contains(c))
            .cloned()
            .collect();
        if intersection.is_empty() {
            continue;
        }
        observed += 1;
        let mut ballots: Vec<Vec<usize>> =
            (0..first.num_voters()).map(|v| first.ballot(v).to_vec()).collect();
        ballots.extend((0..second.num_voters()).map(|v| second.ballot(v).to_vec()));
        let joined = ElectionInstance::new(m, k, ballots, None).unwrap();
        let joint = thiele_exact(&joined, &w).unwrap();
        assert_eq!(joint.committees, intersection);
    }
    assert!(observed >= 20, "consistency premise hit {observed} times");
}

#[test]
fn strong_pareto_for_av_pav_sav_weak_for_cc_and_mav() {
    let mut rng = rng(67);
    for _ in 0..25 {
        let inst = random_instance(&mut rng, 6, 6, 3, true);
        let committees: Vec<Committee> =
            KSubsets::new(inst.num_candidates(), inst.committee_size())
                .map(Committee::new)
                .collect();
        let dominated_by_someone = |w: &Committee| -> bool {
            committees.iter().any(|rival| dominates(&inst, rival, w))
        };

        for kind in [WeightKind::Av, WeightKind::Pav] {
            let weights = make_weights(kind, inst.committee_size()).unwrap();
            let out = thiele_exact(&inst, &weights).unwrap();
            for committee in &out.committees {
                assert!(
                    !dominated_by_someone(committee),
                    "{} winner dominated",
                    weights.label()
                );
            }
        }
        let sav = abc_scoring_exact(&inst, &ScoringFunction::sav(inst.num_candidates()))
            .unwrap();
        for committee in &sav.committees {
            assert!(!dominated_by_someone(committee), "sav winner dominated");
        }

        // Weak Pareto: a dominating committee is itself winning.
        let cc = thiele_exact(
            &inst,
            &make_weights(WeightKind::Cc, inst.committee_size()).unwrap(),
        )
        .unwrap();
        for committee in &cc.committees {
            for rival in &committees {
                if dominates(&inst, rival, committee) {
                    assert!(cc.committees.contains(rival), "cc fails weak pareto");
                }
            }
        }
        let mav = abcelect::minimax::mav_exact(&inst).unwrap();
        for committee in &mav.committees {
            for rival in &committees {
                if dominates(&inst, rival, committee) {
                    assert!(mav.committees.contains(rival), "mav fails weak pareto");
                }
            }
        }
    }
}

#[test]
fn lexmav_refines_mav() {
    let mut rng = rng(71);
    for _ in 0..40 {
        let inst = random_instance(&mut rng, 6, 6, 4, true);
        let mav = abcelect::minimax::mav_exact(&inst).unwrap();
        let lex = abcelect::minimax::lex_mav_exact(&inst).unwrap();
        assert!(lex.committees.iter().all(|w| mav.committees.contains(w)));
    }
}

#[test]
fn resolute_av_is_cardinality_strategyproof() {
    let mut rng = rng(73);
    for _ in 0..25 {
        let inst = random_instance(&mut rng, 5, 5, 3, true);
        let tie = TieOrder::default_for(&inst);
        let honest = resolute_committee(&RuleId::Av, &inst, &tie).unwrap();
        let m = inst.num_candidates();
        for voter in 0..inst.num_voters() {
            let truth = inst.ballot(voter).to_vec();
            let honest_gain = truth.iter().filter(|&&c| honest.contains(c)).count();
            for mask in 0u32..(1 << m) {
                let fake: Vec<usize> = (0..m).filter(|&c| mask & (1 << c) != 0).collect();
                let mut ballots: Vec<Vec<usize>> = (0..inst.num_voters())
                    .map(|v| inst.ballot(v).to_vec())
                    .collect();
                ballots[voter] = fake;
                let deviated =
                    ElectionInstance::new(m, inst.committee_size(), ballots, None).unwrap();
                let outcome = resolute_committee(&RuleId::Av, &deviated, &tie).unwrap();
                let gain = truth.iter().filter(|&&c| outcome.contains(c)).count();
                assert!(gain <= honest_gain, "profitable deviation found");
            }
        }
    }
}

#[test]
fn seq_av_equals_top_approval_counts() {
    let mut rng = rng(79);
    for _ in 0..40 {
        let inst = random_instance(&mut rng, 8, 7, 4, true);
        let tie = TieOrder::default_for(&inst);
        let w = make_weights(WeightKind::Av, inst.committee_size()).unwrap();
        let seq = seq_thiele(&inst, &w, &tie);
        // Top-k candidates by (approval count desc, index asc).
        let mut order: Vec<usize> = (0..inst.num_candidates()).collect();
        order.sort_by(|&a, &b| {
            inst.approval_count(b)
                .cmp(&inst.approval_count(a))
                .then(a.cmp(&b))
        });
        let top = Committee::new(order[..inst.committee_size()].to_vec());
        assert_eq!(seq.committee, top);
    }
}

#[test]
fn greedy_monroe_satisfies_jr() {
    let mut rng = rng(83);
    for _ in 0..120 {
        let inst = random_instance(&mut rng, 10, 7, 4, true);
        let out = greedy_monroe(&inst, &TieOrder::default_for(&inst));
        assert_eq!(check_jr(&inst, &out.committee), JrCheck::Satisfied);
    }
}

#[test]
fn representation_axiom_implication_chain() {
    let mut rng = rng(89);
    for _ in 0..50 {
        let inst = random_instance(&mut rng, 6, 6, 4, true);
        for members in KSubsets::new(inst.num_candidates(), inst.committee_size()) {
            let committee = Committee::new(members);
            let ejr = matches!(check_ejr(&inst, &committee).unwrap(), GroupCheck::Satisfied);
            let pjr = matches!(check_pjr(&inst, &committee).unwrap(), GroupCheck::Satisfied);
            let jr = matches!(check_jr(&inst, &committee), JrCheck::Satisfied);
            assert!(!ejr || pjr, "a committee passed the strong axiom but not the middle one");
            assert!(!pjr || jr, "a committee passed the middle axiom but not the weak one");
        }
    }
}

/// The global load optimum is never lexicographically worse than the
/// loads the sequential rule actually produced for its own committee.
#[test]
fn lexmin_improves_on_sequential_loads() {
    let mut rng = rng(113);
    for _ in 0..30 {
        let inst = random_instance(&mut rng, 7, 6, 3, false);
        if (0..inst.num_candidates()).any(|c| inst.supporters(c).is_empty()) {
            continue;
        }
        let seq = seq_phragmen(&inst, &TieOrder::default_for(&inst));
        let optimal = lexmin_loads(&inst, &seq.committee).unwrap();
        let mut sequential = seq.final_loads.clone();
        sequential.sort_unstable_by(|a, b| b.cmp(a));
        assert!(optimal.sorted_desc() <= sequential);
        // The first coordinate of the optimum is the minimax load, which
        // the witness realizes.
        assert_eq!(optimal.sorted_desc()[0], optimal.max_load());
    }
}

/// Price systems returned by the checker must survive re-validation.
#[test]
fn priceability_witnesses_validate() {
    use abcelect::phragmen::{check_priceability, verify_price_system, PriceabilityCheck};
    let mut rng = rng(127);
    for _ in 0..40 {
        let inst = random_instance(&mut rng, 8, 6, 3, false);
        if (0..inst.num_candidates()).any(|c| inst.supporters(c).is_empty()) {
            continue;
        }
        let committee = rule_x(&inst, &TieOrder::default_for(&inst)).committee;
        match check_priceability(&inst, &committee) {
            PriceabilityCheck::Priceable(system) => {
                assert!(verify_price_system(&inst, &committee, &system));
            }
            PriceabilityCheck::NotPriceable => panic!("budget-rule output is priceable"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Arbitrary input never panics the parser; it errors or parses.
    #[test]
    fn parser_is_panic_free(text in "\\PC{0,60}") {
        let _ = parse_profile(&text);
    }

    #[test]
    fn parser_is_panic_free_on_linebreaks(lines in prop::collection::vec("[0-9 *#a-z:]{0,12}", 0..6)) {
        let _ = parse_profile(&lines.join("\n"));
    }
}

#[test]
fn pav_resists_core_deviations_at_doubled_satisfaction() {
    use abcelect::axioms::{find_core_violation, CoreParams};
    let mut rng = rng(101);
    for _ in 0..60 {
        let inst = random_instance(&mut rng, 8, 7, 4, false);
        let w = make_weights(WeightKind::Pav, inst.committee_size()).unwrap();
        let winners = thiele_exact(&inst, &w).unwrap().committees;
        let relaxed = CoreParams {
            gamma: rat(2),
            eta: Rat::zero(),
            beta: Rat::one(),
        };
        for committee in &winners {
            assert_eq!(
                find_core_violation(&inst, committee, &relaxed).unwrap(),
                None,
                "no coalition doubles every member's satisfaction"
            );
        }
    }
}

#[test]
fn ejr_implies_half_level_average_representation() {
    use abcelect::axioms::proportionality_degree;
    let mut rng = rng(103);
    for _ in 0..40 {
        let inst = random_instance(&mut rng, 8, 6, 4, false);
        for members in KSubsets::new(inst.num_candidates(), inst.committee_size()) {
            let committee = Committee::new(members);
            if !matches!(check_ejr(&inst, &committee).unwrap(), GroupCheck::Satisfied) {
                continue;
            }
            let degrees = proportionality_degree(&inst, &committee).unwrap();
            for (idx, degree) in degrees.iter().enumerate() {
                let level = idx + 1;
                if let Some(average) = degree {
                    assert!(
                        *average >= frac(level as i64 - 1, 2),
                        "level {level}: average {average} below the guarantee"
                    );
                }
            }
        }
    }
}

#[test]
fn proportionality_degree_reports_missing_groups() {
    use abcelect::axioms::proportionality_degree;
    // Two voters share one candidate, but nobody shares two, so no
    // level-2 group exists.
    let inst = parse_profile("4 2\n0\n0\n1\n2\n").unwrap();
    let committee = Committee::new(vec![0, 1]);
    let degrees = proportionality_degree(&inst, &committee).unwrap();
    assert_eq!(degrees[0], Some(rat(1)));
    assert_eq!(degrees[1], None);
    // Cross-check both levels against the voter-subset oracle.
    assert_eq!(degrees[0], proportionality_degree_oracle(&inst, &committee, 1));
    assert_eq!(degrees[1], proportionality_degree_oracle(&inst, &committee, 2));
}

#[test]
fn scores_match_per_ballot_recomputation() {
    let mut rng = rng(107);
    for _ in 0..60 {
        let inst = random_instance(&mut rng, 6, 6, 4, true);
        let committee = Committee::new((0..inst.committee_size()).collect());
        // Generic scoring: direct summation over ballots.
        let f = ScoringFunction::sav(inst.num_candidates());
        let direct: Rat = (0..inst.num_voters())
            .map(|v| {
                let ballot = inst.ballot(v);
                let hits = ballot.iter().filter(|&&c| committee.contains(c)).count();
                if ballot.is_empty() {
                    Rat::zero()
                } else {
                    frac(hits as i64, ballot.len() as i64)
                }
            })
            .sum();
        assert_eq!(
            abcelect::thiele::abc_scoring_score(&inst, &committee, &f),
            direct
        );
        // Minimax distance: max over recomputed Hamming distances.
        let direct_max = (0..inst.num_voters())
            .map(|v| {
                let ballot = inst.ballot(v);
                let hits = ballot.iter().filter(|&&c| committee.contains(c)).count();
                (ballot.len() - hits) + (inst.committee_size() - hits)
            })
            .max()
            .unwrap();
        assert_eq!(
            abcelect::minimax::mav_score(&inst, &committee),
            direct_max
        );
    }
}

#[test]
fn sequential_rules_are_committee_monotone_by_construction() {
    use abcelect::axioms::{probe_committee_monotonicity, MonotonicityProbe};
    let mut rng = rng(109);
    for _ in 0..30 {
        let inst = random_instance(&mut rng, 8, 6, 1, false);
        let max_size = inst.num_candidates();
        let mut rule = |e: &ElectionInstance| {
            Ok(seq_phragmen(e, &TieOrder::default_for(e)).committee)
        };
        assert_eq!(
            probe_committee_monotonicity(&mut rule, &inst, max_size).unwrap(),
            MonotonicityProbe::ChainHolds
        );
        let mut greedy = |e: &ElectionInstance| {
            let w = make_weights(WeightKind::Pav, e.committee_size()).unwrap();
            Ok(seq_thiele(e, &w, &TieOrder::default_for(e)).committee)
        };
        assert_eq!(
            probe_committee_monotonicity(&mut greedy, &inst, max_size).unwrap(),
            MonotonicityProbe::ChainHolds
        );
    }
}

#[test]
fn apportionment_quota_properties() {
    let mut rng = rng(97);
    for _ in 0..200 {
        let p = rng.gen_range(1..=6);
        let votes: Vec<u64> = (0..p).map(|_| rng.gen_range(0..=40)).collect();
        if votes.iter().all(|&v| v == 0) {
            continue;
        }
        let seats = rng.gen_range(1..=12);
        let inst = ApportionmentInstance::new(votes, seats).unwrap();
        let dh = dhondt(&inst);
        assert_eq!(dh.seats.iter().sum::<usize>(), seats);
        assert!(satisfies_lower_quota(&inst, &dh.seats));
        let sl = sainte_lague(&inst);
        assert_eq!(sl.seats.iter().sum::<usize>(), seats);
        let lrm = largest_remainder(&inst);
        assert_eq!(lrm.seats.iter().sum::<usize>(), seats);
        assert!(satisfies_lower_quota(&inst, &lrm.seats));
        assert!(satisfies_upper_quota(&inst, &lrm.seats));
    }
}
