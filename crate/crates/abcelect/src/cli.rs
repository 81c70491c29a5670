//! The command-line front end.
//!
//! Subcommands: `compute`, `trace`, `check`, `apportion`, `export-ip`.
//! Exit codes: 0 success / axiom satisfied, 2 axiom violated, 3 check not
//! applicable, 64 usage or input error, 65 enumeration cap exceeded.

use crate::apportion::{dhondt, largest_remainder, sainte_lague, ApportionmentInstance};
use crate::axioms::{
    check_ejr, check_jr, check_pareto_optimal, check_perfect_representation, check_pjr,
    check_condorcet_committee, find_core_violation, CoreParams, GroupCheck, JrCheck,
    ParetoCheck, PrCheck,
};
use crate::ilp::{export_ip, IpRule};
use crate::model::ElectionInstance;
use crate::phragmen::{check_priceability, PriceabilityCheck};
use crate::profile::{format_committee, parse_committee, parse_profile};
use crate::rat::parse_rat;
use crate::rules::{compute_rule, parse_rule_id, render_result};
use crate::model::TieOrder;
use crate::Error;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_CAP: i32 = 65;

const USAGE: &str = "usage:
  abcelect compute --rule <rule> --input <profile> [--trace]
  abcelect trace --rule <rule> --input <profile>
  abcelect check --axiom <axiom> --input <profile> --committee \"{...}\"
                 [--gamma p/q] [--eta p/q] [--beta p/q]
  abcelect apportion --method dhondt|sainte-lague|lrm --votes n1,n2,... --seats k
  abcelect export-ip --rule pav|mav --input <profile>

rules: av cc pav seq-pav revseq-pav seq-cc geom:<p> custom:<w1,w2,...>
       sav mav lex-mav monroe greedy-monroe seq-phragmen lexmin-phragmen rule-x
axioms: jr pjr ejr pareto core priceable pr condorcet";

/// Runs the tool on the given arguments (without the executable name),
/// writing to the supplied streams. Returns the exit code.
pub fn run_cli(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(args, out) {
        Ok(code) => code,
        Err(e) => {
            let code = match &e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_USAGE,
            };
            let _ = writeln!(err, "error: {e}");
            if code == EXIT_USAGE {
                let _ = writeln!(err, "{USAGE}");
            }
            code
        }
    }
}

struct Flags {
    named: Vec<(String, String)>,
    switches: Vec<String>,
}

impl Flags {
    fn parse(args: &[String]) -> Result<Self, Error> {
        let mut named = Vec::new();
        let mut switches = Vec::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            let Some(name) = arg.strip_prefix("--") else {
                return Err(Error::Invalid(format!("unexpected argument `{arg}`")));
            };
            if name == "trace" {
                switches.push(name.to_string());
                continue;
            }
            let value = it
                .next()
                .ok_or_else(|| Error::Invalid(format!("flag --{name} needs a value")))?;
            named.push((name.to_string(), value.clone()));
        }
        Ok(Flags { named, switches })
    }

    fn get(&self, name: &str) -> Result<&str, Error> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| Error::Invalid(format!("missing required flag --{name}")))
    }

    fn get_opt(&self, name: &str) -> Option<&str> {
        self.named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn has_switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }
}

fn load_instance(path: &str) -> Result<ElectionInstance, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read `{path}`: {e}")))?;
    parse_profile(&text)
}

fn dispatch(args: &[String], out: &mut dyn Write) -> Result<i32, Error> {
    let Some(command) = args.first() else {
        return Err(Error::Invalid("missing subcommand".into()));
    };
    let flags = Flags::parse(&args[1..])?;
    match command.as_str() {
        "compute" => cmd_compute(&flags, flags.has_switch("trace"), out),
        "trace" => cmd_compute(&flags, true, out),
        "check" => cmd_check(&flags, out),
        "apportion" => cmd_apportion(&flags, out),
        "export-ip" => cmd_export_ip(&flags, out),
        other => Err(Error::Invalid(format!("unknown subcommand `{other}`"))),
    }
}

fn cmd_compute(flags: &Flags, trace: bool, out: &mut dyn Write) -> Result<i32, Error> {
    let rule = parse_rule_id(flags.get("rule")?)?;
    let inst = load_instance(flags.get("input")?)?;
    let tie = TieOrder::default_for(&inst);
    let result = compute_rule(&rule, &inst, &tie)?;
    if trace {
        for line in &result.trace {
            let _ = writeln!(out, "{line}");
        }
    }
    let _ = write!(out, "{}", render_result(&inst, &result));
    Ok(EXIT_OK)
}

fn cmd_check(flags: &Flags, out: &mut dyn Write) -> Result<i32, Error> {
    let inst = load_instance(flags.get("input")?)?;
    let committee = parse_committee(&inst, flags.get("committee")?)?;
    if committee.len() != inst.committee_size() {
        return Err(Error::Invalid(format!(
            "committee has {} members, expected {}",
            committee.len(),
            inst.committee_size()
        )));
    }
    let axiom = flags.get("axiom")?;
    let code = match axiom {
        "jr" => match check_jr(&inst, &committee) {
            JrCheck::Satisfied => {
                let _ = writeln!(out, "satisfied");
                EXIT_OK
            }
            JrCheck::Violated(v) => {
                let voters: Vec<String> =
                    v.group.voters.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    out,
                    "violated: candidate {} is approved by {} unrepresented voters [{}]",
                    inst.candidate_label(v.candidate),
                    v.group.voters.len(),
                    voters.join(",")
                );
                EXIT_VIOLATED
            }
        },
        "pjr" | "ejr" => {
            let outcome = if axiom == "pjr" {
                check_pjr(&inst, &committee)?
            } else {
                check_ejr(&inst, &committee)?
            };
            match outcome {
                GroupCheck::Satisfied => {
                    let _ = writeln!(out, "satisfied");
                    EXIT_OK
                }
                GroupCheck::Violated(group) => {
                    let voters: Vec<String> =
                        group.voters.iter().map(usize::to_string).collect();
                    let common: Vec<String> = group
                        .common
                        .iter()
                        .map(|&c| inst.candidate_label(c))
                        .collect();
                    let _ = writeln!(
                        out,
                        "violated: level-{} group of {} voters [{}] agreeing on {{{}}}",
                        group.level,
                        group.voters.len(),
                        voters.join(","),
                        common.join(",")
                    );
                    EXIT_VIOLATED
                }
            }
        }
        "pareto" => match check_pareto_optimal(&inst, &committee)? {
            ParetoCheck::Optimal => {
                let _ = writeln!(out, "satisfied");
                EXIT_OK
            }
            ParetoCheck::DominatedBy(w) => {
                let _ = writeln!(out, "violated: dominated by {}", format_committee(&inst, &w));
                EXIT_VIOLATED
            }
        },
        "core" => {
            let params = CoreParams {
                gamma: flags
                    .get_opt("gamma")
                    .map(parse_rat)
                    .transpose()?
                    .unwrap_or_else(|| CoreParams::default().gamma),
                eta: flags
                    .get_opt("eta")
                    .map(parse_rat)
                    .transpose()?
                    .unwrap_or_else(|| CoreParams::default().eta),
                beta: flags
                    .get_opt("beta")
                    .map(parse_rat)
                    .transpose()?
                    .unwrap_or_else(|| CoreParams::default().beta),
            };
            match find_core_violation(&inst, &committee, &params)? {
                None => {
                    let _ = writeln!(out, "satisfied");
                    EXIT_OK
                }
                Some(dev) => {
                    let voters: Vec<String> =
                        dev.voters.iter().map(usize::to_string).collect();
                    let alts: Vec<String> = dev
                        .alternatives
                        .iter()
                        .map(|&c| inst.candidate_label(c))
                        .collect();
                    let _ = writeln!(
                        out,
                        "violated: voters [{}] deviate to {{{}}}",
                        voters.join(","),
                        alts.join(",")
                    );
                    EXIT_VIOLATED
                }
            }
        }
        "priceable" => match check_priceability(&inst, &committee) {
            PriceabilityCheck::Priceable(system) => {
                let _ = writeln!(out, "satisfied: budget {}", system.budget);
                EXIT_OK
            }
            PriceabilityCheck::NotPriceable => {
                let _ = writeln!(out, "violated: no price system exists");
                EXIT_VIOLATED
            }
        },
        "pr" => match check_perfect_representation(&inst, &committee) {
            PrCheck::Represented(partition) => {
                let _ = writeln!(out, "satisfied");
                for (member, group) in &partition.groups {
                    let voters: Vec<String> = group.iter().map(usize::to_string).collect();
                    let _ = writeln!(
                        out,
                        "  {} represents [{}]",
                        inst.candidate_label(*member),
                        voters.join(",")
                    );
                }
                EXIT_OK
            }
            PrCheck::Violated => {
                let _ = writeln!(out, "violated: no perfect partition exists");
                EXIT_VIOLATED
            }
            PrCheck::NotApplicable => {
                let _ = writeln!(
                    out,
                    "not applicable: committee size does not divide the voter count"
                );
                EXIT_NOT_APPLICABLE
            }
        },
        "condorcet" => {
            if check_condorcet_committee(&inst, &committee)? {
                let _ = writeln!(out, "satisfied");
                EXIT_OK
            } else {
                let _ = writeln!(out, "violated: some rival committee is majority-preferred");
                EXIT_VIOLATED
            }
        }
        other => return Err(Error::Invalid(format!("unknown axiom `{other}`"))),
    };
    Ok(code)
}

fn cmd_apportion(flags: &Flags, out: &mut dyn Write) -> Result<i32, Error> {
    let votes: Result<Vec<u64>, Error> = flags
        .get("votes")?
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Error::Invalid(format!("bad vote count `{tok}`")))
        })
        .collect();
    let seats: usize = flags
        .get("seats")?
        .parse()
        .map_err(|_| Error::Invalid("bad seat count".into()))?;
    let inst = ApportionmentInstance::new(votes?, seats)?;
    let allocation = match flags.get("method")? {
        "dhondt" => dhondt(&inst),
        "sainte-lague" => sainte_lague(&inst),
        "lrm" => largest_remainder(&inst),
        other => return Err(Error::Invalid(format!("unknown method `{other}`"))),
    };
    let seats: Vec<String> = allocation.seats.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "{}", seats.join(" "));
    Ok(EXIT_OK)
}

fn cmd_export_ip(flags: &Flags, out: &mut dyn Write) -> Result<i32, Error> {
    let rule = match flags.get("rule")? {
        "pav" => IpRule::Pav,
        "mav" => IpRule::Mav,
        other => {
            return Err(Error::Invalid(format!(
                "no integer-program encoding for `{other}`"
            )))
        }
    };
    let inst = load_instance(flags.get("input")?)?;
    let model = export_ip(&inst, rule);
    let _ = write!(out, "{model}");
    Ok(EXIT_OK)
}
