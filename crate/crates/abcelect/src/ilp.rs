//! Integer-program export.
//!
//! Two rules whose exact computation is NP-hard can be exported as plain
//! integer programs for external solvers. The text grammar is fixed:
//!
//! ```text
//! IP v1
//! var <name> binary|integer
//! min|max: <coeff> <var> [+ <coeff> <var> ...]
//! <coeff> <var> [+ <coeff> <var> ...] <=|=|>= <rhs>
//! ```
//!
//! Coefficients and right-hand sides are canonical rationals (`p/q`, bare
//! integers without the denominator). The exporter's output re-parses
//! under [`parse_ip`].

use crate::model::ElectionInstance;
use crate::rat::{frac_usize, parse_rat, rat_usize, Rat};
use crate::Error;
use num::One;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Binary,
    /// Non-negative integer.
    Integer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IpRel {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IpDirection {
    Minimize,
    Maximize,
}

/// A linear expression as (coefficient, variable name) terms.
pub type IpExpr = Vec<(Rat, String)>;

/// An integer program over named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IpModel {
    pub variables: Vec<(String, VarKind)>,
    pub objective: (IpDirection, IpExpr),
    pub constraints: Vec<(IpExpr, IpRel, Rat)>,
}

impl IpModel {
    /// Variable names must be unique and constraints may only reference
    /// declared variables.
    pub fn validate(&self) -> Result<(), Error> {
        let mut seen = std::collections::BTreeSet::new();
        for (name, _) in &self.variables {
            if !seen.insert(name.clone()) {
                return Err(Error::Invalid(format!("duplicate variable `{name}`")));
            }
        }
        let check_expr = |expr: &IpExpr| -> Result<(), Error> {
            for (_, name) in expr {
                if !seen.contains(name) {
                    return Err(Error::Invalid(format!("undeclared variable `{name}`")));
                }
            }
            Ok(())
        };
        check_expr(&self.objective.1)?;
        for (expr, _, _) in &self.constraints {
            check_expr(expr)?;
        }
        Ok(())
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, expr: &IpExpr) -> fmt::Result {
    for (i, (coeff, var)) in expr.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        write!(f, "{coeff} {var}")?;
    }
    Ok(())
}

impl fmt::Display for IpModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IP v1")?;
        for (name, kind) in &self.variables {
            let kind = match kind {
                VarKind::Binary => "binary",
                VarKind::Integer => "integer",
            };
            writeln!(f, "var {name} {kind}")?;
        }
        match self.objective.0 {
            IpDirection::Minimize => write!(f, "min: ")?,
            IpDirection::Maximize => write!(f, "max: ")?,
        }
        write_expr(f, &self.objective.1)?;
        writeln!(f)?;
        for (expr, rel, rhs) in &self.constraints {
            write_expr(f, expr)?;
            let rel = match rel {
                IpRel::Le => "<=",
                IpRel::Eq => "=",
                IpRel::Ge => ">=",
            };
            writeln!(f, " {rel} {rhs}")?;
        }
        Ok(())
    }
}

/// Rules with a canned integer-program encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IpRule {
    Pav,
    Mav,
}

/// Builds the integer program computing the given rule on the instance.
pub fn export_ip(inst: &ElectionInstance, rule: IpRule) -> IpModel {
    match rule {
        IpRule::Pav => pav_model(inst),
        IpRule::Mav => mav_model(inst),
    }
}

/// Selection variables `y_<c>` plus satisfaction-level indicators
/// `x_<voter>_<level>`: voter `i` contributes `1/level` for each level she
/// fills, and the per-voter levels are tied to her selected approvals.
fn pav_model(inst: &ElectionInstance) -> IpModel {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let m = inst.num_candidates();
    let mut variables = Vec::new();
    for i in 1..=n {
        for level in 1..=k {
            variables.push((format!("x_{i}_{level}"), VarKind::Binary));
        }
    }
    for c in 0..m {
        variables.push((format!("y_{c}"), VarKind::Binary));
    }

    let mut objective_terms = Vec::new();
    for i in 1..=n {
        for level in 1..=k {
            objective_terms.push((frac_usize(1, level), format!("x_{i}_{level}")));
        }
    }

    let mut constraints = Vec::new();
    let committee_size: IpExpr = (0..m).map(|c| (Rat::one(), format!("y_{c}"))).collect();
    constraints.push((committee_size, IpRel::Eq, rat_usize(k)));
    for i in 1..=n {
        let mut expr: IpExpr = (1..=k)
            .map(|level| (Rat::one(), format!("x_{i}_{level}")))
            .collect();
        for &c in inst.ballot(i - 1) {
            expr.push((-Rat::one(), format!("y_{c}")));
        }
        constraints.push((expr, IpRel::Eq, rat_usize(0)));
    }

    IpModel {
        variables,
        objective: (IpDirection::Maximize, objective_terms),
        constraints,
    }
}

/// Selection variables `y_<c>`, disagreement indicators `d_<voter>_<c>`
/// (fixed by the selection), and the bound `D` on every voter's Hamming
/// distance, which is minimized.
fn mav_model(inst: &ElectionInstance) -> IpModel {
    let n = inst.num_voters();
    let k = inst.committee_size();
    let m = inst.num_candidates();
    let mut variables = Vec::new();
    for i in 1..=n {
        for c in 0..m {
            variables.push((format!("d_{i}_{c}"), VarKind::Binary));
        }
    }
    for c in 0..m {
        variables.push((format!("y_{c}"), VarKind::Binary));
    }
    variables.push(("D".to_string(), VarKind::Integer));

    let mut constraints = Vec::new();
    let committee_size: IpExpr = (0..m).map(|c| (Rat::one(), format!("y_{c}"))).collect();
    constraints.push((committee_size, IpRel::Eq, rat_usize(k)));
    for i in 1..=n {
        for c in 0..m {
            if inst.approves(i - 1, c) {
                // d = 1 - y on approved candidates.
                constraints.push((
                    vec![
                        (Rat::one(), format!("d_{i}_{c}")),
                        (Rat::one(), format!("y_{c}")),
                    ],
                    IpRel::Eq,
                    rat_usize(1),
                ));
            } else {
                // d = y on the rest.
                constraints.push((
                    vec![
                        (Rat::one(), format!("d_{i}_{c}")),
                        (-Rat::one(), format!("y_{c}")),
                    ],
                    IpRel::Eq,
                    rat_usize(0),
                ));
            }
        }
    }
    for i in 1..=n {
        let mut expr: IpExpr = (0..m)
            .map(|c| (Rat::one(), format!("d_{i}_{c}")))
            .collect();
        expr.push((-Rat::one(), "D".to_string()));
        constraints.push((expr, IpRel::Le, rat_usize(0)));
    }

    IpModel {
        variables,
        objective: (IpDirection::Minimize, vec![(Rat::one(), "D".to_string())]),
        constraints,
    }
}

/// Parses the exporter's text format back into a model.
pub fn parse_ip(text: &str) -> Result<IpModel, Error> {
    let mut lines = text.lines().enumerate();
    let err = |line: usize, msg: String| Error::Parse { line: line + 1, msg };
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| err(0, "empty document".into()))?;
    if first.trim() != "IP v1" {
        return Err(err(first_no, "expected header `IP v1`".into()));
    }
    let mut variables = Vec::new();
    let mut objective: Option<(IpDirection, IpExpr)> = None;
    let mut constraints = Vec::new();

    for (no, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("var ") {
            let mut it = rest.split_whitespace();
            let name = it
                .next()
                .ok_or_else(|| err(no, "missing variable name".into()))?;
            let kind = match it.next() {
                Some("binary") => VarKind::Binary,
                Some("integer") => VarKind::Integer,
                other => {
                    return Err(err(no, format!("bad variable kind {other:?}")));
                }
            };
            variables.push((name.to_string(), kind));
            continue;
        }
        if let Some(rest) = line.strip_prefix("min:") {
            objective = Some((IpDirection::Minimize, parse_expr(rest, no)?));
            continue;
        }
        if let Some(rest) = line.strip_prefix("max:") {
            objective = Some((IpDirection::Maximize, parse_expr(rest, no)?));
            continue;
        }
        // Constraint line: split on the relation.
        let (rel, rel_str) = if line.contains("<=") {
            (IpRel::Le, "<=")
        } else if line.contains(">=") {
            (IpRel::Ge, ">=")
        } else if line.contains('=') {
            (IpRel::Eq, "=")
        } else {
            return Err(err(no, "expected a constraint relation".into()));
        };
        let mut parts = line.splitn(2, rel_str);
        let lhs = parts.next().unwrap();
        let rhs = parts
            .next()
            .ok_or_else(|| err(no, "missing right-hand side".into()))?;
        constraints.push((parse_expr(lhs, no)?, rel, parse_rat(rhs.trim())?));
    }

    let model = IpModel {
        variables,
        objective: objective
            .ok_or_else(|| err(text.lines().count(), "missing objective".into()))?,
        constraints,
    };
    model.validate()?;
    Ok(model)
}

fn parse_expr(text: &str, line: usize) -> Result<IpExpr, Error> {
    let mut expr = Vec::new();
    for term in text.split('+') {
        let mut it = term.split_whitespace();
        let coeff = it.next().ok_or(Error::Parse {
            line: line + 1,
            msg: "empty term".into(),
        })?;
        let var = it.next().ok_or(Error::Parse {
            line: line + 1,
            msg: format!("term `{term}` is missing a variable"),
        })?;
        expr.push((parse_rat(coeff)?, var.to_string()));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::parse_profile;

    #[test]
    fn pav_model_shape() {
        let inst =
            parse_profile("7 4\n3 * 0 1\n3 * 0 2\n2 * 0 3\n1 2 5\n4\n5\n6\n").unwrap();
        let model = pav_model(&inst);
        let x_vars = model
            .variables
            .iter()
            .filter(|(n, _)| n.starts_with("x_"))
            .count();
        let y_vars = model
            .variables
            .iter()
            .filter(|(n, _)| n.starts_with("y_"))
            .count();
        assert_eq!(x_vars, 12 * 4);
        assert_eq!(y_vars, 7);
        assert_eq!(model.constraints.len(), 1 + 12);
        model.validate().unwrap();
    }

    #[test]
    fn tiny_pav_model() {
        let inst = parse_profile("1 1\n0\n").unwrap();
        let model = pav_model(&inst);
        assert_eq!(model.objective.1, vec![(Rat::one(), "x_1_1".to_string())]);
        // The committee-size constraint forces y_0 = 1.
        assert_eq!(model.constraints[0].1, IpRel::Eq);
        assert_eq!(model.constraints[0].2, rat_usize(1));
    }

    #[test]
    fn round_trip() {
        let inst = parse_profile("3 2\n0 1\n2 * 1 2\n").unwrap();
        for rule in [IpRule::Pav, IpRule::Mav] {
            let model = export_ip(&inst, rule);
            let text = model.to_string();
            let reparsed = parse_ip(&text).unwrap();
            assert_eq!(model, reparsed);
        }
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(parse_ip("nope").is_err());
        assert!(parse_ip("IP v1\nvar x binary\nmin: 1 y\n").is_err());
        assert!(parse_ip("IP v1\nvar x binary\n1 x < 2\n").is_err());
    }
}
