//! An exact-arithmetic engine for approval-based committee (ABC) elections.
//!
//! Given an approval profile (each voter approves a subset of candidates) and
//! a committee size `k`, this crate computes winning committees under a range
//! of rules and audits committees against representation axioms. All scores,
//! loads, budgets and payments are arbitrary-precision rationals, so results
//! such as a Phragmén round load of `55/128` are reproduced exactly.
//!
//! Rule families:
//!
//! * [`thiele`]: Thiele methods (AV, CC, PAV, geometric and custom
//!   weights), their sequential and reverse-sequential variants, and
//!   generic ABC scoring rules such as SAV.
//! * [`monroe`]: Monroe's rule (exact, via balanced-assignment min-cost
//!   flows) and Greedy Monroe.
//! * [`phragmen`]: Phragmén's sequential rule, the lexmin load-balancing
//!   variant, and the budget-based two-phase method.
//! * [`minimax`]: minimax approval voting and its lexicographic
//!   refinement.
//! * [`apportion`]: party-list apportionment (D'Hondt, Sainte-Laguë,
//!   largest remainders) and detection of party-list structure.
//!
//! Axiom checkers ([`axioms`]) decide Pareto optimality, Condorcet
//! committees, justified representation (JR/PJR/EJR), proportionality
//! degree, core stability (with multiplicative/additive relaxations),
//! priceability, perfect representation and committee monotonicity, always
//! returning an explicit witness for violations.
//!
//! The `examples/` directory contains one runnable program per capability;
//! a thin `abcelect` binary exposes the same operations on profile files.
//!
//! ```
//! use abcelect::profile::parse_profile;
//! use abcelect::thiele::{make_weights, thiele_exact, WeightKind};
//!
//! // Two voters approving {0,1}, one approving {1,2}; two seats.
//! let inst = parse_profile("3 2\n2 * 0 1\n1 2\n")?;
//! let weights = make_weights(WeightKind::Pav, inst.committee_size())?;
//! let outcome = thiele_exact(&inst, &weights)?;
//! assert_eq!(outcome.committees.len(), 1);
//! assert_eq!(outcome.score.to_string(), "4");
//! # Ok::<(), abcelect::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod apportion;
pub mod axioms;
pub mod cli;
pub mod flow;
pub mod ilp;
pub mod lp;
pub mod minimax;
pub mod model;
pub mod monroe;
pub mod phragmen;
pub mod profile;
pub mod rat;
pub mod rules;
pub mod subsets;
pub mod thiele;

pub use model::{Committee, ElectionInstance, RuleResult, TieOrder};
pub use rat::Rat;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error("search space of {candidates} choose {seats} exceeds the enumeration cap of {cap}")]
    CapExceeded {
        candidates: usize,
        seats: usize,
        cap: u64,
    },
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
}
