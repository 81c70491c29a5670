//! Exact linear programming over rationals.
//!
//! A dense two-phase simplex with Bland's anti-cycling rule. Everything is
//! computed in arbitrary-precision rational arithmetic, so feasibility and
//! optimality answers are exact; returned assignments satisfy every
//! constraint with equality-level precision. Intended for the desk-scale
//! systems produced by priceability and load-balancing checks, not for
//! large-scale optimization.

use crate::rat::Rat;
use num::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

/// A linear program over named variables with optional per-variable bounds.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    var_names: Vec<String>,
    constraints: Vec<(Vec<Rat>, Rel, Rat)>,
    objective: Option<(Vec<Rat>, Direction)>,
    bounds: Vec<(Option<Rat>, Option<Rat>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// An optimal assignment (any feasible one when there is no objective).
    Optimal { assignment: Vec<Rat>, value: Rat },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(var_names: Vec<String>) -> Self {
        let n = var_names.len();
        LinearProgram {
            var_names,
            constraints: Vec::new(),
            objective: None,
            bounds: vec![(None, None); n],
        }
    }

    /// Convenience constructor with anonymous variables.
    pub fn with_vars(num_vars: usize) -> Self {
        Self::new((0..num_vars).map(|i| format!("x{i}")).collect())
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn constraint(&mut self, coeffs: Vec<Rat>, rel: Rel, rhs: Rat) {
        assert_eq!(coeffs.len(), self.num_vars(), "coefficient vector length");
        self.constraints.push((coeffs, rel, rhs));
    }

    pub fn objective(&mut self, coeffs: Vec<Rat>, direction: Direction) {
        assert_eq!(coeffs.len(), self.num_vars(), "objective vector length");
        self.objective = Some((coeffs, direction));
    }

    pub fn bound_lower(&mut self, var: usize, lo: Rat) {
        self.bounds[var].0 = Some(lo);
    }

    pub fn bound_upper(&mut self, var: usize, hi: Rat) {
        self.bounds[var].1 = Some(hi);
    }

    pub fn constraints(&self) -> &[(Vec<Rat>, Rel, Rat)] {
        &self.constraints
    }

    /// Checks an assignment against all constraints and bounds.
    pub fn satisfies(&self, assignment: &[Rat]) -> bool {
        for (coeffs, rel, rhs) in &self.constraints {
            let lhs: Rat = coeffs
                .iter()
                .zip(assignment)
                .map(|(c, x)| c * x)
                .sum();
            let ok = match rel {
                Rel::Le => lhs <= *rhs,
                Rel::Eq => lhs == *rhs,
                Rel::Ge => lhs >= *rhs,
            };
            if !ok {
                return false;
            }
        }
        for (x, (lo, hi)) in assignment.iter().zip(&self.bounds) {
            if lo.as_ref().is_some_and(|l| x < l) || hi.as_ref().is_some_and(|h| x > h) {
                return false;
            }
        }
        true
    }
}

/// Solves the program exactly.
pub fn lp_solve(lp: &LinearProgram) -> LpOutcome {
    let outcome = Standardized::build(lp).solve();
    if let LpOutcome::Optimal { assignment, .. } = &outcome {
        debug_assert!(
            lp.satisfies(assignment),
            "exact arithmetic must return exactly feasible points"
        );
    }
    outcome
}

/// The program rewritten over non-negative variables.
struct Standardized {
    /// For each original variable: how to recover it from solver variables.
    recover: Vec<Recover>,
    /// Rows as (coeffs over solver vars, Rel, rhs).
    rows: Vec<(Vec<Rat>, Rel, Rat)>,
    /// Objective over solver vars plus a constant, as a minimization.
    minimize: Vec<Rat>,
    obj_constant: Rat,
    obj_flip: bool,
    num_solver_vars: usize,
}

enum Recover {
    /// x = shift + y_j
    Shifted { var: usize, shift: Rat },
    /// x = shift - y_j
    Mirrored { var: usize, shift: Rat },
    /// x = y_pos - y_neg
    Split { pos: usize, neg: usize },
}

impl Standardized {
    fn build(lp: &LinearProgram) -> Self {
        let n = lp.num_vars();
        let mut recover = Vec::with_capacity(n);
        let mut num_solver_vars = 0;
        // Upper bounds that must become rows (expressed over solver vars).
        let mut extra_rows: Vec<(usize, Rat)> = Vec::new(); // (solver var, ub in solver space)

        for (lo, hi) in lp.bounds.iter() {
            match (lo, hi) {
                (Some(l), hi) => {
                    let j = num_solver_vars;
                    num_solver_vars += 1;
                    if let Some(h) = hi {
                        extra_rows.push((j, h - l));
                    }
                    recover.push(Recover::Shifted {
                        var: j,
                        shift: l.clone(),
                    });
                }
                (None, Some(h)) => {
                    let j = num_solver_vars;
                    num_solver_vars += 1;
                    recover.push(Recover::Mirrored {
                        var: j,
                        shift: h.clone(),
                    });
                }
                (None, None) => {
                    let pos = num_solver_vars;
                    let neg = num_solver_vars + 1;
                    num_solver_vars += 2;
                    recover.push(Recover::Split { pos, neg });
                }
            }
        }

        let to_solver = |coeffs: &[Rat]| -> (Vec<Rat>, Rat) {
            // Returns (solver coefficients, constant shift contributed).
            let mut out = vec![Rat::zero(); num_solver_vars];
            let mut constant = Rat::zero();
            for (orig, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match &recover[orig] {
                    Recover::Shifted { var, shift } => {
                        out[*var] += c;
                        constant += c * shift;
                    }
                    Recover::Mirrored { var, shift } => {
                        out[*var] -= c;
                        constant += c * shift;
                    }
                    Recover::Split { pos, neg } => {
                        out[*pos] += c;
                        out[*neg] -= c;
                    }
                }
            }
            (out, constant)
        };

        let mut rows = Vec::new();
        for (coeffs, rel, rhs) in &lp.constraints {
            let (solver_coeffs, constant) = to_solver(coeffs);
            rows.push((solver_coeffs, *rel, rhs - constant));
        }
        for (j, ub) in extra_rows {
            let mut coeffs = vec![Rat::zero(); num_solver_vars];
            coeffs[j] = Rat::one();
            rows.push((coeffs, Rel::Le, ub));
        }

        let (minimize, obj_constant, obj_flip) = match &lp.objective {
            Some((coeffs, dir)) => {
                let (mut solver_coeffs, constant) = to_solver(coeffs);
                let flip = *dir == Direction::Maximize;
                if flip {
                    for c in solver_coeffs.iter_mut() {
                        *c = -c.clone();
                    }
                }
                (solver_coeffs, constant, flip)
            }
            None => (vec![Rat::zero(); num_solver_vars], Rat::zero(), false),
        };

        Standardized {
            recover,
            rows,
            minimize,
            obj_constant,
            obj_flip,
            num_solver_vars,
        }
    }

    fn solve(self) -> LpOutcome {
        let mut tableau = Tableau::new(self.num_solver_vars, &self.rows);
        if !tableau.phase_one() {
            return LpOutcome::Infeasible;
        }
        match tableau.phase_two(&self.minimize) {
            PhaseTwo::Unbounded => LpOutcome::Unbounded,
            PhaseTwo::Optimal => {
                let solver_values = tableau.solution();
                let mut assignment = Vec::with_capacity(self.recover.len());
                for r in &self.recover {
                    let x = match r {
                        Recover::Shifted { var, shift } => shift + &solver_values[*var],
                        Recover::Mirrored { var, shift } => shift - &solver_values[*var],
                        Recover::Split { pos, neg } => {
                            &solver_values[*pos] - &solver_values[*neg]
                        }
                    };
                    assignment.push(x);
                }
                let raw: Rat = self
                    .minimize
                    .iter()
                    .zip(&solver_values)
                    .map(|(c, x)| c * x)
                    .sum();
                let value = if self.obj_flip {
                    &self.obj_constant - raw
                } else {
                    &self.obj_constant + raw
                };
                LpOutcome::Optimal { assignment, value }
            }
        }
    }
}

enum PhaseTwo {
    Optimal,
    Unbounded,
}

/// Dense simplex tableau over structural, slack and artificial columns.
struct Tableau {
    /// rows[i][j] for j in 0..total_cols, plus rhs at index total_cols.
    rows: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    num_structural: usize,
    num_artificial: usize,
    total_cols: usize,
}

impl Tableau {
    fn new(num_structural: usize, constraints: &[(Vec<Rat>, Rel, Rat)]) -> Self {
        let m = constraints.len();
        // One slack per inequality, one artificial per row that needs it.
        let mut slack_of_row: Vec<Option<usize>> = vec![None; m];
        let mut num_slack = 0;
        for (i, (_, rel, _)) in constraints.iter().enumerate() {
            match rel {
                Rel::Le | Rel::Ge => {
                    slack_of_row[i] = Some(num_slack);
                    num_slack += 1;
                }
                Rel::Eq => {}
            }
        }
        let total_structural_slack = num_structural + num_slack;
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
        let mut needs_artificial: Vec<bool> = Vec::with_capacity(m);

        for (i, (coeffs, rel, rhs)) in constraints.iter().enumerate() {
            let mut row = vec![Rat::zero(); total_structural_slack + 1];
            for (j, c) in coeffs.iter().enumerate() {
                row[j] = c.clone();
            }
            let mut rhs = rhs.clone();
            let mut slack_sign = match rel {
                Rel::Le => Rat::one(),
                Rel::Ge => -Rat::one(),
                Rel::Eq => Rat::zero(),
            };
            // Normalize to a non-negative right-hand side.
            if rhs.is_negative() {
                for c in row.iter_mut() {
                    *c = -c.clone();
                }
                rhs = -rhs;
                slack_sign = -slack_sign;
            }
            if let Some(s) = slack_of_row[i] {
                row[num_structural + s] = slack_sign.clone();
            }
            *row.last_mut().unwrap() = rhs;
            // A +1 slack can serve as the initial basic variable.
            needs_artificial.push(!(slack_of_row[i].is_some() && slack_sign.is_one()));
            rows.push(row);
        }

        let num_artificial = needs_artificial.iter().filter(|&&b| b).count();
        let total_cols = total_structural_slack + num_artificial;
        let mut basis = vec![0usize; m];
        let mut art = 0;
        for (i, row) in rows.iter_mut().enumerate() {
            let rhs = row.pop().unwrap();
            row.resize(total_cols, Rat::zero());
            row.push(rhs);
            if needs_artificial[i] {
                row[total_structural_slack + art] = Rat::one();
                basis[i] = total_structural_slack + art;
                art += 1;
            } else {
                basis[i] = num_structural + slack_of_row[i].unwrap();
            }
        }

        Tableau {
            rows,
            basis,
            num_structural,
            num_artificial,
            total_cols,
        }
    }

    fn is_artificial(&self, col: usize) -> bool {
        col >= self.total_cols - self.num_artificial
    }

    /// Minimizes the sum of artificial variables; true when it reaches zero.
    fn phase_one(&mut self) -> bool {
        if self.num_artificial == 0 {
            return true;
        }
        let mut cost = vec![Rat::zero(); self.total_cols];
        for col in self.total_cols - self.num_artificial..self.total_cols {
            cost[col] = Rat::one();
        }
        match self.optimize(&cost, false) {
            PhaseTwo::Unbounded => unreachable!("phase-one objective is bounded below by zero"),
            PhaseTwo::Optimal => {}
        }
        let value: Rat = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| self.is_artificial(b))
            .map(|(i, _)| self.rows[i][self.total_cols].clone())
            .sum();
        if !value.is_zero() {
            return false;
        }
        // Pivot out artificials that linger in the basis at level zero.
        for i in 0..self.rows.len() {
            if self.is_artificial(self.basis[i]) {
                let pivot_col = (0..self.total_cols - self.num_artificial)
                    .find(|&j| !self.rows[i][j].is_zero());
                if let Some(j) = pivot_col {
                    self.pivot(i, j);
                }
                // A fully-zero row is redundant and can stay as is.
            }
        }
        true
    }

    fn phase_two(&mut self, minimize: &[Rat]) -> PhaseTwo {
        let mut cost = vec![Rat::zero(); self.total_cols];
        cost[..minimize.len()].clone_from_slice(minimize);
        self.optimize(&cost, true)
    }

    /// Simplex iterations with Bland's rule on the given cost vector.
    /// When `forbid_artificial` is set, artificial columns never enter.
    fn optimize(&mut self, cost: &[Rat], forbid_artificial: bool) -> PhaseTwo {
        loop {
            let reduced = self.reduced_costs(cost);
            // Bland: entering variable = lowest index with negative reduced cost.
            let entering = (0..self.total_cols).find(|&j| {
                !(forbid_artificial && self.is_artificial(j)) && reduced[j].is_negative()
            });
            let entering = match entering {
                Some(j) => j,
                None => return PhaseTwo::Optimal,
            };
            // Ratio test; Bland: break ties by lowest basis variable index.
            let mut leaving: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                let coef = &self.rows[i][entering];
                if coef.is_positive() {
                    let ratio = &self.rows[i][self.total_cols] / coef;
                    let better = match &leaving {
                        None => true,
                        Some((best_i, best_ratio)) => {
                            ratio < *best_ratio
                                || (ratio == *best_ratio
                                    && self.basis[i] < self.basis[*best_i])
                        }
                    };
                    if better {
                        leaving = Some((i, ratio));
                    }
                }
            }
            match leaving {
                None => return PhaseTwo::Unbounded,
                Some((row, _)) => self.pivot(row, entering),
            }
        }
    }

    fn reduced_costs(&self, cost: &[Rat]) -> Vec<Rat> {
        // y = c_B B^{-1} is implicit: the tableau rows are already B^{-1} A.
        let mut reduced = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.total_cols {
                let a = &self.rows[i][j];
                if !a.is_zero() {
                    reduced[j] -= cb * a;
                }
            }
        }
        reduced
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        debug_assert!(!pivot.is_zero());
        for x in self.rows[row].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..=self.total_cols {
                let delta = &factor * &self.rows[row][j];
                self.rows[i][j] -= delta;
            }
        }
        self.basis[row] = col;
    }

    fn solution(&self) -> Vec<Rat> {
        let mut values = vec![Rat::zero(); self.num_structural];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.num_structural {
                values[b] = self.rows[i][self.total_cols].clone();
            }
        }
        values
    }
}
