//! Exact linear programming over the rationals for covering programs
//!
//! ```text
//! minimize   Σ x_i
//! subject to a_r · x ≥ b_r   for every row r
//!            x ≥ 0
//! ```
//!
//! The solver runs a dense-tableau simplex with Bland's rule on the dual
//! `max b·y  s.t.  Aᵀy ≤ 1, y ≥ 0`. Unit costs make `y = 0` a feasible
//! starting basis, so no phase one is needed; the primal optimum is read
//! off the reduced costs of the dual slacks. An unbounded dual means the
//! primal is infeasible.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub const MAX_VARS: usize = 500;
pub const MAX_CONSTRAINTS: usize = 20_000;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// One row `Σ coefficients·x ≥ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coefficients: Vec<(usize, Rational)>,
    pub rhs: Rational,
}

impl Constraint {
    /// `Σ_{i ∈ vars} x_i ≥ 1`.
    pub fn covering(vars: impl IntoIterator<Item = usize>) -> Self {
        Constraint {
            coefficients: vars.into_iter().map(|v| (v, Rational::one())).collect(),
            rhs: Rational::one(),
        }
    }

    fn lhs(&self, point: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .fold(Rational::zero(), |acc, (i, a)| acc + a * &point[*i])
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, constraint: Constraint) {
        self.constraints.push(constraint);
    }

    pub fn add_covering_row(&mut self, vars: impl IntoIterator<Item = usize>) {
        self.push(Constraint::covering(vars));
    }

    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && point.iter().all(|x| !x.is_negative())
            && self.constraints.iter().all(|c| c.lhs(point) >= c.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    /// Not produced for unit costs, whose objective is bounded below by 0.
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: Rational,
    pub point: Vec<Rational>,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution> {
    let nv = lp.num_vars;
    let m = lp.constraints.len();
    if nv > MAX_VARS {
        return Err(Error::CapExceeded {
            size: nv,
            cap: MAX_VARS,
        });
    }
    if m > MAX_CONSTRAINTS {
        return Err(Error::CapExceeded {
            size: m,
            cap: MAX_CONSTRAINTS,
        });
    }
    for c in &lp.constraints {
        if let Some(&(i, _)) = c.coefficients.iter().find(|(i, _)| *i >= nv) {
            return Err(Error::InvalidInput(format!(
                "coefficient on variable {i} of a program with {nv} variables"
            )));
        }
    }

    let mut tableau = DualTableau::new(lp);
    if !tableau.run() {
        return Ok(LpSolution {
            status: LpStatus::Infeasible,
            value: Rational::zero(),
            point: Vec::new(),
        });
    }
    let point: Vec<Rational> = (0..nv).map(|i| tableau.objective[m + i].clone()).collect();
    let value = tableau.objective_rhs.clone();

    if !lp.is_feasible(&point) || point.iter().fold(Rational::zero(), |a, x| a + x) != value {
        return Err(Error::Internal(
            "simplex returned a point that fails the post-check".into(),
        ));
    }
    Ok(LpSolution {
        status: LpStatus::Optimal,
        value,
        point,
    })
}

/// Tableau of the dual in standard form: columns are the dual variables
/// `y_0..y_{m-1}` followed by the slacks `s_0..s_{nv-1}`; row `i` is the dual
/// constraint of primal variable `i`.
struct DualTableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs, stored as the row `z − b·y = 0`.
    objective: Vec<Rational>,
    objective_rhs: Rational,
}

impl DualTableau {
    fn new(lp: &LinearProgram) -> Self {
        let nv = lp.num_vars;
        let m = lp.constraints.len();
        let width = m + nv;
        let mut rows = vec![vec![Rational::zero(); width]; nv];
        for (r, c) in lp.constraints.iter().enumerate() {
            for (i, a) in &c.coefficients {
                rows[*i][r] += a;
            }
        }
        for (i, row) in rows.iter_mut().enumerate() {
            row[m + i] = Rational::one();
        }
        let mut objective = vec![Rational::zero(); width];
        for (r, c) in lp.constraints.iter().enumerate() {
            objective[r] = -c.rhs.clone();
        }
        DualTableau {
            rows,
            rhs: vec![Rational::one(); nv],
            basis: (m..m + nv).collect(),
            objective,
            objective_rhs: Rational::zero(),
        }
    }

    /// Pivots to optimality. Returns `false` when the dual is unbounded.
    fn run(&mut self) -> bool {
        loop {
            // Bland: lowest-index improving column.
            let Some(enter) = self.objective.iter().position(Signed::is_negative) else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let q = &self.rhs[i] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((j, best)) => q < *best || (q == *best && self.basis[i] < self.basis[*j]),
                };
                if better {
                    leave = Some((i, q));
                }
            }
            let Some((pivot_row, _)) = leave else {
                return false;
            };
            self.pivot(pivot_row, enter);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for a in self.rows[r].iter_mut() {
                if !a.is_zero() {
                    *a /= &p;
                }
            }
            self.rhs[r] /= &p;
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();

        let eliminate = |row: &mut Vec<Rational>, rhs: &mut Rational| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nonzero {
                row[j] -= &f * &pivot_row[j];
            }
            *rhs -= &f * &pivot_rhs;
        };
        for i in 0..self.rows.len() {
            if i != r {
                eliminate(&mut self.rows[i], &mut self.rhs[i]);
            }
        }
        eliminate(&mut self.objective, &mut self.objective_rhs);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }
}
