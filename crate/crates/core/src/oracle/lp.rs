//! Exact phase-one simplex for rational feasibility problems.

use num_traits::{Signed, Zero};

use crate::error::{LppError, Result};
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    /// `⟨a, x⟩ >= b`
    Ge,
    /// `⟨a, x⟩ = b`
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarDomain {
    Free,
    NonNegative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpRow {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

/// A system of linear constraints over rational variables.
#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem {
    pub domains: Vec<VarDomain>,
    pub rows: Vec<LpRow>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

impl LpProblem {
    pub fn new(num_vars: usize, domain: VarDomain) -> Self {
        Self {
            domains: vec![domain; num_vars],
            rows: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.domains.len()
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, sense: Sense, rhs: Rational) -> &mut Self {
        self.rows.push(LpRow { coeffs, sense, rhs });
        self
    }

    fn check(&self) -> Result<()> {
        let n = self.num_vars();
        match self.rows.iter().find(|r| r.coeffs.len() != n) {
            Some(row) => Err(LppError::DimensionMismatch {
                expected: n,
                actual: row.coeffs.len(),
            }),
            None => Ok(()),
        }
    }

    /// Whether `x` satisfies every row and domain exactly.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let domains_ok = self
            .domains
            .iter()
            .zip(x)
            .all(|(d, v)| *d == VarDomain::Free || !v.is_negative());
        domains_ok
            && self.rows.iter().all(|row| {
                let lhs = row
                    .coeffs
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, v)| acc + a * v);
                match row.sense {
                    Sense::Ge => lhs >= row.rhs,
                    Sense::Eq => lhs == row.rhs,
                }
            })
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    cost: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        let pivot_row = self.rows[row].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for (x, y) in target.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        };
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(r);
            }
        }
        eliminate(&mut self.cost);
        self.basis[row] = col;
    }
}

/// Decides feasibility exactly with phase one of the simplex method.
///
/// Free variables are split into positive and negative parts, `>=` rows get
/// a surplus column and every row an artificial column. Bland's rule picks
/// the lowest-index entering column and breaks ratio ties by lowest basic
/// index, so the method terminates.
pub fn lp_feasible(problem: &LpProblem) -> Result<Feasibility> {
    problem.check()?;
    let n = problem.num_vars();
    let m = problem.rows.len();

    // Standard-form column layout.
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut width = 0;
    for d in &problem.domains {
        match d {
            VarDomain::NonNegative => {
                var_cols.push((width, None));
                width += 1;
            }
            VarDomain::Free => {
                var_cols.push((width, Some(width + 1)));
                width += 2;
            }
        }
    }
    let mut surplus = vec![None; m];
    for (i, row) in problem.rows.iter().enumerate() {
        if row.sense == Sense::Ge {
            surplus[i] = Some(width);
            width += 1;
        }
    }
    let first_artificial = width;
    width += m;

    let mut rows = Vec::with_capacity(m);
    for (i, row) in problem.rows.iter().enumerate() {
        let mut t = vec![Rational::zero(); width + 1];
        for (j, a) in row.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (pos, neg) = var_cols[j];
            t[pos] = a.clone();
            if let Some(neg) = neg {
                t[neg] = -a.clone();
            }
        }
        if let Some(s) = surplus[i] {
            t[s] = -Rational::from_integer(1.into());
        }
        t[width] = row.rhs.clone();
        if row.rhs.is_negative() {
            for x in t.iter_mut() {
                *x = -x.clone();
            }
        }
        t[first_artificial + i] = Rational::from_integer(1.into());
        rows.push(t);
    }
    let mut cost = vec![Rational::zero(); width + 1];
    for t in &rows {
        for j in 0..first_artificial {
            cost[j] -= &t[j];
        }
        cost[width] -= &t[width];
    }
    let mut tab = Tableau {
        rows,
        cost,
        basis: (first_artificial..first_artificial + m).collect(),
        width,
    };

    while let Some(col) = (0..width).find(|&j| tab.cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            let a = &tab.rows[i][col];
            if !a.is_positive() {
                continue;
            }
            let ratio = tab.rhs(i) / a;
            let better = match &leave {
                None => true,
                Some((best, r)) => ratio < *r || (ratio == *r && tab.basis[i] < tab.basis[*best]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (row, _) = leave.expect("phase-one objective is bounded");
        tab.pivot(row, col);
    }

    let artificial_mass = (0..m)
        .filter(|&i| tab.basis[i] >= first_artificial)
        .any(|i| !tab.rhs(i).is_zero());
    if artificial_mass {
        return Ok(Feasibility::Infeasible);
    }
    let mut column_values = vec![Rational::zero(); width];
    for i in 0..m {
        column_values[tab.basis[i]] = tab.rhs(i).clone();
    }
    let witness: Vec<Rational> = var_cols
        .iter()
        .map(|&(pos, neg)| match neg {
            Some(neg) => &column_values[pos] - &column_values[neg],
            None => column_values[pos].clone(),
        })
        .collect();
    assert!(
        problem.satisfied_by(&witness),
        "simplex produced a witness violating the constraints"
    );
    Ok(Feasibility::Feasible(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let mut lp = LpProblem::new(1, VarDomain::Free);
        lp.push(vec![int(1)], Sense::Ge, int(1));
        lp.push(vec![int(-1)], Sense::Ge, int(0));
        assert_eq!(lp_feasible(&lp).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn trivial_feasible_point() {
        let mut lp = LpProblem::new(1, VarDomain::Free);
        lp.push(vec![int(1)], Sense::Ge, int(0));
        assert_eq!(lp_feasible(&lp).unwrap(), Feasibility::Feasible(vec![int(0)]));
    }

    #[test]
    fn equalities_and_fractions() {
        // x + y = 1, x - y >= 1/2, y >= 1/4 -> x = 3/4, y = 1/4
        let mut lp = LpProblem::new(2, VarDomain::Free);
        lp.push(vec![int(1), int(1)], Sense::Eq, int(1));
        lp.push(vec![int(1), int(-1)], Sense::Ge, rational(1, 2));
        lp.push(vec![int(0), int(1)], Sense::Ge, rational(1, 4));
        match lp_feasible(&lp).unwrap() {
            Feasibility::Feasible(x) => assert!(lp.satisfied_by(&x)),
            Feasibility::Infeasible => panic!("expected feasible"),
        }
        lp.push(vec![int(0), int(1)], Sense::Ge, rational(1, 3));
        assert_eq!(lp_feasible(&lp).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn nonnegative_domain_is_enforced() {
        let mut lp = LpProblem::new(1, VarDomain::NonNegative);
        lp.push(vec![int(1)], Sense::Eq, int(-1));
        assert_eq!(lp_feasible(&lp).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn dimension_mismatch() {
        let mut lp = LpProblem::new(2, VarDomain::Free);
        lp.push(vec![int(1)], Sense::Ge, int(0));
        assert!(lp_feasible(&lp).is_err());
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's classic cycling instance, recast as feasibility with an
        // objective cut; Bland's rule must terminate.
        let mut lp = LpProblem::new(4, VarDomain::NonNegative);
        lp.push(
            vec![rational(-1, 4), int(8), int(1), int(-9)],
            Sense::Ge,
            int(0),
        );
        lp.push(
            vec![rational(-1, 2), int(12), rational(1, 2), int(-3)],
            Sense::Ge,
            int(0),
        );
        lp.push(vec![int(0), int(0), int(-1), int(0)], Sense::Ge, int(-1));
        lp.push(
            vec![rational(3, 4), int(-20), rational(1, 2), int(-6)],
            Sense::Ge,
            rational(1, 20),
        );
        // (1, 0, 1, 0) is feasible.
        assert!(lp.satisfied_by(&[int(1), int(0), int(1), int(0)]));
        assert!(lp_feasible(&lp).unwrap().is_feasible());
    }
}
