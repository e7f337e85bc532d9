//! Exact verification driven only by raw definitions: rational LP
//! feasibility, inequality redundancy and conic-hull membership.
//!
//! Nothing here consults the structural results in [`crate::cone`]; the
//! oracle sees inequality systems and vectors and nothing else.

pub mod exact;
pub mod lp;

use num_traits::{One, Signed, Zero};

pub use exact::{determinant, int_determinant, int_rank, is_unimodular, rank};
pub use lp::{lp_feasible, Feasibility, LpProblem, LpRow, Sense, VarDomain};

use crate::error::{LppError, Result};
use crate::scalar::Rational;

pub fn to_rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, _)| !x.is_zero())
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Whether `point` satisfies `⟨η, x⟩ >= 0` for every row `η`.
pub fn satisfies_all(system: &[Vec<Rational>], point: &[Rational]) -> bool {
    system.iter().all(|eta| !dot(eta, point).is_negative())
}

/// Whether the inequality `⟨η, x⟩ >= 0` can be dropped from `system`
/// without enlarging the cone.
///
/// `η` is redundant iff `{x : ⟨η', x⟩ >= 0 for η' ≠ η, ⟨η, x⟩ <= -1}` is
/// empty; by homogeneity `<= -1` stands in for a strict violation.
pub fn is_redundant(eta: &[Rational], system: &[Vec<Rational>]) -> Result<bool> {
    let position = system
        .iter()
        .position(|row| row.as_slice() == eta)
        .ok_or(LppError::NormalNotInSystem)?;
    is_redundant_at(position, system)
}

/// [`is_redundant`] for the row at `index`.
pub fn is_redundant_at(index: usize, system: &[Vec<Rational>]) -> Result<bool> {
    let eta = system.get(index).ok_or(LppError::NormalNotInSystem)?;
    let mut lp = LpProblem::new(eta.len(), VarDomain::Free);
    for (k, row) in system.iter().enumerate() {
        if k != index {
            lp.push(row.clone(), Sense::Ge, Rational::zero());
        }
    }
    lp.push(
        eta.iter().map(|x| -x.clone()).collect(),
        Sense::Ge,
        Rational::one(),
    );
    Ok(!lp_feasible(&lp)?.is_feasible())
}

/// Whether `point = Σ λ_i r_i` for some `λ >= 0`.
pub fn in_conic_hull(point: &[Rational], rays: &[Vec<Rational>]) -> Result<bool> {
    let dim = point.len();
    if let Some(r) = rays.iter().find(|r| r.len() != dim) {
        return Err(LppError::DimensionMismatch {
            expected: dim,
            actual: r.len(),
        });
    }
    let mut lp = LpProblem::new(rays.len(), VarDomain::NonNegative);
    for (coord, target) in point.iter().enumerate() {
        let coeffs = rays.iter().map(|r| r[coord].clone()).collect();
        lp.push(coeffs, Sense::Eq, target.clone());
    }
    Ok(lp_feasible(&lp)?.is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn conic_hull_membership() {
        let rays = vec![vec![int(1), int(0)], vec![int(1), int(1)]];
        let inside: Vec<_> = vec![int(3), int(2)]; // r1 + 2 r2
        assert!(in_conic_hull(&inside, &rays).unwrap());
        assert!(!in_conic_hull(&[int(0), int(1)], &rays).unwrap());
        assert!(in_conic_hull(&[int(0), int(0)], &rays).unwrap());
        assert!(in_conic_hull(&[int(1)], &rays).is_err());
    }

    #[test]
    fn redundancy_of_a_duplicate_direction() {
        // x >= 0, y >= 0, x + y >= 0: the last row is implied.
        let system = to_rational_rows(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert!(is_redundant(&system[2], &system).unwrap());
        assert!(!is_redundant(&system[0], &system).unwrap());
        assert_eq!(
            is_redundant(&[int(2), int(3)], &system),
            Err(LppError::NormalNotInSystem)
        );
    }
}
