//! Cone probabilities under independent exponential weights.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{LppError, Result};
use crate::limits::Limits;
use crate::linalg;
use crate::poset::{Path, Poset};
use crate::scalar::{Rational, Scalar};
use crate::simplicial::{cell_from_extension, eu_determinant, SimplicialCell};

fn check_rates<T: Scalar>(rates: &[T]) -> Result<()> {
    match rates.iter().position(|r| !r.is_positive()) {
        Some(i) => Err(LppError::NonPositiveRate(i)),
        None => Ok(()),
    }
}

/// `P(X ∈ cone(v_1, …, v_n))` for independent `X_i ~ Exp(λ_i)`:
/// `|det V| · Π λ_i / Π ⟨v_i, λ⟩`, with the generators as the columns of
/// `V`. Rescaling a generator leaves the value unchanged.
pub fn cone_prob_exponential<T: Scalar>(generators: &[Vec<T>], rates: &[T]) -> Result<T> {
    check_rates(rates)?;
    let n = rates.len();
    if generators.len() != n {
        return Err(LppError::DimensionMismatch {
            expected: n,
            actual: generators.len(),
        });
    }
    let columns: Vec<Vec<T>> = (0..n)
        .map(|i| generators.iter().map(|g| g[i].clone()).collect())
        .collect();
    let det = linalg::determinant(&columns)?.abs();
    if det.is_zero() {
        return Err(LppError::Singular);
    }
    let mut value = det;
    for (g, r) in generators.iter().zip(rates) {
        let dot = g
            .iter()
            .zip(rates)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone());
        value = value * r.clone() / dot;
    }
    Ok(value)
}

/// Probability of one simplicial cell: `Π_v λ_v / Π_k λ(∂U_k)`.
pub fn simplex_prob_exponential<T: Scalar>(cell: &SimplicialCell, rates: &[T]) -> Result<T> {
    check_rates(rates)?;
    if rates.len() != cell.dim() {
        return Err(LppError::DimensionMismatch {
            expected: cell.dim(),
            actual: rates.len(),
        });
    }
    let det = eu_determinant(cell);
    if !det.abs().is_one() {
        return Err(LppError::Singular);
    }
    let mut value = T::one();
    for (r, a) in rates.iter().zip(cell.antichains()) {
        let mass = a
            .members()
            .iter()
            .fold(T::zero(), |acc, &v| acc + rates[v].clone());
        value = value * r.clone() / mass;
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathProbability {
    pub path: Path,
    pub cells: usize,
    #[serde(serialize_with = "crate::scalar::serialize_rational")]
    pub probability: Rational,
}

/// Exact law of the longest path, one entry per maximal chain in
/// enumeration order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactPathDistribution {
    pub paths: Vec<PathProbability>,
    pub cells: usize,
}

impl ExactPathDistribution {
    pub fn probability_of(&self, path: &Path) -> Option<&Rational> {
        self.paths.iter().find(|p| &p.path == path).map(|p| &p.probability)
    }

    pub fn total(&self) -> Rational {
        self.paths
            .iter()
            .fold(Rational::zero(), |acc, p| acc + &p.probability)
    }
}

/// Sums cell probabilities grouped by Schützenberger path. Panics if the
/// total differs from one, which would mean the cells do not tile the
/// orthant.
pub fn path_distribution_exponential_exact(
    poset: &Poset,
    rates: &[Rational],
    limits: &Limits,
) -> Result<ExactPathDistribution> {
    check_rates(rates)?;
    if rates.len() != poset.len() {
        return Err(LppError::DimensionMismatch {
            expected: poset.len(),
            actual: rates.len(),
        });
    }
    let paths = poset.try_enumerate_paths(limits.max_items)?;
    let extensions = poset.enumerate_linear_extensions(limits)?;
    let per_cell: Vec<(Path, Rational)> = extensions
        .par_iter()
        .map(|e| {
            let cell = cell_from_extension(poset, e)?;
            let p = simplex_prob_exponential(&cell, rates)?;
            Ok((cell.schutzenberger_path().clone(), p))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<PathProbability> = paths
        .into_iter()
        .map(|path| PathProbability {
            path,
            cells: 0,
            probability: Rational::zero(),
        })
        .collect();
    for (path, p) in per_cell {
        let slot = out
            .iter_mut()
            .find(|q| q.path == path)
            .expect("Schützenberger path is a maximal chain");
        slot.cells += 1;
        slot.probability += p;
    }
    let dist = ExactPathDistribution {
        paths: out,
        cells: extensions.len(),
    };
    assert!(dist.total().is_one(), "path probabilities must sum to one");
    Ok(dist)
}

/// `P(C(π))` for independent exponential weights with the given rates.
pub fn path_prob_exponential_exact(poset: &Poset, path: &Path, rates: &[Rational], limits: &Limits) -> Result<Rational> {
    let dist = path_distribution_exponential_exact(poset, rates, limits)?;
    dist.probability_of(path).cloned().ok_or_else(|| LppError::InvalidPath("not a maximal chain of this poset".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    #[test]
    fn generic_cone_probabilities() {
        let p = cone_prob_exponential(&[vec![int(1)]], &[int(3)]).unwrap();
        assert_eq!(p, int(1));
        let rays = vec![vec![int(1), int(0)], vec![int(1), int(1)]];
        assert_eq!(cone_prob_exponential(&rays, &[int(1), int(1)]).unwrap(), rational(1, 2));
        // P(X1 >= X2) = λ2 / (λ1 + λ2)
        assert_eq!(cone_prob_exponential(&rays, &[int(1), int(3)]).unwrap(), rational(3, 4));
        let scaled = vec![vec![int(5), int(0)], vec![int(2), int(2)]];
        assert_eq!(cone_prob_exponential(&scaled, &[int(1), int(3)]).unwrap(), rational(3, 4));
        assert_eq!(
            cone_prob_exponential(&rays, &[int(1), int(0)]),
            Err(LppError::NonPositiveRate(1))
        );
    }

    #[test]
    fn grid_cells_have_probability_half() {
        let g = Poset::grid(2, 2).unwrap();
        let ones = vec![int(1); 4];
        for e in g.enumerate_linear_extensions(&Limits::default()).unwrap() {
            let cell = cell_from_extension(&g, &e).unwrap();
            assert_eq!(simplex_prob_exponential(&cell, &ones).unwrap(), rational(1, 2));
        }
    }

    #[test]
    fn exact_distributions() {
        let limits = Limits::default();
        let g = Poset::grid(2, 2).unwrap();
        let d = path_distribution_exponential_exact(&g, &vec![int(1); 4], &limits).unwrap();
        assert!(d.paths.iter().all(|p| p.probability == rational(1, 2)));

        let c = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let only = c.enumerate_paths().remove(0);
        assert_eq!(
            path_prob_exponential_exact(&c, &only, &[int(2), int(1), int(7)], &limits).unwrap(),
            int(1)
        );

        let g = Poset::grid(2, 3).unwrap();
        let d = path_distribution_exponential_exact(&g, &vec![int(1); 6], &limits).unwrap();
        assert_eq!(d.cells, 5);
        assert_eq!(d.total(), int(1));
        let max = d.paths.iter().map(|p| p.probability.clone()).max().unwrap();
        let first = &d.paths.first().unwrap().probability;
        let last = &d.paths.last().unwrap().probability;
        assert_eq!(first, last);
        assert_eq!(*first, max);
    }
}
