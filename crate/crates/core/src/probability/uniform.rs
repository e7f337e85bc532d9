//! Uniform weights: the left tail `P(G_P <= 1)` as a chain-polytope volume.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{LppError, Result};
use crate::limits::Limits;
use crate::lpp::{passage_times, WeightVector};
use crate::poset::Poset;
use crate::scalar::{Rational, Scalar};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `P(G_P <= 1) = e(P) / |P|!` for iid Uniform(0,1) weights.
pub fn uniform_left_tail(poset: &Poset, limits: &Limits) -> Result<Rational> {
    let e = poset.count_linear_extensions(limits)?;
    Ok(Rational::new(BigInt::from(e), factorial(poset.len())))
}

/// The hook product `Π_{i,j} 1/(m - i + n - j + 1)` for the `m × n` grid,
/// checked against `e(P)/|P|!`.
pub fn grid_left_tail(m: usize, n: usize) -> Result<Rational> {
    let mut denom = BigInt::one();
    for i in 1..=m {
        for j in 1..=n {
            denom *= BigInt::from(m - i + n - j + 1);
        }
    }
    let hook = Rational::new(BigInt::one(), denom);
    let grid = Poset::grid(m, n)?;
    let limits = Limits {
        max_vertices: grid.len().max(Limits::default().max_vertices),
        ..Limits::default()
    };
    let direct = uniform_left_tail(&grid, &limits)?;
    assert_eq!(hook, direct, "hook product disagrees with e(P)/|P|!");
    Ok(hook)
}

/// Whether `ω ∈ [0,1]^P` has every maximal chain summing to at most one,
/// i.e. `G_P(ω) <= 1`.
pub fn chain_polytope_membership<T: Scalar>(poset: &Poset, weights: &WeightVector<T>) -> Result<bool> {
    if let Some(vertex) = weights
        .values()
        .iter()
        .position(|x| x.is_negative() || *x > T::one())
    {
        return Err(LppError::OutOfUnitInterval { vertex });
    }
    let g = passage_times(poset, weights)?;
    Ok(g.last_passage_time() <= T::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};

    #[test]
    fn left_tails() {
        let limits = Limits::default();
        assert_eq!(uniform_left_tail(&Poset::grid(2, 2).unwrap(), &limits).unwrap(), rational(1, 12));
        assert_eq!(grid_left_tail(2, 2).unwrap(), rational(1, 12));
        assert_eq!(grid_left_tail(2, 3).unwrap(), rational(1, 144));
        let c = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(uniform_left_tail(&c, &limits).unwrap(), rational(1, 6));
        let antichain_like = Poset::grid(1, 1).unwrap();
        assert_eq!(uniform_left_tail(&antichain_like, &limits).unwrap(), int(1));
    }

    #[test]
    fn membership() {
        let g = Poset::grid(2, 2).unwrap();
        assert!(chain_polytope_membership(&g, &WeightVector::new(vec![0.3; 4])).unwrap());
        assert!(!chain_polytope_membership(&g, &WeightVector::new(vec![0.4; 4])).unwrap());
        assert_eq!(
            chain_polytope_membership(&g, &WeightVector::new(vec![0.1, 1.5, 0.0, 0.0])),
            Err(LppError::OutOfUnitInterval { vertex: 1 })
        );
    }
}
