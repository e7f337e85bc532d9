use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{LppError, Result};
use crate::oracle;
use crate::poset::{Antichain, Path, Poset};

/// Extreme rays of the cone of `path`: the antichains meeting it exactly
/// once, as 0/1 vectors.
pub fn extreme_rays(poset: &Poset, path: &Path) -> Result<Vec<Antichain>> {
    let path = poset.path(path.vertices().to_vec())?;
    Ok(poset
        .enumerate_antichains()
        .into_iter()
        .filter(|a| a.meets(&path) == 1)
        .collect())
}

fn big_binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        binomial(BigUint::from(n), BigUint::from(k))
    }
}

/// Number of nonempty antichains of the `a × b` block,
/// `J(a, b) = Σ_{k>=1} C(a,k) C(b,k)`.
pub fn antichain_count_block(a: usize, b: usize) -> BigUint {
    let total = (1..=a.min(b)).fold(BigUint::zero(), |acc, k| {
        acc + big_binomial(a, k) * big_binomial(b, k)
    });
    assert_eq!(
        &total + BigUint::one(),
        big_binomial(a + b, a),
        "Vandermonde identity"
    );
    total
}

/// Closed-form extreme-ray count for a monotone lattice path of the grid
/// `[1,m] × [1,n]`, given by its coordinates from `(1,1)` to `(m,n)`:
/// `Σ_i C(n+u_i-v_i-1, u_i-1) · C(m-u_i+v_i-1, v_i-1)`.
pub fn count_extreme_rays_grid(m: usize, n: usize, path: &[(usize, usize)]) -> Result<BigUint> {
    let valid_steps = path.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        (b.0 == a.0 + 1 && b.1 == a.1) || (b.0 == a.0 && b.1 == a.1 + 1)
    });
    if m == 0
        || n == 0
        || path.first() != Some(&(1, 1))
        || path.last() != Some(&(m, n))
        || !valid_steps
    {
        return Err(LppError::InvalidPath(format!(
            "not a monotone lattice path of the {m}x{n} grid"
        )));
    }
    Ok(path.iter().fold(BigUint::zero(), |acc, &(u, v)| {
        acc + big_binomial(n + u - v - 1, u - 1) * big_binomial(m + v - u - 1, v - 1)
    }))
}

/// [`count_extreme_rays_grid`] for a path of a grid poset.
pub fn count_extreme_rays_on_grid(poset: &Poset, path: &Path) -> Result<BigUint> {
    let (m, n) = poset
        .grid_shape()
        .ok_or_else(|| LppError::InvalidShape("poset is not a rectangular grid".into()))?;
    let coords = poset.coordinates().expect("grid posets carry coordinates");
    let walk: Vec<(usize, usize)> = path.vertices().iter().map(|&v| coords[v]).collect();
    count_extreme_rays_grid(m, n, &walk)
}

/// Rank of the span of all path indicator vectors.
pub fn path_span_rank(poset: &Poset) -> usize {
    let rows: Vec<Vec<i64>> = poset
        .enumerate_paths()
        .iter()
        .map(Path::to_vector)
        .collect();
    oracle::int_rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(p: &Poset, coords: &[(usize, usize)]) -> Vec<usize> {
        coords
            .iter()
            .map(|c| p.coordinates().unwrap().iter().position(|x| x == c).unwrap())
            .collect()
    }

    #[test]
    fn rays_of_small_grids() {
        let g = Poset::grid(2, 2).unwrap();
        let up = g.path(at(&g, &[(1, 1), (1, 2), (2, 2)])).unwrap();
        let rays = extreme_rays(&g, &up).unwrap();
        let mut expected: Vec<Antichain> = [
            vec![(1, 1)],
            vec![(1, 2)],
            vec![(2, 2)],
            vec![(1, 2), (2, 1)],
        ]
        .iter()
        .map(|cs| g.antichain(at(&g, cs)).unwrap())
        .collect();
        expected.sort();
        let mut got = rays.clone();
        got.sort();
        assert_eq!(got, expected);

        let g = Poset::grid(2, 3).unwrap();
        let top = g.path(at(&g, &[(1, 1), (1, 2), (1, 3), (2, 3)])).unwrap();
        let rays = extreme_rays(&g, &top).unwrap();
        assert_eq!(rays.len(), 7);
        for pair in [[(1, 2), (2, 1)], [(1, 3), (2, 1)], [(1, 3), (2, 2)]] {
            assert!(rays.contains(&g.antichain(at(&g, &pair)).unwrap()));
        }

        let chain = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let only = chain.enumerate_paths().remove(0);
        assert_eq!(extreme_rays(&chain, &only).unwrap().len(), 3);
    }

    #[test]
    fn grid_formula_values() {
        let c = |m, n, p: &[(usize, usize)]| {
            count_extreme_rays_grid(m, n, p).unwrap()
        };
        assert_eq!(c(2, 2, &[(1, 1), (1, 2), (2, 2)]), BigUint::from(4u32));
        assert_eq!(c(2, 2, &[(1, 1), (2, 1), (2, 2)]), BigUint::from(4u32));
        assert_eq!(c(2, 3, &[(1, 1), (1, 2), (1, 3), (2, 3)]), BigUint::from(7u32));
        assert_eq!(c(2, 3, &[(1, 1), (1, 2), (2, 2), (2, 3)]), BigUint::from(6u32));
        assert!(count_extreme_rays_grid(2, 2, &[(1, 1), (2, 2)]).is_err());
        assert!(count_extreme_rays_grid(2, 2, &[(1, 1), (1, 2)]).is_err());
    }

    #[test]
    fn block_counts() {
        assert_eq!(antichain_count_block(2, 2), BigUint::from(5u32));
        assert_eq!(antichain_count_block(1, 1), BigUint::from(1u32));
        assert_eq!(antichain_count_block(3, 0), BigUint::zero());
        assert_eq!(antichain_count_block(0, 4), BigUint::zero());
        let g = Poset::grid(2, 2).unwrap();
        assert_eq!(g.enumerate_antichains().len(), 5);
    }

    #[test]
    fn span_rank_of_small_grids() {
        assert_eq!(path_span_rank(&Poset::grid(2, 2).unwrap()), 2);
        assert_eq!(path_span_rank(&Poset::grid(2, 3).unwrap()), 3);
    }
}
