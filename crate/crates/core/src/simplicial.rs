//! Simplicial decomposition of the weight space by maximal chains of the
//! lattice of upper sets.
//!
//! A linear extension fixes the fill order of the corner growth model.
//! Reading it backwards inserts vertices top-down, `U_k` being the last `k`
//! vertices to fill; the minimal elements `∂U_1, …, ∂U_n` of that chain of
//! upper sets generate a unimodular simplicial cone, and every weight vector
//! with distinct passage times lies in exactly one of them.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;

use crate::error::{LppError, Result};
use crate::lpp::{argmax_path, passage_times, WeightVector};
use crate::oracle;
use crate::poset::{Antichain, LinearExtension, Path, Poset};
use crate::scalar::Scalar;

/// One cell of the decomposition, keyed by its linear extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCell {
    extension: LinearExtension,
    /// `v_k = U_k ∖ U_{k-1}`: the extension read from the top.
    insertion: Vec<usize>,
    upper_chain: Vec<FixedBitSet>,
    antichains: Vec<Antichain>,
    schutzenberger: Path,
}

/// Coefficients of a weight vector in the generators `∂U_1, …, ∂U_n`,
/// aligned with the columns of `E_U`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaVector<T> {
    values: Vec<T>,
}

impl<T: Scalar> LambdaVector<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn sum(&self) -> T {
        self.values.iter().cloned().fold(T::zero(), |a, b| a + b)
    }

    /// The same coefficients indexed by fill order, so that entry `i` is
    /// the waiting time between the `i`-th and `(i+1)`-th fill.
    pub fn fill_increments(&self) -> Vec<T> {
        self.values.iter().rev().cloned().collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|x| !x.is_negative())
    }
}

impl SimplicialCell {
    pub fn extension(&self) -> &LinearExtension {
        &self.extension
    }

    /// Vertices in insertion order `v_1, …, v_n` (last filled first).
    pub fn insertion_order(&self) -> &[usize] {
        &self.insertion
    }

    /// Upper sets `U_1 ⊂ … ⊂ U_n`.
    pub fn upper_chain(&self) -> &[FixedBitSet] {
        &self.upper_chain
    }

    /// Generators `∂U_1, …, ∂U_n`.
    pub fn antichains(&self) -> &[Antichain] {
        &self.antichains
    }

    pub fn schutzenberger_path(&self) -> &Path {
        &self.schutzenberger
    }

    pub fn dim(&self) -> usize {
        self.insertion.len()
    }

    /// `E_U` with rows indexed by vertex and column `k` the indicator of
    /// `∂U_{k+1}`.
    pub fn eu_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut m = vec![vec![0i64; n]; n];
        for (k, a) in self.antichains.iter().enumerate() {
            for &v in a.members() {
                m[v][k] = 1;
            }
        }
        m
    }

    /// `E_U · Λ`.
    pub fn apply<T: Scalar>(&self, lambda: &LambdaVector<T>) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim()];
        for (a, coeff) in self.antichains.iter().zip(&lambda.values) {
            for &v in a.members() {
                out[v] = out[v].clone() + coeff.clone();
            }
        }
        out
    }

    /// Solves `E_U Λ = ω` by back substitution. In insertion order `E_U` is
    /// unit upper triangular, so no division is needed.
    pub fn solve<T: Scalar>(&self, weights: &WeightVector<T>) -> Result<LambdaVector<T>> {
        let n = self.dim();
        if weights.len() != n {
            return Err(LppError::DimensionMismatch {
                expected: n,
                actual: weights.len(),
            });
        }
        let mut values = vec![T::zero(); n];
        for k in (0..n).rev() {
            let v = self.insertion[k];
            let mut acc = weights[v].clone();
            for j in k + 1..n {
                if self.antichains[j].contains(v) {
                    acc = acc - values[j].clone();
                }
            }
            values[k] = acc;
        }
        Ok(LambdaVector { values })
    }

    pub fn contains<T: Scalar>(&self, weights: &WeightVector<T>) -> Result<bool> {
        Ok(self.solve(weights)?.is_nonnegative())
    }
}

/// Builds the cell of a linear extension: the chain of upper sets, its
/// minimal-element antichains and the Schützenberger path.
pub fn cell_from_extension(poset: &Poset, extension: &LinearExtension) -> Result<SimplicialCell> {
    let extension = poset.linear_extension(extension.sequence().to_vec())?;
    let n = poset.len();
    let insertion: Vec<usize> = extension.sequence().iter().rev().copied().collect();
    let mut upper_chain = Vec::with_capacity(n);
    let mut antichains = Vec::with_capacity(n);
    let mut current = FixedBitSet::with_capacity(n);
    for &v in &insertion {
        current.insert(v);
        debug_assert!(poset.is_upper_set(&current));
        antichains.push(poset.boundary_min(&current));
        upper_chain.push(current.clone());
    }
    let schutzenberger = schutzenberger_path(poset, &insertion);
    debug_assert!(antichains.iter().all(|a| a.meets(&schutzenberger) == 1));
    Ok(SimplicialCell {
        extension,
        insertion,
        upper_chain,
        antichains,
        schutzenberger,
    })
}

/// Starting from the first inserted vertex, repeatedly steps to the lower
/// cover inserted earliest until a minimal element is reached; the reversed
/// walk is a maximal chain.
fn schutzenberger_path(poset: &Poset, insertion: &[usize]) -> Path {
    let mut rank = vec![0; insertion.len()];
    for (k, &v) in insertion.iter().enumerate() {
        rank[v] = k;
    }
    let mut current = insertion[0];
    let mut walk = vec![current];
    while !poset.is_minimal(current) {
        current = *poset
            .lower_covers(current)
            .iter()
            .min_by_key(|&&u| rank[u])
            .expect("non-minimal vertex has a lower cover");
        walk.push(current);
    }
    walk.reverse();
    poset
        .path(walk)
        .expect("Schützenberger walk is a maximal chain")
}

/// `|det E_U|` is one for every cell.
pub fn eu_determinant(cell: &SimplicialCell) -> BigInt {
    oracle::int_determinant(&cell.eu_matrix())
}

/// Locates the cell of a generic weight vector from the order of its
/// passage times, with `Λ_k = G(v_k) - G(v_{k+1})` in insertion order.
///
/// Fails with [`LppError::TiedPassageTimes`] when two passage times
/// coincide.
pub fn locate_cell<T: Scalar>(poset: &Poset, weights: &WeightVector<T>) -> Result<(SimplicialCell, LambdaVector<T>)> {
    let times = passage_times(poset, weights)?;
    let extension = match times.fill_order(poset) {
        Some(e) => e,
        None => {
            let g = times.values();
            let mut order: Vec<usize> = (0..g.len()).collect();
            order.sort_by(|&a, &b| g[a].partial_cmp(&g[b]).expect("comparable"));
            let pair = order
                .windows(2)
                .find(|w| g[w[0]] == g[w[1]])
                .expect("fill order fails only on ties");
            return Err(LppError::TiedPassageTimes(pair[0].min(pair[1]), pair[0].max(pair[1])));
        }
    };
    let cell = cell_from_extension(poset, &extension)?;
    let g = times.values();
    let ins = &cell.insertion;
    let values = (0..ins.len())
        .map(|k| {
            let below = ins.get(k + 1).map_or_else(T::zero, |&u| g[u].clone());
            g[ins[k]].clone() - below
        })
        .collect();
    Ok((cell, LambdaVector { values }))
}

/// `Σ_i Λ_i · 1{π* meets ∂U_i}` with `Λ = E_U^{-1} ω` for an arbitrary
/// cell and `π*` a longest path; equals the passage time for every cell.
pub fn sum_representation<T: Scalar>(poset: &Poset, weights: &WeightVector<T>, cell: &SimplicialCell) -> Result<T> {
    let lambda = cell.solve(weights)?;
    let best = argmax_path(poset, weights)?;
    Ok(cell
        .antichains
        .iter()
        .zip(&lambda.values)
        .filter(|(a, _)| a.meets(&best.path) > 0)
        .fold(T::zero(), |acc, (_, x)| acc + x.clone()))
}

/// Cells for every linear extension, in extension enumeration order.
pub fn all_cells(poset: &Poset, limits: &crate::Limits) -> Result<Vec<SimplicialCell>> {
    poset
        .enumerate_linear_extensions(limits)?
        .iter()
        .map(|e| cell_from_extension(poset, e))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpp::passage_times;
    use crate::scalar::{rational, Rational};

    fn at(p: &Poset, coords: &[(usize, usize)]) -> Vec<usize> {
        coords
            .iter()
            .map(|c| p.coordinates().unwrap().iter().position(|x| x == c).unwrap())
            .collect()
    }

    fn members(p: &Poset, coords: &[(usize, usize)]) -> Vec<usize> {
        let mut v = at(p, coords);
        v.sort_unstable();
        v
    }

    #[test]
    fn cell_antichain_sequences() {
        let g = Poset::grid(2, 2).unwrap();
        let ext = g.linear_extension(at(&g, &[(1, 1), (1, 2), (2, 1), (2, 2)])).unwrap();
        let cell = cell_from_extension(&g, &ext).unwrap();
        let seq: Vec<&[usize]> = cell.antichains().iter().map(Antichain::members).collect();
        assert_eq!(seq[0], members(&g, &[(2, 2)]).as_slice());
        assert_eq!(seq[1], members(&g, &[(2, 1)]).as_slice());
        assert_eq!(seq[2], members(&g, &[(1, 2), (2, 1)]).as_slice());
        assert_eq!(seq[3], members(&g, &[(1, 1)]).as_slice());
        // (2,1) fills after (1,2), so the longest path runs through (2,1).
        assert_eq!(
            cell.schutzenberger_path().vertices(),
            at(&g, &[(1, 1), (2, 1), (2, 2)]).as_slice()
        );

        let ext = g.linear_extension(at(&g, &[(1, 1), (2, 1), (1, 2), (2, 2)])).unwrap();
        let cell = cell_from_extension(&g, &ext).unwrap();
        let seq: Vec<Vec<usize>> = cell.antichains().iter().map(|a| a.members().to_vec()).collect();
        assert_eq!(
            seq,
            vec![
                members(&g, &[(2, 2)]),
                members(&g, &[(1, 2)]),
                members(&g, &[(1, 2), (2, 1)]),
                members(&g, &[(1, 1)]),
            ]
        );
        assert_eq!(
            cell.schutzenberger_path().vertices(),
            at(&g, &[(1, 1), (1, 2), (2, 2)]).as_slice()
        );
        for (k, u) in cell.upper_chain().iter().enumerate() {
            assert_eq!(u.count_ones(..), k + 1);
            assert!(g.is_upper_set(u));
        }
    }

    #[test]
    fn chain_cell_is_unitriangular() {
        let c = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let ext = c.linear_extension(vec![0, 1, 2]).unwrap();
        let cell = cell_from_extension(&c, &ext).unwrap();
        let tops: Vec<Vec<usize>> = cell.antichains().iter().map(|a| a.members().to_vec()).collect();
        assert_eq!(tops, vec![vec![2], vec![1], vec![0]]);
        assert_eq!(eu_determinant(&cell).magnitude(), &1u32.into());
    }

    #[test]
    fn determinants_are_unimodular() {
        let limits = crate::Limits::default();
        for g in [Poset::grid(2, 2).unwrap(), Poset::grid(2, 3).unwrap()] {
            for cell in all_cells(&g, &limits).unwrap() {
                assert_eq!(eu_determinant(&cell).magnitude(), &1u32.into());
            }
        }
    }

    #[test]
    fn locate_sample_weights() {
        let g = Poset::grid(2, 2).unwrap();
        let w = WeightVector::new(vec![rational(1, 1), rational(1, 2), rational(2, 1), rational(1, 1)]);
        let (cell, lambda) = locate_cell(&g, &w).unwrap();
        assert_eq!(cell.extension().sequence(), &[0, 1, 2, 3]);
        assert_eq!(
            lambda.fill_increments(),
            vec![rational(1, 1), rational(1, 2), rational(3, 2), rational(1, 1)]
        );
        assert_eq!(lambda.sum(), rational(4, 1));
        assert_eq!(cell.apply(&lambda), w.values());
        assert_eq!(cell.solve(&w).unwrap(), lambda);
    }

    #[test]
    fn locate_rejects_ties() {
        let g = Poset::grid(2, 2).unwrap();
        let w = WeightVector::<Rational>::indicator(4, [0]);
        assert!(matches!(
            locate_cell(&g, &w),
            Err(LppError::TiedPassageTimes(_, _))
        ));
    }

    #[test]
    fn sum_representation_for_every_cell() {
        let g = Poset::grid(2, 2).unwrap();
        let w = WeightVector::new(vec![rational(1, 1), rational(1, 2), rational(2, 1), rational(1, 1)]);
        let total = passage_times(&g, &w).unwrap().last_passage_time();
        for cell in all_cells(&g, &crate::Limits::default()).unwrap() {
            assert_eq!(sum_representation(&g, &w, &cell).unwrap(), total);
        }
        // nearly constant weights
        let eps = WeightVector::new(vec![rational(100, 100), rational(101, 100), rational(102, 100), rational(103, 100)]);
        let (own, lambda) = locate_cell(&g, &eps).unwrap();
        assert_eq!(sum_representation(&g, &eps, &own).unwrap(), lambda.sum());
    }
}
