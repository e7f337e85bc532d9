//! The time graph of a simplicial cell.
//!
//! Vertex `v` is a generator of `∂U_i` for a contiguous range of indices
//! `[η_v, τ_v]`; two indices are joined when some vertex's range covers
//! both. Under uniform weights the coefficients `Λ` of a cell are uniform
//! on the chain polytope of a poset with this comparability graph.

use serde::Serialize;

use crate::scalar::Scalar;
use crate::simplicial::{LambdaVector, SimplicialCell};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PStarComponents {
    /// `[η_v, τ_v]` per vertex, 1-based.
    pub intervals: Vec<(usize, usize)>,
    /// Edges `i < j` of the time graph, 1-based.
    pub edges: Vec<(usize, usize)>,
    /// Components of the time graph, each sorted, ordered by least index.
    pub components: Vec<Vec<usize>>,
    pub component_count: usize,
    /// `1 + |{i : ∂U_i is a singleton}|`, reported alongside the graph count.
    pub singleton_expression: usize,
}

pub fn pstar_components(cell: &SimplicialCell) -> PStarComponents {
    let n = cell.dim();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    for (i, a) in cell.antichains().iter().enumerate() {
        for &v in a.members() {
            first[v] = first[v].min(i + 1);
            last[v] = last[v].max(i + 1);
        }
    }
    let intervals: Vec<(usize, usize)> = first.into_iter().zip(last).collect();

    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if intervals.iter().any(|&(lo, hi)| lo <= i && j <= hi) {
                edges.push((i, j));
            }
        }
    }

    let mut uf = petgraph::unionfind::UnionFind::<usize>::new(n);
    for &(i, j) in &edges {
        uf.union(i - 1, j - 1);
    }
    let labels = uf.into_labeling();
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for (i, &root) in labels.iter().enumerate() {
        if slot[root] == usize::MAX {
            slot[root] = components.len();
            components.push(Vec::new());
        }
        components[slot[root]].push(i + 1);
    }

    let singletons = cell.antichains().iter().filter(|a| a.len() == 1).count();
    PStarComponents {
        intervals,
        edges,
        component_count: components.len(),
        components,
        singleton_expression: 1 + singletons,
    }
}

/// Whether `Λ >= 0` and `Σ_i Λ_i 1{v ∈ ∂U_i} <= 1` for every vertex.
pub fn lambda_in_pstar_polytope<T: Scalar>(cell: &SimplicialCell, lambda: &LambdaVector<T>) -> bool {
    lambda.is_nonnegative() && cell.apply(lambda).iter().all(|x| *x <= T::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use crate::simplicial::cell_from_extension;

    #[test]
    fn grid_example() {
        let g = Poset::grid(2, 2).unwrap();
        // (1,1), (2,1), (1,2), (2,2)
        let ext = g.linear_extension(vec![0, 1, 2, 3]).unwrap();
        let cell = cell_from_extension(&g, &ext).unwrap();
        let p = pstar_components(&cell);
        // intervals of (2,2), (1,2), (2,1), (1,1) in insertion order
        assert_eq!(p.intervals[3], (1, 1));
        assert_eq!(p.intervals[2], (2, 3));
        assert_eq!(p.intervals[1], (3, 3));
        assert_eq!(p.intervals[0], (4, 4));
        assert_eq!(p.components, vec![vec![1], vec![2, 3], vec![4]]);
        assert_eq!(p.component_count, 3);
        assert_eq!(p.singleton_expression, 4);
    }

    #[test]
    fn chain_has_singleton_components() {
        let c = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let cell = cell_from_extension(&c, &c.linear_extension(vec![0, 1, 2]).unwrap()).unwrap();
        assert_eq!(pstar_components(&cell).component_count, 3);
    }
}
