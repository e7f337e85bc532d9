use num_traits::Zero;

use super::facets::{BipartiteGraph, OrderGraph};
use super::system::inequality_system;
use crate::error::{LppError, Result};
use crate::lpp::WeightVector;
use crate::oracle;
use crate::poset::{Antichain, Path, Poset};
use crate::scalar::Rational;

fn check_ray(path: &Path, ray: &Antichain) -> Result<()> {
    if ray.meets(path) == 1 {
        Ok(())
    } else {
        Err(LppError::NotExtremeRay(format!(
            "antichain {:?} meets the path {} times",
            ray.members(),
            ray.meets(path)
        )))
    }
}

/// Comparability graph between the exclusive supports of two extreme rays.
pub fn order_graph(poset: &Poset, path: &Path, first: &Antichain, second: &Antichain) -> Result<OrderGraph> {
    let path = poset.path(path.vertices().to_vec())?;
    // Revalidate: the inputs must be genuine antichains of this poset.
    let first = poset.antichain(first.members().to_vec())?;
    let second = poset.antichain(second.members().to_vec())?;
    check_ray(&path, &first)?;
    check_ray(&path, &second)?;
    if first == second {
        return Err(LppError::NotExtremeRay("the two rays coincide".into()));
    }
    let left: Vec<usize> = first.members().iter().copied().filter(|&v| !second.contains(v)).collect();
    let right: Vec<usize> = second.members().iter().copied().filter(|&v| !first.contains(v)).collect();
    let mut edges = Vec::new();
    for &u in &left {
        for &w in &right {
            if poset.comparable(u, w) {
                edges.push((u, w));
            }
        }
    }
    Ok(BipartiteGraph { left, right, edges })
}

/// Whether two extreme rays span a two-dimensional face of the path's cone,
/// decided by connectivity of their order graph.
pub fn is_two_dim_face(poset: &Poset, path: &Path, first: &Antichain, second: &Antichain) -> Result<bool> {
    Ok(order_graph(poset, path, first, second)?.is_connected())
}

/// Dimension of the perturbation space of `weights` in the cone of `path`:
/// the null space of the inequalities that are tight at `weights`, taken
/// over the full unreduced system.
pub fn perturbation_dim(poset: &Poset, path: &Path, weights: &WeightVector<Rational>) -> Result<usize> {
    let system = inequality_system(poset, path)?;
    let mut tight = Vec::new();
    for normal in &system.normals {
        let value = normal.eval(weights)?;
        if value < Rational::zero() {
            return Err(LppError::OutsideCone);
        }
        if value.is_zero() {
            tight.push(normal.coeffs.clone());
        }
    }
    Ok(poset.len() - oracle::int_rank(&tight))
}

/// Sum of antichain indicators as an exact weight vector.
pub fn ray_sum(poset: &Poset, rays: &[&Antichain]) -> WeightVector<Rational> {
    let mut values = vec![0i64; poset.len()];
    for ray in rays {
        for &v in ray.members() {
            values[v] += 1;
        }
    }
    WeightVector::from_ints(&values)
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

    fn ray(p: &Poset, coords: &[(usize, usize)]) -> Antichain {
        p.antichain(at(p, coords)).unwrap()
    }

    #[test]
    fn face_examples() {
        let g = Poset::grid(2, 2).unwrap();
        let up = g.path(at(&g, &[(1, 1), (1, 2), (2, 2)])).unwrap();
        let (a, b) = (ray(&g, &[(1, 1)]), ray(&g, &[(2, 2)]));
        assert!(is_two_dim_face(&g, &up, &a, &b).unwrap());
        assert_eq!(perturbation_dim(&g, &up, &ray_sum(&g, &[&a, &b])).unwrap(), 2);

        let g = Poset::grid(2, 3).unwrap();
        let top = g.path(at(&g, &[(1, 1), (1, 2), (1, 3), (2, 3)])).unwrap();
        let a = ray(&g, &[(1, 2), (2, 1)]);
        let b = ray(&g, &[(1, 3), (2, 1)]);
        let graph = order_graph(&g, &top, &a, &b).unwrap();
        assert_eq!(graph.left, at(&g, &[(1, 2)]));
        assert_eq!(graph.right, at(&g, &[(1, 3)]));
        assert!(graph.is_connected());

        let a = ray(&g, &[(1, 2)]);
        let graph = order_graph(&g, &top, &a, &b).unwrap();
        assert!(!graph.is_connected());
        assert_eq!(perturbation_dim(&g, &top, &ray_sum(&g, &[&a, &b])).unwrap(), 3);
    }

    #[test]
    fn rejects_non_rays() {
        let g = Poset::grid(2, 2).unwrap();
        let up = g.path(at(&g, &[(1, 1), (1, 2), (2, 2)])).unwrap();
        let off = ray(&g, &[(2, 1)]);
        let on = ray(&g, &[(1, 1)]);
        assert!(matches!(
            order_graph(&g, &up, &off, &on),
            Err(LppError::NotExtremeRay(_))
        ));
        assert!(order_graph(&g, &up, &on, &on).is_err());
    }

    #[test]
    fn perturbation_examples() {
        let g = Poset::grid(2, 2).unwrap();
        let up = g.path(at(&g, &[(1, 1), (1, 2), (2, 2)])).unwrap();
        let bottom = ray(&g, &[(1, 1)]);
        assert_eq!(perturbation_dim(&g, &up, &ray_sum(&g, &[&bottom])).unwrap(), 1);
        // 2 at (1,2), 1 elsewhere: the up path is strictly longest.
        let mut interior = vec![1i64; 4];
        interior[at(&g, &[(1, 2)])[0]] = 2;
        let w = WeightVector::from_ints(&interior);
        assert_eq!(perturbation_dim(&g, &up, &w).unwrap(), 4);
        let outside = ray_sum(&g, &[&ray(&g, &[(2, 1)])]);
        assert_eq!(perturbation_dim(&g, &up, &outside), Err(LppError::OutsideCone));
    }
}
