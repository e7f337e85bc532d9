//! Random test instances: connected posets and rational points of a cone.

use rand::Rng;

use crate::error::Result;
use crate::lpp::{passage_times, path_length, WeightVector};
use crate::poset::{Path, Poset};
use crate::scalar::{rational, Rational};

/// A connected poset on `n` vertices: a random spanning tree of order
/// pairs `i < j` plus each other pair `i < j` with probability `density`.
pub fn random_connected_poset<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Result<Poset> {
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut pairs = Vec::new();
    for j in 1..n {
        let i = rng.random_range(0..j);
        let (a, b) = if rng.random_bool(0.5) { (i, j) } else { (j, i) };
        pairs.push((a, b));
    }
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(density) && !pairs.contains(&(i, j)) && !pairs.contains(&(j, i)) {
                pairs.push((i, j));
            }
        }
    }
    // Orient by a random permutation so the tree edges cannot form cycles.
    let mut rank: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        rank.swap(k, rng.random_range(0..=k));
    }
    let named: Vec<(String, String)> = pairs
        .into_iter()
        .map(|(a, b)| if rank[a] < rank[b] { (a, b) } else { (b, a) })
        .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
        .collect();
    let (poset, _) = Poset::from_covers_reporting(&labels, &named)?;
    Ok(poset)
}

/// A random rational point of the cone of `path`.
///
/// Draws sparse small rationals, then raises every weight on `path` by at
/// least the deficit `G - ⟨ω, π⟩`. Every other path shares at most
/// `|π| - 1` vertices with `π`, so the raised vector makes `π` longest;
/// raising by exactly the deficit produces boundary points.
pub fn random_cone_point<R: Rng + ?Sized>(poset: &Poset, path: &Path, rng: &mut R) -> Result<WeightVector<Rational>> {
    let n = poset.len();
    let base: Vec<Rational> = (0..n)
        .map(|_| {
            if rng.random_bool(0.35) {
                rational(0, 1)
            } else {
                rational(rng.random_range(1..=6), rng.random_range(1..=3))
            }
        })
        .collect();
    let w = WeightVector::new(base);
    let g = passage_times(poset, &w)?.last_passage_time();
    let deficit = g - path_length(&w, path)?;
    let extra = match rng.random_range(0..3) {
        0 => rational(0, 1),
        1 => rational(1, 2),
        _ => rational(rng.random_range(1..=4), 1),
    };
    let mut values = w.into_values();
    for &v in path.vertices() {
        values[v] += &deficit + &extra;
    }
    Ok(WeightVector::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::inequality_system;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_posets_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=8 {
            let p = random_connected_poset(n, 0.3, &mut rng).unwrap();
            assert_eq!(p.len(), n);
        }
    }

    #[test]
    fn cone_points_lie_in_the_cone() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = Poset::grid(3, 3).unwrap();
        for p in g.enumerate_paths() {
            let system = inequality_system(&g, &p).unwrap();
            for _ in 0..10 {
                let w = random_cone_point(&g, &p, &mut rng).unwrap();
                assert!(system.contains(&w).unwrap());
            }
        }
    }
}
