//! The exact oracle on cone systems, with membership decided by listing
//! path lengths.

use lpp_cones::cone::{extreme_rays, inequality_system};
use lpp_cones::lpp::path_length;
use lpp_cones::oracle::{in_conic_hull, int_rank, is_redundant, lp_feasible, LpProblem, Sense, VarDomain};
use lpp_cones::random::random_connected_poset;
use lpp_cones::scalar::{int, rational};
use lpp_cones::{Path, Poset, Rational, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn in_cone(paths: &[Path], path: &Path, w: &WeightVector<Rational>) -> bool {
    let own = path_length(w, path).unwrap();
    paths.iter().all(|q| path_length(w, q).unwrap() <= own)
}

fn generators(rays: &[lpp_cones::Antichain]) -> Vec<Vec<Rational>> {
    rays.iter().map(|r| r.to_vector().into_iter().map(int).collect()).collect()
}

#[test]
fn hull_membership_matches_path_lengths() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let (mut inside, mut outside) = (0, 0);
    for _ in 0..15 {
        let n = rng.random_range(2..=7);
        let p = random_connected_poset(n, 0.3, &mut rng).unwrap();
        let paths = p.enumerate_paths();
        for path in &paths {
            let gens = generators(&extreme_rays(&p, path).unwrap());
            for _ in 0..20 {
                let w = WeightVector::new((0..n).map(|_| rational(rng.random_range(0..5), rng.random_range(1..3))).collect::<Vec<_>>());
                let member = in_cone(&paths, path, &w);
                assert_eq!(in_conic_hull(w.values(), &gens).unwrap(), member);
                if member {
                    inside += 1;
                } else {
                    outside += 1;
                }
            }
        }
    }
    assert!(inside > 0 && outside > 0);
}

#[test]
fn unit_square_examples() {
    let g = Poset::grid(2, 2).unwrap();
    // vertices (1,1), (2,1), (1,2), (2,2)
    let up = g.path(vec![0, 2, 3]).unwrap();
    let system = inequality_system(&g, &up).unwrap();
    let rows = system.rational_rows();
    let axis = |v: usize| (0..4).map(|u| int(i64::from(u == v))).collect::<Vec<_>>();
    assert!(is_redundant(&axis(2), &rows).unwrap());
    assert!(!is_redundant(&axis(1), &rows).unwrap());

    // Drop δ(2,1) and ask for ω(2,1) <= -1.
    let mut lp = LpProblem::new(4, VarDomain::Free);
    for row in rows.iter().filter(|r| **r != axis(1)) {
        lp.push(row.clone(), Sense::Ge, int(0));
    }
    lp.push(axis(1).into_iter().map(|x| -x).collect(), Sense::Ge, int(1));
    assert!(lp_feasible(&lp).unwrap().is_feasible());

    let gens = generators(&extreme_rays(&g, &up).unwrap());
    assert!(!in_conic_hull(&axis(1), &gens).unwrap());

    let right = g.path(vec![0, 1, 3]).unwrap();
    assert_eq!(int_rank(&[up.to_vector(), right.to_vector()]), 2);
    assert_eq!(int_rank(&[vec![0i64; 3], vec![0; 3]]), 0);
}
