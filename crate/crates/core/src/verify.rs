//! Structural results checked against the exact oracle.
//!
//! Each suite recomputes a structural answer (extreme rays, facet tags,
//! face adjacency, determinants, probability totals, the uniform left
//! tail) by an independent route and records agreement per item.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cone::{
    extreme_rays, facets, inequality_system, is_two_dim_face, necessity_witness, perturbation_dim, ray_sum,
    FacetTag, NormalKind,
};
use crate::error::{LppError, Result};
use crate::limits::Limits;
use crate::lpp::WeightVector;
use crate::oracle;
use crate::poset::Poset;
use crate::probability::{grid_left_tail, path_distribution_exponential_exact, simplex_prob_exponential, uniform_left_tail};
use crate::random::random_cone_point;
use crate::scalar::{format_rational, Rational};
use crate::simplicial::{all_cells, eu_determinant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Rays,
    Facets,
    Faces,
    Determinants,
    Probability,
    Tail,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Rays,
        Suite::Facets,
        Suite::Faces,
        Suite::Determinants,
        Suite::Probability,
        Suite::Tail,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rays => "rays",
            Suite::Facets => "facets",
            Suite::Faces => "faces",
            Suite::Determinants => "determinants",
            Suite::Probability => "probability",
            Suite::Tail => "tail",
        }
    }
}

impl FromStr for Suite {
    type Err = LppError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| LppError::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub subject: String,
    pub expected: String,
    pub observed: String,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    pub total: usize,
    pub mismatches: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Random cone points per path in the ray completeness check.
    pub samples: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 20,
            seed: 0,
            limits: Limits::default(),
        }
    }
}

struct Recorder(Vec<Check>);

impl Recorder {
    fn push(&mut self, subject: String, expected: impl ToString, observed: impl ToString) {
        let expected = expected.to_string();
        let observed = observed.to_string();
        let agree = expected == observed;
        self.0.push(Check {
            subject,
            expected,
            observed,
            agree,
        });
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        let mismatches = self.0.iter().filter(|c| !c.agree).count();
        SuiteReport {
            suite,
            total: self.0.len(),
            mismatches,
            checks: self.0,
        }
    }
}

fn tag_name(tag: FacetTag) -> &'static str {
    match tag {
        FacetTag::Necessary => "necessary",
        FacetTag::Redundant => "redundant",
    }
}

pub fn run_suite(poset: &Poset, suite: Suite, options: &VerifyOptions) -> Result<SuiteReport> {
    let mut rec = Recorder(Vec::new());
    match suite {
        Suite::Rays => rays_suite(poset, options, &mut rec)?,
        Suite::Facets => facets_suite(poset, options, &mut rec)?,
        Suite::Faces => faces_suite(poset, options, &mut rec)?,
        Suite::Determinants => {
            for (k, cell) in all_cells(poset, &options.limits)?.iter().enumerate() {
                let det = eu_determinant(cell);
                rec.push(format!("extension {k} |det E_U|"), 1, det.abs());
            }
        }
        Suite::Probability => {
            let ones = vec![Rational::one(); poset.len()];
            let cells = all_cells(poset, &options.limits)?;
            let by_cells = cells.iter().try_fold(Rational::zero(), |acc, c| {
                Ok::<_, LppError>(acc + simplex_prob_exponential(c, &ones)?)
            })?;
            rec.push("sum over cells, unit exponential".into(), "1", format_rational(&by_cells));
            let dist = path_distribution_exponential_exact(poset, &ones, &options.limits)?;
            rec.push("sum over paths, unit exponential".into(), "1", format_rational(&dist.total()));
        }
        Suite::Tail => {
            let tail = uniform_left_tail(poset, &options.limits)?;
            let listed = poset.enumerate_linear_extensions(&options.limits)?.len();
            let factorial = (1..=poset.len()).fold(BigInt::one(), |a, k| a * BigInt::from(k));
            let by_listing = Rational::new(BigInt::from(listed), factorial);
            rec.push(
                "e(P)/|P|! by listing vs ideal lattice".into(),
                format_rational(&by_listing),
                format_rational(&tail),
            );
            if let Some((m, n)) = poset.grid_shape() {
                rec.push(
                    "hook product".into(),
                    format_rational(&grid_left_tail(m, n)?),
                    format_rational(&tail),
                );
            }
        }
    }
    Ok(rec.finish(suite))
}

fn rays_suite(poset: &Poset, options: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let paths = poset.try_enumerate_paths(options.limits.max_items)?;
    for (k, path) in paths.iter().enumerate() {
        let rays = extreme_rays(poset, path)?;
        for ray in &rays {
            let w = WeightVector::<Rational>::indicator(poset.len(), ray.members().iter().copied());
            rec.push(
                format!("path {k} ray {:?} perturbation dim", ray.members()),
                1,
                perturbation_dim(poset, path, &w)?,
            );
        }
        let generators: Vec<Vec<Rational>> = rays
            .iter()
            .map(|r| oracle::to_rational_rows(&[r.to_vector()]).remove(0))
            .collect();
        let system = inequality_system(poset, path)?;
        let mut inside = 0;
        for _ in 0..options.samples {
            let point = random_cone_point(poset, path, &mut rng)?;
            debug_assert!(system.contains(&point)?);
            if oracle::in_conic_hull(point.values(), &generators)? {
                inside += 1;
            }
        }
        rec.push(format!("path {k} cone points in ray hull"), options.samples, inside);
    }
    Ok(())
}

fn facets_suite(poset: &Poset, options: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let paths = poset.try_enumerate_paths(options.limits.max_items)?;
    for (k, path) in paths.iter().enumerate() {
        let classification = facets(poset, path)?;
        let system = inequality_system(poset, path)?;
        let rows = system.rational_rows();
        for (i, c) in classification.normals.iter().enumerate() {
            let redundant = oracle::is_redundant_at(i, &rows)?;
            let oracle_tag = if redundant { FacetTag::Redundant } else { FacetTag::Necessary };
            let subject = match &c.normal.kind {
                NormalKind::Axis(v) => format!("path {k} axis {}", poset.label(*v)),
                NormalKind::PathDifference(other) => format!("path {k} difference {:?}", other.vertices()),
            };
            rec.push(subject.clone(), tag_name(oracle_tag), tag_name(c.tag));
            if let (NormalKind::PathDifference(other), FacetTag::Necessary) = (&c.normal.kind, c.tag) {
                let w = necessity_witness::<Rational>(poset, path, other)?;
                let outside = system.normals[i].eval(&w)? == -Rational::one();
                let others = system.contains_except(&w, i)?;
                rec.push(format!("{subject} witness"), "valid", if outside && others { "valid" } else { "invalid" });
            }
        }
    }
    Ok(())
}

fn faces_suite(poset: &Poset, options: &VerifyOptions, rec: &mut Recorder) -> Result<()> {
    let paths = poset.try_enumerate_paths(options.limits.max_items)?;
    for (k, path) in paths.iter().enumerate() {
        let rays = extreme_rays(poset, path)?;
        for i in 0..rays.len() {
            for j in i + 1..rays.len() {
                let face = is_two_dim_face(poset, path, &rays[i], &rays[j])?;
                let dim = perturbation_dim(poset, path, &ray_sum(poset, &[&rays[i], &rays[j]]))?;
                rec.push(
                    format!("path {k} rays {:?} {:?}", rays[i].members(), rays[j].members()),
                    dim == 2,
                    face,
                );
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_on_small_grids() {
        let options = VerifyOptions {
            samples: 5,
            ..VerifyOptions::default()
        };
        for g in [Poset::grid(2, 2).unwrap(), Poset::grid(2, 3).unwrap(), Poset::young(&[3, 2]).unwrap()] {
            for suite in Suite::ALL {
                let report = run_suite(&g, suite, &options).unwrap();
                assert!(report.total > 0);
                assert!(report.passed(), "{:?}", report.checks.iter().find(|c| !c.agree));
            }
        }
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
