//! Seeded Monte Carlo estimates.
//!
//! Replicate `r` draws from `ChaCha8Rng::seed_from_u64(seed)` on stream
//! `r`, so every replicate's randomness depends only on `(seed, r)` and
//! results do not depend on the number of worker threads.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp, Gamma};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{LppError, Result};
use crate::lpp::{argmax_path, WeightVector};
use crate::poset::{Path, Poset};

use super::uniform::chain_polytope_membership;

/// Iid samplers that can be named from the command line.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CustomSampler {
    /// `|Z|` for standard normal `Z`.
    AbsNormal,
    Gamma { shape: f64 },
}

impl CustomSampler {
    pub fn parse(id: &str) -> Result<Self> {
        if id == "abs-normal" {
            return Ok(Self::AbsNormal);
        }
        if let Some(shape) = id.strip_prefix("gamma:") {
            let shape: f64 = shape
                .parse()
                .map_err(|_| LppError::Parse(format!("bad gamma shape in {id:?}")))?;
            if shape.is_finite() && shape > 0.0 {
                return Ok(Self::Gamma { shape });
            }
        }
        Err(LppError::Parse(format!("unknown sampler {id:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawKind {
    /// Independent `Exp(λ_v)` with one rate per vertex.
    Exponential(Vec<f64>),
    Uniform01,
    Custom(CustomSampler),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightLaw {
    pub kind: LawKind,
    pub seed: u64,
}

impl WeightLaw {
    pub fn exponential(rates: Vec<f64>, seed: u64) -> Result<Self> {
        if let Some(i) = rates.iter().position(|r| !(r.is_finite() && *r > 0.0)) {
            return Err(LppError::NonPositiveRate(i));
        }
        Ok(Self {
            kind: LawKind::Exponential(rates),
            seed,
        })
    }

    pub fn unit_exponential(n: usize, seed: u64) -> Self {
        Self {
            kind: LawKind::Exponential(vec![1.0; n]),
            seed,
        }
    }

    pub fn uniform(seed: u64) -> Self {
        Self {
            kind: LawKind::Uniform01,
            seed,
        }
    }

    /// The generator for replicate `index`.
    pub fn replicate_rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }

    pub fn sample(&self, n: usize, rng: &mut ChaCha8Rng) -> Result<WeightVector<f64>> {
        let values = match &self.kind {
            LawKind::Exponential(rates) => {
                if rates.len() != n {
                    return Err(LppError::DimensionMismatch {
                        expected: n,
                        actual: rates.len(),
                    });
                }
                rates
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| {
                        Exp::new(r)
                            .map(|d| d.sample(rng))
                            .map_err(|_| LppError::NonPositiveRate(i))
                    })
                    .collect::<Result<_>>()?
            }
            LawKind::Uniform01 => (0..n).map(|_| rng.random::<f64>()).collect(),
            LawKind::Custom(CustomSampler::AbsNormal) => (0..n)
                .map(|_| rng.sample::<f64, _>(rand_distr::StandardNormal).abs())
                .collect(),
            LawKind::Custom(CustomSampler::Gamma { shape }) => {
                let d = Gamma::new(*shape, 1.0)
                    .map_err(|_| LppError::Parse(format!("bad gamma shape {shape}")))?;
                (0..n).map(|_| d.sample(rng)).collect()
            }
        };
        Ok(WeightVector::new(values))
    }

    pub fn sample_replicate(&self, n: usize, index: u64) -> Result<WeightVector<f64>> {
        self.sample(n, &mut self.replicate_rng(index))
    }
}

/// A proportion with its binomial standard error `sqrt(p(1-p)/N)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub hits: u64,
    pub trials: u64,
    pub estimate: f64,
    pub standard_error: f64,
}

impl Estimate {
    pub fn new(hits: u64, trials: u64) -> Self {
        let (estimate, standard_error) = if trials == 0 {
            (f64::NAN, f64::NAN)
        } else {
            let p = hits as f64 / trials as f64;
            (p, (p * (1.0 - p) / trials as f64).sqrt())
        };
        Self {
            hits,
            trials,
            estimate,
            standard_error,
        }
    }

    /// `|estimate - target| <= k · SE`, treating a zero SE as exact.
    pub fn within(&self, target: f64, k: f64) -> bool {
        (self.estimate - target).abs() <= k * self.standard_error + f64::EPSILON
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathEstimate {
    pub path: Path,
    pub estimate: Estimate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathDistribution {
    pub paths: Vec<PathEstimate>,
    pub replicates: u64,
    pub kept: u64,
    pub tie_discards: u64,
    pub seed: u64,
}

fn run_replicates<R, F>(reps: u64, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(u64) -> Result<R> + Sync + Send,
{
    (0..reps).into_par_iter().map(f).collect()
}

/// Frequencies of the longest path over `reps` draws from `law`. Draws
/// with a tied maximizer are discarded and counted.
pub fn mc_path_distribution(poset: &Poset, law: &WeightLaw, reps: u64) -> Result<PathDistribution> {
    let paths = poset.enumerate_paths();
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vertices(), i))
        .collect();
    let outcomes = run_replicates(reps, |r| {
        let w = law.sample_replicate(poset.len(), r)?;
        let best = argmax_path(poset, &w)?;
        Ok((!best.tie).then(|| index[best.path.vertices()]))
    })?;
    let mut counts = vec![0u64; paths.len()];
    let mut ties = 0;
    for o in outcomes {
        match o {
            Some(i) => counts[i] += 1,
            None => ties += 1,
        }
    }
    let kept = reps - ties;
    Ok(PathDistribution {
        paths: paths
            .into_iter()
            .zip(counts)
            .map(|(path, c)| PathEstimate {
                path,
                estimate: Estimate::new(c, kept),
            })
            .collect(),
        replicates: reps,
        kept,
        tie_discards: ties,
        seed: law.seed,
    })
}

/// Fraction of draws with `G_P <= 1` under iid Uniform(0,1) weights.
pub fn mc_uniform_left_tail(poset: &Poset, reps: u64, seed: u64) -> Result<Estimate> {
    let law = WeightLaw::uniform(seed);
    let inside = run_replicates(reps, |r| {
        let w = law.sample_replicate(poset.len(), r)?;
        chain_polytope_membership(poset, &w)
    })?;
    Ok(Estimate::new(inside.into_iter().filter(|&b| b).count() as u64, reps))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReplicateRecord {
    pub replicate: u64,
    pub path: usize,
    pub length: f64,
    pub deviation: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatisticsReport {
    pub replicates: u64,
    pub kept: u64,
    pub tie_discards: u64,
    pub seed: u64,
    pub mean_length: f64,
    pub mean_deviation: f64,
    /// Pearson correlation of deviation and length; `None` when either is
    /// constant.
    pub correlation: Option<f64>,
    pub modal_path: Path,
    pub modal_count: u64,
    /// `(deviation, count)` in increasing deviation.
    pub deviation_histogram: Vec<(usize, u64)>,
    #[serde(skip)]
    pub records: Vec<ReplicateRecord>,
}

impl StatisticsReport {
    pub fn histogram_csv(&self) -> String {
        let mut s = String::from("deviation,count\n");
        for (d, c) in &self.deviation_histogram {
            s.push_str(&format!("{d},{c}\n"));
        }
        s
    }

    pub fn records_csv(&self) -> String {
        let mut s = String::from("replicate,path,length,deviation\n");
        for r in &self.records {
            s.push_str(&format!("{},{},{},{}\n", r.replicate, r.path, r.length, r.deviation));
        }
        s
    }
}

/// Largest `|i - j|` over the cells `(i, j)` of a grid path.
pub fn transversal_deviation(poset: &Poset, path: &Path) -> Result<usize> {
    let coords = poset.coordinates().ok_or_else(|| LppError::InvalidShape("grid coordinates required".into()))?;
    Ok(path
        .vertices()
        .iter()
        .map(|&v| coords[v].0.abs_diff(coords[v].1))
        .max()
        .unwrap_or(0))
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    (sxx > 0.0 && syy > 0.0).then(|| sxy / (sxx * syy).sqrt())
}

/// Per-replicate longest path, its length and transversal deviation on a
/// grid, summarised by their correlation, the modal path and a deviation
/// histogram.
pub fn mc_statistics(poset: &Poset, law: &WeightLaw, reps: u64) -> Result<StatisticsReport> {
    if poset.grid_shape().is_none() {
        return Err(LppError::InvalidShape("statistics need a rectangular grid".into()));
    }
    let paths = poset.enumerate_paths();
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vertices(), i))
        .collect();
    let deviations: Vec<usize> = paths
        .iter()
        .map(|p| transversal_deviation(poset, p))
        .collect::<Result<_>>()?;
    let outcomes = run_replicates(reps, |r| {
        let w = law.sample_replicate(poset.len(), r)?;
        let best = argmax_path(poset, &w)?;
        Ok((!best.tie).then(|| {
            let path = index[best.path.vertices()];
            ReplicateRecord {
                replicate: r,
                path,
                length: best.length,
                deviation: deviations[path],
            }
        }))
    })?;
    let records: Vec<ReplicateRecord> = outcomes.into_iter().flatten().collect();
    let kept = records.len() as u64;

    let mut counts = vec![0u64; paths.len()];
    let mut histogram = BTreeMap::new();
    for r in &records {
        counts[r.path] += 1;
        *histogram.entry(r.deviation).or_insert(0u64) += 1;
    }
    let modal = (0..paths.len())
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .expect("a grid has a path");
    let lengths: Vec<f64> = records.iter().map(|r| r.length).collect();
    let devs: Vec<f64> = records.iter().map(|r| r.deviation as f64).collect();
    let mean = |xs: &[f64]| {
        if xs.is_empty() {
            f64::NAN
        } else {
            xs.iter().sum::<f64>() / xs.len() as f64
        }
    };
    Ok(StatisticsReport {
        replicates: reps,
        kept,
        tie_discards: reps - kept,
        seed: law.seed,
        mean_length: mean(&lengths),
        mean_deviation: mean(&devs),
        correlation: pearson(&devs, &lengths),
        modal_path: paths[modal].clone(),
        modal_count: counts[modal],
        deviation_histogram: histogram.into_iter().collect(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replicate_streams_are_stable() {
        let law = WeightLaw::uniform(7);
        let a = law.sample_replicate(5, 3).unwrap();
        let b = law.sample_replicate(5, 3).unwrap();
        let c = law.sample_replicate(5, 4).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a.values().iter().all(|&x| (0.0..1.0).contains(&x)));
    }

    #[test]
    fn symmetric_grid_paths() {
        let g = Poset::grid(2, 2).unwrap();
        let law = WeightLaw::unit_exponential(4, 11);
        let d = mc_path_distribution(&g, &law, 20_000).unwrap();
        assert_eq!(d.tie_discards, 0);
        assert_eq!(d.paths.iter().map(|p| p.estimate.hits).sum::<u64>(), d.kept);
        for p in &d.paths {
            assert!(p.estimate.within(0.5, 4.0), "{:?}", p.estimate);
        }
    }

    #[test]
    fn constant_deviation_has_no_correlation() {
        let g = Poset::grid(2, 2).unwrap();
        let report = mc_statistics(&g, &WeightLaw::uniform(1), 500).unwrap();
        assert_eq!(report.deviation_histogram, vec![(1, 500)]);
        assert_eq!(report.correlation, None);
        let again = mc_statistics(&g, &WeightLaw::uniform(1), 500).unwrap();
        assert_eq!(report, again);
        assert!(mc_statistics(&Poset::young(&[2, 1]).unwrap(), &WeightLaw::uniform(1), 10).is_err());
    }

    #[test]
    fn custom_samplers() {
        assert_eq!(CustomSampler::parse("abs-normal").unwrap(), CustomSampler::AbsNormal);
        assert_eq!(CustomSampler::parse("gamma:2").unwrap(), CustomSampler::Gamma { shape: 2.0 });
        assert!(CustomSampler::parse("gamma:-1").is_err());
        assert!(CustomSampler::parse("cauchy").is_err());
        let law = WeightLaw {
            kind: LawKind::Custom(CustomSampler::Gamma { shape: 2.0 }),
            seed: 0,
        };
        assert!(law.sample_replicate(6, 0).unwrap().values().iter().all(|&x| x >= 0.0));
        assert!(WeightLaw::exponential(vec![1.0, 0.0], 0).is_err());
    }
}
