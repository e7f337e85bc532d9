use serde::Serialize;


use crate::error::Result;
use crate::lpp::WeightVector;
use crate::poset::{Path, Poset};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalKind {
    /// `ω(v) >= 0`
    Axis(usize),
    /// `⟨ω, π - π'⟩ >= 0` for the competing path `π'`.
    PathDifference(Path),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normal {
    pub kind: NormalKind,
    pub coeffs: Vec<i64>,
}

/// The full, possibly redundant, inequality description of the cone of
/// weights that make `path` a longest path.
///
/// Axis normals come first in vertex order, followed by one path-difference
/// normal per competing path in canonical path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    pub path: Path,
    pub normals: Vec<Normal>,
}

impl Normal {
    pub fn eval<T: Scalar>(&self, weights: &WeightVector<T>) -> Result<T> {
        weights.dot(&self.coeffs)
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|&x| Rational::from_integer(x.into()))
            .collect()
    }
}

impl InequalitySystem {
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn axis_count(&self) -> usize {
        self.normals
            .iter()
            .filter(|n| matches!(n.kind, NormalKind::Axis(_)))
            .count()
    }

    pub fn difference_count(&self) -> usize {
        self.len() - self.axis_count()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.normals.iter().map(|n| n.coeffs.clone()).collect()
    }

    pub fn rational_rows(&self) -> Vec<Vec<Rational>> {
        self.normals.iter().map(Normal::to_rational).collect()
    }

    /// Whether every inequality holds at `weights`.
    pub fn contains<T: Scalar>(&self, weights: &WeightVector<T>) -> Result<bool> {
        for n in &self.normals {
            if n.eval(weights)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether every inequality except the one at `skip` holds.
    pub fn contains_except<T: Scalar>(&self, weights: &WeightVector<T>, skip: usize) -> Result<bool> {
        for (k, n) in self.normals.iter().enumerate() {
            if k != skip && n.eval(weights)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn position_of_difference(&self, competitor: &Path) -> Option<usize> {
        self.normals
            .iter()
            .position(|n| matches!(&n.kind, NormalKind::PathDifference(p) if p == competitor))
    }
}

/// Builds `N_π`: one axis normal per vertex and `π - π'` for every other
/// maximal chain `π'`.
pub fn inequality_system(poset: &Poset, path: &Path) -> Result<InequalitySystem> {
    let path = poset.path(path.vertices().to_vec())?;
    let n = poset.len();
    let mut normals: Vec<Normal> = (0..n)
        .map(|v| {
            let mut coeffs = vec![0; n];
            coeffs[v] = 1;
            Normal {
                kind: NormalKind::Axis(v),
                coeffs,
            }
        })
        .collect();
    let own = path.to_vector();
    for other in poset.enumerate_paths() {
        if other == path {
            continue;
        }
        let coeffs = own
            .iter()
            .zip(other.to_vector())
            .map(|(a, b)| a - b)
            .collect();
        normals.push(Normal {
            kind: NormalKind::PathDifference(other),
            coeffs,
        });
    }
    Ok(InequalitySystem { path, normals })
}
