//! Last passage percolation on a poset: path lengths, the passage-time
//! recursion and its inverse, and longest-path extraction.

use crate::error::{LppError, Result};
use crate::poset::{LinearExtension, Path, Poset};
use crate::scalar::Scalar;

/// Per-vertex weights `ω`, aligned with the poset's vertex indices.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector<T> {
    values: Vec<T>,
}

/// Per-vertex passage times `G(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PassageTimes<T> {
    values: Vec<T>,
}

/// A longest path together with its length and whether any choice along
/// the backtrack was tied.
#[derive(Clone, Debug, PartialEq)]
pub struct ArgmaxPath<T> {
    pub path: Path,
    pub length: T,
    pub tie: bool,
}

impl<T: Scalar> WeightVector<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![T::zero(); n])
    }

    /// The indicator of a vertex set scaled by one.
    pub fn indicator(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut w = Self::zeros(n);
        for v in members {
            w.values[v] = T::one();
        }
        w
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&x| T::from_int(x)).collect())
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        match self.values.iter().position(|x| x.is_negative()) {
            Some(vertex) => Err(LppError::NegativeWeight { vertex }),
            None => Ok(()),
        }
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.values.len() == n {
            Ok(())
        } else {
            Err(LppError::DimensionMismatch {
                expected: n,
                actual: self.values.len(),
            })
        }
    }

    pub fn dot(&self, other: &[i64]) -> Result<T> {
        self.check_len(other.len())?;
        Ok(self
            .values
            .iter()
            .zip(other)
            .filter(|(_, &c)| c != 0)
            .fold(T::zero(), |acc, (x, &c)| acc + x.clone() * T::from_int(c)))
    }
}

impl<T: Scalar> std::ops::Index<usize> for WeightVector<T> {
    type Output = T;

    fn index(&self, v: usize) -> &T {
        &self.values[v]
    }
}

impl<T: Scalar> PassageTimes<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The global passage time `G_P = max_v G(v)`.
    pub fn last_passage_time(&self) -> T {
        self.values
            .iter()
            .cloned()
            .fold(T::zero(), |best, x| if x > best { x } else { best })
    }

    /// Fill order of the corner growth model: vertices sorted by passage
    /// time. `None` when two passage times coincide.
    pub fn fill_order(&self, poset: &Poset) -> Option<LinearExtension> {
        let mut order: Vec<usize> = (0..self.values.len()).collect();
        order.sort_by(|&a, &b| {
            self.values[a]
                .partial_cmp(&self.values[b])
                .expect("comparable passage times")
        });
        if order
            .windows(2)
            .any(|w| self.values[w[0]] == self.values[w[1]])
        {
            return None;
        }
        poset.linear_extension(order).ok()
    }
}

impl<T: Scalar> std::ops::Index<usize> for PassageTimes<T> {
    type Output = T;

    fn index(&self, v: usize) -> &T {
        &self.values[v]
    }
}

/// `⟨ω, π⟩`, the total weight collected along `path`.
pub fn path_length<T: Scalar>(weights: &WeightVector<T>, path: &Path) -> Result<T> {
    weights.check_len(path.indicator().len())?;
    Ok(path
        .vertices()
        .iter()
        .fold(T::zero(), |acc, &v| acc + weights.values[v].clone()))
}

fn max_over<'a, T: Scalar>(values: impl Iterator<Item = &'a T>) -> Option<&'a T> {
    values.fold(None, |best: Option<&T>, x| match best {
        Some(b) if b >= x => Some(b),
        _ => Some(x),
    })
}

/// Passage times from `G(v) = ω(v) + max_{u ⋖ v} G(u)`.
pub fn passage_times<T: Scalar>(poset: &Poset, weights: &WeightVector<T>) -> Result<PassageTimes<T>> {
    weights.check_len(poset.len())?;
    weights.check_nonnegative()?;
    let mut g = vec![T::zero(); poset.len()];
    for &v in poset.topological_order() {
        let below = max_over(poset.lower_covers(v).iter().map(|&u| &g[u]))
            .cloned()
            .unwrap_or_else(T::zero);
        g[v] = weights.values[v].clone() + below;
    }
    Ok(PassageTimes::new(g))
}

/// Inverts the recursion: `ω(v) = G(v) - max_{u ⋖ v} G(u)`.
pub fn weights_from_passage_times<T: Scalar>(
    poset: &Poset,
    times: &PassageTimes<T>,
) -> Result<WeightVector<T>> {
    if times.len() != poset.len() {
        return Err(LppError::DimensionMismatch {
            expected: poset.len(),
            actual: times.len(),
        });
    }
    let mut w = Vec::with_capacity(poset.len());
    for v in 0..poset.len() {
        let below = max_over(poset.lower_covers(v).iter().map(|&u| &times.values[u]))
            .cloned()
            .unwrap_or_else(T::zero);
        let x = times.values[v].clone() - below;
        if x.is_negative() {
            return Err(LppError::NonMonotone { vertex: v });
        }
        w.push(x);
    }
    Ok(WeightVector::new(w))
}

/// Recovers a longest path by backtracking the passage-time recursion.
///
/// Starts at the maximal element with the largest passage time and
/// repeatedly steps to the lower cover with the largest passage time.
/// Ties are broken by lowest vertex index and reported through `tie`.
pub fn argmax_path<T: Scalar>(poset: &Poset, weights: &WeightVector<T>) -> Result<ArgmaxPath<T>> {
    let times = passage_times(poset, weights)?;
    Ok(argmax_from_passage_times(poset, &times))
}

pub fn argmax_from_passage_times<T: Scalar>(poset: &Poset, times: &PassageTimes<T>) -> ArgmaxPath<T> {
    let g = times.values();
    let mut tie = false;
    let mut pick = |candidates: &[usize]| -> usize {
        let mut best = candidates[0];
        for &c in &candidates[1..] {
            if g[c] > g[best] {
                best = c;
            }
        }
        if candidates.iter().filter(|&&c| g[c] == g[best]).count() > 1 {
            tie = true;
        }
        best
    };
    let mut current = pick(&poset.maximal_elements());
    let length = g[current].clone();
    let mut reversed = vec![current];
    while !poset.is_minimal(current) {
        current = pick(poset.lower_covers(current));
        reversed.push(current);
    }
    reversed.reverse();
    ArgmaxPath {
        path: Path::from_vertices_unchecked(poset.len(), reversed),
        length,
        tie,
    }
}
