use std::collections::BTreeMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::system::{inequality_system, InequalitySystem, Normal, NormalKind};
use crate::error::{LppError, Result};
use crate::lpp::{path_length, WeightVector};
use crate::poset::{Path, Poset};
use crate::scalar::Scalar;

/// A bipartite graph between two disjoint vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// `(left vertex, right vertex)` pairs.
    pub edges: Vec<(usize, usize)>,
}

/// Incomparability graph on `π ∖ π'` versus `π' ∖ π`.
pub type DisorderGraph = BipartiteGraph;

/// Comparability graph on `supp(a₁) ∖ supp(a₂)` versus `supp(a₂) ∖ supp(a₁)`.
pub type OrderGraph = BipartiteGraph;

impl BipartiteGraph {
    pub fn vertex_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Connected components as vertex lists. Every vertex appears exactly
    /// once; components are ordered by their smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let vertices: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        let local = |v: usize| vertices.iter().position(|&w| w == v).expect("graph vertex");
        let mut uf = UnionFind::<usize>::new(vertices.len());
        for &(a, b) in &self.edges {
            uf.union(local(a), local(b));
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, &v) in vertices.iter().enumerate() {
            groups.entry(uf.find(k)).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups
            .into_values()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        out.sort();
        out
    }

    /// A graph is connected when it has at least one vertex and a single
    /// component. With one side empty this means the other side is a single
    /// vertex.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    pub fn neighbors_of(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Vertices `v ∈ π` for which some other path contains `π ∖ {v}` but not `v`.
pub fn corners(poset: &Poset, path: &Path) -> Result<Vec<usize>> {
    let path = poset.path(path.vertices().to_vec())?;
    let others = poset.enumerate_paths();
    Ok(path
        .vertices()
        .iter()
        .copied()
        .filter(|&v| {
            others.iter().any(|q| {
                !q.contains(v) && path.vertices().iter().all(|&w| w == v || q.contains(w))
            })
        })
        .collect())
}

/// Builds the disorder graph of two distinct paths.
///
/// The left side lists `π ∖ π'` and the right side `π' ∖ π`, both in path
/// order; edges join incomparable cross pairs.
pub fn disorder_graph(poset: &Poset, path: &Path, other: &Path) -> Result<DisorderGraph> {
    if path == other {
        return Err(LppError::IdenticalPaths);
    }
    let left: Vec<usize> = path.vertices().iter().copied().filter(|&v| !other.contains(v)).collect();
    let right: Vec<usize> = other.vertices().iter().copied().filter(|&v| !path.contains(v)).collect();
    let mut edges = Vec::new();
    for &u in &left {
        for &w in &right {
            if !poset.comparable(u, w) {
                edges.push((u, w));
            }
        }
    }
    Ok(BipartiteGraph { left, right, edges })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FacetTag {
    Necessary,
    Redundant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FacetReason {
    OffPathAxis,
    CornerAxis,
    NonCornerPathAxis,
    ConnectedDisorderGraph,
    DisconnectedDisorderGraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedNormal {
    pub normal: Normal,
    pub tag: FacetTag,
    pub reason: FacetReason,
}

/// The inequality system of a path with every normal tagged as a facet or
/// as redundant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetClassification {
    pub path: Path,
    pub normals: Vec<ClassifiedNormal>,
}

impl FacetClassification {
    pub fn facets(&self) -> impl Iterator<Item = &ClassifiedNormal> {
        self.normals.iter().filter(|c| c.tag == FacetTag::Necessary)
    }

    pub fn facet_count(&self) -> usize {
        self.facets().count()
    }
}

/// Tags each normal of the path's inequality system:
/// axis normals off the path and on the path away from corners are facets,
/// corner axis normals are redundant, and `π - π'` is a facet exactly when
/// the disorder graph of `π` and `π'` is connected.
pub fn facets(poset: &Poset, path: &Path) -> Result<FacetClassification> {
    let system = inequality_system(poset, path)?;
    classify(poset, &system)
}

pub fn classify(poset: &Poset, system: &InequalitySystem) -> Result<FacetClassification> {
    let path = &system.path;
    let corner_set = corners(poset, path)?;
    let mut normals = Vec::with_capacity(system.len());
    for normal in &system.normals {
        let (tag, reason) = match &normal.kind {
            NormalKind::Axis(v) if !path.contains(*v) => (FacetTag::Necessary, FacetReason::OffPathAxis),
            NormalKind::Axis(v) if corner_set.contains(v) => (FacetTag::Redundant, FacetReason::CornerAxis),
            NormalKind::Axis(_) => (FacetTag::Necessary, FacetReason::NonCornerPathAxis),
            NormalKind::PathDifference(other) => {
                if disorder_graph(poset, path, other)?.is_connected() {
                    (FacetTag::Necessary, FacetReason::ConnectedDisorderGraph)
                } else {
                    (FacetTag::Redundant, FacetReason::DisconnectedDisorderGraph)
                }
            }
        };
        normals.push(ClassifiedNormal {
            normal: normal.clone(),
            tag,
            reason,
        });
    }
    Ok(FacetClassification {
        path: path.clone(),
        normals,
    })
}

/// Integer weights under which `other` is the unique longest path and
/// `path` is exactly one shorter.
///
/// Weight 1 on `π'`; along `π ∖ π' = u_0 ⋖ … ⋖ u_ℓ` the weight at `u_i` is
/// the drop in how many vertices of `π' ∖ π` lie above it, with one less at
/// `u_0`; zero elsewhere.
pub fn necessity_witness<T: Scalar>(poset: &Poset, path: &Path, other: &Path) -> Result<WeightVector<T>> {
    let graph = disorder_graph(poset, path, other)?;
    if !graph.is_connected() {
        return Err(LppError::DisconnectedDisorderGraph);
    }
    let above = |u: usize| -> i64 {
        graph
            .right
            .iter()
            .filter(|&&w| poset.leq(u, w))
            .count() as i64
    };
    let mut weights = vec![0i64; poset.len()];
    for &v in other.vertices() {
        weights[v] = 1;
    }
    let exclusive = &graph.left;
    let total = graph.right.len() as i64;
    for (i, &u) in exclusive.iter().enumerate() {
        weights[u] = if i == 0 {
            total - above(u) - 1
        } else {
            above(exclusive[i - 1]) - above(u)
        };
    }
    let witness = WeightVector::<T>::from_ints(&weights);

    assert!(weights.iter().all(|&w| w >= 0), "witness weights are nonnegative");
    let winner = path_length(&witness, other)?;
    assert!(
        path_length(&witness, path)? + T::one() == winner,
        "witness gap is exactly one"
    );
    for q in poset.enumerate_paths() {
        if &q != other {
            assert!(path_length(&witness, &q)? < winner, "competitor is the unique longest path");
        }
    }
    Ok(witness)
}
