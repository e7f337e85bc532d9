//! Finite posets: construction, order queries and exhaustive enumeration of
//! maximal chains, antichains and linear extensions.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use petgraph::unionfind::UnionFind;

use crate::error::{LppError, Result};
use crate::limits::{guard, Limits};

/// Relation between two vertices under the partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    Less,
    Greater,
    Incomparable,
}

/// A finite connected poset with its cover relation and full order relation.
///
/// Vertices are indexed `0..n` in construction order. The order relation is
/// stored as dense bitsets: `up[u]` holds every `v` with `u <= v` and
/// `down[v]` every `u` with `u <= v`.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    topo: Vec<usize>,
    coords: Option<Vec<(usize, usize)>>,
    grid: Option<(usize, usize)>,
}

/// A maximal chain `v_1 ⋖ v_2 ⋖ … ⋖ v_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<usize>,
    indicator: FixedBitSet,
}

/// A set of pairwise incomparable vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antichain {
    members: Vec<usize>,
    indicator: FixedBitSet,
}

/// An order-preserving bijection `P -> {0, …, n-1}`, stored both as the fill
/// sequence and as the position of every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearExtension {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

fn indicator_of(n: usize, members: &[usize]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(n);
    for &v in members {
        bits.insert(v);
    }
    bits
}

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.indicator.contains(v)
    }

    pub fn indicator(&self) -> &FixedBitSet {
        &self.indicator
    }

    /// The 0/1 vector `π(v) = 1{v ∈ π}`.
    pub fn to_vector(&self) -> Vec<i64> {
        (0..self.indicator.len())
            .map(|v| i64::from(self.indicator.contains(v)))
            .collect()
    }

    pub(crate) fn from_vertices_unchecked(n: usize, vertices: Vec<usize>) -> Self {
        let indicator = indicator_of(n, &vertices);
        Self {
            vertices,
            indicator,
        }
    }
}

impl Antichain {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.indicator.contains(v)
    }

    pub fn indicator(&self) -> &FixedBitSet {
        &self.indicator
    }

    pub fn to_vector(&self) -> Vec<i64> {
        (0..self.indicator.len())
            .map(|v| i64::from(self.indicator.contains(v)))
            .collect()
    }

    /// Number of vertices shared with `path`.
    pub fn meets(&self, path: &Path) -> usize {
        self.indicator.intersection(path.indicator()).count()
    }

    pub(crate) fn from_members_unchecked(n: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        let indicator = indicator_of(n, &members);
        Self { members, indicator }
    }
}

impl LinearExtension {
    /// Vertices in fill order, first (lowest) to last.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// 0-based position of `v` in the fill order.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }
}

impl Poset {
    /// The grid `[1,m] × [1,n]` with componentwise order.
    ///
    /// Vertex `(i, j)` gets index `(j-1)·m + (i-1)`, so the first coordinate
    /// varies fastest.
    pub fn grid(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(LppError::InvalidShape(format!("grid {m}x{n} is empty")));
        }
        let idx = |i: usize, j: usize| (j - 1) * m + (i - 1);
        let mut coords = Vec::with_capacity(m * n);
        for j in 1..=n {
            for i in 1..=m {
                coords.push((i, j));
            }
        }
        let mut covers = Vec::new();
        for &(i, j) in &coords {
            if i < m {
                covers.push((idx(i, j), idx(i + 1, j)));
            }
            if j < n {
                covers.push((idx(i, j), idx(i, j + 1)));
            }
        }
        let labels = coords.iter().map(|&(i, j)| format!("({i},{j})")).collect();
        let mut poset = Self::from_index_covers(labels, &covers)?.0;
        poset.coords = Some(coords);
        poset.grid = Some((m, n));
        Ok(poset)
    }

    /// The Young diagram with the given weakly decreasing row lengths, cells
    /// `(i, j)` ordered componentwise. Cells are indexed column by column.
    pub fn young(shape: &[usize]) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(LppError::InvalidShape(
                "shape must be nonempty and positive".into(),
            ));
        }
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(LppError::InvalidShape(format!(
                "{shape:?} is not weakly decreasing"
            )));
        }
        let mut coords = Vec::new();
        for j in 1..=shape[0] {
            for (i, &len) in shape.iter().enumerate() {
                if len >= j {
                    coords.push((i + 1, j));
                }
            }
        }
        let index: HashMap<(usize, usize), usize> =
            coords.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut covers = Vec::new();
        for (k, &(i, j)) in coords.iter().enumerate() {
            if let Some(&down) = index.get(&(i + 1, j)) {
                covers.push((k, down));
            }
            if let Some(&right) = index.get(&(i, j + 1)) {
                covers.push((k, right));
            }
        }
        let labels = coords.iter().map(|&(i, j)| format!("({i},{j})")).collect();
        let mut poset = Self::from_index_covers(labels, &covers)?.0;
        let rectangle = shape.iter().all(|&len| len == shape[0]);
        poset.grid = rectangle.then_some((shape.len(), shape[0]));
        poset.coords = Some(coords);
        Ok(poset)
    }

    /// Builds a poset from labelled order pairs. Pairs implied by
    /// transitivity are dropped with a warning.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self> {
        Self::from_covers_reporting(labels, pairs).map(|(poset, _)| poset)
    }

    /// Like [`Poset::from_covers`], also returning the dropped non-cover
    /// pairs as vertex indices.
    pub fn from_covers_reporting<S: AsRef<str>>(
        labels: &[S],
        pairs: &[(S, S)],
    ) -> Result<(Self, Vec<(usize, usize)>)> {
        let mut index = HashMap::new();
        for (k, label) in labels.iter().enumerate() {
            if index.insert(label.as_ref(), k).is_some() {
                return Err(LppError::DuplicateLabel(label.as_ref().to_string()));
            }
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| LppError::UnknownLabel(s.as_ref().to_string()))
        };
        let mut edges = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            edges.push((lookup(a)?, lookup(b)?));
        }
        let labels = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let (poset, dropped) = Self::from_index_covers(labels, &edges)?;
        for &(u, v) in &dropped {
            log::warn!(
                "dropping non-cover pair ({}, {}) implied by transitivity",
                poset.labels[u],
                poset.labels[v]
            );
        }
        Ok((poset, dropped))
    }

    fn from_index_covers(
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<(Self, Vec<(usize, usize)>)> {
        let n = labels.len();
        if n == 0 {
            return Err(LppError::EmptyPoset);
        }
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(LppError::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(LppError::Cycle(labels[u].clone()));
            }
            if !succ[u].contains(&v) {
                succ[u].push(v);
                indegree[v] += 1;
            }
        }
        for list in &mut succ {
            list.sort_unstable();
        }

        // Kahn's algorithm, lowest index first for a deterministic order.
        let mut ready: std::collections::BTreeSet<usize> =
            (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(u) = ready.pop_first() {
            topo.push(u);
            for &v in &succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&v| indegree[v] > 0).unwrap_or(0);
            return Err(LppError::Cycle(labels[stuck].clone()));
        }

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &u in topo.iter().rev() {
            up[u].insert(u);
            for &v in &succ[u] {
                let reach = up[v].clone();
                up[u].union_with(&reach);
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for u in 0..n {
            for v in up[u].ones() {
                down[v].insert(u);
            }
        }

        // u ⋖ v iff u < v and no w with u < w < v.
        let mut covers = Vec::new();
        for u in 0..n {
            for v in up[u].ones() {
                if v == u {
                    continue;
                }
                let mut between = up[u].clone();
                between.intersect_with(&down[v]);
                if between.count_ones(..) == 2 {
                    covers.push((u, v));
                }
            }
        }
        covers.sort_unstable();
        let mut dropped: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|e| covers.binary_search(e).is_err())
            .collect();
        dropped.sort_unstable();
        dropped.dedup();

        let mut uf = UnionFind::<usize>::new(n);
        for &(u, v) in &covers {
            uf.union(u, v);
        }
        let components = (0..n)
            .map(|v| uf.find(v))
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        if components > 1 {
            return Err(LppError::Disconnected { components });
        }

        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(u, v) in &covers {
            upper_covers[u].push(v);
            lower_covers[v].push(u);
        }
        for list in lower_covers.iter_mut().chain(upper_covers.iter_mut()) {
            list.sort_unstable();
        }

        Ok((
            Self {
                labels,
                covers,
                lower_covers,
                upper_covers,
                up,
                down,
                topo,
                coords: None,
                grid: None,
            },
            dropped,
        ))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Vertices covered by `v`.
    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower_covers[v]
    }

    /// Vertices covering `v`.
    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.upper_covers[v]
    }

    pub fn is_cover(&self, u: usize, v: usize) -> bool {
        self.upper_covers[u].binary_search(&v).is_ok()
    }

    /// A fixed linear extension used to drive recursions bottom-up.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Grid coordinates `(i, j)` for grid and Young-diagram posets.
    pub fn coordinates(&self) -> Option<&[(usize, usize)]> {
        self.coords.as_deref()
    }

    /// `(m, n)` when the poset is the rectangle `[1,m] × [1,n]`.
    pub fn grid_shape(&self) -> Option<(usize, usize)> {
        self.grid
    }

    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.up[u].contains(v)
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        u != v && self.up[u].contains(v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.up[u].contains(v) || self.up[v].contains(u)
    }

    pub fn relation(&self, u: usize, v: usize) -> Relation {
        if u == v {
            Relation::Equal
        } else if self.up[u].contains(v) {
            Relation::Less
        } else if self.up[v].contains(u) {
            Relation::Greater
        } else {
            Relation::Incomparable
        }
    }

    /// Everything above `v`, including `v`.
    pub fn principal_upper(&self, v: usize) -> &FixedBitSet {
        &self.up[v]
    }

    /// Everything below `v`, including `v`.
    pub fn principal_lower(&self, v: usize) -> &FixedBitSet {
        &self.down[v]
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        self.lower_covers[v].is_empty()
    }

    pub fn is_maximal(&self, v: usize) -> bool {
        self.upper_covers[v].is_empty()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_minimal(v)).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_maximal(v)).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(LppError::VertexOutOfRange(v))
        }
    }

    /// `L(A)`: every element below some member of `set`.
    pub fn lower_set(&self, set: &[usize]) -> Result<FixedBitSet> {
        let mut out = FixedBitSet::with_capacity(self.len());
        for &v in set {
            self.check_vertex(v)?;
            out.union_with(&self.down[v]);
        }
        Ok(out)
    }

    /// `U(A)`: every element above some member of `set`.
    pub fn upper_set(&self, set: &[usize]) -> Result<FixedBitSet> {
        let mut out = FixedBitSet::with_capacity(self.len());
        for &v in set {
            self.check_vertex(v)?;
            out.union_with(&self.up[v]);
        }
        Ok(out)
    }

    /// `∂U`: minimal elements of `set`.
    pub fn boundary_min(&self, set: &FixedBitSet) -> Antichain {
        let members = set
            .ones()
            .filter(|&v| !set.ones().any(|u| self.lt(u, v)))
            .collect();
        Antichain::from_members_unchecked(self.len(), members)
    }

    /// `∂L`: maximal elements of `set`.
    pub fn boundary_max(&self, set: &FixedBitSet) -> Antichain {
        let members = set
            .ones()
            .filter(|&v| !set.ones().any(|w| self.lt(v, w)))
            .collect();
        Antichain::from_members_unchecked(self.len(), members)
    }

    pub fn is_upper_set(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|v| self.up[v].is_subset(set))
    }

    pub fn vertex_set(&self, members: &[usize]) -> FixedBitSet {
        indicator_of(self.len(), members)
    }

    /// Validates and wraps a vertex sequence as a maximal chain.
    pub fn path(&self, vertices: Vec<usize>) -> Result<Path> {
        let (first, last) = match (vertices.first(), vertices.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(LppError::InvalidPath("empty vertex list".into())),
        };
        for &v in &vertices {
            self.check_vertex(v)?;
        }
        if !self.is_minimal(first) {
            return Err(LppError::InvalidPath(format!(
                "{} is not minimal",
                self.labels[first]
            )));
        }
        if !self.is_maximal(last) {
            return Err(LppError::InvalidPath(format!(
                "{} is not maximal",
                self.labels[last]
            )));
        }
        if let Some(w) = vertices.windows(2).find(|w| !self.is_cover(w[0], w[1])) {
            return Err(LppError::InvalidPath(format!(
                "{} does not cover {}",
                self.labels[w[1]], self.labels[w[0]]
            )));
        }
        Ok(Path::from_vertices_unchecked(self.len(), vertices))
    }

    /// Validates and wraps a vertex set as an antichain.
    pub fn antichain(&self, members: Vec<usize>) -> Result<Antichain> {
        for &v in &members {
            self.check_vertex(v)?;
        }
        let chain = Antichain::from_members_unchecked(self.len(), members);
        if chain.members.windows(2).any(|w| w[0] == w[1]) {
            return Err(LppError::NotAntichain("repeated vertex".into()));
        }
        for (k, &u) in chain.members.iter().enumerate() {
            for &v in &chain.members[k + 1..] {
                if self.comparable(u, v) {
                    return Err(LppError::NotAntichain(format!(
                        "{} and {} are comparable",
                        self.labels[u], self.labels[v]
                    )));
                }
            }
        }
        Ok(chain)
    }

    /// Validates a fill sequence as a linear extension.
    pub fn linear_extension(&self, sequence: Vec<usize>) -> Result<LinearExtension> {
        let n = self.len();
        if sequence.len() != n {
            return Err(LppError::InvalidExtension(format!(
                "expected {n} vertices, got {}",
                sequence.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (k, &v) in sequence.iter().enumerate() {
            self.check_vertex(v)?;
            if position[v] != usize::MAX {
                return Err(LppError::InvalidExtension(format!(
                    "{} repeated",
                    self.labels[v]
                )));
            }
            position[v] = k;
        }
        if let Some(&(u, v)) = self.covers.iter().find(|&&(u, v)| position[u] > position[v]) {
            return Err(LppError::InvalidExtension(format!(
                "{} placed after {}",
                self.labels[u], self.labels[v]
            )));
        }
        Ok(LinearExtension { sequence, position })
    }

    /// All maximal chains, lexicographic by vertex index sequence.
    pub fn enumerate_paths(&self) -> Vec<Path> {
        self.try_enumerate_paths(usize::MAX)
            .expect("unbounded enumeration")
    }

    pub fn try_enumerate_paths(&self, max_items: usize) -> Result<Vec<Path>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for v in self.minimal_elements() {
            stack.push(v);
            self.extend_paths(&mut stack, &mut out, max_items)?;
            stack.pop();
        }
        Ok(out)
    }

    fn extend_paths(
        &self,
        stack: &mut Vec<usize>,
        out: &mut Vec<Path>,
        max_items: usize,
    ) -> Result<()> {
        let top = *stack.last().expect("nonempty stack");
        if self.is_maximal(top) {
            guard("path count", out.len() + 1, max_items)?;
            out.push(Path::from_vertices_unchecked(self.len(), stack.clone()));
            return Ok(());
        }
        for &next in &self.upper_covers[top] {
            stack.push(next);
            self.extend_paths(stack, out, max_items)?;
            stack.pop();
        }
        Ok(())
    }

    /// All nonempty antichains, lexicographic by sorted member list.
    pub fn enumerate_antichains(&self) -> Vec<Antichain> {
        self.try_enumerate_antichains(usize::MAX)
            .expect("unbounded enumeration")
    }

    pub fn try_enumerate_antichains(&self, max_items: usize) -> Result<Vec<Antichain>> {
        let mut out = Vec::new();
        let mut members = Vec::new();
        self.extend_antichains(0, &mut members, &mut out, max_items)?;
        Ok(out)
    }

    fn extend_antichains(
        &self,
        start: usize,
        members: &mut Vec<usize>,
        out: &mut Vec<Antichain>,
        max_items: usize,
    ) -> Result<()> {
        for v in start..self.len() {
            if members.iter().any(|&u| self.comparable(u, v)) {
                continue;
            }
            members.push(v);
            guard("antichain count", out.len() + 1, max_items)?;
            out.push(Antichain::from_members_unchecked(self.len(), members.clone()));
            self.extend_antichains(v + 1, members, out, max_items)?;
            members.pop();
        }
        Ok(())
    }

    /// All linear extensions by backtracking, lowest available index first.
    pub fn enumerate_linear_extensions(&self, limits: &Limits) -> Result<Vec<LinearExtension>> {
        limits.check_extension_vertices(self.len())?;
        let n = self.len();
        let mut pending: Vec<usize> = (0..n).map(|v| self.lower_covers[v].len()).collect();
        let mut sequence = Vec::with_capacity(n);
        let mut out = Vec::new();
        self.extend_extensions(&mut pending, &mut sequence, &mut out, limits.max_items)?;
        Ok(out)
    }

    fn extend_extensions(
        &self,
        pending: &mut [usize],
        sequence: &mut Vec<usize>,
        out: &mut Vec<LinearExtension>,
        max_items: usize,
    ) -> Result<()> {
        let n = self.len();
        if sequence.len() == n {
            guard("linear extension count", out.len() + 1, max_items)?;
            let mut position = vec![0; n];
            for (k, &v) in sequence.iter().enumerate() {
                position[v] = k;
            }
            out.push(LinearExtension {
                sequence: sequence.clone(),
                position,
            });
            return Ok(());
        }
        for v in 0..n {
            // usize::MAX marks vertices already placed.
            if pending[v] != 0 {
                continue;
            }
            pending[v] = usize::MAX;
            for &w in &self.upper_covers[v] {
                pending[w] -= 1;
            }
            sequence.push(v);
            let result = self.extend_extensions(pending, sequence, out, max_items);
            sequence.pop();
            for &w in &self.upper_covers[v] {
                pending[w] += 1;
            }
            pending[v] = 0;
            result?;
        }
        Ok(())
    }

    /// `e(P)` by dynamic programming over the lattice of order ideals:
    /// the number of maximal chains `∅ ⋖ I_1 ⋖ … ⋖ P`.
    pub fn count_linear_extensions(&self, limits: &Limits) -> Result<BigUint> {
        let n = self.len();
        let mut layer: HashMap<FixedBitSet, BigUint> = HashMap::new();
        layer.insert(FixedBitSet::with_capacity(n), BigUint::one());
        let mut visited = 1usize;
        for _ in 0..n {
            let mut next: HashMap<FixedBitSet, BigUint> = HashMap::new();
            for (ideal, count) in &layer {
                for v in 0..n {
                    if ideal.contains(v)
                        || !self.lower_covers[v].iter().all(|&u| ideal.contains(u))
                    {
                        continue;
                    }
                    let mut grown = ideal.clone();
                    grown.insert(v);
                    *next.entry(grown).or_insert_with(BigUint::zero) += count;
                }
            }
            visited += next.len();
            guard("order ideal count", visited, limits.max_ideals)?;
            layer = next;
        }
        Ok(layer.into_values().next().unwrap_or_default())
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset on {} vertices, {} covers", self.len(), self.covers.len())
    }
}

macro_rules! serialize_as_vertices {
    ($ty:ty, $field:ident) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.$field.serialize(s)
            }
        }
    };
}

serialize_as_vertices!(Path, vertices);
serialize_as_vertices!(Antichain, members);
serialize_as_vertices!(LinearExtension, sequence);
