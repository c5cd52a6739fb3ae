//! Finite digraphs and the elementary reachability vocabulary: reach, shadow,
//! converse, degree classes, strips and tails.
//!
//! Vertices are stored in label order, so a vertex's index doubles as its rank
//! in lexicographic order. Every set-valued result is a [`VertexSet`], which
//! iterates in that same order.

use std::borrow::Borrow;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A vertex label: a nonempty token with no whitespace and no `#`, and not
/// the reserved word `node`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty()
            || label == "node"
            || label.contains('#')
            || label.chars().any(char::is_whitespace)
        {
            return Err(Error::InvalidLabel(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

/// A set of vertices, ordered by label.
pub type VertexSet = BTreeSet<VertexId>;

/// Builds a [`VertexSet`] from raw labels, validating each one.
pub fn vertex_set<I, S>(labels: I) -> Result<VertexSet>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    labels
        .into_iter()
        .map(|l| VertexId::new(l.as_ref()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripMode {
    /// Remove vertices with in-degree and out-degree 0.
    Isolates,
    /// Remove vertices with out-degree 0.
    Sinks,
}

/// Sources (in-degree 0), sinks (out-degree 0) and isolates (both).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeClasses {
    pub sources: VertexSet,
    pub sinks: VertexSet,
    pub isolates: VertexSet,
}

/// An immutable finite digraph. Loops are allowed, parallel arcs are not.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Digraph {
    labels: Vec<VertexId>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a digraph from raw labels. The vertex set is `vertex_list`
    /// together with every arc endpoint; repeated arcs collapse.
    pub fn build<V, S, A, T>(vertex_list: V, arc_list: A) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        A: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let vertices = vertex_set(vertex_list)?;
        let arcs = arc_list
            .into_iter()
            .map(|(t, h)| Ok((VertexId::new(t.as_ref())?, VertexId::new(h.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_ids(vertices, arcs))
    }

    /// Infallible counterpart of [`Digraph::build`] for already-validated labels.
    pub fn from_ids<V, A>(vertices: V, arcs: A) -> Self
    where
        V: IntoIterator<Item = VertexId>,
        A: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let arcs: BTreeSet<(VertexId, VertexId)> = arcs.into_iter().collect();
        let mut all: VertexSet = vertices.into_iter().collect();
        for (t, h) in &arcs {
            all.insert(t.clone());
            all.insert(h.clone());
        }
        let labels: Vec<VertexId> = all.into_iter().collect();
        let n = labels.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (t, h) in &arcs {
            let ti = labels.binary_search(t).unwrap();
            let hi = labels.binary_search(h).unwrap();
            out_adj[ti].push(hi);
            in_adj[hi].push(ti);
        }
        // `arcs` iterates by (tail, head), so out lists are already sorted.
        for list in &mut in_adj {
            list.sort_unstable();
        }
        Digraph {
            labels,
            out_adj,
            in_adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.labels.iter()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().cloned().collect()
    }

    /// Arcs as (tail, head), sorted by tail then head.
    pub fn arcs(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        self.out_adj.iter().enumerate().flat_map(move |(t, heads)| {
            heads
                .iter()
                .map(move |&h| (&self.labels[t], &self.labels[h]))
        })
    }

    pub fn contains(&self, u: &str) -> bool {
        self.index(u).is_some()
    }

    pub fn has_arc(&self, tail: &str, head: &str) -> bool {
        match (self.index(tail), self.index(head)) {
            (Some(t), Some(h)) => self.out_adj[t].binary_search(&h).is_ok(),
            _ => false,
        }
    }

    pub fn out_degree(&self, u: &str) -> Result<usize> {
        Ok(self.out_adj[self.require(u)?].len())
    }

    pub fn in_degree(&self, u: &str) -> Result<usize> {
        Ok(self.in_adj[self.require(u)?].len())
    }

    pub fn neighbors(&self, u: &str, direction: Direction) -> Result<VertexSet> {
        let i = self.require(u)?;
        Ok(self
            .adjacent(i, direction)
            .iter()
            .map(|&j| self.labels[j].clone())
            .collect())
    }

    /// Every vertex reachable from some member of `set`, members included.
    pub fn reach(&self, set: &VertexSet) -> Result<VertexSet> {
        let start = self.indices_of(set)?;
        Ok(self.set_from_mask(&self.reach_mask(&start, Direction::Out)))
    }

    /// Every vertex from which `u` is reachable, `u` included.
    pub fn shadow(&self, u: &str) -> Result<VertexSet> {
        let i = self.require(u)?;
        Ok(self.set_from_mask(&self.reach_mask(&[i], Direction::In)))
    }

    pub fn converse(&self) -> Digraph {
        Digraph {
            labels: self.labels.clone(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
        }
    }

    pub fn classify(&self) -> DegreeClasses {
        let mut classes = DegreeClasses::default();
        for (i, label) in self.labels.iter().enumerate() {
            let source = self.in_adj[i].is_empty();
            let sink = self.out_adj[i].is_empty();
            if source {
                classes.sources.insert(label.clone());
            }
            if sink {
                classes.sinks.insert(label.clone());
            }
            if source && sink {
                classes.isolates.insert(label.clone());
            }
        }
        classes
    }

    /// Single-pass removal of isolates or sinks; the result is the induced
    /// subdigraph on the survivors.
    pub fn strip(&self, mode: StripMode) -> Digraph {
        let keep: Vec<bool> = (0..self.vertex_count())
            .map(|i| match mode {
                StripMode::Isolates => !(self.in_adj[i].is_empty() && self.out_adj[i].is_empty()),
                StripMode::Sinks => !self.out_adj[i].is_empty(),
            })
            .collect();
        self.induced_by_mask(&keep)
    }

    /// Tails of arcs, i.e. vertices of out-degree at least 1.
    pub fn tails(&self) -> VertexSet {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| !self.out_adj[i].is_empty())
            .map(|(_, l)| l.clone())
            .collect()
    }

    /// Induced subdigraph on `set`. Labels not in the digraph are an error.
    pub fn induced(&self, set: &VertexSet) -> Result<Digraph> {
        let mut keep = vec![false; self.vertex_count()];
        for i in self.indices_of(set)? {
            keep[i] = true;
        }
        Ok(self.induced_by_mask(&keep))
    }

    pub(crate) fn index(&self, u: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(u)).ok()
    }

    pub(crate) fn require(&self, u: &str) -> Result<usize> {
        self.index(u)
            .ok_or_else(|| Error::UnknownVertex(u.to_string()))
    }

    pub(crate) fn label(&self, i: usize) -> &VertexId {
        &self.labels[i]
    }

    pub(crate) fn adjacent(&self, i: usize, direction: Direction) -> &[usize] {
        match direction {
            Direction::Out => &self.out_adj[i],
            Direction::In => &self.in_adj[i],
        }
    }

    pub(crate) fn indices_of(&self, set: &VertexSet) -> Result<Vec<usize>> {
        set.iter().map(|v| self.require(v.as_str())).collect()
    }

    /// Breadth-first closure of `start` along arcs in `direction`.
    pub(crate) fn reach_mask(&self, start: &[usize], direction: Direction) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in start {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in self.adjacent(u, direction) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub(crate) fn set_from_mask(&self, mask: &[bool]) -> VertexSet {
        mask.iter()
            .enumerate()
            .filter(|&(_, &m)| m)
            .map(|(i, _)| self.labels[i].clone())
            .collect()
    }

    fn induced_by_mask(&self, keep: &[bool]) -> Digraph {
        let vertices = self.set_from_mask(keep);
        let arcs = self
            .out_adj
            .iter()
            .enumerate()
            .filter(|&(t, _)| keep[t])
            .flat_map(|(t, heads)| {
                heads
                    .iter()
                    .filter(|&&h| keep[h])
                    .map(move |&h| (self.labels[t].clone(), self.labels[h].clone()))
            })
            .collect::<Vec<_>>();
        Digraph::from_ids(vertices, arcs)
    }
}
