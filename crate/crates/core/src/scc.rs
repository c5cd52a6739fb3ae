//! Strong components, the condensation DAG, condensed vertex sets, initial
//! components, and lifting condensation dipaths back into the digraph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::digraph::{Digraph, Direction, VertexId, VertexSet};
use crate::error::{Error, Result};

/// A strong component, named by its lexicographically least member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentId(VertexId);

impl ComponentId {
    pub fn canonical(&self) -> &VertexId {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        self.0.as_str()
    }
}

impl From<VertexId> for ComponentId {
    fn from(v: VertexId) -> Self {
        ComponentId(v)
    }
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The partition of a digraph's vertices into strong components.
///
/// Component ordinals follow canonical-label order, so ordinal `i` is also
/// vertex `i` of the condensation DAG.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: BTreeMap<VertexId, ComponentId>,
    members: BTreeMap<ComponentId, VertexSet>,
    comp_of: Vec<usize>,
    comp_vertices: Vec<Vec<usize>>,
}

impl Partition {
    pub fn component_of(&self, u: &str) -> Option<&ComponentId> {
        self.assignment.get(u)
    }

    pub fn members(&self, c: &ComponentId) -> Option<&VertexSet> {
        self.members.get(c)
    }

    pub fn components(&self) -> impl Iterator<Item = (&ComponentId, &VertexSet)> + '_ {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.comp_vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comp_vertices.is_empty()
    }

    pub(crate) fn ordinal_of_vertex(&self, i: usize) -> usize {
        self.comp_of[i]
    }

    pub(crate) fn vertices_of(&self, ordinal: usize) -> &[usize] {
        &self.comp_vertices[ordinal]
    }

    pub(crate) fn canonical_index(&self, ordinal: usize) -> usize {
        self.comp_vertices[ordinal][0]
    }
}

/// Strong components by Tarjan's algorithm, run with an explicit stack so
/// long chains do not overflow the call stack.
pub fn strong_components(d: &Digraph) -> Partition {
    let n = d.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            let out = d.adjacent(v, Direction::Out);
            if frame.1 < out.len() {
                let w = out[frame.1];
                frame.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }

    comps.sort_unstable_by_key(|c| c[0]);
    let mut comp_of = vec![0; n];
    let mut assignment = BTreeMap::new();
    let mut members = BTreeMap::new();
    for (ordinal, comp) in comps.iter().enumerate() {
        let id = ComponentId(d.label(comp[0]).clone());
        let mut set = VertexSet::new();
        for &v in comp {
            comp_of[v] = ordinal;
            assignment.insert(d.label(v).clone(), id.clone());
            set.insert(d.label(v).clone());
        }
        members.insert(id, set);
    }
    Partition {
        assignment,
        members,
        comp_of,
        comp_vertices: comps,
    }
}

/// The loop-free condensation DAG together with the partition it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    dag: Digraph,
    partition: Partition,
}

impl Condensation {
    pub fn new(d: &Digraph) -> Self {
        let partition = strong_components(d);
        let ids: Vec<VertexId> = (0..partition.len())
            .map(|c| d.label(partition.canonical_index(c)).clone())
            .collect();
        let mut arcs = BTreeSet::new();
        for t in 0..d.vertex_count() {
            let ct = partition.comp_of[t];
            for &h in d.adjacent(t, Direction::Out) {
                let ch = partition.comp_of[h];
                if ct != ch {
                    arcs.insert((ct, ch));
                }
            }
        }
        let dag = Digraph::from_ids(
            ids.iter().cloned(),
            arcs.into_iter()
                .map(|(a, b)| (ids[a].clone(), ids[b].clone())),
        );
        Condensation { dag, partition }
    }

    pub fn dag(&self) -> &Digraph {
        &self.dag
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub(crate) fn id(&self, ordinal: usize) -> ComponentId {
        ComponentId(self.dag.label(ordinal).clone())
    }

    /// Components meeting `set`.
    pub fn condense_set(&self, set: &VertexSet) -> Result<BTreeSet<ComponentId>> {
        set.iter()
            .map(|v| {
                self.partition
                    .component_of(v.as_str())
                    .cloned()
                    .ok_or_else(|| Error::UnknownVertex(v.to_string()))
            })
            .collect()
    }

    pub(crate) fn initial_ordinals(&self) -> Vec<usize> {
        (0..self.dag.vertex_count())
            .filter(|&c| self.dag.adjacent(c, Direction::In).is_empty())
            .collect()
    }

    /// Components with no entering arcs, i.e. the sources of the DAG.
    pub fn initial_components(&self) -> BTreeSet<ComponentId> {
        self.initial_ordinals()
            .into_iter()
            .map(|c| self.id(c))
            .collect()
    }

    fn ordinal(&self, c: &ComponentId) -> Result<usize> {
        self.dag
            .index(c.as_str())
            .ok_or_else(|| Error::NotADipath(format!("`{c}` is not a strong component")))
    }

    /// Realizes a DAG dipath as a dipath of `d`.
    ///
    /// Consecutive components are joined by their least connecting arc;
    /// inside a component the walk takes the shortest, then lexicographically
    /// least, route from the entry vertex to the exit vertex. A one-component
    /// path lifts to its canonical member.
    pub fn lift_path(&self, d: &Digraph, comp_path: &[ComponentId]) -> Result<Vec<VertexId>> {
        let ords = comp_path
            .iter()
            .map(|c| self.ordinal(c))
            .collect::<Result<Vec<_>>>()?;
        let path = self.lift_ordinals(d, &ords)?;
        Ok(path.into_iter().map(|i| d.label(i).clone()).collect())
    }

    pub(crate) fn lift_ordinals(&self, d: &Digraph, ords: &[usize]) -> Result<Vec<usize>> {
        let Some(&first) = ords.first() else {
            return Err(Error::NotADipath("empty component path".into()));
        };
        for pair in ords.windows(2) {
            if self
                .dag
                .adjacent(pair[0], Direction::Out)
                .binary_search(&pair[1])
                .is_err()
            {
                return Err(Error::NotADipath(format!(
                    "no arc from `{}` to `{}`",
                    self.id(pair[0]),
                    self.id(pair[1])
                )));
            }
        }
        if ords.len() == 1 {
            return Ok(vec![self.partition.canonical_index(first)]);
        }
        let links: Vec<(usize, usize)> = ords
            .windows(2)
            .map(|pair| self.least_connecting_arc(d, pair[0], pair[1]))
            .collect();
        let mut path = vec![links[0].0];
        for (k, &(_, entry)) in links.iter().enumerate() {
            match links.get(k + 1) {
                Some(&(exit, _)) => path.extend(self.intra_path(d, entry, exit)),
                None => path.push(entry),
            }
        }
        Ok(path)
    }

    fn least_connecting_arc(&self, d: &Digraph, from: usize, to: usize) -> (usize, usize) {
        for &u in self.partition.vertices_of(from) {
            for &v in d.adjacent(u, Direction::Out) {
                if self.partition.comp_of[v] == to {
                    return (u, v);
                }
            }
        }
        unreachable!("condensation arc without a connecting arc")
    }

    /// Shortest dipath from `from` to `to` inside their common component,
    /// lexicographically least among the shortest. Includes both endpoints.
    pub(crate) fn intra_path(&self, d: &Digraph, from: usize, to: usize) -> Vec<usize> {
        let comp = self.partition.comp_of[from];
        debug_assert_eq!(comp, self.partition.comp_of[to]);
        let n = d.vertex_count();
        // distances to `to`, searched backwards inside the component
        let mut dist = vec![usize::MAX; n];
        dist[to] = 0;
        let mut queue = VecDeque::from([to]);
        while let Some(u) = queue.pop_front() {
            for &w in d.adjacent(u, Direction::In) {
                if self.partition.comp_of[w] == comp && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            cur = *d
                .adjacent(cur, Direction::Out)
                .iter()
                .find(|&&w| dist[w] != usize::MAX && dist[w] + 1 == dist[cur])
                .expect("vertices of a strong component reach each other");
            path.push(cur);
        }
        path
    }
}

pub fn condensation(d: &Digraph) -> Condensation {
    Condensation::new(d)
}

pub fn condense_set(d: &Digraph, set: &VertexSet) -> Result<BTreeSet<ComponentId>> {
    d.indices_of(set)?;
    condensation(d).condense_set(set)
}

pub fn initial_components(d: &Digraph) -> BTreeSet<ComponentId> {
    condensation(d).initial_components()
}

pub fn lift_path(d: &Digraph, comp_path: &[ComponentId]) -> Result<Vec<VertexId>> {
    condensation(d).lift_path(d, comp_path)
}
