//! Point-, arc- and target-reaching sets and their minimal forms.
//!
//! A set is point-reaching when its reach covers every vertex, arc-reaching
//! when it covers every arc tail, and T-reaching when it covers a given
//! target set. The minimal point- and arc-reaching sets (the bases) of a
//! finite digraph pick exactly one vertex from each initial strong component;
//! for arc-bases, initial components that are isolates are skipped.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::digraph::{Digraph, Direction, StripMode, VertexId, VertexSet};
use crate::error::{Error, Result};
use crate::scc::{ComponentId, Condensation};

/// The two kinds of reaching set that have a basis characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Point,
    Arc,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Point => "point",
            BasisKind::Arc => "arc",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "point" => Ok(BasisKind::Point),
            "arc" => Ok(BasisKind::Arc),
            other => Err(format!("unknown kind `{other}` (expected point or arc)")),
        }
    }
}

/// What a candidate set has to reach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReachingKind {
    /// Every vertex.
    Point,
    /// Every arc tail.
    Arc,
    /// The given target vertices.
    Target(VertexSet),
}

impl ReachingKind {
    pub fn name(&self) -> &'static str {
        match self {
            ReachingKind::Point => "point",
            ReachingKind::Arc => "arc",
            ReachingKind::Target(_) => "target",
        }
    }
}

impl From<BasisKind> for ReachingKind {
    fn from(kind: BasisKind) -> Self {
        match kind {
            BasisKind::Point => ReachingKind::Point,
            BasisKind::Arc => ReachingKind::Arc,
        }
    }
}

/// The targets of `kind` that `set` fails to reach.
pub fn unreached(d: &Digraph, kind: &ReachingKind, set: &VertexSet) -> Result<VertexSet> {
    let start = d.indices_of(set)?;
    let targets = match kind {
        ReachingKind::Point => d.vertex_set(),
        ReachingKind::Arc => d.tails(),
        ReachingKind::Target(t) => {
            d.indices_of(t)?;
            t.clone()
        }
    };
    let reached = d.reach_mask(&start, Direction::Out);
    Ok(targets
        .into_iter()
        .filter(|v| !reached[d.index(v.as_str()).unwrap()])
        .collect())
}

/// Definitional test: does the reach of `set` cover the targets of `kind`?
pub fn is_reaching(d: &Digraph, kind: &ReachingKind, set: &VertexSet) -> Result<bool> {
    Ok(unreached(d, kind, set)?.is_empty())
}

/// Structural test for finite digraphs. A set is point-reaching iff it meets
/// every initial strong component; arc-reaching iff its non-sink part meets
/// every initial strong component of the sink-stripped digraph.
pub fn is_reaching_by_characterization(
    d: &Digraph,
    kind: BasisKind,
    set: &VertexSet,
) -> Result<bool> {
    d.indices_of(set)?;
    let (graph, set) = match kind {
        BasisKind::Point => (d.clone(), set.clone()),
        BasisKind::Arc => {
            let minus = d.strip(StripMode::Sinks);
            let kept = set
                .iter()
                .filter(|v| minus.contains(v.as_str()))
                .cloned()
                .collect();
            (minus, kept)
        }
    };
    let cond = Condensation::new(&graph);
    let hit = cond.condense_set(&set)?;
    Ok(cond.initial_components().is_subset(&hit))
}

/// Ordinals of the initial components a basis of `kind` must meet.
fn relevant_initial(d: &Digraph, cond: &Condensation, kind: BasisKind) -> Vec<usize> {
    let partition = cond.partition();
    cond.initial_ordinals()
        .into_iter()
        .filter(|&c| match kind {
            BasisKind::Point => true,
            BasisKind::Arc => {
                let vs = partition.vertices_of(c);
                // an initial singleton without out-arcs is an isolate
                !(vs.len() == 1 && d.adjacent(vs[0], Direction::Out).is_empty())
            }
        })
        .collect()
}

/// The basis made of the least member of each relevant initial component.
pub fn basis(d: &Digraph, kind: BasisKind) -> VertexSet {
    let cond = Condensation::new(d);
    relevant_initial(d, &cond, kind)
        .into_iter()
        .map(|c| {
            let v = cond.partition().canonical_index(c);
            if kind == BasisKind::Arc {
                assert!(
                    !d.adjacent(v, Direction::Out).is_empty(),
                    "arc-basis member must not be a sink"
                );
            }
            d.label(v).clone()
        })
        .collect()
}

/// Every basis of `kind`, one per choice of a vertex from each relevant
/// initial component. Bases are produced in lexicographic order.
pub fn enumerate_bases(d: &Digraph, kind: BasisKind) -> Bases {
    let cond = Condensation::new(d);
    let comps = relevant_initial(d, &cond, kind);
    let mut universe = Vec::new();
    let mut comp_max = Vec::with_capacity(comps.len());
    let mut total = BigUint::from(1u8);
    for (slot, &c) in comps.iter().enumerate() {
        let vs = cond.partition().vertices_of(c);
        total *= vs.len();
        comp_max.push(*vs.last().unwrap());
        universe.extend(vs.iter().map(|&v| (v, slot)));
    }
    universe.sort_unstable();
    let labels = universe.iter().map(|&(v, _)| d.label(v).clone()).collect();
    Bases {
        total,
        labels,
        assigned: vec![false; comp_max.len()],
        universe,
        comp_max,
        chosen: Vec::new(),
        started: false,
        done: false,
    }
}

/// Lexicographic stream of bases; see [`enumerate_bases`].
///
/// Bases are generated as increasing vertex sequences. A vertex is a valid
/// next pick when its component is still open and every other open component
/// has a member above it, so the search never dead-ends.
#[derive(Debug, Clone)]
pub struct Bases {
    total: BigUint,
    labels: Vec<VertexId>,
    universe: Vec<(usize, usize)>,
    comp_max: Vec<usize>,
    assigned: Vec<bool>,
    chosen: Vec<usize>,
    started: bool,
    done: bool,
}

impl Bases {
    /// Number of bases: the product of the relevant component sizes.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    fn candidate(&self, start: usize) -> Option<usize> {
        let (mut m1, mut s1, mut m2) = (usize::MAX, usize::MAX, usize::MAX);
        for (slot, &max) in self.comp_max.iter().enumerate() {
            if self.assigned[slot] {
                continue;
            }
            if max < m1 {
                m2 = m1;
                m1 = max;
                s1 = slot;
            } else if max < m2 {
                m2 = max;
            }
        }
        for pos in start..self.universe.len() {
            let (x, slot) = self.universe[pos];
            if x >= m2 {
                break;
            }
            if self.assigned[slot] {
                continue;
            }
            let bound = if slot == s1 { m2 } else { m1 };
            if x < bound {
                return Some(pos);
            }
        }
        None
    }

    fn advance(&mut self, mut start: usize) -> bool {
        loop {
            if let Some(pos) = self.candidate(start) {
                self.chosen.push(pos);
                self.assigned[self.universe[pos].1] = true;
                if self.chosen.len() == self.comp_max.len() {
                    return true;
                }
                start = pos + 1;
            } else {
                let Some(pos) = self.chosen.pop() else {
                    return false;
                };
                self.assigned[self.universe[pos].1] = false;
                start = pos + 1;
            }
        }
    }

    fn current(&self) -> VertexSet {
        self.chosen
            .iter()
            .map(|&p| self.labels[p].clone())
            .collect()
    }
}

impl Iterator for Bases {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.comp_max.is_empty() || self.advance(0)
        } else if let Some(pos) = self.chosen.pop() {
            self.assigned[self.universe[pos].1] = false;
            self.advance(pos + 1)
        } else {
            false
        };
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Shrinks a reaching set to a basis it contains: the least member of the
/// set in each relevant initial component.
pub fn minimize_reaching(d: &Digraph, kind: BasisKind, set: &VertexSet) -> Result<VertexSet> {
    if let Some(v) = unreached(d, &kind.into(), set)?.into_iter().next() {
        return Err(Error::NotReaching {
            kind: kind.name(),
            unreached: v.to_string(),
        });
    }
    let cond = Condensation::new(d);
    Ok(relevant_initial(d, &cond, kind)
        .into_iter()
        .map(|c| {
            let v = cond
                .partition()
                .vertices_of(c)
                .iter()
                .map(|&v| d.label(v))
                .find(|v| set.contains(*v))
                .expect("a reaching set meets every relevant initial component");
            v.clone()
        })
        .collect())
}

/// Whether the set of sources is point-reaching.
pub fn sources_point_reaching(d: &Digraph) -> bool {
    let sources = d.classify().sources;
    is_reaching(d, &ReachingKind::Point, &sources).expect("sources are vertices")
}

/// Definitional basis test: reaching, and no single removal stays reaching.
pub fn is_basis(d: &Digraph, kind: &ReachingKind, set: &VertexSet) -> Result<bool> {
    if !is_reaching(d, kind, set)? {
        return Ok(false);
    }
    for v in set {
        let mut smaller = set.clone();
        smaller.remove(v);
        if is_reaching(d, kind, &smaller)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Given a point-basis `basis`, a point-reaching set disjoint from it, or
/// `None` when some initial component has a single vertex. That vertex lies
/// in every point-reaching set, so no disjoint one exists. Without loops the
/// single-vertex initial components are exactly the sources; a looped vertex
/// with no other in-arcs is one too.
pub fn complement_reaching_witness(d: &Digraph, basis: &VertexSet) -> Result<Option<VertexSet>> {
    if !is_basis(d, &ReachingKind::Point, basis)? {
        let names: Vec<&str> = basis.iter().map(VertexId::as_str).collect();
        return Err(Error::NotABasis(format!("{{{}}}", names.join(", "))));
    }
    let cond = Condensation::new(d);
    let initial = cond.initial_ordinals();
    if initial
        .iter()
        .any(|&c| cond.partition().vertices_of(c).len() == 1)
    {
        return Ok(None);
    }
    let witness = initial
        .into_iter()
        .map(|c| {
            cond.partition()
                .vertices_of(c)
                .iter()
                .map(|&v| d.label(v))
                .find(|v| !basis.contains(*v))
                .expect("initial components here have order at least 2")
                .clone()
        })
        .collect();
    Ok(Some(witness))
}

/// Whether every one-vertex subset is an arc-basis: each singleton is
/// arc-reaching and the empty set is not.
pub fn all_singletons_arc_bases(d: &Digraph) -> bool {
    if d.arc_count() == 0 {
        return false;
    }
    let tails: Vec<usize> = d
        .tails()
        .iter()
        .map(|t| d.index(t.as_str()).unwrap())
        .collect();
    (0..d.vertex_count()).all(|v| {
        let reached = d.reach_mask(&[v], Direction::Out);
        tails.iter().all(|&t| reached[t])
    })
}

/// A backward trace from a vertex to an initial strong component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceResult {
    pub initial: ComponentId,
    pub comp_path: Vec<ComponentId>,
    pub vertex_path: Vec<VertexId>,
}

/// Finds an initial component from which `v` is reachable, a condensation
/// dipath from it to `v`'s component, and a dipath of `d` realizing it that
/// ends at `v`.
///
/// The search runs breadth-first backwards through the condensation,
/// visiting predecessors in label order, and stops at the first initial
/// component it dequeues; the component path is therefore a shortest one.
pub fn trace_back(d: &Digraph, v: &str) -> Result<TraceResult> {
    let target = d.require(v)?;
    let cond = Condensation::new(d);
    let dag = cond.dag();
    let end = cond.partition().ordinal_of_vertex(target);

    let mut parent = vec![usize::MAX; dag.vertex_count()];
    parent[end] = end;
    let mut queue = VecDeque::from([end]);
    let mut start = None;
    while let Some(c) = queue.pop_front() {
        let preds = dag.adjacent(c, Direction::In);
        if preds.is_empty() {
            start = Some(c);
            break;
        }
        for &p in preds {
            if parent[p] == usize::MAX {
                parent[p] = c;
                queue.push_back(p);
            }
        }
    }
    let start = start.expect("a finite DAG has a source above every vertex");

    let mut ords = vec![start];
    while *ords.last().unwrap() != end {
        ords.push(parent[*ords.last().unwrap()]);
    }
    let mut path = cond.lift_ordinals(d, &ords)?;
    let last = *path.last().unwrap();
    path.extend(cond.intra_path(d, last, target).into_iter().skip(1));

    Ok(TraceResult {
        initial: cond.id(start),
        comp_path: ords.iter().map(|&c| cond.id(c)).collect(),
        vertex_path: path.into_iter().map(|i| d.label(i).clone()).collect(),
    })
}

/// Number of initial components and of non-isolate initial components.
pub fn initial_component_counts(d: &Digraph) -> (usize, usize) {
    let cond = Condensation::new(d);
    (
        relevant_initial(d, &cond, BasisKind::Point).len(),
        relevant_initial(d, &cond, BasisKind::Arc).len(),
    )
}

/// Convenience: collect a [`Bases`] stream into a set.
pub fn all_bases(d: &Digraph, kind: BasisKind) -> BTreeSet<VertexSet> {
    enumerate_bases(d, kind).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{chain, cyc, set, triangle, two_cycle};

    fn lone() -> Digraph {
        Digraph::build(["v"], Vec::<(&str, &str)>::new()).unwrap()
    }

    #[test]
    fn is_reaching_examples() {
        assert!(is_reaching(&chain(), &ReachingKind::Point, &set(&["a"])).unwrap());
        assert!(!is_reaching(&chain(), &ReachingKind::Point, &set(&["b"])).unwrap());
        let no_arcs = Digraph::build(["x", "y"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(is_reaching(&no_arcs, &ReachingKind::Arc, &set(&[])).unwrap());
    }

    #[test]
    fn is_reaching_target() {
        let d = chain();
        let t = ReachingKind::Target(set(&["c"]));
        assert!(is_reaching(&d, &t, &set(&["b"])).unwrap());
        assert!(!is_reaching(&d, &ReachingKind::Target(set(&["a"])), &set(&["b"])).unwrap());
        assert_eq!(
            is_reaching(&d, &ReachingKind::Target(set(&["q"])), &set(&[])),
            Err(Error::UnknownVertex("q".into()))
        );
        assert_eq!(
            is_reaching(&d, &ReachingKind::Point, &set(&["q"])),
            Err(Error::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn characterization_examples() {
        assert!(is_reaching_by_characterization(&cyc(), BasisKind::Point, &set(&["b"])).unwrap());
        assert!(!is_reaching_by_characterization(&cyc(), BasisKind::Point, &set(&["c"])).unwrap());
        assert!(is_reaching_by_characterization(&chain(), BasisKind::Arc, &set(&["a"])).unwrap());
        assert!(
            !is_reaching_by_characterization(&chain(), BasisKind::Arc, &set(&["b", "c"])).unwrap()
        );
    }

    #[test]
    fn basis_examples() {
        assert_eq!(basis(&chain(), BasisKind::Point), set(&["a"]));
        assert_eq!(basis(&lone(), BasisKind::Point), set(&["v"]));
        assert_eq!(basis(&lone(), BasisKind::Arc), set(&[]));
        assert_eq!(basis(&cyc(), BasisKind::Point), set(&["a"]));
    }

    #[test]
    fn looped_vertex_is_an_arc_basis() {
        let d = Digraph::build(["v"], [("v", "v")]).unwrap();
        assert_eq!(basis(&d, BasisKind::Arc), set(&["v"]));
    }

    #[test]
    fn enumerate_examples() {
        let b = enumerate_bases(&cyc(), BasisKind::Point);
        assert_eq!(b.total(), &BigUint::from(2u8));
        assert_eq!(b.collect::<Vec<_>>(), vec![set(&["a"]), set(&["b"])]);

        let b = enumerate_bases(&triangle(), BasisKind::Point);
        assert_eq!(b.total(), &BigUint::from(3u8));
        assert_eq!(
            b.collect::<Vec<_>>(),
            vec![set(&["a"]), set(&["b"]), set(&["c"])]
        );

        let b = enumerate_bases(&Digraph::empty(), BasisKind::Point);
        assert_eq!(b.total(), &BigUint::from(1u8));
        assert_eq!(b.collect::<Vec<_>>(), vec![set(&[])]);
    }

    #[test]
    fn enumeration_is_lexicographic_across_interleaved_components() {
        // components {a, d} and {b, c}, both initial
        let d = Digraph::build(
            Vec::<&str>::new(),
            [("a", "d"), ("d", "a"), ("b", "c"), ("c", "b")],
        )
        .unwrap();
        let got: Vec<_> = enumerate_bases(&d, BasisKind::Point).collect();
        let want = vec![
            set(&["a", "b"]),
            set(&["a", "c"]),
            set(&["b", "d"]),
            set(&["c", "d"]),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn minimize_examples() {
        assert_eq!(
            minimize_reaching(&cyc(), BasisKind::Point, &set(&["b", "c"])).unwrap(),
            set(&["b"])
        );
        assert_eq!(
            minimize_reaching(&chain(), BasisKind::Arc, &set(&["a", "b", "c"])).unwrap(),
            set(&["a"])
        );
        for d in [chain(), cyc(), triangle(), Digraph::empty()] {
            let b = basis(&d, BasisKind::Point);
            assert_eq!(minimize_reaching(&d, BasisKind::Point, &b).unwrap(), b);
        }
    }

    #[test]
    fn minimize_rejects_non_reaching() {
        assert_eq!(
            minimize_reaching(&chain(), BasisKind::Point, &set(&["b"])),
            Err(Error::NotReaching {
                kind: "point",
                unreached: "a".into()
            })
        );
    }

    #[test]
    fn sources_point_reaching_examples() {
        assert!(sources_point_reaching(&chain()));
        assert!(!sources_point_reaching(&cyc()));
        assert!(sources_point_reaching(&Digraph::empty()));
    }

    #[test]
    fn complement_witness_examples() {
        assert_eq!(
            complement_reaching_witness(&cyc(), &set(&["a"])).unwrap(),
            Some(set(&["b"]))
        );
        assert_eq!(
            complement_reaching_witness(&chain(), &set(&["a"])).unwrap(),
            None
        );
        assert_eq!(
            complement_reaching_witness(&two_cycle(), &set(&["a"])).unwrap(),
            Some(set(&["b"]))
        );
        assert!(matches!(
            complement_reaching_witness(&cyc(), &set(&["a", "b"])),
            Err(Error::NotABasis(_))
        ));
        assert!(matches!(
            complement_reaching_witness(&cyc(), &set(&["c"])),
            Err(Error::NotABasis(_))
        ));
    }

    #[test]
    fn complement_witness_absent_for_looped_initial_vertex() {
        // no sources, but {v} is an initial component of order 1
        let d = Digraph::build(
            Vec::<&str>::new(),
            [("v", "v"), ("v", "w"), ("w", "x"), ("x", "w")],
        )
        .unwrap();
        assert!(d.classify().sources.is_empty());
        assert_eq!(complement_reaching_witness(&d, &set(&["v"])).unwrap(), None);
    }

    #[test]
    fn singletons_examples() {
        assert!(all_singletons_arc_bases(&triangle()));
        assert!(!all_singletons_arc_bases(&chain()));
        let two = Digraph::build(
            Vec::<&str>::new(),
            [("a", "b"), ("b", "a"), ("c", "d"), ("d", "c")],
        )
        .unwrap();
        assert!(!all_singletons_arc_bases(&two));
        assert!(!all_singletons_arc_bases(&Digraph::empty()));
        assert!(!all_singletons_arc_bases(&lone()));
    }

    #[test]
    fn trace_back_examples() {
        let t = trace_back(&cyc(), "c").unwrap();
        assert_eq!(t.initial.as_str(), "a");
        let comps: Vec<_> = t.comp_path.iter().map(ComponentId::as_str).collect();
        assert_eq!(comps, ["a", "c"]);
        let path: Vec<_> = t.vertex_path.iter().map(VertexId::as_str).collect();
        assert_eq!(path, ["b", "c"]);

        let t = trace_back(&chain(), "a").unwrap();
        assert_eq!(t.initial.as_str(), "a");
        assert_eq!(t.comp_path.len(), 1);
        let path: Vec<_> = t.vertex_path.iter().map(VertexId::as_str).collect();
        assert_eq!(path, ["a"]);

        let t = trace_back(&chain(), "c").unwrap();
        let path: Vec<_> = t.vertex_path.iter().map(VertexId::as_str).collect();
        assert_eq!(path, ["a", "b", "c"]);

        assert_eq!(
            trace_back(&chain(), "z"),
            Err(Error::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn trace_back_ends_inside_initial_component() {
        let t = trace_back(&cyc(), "b").unwrap();
        let path: Vec<_> = t.vertex_path.iter().map(VertexId::as_str).collect();
        assert_eq!(path, ["a", "b"]);
    }
}
