//! Brute-force ground truth for small digraphs.
//!
//! Reachability here is computed without the graph-search code in
//! [`crate::digraph`]: enumeration uses a bit-matrix closure built by repeated
//! squaring, and the single-set check uses arc relaxation to a fixpoint.

use crate::digraph::{Digraph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Largest digraph the enumeration accepts (2^16 candidate subsets).
pub const MAX_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Inclusion-minimal T-reaching sets, in lexicographic order.
    pub minimal_sets: Vec<VertexSet>,
    pub universe_size: usize,
}

/// Bitmask rows: bit `j` of `rows[i]` is set when `j` is reachable from `i`.
fn closure(labels: &[&VertexId], d: &Digraph) -> Vec<u32> {
    let n = labels.len();
    let pos = |v: &VertexId| labels.binary_search(&v).unwrap();
    let mut rows: Vec<u32> = (0..n).map(|i| 1u32 << i).collect();
    for (t, h) in d.arcs() {
        rows[pos(t)] |= 1 << pos(h);
    }
    // R <- R * R until stable; paths of length up to 2^k after k rounds
    loop {
        let next: Vec<u32> = rows
            .iter()
            .map(|&row| {
                (0..n)
                    .filter(|&j| row & (1 << j) != 0)
                    .fold(row, |acc, j| acc | rows[j])
            })
            .collect();
        if next == rows {
            return rows;
        }
        rows = next;
    }
}

fn mask_of(labels: &[&VertexId], set: &VertexSet) -> Result<u32> {
    set.iter().try_fold(0u32, |acc, v| {
        labels
            .binary_search(&v)
            .map(|i| acc | (1 << i))
            .map_err(|_| Error::UnknownVertex(v.to_string()))
    })
}

/// Every inclusion-minimal set S with `targets` ⊆ reach(S), by exhaustive
/// enumeration of all vertex subsets.
pub fn minimal_reaching_sets(d: &Digraph, targets: &VertexSet, cap: usize) -> Result<OracleResult> {
    let n = d.vertex_count();
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(Error::Capacity {
            what: "oracle universe",
            size: n as u128,
            cap: cap as u128,
        });
    }
    let labels: Vec<&VertexId> = d.vertices().collect();
    let target = mask_of(&labels, targets)?;
    let rows = closure(&labels, d);

    let mut reaching: Vec<u32> = (0u32..1 << n)
        .filter(|&s| {
            let reached = (0..n)
                .filter(|&i| s & (1 << i) != 0)
                .fold(0, |acc, i| acc | rows[i]);
            reached & target == target
        })
        .collect();
    reaching.sort_by_key(|s| s.count_ones());

    let mut minimal: Vec<u32> = Vec::new();
    for s in reaching {
        if !minimal.iter().any(|&m| m & !s == 0) {
            minimal.push(s);
        }
    }
    let mut minimal_sets: Vec<VertexSet> = minimal
        .into_iter()
        .map(|m| {
            (0..n)
                .filter(|&i| m & (1 << i) != 0)
                .map(|i| labels[i].clone())
                .collect()
        })
        .collect();
    minimal_sets.sort();
    Ok(OracleResult {
        minimal_sets,
        universe_size: n,
    })
}

/// Reach by relaxing every arc until nothing changes.
fn fixpoint_reach(d: &Digraph, set: &VertexSet) -> VertexSet {
    let mut reached = set.clone();
    loop {
        let before = reached.len();
        for (t, h) in d.arcs() {
            if reached.contains(t) && !reached.contains(h) {
                reached.insert(h.clone());
            }
        }
        if reached.len() == before {
            return reached;
        }
    }
}

fn check_subset(d: &Digraph, set: &VertexSet) -> Result<()> {
    match set.iter().find(|v| !d.contains(v.as_str())) {
        Some(v) => Err(Error::UnknownVertex(v.to_string())),
        None => Ok(()),
    }
}

/// Whether `set` is T-reaching and no single-element removal is. Reaching
/// sets are closed under supersets, so this is inclusion-minimality.
pub fn is_inclusion_minimal(d: &Digraph, targets: &VertexSet, set: &VertexSet) -> Result<bool> {
    check_subset(d, targets)?;
    check_subset(d, set)?;
    let reaches = |s: &VertexSet| targets.is_subset(&fixpoint_reach(d, s));
    if !reaches(set) {
        return Ok(false);
    }
    Ok(set.iter().all(|v| {
        let mut smaller = set.clone();
        smaller.remove(v);
        !reaches(&smaller)
    }))
}
