#![allow(dead_code)]

use rand::Rng;
use reachset::{vertex_set, Digraph, VertexSet};

pub const LABELS: [&str; 16] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p",
];

pub fn label(i: usize) -> String {
    if i < LABELS.len() {
        LABELS[i].to_string()
    } else {
        format!("v{i:03}")
    }
}

pub fn set(labels: &[&str]) -> VertexSet {
    vertex_set(labels).unwrap()
}

/// Digraph on vertices `0..n` with the given index arcs.
pub fn from_indices(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    let vertices: Vec<String> = (0..n).map(label).collect();
    let arcs: Vec<(String, String)> = arcs.iter().map(|&(t, h)| (label(t), label(h))).collect();
    Digraph::build(vertices, arcs).unwrap()
}

/// Every labeled digraph on `n` vertices; `loops` decides whether loops
/// are among the candidate arcs.
pub fn all_digraphs(n: usize, loops: bool) -> impl Iterator<Item = Digraph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|t| (0..n).map(move |h| (t, h)))
        .filter(|&(t, h)| loops || t != h)
        .collect();
    let m = slots.len();
    (0u64..1 << m).map(move |mask| {
        let arcs: Vec<(usize, usize)> = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| slots[i])
            .collect();
        from_indices(n, &arcs)
    })
}

/// A random digraph on at most `max_n` vertices with a random arc density.
pub fn random_digraph<R: Rng>(rng: &mut R, max_n: usize) -> Digraph {
    let n = rng.gen_range(0..=max_n);
    let density: f64 = rng.gen_range(0.0..0.6);
    let loop_rate: f64 = rng.gen_range(0.0..0.3);
    let mut arcs = Vec::new();
    for t in 0..n {
        for h in 0..n {
            let p = if t == h { loop_rate } else { density };
            if rng.gen_bool(p) {
                arcs.push((t, h));
            }
        }
    }
    from_indices(n, &arcs)
}

pub fn random_subset<R: Rng>(rng: &mut R, d: &Digraph) -> VertexSet {
    let keep: f64 = rng.gen_range(0.0..1.0);
    d.vertices()
        .filter(|_| rng.gen_bool(keep))
        .cloned()
        .collect()
}

/// Reflexive-transitive closure by Floyd-Warshall, indexed by label order.
pub fn closure_matrix(d: &Digraph) -> Vec<Vec<bool>> {
    let labels: Vec<_> = d.vertices().cloned().collect();
    let n = labels.len();
    let mut m = vec![vec![false; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    for (t, h) in d.arcs() {
        let ti = labels.binary_search(t).unwrap();
        let hi = labels.binary_search(h).unwrap();
        m[ti][hi] = true;
    }
    for k in 0..n {
        let via = m[k].clone();
        for row in m.iter_mut() {
            if row[k] {
                for (cell, &x) in row.iter_mut().zip(&via) {
                    *cell |= x;
                }
            }
        }
    }
    m
}

pub fn strongly_connected(d: &Digraph) -> bool {
    closure_matrix(d).iter().all(|row| row.iter().all(|&x| x))
}
