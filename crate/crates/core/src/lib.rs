//! Point-reaching and arc-reaching vertex sets of finite digraphs.
//!
//! A vertex set is *point-reaching* when every vertex can be reached from it
//! by a directed walk, and *arc-reaching* when every arc tail can. The
//! inclusion-minimal such sets are point-bases and arc-bases; in a finite
//! digraph they are exactly the selections of one vertex from each initial
//! strong component (skipping isolated vertices for arc-bases).
//!
//! - [`digraph`]: the digraph type and reach, shadow, strip, tails.
//! - [`scc`]: strong components and the condensation DAG.
//! - [`bases`]: reaching-set checks, bases, minimization, related predicates.
//! - [`oracle`]: exhaustive minimal-reaching-set enumeration for small inputs.
//! - [`families`]: finite truncations of infinite example digraphs.
//! - [`del`] and [`cli`]: the edge-list format and command-line front end.

pub mod bases;
pub mod cli;
pub mod del;
pub mod digraph;
pub mod error;
pub mod families;
pub mod oracle;
pub mod scc;

pub use bases::{BasisKind, ReachingKind, TraceResult};
pub use digraph::{vertex_set, DegreeClasses, Digraph, Direction, StripMode, VertexId, VertexSet};
pub use error::{Error, Result};
pub use scc::{ComponentId, Condensation, Partition};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::digraph::{vertex_set, Digraph, VertexSet};

    pub fn set(labels: &[&str]) -> VertexSet {
        vertex_set(labels).unwrap()
    }

    /// a -> b -> c
    pub fn chain() -> Digraph {
        Digraph::build(Vec::<&str>::new(), [("a", "b"), ("b", "c")]).unwrap()
    }

    /// a <-> b, b -> c
    pub fn cyc() -> Digraph {
        Digraph::build(Vec::<&str>::new(), [("a", "b"), ("b", "a"), ("b", "c")]).unwrap()
    }

    pub fn two_cycle() -> Digraph {
        Digraph::build(Vec::<&str>::new(), [("a", "b"), ("b", "a")]).unwrap()
    }

    /// a -> b -> c -> a
    pub fn triangle() -> Digraph {
        Digraph::build(Vec::<&str>::new(), [("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }
}
