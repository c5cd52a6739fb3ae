//! Finite truncations of five infinite example digraphs (plus the converse of
//! the first), used as fixtures.
//!
//! | name | truncation at `n` |
//! |------|-------------------|
//! | EX8  | `y0..yn`, arcs `y(i+1) -> yi` |
//! | EX8C | converse of EX8 |
//! | EX9  | binary strings of length at most `n`, each string pointing to its one-shorter prefix |
//! | EX10 | `y0..yn`, `z0..zn`, `yi <-> zi`, `y(i+1) -> yi`, `z(i+1) -> zi` |
//! | EX11 | `y0..yn`, `z0..zn`, `y(i+1) -> yi`, `z(i+1) -> yi` |
//! | EX12 | `u` plus, for `1 <= i <= n`, the path `ui_i -> ... -> ui_0 -> u` |
//!
//! The empty binary string is labelled `e`.

use std::fmt;
use std::str::FromStr;

use crate::digraph::{Digraph, VertexId, VertexSet};
use crate::error::{Error, Result};

/// Default bound on the number of vertices a truncation may have.
pub const DEFAULT_CEILING: u128 = 10_000;

/// Label used for the empty binary string in EX9.
pub const EMPTY_STRING_LABEL: &str = "e";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Ex8,
    Ex8C,
    Ex9,
    Ex10,
    Ex11,
    Ex12,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Ex8,
        Family::Ex8C,
        Family::Ex9,
        Family::Ex10,
        Family::Ex11,
        Family::Ex12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ex8 => "EX8",
            Family::Ex8C => "EX8C",
            Family::Ex9 => "EX9",
            Family::Ex10 => "EX10",
            Family::Ex11 => "EX11",
            Family::Ex12 => "EX12",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                format!("unknown family `{s}` (expected one of EX8, EX8C, EX9, EX10, EX11, EX12)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u64,
}

impl FamilySpec {
    pub fn new(family: Family, n: u64) -> Self {
        FamilySpec { family, n }
    }

    /// Vertex count of the truncation, or `None` if it does not fit in u128.
    pub fn vertex_count(&self) -> Option<u128> {
        let n = u128::from(self.n);
        match self.family {
            Family::Ex8 | Family::Ex8C => Some(n + 1),
            Family::Ex10 | Family::Ex11 => Some(2 * (n + 1)),
            Family::Ex9 => 1u128
                .checked_shl(u32::try_from(n + 1).ok()?)
                .filter(|&p| p != 0)
                .map(|p| p - 1),
            Family::Ex12 => Some(1 + n * (n + 3) / 2),
        }
    }

    fn check_ceiling(&self, ceiling: u128) -> Result<()> {
        match self.vertex_count() {
            Some(size) if size <= ceiling => Ok(()),
            size => Err(Error::Capacity {
                what: "family truncation",
                size: size.unwrap_or(u128::MAX),
                cap: ceiling,
            }),
        }
    }
}

fn id(label: String) -> VertexId {
    VertexId::new(label).expect("family labels are valid")
}

fn y(i: u64) -> VertexId {
    id(format!("y{i}"))
}

fn z(i: u64) -> VertexId {
    id(format!("z{i}"))
}

fn u(i: u64, k: u64) -> VertexId {
    id(format!("u{i}_{k}"))
}

fn binary(bits: u64, len: u32) -> VertexId {
    if len == 0 {
        id(EMPTY_STRING_LABEL.to_string())
    } else {
        id(format!("{:0width$b}", bits, width = len as usize))
    }
}

fn descending_rail(n: u64) -> Digraph {
    Digraph::from_ids((0..=n).map(y), (0..n).map(|i| (y(i + 1), y(i))))
}

/// Generates the truncation with the default vertex ceiling.
pub fn generate(spec: FamilySpec) -> Result<Digraph> {
    generate_with_ceiling(spec, DEFAULT_CEILING)
}

pub fn generate_with_ceiling(spec: FamilySpec, ceiling: u128) -> Result<Digraph> {
    spec.check_ceiling(ceiling)?;
    let n = spec.n;
    let d = match spec.family {
        Family::Ex8 => descending_rail(n),
        Family::Ex8C => descending_rail(n).converse(),
        Family::Ex9 => {
            let depth = n as u32;
            let vertices =
                (0..=depth).flat_map(|len| (0..1u64 << len).map(move |b| binary(b, len)));
            let arcs = (1..=depth).flat_map(|len| {
                (0..1u64 << len).map(move |b| (binary(b, len), binary(b >> 1, len - 1)))
            });
            Digraph::from_ids(vertices, arcs)
        }
        Family::Ex10 => {
            let vertices = (0..=n).flat_map(|i| [y(i), z(i)]);
            let arcs = (0..=n)
                .flat_map(|i| [(y(i), z(i)), (z(i), y(i))])
                .chain((0..n).flat_map(|i| [(y(i + 1), y(i)), (z(i + 1), z(i))]));
            Digraph::from_ids(vertices, arcs)
        }
        Family::Ex11 => {
            let vertices = (0..=n).flat_map(|i| [y(i), z(i)]);
            let arcs = (0..n).flat_map(|i| [(y(i + 1), y(i)), (z(i + 1), y(i))]);
            Digraph::from_ids(vertices, arcs)
        }
        Family::Ex12 => {
            let root = id("u".to_string());
            let vertices = std::iter::once(root.clone())
                .chain((1..=n).flat_map(|i| (0..=i).map(move |k| u(i, k))));
            let arcs = (1..=n).flat_map(|i| {
                let root = root.clone();
                std::iter::once((u(i, 0), root)).chain((1..=i).map(move |k| (u(i, k), u(i, k - 1))))
            });
            Digraph::from_ids(vertices, arcs.collect::<Vec<_>>())
        }
    };
    Ok(d)
}

/// The unique point-basis of the truncation, known in closed form.
///
/// EX10 truncations have two point-bases (`{yn}` and `{zn}`), so it is an
/// error to ask for a unique one.
pub fn expected_point_basis(spec: FamilySpec) -> Result<VertexSet> {
    spec.check_ceiling(DEFAULT_CEILING)?;
    let n = spec.n;
    let basis = match spec.family {
        Family::Ex8 => [y(n)].into(),
        Family::Ex8C => [y(0)].into(),
        Family::Ex9 => {
            let len = n as u32;
            (0..1u64 << len).map(|b| binary(b, len)).collect()
        }
        Family::Ex10 => {
            return Err(Error::NonUniqueBasis {
                family: spec.family.name(),
                count: 2,
            })
        }
        Family::Ex11 => std::iter::once(y(n)).chain((0..=n).map(z)).collect(),
        // at n = 0 the truncation is the lone vertex u
        Family::Ex12 if n == 0 => [id("u".to_string())].into(),
        Family::Ex12 => (1..=n).map(|i| u(i, i)).collect(),
    };
    Ok(basis)
}
