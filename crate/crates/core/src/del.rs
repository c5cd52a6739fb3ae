//! DEL, a line-oriented digraph edge list.
//!
//! ```text
//! # comment to end of line
//! node x        # declares a vertex
//! a b           # declares the arc a -> b (and both endpoints)
//! ```
//!
//! Blank lines are ignored. Labels follow [`VertexId`] rules.

use crate::digraph::{Digraph, VertexId};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Digraph> {
    let mut vertices = Vec::new();
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let label = |s: &str| {
            VertexId::new(s).map_err(|_| Error::Parse {
                line,
                message: format!("invalid vertex label {s:?}"),
            })
        };
        match tokens.as_slice() {
            [] => {}
            ["node", v] => vertices.push(label(v)?),
            ["node", ..] => {
                return Err(Error::Parse {
                    line,
                    message: "expected `node <label>`".into(),
                })
            }
            [t, h] => arcs.push((label(t)?, label(h)?)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `<tail> <head>`, found {} tokens", tokens.len()),
                })
            }
        }
    }
    Ok(Digraph::from_ids(vertices, arcs))
}

/// Renders `d` as DEL: `node` lines for vertices on no arc, then one line per
/// arc, both in label order.
pub fn emit(d: &Digraph) -> String {
    let mut out = String::new();
    for v in d.vertices() {
        if d.out_degree(v.as_str()).unwrap() == 0 && d.in_degree(v.as_str()).unwrap() == 0 {
            out.push_str("node ");
            out.push_str(v.as_str());
            out.push('\n');
        }
    }
    for (t, h) in d.arcs() {
        out.push_str(t.as_str());
        out.push(' ');
        out.push_str(h.as_str());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{chain, cyc};

    #[test]
    fn parses_comments_blanks_and_nodes() {
        let text = "# chain\n\na b   # first\n  b\tc\nnode z\n";
        let d = parse(text).unwrap();
        assert_eq!(d, Digraph::build(["z"], [("a", "b"), ("b", "c")]).unwrap());
    }

    #[test]
    fn emit_examples() {
        assert_eq!(emit(&chain()), "a b\nb c\n");
        assert_eq!(emit(&cyc()), "a b\nb a\nb c\n");
        let d = Digraph::build(["q", "v"], [("v", "v")]).unwrap();
        assert_eq!(emit(&d), "node q\nv v\n");
        assert_eq!(emit(&Digraph::empty()), "");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse("a b\nnode\n"),
            Err(Error::Parse {
                line: 2,
                message: "expected `node <label>`".into()
            })
        );
        assert!(matches!(
            parse("a b c\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("\n\nx\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse("a node\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse("node a b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn node_redeclaration_is_harmless() {
        let d = parse("node a\nnode a\na b\n").unwrap();
        assert_eq!(d.vertex_count(), 2);
    }
}
