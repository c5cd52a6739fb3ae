//! Command-line front end.
//!
//! Every verb reads a DEL digraph (from `--input` or standard input), runs
//! one analysis and prints a JSON document with sorted keys, or a plain-text
//! rendering of the same document with `--plain`. `condense` and `example`
//! print DEL instead.
//!
//! Exit codes: 0 success, 1 a `check` verdict of false, 2 usage error,
//! 3 parse error, 4 semantic error.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Number, Value};

use crate::bases::{self, BasisKind, ReachingKind};
use crate::del;
use crate::digraph::{Digraph, VertexId, VertexSet};
use crate::error::Error;
use crate::families::{self, Family, FamilySpec, DEFAULT_CEILING};
use crate::oracle;
use crate::scc::Condensation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_SEMANTIC: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "reachset",
    version,
    about = "Point- and arc-reaching sets and bases of digraphs"
)]
struct Cli {
    /// Read the digraph from this file instead of standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Print plain text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Point,
    Arc,
    Target,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Vertex and arc counts, sources, sinks and isolates.
    Info,
    /// Strong components.
    Scc,
    /// The condensation DAG, as DEL.
    Condense,
    /// The least point-basis.
    PointBasis,
    /// The least arc-basis.
    ArcBasis,
    /// Count or list every basis of a kind.
    Bases {
        #[arg(long)]
        kind: BasisKind,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Whether a set is point-, arc- or target-reaching.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[arg(long, default_value = "", value_name = "A,B,...")]
        set: String,
        #[arg(long, value_name = "T1,T2,...")]
        targets: Option<String>,
    },
    /// Shrink a reaching set to a basis inside it.
    Minimize {
        #[arg(long)]
        kind: BasisKind,
        #[arg(long, default_value = "", value_name = "A,B,...")]
        set: String,
    },
    /// A point-reaching set disjoint from a given point-basis.
    WitnessComplement {
        #[arg(long, default_value = "", value_name = "A,B,...")]
        set: String,
    },
    /// Whether every singleton is an arc-basis.
    Singletons,
    /// Trace a vertex back to an initial strong component.
    TraceBack {
        #[arg(long)]
        vertex: String,
    },
    /// Brute-force minimal reaching sets (at most 16 vertices).
    Oracle {
        /// Targets to reach; defaults to every vertex.
        #[arg(long, value_name = "T1,T2,...")]
        targets: Option<String>,
    },
    /// Emit a truncated example family as DEL.
    Example {
        #[arg(long)]
        name: Family,
        #[arg(long)]
        n: u64,
        /// Maximum number of vertices in the truncation.
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u128,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn error_outcome(err: Error) -> Outcome {
    let code = match err {
        Error::Parse { .. } => EXIT_PARSE,
        _ => EXIT_SEMANTIC,
    };
    Outcome::fail(code, err)
}

enum Output {
    Report { doc: Value, code: i32 },
    Del(String),
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };

    let output = if let Verb::Example { name, n, ceiling } = cli.verb {
        families::generate_with_ceiling(FamilySpec::new(name, n), ceiling)
            .map(|d| Output::Del(format!("# {name} n={n}\n{}", del::emit(&d))))
    } else {
        let text = match read_input(&cli.input, stdin) {
            Ok(text) => text,
            Err(message) => return Outcome::fail(EXIT_USAGE, message),
        };
        let d = match del::parse(&text) {
            Ok(d) => d,
            Err(e) => return error_outcome(e),
        };
        if let Err(message) = check_usage(&cli.verb) {
            return Outcome::fail(EXIT_USAGE, message);
        }
        execute(&cli.verb, &d)
    };

    match output {
        Ok(Output::Del(text)) => Outcome::ok(text),
        Ok(Output::Report { doc, code }) => {
            let stdout = if cli.plain {
                render_plain(&doc)
            } else {
                let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
                s.push('\n');
                s
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => error_outcome(e),
    }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, String> {
    match path {
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
        }
        None => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            Ok(buf)
        }
    }
}

fn check_usage(verb: &Verb) -> Result<(), String> {
    if let Verb::Check { kind, targets, .. } = verb {
        match (kind, targets) {
            (CheckKind::Target, None) => return Err("--kind target requires --targets".into()),
            (CheckKind::Point | CheckKind::Arc, Some(_)) => {
                return Err("--targets is only valid with --kind target".into())
            }
            _ => {}
        }
    }
    Ok(())
}

fn parse_set(list: &str) -> Result<VertexSet, Error> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(VertexId::from_str)
        .collect()
}

fn names<'a>(set: impl IntoIterator<Item = &'a VertexId>) -> Value {
    Value::Array(
        set.into_iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

fn report(doc: Value) -> Output {
    Output::Report { doc, code: EXIT_OK }
}

fn execute(verb: &Verb, d: &Digraph) -> Result<Output, Error> {
    let out = match verb {
        Verb::Info => {
            let classes = d.classify();
            report(json!({
                "vertices": d.vertex_count(),
                "arcs": d.arc_count(),
                "sources": names(&classes.sources),
                "sinks": names(&classes.sinks),
                "isolates": names(&classes.isolates),
            }))
        }
        Verb::Scc => {
            let cond = Condensation::new(d);
            let comps: Vec<Value> = cond
                .partition()
                .components()
                .map(|(id, members)| json!({ "id": id.to_string(), "members": names(members) }))
                .collect();
            report(json!({ "count": comps.len(), "components": comps }))
        }
        Verb::Condense => Output::Del(del::emit(Condensation::new(d).dag())),
        Verb::PointBasis => basis_report(d, BasisKind::Point),
        Verb::ArcBasis => basis_report(d, BasisKind::Arc),
        Verb::Bases {
            kind, count, limit, ..
        } => {
            let mut stream = bases::enumerate_bases(d, *kind);
            let total = Number::from_str(&stream.total().to_string()).expect("integer literal");
            let mut doc = Map::new();
            doc.insert("kind".into(), json!(kind.name()));
            doc.insert("count".into(), Value::Number(total));
            if !count {
                let listed: Vec<Value> = stream.by_ref().take(*limit).map(|b| names(&b)).collect();
                doc.insert("truncated".into(), json!(stream.next().is_some()));
                doc.insert("bases".into(), Value::Array(listed));
            }
            report(Value::Object(doc))
        }
        Verb::Check { kind, set, targets } => {
            let set = parse_set(set)?;
            let reaching_kind = match kind {
                CheckKind::Point => ReachingKind::Point,
                CheckKind::Arc => ReachingKind::Arc,
                CheckKind::Target => {
                    ReachingKind::Target(parse_set(targets.as_deref().unwrap_or(""))?)
                }
            };
            let missing = bases::unreached(d, &reaching_kind, &set)?;
            let verdict = missing.is_empty();
            let mut doc = Map::new();
            doc.insert("kind".into(), json!(reaching_kind.name()));
            doc.insert("set".into(), names(&set));
            if let ReachingKind::Target(t) = &reaching_kind {
                doc.insert("targets".into(), names(t));
            }
            doc.insert("reaching".into(), json!(verdict));
            doc.insert("unreached".into(), names(&missing));
            Output::Report {
                doc: Value::Object(doc),
                code: if verdict { EXIT_OK } else { EXIT_FALSE },
            }
        }
        Verb::Minimize { kind, set } => {
            let set = parse_set(set)?;
            let basis = bases::minimize_reaching(d, *kind, &set)?;
            report(json!({ "kind": kind.name(), "set": names(&set), "basis": names(&basis) }))
        }
        Verb::WitnessComplement { set } => {
            let set = parse_set(set)?;
            let witness = bases::complement_reaching_witness(d, &set)?;
            report(json!({
                "basis": names(&set),
                "witness": witness.as_ref().map_or(Value::Null, names),
            }))
        }
        Verb::Singletons => report(json!({
            "all_singletons_arc_bases": bases::all_singletons_arc_bases(d),
        })),
        Verb::TraceBack { vertex } => {
            let t = bases::trace_back(d, vertex)?;
            report(json!({
                "vertex": vertex,
                "initial": t.initial.to_string(),
                "component_path": t.comp_path.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "vertex_path": names(&t.vertex_path),
            }))
        }
        Verb::Oracle { targets } => {
            let targets = match targets {
                Some(list) => parse_set(list)?,
                None => d.vertex_set(),
            };
            let r = oracle::minimal_reaching_sets(d, &targets, oracle::MAX_CAP)?;
            report(json!({
                "targets": names(&targets),
                "universe_size": r.universe_size,
                "minimal_sets": r.minimal_sets.iter().map(names).collect::<Vec<_>>(),
            }))
        }
        Verb::Example { .. } => unreachable!("handled before input is read"),
    };
    Ok(out)
}

fn basis_report(d: &Digraph, kind: BasisKind) -> Output {
    report(json!({ "kind": kind.name(), "basis": names(&bases::basis(d, kind)) }))
}

/// One `key: value` line per top-level field; nested values inline.
fn render_plain(doc: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = doc {
        for (k, v) in map {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(&inline(v));
            out.push('\n');
        }
    } else {
        out.push_str(&inline(doc));
        out.push('\n');
    }
    out
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, v)| format!("{k}: {}", inline(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "a b\nb c\n";
    const CYC: &str = "a b\nb a\nb c\n";

    fn call(args: &[&str], input: &str) -> Outcome {
        let argv = std::iter::once("reachset").chain(args.iter().copied());
        run(argv, &mut input.as_bytes())
    }

    fn doc(o: &Outcome) -> Value {
        serde_json::from_str(&o.stdout).unwrap()
    }

    #[test]
    fn check_true_and_false() {
        let o = call(&["check", "--kind", "point", "--set", "a"], CHAIN);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(doc(&o)["reaching"], json!(true));

        let o = call(&["check", "--kind", "point", "--set", "b"], CHAIN);
        assert_eq!(o.code, EXIT_FALSE);
        assert_eq!(doc(&o)["reaching"], json!(false));
        assert_eq!(doc(&o)["unreached"], json!(["a"]));
    }

    #[test]
    fn point_basis_of_cyc() {
        let o = call(&["point-basis"], CYC);
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(doc(&o)["basis"], json!(["a"]));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&[], CHAIN).code, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"], CHAIN).code, EXIT_USAGE);
        assert_eq!(call(&["info", "--bogus"], CHAIN).code, EXIT_USAGE);
        assert_eq!(
            call(&["check", "--kind", "target", "--set", "a"], CHAIN).code,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["check", "--kind", "point", "--targets", "a"], CHAIN).code,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["bases", "--kind", "point", "--count", "--list"], CHAIN).code,
            EXIT_USAGE
        );

        let o = call(&["info"], "a b\na b c\n");
        assert_eq!(o.code, EXIT_PARSE);
        assert!(o.stderr.contains("line 2"));

        assert_eq!(
            call(&["check", "--kind", "point", "--set", "zz"], CHAIN).code,
            EXIT_SEMANTIC
        );
        assert_eq!(
            call(&["minimize", "--kind", "point", "--set", "b"], CHAIN).code,
            EXIT_SEMANTIC
        );
        assert_eq!(
            call(&["trace-back", "--vertex", "q"], CHAIN).code,
            EXIT_SEMANTIC
        );
        assert_eq!(
            call(&["example", "--name", "EX8", "--n", "20000"], "").code,
            EXIT_SEMANTIC
        );

        let big: String = (0..17).map(|i| format!("v{i} v{}\n", i + 1)).collect();
        assert_eq!(call(&["oracle"], &big).code, EXIT_SEMANTIC);
    }

    #[test]
    fn help_exits_zero() {
        let o = call(&["--help"], "");
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("point-basis"));
    }

    #[test]
    fn global_flags_after_verb() {
        let o = call(&["point-basis", "--plain"], CYC);
        assert_eq!(o.stdout, "basis: [a]\nkind: point\n");
    }

    #[test]
    fn example_ceiling_flag() {
        let o = call(
            &["example", "--name", "EX8", "--n", "3", "--ceiling", "3"],
            "",
        );
        assert_eq!(o.code, EXIT_SEMANTIC);
        let o = call(&["example", "--name", "EX8", "--n", "3"], "");
        assert_eq!(o.stdout, "# EX8 n=3\ny1 y0\ny2 y1\ny3 y2\n");
    }

    #[test]
    fn bases_listing_is_limited() {
        let o = call(&["bases", "--kind", "point", "--limit", "1"], CYC);
        let v = doc(&o);
        assert_eq!(v["count"], json!(2));
        assert_eq!(v["bases"], json!([["a"]]));
        assert_eq!(v["truncated"], json!(true));

        let v = doc(&call(&["bases", "--kind", "point", "--count"], CYC));
        assert!(v.get("bases").is_none());
    }

    #[test]
    fn set_lists_tolerate_spaces_and_empties() {
        let o = call(&["check", "--kind", "point", "--set", " a, ,"], CHAIN);
        assert_eq!(doc(&o)["set"], json!(["a"]));
    }
}
