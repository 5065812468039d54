//! The `semilex` command line: build, check, verify, compare, export.
//!
//! Each subcommand produces a [`CommandResult`]. The payload (JSON, CSV,
//! DOT) goes to `--out` or standard output; the detail line goes to
//! standard output when there is no payload there, otherwise to standard
//! error. Exit codes: 0 pass, 1 check ran and failed, 2 usage, parse or
//! resource error.

use std::cmp::Ordering;
use std::fmt;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::check::Check;
use crate::error::Error;
use crate::formats::{
    indexed_to_json, order_to_dot, order_to_json, parse_document, semigroup_to_csv,
    semigroup_to_json, Document,
};
use crate::iterated::{
    build_t1, build_tn, build_v1, build_vn, verify_lex_correspondence, IndexedSemigroup,
};
use crate::lex::{lex_compare, IntTuple};
use crate::order::{
    check_b_axioms, check_total_order, max_semigroup, min_semigroup, order_from_semigroup,
    BViolation, TotalOrder,
};
use crate::semigroup::{
    check_abelian, check_associative, find_identity, find_zero, CarrierLimit, FiniteSemigroup,
    DEFAULT_MAX_ELEMENTS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub detail: String,
    pub payload: Option<String>,
}

impl CommandResult {
    fn pass(detail: impl Into<String>) -> Self {
        CommandResult {
            status: Status::Pass,
            detail: detail.into(),
            payload: None,
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        CommandResult {
            status: Status::Fail,
            detail: detail.into(),
            payload: None,
        }
    }

    fn error(detail: impl Into<String>) -> Self {
        CommandResult {
            status: Status::Error,
            detail: detail.into(),
            payload: None,
        }
    }

    fn with_payload(mut self, payload: String) -> Self {
        self.payload = Some(payload);
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        CommandResult::error(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "semilex", version, about = "Semigroup adjunction and lexicographic order toolkit")]
pub struct Cli {
    /// Refuse to build carriers larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ELEMENTS)]
    pub max_elements: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a semigroup and print it as JSON.
    Build {
        #[arg(ignore_case = true)]
        kind: BuildKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        neg: Option<usize>,
        #[arg(long)]
        pos: Option<usize>,
        /// Element label for `trivial`.
        #[arg(long, default_value = "s0")]
        label: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one law checker on a semigroup, order or relation file.
    Check {
        #[arg(ignore_case = true)]
        what: CheckKind,
        /// Input JSON file, or `-` for standard input.
        input: PathBuf,
    },
    /// Check every product of an indexed semigroup against the lex rule.
    Verify { input: PathBuf },
    /// Compare two tuples lexicographically.
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Re-emit a semigroup or order as canonical JSON, CSV or DOT.
    Export {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    Trivial,
    #[value(name = "T1")]
    T1,
    #[value(name = "Tn")]
    Tn,
    #[value(name = "V1")]
    V1,
    #[value(name = "Vn")]
    Vn,
    MinChain,
    MaxChain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Assoc,
    Abelian,
    Identity,
    Zero,
    #[value(name = "A-axioms")]
    AAxioms,
    #[value(name = "B-axioms")]
    BAxioms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Csv,
    Dot,
}

/// Parameters for [`cmd_build`]; unused ones are ignored.
#[derive(Debug, Clone, Default)]
pub struct BuildParams {
    pub n: Option<usize>,
    pub bound: Option<usize>,
    pub k: Option<usize>,
    pub neg: Option<usize>,
    pub pos: Option<usize>,
    pub label: Option<String>,
}

fn need(v: Option<usize>, kind: &str, flags: &str) -> Result<usize, CommandResult> {
    v.ok_or_else(|| CommandResult::error(format!("{kind} requires {flags}")))
}

pub fn cmd_build(kind: BuildKind, p: &BuildParams, limit: CarrierLimit) -> CommandResult {
    let indexed = |s: IndexedSemigroup| (s.len(), indexed_to_json(&s));
    let plain = |s: FiniteSemigroup| (s.len(), semigroup_to_json(&s));
    let built = (|| -> Result<(usize, String), CommandResult> {
        Ok(match kind {
            BuildKind::Trivial => plain(FiniteSemigroup::trivial(
                p.label.as_deref().unwrap_or("s0"),
            )?),
            BuildKind::T1 => indexed(build_t1(need(p.k, "T1", "--k")?, limit)?),
            BuildKind::Tn => {
                let n = need(p.n, "Tn", "--n and --bound")?;
                let b = need(p.bound, "Tn", "--n and --bound")?;
                indexed(build_tn(n, b, limit)?)
            }
            BuildKind::V1 => {
                let neg = need(p.neg, "V1", "--neg and --pos")?;
                let pos = need(p.pos, "V1", "--neg and --pos")?;
                indexed(build_v1(neg, pos, limit)?)
            }
            BuildKind::Vn => {
                let n = need(p.n, "Vn", "--n and --bound")?;
                let b = need(p.bound, "Vn", "--n and --bound")?;
                indexed(build_vn(n, b, limit)?)
            }
            BuildKind::MinChain | BuildKind::MaxChain => {
                let k = need(p.k, "chains", "--k")?;
                limit.admit(k as u128 + 1)?;
                let chain =
                    TotalOrder::from_ranked_labels((0..=k).map(|i| format!("s{i}")).collect())?;
                if kind == BuildKind::MinChain {
                    plain(min_semigroup(&chain))
                } else {
                    plain(max_semigroup(&chain))
                }
            }
        })
    })();
    match built {
        Ok((size, json)) => {
            CommandResult::pass(format!("built {size}-element semigroup")).with_payload(json)
        }
        Err(e) => e,
    }
}

fn describe_b(s: &FiniteSemigroup, v: &BViolation) -> String {
    let l = |i: usize| s.label(i);
    match v {
        BViolation::Associativity(a) => {
            let (x, y, z) = a.triple;
            format!(
                "B1: ({x}*{y})*{z} = {} but {x}*({y}*{z}) = {}",
                l(a.left),
                l(a.right),
                x = l(x),
                y = l(y),
                z = l(z)
            )
        }
        BViolation::Commutativity(a, b) => format!(
            "B1: {a}*{b} = {} but {b}*{a} = {}",
            l(s.product(*a, *b)),
            l(s.product(*b, *a)),
            a = l(*a),
            b = l(*b)
        ),
        BViolation::Selectivity(a, b) => format!(
            "B2: {a}*{b} = {} is not in {{{a},{b}}}",
            l(s.product(*a, *b)),
            a = l(*a),
            b = l(*b)
        ),
        BViolation::Transitivity(a, b, c) => format!(
            "B3: {a}*{b} = {a} and {b}*{c} = {b} but {a}*{c} = {}",
            l(s.product(*a, *c)),
            a = l(*a),
            b = l(*b),
            c = l(*c)
        ),
    }
}

fn check_semigroup(s: &FiniteSemigroup, what: CheckKind) -> CommandResult {
    let l = |i: usize| s.label(i).to_owned();
    match what {
        CheckKind::Assoc => match check_associative(s) {
            Check::Pass(()) => CommandResult::pass(format!("associative on {} elements", s.len())),
            Check::Fail(v) => {
                let (a, b, c) = v.triple;
                CommandResult::fail(format!(
                    "not associative at ({},{},{}): (a*b)*c = {} but a*(b*c) = {}",
                    l(a),
                    l(b),
                    l(c),
                    l(v.left),
                    l(v.right)
                ))
            }
        },
        CheckKind::Abelian => match check_abelian(s) {
            Check::Pass(()) => CommandResult::pass(format!("abelian on {} elements", s.len())),
            Check::Fail(v) => {
                let (a, b) = v.pair;
                CommandResult::fail(format!("not abelian at ({},{})", l(a), l(b)))
            }
        },
        CheckKind::Identity => match find_identity(s) {
            Ok(Some(e)) => CommandResult::pass(format!("identity: {e}")),
            Ok(None) => CommandResult::fail("no identity"),
            Err(e) => CommandResult::fail(e.to_string()),
        },
        CheckKind::Zero => match find_zero(s) {
            Ok(Some(e)) => CommandResult::pass(format!("zero: {e}")),
            Ok(None) => CommandResult::fail("no zero"),
            Err(e) => CommandResult::fail(e.to_string()),
        },
        CheckKind::AAxioms => {
            let n = s.len();
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if s.product(a, b) == a {
                        pairs.push((l(a), l(b)));
                    }
                }
            }
            check_relation(s.labels(), &pairs)
        }
        CheckKind::BAxioms => match check_b_axioms(s) {
            Check::Pass(()) => CommandResult::pass("B1, B2, B3 hold"),
            Check::Fail(v) => CommandResult::fail(describe_b(s, &v)),
        },
    }
}

fn check_relation(elements: &[String], pairs: &[(String, String)]) -> CommandResult {
    match check_total_order(elements, pairs) {
        Ok(Check::Pass(order)) => CommandResult::pass(format!(
            "A1-A4 hold; chain {}",
            order.chain_labels().join(" < ")
        ))
        .with_payload(order_to_json(&order)),
        Ok(Check::Fail(v)) => CommandResult::fail(v.to_string()),
        Err(e) => e.into(),
    }
}

pub fn cmd_check(input: &str, what: CheckKind, limit: CarrierLimit) -> CommandResult {
    let doc = match parse_document(input) {
        Ok(d) => d,
        Err(e) => return e.into(),
    };
    match (doc, what) {
        (Document::Semigroup(d), _) => match d.to_semigroup(limit) {
            Ok(s) => check_semigroup(&s, what),
            Err(e) => e.into(),
        },
        (Document::Relation(r), CheckKind::AAxioms) => check_relation(&r.elements, &r.pairs()),
        (Document::Order(o), CheckKind::AAxioms) => match o.to_order() {
            Ok(order) => check_relation(order.labels(), &order.pairs()),
            Err(e) => e.into(),
        },
        (_, other) => CommandResult::error(format!(
            "`{}` needs a semigroup (a JSON object with a `table`)",
            other.to_possible_value().expect("no skipped variants").get_name()
        )),
    }
}

pub fn cmd_verify(input: &str, limit: CarrierLimit) -> CommandResult {
    let indexed = match parse_document(input) {
        Ok(Document::Semigroup(d)) => d.to_indexed(limit),
        Ok(_) => Err(Error::IndexMetadata("input is not a semigroup".into())),
        Err(e) => Err(e),
    };
    let s = match indexed {
        Ok(s) => s,
        Err(e) => return e.into(),
    };
    let report = verify_lex_correspondence(&s);
    match report.outcome {
        Check::Pass(()) => CommandResult::pass(format!(
            "lex correspondence holds: {} pairs checked",
            report.pairs_checked
        )),
        Check::Fail(v) => CommandResult::fail(format!(
            "lex correspondence fails ({} pairs in scope): {v}",
            report.pairs_checked
        )),
    }
}

pub fn cmd_compare(a: &str, b: &str) -> CommandResult {
    let parsed = a
        .parse::<IntTuple>()
        .and_then(|x| Ok((x, b.parse::<IntTuple>()?)))
        .and_then(|(x, y)| lex_compare(&x, &y));
    match parsed {
        Ok(Ordering::Less) => CommandResult::pass("less"),
        Ok(Ordering::Equal) => CommandResult::pass("equal"),
        Ok(Ordering::Greater) => CommandResult::pass("greater"),
        Err(e) => e.into(),
    }
}

pub fn cmd_export(input: &str, format: ExportFormat, limit: CarrierLimit) -> CommandResult {
    let doc = match parse_document(input) {
        Ok(d) => d,
        Err(e) => return e.into(),
    };
    let out = (|| -> Result<CommandResult, Error> {
        Ok(match (doc, format) {
            (Document::Semigroup(d), ExportFormat::Json) => {
                let s = d.to_semigroup(limit)?;
                let json = if d.is_indexed() {
                    indexed_to_json(&d.to_indexed(limit)?)
                } else {
                    semigroup_to_json(&s)
                };
                CommandResult::pass("exported json").with_payload(json)
            }
            (Document::Semigroup(d), ExportFormat::Csv) => CommandResult::pass("exported csv")
                .with_payload(semigroup_to_csv(&d.to_semigroup(limit)?)),
            (Document::Semigroup(d), ExportFormat::Dot) => {
                match order_from_semigroup(&d.to_semigroup(limit)?) {
                    Ok(o) => CommandResult::pass("exported dot").with_payload(order_to_dot(&o)),
                    Err(e) => CommandResult::fail(e.to_string()),
                }
            }
            (Document::Order(o), ExportFormat::Json) => CommandResult::pass("exported json")
                .with_payload(order_to_json(&o.to_order()?)),
            (Document::Order(o), ExportFormat::Dot) => CommandResult::pass("exported dot")
                .with_payload(order_to_dot(&o.to_order()?)),
            (Document::Relation(r), ExportFormat::Json) => {
                CommandResult::pass("exported json").with_payload(r.to_json())
            }
            (Document::Relation(r), ExportFormat::Dot) => {
                match check_total_order(&r.elements, &r.pairs())? {
                    Check::Pass(o) => {
                        CommandResult::pass("exported dot").with_payload(order_to_dot(&o))
                    }
                    Check::Fail(v) => CommandResult::fail(v.to_string()),
                }
            }
            (_, ExportFormat::Csv) => {
                CommandResult::error("csv export needs a semigroup (a JSON object with a `table`)")
            }
        })
    })();
    out.unwrap_or_else(CommandResult::from)
}

fn read_input(path: &PathBuf, stdin: &mut dyn Read) -> Result<String, CommandResult> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| CommandResult::error(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CommandResult::error(format!("reading {}: {e}", path.display())))?;
    }
    Ok(text)
}

/// Dispatch a parsed command line.
pub fn execute(cli: Cli, stdin: &mut dyn Read) -> (CommandResult, Option<PathBuf>) {
    let limit = CarrierLimit(cli.max_elements);
    match cli.command {
        Command::Build {
            kind,
            n,
            bound,
            k,
            neg,
            pos,
            label,
            out,
        } => {
            let p = BuildParams {
                n,
                bound,
                k,
                neg,
                pos,
                label: Some(label),
            };
            (cmd_build(kind, &p, limit), out)
        }
        Command::Check { what, input } => match read_input(&input, stdin) {
            Ok(text) => {
                let mut r = cmd_check(&text, what, limit);
                // The derived order is informative only; keep stdout to the
                // verdict for checks.
                r.payload = None;
                (r, None)
            }
            Err(e) => (e, None),
        },
        Command::Verify { input } => match read_input(&input, stdin) {
            Ok(text) => (cmd_verify(&text, limit), None),
            Err(e) => (e, None),
        },
        Command::Compare { a, b } => (cmd_compare(&a, &b), None),
        Command::Export { input, format, out } => match read_input(&input, stdin) {
            Ok(text) => (cmd_export(&text, format, limit), out),
            Err(e) => (e, None),
        },
    }
}

/// Full entry point: parse `args`, run, write results, return the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (result, out) = execute(cli, stdin);
    let detail_line = format!("{}: {}\n", result.status, result.detail);
    match (&result.payload, out) {
        (Some(payload), Some(path)) => {
            if let Err(e) = std::fs::write(&path, payload) {
                let _ = writeln!(stderr, "error: writing {}: {e}", path.display());
                return 2;
            }
            let _ = stdout.write_all(detail_line.as_bytes());
        }
        (Some(payload), None) => {
            let _ = stdout.write_all(payload.as_bytes());
            let _ = stderr.write_all(detail_line.as_bytes());
        }
        (None, _) => {
            let sink: &mut dyn Write = if result.status == Status::Error {
                stderr
            } else {
                stdout
            };
            let _ = sink.write_all(detail_line.as_bytes());
        }
    }
    result.exit_code()
}
