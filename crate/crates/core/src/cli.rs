//! The `s3harm` command line: element tables, multiplicities, bases, the
//! irrep census and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use crate::deck::{deck_group, Manifold};
use crate::group::coxeter_group;
use crate::harmonics::{basis, multiplicity_table, BasisFunction};
use crate::induced::irrep_census;
use crate::report::Report;
use crate::suites::{run, Suite, SuiteOptions, J_MAX_LIMIT};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;

pub const SCHEMA: &str = "s3harm/1";

#[derive(Parser, Debug)]
#[command(
    name = "s3harm",
    version,
    about = "Harmonic analysis on the cubic spherical 3-manifolds C2 and C3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "G")]
    G,
    #[value(name = "C2")]
    C2,
    #[value(name = "C3")]
    C3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ManifoldArg {
    #[value(name = "C2")]
    C2,
    #[value(name = "C3")]
    C3,
}

impl From<ManifoldArg> for Manifold {
    fn from(m: ManifoldArg) -> Manifold {
        match m {
            ManifoldArg::C2 => Manifold::C2,
            ManifoldArg::C3 => Manifold::C3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Group,
    Basis,
    Induced,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Group => Suite::Group,
            SuiteArg::Basis => Suite::Basis,
            SuiteArg::Induced => Suite::Induced,
            SuiteArg::All => Suite::All,
        }
    }
}

fn j_range() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(0..=i64::from(J_MAX_LIMIT))
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the elements of G, deck(C2) or deck(C3).
    Group {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        count_only: bool,
    },
    /// Number of periodic harmonics of degree 2j for j = 0..jmax.
    Multiplicity {
        #[arg(long, value_enum)]
        manifold: ManifoldArg,
        #[arg(long, default_value_t = 8, value_parser = j_range())]
        jmax: u32,
    },
    /// The periodic orthonormal basis at one degree.
    Basis {
        #[arg(long, value_enum)]
        manifold: ManifoldArg,
        #[arg(long, value_parser = j_range())]
        j: u32,
    },
    /// Dimensions and identity multiplicities of the irreps of G.
    Induced,
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum)]
        manifold: Option<ManifoldArg>,
        #[arg(long, default_value_t = 8, value_parser = j_range())]
        jmax: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, env = "S3HARM_TOL", default_value_t = 1e-10)]
        tol: f64,
        /// Sample points for the periodicity check.
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
}

/// Rendered command output.
pub struct Output {
    pub command: &'static str,
    pub data: Value,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Replaces the aligned table in text mode.
    pub text: Option<String>,
    pub exit_code: i32,
}

impl Output {
    fn table(
        command: &'static str,
        data: Value,
        headers: Vec<&'static str>,
        rows: Vec<Vec<String>>,
    ) -> Self {
        Output {
            command,
            data,
            headers,
            rows,
            text: None,
            exit_code: 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({ "schema": SCHEMA, "command": self.command, "data": self.data });
                let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
            Format::Text => self
                .text
                .clone()
                .unwrap_or_else(|| aligned(&self.headers, &self.rows)),
        }
    }
}

fn aligned(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(headers.to_vec());
    for r in rows {
        s += &line(r.iter().map(String::as_str).collect());
    }
    s
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

pub fn cmd_group(which: Which, count_only: bool) -> Output {
    match which {
        Which::G => {
            let g = coxeter_group();
            if count_only {
                let mut o = Output::table(
                    "group",
                    json!({ "which": "G", "order": g.len() }),
                    vec!["order"],
                    vec![vec![g.len().to_string()]],
                );
                o.text = Some(format!("{}\n", g.len()));
                return o;
            }
            let rows = g
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    vec![
                        (i + 1).to_string(),
                        e.action_string(),
                        e.sign_string(),
                        e.cycles(),
                        e.determinant().to_string(),
                    ]
                })
                .collect();
            Output::table(
                "group",
                json!({ "which": "G", "order": g.len(), "elements": to_value(&g) }),
                vec!["n", "action", "signs", "cycles", "det"],
                rows,
            )
        }
        Which::C2 | Which::C3 => {
            let m = if which == Which::C2 {
                Manifold::C2
            } else {
                Manifold::C3
            };
            let dg = deck_group(m);
            if count_only {
                let mut o = Output::table(
                    "group",
                    json!({ "which": m.to_string(), "order": dg.order() }),
                    vec!["order"],
                    vec![vec![dg.order().to_string()]],
                );
                o.text = Some(format!("{}\n", dg.order()));
                return o;
            }
            let rows = dg
                .elements
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let (l, r) = e
                        .pair
                        .map(|p| (p.left.to_string(), p.right.to_string()))
                        .unwrap_or_default();
                    vec![
                        (i + 1).to_string(),
                        e.label.clone(),
                        e.element.action_string(),
                        l,
                        r,
                        e.element.sign_string(),
                        e.element.cycles(),
                    ]
                })
                .collect();
            Output::table(
                "group",
                json!({ "which": m.to_string(), "name": dg.name, "order": dg.order(), "generators": dg.generators, "elements": to_value(&dg.elements) }),
                vec!["t", "label", "action", "w_l", "w_r", "signs", "cycles"],
                rows,
            )
        }
    }
}

pub fn cmd_multiplicity(manifold: Manifold, j_max: u32) -> Output {
    let t = multiplicity_table(manifold, j_max);
    let rows = t
        .rows
        .iter()
        .map(|r| vec![r.j.to_string(), r.m.to_string()])
        .collect();
    Output::table("multiplicity", to_value(&t), vec!["j", "m"], rows)
}

fn terms_string(f: &BasisFunction) -> String {
    f.terms
        .iter()
        .map(|t| {
            format!(
                "({}{:+}i) D[{},{}]",
                t.coefficient.re + 0.0,
                t.coefficient.im + 0.0,
                t.m1p,
                t.m2p
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn cmd_basis(manifold: Manifold, j: u32) -> Output {
    let b = basis(manifold, j);
    let rows = b
        .iter()
        .map(|f| {
            vec![
                f.manifold.to_string(),
                f.j.to_string(),
                f.m1.to_string(),
                f.m2.to_string(),
                to_value(&f.kind).as_str().unwrap_or_default().to_string(),
                format!("{:.17}", f.norm_factor),
                terms_string(f),
            ]
        })
        .collect();
    Output::table(
        "basis",
        json!({ "manifold": manifold.to_string(), "j": j, "count": b.len(), "functions": to_value(&b) }),
        vec!["manifold", "j", "m1", "m2", "kind", "norm", "terms"],
        rows,
    )
}

pub fn cmd_induced() -> crate::Result<Output> {
    let c = irrep_census()?;
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    let rows = c
        .entries
        .iter()
        .map(|e| {
            vec![
                e.orbit.to_string(),
                e.little_co_group.to_string(),
                e.f.clone(),
                e.dim.to_string(),
                e.m_c8.to_string(),
                e.m_q.to_string(),
                opt(e.tabulated.as_ref().map(|t| t.m_c8)),
                opt(e.tabulated.as_ref().map(|t| t.m_q)),
                if e.flagged {
                    "flagged".into()
                } else {
                    String::new()
                },
            ]
        })
        .collect();
    let mut o = Output::table(
        "induced",
        to_value(&c),
        vec![
            "orbit",
            "K",
            "f",
            "dim",
            "m(C8)",
            "m(Q)",
            "tab m(C8)",
            "tab m(Q)",
            "note",
        ],
        rows,
    );
    let mut text = aligned(&o.headers, &o.rows);
    text += &format!(
        "sum dim^2 = {}, sum dim m(C8) = {}, sum dim m(Q) = {}\n",
        c.sum_dim_squared, c.sum_dim_m_c8, c.sum_dim_m_q
    );
    o.text = Some(text);
    Ok(o)
}

pub fn cmd_verify(suite: Suite, opts: &SuiteOptions) -> Output {
    let reports: Vec<Report> = run(suite, opts);
    let passed = reports.iter().all(|r| r.passed);
    let mut rows = Vec::new();
    for r in &reports {
        for c in &r.checks {
            rows.push(vec![
                r.suite.clone(),
                r.subject.clone(),
                c.name.clone(),
                c.passed.to_string(),
                c.measured.map(|m| format!("{m:e}")).unwrap_or_default(),
                c.tolerance.map(|t| format!("{t:e}")).unwrap_or_default(),
                c.detail.clone(),
            ]);
        }
    }
    let mut text: String = reports.iter().map(|r| r.to_string()).collect();
    text += if passed {
        "all checks passed\n"
    } else {
        "some checks FAILED\n"
    };
    Output {
        command: "verify",
        data: json!({
            "suite": suite.to_string(),
            "manifold": opts.manifold.map(|m| m.to_string()),
            "jmax": opts.j_max,
            "seed": opts.seed,
            "tol": opts.tol,
            "points": opts.points,
            "passed": passed,
            "reports": to_value(&reports),
        }),
        headers: vec![
            "suite",
            "subject",
            "check",
            "passed",
            "measured",
            "tolerance",
            "detail",
        ],
        rows,
        text: Some(text),
        exit_code: if passed { 0 } else { 1 },
    }
}

pub fn execute(cli: &Cli) -> crate::Result<Output> {
    Ok(match &cli.command {
        Command::Group { which, count_only } => cmd_group(*which, *count_only),
        Command::Multiplicity { manifold, jmax } => cmd_multiplicity((*manifold).into(), *jmax),
        Command::Basis { manifold, j } => cmd_basis((*manifold).into(), *j),
        Command::Induced => cmd_induced()?,
        Command::Verify {
            suite,
            manifold,
            jmax,
            seed,
            tol,
            points,
        } => cmd_verify(
            (*suite).into(),
            &SuiteOptions {
                manifold: manifold.map(Into::into),
                j_max: *jmax,
                seed: *seed,
                tol: *tol,
                points: *points,
            },
        ),
    })
}

/// Parses `args`, runs the command and writes the output; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let body = out.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return 2;
    }
    out.exit_code
}
