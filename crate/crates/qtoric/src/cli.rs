//! Command dispatch. Tables go to stdout, reports and errors to stderr.
//!
//! Exit codes: 0 success, 1 domain or validation error, 2 parse error,
//! 3 check failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use qtoric_core::hopf::{
    antipode, check_coaction_square_with, check_coassociativity_with, coproduct, CheckReport, CoproductTable,
};
use qtoric_core::quasitoric::{kernel_lattice, preset_cpn, preset_hirzebruch, product, Quasitoric, QuasitoricData};
use qtoric_core::{compositions_of, Composition, Error, NSymm};

use crate::cache::TopClassCache;
use crate::charnums;
use crate::input::{read_input, to_json, ParseError};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "qtoric", version, about = "Exact Hopf-algebra and quasitoric characteristic-number computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an input file and report facet determinants.
    Validate { path: PathBuf },
    /// Characteristic numbers indexed by compositions of m.
    Charnums {
        path: PathBuf,
        /// Comma-separated positive parts, e.g. 1,2.
        #[arg(long, value_name = "PARTS", conflicts_with = "all", required_unless_present = "all")]
        composition: Option<String>,
        /// Every composition of m, in canonical order.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        /// Reorder vertices: new vertex i is old vertex PERM[i].
        #[arg(long, value_name = "PERM")]
        permute: Option<String>,
    },
    /// Write a preset input file: `cpn N`, `hirzebruch A`, or `product A.json B.json`.
    Preset {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print Delta(Z_n).
    Coproduct {
        #[arg(long)]
        degree: usize,
    },
    /// Print S(Z_n).
    Antipode {
        #[arg(long)]
        degree: usize,
    },
    /// Verify an identity degree by degree.
    Check {
        which: CheckKind,
        #[arg(long)]
        max_degree: usize,
        /// Drop the leading term of Delta(Z_n) before checking.
        #[arg(long, hide = true, value_name = "N")]
        inject_fault: Option<usize>,
    },
    /// Integer kernel of the characteristic matrix.
    Kernel { path: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    #[value(alias = "conjecture15")]
    CoactionSquare,
    Coassoc,
}

enum Failure {
    Domain(String),
    Parse(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

/// Runs one command line (including the program name) without touching the
/// process streams.
pub fn run<I, T>(args: I, cache: &TopClassCache) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Outcome::default();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                out.stderr = text;
                out.code = 2;
            } else {
                out.stdout = text;
            }
            return out;
        }
    };
    let result = match cli.command {
        Command::Validate { path } => validate(&path, &mut out),
        Command::Charnums { path, composition, all, json, permute } => {
            charnums_cmd(&path, composition.as_deref(), all, json, permute.as_deref(), cache, &mut out)
        }
        Command::Preset { kind, args, output } => preset(&kind, &args, output.as_deref(), &mut out),
        Command::Coproduct { degree } => {
            coproduct(&NSymm::z(degree as u32), degree).map(|d| out.stdout = format!("{d}\n")).map_err(Failure::from)
        }
        Command::Antipode { degree } => {
            antipode(&NSymm::z(degree as u32), degree).map(|s| out.stdout = format!("{s}\n")).map_err(Failure::from)
        }
        Command::Check { which, max_degree, inject_fault } => check(which, max_degree, inject_fault, &mut out),
        Command::Kernel { path } => kernel(&path, &mut out),
    };
    match result {
        Ok(()) => {}
        Err(Failure::Domain(msg)) => {
            writeln!(out.stderr, "error: {msg}").unwrap();
            out.code = 1;
        }
        Err(Failure::Parse(msg)) => {
            writeln!(out.stderr, "error: {msg}").unwrap();
            out.code = 2;
        }
        Err(Failure::Check) => out.code = 3,
    }
    out
}

fn validate(path: &Path, out: &mut Outcome) -> Result<(), Failure> {
    let d = read_input(path)?;
    let report = d.validate();
    writeln!(out.stderr, "{report}").unwrap();
    if !report.is_valid() {
        out.code = 1;
    }
    Ok(())
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',').map(|x| x.trim().parse().map_err(|_| Failure::Parse(format!("bad {what} {s:?}")))).collect()
}

fn charnums_cmd(
    path: &Path,
    composition: Option<&str>,
    all: bool,
    json: bool,
    permute: Option<&str>,
    cache: &TopClassCache,
    out: &mut Outcome,
) -> Result<(), Failure> {
    let mut d: QuasitoricData = read_input(path)?;
    if let Some(p) = permute {
        d = d.permute_vertices(&parse_list::<usize>(p, "permutation")?)?;
    }
    let report = d.validate();
    if !report.is_valid() {
        return Err(Failure::Domain(format!("{}: {report}", path.display())));
    }
    let q = Quasitoric::new(d)?;
    let m = q.m();
    let comps: Vec<Composition> = if all {
        compositions_of(m as u32)
    } else {
        let text = composition.unwrap_or_default();
        let a: Composition = text.parse().map_err(|_| Failure::Parse(format!("bad composition {text:?}")))?;
        if a.weight() as usize != m {
            return Err(Failure::Domain(format!("composition {a} has weight {}, expected m = {m}", a.weight())));
        }
        vec![a]
    };
    let top = cache.top_class(&q)?;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let table = charnums::evaluate(&top, &comps, threads)?;
    out.stdout = if json { charnums::to_json(&q.data().name, m, &table) } else { charnums::to_tsv(&table) };
    Ok(())
}

fn preset(kind: &str, args: &[String], output: Option<&Path>, out: &mut Outcome) -> Result<(), Failure> {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(Failure::Domain(format!("preset {kind} takes {n} argument(s), got {}", args.len())))
        }
    };
    let int = |s: &str| s.parse::<i64>().map_err(|_| Failure::Domain(format!("bad integer {s:?}")));
    let d = match kind {
        "cpn" => {
            arity(1)?;
            let n = int(&args[0])?;
            let n = usize::try_from(n).map_err(|_| Failure::Domain(format!("n must be positive, got {n}")))?;
            preset_cpn(n)?
        }
        "hirzebruch" => {
            arity(1)?;
            preset_hirzebruch(int(&args[0])?)
        }
        "product" => {
            arity(2)?;
            let p = read_input(Path::new(&args[0]))?;
            let q = read_input(Path::new(&args[1]))?;
            product(&p, &q)?
        }
        _ => return Err(Failure::Domain(format!("unknown preset {kind:?}; expected cpn, hirzebruch or product"))),
    };
    let text = to_json(&d);
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
            writeln!(out.stderr, "wrote {}: {d}", path.display()).unwrap();
        }
        None => out.stdout = text,
    }
    Ok(())
}

fn check(which: CheckKind, max_degree: usize, fault: Option<usize>, out: &mut Outcome) -> Result<(), Failure> {
    if max_degree < 1 {
        return Err(Failure::Domain("--max-degree must be at least 1".into()));
    }
    let mut table = CoproductTable::new(max_degree)?;
    if let Some(n) = fault {
        table = table.with_dropped_term(n)?;
    }
    let report: CheckReport = match which {
        CheckKind::CoactionSquare => check_coaction_square_with(&table, max_degree)?,
        CheckKind::Coassoc => check_coassociativity_with(&table, max_degree)?,
    };
    for d in &report.degrees {
        writeln!(out.stdout, "{}\t{}", d.degree, if d.ok { "ok" } else { "FAIL" }).unwrap();
    }
    match &report.first_discrepancy {
        Some(d) => {
            writeln!(out.stderr, "{}: first discrepancy at degree {}: {}", report.name, d.degree, d.detail).unwrap();
            Err(Failure::Check)
        }
        None => {
            writeln!(out.stderr, "{}: all degrees pass", report.name).unwrap();
            Ok(())
        }
    }
}

fn kernel(path: &Path, out: &mut Outcome) -> Result<(), Failure> {
    let d = read_input(path)?;
    let k = kernel_lattice(&d)?;
    let rows: Vec<String> = k
        .basis
        .row_vecs()
        .iter()
        .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    out.stdout = if rows.is_empty() {
        format!("rank {}\n", k.rank)
    } else {
        format!("rank {}; basis: {}\n", k.rank, rows.join(" "))
    };
    Ok(())
}
