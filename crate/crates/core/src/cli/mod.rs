//! The `nsg` command line. Every subcommand produces a [`Table`]; `--format`
//! picks plain text, CSV or JSON.
//!
//! Exit codes: 0 on success, 1 when a verification (recursion check, fit)
//! fails, 2 on invalid arguments.

pub mod table;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::Integer;

use crate::cone::edges_of_cone_star;
use crate::enumeration::{ClassFilter, Enumerator};
use crate::error::Error;
use crate::paths::{self, LatticePath, PathSystem};
use crate::quasipoly::{self, format_rational, AlphaForm, QuasiPolynomial};
use crate::semigroup::Semigroup;

pub use table::{named_table, Cell, Table, TABLE_NAMES};

#[derive(Debug, Parser)]
#[command(name = "nsg", version, about = "Count and classify numerical semigroups containing a fixed element")]
pub struct Cli {
    /// Worker threads for the enumeration.
    #[arg(long, global = true, env = "NSG_WORKERS", default_value_t = 1)]
    pub workers: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count semigroups by genus or by containment of q.
    Count(CountArgs),
    /// List the semigroups of one genus.
    Enumerate(EnumerateArgs),
    /// Lattice paths of the (p, q) gap triangle.
    #[command(subcommand)]
    Paths(PathsCommand),
    /// Edge representatives of the homogeneous Apery cone.
    Edges {
        #[arg(long)]
        p: u64,
    },
    /// Fit a quasi-polynomial to a count sequence.
    Fit(FitArgs),
    /// Print a named reference table, or regenerate all golden files.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub p: u64,
    /// Genus or inclusive range `a..b`.
    #[arg(long, conflicts_with = "contains", required_unless_present = "contains")]
    pub genus: Option<Span>,
    /// q or inclusive range `a..b`; values sharing a factor with p are skipped.
    #[arg(long)]
    pub contains: Option<Span>,
    #[arg(long, default_value = "all")]
    pub class: ClassFilter,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub genus: u64,
    #[arg(long, default_value = "all")]
    pub class: ClassFilter,
}

#[derive(Debug, Subcommand)]
pub enum PathsCommand {
    /// Number of non-empty admissible paths, with N(p,q) for comparison.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Every admissible path and its semigroup.
    List {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Check the path recursions for N, Sym and Psym for all q up to q-max.
    VerifyRecursions {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// G(p,g): all semigroups of genus g.
    G,
    /// G0(p,g): interior points (maximal embedding dimension).
    G0,
    Gsym,
    Gpsym,
    /// H(p,g): cumulative count up to genus g.
    H,
    /// N(p, i + n p) for the residue given by --residue.
    N,
    Sym,
    Psym,
    Medim,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_enum, ignore_case = true)]
    pub target: Target,
    /// Period, or `auto` for the smallest one that fits.
    #[arg(long, default_value = "auto")]
    pub period: Auto,
    /// Degree, or `auto` for the smallest one that fits (at most 6).
    #[arg(long, default_value = "auto")]
    pub degree: Auto,
    /// Number of sample values, indexed from 0.
    #[arg(long, default_value_t = 60)]
    pub samples: usize,
    /// Residue of q mod p for the containment targets.
    #[arg(long)]
    pub residue: Option<u64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// One of genus-small, contains-p3, contains-p4.
    #[arg(required_unless_present = "seed_tables")]
    pub name: Option<String>,
    /// Regenerate every golden CSV file into --dir.
    #[arg(long)]
    pub seed_tables: bool,
    #[arg(long, default_value = "tables")]
    pub dir: PathBuf,
}

/// Inclusive range given as `n` or `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: u64,
    pub end: u64,
}

impl std::str::FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span { start: num(a)?, end: num(b.trim_start_matches('='))? },
            None => {
                let n = num(s)?;
                Span { start: n, end: n }
            }
        };
        if span.start > span.end {
            return Err(format!("empty range {s}"));
        }
        Ok(span)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Auto {
    Auto,
    Fixed(usize),
}

impl std::str::FromStr for Auto {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Auto::Auto);
        }
        s.parse().map(Auto::Fixed).map_err(|_| format!("expected `auto` or a number, got `{s}`"))
    }
}

impl Auto {
    fn fixed(self) -> Option<usize> {
        match self {
            Auto::Auto => None,
            Auto::Fixed(n) => Some(n),
        }
    }
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
    Io(std::io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Verification(_) | Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationMismatch { .. } | Error::NoFit { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// What a command produced: a table, and optionally a plain-text rendering
/// for `--format text` (CSV otherwise).
pub struct Output {
    pub table: Table,
    pub text: Option<String>,
    /// Set when the command ran but a check failed.
    pub failure: Option<String>,
}

impl Output {
    fn table(table: Table) -> Self {
        Output { table, text: None, failure: None }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.table.to_csv(),
            Format::Json => self.table.to_json(),
            Format::Text => self.text.clone().unwrap_or_else(|| self.table.to_csv()),
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("{f}");
            f.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    if cli.workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let enumerator = Enumerator::with_workers(cli.workers);
    if let Command::Table(TableArgs { seed_tables: true, dir, .. }) = &cli.command {
        return seed_tables(&enumerator, dir);
    }
    let out = dispatch(&cli.command, &enumerator)?;
    let rendered = out.render(cli.format);
    match &cli.output {
        Some(path) => std::fs::write(path, &rendered)?,
        None => std::io::stdout().write_all(rendered.as_bytes())?,
    }
    match out.failure {
        Some(w) => Err(Failure::Verification(w)),
        None => Ok(()),
    }
}

/// Runs one command and returns its output without printing it.
pub fn dispatch(command: &Command, e: &Enumerator) -> Result<Output, Failure> {
    match command {
        Command::Count(args) => cmd_count(args, e),
        Command::Enumerate(args) => cmd_enumerate(args, e),
        Command::Paths(cmd) => cmd_paths(cmd),
        Command::Edges { p } => cmd_edges(*p),
        Command::Fit(args) => cmd_fit(args, e),
        Command::Table(args) => {
            let name = args.name.as_deref().unwrap_or_default();
            let table = named_table(name, e).ok_or_else(|| {
                Failure::Usage(format!("unknown table `{name}` (expected one of {})", TABLE_NAMES.join(", ")))
            })??;
            Ok(Output::table(table))
        }
    }
}

fn check_p(p: u64) -> Result<(), Failure> {
    if p < 3 {
        return Err(Error::InvalidP(p).into());
    }
    Ok(())
}

fn lines(table: &Table) -> String {
    let mut s = String::new();
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(Cell::render).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn cmd_count(args: &CountArgs, e: &Enumerator) -> Result<Output, Failure> {
    check_p(args.p)?;
    let (index, counts) = match (args.genus, args.contains) {
        (Some(g), _) => ("g", e.genus_table(args.p, g.start..=g.end, args.class)?),
        (None, Some(q)) => {
            if q.start == q.end && q.start.gcd(&args.p) != 1 {
                return Err(Error::NotCoprime(args.p, q.start).into());
            }
            ("q", e.containing_table(args.p, q.start..=q.end, args.class)?)
        }
        (None, None) => return Err(Failure::Usage("one of --genus or --contains is required".into())),
    };
    let mut table = Table::new("count", &[index, counts.label.as_str()]);
    for (&k, &v) in &counts.values {
        table.push(vec![k.into(), v.into()]);
    }
    let text = match counts.values.len() {
        1 => format!("{}\n", table.rows[0][1].render()),
        _ => lines(&table),
    };
    Ok(Output { table, text: Some(text), failure: None })
}

fn tuple(xs: &[u64]) -> String {
    let parts: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

fn semigroup_row(s: &Semigroup) -> Vec<Cell> {
    let c = s.classify();
    vec![
        tuple(s.mu()).into(),
        s.to_string().into(),
        s.genus().into(),
        s.frobenius_signed().into(),
        s.embedding_dimension().into(),
        s.multiplicity().into(),
        c.symmetric.into(),
        c.pseudo_symmetric.into(),
        c.max_embedding_dim.into(),
    ]
}

const SEMIGROUP_COLUMNS: [&str; 9] =
    ["mu", "generators", "genus", "frobenius", "edim", "multiplicity", "symmetric", "pseudo_symmetric", "medim"];

pub fn cmd_enumerate(args: &EnumerateArgs, e: &Enumerator) -> Result<Output, Failure> {
    check_p(args.p)?;
    let list = e.enumerate_by_genus(args.p, args.genus, args.class)?;
    let mut table = Table::new("enumerate", &SEMIGROUP_COLUMNS);
    let mut text = String::new();
    for s in &list {
        let c = s.classify();
        let flags: Vec<&str> = [(c.symmetric, "sym"), (c.pseudo_symmetric, "psym"), (c.max_embedding_dim, "medim")]
            .into_iter()
            .filter_map(|(on, name)| on.then_some(name))
            .collect();
        text.push_str(&format!(
            "mu={} {} g={} F={} edim={} m={} {}\n",
            tuple(s.mu()),
            s,
            s.genus(),
            s.frobenius_signed(),
            s.embedding_dimension(),
            s.multiplicity(),
            flags.join(",")
        ));
        table.push(semigroup_row(s));
    }
    Ok(Output { table, text: Some(text), failure: None })
}

pub fn cmd_paths(cmd: &PathsCommand) -> Result<Output, Failure> {
    match *cmd {
        PathsCommand::Count { p, q } => {
            let sys = PathSystem::new(p, q)?;
            let l = paths::count_admissible(&sys);
            let mut table = Table::new("paths-count", &["p", "q", "L", "N"]);
            table.push(vec![sys.p().into(), sys.q().into(), l.into(), (l + 1).into()]);
            Ok(Output { table, text: Some(format!("{l}\n")), failure: None })
        }
        PathsCommand::List { p, q } => {
            let sys = PathSystem::new(p, q)?;
            let mut table = Table::new("paths-list", &["corners", "rows", "closed_gaps", "generators"]);
            for path in paths::admissible_paths(&sys) {
                let s = paths::semigroup_from_path(&sys, &path)?;
                table.push(vec![
                    path.to_string().into(),
                    tuple(path.rows()).into(),
                    closed_gaps(&sys, &path)?.into(),
                    s.to_string().into(),
                ]);
            }
            Ok(Output::table(table))
        }
        PathsCommand::VerifyRecursions { p, q_max } => {
            let report = paths::verify_path_recursions(p, q_max)?;
            let mut table = Table::new(
                "paths-verify-recursions",
                &["q", "N_pq", "S_pq", "P_pq", "top", "N", "N_prev", "Sym", "Sym_prev", "Psym", "Psym_prev", "ok"],
            );
            for r in &report.rows {
                table.push(vec![
                    r.q.into(),
                    r.paths.low.into(),
                    r.paths.low_symmetric.into(),
                    r.paths.low_pseudo_symmetric.into(),
                    r.paths.top.into(),
                    r.n.into(),
                    r.n_prev.into(),
                    r.sym.into(),
                    r.sym_prev.into(),
                    r.psym.into(),
                    r.psym_prev.into(),
                    r.holds().into(),
                ]);
            }
            let failure = report.failures().first().map(|r| format!("p = {p}, q = {}: {r:?}", r.q));
            let text = match &failure {
                None => format!("ok: {} values of q checked\n", report.rows.len()),
                Some(_) => lines(&table),
            };
            Ok(Output { table, text: Some(text), failure })
        }
    }
}

fn closed_gaps(sys: &PathSystem, path: &LatticePath) -> Result<String, Failure> {
    let mut gaps = path
        .points()
        .into_iter()
        .map(|(a, b)| sys.gap_of_point(a, b))
        .collect::<crate::error::Result<Vec<u64>>>()?;
    gaps.sort();
    let parts: Vec<String> = gaps.iter().map(u64::to_string).collect();
    Ok(parts.join(" "))
}

pub fn cmd_edges(p: u64) -> Result<Output, Failure> {
    let edges = edges_of_cone_star(p)?;
    let mut table = Table::new("edges", &["delta"]);
    for d in edges.iter() {
        table.push(vec![tuple(d).into()]);
    }
    Ok(Output { table, text: Some(format!("{edges}\n")), failure: None })
}

fn target_values(args: &FitArgs, e: &Enumerator) -> Result<Vec<num::BigRational>, Failure> {
    let p = args.p;
    let by_genus = |f: ClassFilter| -> Result<Vec<u64>, Failure> {
        (0..args.samples as u64).map(|g| e.count_by_genus(p, g, f).map_err(Failure::from)).collect()
    };
    let by_residue = |f: ClassFilter| -> Result<Vec<num::BigRational>, Failure> {
        let i = args
            .residue
            .ok_or_else(|| Failure::Usage("--residue is required for containment targets".into()))?;
        if i == 0 || i >= p || i.gcd(&p) != 1 {
            return Err(Failure::Usage(format!("--residue must be in 1..{p} and coprime to {p}")));
        }
        Ok(quasipoly::residue_sequence(p, i, args.samples, |q| e.count_containing(p, q, f))?)
    };
    Ok(match args.target {
        Target::G => quasipoly::to_rationals(&by_genus(ClassFilter::All)?),
        Target::G0 => quasipoly::to_rationals(&by_genus(ClassFilter::Medim)?),
        Target::Gsym => quasipoly::to_rationals(&by_genus(ClassFilter::Sym)?),
        Target::Gpsym => quasipoly::to_rationals(&by_genus(ClassFilter::Psym)?),
        Target::H => {
            let counts = by_genus(ClassFilter::All)?;
            let cumulative: Vec<u64> = counts
                .iter()
                .scan(0, |acc, &c| {
                    *acc += c;
                    Some(*acc)
                })
                .collect();
            quasipoly::to_rationals(&cumulative)
        }
        Target::N => by_residue(ClassFilter::All)?,
        Target::Sym => by_residue(ClassFilter::Sym)?,
        Target::Psym => by_residue(ClassFilter::Psym)?,
        Target::Medim => by_residue(ClassFilter::Medim)?,
    })
}

/// Candidate periods for `--period auto`: divisors of the period predicted
/// from the cone edges for genus targets, `1..=12` otherwise.
fn auto_periods(args: &FitArgs) -> Vec<usize> {
    let genus_target = matches!(args.target, Target::G | Target::G0 | Target::Gsym | Target::Gpsym | Target::H);
    if genus_target {
        if let Ok(n) = quasipoly::predict_quasi_period(args.p, &AlphaForm::ones(args.p)) {
            return (1..=n as usize).filter(|d| (n as usize).is_multiple_of(*d)).collect();
        }
    }
    (1..=12).collect()
}

pub fn cmd_fit(args: &FitArgs, e: &Enumerator) -> Result<Output, Failure> {
    check_p(args.p)?;
    let values = target_values(args, e)?;
    let periods = match args.period.fixed() {
        Some(0) => return Err(Failure::Usage("--period must be positive".into())),
        Some(n) => vec![n],
        None => auto_periods(args),
    };
    let mut fitted: Option<QuasiPolynomial> = None;
    let mut last_err = None;
    for &n in &periods {
        match quasipoly::fit_auto(&values, Some(n), args.degree.fixed(), n) {
            Ok(qp) => {
                fitted = Some(qp);
                break;
            }
            Err(err) => last_err = Some(err),
        }
    }
    let qp = match fitted {
        Some(qp) => qp,
        None if periods.len() == 1 => return Err(last_err.expect("one attempt was made").into()),
        None => {
            return Err(Error::NoFit {
                max_period: *periods.last().expect("non-empty"),
                max_degree: args.degree.fixed().unwrap_or(quasipoly::MAX_AUTO_DEGREE),
            }
            .into())
        }
    };
    let report = quasipoly::leading_coefficient_report(&qp);
    let mut table = Table::new("fit", &["residue", "period", "degree", "leading", "polynomial"]);
    for (i, c) in qp.constituents().iter().enumerate() {
        table.push(vec![
            i.into(),
            qp.period().into(),
            report.degree.into(),
            format_rational(&report.coefficients[i]).into(),
            c.to_string().into(),
        ]);
    }
    let leading = match report.common() {
        Some(c) => format!("leading {} (constant)", format_rational(c)),
        None => {
            let cs: Vec<String> = report.coefficients.iter().map(format_rational).collect();
            format!("leading [{}]", cs.join(", "))
        }
    };
    let text = format!("period {}, degree {}, {leading}\n{qp}\n", qp.period(), report.degree);
    Ok(Output { table, text: Some(text), failure: None })
}

fn seed_tables(e: &Enumerator, dir: &PathBuf) -> Result<(), Failure> {
    std::fs::create_dir_all(dir)?;
    for name in TABLE_NAMES {
        let table = named_table(name, e).expect("listed name")?;
        let path = dir.join(format!("{name}.csv"));
        std::fs::write(&path, table.to_csv())?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
