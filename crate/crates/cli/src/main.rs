//! `whipple` command-line front end.
//!
//! Exit status: 0 when every checked case passes, 1 when any fails, 2 on a
//! usage or configuration error. Tokens in `WHIPPLE_OPTS` are read as if
//! they preceded the command-line arguments, so explicit flags win.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use whipple::closed_forms::{aux_eval, Aux};
use whipple::report::{render, Format};
use whipple::verifier::{
    default_x_grid, mutation_sensitivity, verify_all, GridSpec, PPolicy, DEFAULT_N_MAX,
    DEFAULT_P_MAX,
};
use whipple::{IdentityId, Params, Rational};

#[derive(Parser, Debug)]
#[command(name = "whipple", version, about = "Exact verification of harmonic-number summation identities")]
#[command(args_override_self = true)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Largest n on the grid
    #[arg(long, global = true, default_value_t = DEFAULT_N_MAX)]
    n_max: u64,
    /// Largest p tried for the corollaries
    #[arg(long, global = true, default_value_t = DEFAULT_P_MAX)]
    p_max: u64,
    /// `default`, or a file of rationals separated by whitespace or commas
    #[arg(long, global = true, default_value = "default")]
    x_grid: String,
    /// Worker threads; results do not depend on it
    #[arg(long, global = true, default_value_t = default_jobs(), value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities over the grid against the brute-force oracle
    #[command(group(ArgGroup::new("which").required(true).args(["all", "identity"])))]
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        identity: Vec<IdentityId>,
    },
    /// Evaluate one identity, or one auxiliary expression, at a point
    #[command(group(ArgGroup::new("what").required(true).args(["identity", "aux"])))]
    Eval {
        #[arg(long)]
        identity: Option<IdentityId>,
        /// Auxiliary expression U, V, W (argument x) or A..E (argument p)
        #[arg(long, conflicts_with_all = ["p", "y", "side"])]
        aux: Option<Aux>,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Both sides of one identity for n = 0..=n-max at fixed p, x, y
    Table {
        #[arg(long)]
        identity: IdentityId,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        y: Option<Rational>,
    },
    /// List identity IDs with their left-hand sides
    List,
    /// Mutation sensitivity plus hand-derived spot values
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
    Both,
}

fn default_jobs() -> u64 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u64)
}

/// One evaluated point, shared by `eval` and `table`.
#[derive(Serialize)]
struct Row {
    identity: String,
    n: u64,
    p: Option<u64>,
    x: Option<Rational>,
    y: Option<Rational>,
    lhs: Option<Rational>,
    rhs: Option<Rational>,
    equal: Option<bool>,
    note: Option<String>,
}

impl Row {
    fn new(identity: String, params: &Params) -> Self {
        Row {
            identity,
            n: params.n,
            p: params.p,
            x: params.x.clone(),
            y: params.y.clone(),
            lhs: None,
            rhs: None,
            equal: None,
            note: None,
        }
    }

    fn text(&self) -> String {
        let params = Params { n: self.n, p: self.p, x: self.x.clone(), y: self.y.clone() };
        let mut s = format!("{} {params}", self.identity);
        if let Some(l) = &self.lhs {
            s += &format!("  lhs={l}");
        }
        if let Some(r) = &self.rhs {
            s += &format!("  rhs={r}");
        }
        if let Some(e) = self.equal {
            s += if e { "  equal" } else { "  DIFFER" };
        }
        if let Some(note) = &self.note {
            s += &format!("  skipped: {note}");
        }
        s
    }

    fn failed(&self) -> bool {
        self.equal == Some(false)
    }
}

fn render_rows(rows: &[Row], format: OutputFormat) -> Result<String> {
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(rows)? + "\n",
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        OutputFormat::Text => rows.iter().map(|r| r.text() + "\n").collect(),
    })
}

fn read_x_grid(spec: &str) -> Result<Vec<Rational>> {
    if spec == "default" {
        return Ok(default_x_grid());
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("x grid `{spec}` is neither `default` nor a readable file"))?;
    let values = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().with_context(|| format!("in {}", path.display())))
        .collect::<Result<Vec<_>>>()?;
    if values.is_empty() {
        bail!("x grid file {} has no values", path.display());
    }
    Ok(values)
}

fn grid(g: &Global) -> Result<GridSpec> {
    Ok(GridSpec::new(0, g.n_max, PPolicy::AllValid { p_max: g.p_max }, read_x_grid(&g.x_grid)?))
}

fn params(n: u64, p: Option<u64>, x: Option<Rational>, y: Option<Rational>) -> Params {
    Params { n, p, x, y }
}

enum Verdict {
    Pass,
    Fail,
}

fn eval_identity(id: IdentityId, params: &Params, side: Side) -> Result<Row> {
    let mut row = Row::new(id.name().to_string(), params);
    if side != Side::Rhs {
        row.lhs = Some(id.lhs(params).with_context(|| format!("{id} lhs at {params}"))?);
    }
    if side != Side::Lhs {
        row.rhs = Some(id.rhs(params).with_context(|| format!("{id} rhs at {params}"))?);
    }
    if let (Some(l), Some(r)) = (&row.lhs, &row.rhs) {
        row.equal = Some(l == r);
    }
    Ok(row)
}

fn eval_aux(aux: Aux, n: u64, x: Option<Rational>) -> Result<Row> {
    let Some(arg) = x else {
        bail!("--aux {aux} needs its argument in --x (a rational for U, V, W; an integer p for A..E)");
    };
    let value = aux_eval(aux, n, &arg)?;
    let p = if aux.takes_x() { None } else { Some(arg.to_string().parse::<u64>()?) };
    let x = aux.takes_x().then_some(arg);
    let mut row = Row::new(aux.to_string(), &params(n, p, x, None));
    row.rhs = Some(value);
    Ok(row)
}

fn table(id: IdentityId, n_max: u64, p: Option<u64>, x: Option<Rational>, y: Option<Rational>) -> Result<Vec<Row>> {
    // Reject a wrongly shaped point once, up front, rather than per row.
    let probe = params(0, p, x.clone(), y.clone());
    if let Err(e) = id.lhs(&probe) {
        if !e.is_skip() || e.to_string().contains("required") {
            bail!("{id}: {e}");
        }
    }
    Ok((0..=n_max)
        .map(|n| {
            let pt = params(n, p, x.clone(), y.clone());
            eval_identity(id, &pt, Side::Both).unwrap_or_else(|e| {
                let mut row = Row::new(id.name().to_string(), &pt);
                row.note = Some(e.root_cause().to_string());
                row
            })
        })
        .collect())
}

#[derive(Serialize)]
struct ListEntry {
    identity: IdentityId,
    description: String,
}

fn list(format: OutputFormat) -> Result<String> {
    let entries: Vec<ListEntry> = IdentityId::ALL
        .iter()
        .map(|&identity| ListEntry { identity, description: identity.description() })
        .collect();
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(&entries)? + "\n",
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for e in &entries {
                w.serialize(e)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        OutputFormat::Text => entries
            .iter()
            .map(|e| format!("{:<11} {}\n", e.identity, e.description))
            .collect(),
    })
}

#[derive(Serialize)]
struct SpotCheck {
    identity: IdentityId,
    params: String,
    expected: Rational,
    lhs: Rational,
    rhs: Rational,
    passed: bool,
}

#[derive(Serialize)]
struct SelfTest {
    mutations: Vec<whipple::verifier::MutationOutcome>,
    spot_values: Vec<SpotCheck>,
    passed: bool,
}

fn selftest(grid: &GridSpec, jobs: usize) -> Result<SelfTest> {
    let q = Rational::frac;
    let spots = [
        (IdentityId::ThmH2T0, Params::nx(1, q(1, 2)), q(-16, 27)),
        (IdentityId::CorA, Params::n(2), q(3, 2)),
        (IdentityId::CorK, Params::n(3), q(-13, 100)),
    ];
    let mut spot_values = Vec::new();
    for (identity, pt, expected) in spots {
        let lhs = identity.lhs(&pt)?;
        let rhs = identity.rhs(&pt)?;
        let passed = lhs == expected && rhs == expected;
        spot_values.push(SpotCheck { identity, params: pt.to_string(), expected, lhs, rhs, passed });
    }
    let mutations = mutation_sensitivity(grid, jobs)?;
    let passed = mutations.iter().all(|m| m.caught()) && spot_values.iter().all(|s| s.passed);
    Ok(SelfTest { mutations, spot_values, passed })
}

fn selftest_text(t: &SelfTest) -> String {
    let mut out = String::new();
    for m in &t.mutations {
        let at = m.minimal.as_ref().map_or("SURVIVED".to_string(), |c| format!("smallest {}", c.params()));
        out += &format!("mutation {:<22} {:<11} {:>5} failing  {at}\n", m.mutation, m.target, m.failed_cases);
    }
    for s in &t.spot_values {
        let verdict = if s.passed { "ok" } else { "FAIL" };
        out += &format!("spot     {:<11} {:<14} lhs={} rhs={} expected={}  {verdict}\n", s.identity, s.params, s.lhs, s.rhs, s.expected);
    }
    out += if t.passed { "selftest: passed\n" } else { "selftest: FAILED\n" };
    out
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    let g = &cli.global;
    let jobs = g.jobs as usize;
    let (text, verdict) = match cli.command {
        Command::Verify { all, identity } => {
            let mut grid = grid(g)?;
            if !all {
                grid = grid.with_identities(identity);
            }
            let report = verify_all(&grid, jobs)?;
            let verdict = if report.passed() { Verdict::Pass } else { Verdict::Fail };
            (render(&report, g.format.into())?, verdict)
        }
        Command::Eval { identity, aux, n, p, x, y, side } => {
            let row = match (identity, aux) {
                (Some(id), _) => eval_identity(id, &params(n, p, x, y), side)?,
                (None, Some(a)) => eval_aux(a, n, x)?,
                (None, None) => unreachable!("clap requires one of --identity, --aux"),
            };
            let verdict = if row.failed() { Verdict::Fail } else { Verdict::Pass };
            (render_rows(&[row], g.format)?, verdict)
        }
        Command::Table { identity, p, x, y } => {
            let rows = table(identity, g.n_max, p, x, y)?;
            let verdict = if rows.iter().any(Row::failed) { Verdict::Fail } else { Verdict::Pass };
            (render_rows(&rows, g.format)?, verdict)
        }
        Command::List => (list(g.format)?, Verdict::Pass),
        Command::Selftest => {
            let t = selftest(&grid(g)?, jobs)?;
            let text = match g.format {
                OutputFormat::Text => selftest_text(&t),
                OutputFormat::Json => serde_json::to_string_pretty(&t)? + "\n",
                OutputFormat::Csv => bail!("selftest has no CSV form; use text or json"),
            };
            (text, if t.passed { Verdict::Pass } else { Verdict::Fail })
        }
    };
    emit(&text, g.output.as_deref())?;
    Ok(verdict)
}

fn args() -> Vec<String> {
    let mut argv = std::env::args();
    let mut out: Vec<String> = argv.next().into_iter().collect();
    if let Ok(opts) = std::env::var("WHIPPLE_OPTS") {
        out.extend(opts.split_whitespace().map(str::to_string));
    }
    out.extend(argv);
    out
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(args()) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
