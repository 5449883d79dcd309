use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use extcrit::families::{Family, FamilySpec};
use extcrit::properties::{
    is_balanced_bipartite_critical_within, is_factor_critical_within, is_half_extendable_within,
    is_k_extendable_within, is_minimal_within, Budget, Property, PropertyError, Verdict,
};
use extcrit::verifier::{
    self, parse_filters, scan_minimal_degrees, verify_all, verify_claim, CorpusSpec, Report,
    ScanMode, ScanOptions, BUILTIN_MAX_ORDER, DEFAULT_SAMPLE_BUDGET,
};
use extcrit::Graph;

mod expr;

/// Counterexamples echoed to stdout per report; the JSONL file has all.
const SHOWN_PER_REPORT: usize = 20;

#[derive(Parser)]
#[command(name = "extcrit", version, about = "Matching extendability and factor-criticality toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property for one graph or a batch of graph6 lines.
    Check(CheckArgs),
    /// Emit a member of an extremal family or its tightness witness.
    Family(FamilyArgs),
    /// Check registered claims over a corpus.
    Verify(VerifyArgs),
    /// Minimum-degree scan of minimal graphs.
    Scan(ScanArgs),
    /// Build a graph from a prefix expression and print its graph6.
    Encode(EncodeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Extendable,
    HalfExtendable,
    FactorCritical,
    MinimalExtendable,
    MinimalFactorCritical,
    BalancedBipartite,
}

impl PropertyArg {
    fn takes_n(self) -> bool {
        matches!(self, PropertyArg::FactorCritical | PropertyArg::MinimalFactorCritical)
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("param").required(true).args(["k", "n"])))]
#[command(group(ArgGroup::new("source").args(["graph6", "input"])))]
struct CheckArgs {
    #[arg(long, value_enum)]
    property: PropertyArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// A single graph; without this or --input, graph6 lines are read from stdin.
    #[arg(long)]
    graph6: Option<String>,
    /// File of graph6 lines.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Cap on matchings or vertex subsets examined per graph.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Witness,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "graph6")]
    emit: Emit,
}

#[derive(Args)]
#[command(group(ArgGroup::new("corpus_source").required(true).args(["builtin", "corpus"])))]
struct CorpusArgs {
    /// Every labeled graph of this order, or of a range such as `1-8`.
    #[arg(long)]
    builtin: Option<String>,
    /// One or more graph6 files.
    #[arg(long, num_args = 1..)]
    corpus: Vec<PathBuf>,
    /// Comma-separated: connected, even-order, odd-order, non-bipartite, min-degree>=d.
    #[arg(long, default_value = "")]
    filters: String,
    /// JSON Lines report destination.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: logical cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Record wall time in the report (makes it non-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id, or `all`.
    #[arg(long)]
    claim: String,
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, default_value_t = DEFAULT_SAMPLE_BUDGET)]
    sample_budget: u64,
    /// Only these parameter values (repeatable).
    #[arg(long)]
    param: Vec<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanModeArg {
    MinimalExtendable,
    MinimalFactorCritical,
}

#[derive(Args)]
#[command(group(ArgGroup::new("param").required(true).args(["k", "n"])))]
struct ScanArgs {
    #[arg(long, value_enum)]
    mode: ScanModeArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    corpus: CorpusArgs,
}

#[derive(Args)]
struct EncodeArgs {
    /// Expression tokens, e.g. `join union K 3 K 1 union K 3 K 1`.
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
    expr: Vec<String>,
}

/// A failure that maps to exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => check(a),
        Command::Family(a) => family(a),
        Command::Verify(a) => verify(a),
        Command::Scan(a) => scan(a),
        Command::Encode(a) => encode(a),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn decide(g: &Graph, property: PropertyArg, param: usize, budget: &mut Budget) -> Result<Verdict, PropertyError> {
    match property {
        PropertyArg::Extendable => is_k_extendable_within(g, param, budget),
        PropertyArg::HalfExtendable => is_half_extendable_within(g, param, budget),
        PropertyArg::FactorCritical => is_factor_critical_within(g, param, budget),
        PropertyArg::MinimalExtendable => {
            is_minimal_within(g, Property::Extendable(param), budget)
        }
        PropertyArg::MinimalFactorCritical => {
            is_minimal_within(g, Property::FactorCritical(param), budget)
        }
        PropertyArg::BalancedBipartite => is_balanced_bipartite_critical_within(g, param, budget),
    }
}

fn check(a: CheckArgs) -> Result<ExitCode, Usage> {
    let param = match (a.property.takes_n(), a.k, a.n) {
        (true, None, Some(n)) => n,
        (false, Some(k), None) => k,
        (true, _, _) => return Err(Usage("this property takes --n".into())),
        (false, _, _) => return Err(Usage("this property takes --k".into())),
    };
    let new_budget = || a.budget.map_or_else(Budget::unlimited, Budget::new);

    if let Some(text) = &a.graph6 {
        let g = Graph::from_graph6(text.trim())?;
        let verdict = decide(&g, a.property, param, &mut new_budget())?;
        println!("{verdict}");
        return Ok(if verdict.holds { ExitCode::SUCCESS } else { ExitCode::from(1) });
    }

    let reader: Box<dyn BufRead> = match &a.input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let (mut any_fail, mut any_error, mut seen) = (false, false, 0usize);
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        seen += 1;
        let verdict = Graph::from_graph6(text)
            .map_err(|e| e.to_string())
            .and_then(|g| decide(&g, a.property, param, &mut new_budget()).map_err(|e| e.to_string()));
        match verdict {
            Ok(v) => {
                any_fail |= !v.holds;
                writeln!(out, "{text}: {v}")?;
            }
            Err(e) => {
                any_error = true;
                writeln!(out, "{text}: error: {e}")?;
                eprintln!("line {}: {e}", i + 1);
            }
        }
    }
    if seen == 0 {
        return Err(Usage("no graphs on input".into()));
    }
    Ok(match (any_error, any_fail) {
        (true, _) => ExitCode::from(2),
        (false, true) => ExitCode::from(1),
        (false, false) => ExitCode::SUCCESS,
    })
}

fn family(a: FamilyArgs) -> Result<ExitCode, Usage> {
    let spec = FamilySpec::new(a.family, a.k)?;
    match a.emit {
        Emit::Graph6 => println!("{}", spec.graph().to_graph6()),
        Emit::Witness => println!("{}", spec.tightness_witness()),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_orders(text: &str) -> Result<std::ops::RangeInclusive<usize>, Usage> {
    let bad = || Usage(format!("--builtin expects an order or a range like 1-8, got {text:?}"));
    let (lo, hi) = match text.split_once('-') {
        Some((lo, hi)) => (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi || hi > BUILTIN_MAX_ORDER {
        return Err(Usage(format!(
            "--builtin range {text:?} must be ascending and at most {BUILTIN_MAX_ORDER}"
        )));
    }
    Ok(lo..=hi)
}

impl CorpusArgs {
    fn spec(&self) -> Result<CorpusSpec, Usage> {
        let base = match &self.builtin {
            Some(text) => CorpusSpec::builtin_range(parse_orders(text)?),
            None => CorpusSpec::graph6_files(self.corpus.iter().cloned()),
        };
        Ok(base.with_filters(parse_filters(&self.filters)?))
    }

    fn options(&self) -> ScanOptions {
        ScanOptions {
            threads: self.threads,
            ..ScanOptions::default()
        }
    }

    fn write_reports(&self, reports: &[Report]) -> Result<(), Usage> {
        let Some(path) = &self.out else {
            return Ok(());
        };
        let file = File::create(path).map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))?;
        let mut w = BufWriter::new(file);
        for r in reports {
            r.write_jsonl(&mut w, self.timings)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn print_report(r: &Report) {
    println!("{}", r.summary_line());
    for c in r.counterexamples.iter().take(SHOWN_PER_REPORT) {
        let param = c.param.map_or(String::new(), |p| format!(" param={p}"));
        println!("  counterexample {}{param}: {} {}", c.graph6, c.witness_kind, c.witness);
    }
    if r.counterexamples.len() > SHOWN_PER_REPORT {
        println!("  ... {} more", r.counterexamples.len() - SHOWN_PER_REPORT);
    }
    if let Some(hist) = &r.delta_histogram {
        let parts: Vec<String> = hist.iter().map(|(d, n)| format!("δ={d}: {n}")).collect();
        println!("  minimum degrees: {}", if parts.is_empty() { "none".into() } else { parts.join(", ") });
    }
    for f in r.findings.iter().take(SHOWN_PER_REPORT) {
        println!("  notable finding {}: {}", f.graph6, f.witness);
    }
}

fn verify(a: VerifyArgs) -> Result<ExitCode, Usage> {
    verifier::self_test().map_err(|e| Usage(format!("claim registry self-test failed: {e}")))?;
    let corpus = a.corpus.spec()?;
    let mut opts = a.corpus.options();
    opts.sample_budget = a.sample_budget;
    if !a.param.is_empty() {
        opts.params = Some(a.param.clone());
    }
    let reports = if a.claim.eq_ignore_ascii_case("all") {
        verify_all(&corpus, &opts)?
    } else {
        vec![verify_claim(&a.claim, &corpus, &opts)?]
    };
    for r in &reports {
        print_report(r);
    }
    a.corpus.write_reports(&reports)?;
    let failed = reports.iter().any(|r| !r.passed());
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn scan(a: ScanArgs) -> Result<ExitCode, Usage> {
    let mode = match (a.mode, a.k, a.n) {
        (ScanModeArg::MinimalExtendable, Some(k), None) => ScanMode::MinimalExtendable(k),
        (ScanModeArg::MinimalFactorCritical, None, Some(n)) => ScanMode::MinimalFactorCritical(n),
        (ScanModeArg::MinimalExtendable, ..) => return Err(Usage("minimal-extendable takes --k".into())),
        (ScanModeArg::MinimalFactorCritical, ..) => {
            return Err(Usage("minimal-factor-critical takes --n".into()))
        }
    };
    let report = scan_minimal_degrees(&a.corpus.spec()?, mode, &a.corpus.options())?;
    print_report(&report);
    a.corpus.write_reports(std::slice::from_ref(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn encode(a: EncodeArgs) -> Result<ExitCode, Usage> {
    let mut src = a.expr.join(" ");
    if src.trim() == "-" {
        src.clear();
        io::stdin().read_to_string(&mut src)?;
    }
    let g = expr::evaluate(&src)?;
    println!("{}", g.to_graph6());
    Ok(ExitCode::SUCCESS)
}
