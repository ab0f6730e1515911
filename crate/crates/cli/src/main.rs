use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use griesmer_lab::bounds::{griesmer, report, BoundClass};
use griesmer_lab::construct::{
    counterexample_ck, dim3_optimal, hadamard_of_order, hadamard_recipe, levenshtein_code, simplex, simplex_sequence,
};
use griesmer_lab::identities::{lemma_suite, plotkin_griesmer_coincidence, LemmaRanges};
use griesmer_lab::search::{
    classify_optimal_four, verify_griesmer_family, verify_n4, verify_n8, FamilyStatus, LengthCheck, SearchMode,
    SearchQuery,
};
use griesmer_lab::{
    par, parse_code, write_code, Analysis, Budget, Code, Execution, SearchOptions, SearchStatus, SizeSpec,
};
use serde::Serialize;
use serde_json::json;

const THREADS_VAR: &str = "GRIESMER_LAB_THREADS";

#[derive(Parser)]
#[command(
    name = "griesmer-lab",
    version,
    about = "Length bounds, constructions and exhaustive searches for small codes"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run every search on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every applicable lower bound on the length.
    Bounds {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u64,
        #[command(flatten)]
        size: SizeArgs,
    },
    /// Build a code or Hadamard matrix.
    Construct {
        #[command(subcommand)]
        family: ConstructCmd,
    },
    /// Parameters of a code file and how it compares with the bounds.
    Analyze { path: PathBuf },
    /// Exhaustive search for short codes.
    Search(SearchArgs),
    /// Run one of the verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifyCmd,
    },
    /// Recompute a published table.
    Report {
        #[command(subcommand)]
        table: ReportCmd,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SizeArgs {
    /// Dimension: the code has q^k words.
    #[arg(long)]
    k: Option<u32>,
    /// Number of codewords.
    #[arg(long = "M", id = "M")]
    m: Option<u64>,
}

#[derive(Subcommand)]
enum ConstructCmd {
    Simplex {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Shortest binary linear code of dimension 3 and distance d.
    Dim3 {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Hadamard {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equidistant code read off a normalized Hadamard matrix.
    Levenshtein {
        #[arg(long)]
        order: usize,
        /// Number of words, at most the order.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simplex code followed by a Levenshtein code, 2^k words.
    Counterexample {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simplex code repeated h times.
    SimplexSeq {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    d: usize,
    #[arg(long = "M", id = "M", conflicts_with = "k")]
    m: Option<u64>,
    #[arg(long)]
    k: Option<u32>,
    /// Restrict to systematic codes (needs --k).
    #[arg(long, requires = "k")]
    systematic: bool,
    /// Largest length tried; the code length for --max-size.
    #[arg(long)]
    n_limit: usize,
    /// Find the largest code of length --n-limit; --M becomes a goal.
    #[arg(long, conflicts_with_all = ["systematic", "k"])]
    max_size: bool,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budget::default().node_limit)]
    budget_nodes: u64,
    #[arg(long, default_value_t = Budget::default().time_limit.as_secs())]
    budget_seconds: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { node_limit: self.budget_nodes, time_limit: Duration::from_secs(self.budget_seconds) }
    }
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Griesmer-sum identities and the Plotkin coincidence.
    Lemmas {
        #[arg(long, default_value_t = 12)]
        rmax: u32,
        #[arg(long, default_value_t = 12)]
        kmax: u32,
        #[arg(long, default_value_t = 512)]
        dmax: u64,
        #[arg(long, default_value_t = 16)]
        smax: u32,
    },
    /// Shortest binary codes with 4 words.
    N4 {
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Shortest binary codes with 8 words.
    N8 {
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Every optimal binary code with 4 words is linear.
    Optimal4 {
        #[arg(long, default_value_t = 6)]
        dmax: usize,
    },
    /// No systematic code beats the Griesmer value at any critical dimension.
    GriesmerFamily {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// The simplex/Levenshtein concatenation and its Griesmer gap.
    Counterexample {
        #[arg(long, default_value_t = 4)]
        k: u32,
    },
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Bound B against the Elias bound.
    Table1,
}

enum Failure {
    Usage(String),
    Construction(String),
    Parse(String),
    Budget(String),
    Assertion(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Construction(_) => 3,
            Failure::Parse(_) => 4,
            Failure::Budget(_) => 5,
            Failure::Assertion(_) => 6,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m)
            | Failure::Construction(m)
            | Failure::Parse(m)
            | Failure::Budget(m)
            | Failure::Assertion(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn construction(e: impl ToString) -> Failure {
    Failure::Construction(e.to_string())
}

/// Writes to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

struct Ctx {
    json: bool,
    execution: Execution,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        let body = if self.json {
            format!("{}\n", serde_json::to_string_pretty(value).expect("serializable"))
        } else {
            text()
        };
        out(&body);
    }

    fn options(&self, budget: &BudgetArgs) -> SearchOptions {
        SearchOptions { budget: budget.budget(), execution: self.execution }
    }
}

fn subscript(q: u32) -> String {
    q.to_string().chars().map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap()).collect()
}

fn class_name(class: BoundClass) -> &'static str {
    match class {
        BoundClass::Linear => "linear",
        BoundClass::Systematic => "systematic",
        BoundClass::Any => "any",
    }
}

fn bounds(ctx: &Ctx, q: u64, d: u64, size: &SizeArgs) -> Outcome {
    let spec = match (size.k, size.m) {
        (Some(k), None) => SizeSpec::Dimension(k),
        (None, Some(m)) => SizeSpec::Size(m),
        _ => return Err(usage("give exactly one of --k and --M")),
    };
    let r = report(q, d, spec).map_err(usage)?;
    ctx.emit(&r, || {
        let mut out = String::new();
        let size = match spec {
            SizeSpec::Dimension(k) => format!("k={k}"),
            SizeSpec::Size(m) => format!("M={m}"),
        };
        out.push_str(&format!("length bounds for q={q}, {size}, d={d}\n"));
        for e in &r.entries {
            out.push_str(&format!("  {:<16}{:>8}  {:<10}  {}\n", e.bound, e.value, class_name(e.class), e.reference));
        }
        out.push_str(&format!(
            "best: any codes {}, systematic {}, linear {}\n",
            r.best.any, r.best.systematic, r.best.linear
        ));
        if r.best.systematic < r.best.linear {
            out.push_str(&format!(
                "note: systematic codes are only known to need {} < {} (Griesmer)\n",
                r.best.systematic, r.best.linear
            ));
        }
        out
    });
    Ok(())
}

#[derive(Serialize)]
struct Comparison {
    bound: String,
    class: BoundClass,
    value: u64,
    observed: usize,
    violated_by: u64,
}

#[derive(Serialize)]
struct AnalyzeReport {
    analysis: Analysis,
    comparisons: Vec<Comparison>,
    summary: String,
}

fn analyze_code(code: &Code) -> Result<AnalyzeReport, Failure> {
    let analysis = code.analyze().map_err(|e| Failure::Parse(e.to_string()))?;
    let p = &analysis.params;
    let spec = match p.k {
        Some(k) if k >= 1 => SizeSpec::Dimension(k),
        _ => SizeSpec::Size(p.m as u64),
    };
    let comparisons: Vec<Comparison> = report(p.q as u64, p.d as u64, spec)
        .map(|r| r.entries)
        .unwrap_or_default()
        .into_iter()
        .map(|e| Comparison {
            violated_by: e.value.saturating_sub(p.n as u64),
            bound: e.bound,
            class: e.class,
            value: e.value,
            observed: p.n,
        })
        .collect();

    let mut flags = Vec::new();
    if analysis.linear {
        flags.push("linear");
    } else if analysis.systematic {
        flags.push("systematic");
    } else {
        flags.push("nonlinear");
    }
    if analysis.equidistant {
        flags.push("equidistant");
    }
    let mut summary = format!("({},{},{}){} {}", p.n, p.m, p.d, subscript(p.q), flags.join(" "));
    if let Some(g) = comparisons.iter().find(|c| c.bound == "griesmer") {
        let clause = if g.violated_by > 0 {
            format!("Griesmer({})={}: VIOLATED by {}", class_name(g.class), g.value, g.violated_by)
        } else if g.value == p.n as u64 {
            "meets Griesmer".to_string()
        } else {
            format!("Griesmer({})={}: {} above", class_name(g.class), g.value, p.n as u64 - g.value)
        };
        summary = format!("{summary}; {clause}");
    }
    Ok(AnalyzeReport { analysis, comparisons, summary })
}

fn render_analysis(r: &AnalyzeReport) -> String {
    let mut out = format!("{}\n", r.summary);
    if let Some(info) = &r.analysis.information_set {
        out.push_str(&format!("  information set {info:?}\n"));
    }
    for c in &r.comparisons {
        let status = if c.violated_by > 0 { format!("VIOLATED by {}", c.violated_by) } else { "ok".into() };
        out.push_str(&format!(
            "  {:<16}{:>8}  {:<10}  n={}  {}\n",
            c.bound,
            c.value,
            class_name(c.class),
            c.observed,
            status
        ));
    }
    out
}

fn analyze(ctx: &Ctx, path: &Path) -> Outcome {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let code = parse_code(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    let r = analyze_code(&code)?;
    ctx.emit(&r, || render_analysis(&r));
    Ok(())
}

/// With `--out` the file is written there and the report goes to stdout.
/// Without it the file goes to stdout and the text report to stderr, or,
/// with `--json`, the file is embedded in the JSON report.
fn construct(ctx: &Ctx, cmd: &ConstructCmd) -> Outcome {
    let (file, out, mut report, summary) = match cmd {
        ConstructCmd::Hadamard { order, out } => {
            let recipe = hadamard_recipe(*order).map_err(construction)?;
            let h = hadamard_of_order(*order).map_err(construction)?;
            let summary = format!("Hadamard matrix of order {} ({})\n", h.order(), recipe.provenance);
            (h.to_text(), out, json!({ "order": h.order(), "recipe": recipe }), summary)
        }
        ConstructCmd::Simplex { k, out } => code_output(simplex(*k).map(|g| g.span()), out)?,
        ConstructCmd::Dim3 { d, out } => code_output(dim3_optimal(*d).map(|g| g.span()), out)?,
        ConstructCmd::Levenshtein { order, size, out } => {
            code_output(hadamard_of_order(*order).and_then(|h| levenshtein_code(&h, size.unwrap_or(*order))), out)?
        }
        ConstructCmd::Counterexample { k, out } => code_output(counterexample_ck(*k), out)?,
        ConstructCmd::SimplexSeq { k, h, out } => code_output(simplex_sequence(*k, *h), out)?,
    };
    match out {
        Some(path) => fs::write(path, &file).map_err(|e| construction(format!("{}: {e}", path.display())))?,
        None if ctx.json => report["file"] = json!(file),
        None => {
            self::out(&file);
            let _ = io::stderr().lock().write_all(summary.as_bytes());
            return Ok(());
        }
    }
    ctx.emit(&report, || summary);
    Ok(())
}

type ConstructOutput<'a> = (String, &'a Option<PathBuf>, serde_json::Value, String);

fn code_output<E: ToString>(code: Result<Code, E>, out: &Option<PathBuf>) -> Result<ConstructOutput<'_>, Failure> {
    let code = code.map_err(construction)?;
    let r = analyze_code(&code)?;
    let summary = render_analysis(&r);
    Ok((write_code(&code), out, serde_json::to_value(&r).expect("serializable"), summary))
}

fn search(ctx: &Ctx, args: &SearchArgs) -> Outcome {
    let (mode, size) = if args.max_size {
        (SearchMode::MaxSize, args.m)
    } else if args.systematic {
        (SearchMode::MinLengthSystematic, args.k.map(u64::from))
    } else {
        let m = match (args.m, args.k) {
            (Some(m), None) => m,
            (None, Some(k)) => (args.q as u64).checked_pow(k).ok_or_else(|| usage("q^k is too large"))?,
            _ => return Err(usage("give exactly one of --M and --k")),
        };
        (SearchMode::MinLengthAny, Some(m))
    };
    let query = SearchQuery { q: args.q, mode, size, d: args.d, n_limit: args.n_limit, budget: args.budget.budget() };
    let r = query.run(ctx.execution).map_err(usage)?;
    ctx.emit(&r, || {
        let what = if args.max_size { "largest size" } else { "shortest length" };
        let mut out = match (r.status, r.value) {
            (SearchStatus::Found, Some(v)) => format!("found: {what} {v}\n"),
            (SearchStatus::Exhausted, _) => format!("exhausted: no code within n-limit {}\n", args.n_limit),
            (SearchStatus::BudgetExceeded, Some(v)) => format!("budget exceeded: best so far {v}\n"),
            (status, _) => format!("{status:?}\n"),
        };
        out.push_str(&format!("nodes {}, {} ms\n", r.nodes, r.duration_ms));
        if let Some(w) = &r.witness {
            out.push_str(&write_code(w));
        }
        out
    });
    if r.status == SearchStatus::BudgetExceeded {
        return Err(Failure::Budget(format!("search budget exhausted after {} nodes", r.nodes)));
    }
    Ok(())
}

/// Prints a suite's lines and converts failures into an exit status.
fn finish_suite(ctx: &Ctx, name: &str, lines: Vec<(bool, String)>, extra: serde_json::Value) -> Outcome {
    let failed: Vec<&String> = lines.iter().filter(|(ok, _)| !ok).map(|(_, l)| l).collect();
    let pass = failed.is_empty();
    let doc = json!({
        "suite": name,
        "pass": pass,
        "checks": lines.iter().map(|(ok, l)| json!({ "pass": ok, "detail": l })).collect::<Vec<_>>(),
        "details": extra,
    });
    ctx.emit(&doc, || {
        let mut out = String::new();
        for (ok, line) in &lines {
            out.push_str(&format!("{} {line}\n", if *ok { "PASS" } else { "FAIL" }));
        }
        out.push_str(&format!("{name}: {}\n", if pass { "pass" } else { "FAIL" }));
        out
    });
    if pass {
        Ok(())
    } else {
        Err(Failure::Assertion(format!("{name}: failing instance: {}", failed[0])))
    }
}

fn length_lines(checks: &[LengthCheck], label: &str) -> (Vec<(bool, String)>, bool) {
    let budget_hit = checks.iter().any(|c| c.result.status == SearchStatus::BudgetExceeded);
    let lines = checks
        .iter()
        .map(|c| {
            (
                c.pass,
                format!(
                    "{label}(d={}) expected {}, search {:?} {:?}",
                    c.d, c.expected, c.result.status, c.result.value
                ),
            )
        })
        .collect();
    (lines, budget_hit)
}

fn verify(ctx: &Ctx, suite: &VerifyCmd) -> Outcome {
    match suite {
        VerifyCmd::Lemmas { rmax, kmax, dmax, smax } => {
            let checks = lemma_suite(LemmaRanges { k_max: *kmax, d_max: *dmax, r_max: *rmax, s_max: *smax });
            let coincidence = plotkin_griesmer_coincidence(&[2, 3, 4, 5], 6, 8);
            let lines = checks
                .iter()
                .chain(std::iter::once(&coincidence))
                .map(|c| {
                    let detail =
                        if c.failures.is_empty() { String::new() } else { format!(" failures {:?}", c.failures) };
                    (c.pass(), format!("{} ({} instances){detail}", c.name, c.instances))
                })
                .collect();
            finish_suite(ctx, "lemmas", lines, json!(null))
        }
        VerifyCmd::N4 { dmax, budget } | VerifyCmd::N8 { dmax, budget } => {
            let (checks, label) = match suite {
                VerifyCmd::N4 { .. } => (verify_n4(*dmax, &ctx.options(budget)), "N2_4"),
                _ => (verify_n8(*dmax, &ctx.options(budget)), "N2_8"),
            };
            let checks = checks.map_err(usage)?;
            let (lines, budget_hit) = length_lines(&checks, label);
            if budget_hit {
                return Err(Failure::Budget(format!("{label}: search budget exhausted")));
            }
            finish_suite(ctx, label, lines, serde_json::to_value(&checks).expect("serializable"))
        }
        VerifyCmd::Optimal4 { dmax } => {
            let mut lines = Vec::new();
            let mut reports = Vec::new();
            for d in 1..=*dmax {
                let r = classify_optimal_four(d, ctx.execution).map_err(usage)?;
                lines.push((
                    r.all_linear,
                    format!(
                        "d={d}: n={}, {} codes with the zero word, {} up to equivalence, all linear: {}",
                        r.n, r.enumerated, r.count_up_to_equivalence, r.all_linear
                    ),
                ));
                reports.push(r);
            }
            if lines.iter().all(|(ok, _)| *ok) {
                lines.push((true, "all optimal size-4 codes linear".into()));
            }
            finish_suite(ctx, "optimal4", lines, serde_json::to_value(&reports).expect("serializable"))
        }
        VerifyCmd::GriesmerFamily { q, d, kmax, budget } => {
            let r = verify_griesmer_family(*q, *d, *kmax, &ctx.options(budget)).map_err(usage)?;
            let lines: Vec<(bool, String)> = r
                .entries
                .iter()
                .map(|e| {
                    let ok = e.outcome == FamilyStatus::Confirmed;
                    let status = match &e.outcome {
                        FamilyStatus::Confirmed => "confirmed".to_string(),
                        FamilyStatus::Violated { witness } => {
                            format!("VIOLATED by a code of length {}", witness.as_ref().map_or(0, |w| w.n()))
                        }
                        FamilyStatus::BudgetExceeded => "budget exceeded".into(),
                        FamilyStatus::OutOfScope => "out of scope".into(),
                    };
                    (ok, format!("q={q} d={d} k={}: griesmer {}, {status} ({} nodes)", e.k, e.griesmer, e.nodes))
                })
                .collect();
            if r.entries.iter().any(|e| e.outcome == FamilyStatus::BudgetExceeded) {
                ctx.emit(&r, || lines.iter().map(|(_, l)| format!("{l}\n")).collect());
                return Err(Failure::Budget("griesmer-family: search budget exhausted".into()));
            }
            finish_suite(ctx, "griesmer-family", lines, serde_json::to_value(&r).expect("serializable"))
        }
        VerifyCmd::Counterexample { k } => {
            let code = counterexample_ck(*k).map_err(construction)?;
            let a = code.analyze().map_err(construction)?;
            let s = 1usize << k;
            let g = griesmer(2, *k, a.params.d as u64);
            let n = a.params.n as u64;
            let mut lines = vec![
                (
                    (a.params.n, a.params.m, a.params.d) == (2 * s + 2, s, s + 2),
                    format!("parameters ({},{},{})", a.params.n, a.params.m, a.params.d),
                ),
                (a.equidistant, format!("equidistant: {}", a.equidistant)),
                (a.systematic, format!("systematic on {:?}", a.information_set.clone().unwrap_or_default())),
                (g as i64 - n as i64 == *k as i64 - 3, format!("griesmer {g}, gap {}", g as i64 - n as i64)),
            ];
            if *k > 3 {
                lines.push((!a.linear, format!("nonlinear: {}", !a.linear)));
                lines.push((n < g, format!("{n} < {g}")));
            }
            finish_suite(ctx, "counterexample", lines, serde_json::to_value(&a).expect("serializable"))
        }
    }
}

fn report_cmd(ctx: &Ctx, table: &ReportCmd) -> Outcome {
    match table {
        ReportCmd::Table1 => {
            let doc = griesmer_lab_cli::table1().map_err(usage)?;
            ctx.emit(&doc, || doc.render());
            if let Some(m) = doc.mismatches.first() {
                return Err(Failure::Assertion(m.clone()));
            }
            Ok(())
        }
    }
}

fn configure_threads() -> Outcome {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| usage(format!("{THREADS_VAR} must be a positive integer, got {value:?}")))?;
    par::configure_threads(threads).map_err(usage)
}

fn run(cli: Cli) -> Outcome {
    configure_threads()?;
    let ctx =
        Ctx { json: cli.json, execution: if cli.sequential { Execution::Sequential } else { Execution::Parallel } };
    match &cli.command {
        Command::Bounds { q, d, size } => bounds(&ctx, *q, *d, size),
        Command::Construct { family } => construct(&ctx, family),
        Command::Analyze { path } => analyze(&ctx, path),
        Command::Search(args) => search(&ctx, args),
        Command::Verify { suite } => verify(&ctx, suite),
        Command::Report { table } => report_cmd(&ctx, table),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
