//! `parkav`: exact counts, oracle checks and renderings from the command line.
//!
//! Exit codes: 0 success, 2 bad parameters, 3 a check or oracle disagreed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use parkav_core::asymptotics::{growth_report, limit_for};
use parkav_core::closed_forms::{
    monotone_word_count, pf321_closed, pf_bruteforce_count_bounded, pf_nonmonotone_count,
    sharp_sylvester_class_count_det, sylvester_class_count_det, MonotoneSpec, NonmonotonePattern,
};
use parkav_core::lattice_paths::{
    ascent_comp, descent_comp, dyck_by_ascent_bruteforce, dyck_by_ascent_det, dyck_to_family, enumerate_dyck,
    family_to_dyck, lgv_families, render_family, render_path, render_rothe, rothe_dyck, DyckPath,
};
use parkav_core::oracle::{monotone_word_bruteforce, sharp_class_count_bfs, sylv_class_count_bfs};
use parkav_core::patterns::{parse_letters, MonotoneMode};
use parkav_core::sylvester::{bst_of, sharp_classes, sylv_classes, ClassTable};
use parkav_core::tableaux::rsk;
use parkav_core::verify::{run_suites, Suite, VerifyOptions};
use parkav_core::{BigCount, Composition, Error, Permutation, WeakComposition, Word};

const EXIT_USAGE: u8 = 2;
const EXIT_CHECK: u8 = 3;

/// Composition sums above this size need `--allow-large`.
const LARGE_N: usize = 24;
/// Largest `n` for brute-force parking function oracles, fast and slow tier.
const PF_ORACLE_FAST: usize = 6;
const PF_ORACLE_SLOW: usize = 7;
/// Largest `k^n` filtered by the word oracle, fast and slow tier.
const WORD_ORACLE_FAST: u64 = 1 << 20;
const WORD_ORACLE_SLOW: u64 = 1 << 26;

#[derive(Parser)]
#[command(
    name = "parkav",
    version,
    about = "Pattern-avoiding parking functions, words and lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print a JSON envelope.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Print CSV.
    #[arg(long, global = true)]
    csv: bool,

    /// Admit the slow oracle tier.
    #[arg(long, global = true)]
    slow: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Exact count of one family.
    Count(CountArgs),
    /// Run invariant suites against their oracles.
    Verify(VerifyArgs),
    /// Exact counts and n-th roots for monotone patterns.
    Growth(GrowthArgs),
    /// Human-readable renderings.
    Show(ShowArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Pf321,
    PfNonmonotone,
    WordsMonotone,
    SylvClasses,
    DyckAscent,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Dec,
    Inc,
}

impl Direction {
    fn mode(self) -> MonotoneMode {
        match self {
            Direction::Dec => MonotoneMode::StrictDecreasing,
            Direction::Inc => MonotoneMode::WeakIncreasing,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// 132, 231, 213 or 312.
    #[arg(long)]
    pattern: Option<String>,
    /// Alphabet size for words.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long, value_enum, default_value = "dec")]
    dir: Direction,
    /// Length of the monotone pattern.
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Forbid only strictly increasing subwords instead of matching in std(w).
    #[arg(long)]
    raw: bool,
    /// Packed content or composition, e.g. 2,2,1.
    #[arg(long, alias = "alpha")]
    content: Option<String>,
    /// Count #-Sylvester classes.
    #[arg(long)]
    sharp: bool,
    /// Also run the brute force and compare.
    #[arg(long)]
    oracle: bool,
    /// Allow composition sums with n > 24.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// pf, words, sylvester, lgv, rsk, growth or all.
    suite: String,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Random simplex points per dimension in the growth suite.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
}

#[derive(Args)]
struct GrowthArgs {
    #[arg(long, value_enum, default_value = "dec")]
    dir: Direction,
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Comma-separated list of n.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Use n = 1..=N instead of a list.
    #[arg(long)]
    n_max: Option<usize>,
    /// Print only the exact limit for k = r - 1.
    #[arg(long)]
    limit_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Rsk,
    Bst,
    Dyck,
    Rothe,
    Classes,
}

#[derive(Args)]
struct ShowArgs {
    object: Object,
    /// Word, permutation, path (U/D) or content.
    input: String,
    /// #-Sylvester classes instead of Sylvester classes.
    #[arg(long)]
    sharp: bool,
    /// List every class member.
    #[arg(long)]
    members: bool,
}

#[derive(Serialize)]
struct Envelope {
    command: String,
    parameters: BTreeMap<String, String>,
    value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
    elapsed_ms: u64,
}

/// What a command produced, before formatting.
struct Output {
    command: &'static str,
    parameters: BTreeMap<String, String>,
    value: Value,
    oracle: Option<String>,
    agreement: Option<bool>,
    text: String,
    csv: Option<String>,
    failed: bool,
}

impl Output {
    fn new(command: &'static str, value: Value, text: String) -> Self {
        Output {
            command,
            parameters: BTreeMap::new(),
            value,
            oracle: None,
            agreement: None,
            text,
            csv: None,
            failed: false,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_composition(s: &str) -> Result<Composition, Error> {
    let parts = parse_letters(s)?.into_iter().map(|x| x as usize).collect();
    Composition::new(parts)
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Error> {
    value.ok_or_else(|| usage(format!("--{flag} is required for this family")))
}

fn pf_oracle_bound(slow: bool) -> usize {
    if slow {
        PF_ORACLE_SLOW
    } else {
        PF_ORACLE_FAST
    }
}

fn count_output(value: BigCount, oracle: Option<BigCount>) -> Output {
    let mut text = value.to_string();
    let agreement = oracle.as_ref().map(|o| o == &value);
    if let Some(o) = &oracle {
        let verdict = if agreement == Some(true) {
            "agree"
        } else {
            "DISAGREE"
        };
        write!(text, "\noracle {o} {verdict}").unwrap();
    }
    Output {
        oracle: oracle.map(|o| o.to_string()),
        agreement,
        failed: agreement == Some(false),
        ..Output::new("count", Value::String(value.to_string()), text)
    }
}

fn cmd_count(a: &CountArgs, slow: bool) -> Result<Output, Error> {
    let out = match a.family {
        Family::Pf321 => {
            let n = require(a.n, "n")?;
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            let oracle = if a.oracle {
                let sigma: Permutation = "321".parse()?;
                Some(pf_bruteforce_count_bounded(n, &sigma, pf_oracle_bound(slow))?)
            } else {
                None
            };
            count_output(pf321_closed(n as u64), oracle).param("n", n)
        }
        Family::PfNonmonotone => {
            let n = require(a.n, "n")?;
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            if n > LARGE_N && !a.allow_large {
                return Err(usage(format!(
                    "n = {n} sums 2^{} terms; pass --allow-large to proceed",
                    n - 1
                )));
            }
            let pattern = NonmonotonePattern::parse(&require(a.pattern.clone(), "pattern")?)?;
            let oracle = if a.oracle {
                Some(pf_bruteforce_count_bounded(
                    n,
                    &pattern.permutation(),
                    pf_oracle_bound(slow),
                )?)
            } else {
                None
            };
            count_output(pf_nonmonotone_count(n, pattern)?, oracle)
                .param("n", n)
                .param("pattern", pattern.permutation())
        }
        Family::WordsMonotone => {
            let n = require(a.n, "n")?;
            let k = require(a.k, "k")?;
            if k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            let spec = MonotoneSpec::new(a.dir.mode(), a.r)?;
            let standardized = !a.raw;
            let oracle = if a.oracle {
                let limit = if slow { WORD_ORACLE_SLOW } else { WORD_ORACLE_FAST };
                let size = k.checked_pow(n as u32).filter(|&s| s <= limit);
                if size.is_none() {
                    return Err(usage(format!(
                        "oracle filters k^n words; {k}^{n} exceeds {limit}"
                    )));
                }
                Some(monotone_word_bruteforce(n, k as u32, spec, standardized))
            } else {
                None
            };
            count_output(monotone_word_count(n, k, spec, standardized), oracle)
                .param("n", n)
                .param("k", k)
                .param("pattern", spec.pattern())
                .param("standardized", standardized)
        }
        Family::SylvClasses => {
            let alpha = parse_composition(&require(a.content.clone(), "content")?)?;
            let content = WeakComposition::from(alpha.clone());
            let (value, oracle) = if a.sharp {
                let oracle = a.oracle.then(|| sharp_bfs_bounded(&content)).transpose()?;
                (sharp_sylvester_class_count_det(&alpha), oracle)
            } else {
                let oracle = a.oracle.then(|| sylv_bfs_bounded(&content)).transpose()?;
                (sylvester_class_count_det(&alpha), oracle)
            };
            count_output(value, oracle)
                .param("content", &alpha)
                .param("congruence", if a.sharp { "sharp" } else { "sylvester" })
        }
        Family::DyckAscent => {
            let alpha = parse_composition(&require(a.content.clone(), "content")?)?;
            let oracle = a.oracle.then(|| dyck_by_ascent_bruteforce(&alpha)).transpose()?;
            count_output(dyck_by_ascent_det(&alpha), oracle).param("alpha", &alpha)
        }
    };
    Ok(out.param("family", family_name(a.family)))
}

fn sylv_bfs_bounded(content: &WeakComposition) -> Result<BigCount, Error> {
    // the tree partition enforces the same bound
    sylv_classes(content)?;
    Ok(BigCount::from(sylv_class_count_bfs(content)))
}

fn sharp_bfs_bounded(content: &WeakComposition) -> Result<BigCount, Error> {
    sharp_classes(content)?;
    Ok(BigCount::from(sharp_class_count_bfs(content)))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Pf321 => "pf321",
        Family::PfNonmonotone => "pf-nonmonotone",
        Family::WordsMonotone => "words-monotone",
        Family::SylvClasses => "sylv-classes",
        Family::DyckAscent => "dyck-ascent",
    }
}

fn cmd_verify(a: &VerifyArgs, slow: bool, seed: u64) -> Result<Output, Error> {
    let suites = Suite::parse_list(&a.suite)?;
    let opts = VerifyOptions {
        n_max: a.n_max,
        slow,
        seed,
        simplex_samples: a.samples,
    };
    let checks = run_suites(&suites, &opts)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let detail = if c.detail.is_empty() {
            String::new()
        } else {
            format!(" ({})", c.detail)
        };
        writeln!(text, "{status} {}: {}{detail}", c.suite, c.name).unwrap();
    }
    write!(text, "{} passed, {failed} failed", checks.len() - failed).unwrap();
    let mut csv = String::from("suite,name,passed\n");
    for c in &checks {
        writeln!(csv, "{},\"{}\",{}", c.suite, c.name.replace('"', "'"), c.passed).unwrap();
    }
    let value = json!({
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": checks,
    });
    let mut out = Output::new("verify", value, text)
        .param("suite", &a.suite)
        .param("n_max", a.n_max)
        .param("slow", slow)
        .param("seed", seed);
    out.csv = Some(csv.trim_end().to_string());
    out.failed = failed > 0;
    Ok(out)
}

fn cmd_growth(a: &GrowthArgs) -> Result<Output, Error> {
    let spec = MonotoneSpec::new(a.dir.mode(), a.r)?;
    let limit = limit_for(spec);
    let base = |out: Output| out.param("direction", spec.direction_name()).param("r", a.r);
    if a.limit_only {
        let text = limit.to_string();
        return Ok(base(Output::new("growth", Value::String(text.clone()), text)).param("limit_only", true));
    }
    let ns: Vec<usize> = match (a.n_max, a.n.is_empty()) {
        (Some(m), true) => (1..=m).collect(),
        (None, false) => a.n.clone(),
        (None, true) => return Err(usage("give --n or --n-max")),
        (Some(_), false) => return Err(usage("--n and --n-max are exclusive")),
    };
    let report = growth_report(spec, &ns)?;
    let mut text = format!(
        "limit {} ~ {:.6}\n{:>6}  {:>12}  count\n",
        report.limit_exact, report.limit, "n", "root"
    );
    let mut csv = String::from("n,count,root\n");
    for s in &report.samples {
        writeln!(text, "{:>6}  {:>12.8}  {}", s.n, s.root, s.count).unwrap();
        writeln!(csv, "{},{},{}", s.n, s.count, s.root).unwrap();
    }
    let list: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
    let value = serde_json::to_value(&report).expect("report serializes");
    let mut out = base(Output::new("growth", value, text.trim_end().to_string())).param("n", list.join(","));
    out.csv = Some(csv.trim_end().to_string());
    Ok(out)
}

trait DirectionName {
    fn direction_name(&self) -> &'static str;
}

impl DirectionName for MonotoneSpec {
    fn direction_name(&self) -> &'static str {
        match self.direction {
            MonotoneMode::StrictDecreasing => "dec",
            MonotoneMode::WeakIncreasing => "inc",
        }
    }
}

fn class_text(table: &ClassTable, members: bool) -> String {
    let mut text = format!(
        "{} classes of {} words\n",
        table.class_count(),
        table.word_count()
    );
    for (rep, class) in table.canonical.iter().zip(&table.classes) {
        if members {
            let list: Vec<String> = class.iter().map(|w| w.to_string()).collect();
            writeln!(text, "{rep}: {}", list.join(" ")).unwrap();
        } else {
            writeln!(text, "{rep}  size {}", class.len()).unwrap();
        }
    }
    text.trim_end().to_string()
}

fn cmd_show(a: &ShowArgs) -> Result<Output, Error> {
    let out = match a.object {
        Object::Rsk => {
            let w: Word = a.input.parse()?;
            let pair = rsk(&w);
            let shape = pair.shape();
            let text = format!(
                "shape {shape}\nP\n{}\nQ\n{}",
                pair.insertion.to_string().trim_end(),
                pair.recording.to_string().trim_end()
            );
            let value = json!({
                "shape": shape.parts(),
                "insertion": pair.insertion.rows(),
                "recording": pair.recording.rows(),
            });
            Output::new("show", value, text).param("word", &w)
        }
        Object::Bst => {
            let w: Word = a.input.parse()?;
            let tree = bst_of(&w);
            let text = format!("{tree}\n{}", tree.render());
            Output::new("show", Value::String(tree.to_string()), text).param("word", &w)
        }
        Object::Dyck => show_dyck(&a.input)?,
        Object::Rothe => {
            let p: Permutation = a.input.parse()?;
            let d = rothe_dyck(&p)?;
            let text = format!(
                "{}\npath {d}\ndescent composition {}\n{}",
                render_rothe(&p),
                descent_comp(&d),
                render_path(&d)
            );
            let value = json!({ "path": d.to_string(), "descent_composition": descent_comp(&d).parts() });
            Output::new("show", value, text).param("permutation", &p)
        }
        Object::Classes => {
            let alpha = parse_composition(&a.input)?;
            let content = WeakComposition::from(alpha.clone());
            let table = if a.sharp {
                sharp_classes(&content)?
            } else {
                sylv_classes(&content)?
            };
            let reps: Vec<String> = table.canonical.iter().map(|w| w.to_string()).collect();
            let mut value = json!({
                "content": alpha.parts(),
                "class_count": table.class_count(),
                "canonical": reps,
            });
            if a.members {
                let members: Vec<Vec<String>> = table
                    .classes
                    .iter()
                    .map(|c| c.iter().map(|w| w.to_string()).collect())
                    .collect();
                value["members"] = json!(members);
            }
            Output::new("show", value, class_text(&table, a.members))
                .param("content", &alpha)
                .param("congruence", if a.sharp { "sharp" } else { "sylvester" })
        }
    };
    Ok(out.param("object", object_name(a.object)))
}

fn show_dyck(input: &str) -> Result<Output, Error> {
    if input.chars().all(|c| matches!(c, 'U' | 'D' | 'u' | 'd')) {
        let d: DyckPath = input.parse()?;
        let fam = dyck_to_family(&d)?;
        let text = format!(
            "{}\nascent composition {}\ndescent composition {}\nturns at x = {:?}\n{}",
            render_path(&d),
            ascent_comp(&d),
            descent_comp(&d),
            fam.abscissae(),
            render_family(&fam)
        );
        let value = json!({
            "path": d.to_string(),
            "ascent_composition": ascent_comp(&d).parts(),
            "descent_composition": descent_comp(&d).parts(),
            "abscissae": fam.abscissae(),
        });
        return Ok(Output::new("show", value, text).param("path", &d));
    }
    let alpha = parse_composition(input)?;
    enumerate_dyck(alpha.size())?;
    let mut text = String::new();
    let mut paths = Vec::new();
    for fam in lgv_families(&alpha) {
        let d = family_to_dyck(&fam);
        writeln!(text, "{d}  x = {:?}", fam.abscissae()).unwrap();
        paths.push(d.to_string());
    }
    write!(text, "{} paths", paths.len()).unwrap();
    Ok(Output::new("show", json!({ "alpha": alpha.parts(), "paths": paths }), text).param("alpha", &alpha))
}

fn object_name(o: Object) -> &'static str {
    match o {
        Object::Rsk => "rsk",
        Object::Bst => "bst",
        Object::Dyck => "dyck",
        Object::Rothe => "rothe",
        Object::Classes => "classes",
    }
}

fn csv_row(out: &Output) -> String {
    let mut header: Vec<String> = out.parameters.keys().cloned().collect();
    let mut row: Vec<String> = out.parameters.values().cloned().collect();
    header.push("value".into());
    row.push(match &out.value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    });
    if let Some(o) = &out.oracle {
        header.push("oracle".into());
        row.push(o.clone());
        header.push("agreement".into());
        row.push(out.agreement.unwrap_or(false).to_string());
    }
    let quote = |v: &String| {
        if v.contains(',') {
            format!("\"{v}\"")
        } else {
            v.clone()
        }
    };
    format!(
        "{}\n{}",
        header.join(","),
        row.iter().map(quote).collect::<Vec<_>>().join(",")
    )
}

// a closed pipe (e.g. `| head`) is not an error worth a panic
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, cli.slow),
        Command::Verify(a) => cmd_verify(a, cli.slow, cli.seed),
        Command::Growth(a) => cmd_growth(a),
        Command::Show(a) => cmd_show(a),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if cli.json {
        let env = Envelope {
            command: out.command.to_string(),
            parameters: out.parameters.clone(),
            value: out.value.clone(),
            oracle: out.oracle.clone(),
            agreement: out.agreement,
            elapsed_ms: start.elapsed().as_millis() as u64,
        };
        emit(&serde_json::to_string_pretty(&env).expect("envelope serializes"));
    } else if cli.csv {
        emit(&out.csv.clone().unwrap_or_else(|| csv_row(&out)));
    } else {
        emit(&out.text);
    }
    if out.failed {
        ExitCode::from(EXIT_CHECK)
    } else {
        ExitCode::SUCCESS
    }
}
