//! Command-line front end for `bbw-ulrich`.
//!
//! Exit codes: 0 success, 1 classification mismatch, 2 usage error,
//! 3 search space above the cap.

pub mod cache;
pub mod document;
pub mod parse;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use bbw_ulrich::ulrich::{self, ClassifyOptions, FactorizationPair, DEFAULT_SEARCH_CAP};
use bbw_ulrich::{
    cohomology, cohomology_table, degree, rank, slope, CohomologyReport, Error, GrassmannSpace,
    HomogeneousBundle,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cache::ClassifyCache;
use crate::document::OutputDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SEARCH_TOO_LARGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bbw-ulrich",
    version,
    about = "Borel-Bott-Weil cohomology and Ulrich bundles on Grassmannians"
)]
pub struct Cli {
    /// Emit the JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Memoize `ulrich classify` results in DIR
    #[arg(long, global = true, value_name = "DIR", env = "BBW_ULRICH_CACHE")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SpaceArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BundleArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// Weight of the Q factor, e.g. `19,10` or `3^2,0`; padded with zeros
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub beta: String,
    /// Weight of the S∨ factor; padded with zeros
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub gamma: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, degree and Ulrich invariants of Gr(k,n)
    Invariants(SpaceArgs),
    /// Cohomology of a twisted homogeneous bundle
    Cohom {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        twist: i64,
    },
    /// Cohomology for every twist in a range
    Table {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
    /// Ulrich bundles
    #[command(subcommand)]
    Ulrich(UlrichCommand),
}

#[derive(Debug, Subcommand)]
pub enum UlrichCommand {
    /// Every initialized invariant Ulrich bundle
    List(SpaceArgs),
    /// The bundle attached to one factorization pair
    Construct {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        ks: String,
        #[arg(long)]
        ns: String,
    },
    /// Check the Ulrich window for a bundle
    Verify(BundleArgs),
    /// Classification; with --brute-force, compare against an exhaustive scan
    ///
    /// The scan covers every normalized β, γ with b_1 = k(n-k-1) and
    /// b_{k+1} = a_1, which is C(k(n-k-1)+n-2, n-2) candidates for k >= 1 and
    /// n-k >= 2. It refuses to start above --cap.
    Classify {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        brute_force: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Minimal Ulrich rank: closed forms and enumerated minimum
    Minrank(SpaceArgs),
}

/// A finished command: the document, its text rendering, and the exit code.
pub struct Outcome {
    pub document: OutputDocument,
    pub text: String,
    pub exit_code: i32,
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            exit_code: EXIT_USAGE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit_code = match e {
            Error::SearchTooLarge { .. } => EXIT_SEARCH_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        CliError {
            message: e.to_string(),
            exit_code,
        }
    }
}

fn space(args: SpaceArgs) -> Result<GrassmannSpace, CliError> {
    Ok(GrassmannSpace::new(args.k, args.n)?)
}

fn parse_bundle(args: &BundleArgs) -> Result<HomogeneousBundle, CliError> {
    let g = space(args.space)?;
    let beta = parse::weight("beta", &args.beta, g.quotient_rank()).map_err(CliError::usage)?;
    let gamma = parse::weight("gamma", &args.gamma, g.sub_rank()).map_err(CliError::usage)?;
    Ok(HomogeneousBundle::new(g, beta, gamma)?)
}

fn bundle_inputs(b: &HomogeneousBundle) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("k".into(), json!(b.space().k()));
    m.insert("n".into(), json!(b.space().n()));
    m.insert("beta".into(), document::weight(b.beta()));
    m.insert("gamma".into(), document::weight(b.gamma()));
    m
}

fn finish(command: &str, inputs: Value, results: Value, text: String, started: Instant) -> Outcome {
    Outcome {
        document: OutputDocument {
            command: command.into(),
            inputs,
            results,
            timing_ms: started.elapsed().as_millis() as u64,
        },
        text,
        exit_code: EXIT_OK,
    }
}

fn describe(b: &HomogeneousBundle) -> String {
    format!("Σ^{}Q ⊗ Σ^{}S∨", b.beta(), b.gamma())
}

fn cmd_invariants(args: SpaceArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let g = space(args)?;
    let (dim, deg) = (g.dimension(), degree(g));
    let mu = ulrich::ulrich_slope(g);
    let min_rank = ulrich::min_ulrich_rank(g);
    let count = ulrich::count_ulrich(g);
    let results = json!({
        "dimension": dim,
        "degree": document::big(&deg),
        "ulrich_slope": document::rational(&mu),
        "min_ulrich_rank": document::big(&min_rank),
        "ulrich_count": count,
    });
    let text = format!(
        "{g}\n  dimension        {dim}\n  degree           {deg}\n  Ulrich slope     {mu}\n  min Ulrich rank  {min_rank}\n  Ulrich bundles   {count}\n"
    );
    Ok(finish(
        "invariants",
        json!({"k": args.k, "n": args.n}),
        results,
        text,
        started,
    ))
}

fn cmd_cohom(args: &BundleArgs, twist: i64) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let b = parse_bundle(args)?;
    let r = cohomology(&b, twist);
    let mut inputs = bundle_inputs(&b);
    inputs.insert("twist".into(), json!(twist));
    let text = format!("{}({twist}) on {}: {r}\n", describe(&b), b.space());
    Ok(finish(
        "cohom",
        Value::Object(inputs),
        document::report(&r),
        text,
        started,
    ))
}

fn cmd_table(args: &BundleArgs, from: i64, to: i64) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let b = parse_bundle(args)?;
    let rows = cohomology_table(&b, from, to)?;
    let mut inputs = bundle_inputs(&b);
    inputs.insert("from".into(), json!(from));
    inputs.insert("to".into(), json!(to));

    let json_rows: Vec<Value> = rows
        .iter()
        .map(|(t, r)| json!({ "twist": t, "cohomology": document::report(r) }))
        .collect();

    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|(t, r)| match r {
            CohomologyReport::Zero => [t.to_string(), "-".into(), "0".into(), String::new()],
            CohomologyReport::Group {
                degree,
                weight,
                dimension,
            } => [
                t.to_string(),
                degree.to_string(),
                dimension.to_string(),
                weight.to_string(),
            ],
        })
        .collect();
    let header = ["twist", "degree", "dimension", "weight"];
    let widths: Vec<usize> = (0..4)
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut text = format!("{} on {}\n", describe(&b), b.space());
    for row in std::iter::once(header.map(String::from)).chain(cells) {
        let line = format!(
            "{:>w0$}  {:>w1$}  {:>w2$}  {}",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = widths[0],
            w1 = widths[1],
            w2 = widths[2]
        );
        let _ = writeln!(text, "{}", line.trim_end());
    }
    Ok(finish(
        "table",
        Value::Object(inputs),
        json!({ "rows": json_rows }),
        text,
        started,
    ))
}

fn cmd_list(args: SpaceArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let g = space(args)?;
    let found = ulrich::enumerate_ulrich_with_pairs(g);
    let mut text = format!(
        "{} initialized invariant Ulrich bundles on {g}\n",
        found.len()
    );
    for (b, p) in &found {
        let _ = writeln!(text, "  {p}  {}  rank {}", describe(b), rank(b));
    }
    let bundles: Vec<Value> = found
        .iter()
        .map(|(b, p)| document::bundle_with_pair(b, p))
        .collect();
    let results = json!({ "count": found.len(), "slope": document::rational(&ulrich::ulrich_slope(g)), "bundles": bundles });
    Ok(finish(
        "ulrich list",
        json!({"k": args.k, "n": args.n}),
        results,
        text,
        started,
    ))
}

fn cmd_construct(args: SpaceArgs, ks: &str, ns: &str) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let g = space(args)?;
    let ks = parse::sizes("ks", ks).map_err(CliError::usage)?;
    let ns = parse::sizes("ns", ns).map_err(CliError::usage)?;
    let pair = FactorizationPair::new(g, ks.clone(), ns.clone())?;
    let grid = ulrich::build_grid(g, &pair)?;
    let b = ulrich::bundle_from_grid(&grid)?;
    let verdict = ulrich::is_ulrich(&b);

    let mut results = document::bundle_with_pair(&b, &pair);
    let obj = results.as_object_mut().expect("object");
    let rows: Vec<Vec<usize>> = grid.rows().map(<[usize]>::to_vec).collect();
    obj.insert("grid_rows_bottom_up".into(), json!(rows));
    obj.insert("is_ulrich".into(), json!(verdict.is_ulrich));

    let text = format!(
        "{g}, ks = {ks:?}, ns = {ns:?}\n\n{grid}\nβ = {}\nγ = {}\nrank {}, slope {}, Ulrich: {}\n",
        b.beta(),
        b.gamma(),
        rank(&b),
        slope(&b),
        verdict.is_ulrich
    );
    Ok(finish(
        "ulrich construct",
        json!({"k": args.k, "n": args.n, "ks": ks, "ns": ns}),
        results,
        text,
        started,
    ))
}

fn cmd_verify(args: &BundleArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let b = parse_bundle(args)?;
    let v = ulrich::is_ulrich(&b);
    let (init, _) = ulrich::initialize(&b);
    let d = b.space().dimension() as i64;
    let window: Vec<Value> = (1..=d)
        .map(|t| json!({ "t": t, "cohomology": document::report(&cohomology(&init, -t)) }))
        .collect();
    let mut results = document::verdict(&v);
    let obj = results.as_object_mut().expect("object");
    obj.insert("window".into(), json!(window));
    obj.insert(
        "two_diagonal_criterion".into(),
        json!(ulrich::satisfies_two_diagonal_criterion(&b)),
    );

    let mut text = format!("{} on {}\n", describe(&b), b.space());
    let _ = writeln!(
        text,
        "  initialized   {} (t0 = {})",
        v.initialized, v.init_shift
    );
    let _ = writeln!(text, "  Ulrich        {}", v.is_ulrich);
    if let Some(w) = &v.witness {
        let _ = writeln!(
            text,
            "  witness       E_init(-{}) has H^{} of dimension {}",
            w.t, w.degree, w.dimension
        );
    }
    Ok(finish(
        "ulrich verify",
        Value::Object(bundle_inputs(&b)),
        results,
        text,
        started,
    ))
}

fn classify_text(k: usize, n: usize, results: &Value) -> String {
    let mut text = String::new();
    let list = |v: &Value| -> Vec<String> {
        v.as_array()
            .into_iter()
            .flatten()
            .map(|b| format!("  β = {}  γ = {}", b["beta"], b["gamma"]))
            .collect()
    };
    let _ = writeln!(
        text,
        "Gr({k},{n}): {} bundles from factorization pairs",
        results["count"]
    );
    for line in list(&results["constructed"]) {
        let _ = writeln!(text, "{line}");
    }
    if let Some(eq) = results.get("sets_equal") {
        let _ = writeln!(
            text,
            "brute force over {} candidates found {}; sets equal: {eq}",
            results["candidates"].as_str().unwrap_or("?"),
            results["brute_force"].as_array().map_or(0, Vec::len)
        );
    }
    text
}

fn classify_exit(results: &Value) -> i32 {
    match results.get("sets_equal").and_then(Value::as_bool) {
        Some(false) => EXIT_MISMATCH,
        _ => EXIT_OK,
    }
}

fn cmd_classify(
    args: SpaceArgs,
    brute_force: bool,
    cap: u64,
    jobs: Option<usize>,
    cache: Option<&ClassifyCache>,
) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let g = space(args)?;
    if let Some(mut doc) = cache.and_then(|c| c.load(args.k, args.n, brute_force)) {
        doc.timing_ms = started.elapsed().as_millis() as u64;
        let text = classify_text(args.k, args.n, &doc.results);
        let exit_code = classify_exit(&doc.results);
        return Ok(Outcome {
            document: doc,
            text,
            exit_code,
        });
    }

    let constructed = ulrich::enumerate_ulrich(g);
    let mut results = json!({
        "count": constructed.len(),
        "constructed": constructed.iter().map(document::bundle).collect::<Vec<_>>(),
    });
    if brute_force {
        let found = ulrich::brute_force_classify(g, ClassifyOptions { cap, jobs })?;
        let obj = results.as_object_mut().expect("object");
        obj.insert(
            "candidates".into(),
            document::big(&ulrich::candidate_count(g)),
        );
        obj.insert(
            "brute_force".into(),
            json!(found.iter().map(document::bundle).collect::<Vec<_>>()),
        );
        obj.insert("sets_equal".into(), json!(found == constructed));
    }
    let inputs = json!({
        "k": args.k,
        "n": args.n,
        "brute_force": brute_force,
        "cap": cap,
        "jobs": jobs,
    });
    let text = classify_text(args.k, args.n, &results);
    let mut outcome = finish("ulrich classify", inputs, results, text, started);
    outcome.exit_code = classify_exit(&outcome.document.results);
    if let Some(c) = cache {
        if let Err(e) = c.store(args.k, args.n, &outcome.document) {
            eprintln!(
                "warning: could not write cache in {}: {e}",
                c.dir().display()
            );
        }
    }
    Ok(outcome)
}

fn cmd_minrank(args: SpaceArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let g = space(args)?;
    let reduced = ulrich::reduced_space(g);
    let (product_form, power_form) = ulrich::min_ulrich_rank_forms(reduced);
    let enumerated = ulrich::enumerated_min_rank(g);
    let results = json!({
        "reduced_k": reduced.k(),
        "product_form": document::big(&product_form),
        "power_form": document::big(&power_form),
        "enumerated_min": document::big(&enumerated),
        "agree": product_form == power_form && power_form == enumerated,
    });
    let text = format!(
        "{g} (closed forms evaluated on {reduced})\n  product form        {product_form}\n  power form          {power_form}\n  enumerated minimum  {enumerated}\n"
    );
    Ok(finish(
        "ulrich minrank",
        json!({"k": args.k, "n": args.n}),
        results,
        text,
        started,
    ))
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cache = cli.cache.as_ref().map(ClassifyCache::new);
    match &cli.command {
        Command::Invariants(s) => cmd_invariants(*s),
        Command::Cohom { bundle, twist } => cmd_cohom(bundle, *twist),
        Command::Table { bundle, from, to } => cmd_table(bundle, *from, *to),
        Command::Ulrich(u) => match u {
            UlrichCommand::List(s) => cmd_list(*s),
            UlrichCommand::Construct { space, ks, ns } => cmd_construct(*space, ks, ns),
            UlrichCommand::Verify(b) => cmd_verify(b),
            UlrichCommand::Classify {
                space,
                brute_force,
                cap,
                jobs,
            } => cmd_classify(*space, *brute_force, *cap, *jobs, cache.as_ref()),
            UlrichCommand::Minrank(s) => cmd_minrank(*s),
        },
    }
}

/// Parses `args`, runs the command, writes output, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return e.exit_code;
        }
    };
    let body = if cli.json {
        outcome.document.to_json()
    } else {
        outcome.text
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{body}"),
    }
    outcome.exit_code
}
