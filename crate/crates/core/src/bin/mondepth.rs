//! Command-line front end: compute invariants of a monomial ideal, generate
//! lexsegment ideals, apply trivial modifications, run theorem-checking
//! suites, and verify Stanley-decomposition certificates.
//!
//! Exit codes: 0 success or all-pass, 1 violation or invalid certificate,
//! 2 usage or input error, 3 indeterminate results present under --strict.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mondepth::sdepth::CertifyOutcome;
use mondepth::{
    associated_primes, betti_lcm_with, certify_partition, lexsegment, modify_trivial, parse_ideal,
    primary_decomposition, render_ideal, run_suite, sdepth_ideal, sdepth_quotient, size_bigsize,
    Alpha, CheckStatus, CorpusSpec, Error, FieldChar, IdealJson, IntervalPartition, Monomial,
    BettiConfig, MonomialIdeal, Ring, SdepthConfig, SdepthResult, SuiteName,
};

#[derive(Parser)]
#[command(
    name = "mondepth",
    version,
    about = "Invariants of monomial ideals: primary decomposition, size, depth, Stanley depth",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Irredundant primary decomposition of an ideal
    Decompose(IdealInput),
    /// Associated primes of S/I
    Ass(IdealInput),
    /// The size and bigsize invariants
    Size(IdealInput),
    /// depth(S/I) and depth(I) via multigraded Betti numbers
    Depth(DepthArgs),
    /// Stanley depth of I or S/I with a partition certificate
    Sdepth(SdepthArgs),
    /// Construct a lexsegment ideal from two degree-d monomials
    Lex(LexArgs),
    /// Trivial modification of a squarefree ideal
    Modify(ModifyArgs),
    /// Run a theorem-checking suite over a generated corpus
    Verify(VerifyArgs),
    /// Check a partition certificate against an ideal
    Certify(CertifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["inline", "file"])))]
struct IdealInput {
    /// Ideal in the text format, `/` separating lines
    #[arg(short, long)]
    inline: Option<String>,
    /// Path to an ideal file
    #[arg(short, long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

impl IdealInput {
    fn load(&self) -> Result<MonomialIdeal, CliError> {
        let text = match (&self.inline, &self.file) {
            (Some(t), None) => t.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
            _ => unreachable!("clap enforces exactly one source"),
        };
        Ok(parse_ideal(&text)?)
    }
}

#[derive(Args)]
struct DepthArgs {
    #[command(flatten)]
    input: IdealInput,
    /// Field characteristic: a prime, or 0 for the rationals
    #[arg(long = "char", default_value = "32003")]
    characteristic: u64,
    /// Generator cap for the lcm-lattice route
    #[arg(long = "gen-cap", default_value = "20")]
    gen_cap: usize,
}

#[derive(Args)]
struct SdepthArgs {
    #[command(flatten)]
    input: IdealInput,
    #[arg(long, value_enum, default_value = "ideal")]
    mode: Mode,
    /// Override the box vector g, e.g. `2,3,1` (must dominate lcm exponents)
    #[arg(long, value_parser = parse_vec_u32)]
    g: Option<std::vec::Vec<u32>>,
    /// Node budget for each partition search
    #[arg(long, default_value = "10000000")]
    budget: u64,
    /// Cap on the poset box size
    #[arg(long = "box-cap", default_value = "200000")]
    box_cap: u64,
    /// Exit 3 when the result is indeterminate
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Ideal,
    Quotient,
}

#[derive(Args)]
struct LexArgs {
    /// Number of variables
    #[arg(long)]
    n: usize,
    /// Degree (at least 2)
    #[arg(long)]
    d: u32,
    /// Upper endpoint, e.g. `x1*x2`
    #[arg(long)]
    u: String,
    /// Lower endpoint, e.g. `x2*x3`
    #[arg(long)]
    v: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct ModifyArgs {
    #[command(flatten)]
    input: IdealInput,
    /// Exponent vector, e.g. `2,3,6,3,7,8,2`
    #[arg(long, value_parser = parse_vec_u32)]
    alpha: std::vec::Vec<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: lex | star | bigsize1 | bounds | stanley | modification
    #[arg(long)]
    suite: SuiteName,
    #[arg(long)]
    seed: Option<u64>,
    /// Instance count override
    #[arg(long)]
    instances: Option<usize>,
    /// Node budget for sdepth searches
    #[arg(long)]
    budget: Option<u64>,
    /// Field characteristic for depth computations
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// Include the fixed worked modification example
    #[arg(long = "paper-example")]
    paper_example: bool,
    /// Exit 3 when indeterminate results are present
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["inline", "file"])))]
struct CertifyArgs {
    /// Ideal in the text format, `/` separating lines
    #[arg(short, long)]
    inline: Option<String>,
    /// Path to an ideal file
    #[arg(short, long)]
    file: Option<PathBuf>,
    /// Path to the certificate JSON
    #[arg(long)]
    cert: PathBuf,
    /// Claimed k; defaults to the k stored in the certificate
    #[arg(long)]
    k: Option<u32>,
}

fn parse_vec_u32(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|e| format!("invalid entry `{part}`: {e}"))
        })
        .collect()
}

enum CliError {
    Usage(String),
    Input(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Input(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Serialize)]
struct PrimeJson {
    vars: Vec<usize>,
}

#[derive(Serialize)]
struct ComponentJson {
    gens: Vec<Vec<u32>>,
    radical: Vec<usize>,
}

#[derive(Serialize)]
struct SizeJson {
    a: usize,
    b: usize,
    size: usize,
    bigsize: usize,
}

#[derive(Serialize)]
struct BettiRowJson {
    i: u32,
    multidegree: Vec<u32>,
    beta: usize,
}

#[derive(Serialize)]
struct DepthJson {
    characteristic: u64,
    pd: u32,
    depth_quotient: u32,
    depth_ideal: u32,
    betti: Vec<BettiRowJson>,
}

#[derive(Serialize)]
struct SdepthJson {
    mode: String,
    exact: bool,
    value: u32,
    nodes_spent: Option<u64>,
    certificate: Option<IntervalPartition>,
}

fn one_based(vars: &[usize]) -> Vec<usize> {
    vars.iter().map(|v| v + 1).collect()
}

fn cmd_decompose(args: &IdealInput) -> Result<i32, CliError> {
    let ideal = args.load()?;
    let dec = primary_decomposition(&ideal)?;
    match args.format {
        Format::Json => {
            let out: Vec<ComponentJson> = dec
                .components
                .iter()
                .map(|c| ComponentJson {
                    gens: c.ideal.gens().iter().map(|g| g.exps().to_vec()).collect(),
                    radical: one_based(c.radical.support()),
                })
                .collect();
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            for (i, c) in dec.components.iter().enumerate() {
                let gens = c
                    .ideal
                    .gens()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(", ");
                println!("Q{} radical {} gens ({gens})", i + 1, c.radical);
            }
        }
    }
    Ok(0)
}

fn cmd_ass(args: &IdealInput) -> Result<i32, CliError> {
    let ideal = args.load()?;
    let ass = associated_primes(&ideal)?;
    match args.format {
        Format::Json => {
            let out: Vec<PrimeJson> = ass
                .iter()
                .map(|p| PrimeJson {
                    vars: one_based(p.support()),
                })
                .collect();
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            for p in &ass {
                println!("{p}");
            }
        }
    }
    Ok(0)
}

fn cmd_size(args: &IdealInput) -> Result<i32, CliError> {
    let ideal = args.load()?;
    let ass = associated_primes(&ideal)?;
    let report = size_bigsize(&ass, ideal.nvars())?;
    match args.format {
        Format::Json => {
            let out = SizeJson {
                a: report.a,
                b: report.b,
                size: report.size,
                bigsize: report.bigsize,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            println!(
                "a={} b={} size={} bigsize={}",
                report.a, report.b, report.size, report.bigsize
            );
        }
    }
    Ok(0)
}

fn cmd_depth(args: &DepthArgs) -> Result<i32, CliError> {
    let ideal = args.input.load()?;
    let characteristic = FieldChar::from_u64(args.characteristic)?;
    let config = BettiConfig {
        max_gens: args.gen_cap,
        ..BettiConfig::default()
    };
    let table = betti_lcm_with(&ideal, characteristic, &config)?;
    match args.input.format {
        Format::Json => {
            let out = DepthJson {
                characteristic: characteristic.as_u64(),
                pd: table.pd,
                depth_quotient: table.depth_quotient,
                depth_ideal: table.depth_quotient + 1,
                betti: table
                    .entries
                    .iter()
                    .map(|((i, m), beta)| BettiRowJson {
                        i: *i,
                        multidegree: m.exps().to_vec(),
                        beta: *beta,
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            println!(
                "pd={} depth_quotient={} depth_ideal={} char={}",
                table.pd,
                table.depth_quotient,
                table.depth_quotient + 1,
                characteristic.as_u64()
            );
            for ((i, m), beta) in &table.entries {
                println!("beta[{i}, {m}] = {beta}");
            }
        }
    }
    Ok(0)
}

fn format_point(p: &[u32]) -> String {
    let inner = p
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("({inner})")
}

fn cmd_sdepth(args: &SdepthArgs) -> Result<i32, CliError> {
    let ideal = args.input.load()?;
    let config = SdepthConfig {
        box_cap: args.box_cap,
        node_budget: args.budget,
        g_override: args.g.clone(),
    };
    let result = match args.mode {
        Mode::Ideal => sdepth_ideal(&ideal, &config)?,
        Mode::Quotient => sdepth_quotient(&ideal, &config)?,
    };
    let mode_name = match args.mode {
        Mode::Ideal => "ideal",
        Mode::Quotient => "quotient",
    };
    let (exact, value, nodes, cert) = match &result {
        SdepthResult::Exact { value, certificate } => (true, *value, None, Some(certificate)),
        SdepthResult::Indeterminate {
            lower_bound,
            certificate,
            nodes_spent,
        } => (
            false,
            *lower_bound,
            Some(*nodes_spent),
            certificate.as_ref(),
        ),
    };
    match args.input.format {
        Format::Json => {
            let out = SdepthJson {
                mode: mode_name.to_string(),
                exact,
                value,
                nodes_spent: nodes,
                certificate: cert.cloned(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => {
            if exact {
                println!("sdepth = {value} (mode {mode_name})");
            } else {
                println!(
                    "sdepth >= {value} (mode {mode_name}; indeterminate, budget exhausted after {} nodes)",
                    nodes.unwrap_or(0)
                );
            }
            if let Some(cert) = cert {
                println!("certificate k={} g={}", cert.k, format_point(&cert.g));
                for interval in &cert.intervals {
                    println!(
                        "  {} .. {}",
                        format_point(&interval.lo),
                        format_point(&interval.hi)
                    );
                }
            }
        }
    }
    if !exact && args.strict {
        return Ok(3);
    }
    Ok(0)
}

fn parse_monomial_arg(n: usize, text: &str) -> Result<Monomial, CliError> {
    let ideal = parse_ideal(&format!("vars: {n} / gens: {text}"))?;
    match ideal.gens() {
        [single] => Ok(single.clone()),
        _ => Err(CliError::Usage(format!(
            "`{text}` is not a single monomial"
        ))),
    }
}

fn cmd_lex(args: &LexArgs) -> Result<i32, CliError> {
    let ring = Ring::new(args.n)?;
    let u = parse_monomial_arg(args.n, &args.u)?;
    let v = parse_monomial_arg(args.n, &args.v)?;
    let ideal = lexsegment(&ring, args.d, &u, &v)?;
    match args.format {
        Format::Json => {
            let out = IdealJson::from(&ideal);
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => print!("{}", render_ideal(&ideal)),
    }
    Ok(0)
}

fn cmd_modify(args: &ModifyArgs) -> Result<i32, CliError> {
    let ideal = args.input.load()?;
    let alpha = Alpha::new(args.alpha.clone())?;
    let modified = modify_trivial(&ideal, &alpha)?;
    match args.input.format {
        Format::Json => {
            let out = IdealJson::from(&modified);
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Table => print!("{}", render_ideal(&modified)),
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let mut spec = CorpusSpec::defaults(args.suite);
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    if let Some(instances) = args.instances {
        spec.max_instances = instances;
    }
    if let Some(budget) = args.budget {
        spec.sdepth_budget = budget;
    }
    if let Some(characteristic) = args.characteristic {
        FieldChar::from_u64(characteristic)?;
        spec.characteristic = characteristic;
    }
    if args.paper_example {
        spec.paper_example = true;
    }
    let report = run_suite(&spec)?;
    match args.format {
        Format::Json => {
            println!("{}", serde_json::to_string(&report).expect("serializable"));
        }
        Format::Table => {
            println!(
                "suite {} seed {} instances {}",
                report.suite, report.spec.seed, report.instances
            );
            for tally in &report.claims {
                println!(
                    "  {:<42} pass {:>5}  violation {:>3}  indeterminate {:>3}",
                    tally.claim, tally.pass, tally.violation, tally.indeterminate
                );
            }
            for v in &report.violations {
                println!(
                    "VIOLATION {} {} observed {:?}",
                    v.instance, v.claim, v.observed
                );
                println!("  replay: {}", v.payload);
            }
            for v in &report.indeterminate {
                println!(
                    "indeterminate {} {} ({})",
                    v.instance,
                    v.claim,
                    v.reason.as_deref().unwrap_or("no reason recorded")
                );
            }
            println!("status: {:?}", report.status);
        }
    }
    match report.status {
        CheckStatus::Violation => Ok(1),
        CheckStatus::Indeterminate if args.strict => Ok(3),
        _ => Ok(0),
    }
}

#[derive(serde::Deserialize)]
struct CertificateWrapper {
    certificate: IntervalPartition,
}

fn cmd_certify(args: &CertifyArgs) -> Result<i32, CliError> {
    let text = match (&args.inline, &args.file) {
        (Some(t), None) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    let ideal = parse_ideal(&text)?;
    let cert_text = std::fs::read_to_string(&args.cert)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.cert.display())))?;
    // accept either a bare certificate or the sdepth JSON output
    let mut partition: IntervalPartition = serde_json::from_str(&cert_text)
        .or_else(|_| serde_json::from_str::<CertificateWrapper>(&cert_text).map(|w| w.certificate))
        .map_err(|e| CliError::Usage(format!("malformed certificate: {e}")))?;
    if let Some(k) = args.k {
        partition.k = k;
    }
    match certify_partition(&ideal, &partition)? {
        CertifyOutcome::Valid => {
            println!(
                "valid: {} intervals cover the {} poset exactly once, every value >= {}",
                partition.intervals.len(),
                partition.mode,
                partition.k
            );
            Ok(0)
        }
        CertifyOutcome::Invalid(reason) => {
            println!("invalid: {reason}");
            Ok(1)
        }
    }
}

fn main() {
    // behave like a regular unix tool when the read end of a pipe closes
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Decompose(args) => cmd_decompose(args),
        Command::Ass(args) => cmd_ass(args),
        Command::Size(args) => cmd_size(args),
        Command::Depth(args) => cmd_depth(args),
        Command::Sdepth(args) => cmd_sdepth(args),
        Command::Lex(args) => cmd_lex(args),
        Command::Modify(args) => cmd_modify(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Certify(args) => cmd_certify(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
