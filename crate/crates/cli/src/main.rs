//! `macx`: batch front end for exact moment-angle-complex cohomology.
//!
//! Exit codes: 0 success / verdict true, 1 verdict false, 2 usage error,
//! 3 input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use macx_core::graded_ring::{
    algebra_from_hochster, fingerprint, fingerprint_to_json, match_factors, quotient_by_top,
    GradedAlgebra, RingFingerprint,
};
use macx_core::homology::Coeff;
use macx_core::linalg::{PrimeField, Rationals};
use macx_core::moment_angle::{
    bigraded_betti, generation_by_degree_one, hochster_ring, hochster_ring_over_z,
    is_gorenstein_star, lbc_check, poincare_pairing_check, report_json,
};
use macx_core::verify::{verify_thm4, verify_thm5, Verdict};
use macx_core::{scx, zoo, Error, SimplicialComplex, VertexSet};
use std::process::ExitCode;

const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "macx",
    about = "Exact cohomology rings of moment-angle complexes",
    version
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Config {
    /// Coefficients: z, q, or fp:P with P prime
    #[arg(long, global = true, default_value = "z")]
    coeff: String,
    /// Emit machine-readable JSON instead of tables
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: MACX_JOBS env var, then all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Allow ground sets larger than 24 vertices (2^m subset blow-up)
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print f-vector, dimension, and structural flags
    Info { input: String },
    /// Betti numbers (and torsion over z) of the moment-angle complex
    Betti { input: String },
    /// Bigraded table: per-subset reduced cohomology ranks
    Bigraded { input: String },
    /// Ring structure: basis, products, fingerprint
    Ring { input: String },
    /// Structural predicate checks; exit code mirrors the verdict
    Check {
        #[arg(value_enum)]
        which: CheckKind,
        input: String,
    },
    /// Combinatorial operations; writes an .scx complex
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Verify a structural theorem by computing both sides
    Verify {
        #[command(subcommand)]
        thm: VerifyCommand,
    },
    /// Irreducible connected-sum factors of a simplicial 2-sphere
    Decompose { input: String },
    /// Compare the factor fingerprints of two 2-spheres
    Compare { input_a: String, input_b: String },
}

#[derive(Copy, Clone, ValueEnum)]
enum CheckKind {
    Gorenstein,
    Flag,
    Pairing,
    Lbc,
    Generation,
}

#[derive(Subcommand)]
enum OpCommand {
    /// Connected sum along identified facets
    ConnectSum {
        input_a: String,
        input_b: String,
        /// Facets to glue, as two comma-lists joined by ':' (e.g. 1,2,3:4,5,6)
        #[arg(long)]
        facets: Option<String>,
        /// Vertex matching second->first as comma-separated pairs a=b
        #[arg(long = "match")]
        matching: Option<String>,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Stellar subdivision at a simplex
    Stellar {
        input: String,
        /// Simplex as comma-separated vertices, e.g. 1,2
        #[arg(long)]
        simplex: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Simplicial join
    Join {
        input_a: String,
        input_b: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Cone
    Cone {
        input: String,
        #[arg(short, long)]
        out: Option<String>,
    },
    /// Suspension
    Suspend {
        input: String,
        #[arg(short, long)]
        out: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Connected-sum ring formula
    Thm4 { input_a: String, input_b: String },
    /// Stellar-subdivision ring formula
    Thm5 {
        input: String,
        /// Simplex as comma-separated vertices
        #[arg(long)]
        simplex: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli
        .config
        .jobs
        .or_else(|| std::env::var("MACX_JOBS").ok().and_then(|s| s.parse().ok()))
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli.config, &cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

// ---------------------------------------------------------------------------
// Errors and input loading
// ---------------------------------------------------------------------------

#[derive(Debug)]
enum CliError {
    Usage(String),
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input(_) => EXIT_INPUT,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Resolves a complex spec: `zoo:NAME`, a bare zoo name, an `.scx` path, or
/// a composite `join(SPEC,SPEC)`.
fn load(spec: &str, config: &Config) -> CliResult<SimplicialComplex> {
    let spec = spec.trim();
    let k = if let Some(inner) = spec
        .strip_prefix("join(")
        .and_then(|r| r.strip_suffix(')'))
    {
        let (a, b) = split_top_level(inner).ok_or_else(|| {
            CliError::Usage(format!("join(..) takes exactly two arguments: {spec}"))
        })?;
        load(a, config)?.join(&load(b, config)?)?
    } else if let Some(name) = spec.strip_prefix("zoo:") {
        zoo::zoo_complex(name)?
    } else if std::path::Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)
            .map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
        scx::parse_scx(&text)?
    } else {
        zoo::zoo_complex(spec)
            .map_err(|_| CliError::Input(format!("no such file or zoo entry: {spec}")))?
    };
    if k.ground_size() > 24 && !config.force {
        return Err(CliError::Usage(format!(
            "ground set has {} > 24 vertices; pass --force to proceed",
            k.ground_size()
        )));
    }
    Ok(k)
}

/// Splits "a,b" at the top-level comma, respecting parentheses.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn parse_coeff(s: &str) -> CliResult<Coeff> {
    match s {
        "z" => Ok(Coeff::Integers),
        "q" => Ok(Coeff::Rationals),
        _ => {
            let p = s
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| {
                    CliError::Usage(format!("bad coefficient spec '{s}' (use z, q, or fp:P)"))
                })?;
            PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Coeff::PrimeField(p))
        }
    }
}

fn parse_simplex(s: &str, m: usize) -> CliResult<VertexSet> {
    let verts: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    let verts = verts.map_err(|_| CliError::Usage(format!("bad simplex spec '{s}'")))?;
    VertexSet::from_slice(&verts, m).map_err(CliError::from)
}

// ---------------------------------------------------------------------------
// Command dispatch
// ---------------------------------------------------------------------------

fn run(config: &Config, command: &Command) -> CliResult<u8> {
    match command {
        Command::Info { input } => cmd_info(config, input),
        Command::Betti { input } => cmd_betti(config, input),
        Command::Bigraded { input } => cmd_bigraded(config, input),
        Command::Ring { input } => cmd_ring(config, input),
        Command::Check { which, input } => cmd_check(config, *which, input),
        Command::Op { op } => cmd_op(config, op),
        Command::Verify { thm } => cmd_verify(config, thm),
        Command::Decompose { input } => cmd_decompose(config, input),
        Command::Compare { input_a, input_b } => cmd_compare(config, input_a, input_b),
    }
}

fn cmd_info(config: &Config, input: &str) -> CliResult<u8> {
    let k = load(input, config)?;
    let gorenstein = is_gorenstein_star(&k, Coeff::Rationals).verdict;
    if config.json {
        let v = serde_json::json!({
            "m": k.vertex_count(),
            "ground_size": k.ground_size(),
            "dim": k.dim(),
            "f_vector": k.f_vector(),
            "euler": k.euler_characteristic(),
            "flags": {
                "pure": k.is_pure(),
                "flag": k.is_flag(),
                "cone": k.is_cone(),
                "gorenstein": gorenstein,
            },
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("m = {} (ground set {})", k.vertex_count(), k.ground_size());
        println!("dim = {}", k.dim());
        println!("f-vector = {:?}", k.f_vector());
        println!("euler characteristic = {}", k.euler_characteristic());
        println!(
            "pure = {}, flag = {}, cone = {}, gorenstein* = {}",
            k.is_pure(),
            k.is_flag(),
            k.is_cone(),
            gorenstein
        );
    }
    Ok(0)
}

fn cmd_betti(config: &Config, input: &str) -> CliResult<u8> {
    let k = load(input, config)?;
    let coeff = parse_coeff(&config.coeff)?;
    if config.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report_json(&k, coeff)).unwrap()
        );
        return Ok(0);
    }
    let b = bigraded_betti(&k, coeff);
    println!("degree  rank  torsion");
    let torsion = b.torsion_by_degree();
    for (p, rank) in b.betti().iter().enumerate() {
        let t = torsion
            .get(&p)
            .map(|fs| {
                fs.iter()
                    .map(|f| format!("Z/{f}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            })
            .unwrap_or_default();
        if *rank > 0 || !t.is_empty() {
            println!("{p:>6}  {rank:>4}  {t}");
        }
    }
    Ok(0)
}

fn cmd_bigraded(config: &Config, input: &str) -> CliResult<u8> {
    let k = load(input, config)?;
    let coeff = parse_coeff(&config.coeff)?;
    let b = bigraded_betti(&k, coeff);
    if config.json {
        let rows: Vec<_> = b
            .rows()
            .into_iter()
            .map(|(j, d, rank)| {
                serde_json::json!({"J": j.to_vec(), "d": d, "rank": rank})
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({"bigraded": rows})).unwrap()
        );
    } else {
        println!("J  (reduced degree d)  rank   [total degree |J|+d+1]");
        for (j, d, rank) in b.rows() {
            let total = j.len() as isize + d + 1;
            println!("{j}  d={d}  rank={rank}  [p={total}]");
        }
    }
    Ok(0)
}

fn ring_output(
    config: &Config,
    algebra: &GradedAlgebra<Rationals>,
    label: &str,
) -> CliResult<u8> {
    let fp = fingerprint(algebra);
    if config.json {
        let mut v = algebra.to_json();
        v["fingerprint"] = fingerprint_to_json(&fp);
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("ring over {label}: dimension {}", algebra.dim());
        println!("Hilbert function: {:?}", algebra.hilbert());
        println!("nonzero products: {}", algebra.products.len());
        println!("fingerprint: {}", fingerprint_to_json(&fp));
    }
    Ok(0)
}

fn cmd_ring(config: &Config, input: &str) -> CliResult<u8> {
    let k = load(input, config)?;
    match parse_coeff(&config.coeff)? {
        Coeff::Integers => {
            let ring = hochster_ring_over_z(&k)?;
            ring_output(config, &algebra_from_hochster(&ring), "Z (torsion-free)")
        }
        Coeff::Rationals => {
            let ring = hochster_ring(Rationals, &k);
            ring_output(config, &algebra_from_hochster(&ring), "Q")
        }
        Coeff::PrimeField(p) => {
            let f = PrimeField::new(p)?;
            let ring = hochster_ring(f, &k);
            let algebra = algebra_from_hochster(&ring);
            let fp = fingerprint(&algebra);
            if config.json {
                let mut v = algebra.to_json();
                v["fingerprint"] = fingerprint_to_json(&fp);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("ring over F_{p}: dimension {}", algebra.dim());
                println!("Hilbert function: {:?}", algebra.hilbert());
                println!("fingerprint: {}", fingerprint_to_json(&fp));
            }
            Ok(0)
        }
    }
}

fn verdict_exit(verdict: bool) -> u8 {
    if verdict {
        0
    } else {
        EXIT_FALSE
    }
}

fn print_verdict(config: &Config, name: &str, verdict: bool, detail: serde_json::Value) {
    if config.json {
        let v = serde_json::json!({"check": name, "verdict": verdict, "detail": detail});
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{name}: {}", if verdict { "true" } else { "false" });
        if !detail.is_null() {
            println!("  {detail}");
        }
    }
}

fn cmd_check(config: &Config, which: CheckKind, input: &str) -> CliResult<u8> {
    let k = load(input, config)?;
    let coeff = parse_coeff(&config.coeff)?;
    match which {
        CheckKind::Gorenstein => {
            let rep = is_gorenstein_star(&k, coeff);
            let detail = rep
                .failure
                .map(|f| serde_json::json!(format!("{f:?}")))
                .unwrap_or(serde_json::Value::Null);
            print_verdict(config, "gorenstein", rep.verdict, detail);
            Ok(verdict_exit(rep.verdict))
        }
        CheckKind::Flag => {
            let verdict = k.is_flag();
            let witness = if verdict {
                serde_json::Value::Null
            } else {
                let mf: Vec<_> = k
                    .missing_faces()
                    .into_iter()
                    .filter(|f| f.len() > 2)
                    .map(|f| f.to_vec())
                    .collect();
                serde_json::json!({ "non_edge_missing_faces": mf })
            };
            print_verdict(config, "flag", verdict, witness);
            Ok(verdict_exit(verdict))
        }
        CheckKind::Pairing => {
            let verdict = match coeff {
                Coeff::PrimeField(p) => {
                    poincare_pairing_check(&hochster_ring(PrimeField::new(p)?, &k))
                }
                _ => poincare_pairing_check(&hochster_ring(Rationals, &k)),
            }
            .unwrap_or(false);
            print_verdict(config, "poincare_pairing", verdict, serde_json::Value::Null);
            Ok(verdict_exit(verdict))
        }
        CheckKind::Lbc => {
            let rep = lbc_check(&k)?;
            print_verdict(
                config,
                "lbc",
                rep.holds,
                serde_json::json!({"edges": rep.edges, "bound": rep.bound}),
            );
            Ok(verdict_exit(rep.holds))
        }
        CheckKind::Generation => {
            let rep = match coeff {
                Coeff::PrimeField(p) => {
                    generation_by_degree_one(&hochster_ring(PrimeField::new(p)?, &k))
                }
                _ => generation_by_degree_one(&hochster_ring(Rationals, &k)),
            };
            let detail = if rep.generated {
                serde_json::Value::Null
            } else {
                let sweep = rep.partition_sweep.map(|(l, total, both)| {
                    serde_json::json!({
                        "target": l.to_vec(),
                        "partitions": total,
                        "both_factors_nonzero": both,
                    })
                });
                serde_json::json!({
                    "failures": rep
                        .failures
                        .iter()
                        .map(|(l, d)| serde_json::json!({"J": l.to_vec(), "d": d}))
                        .collect::<Vec<_>>(),
                    "partition_sweep": sweep,
                })
            };
            print_verdict(config, "generation", rep.generated, detail);
            Ok(verdict_exit(rep.generated))
        }
    }
}

fn emit_complex(k: &SimplicialComplex, out: &Option<String>) -> CliResult<u8> {
    let text = scx::write_scx(k);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{path}: {e}")))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_op(config: &Config, op: &OpCommand) -> CliResult<u8> {
    match op {
        OpCommand::ConnectSum {
            input_a,
            input_b,
            facets,
            matching,
            out,
        } => {
            let a = load(input_a, config)?;
            let b = load(input_b, config)?;
            let k = match (facets, matching) {
                (None, None) => a.connected_sum_default(&b)?,
                (Some(fs), matching) => {
                    let (f1s, f2s) = fs.split_once(':').ok_or_else(|| {
                        CliError::Usage("--facets expects F1:F2 (two comma-lists)".into())
                    })?;
                    let f1 = parse_simplex(f1s, a.ground_size())?;
                    let f2 = parse_simplex(f2s, b.ground_size())?;
                    let pairs: Vec<(usize, usize)> = match matching {
                        None => f2.iter().zip(f1.iter()).collect(),
                        Some(ms) => ms
                            .split(',')
                            .map(|pair| {
                                let (x, y) = pair.split_once('=').ok_or_else(|| {
                                    CliError::Usage(
                                        "--match expects comma-separated a=b pairs".into(),
                                    )
                                })?;
                                let x = x.trim().parse().map_err(|_| {
                                    CliError::Usage(format!("bad vertex '{x}'"))
                                })?;
                                let y = y.trim().parse().map_err(|_| {
                                    CliError::Usage(format!("bad vertex '{y}'"))
                                })?;
                                Ok((x, y))
                            })
                            .collect::<CliResult<_>>()?,
                    };
                    a.connected_sum(f1, &b, f2, &pairs)?
                }
                (None, Some(_)) => {
                    return Err(CliError::Usage("--match requires --facets".into()))
                }
            };
            emit_complex(&k, out)
        }
        OpCommand::Stellar { input, simplex, out } => {
            let k = load(input, config)?;
            let sigma = parse_simplex(simplex, k.ground_size())?;
            emit_complex(&k.stellar_subdivision(sigma)?, out)
        }
        OpCommand::Join { input_a, input_b, out } => {
            let k = load(input_a, config)?.join(&load(input_b, config)?)?;
            emit_complex(&k, out)
        }
        OpCommand::Cone { input, out } => {
            emit_complex(&load(input, config)?.cone()?, out)
        }
        OpCommand::Suspend { input, out } => {
            emit_complex(&load(input, config)?.suspension()?, out)
        }
    }
}

fn report_verify(config: &Config, name: &str, rep: &macx_core::verify::VerifyReport) -> u8 {
    let verdict_str = match &rep.verdict {
        Verdict::Pass => "PASS".to_string(),
        Verdict::Fail => "FAIL".to_string(),
        Verdict::Skipped(reason) => format!("SKIPPED ({reason})"),
    };
    if config.json {
        let v = serde_json::json!({
            "verify": name,
            "verdict": verdict_str,
            "certificate": rep.certificate.as_ref().map(|c| format!("{c:?}")),
            "computed": rep.computed.as_ref().map(fingerprint_to_json),
            "predicted": rep.predicted.as_ref().map(fingerprint_to_json),
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{name}: {verdict_str}");
        if let Some(c) = &rep.certificate {
            println!("  hypothesis certified by: {c:?}");
        }
        if let (Some(a), Some(b)) = (&rep.computed, &rep.predicted) {
            println!("  computed : {}", fingerprint_to_json(a));
            println!("  predicted: {}", fingerprint_to_json(b));
        }
    }
    match rep.verdict {
        Verdict::Fail => EXIT_FALSE,
        _ => 0,
    }
}

fn cmd_verify(config: &Config, thm: &VerifyCommand) -> CliResult<u8> {
    match thm {
        VerifyCommand::Thm4 { input_a, input_b } => {
            let a = load(input_a, config)?;
            let b = load(input_b, config)?;
            let rep = match parse_coeff(&config.coeff)? {
                Coeff::PrimeField(p) => {
                    macx_core::verify::verify_thm4_with(PrimeField::new(p)?, &a, &b)?
                }
                _ => verify_thm4(&a, &b)?,
            };
            Ok(report_verify(config, "thm4", &rep))
        }
        VerifyCommand::Thm5 { input, simplex } => {
            let k = load(input, config)?;
            let sigma = parse_simplex(simplex, k.ground_size())?;
            let rep = verify_thm5(&k, sigma)?;
            Ok(report_verify(config, "thm5", &rep))
        }
    }
}

/// Factors of a 2-sphere with their quotient-by-top ring fingerprints.
fn factor_fingerprints(
    k: &SimplicialComplex,
) -> CliResult<Vec<(SimplicialComplex, RingFingerprint)>> {
    let factors = macx_core::decompose::irreducible_decomposition(k)?;
    factors
        .into_iter()
        .map(|f| {
            let c = f.on_own_vertices();
            let ring = algebra_from_hochster(&hochster_ring(Rationals, &c));
            let fp = fingerprint(&quotient_by_top(&ring)?);
            Ok((c, fp))
        })
        .collect()
}

fn cmd_decompose(config: &Config, input: &str) -> CliResult<u8> {
    let k = load(input, config)?;
    let factors = factor_fingerprints(&k)?;
    if config.json {
        let list: Vec<_> = factors
            .iter()
            .map(|(f, fp)| {
                serde_json::json!({
                    "m": f.vertex_count(),
                    "flag": f.is_flag(),
                    "fingerprint": fingerprint_to_json(fp),
                })
            })
            .collect();
        let v = serde_json::json!({
            "factors": list,
            "prime": factors.len() == 1,
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("{} irreducible factor(s)", factors.len());
        for (i, (f, fp)) in factors.iter().enumerate() {
            println!(
                "  factor {}: m={}, flag={}, fingerprint {}",
                i + 1,
                f.vertex_count(),
                f.is_flag(),
                fingerprint_to_json(fp)
            );
        }
        if factors.len() == 1 {
            println!("prime: the sphere admits no connected-sum decomposition");
        }
    }
    Ok(0)
}

fn cmd_compare(config: &Config, input_a: &str, input_b: &str) -> CliResult<u8> {
    let a = load(input_a, config)?;
    let b = load(input_b, config)?;
    let fa: Vec<RingFingerprint> = factor_fingerprints(&a)?.into_iter().map(|p| p.1).collect();
    let fb: Vec<RingFingerprint> = factor_fingerprints(&b)?.into_iter().map(|p| p.1).collect();
    let permutation = match_factors(&fa, &fb);
    let verdict = permutation.is_some();
    if config.json {
        let v = serde_json::json!({
            "factors_a": fa.len(),
            "factors_b": fb.len(),
            "match": verdict,
            "permutation": permutation,
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!(
            "factors: {} vs {}; match: {}",
            fa.len(),
            fb.len(),
            verdict
        );
        if let Some(p) = &permutation {
            println!("  permutation: {p:?}");
        }
    }
    Ok(verdict_exit(verdict))
}
