//! The `sgx` command-line front end.
//!
//! Subcommands: `construct`, `spectrum`, `check`, `search`, `verify`,
//! `canon`, `switch`, `verify-cert`. Graph input is newline-delimited sg6
//! (file argument or stdin, `#` lines are comments); outputs are JSON
//! (default, schema-stable key order with a `"schema": 1` field), CSV
//! (unquoted, `.` decimal separator, reals at 12 significant digits), or a
//! plain table. Exit codes: 0 success, 1 domain/usage error, 2 guard or
//! capability error, 3 verification failure.

use crate::constructions;
use crate::error::{Error, Result};
use crate::forbidden;
use crate::search::{
    extremal_search, lemmas, verify_certificate, verify_extremal_structure, Family, Objective,
    SearchCertificate, SearchSpec,
};
use crate::sgraph::{decode_sg6, encode_sg6, read_sg6_lines, SignedGraph, VertexSet};
use crate::spectra;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "sgx",
    version,
    about = "Signed-graph spectral toolkit: constructions, spectra, forbidden substructures, extremal search"
)]
struct Cli {
    /// Output format for record-producing commands.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Worker threads for searches (default from SGX_JOBS, else 1).
    #[arg(long, global = true, env = "SGX_JOBS")]
    jobs: Option<usize>,
    /// Tolerance for eigenvalue-equality assertions in verification suites.
    #[arg(long, global = true)]
    eq_tol: Option<f64>,
    /// Tolerance for strict-inequality margins in verification suites.
    #[arg(long, global = true)]
    ord_tol: Option<f64>,
    /// Optional `key = value` config file (flags override it).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Emit a named construction as an sg6 line.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Eigenvalues, index, spectral radius, balance, negative-edge count.
    Spectrum {
        /// sg6 input file; `-` or absent reads stdin.
        input: Option<PathBuf>,
    },
    /// Forbidden-substructure verdict for exactly one family.
    #[command(group(ArgGroup::new("family").required(true).args(["tk4_free", "kr_free", "c3_free"])))]
    Check {
        input: Option<PathBuf>,
        /// Fewer than T unbalanced 4-cliques.
        #[arg(long, value_name = "T")]
        tk4_free: Option<u64>,
        /// No unbalanced complete subgraph on R vertices.
        #[arg(long, value_name = "R")]
        kr_free: Option<usize>,
        /// No negative triangle.
        #[arg(long)]
        c3_free: bool,
    },
    /// Extremal search over unbalanced signed graphs of order N.
    Search {
        #[arg(long)]
        n: usize,
        /// Family searched (inferred from --t/--r when omitted).
        #[arg(long)]
        family: Option<FamilyArg>,
        /// Parameter for tk4-free.
        #[arg(long)]
        t: Option<u64>,
        /// Parameter for kr-free.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value = "index")]
        objective: ObjectiveArg,
        #[arg(long)]
        connected_only: bool,
        /// Disable pruning (exhaustive mode; guarded to n <= 6).
        #[arg(long, alias = "no-prune")]
        exhaustive: bool,
        /// Write the certificate JSON here instead of stdout.
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Append-only checkpoint journal; reruns resume from it.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Run a verification suite: 2.1, 2.2, 2.3, 2.4, 2.9, or 3.1.
    Verify {
        suite: String,
        /// Range `A..B` for the order parameter (suites 2.4 and 2.9).
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Canonical switching-class representative of each input graph.
    Canon {
        input: Option<PathBuf>,
    },
    /// Switch each input graph at the given vertex set.
    Switch {
        input: Option<PathBuf>,
        /// Comma-separated vertices, e.g. `0,3,5`.
        #[arg(long, value_name = "LIST")]
        set: String,
    },
    /// Re-check a previously written certificate.
    VerifyCert {
        path: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    AllUnbalanced,
    Tk4Free,
    KrFree,
    C3Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectiveArg {
    Index,
    SpectralRadius,
}

#[derive(Debug, Subcommand)]
enum ConstructKind {
    /// K_{n-1} plus a vertex joined to s+1 of its vertices, one joining
    /// edge negative.
    Gamma {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    /// The five-block construction, with the clique parameter r explicit.
    Sigma {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Complete graph with exactly one negative edge.
    CompleteNeg {
        #[arg(long)]
        n: usize,
    },
    /// All-positive complete graph.
    CompletePos {
        #[arg(long)]
        n: usize,
    },
}

/// Effective run configuration after merging config file and flags.
struct RunConfig {
    format: OutputFormat,
    jobs: usize,
    tols: lemmas::Tolerances,
    checkpoint: Option<PathBuf>,
}

fn parse_config_file(path: &Path) -> Result<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::domain(format!("config line {}: expected `key = value`", lineno + 1))
        })?;
        out.push((key.trim().to_string(), value.trim().to_string()));
    }
    Ok(out)
}

fn build_config(cli: &Cli) -> Result<RunConfig> {
    let mut format = None;
    let mut jobs = None;
    let mut eq_tol = None;
    let mut ord_tol = None;
    let mut checkpoint = None;
    if let Some(path) = &cli.config {
        for (key, value) in parse_config_file(path)? {
            match key.as_str() {
                "format" => {
                    format = Some(match value.as_str() {
                        "json" => OutputFormat::Json,
                        "csv" => OutputFormat::Csv,
                        "table" => OutputFormat::Table,
                        other => {
                            return Err(Error::domain(format!("config: unknown format {other:?}")))
                        }
                    })
                }
                "jobs" => {
                    jobs = Some(value.parse().map_err(|_| Error::domain("config: bad jobs"))?)
                }
                "eq_tol" => {
                    eq_tol = Some(value.parse().map_err(|_| Error::domain("config: bad eq_tol"))?)
                }
                "ord_tol" => {
                    ord_tol =
                        Some(value.parse().map_err(|_| Error::domain("config: bad ord_tol"))?)
                }
                "checkpoint" => checkpoint = Some(PathBuf::from(value)),
                other => return Err(Error::domain(format!("config: unknown key {other:?}"))),
            }
        }
    }
    let tols = lemmas::Tolerances {
        eq_tol: cli.eq_tol.or(eq_tol).unwrap_or(crate::EQ_TOL),
        ord_tol: cli.ord_tol.or(ord_tol).unwrap_or(crate::ORD_TOL),
    };
    if tols.eq_tol <= 0.0 || tols.ord_tol <= 0.0 {
        return Err(Error::domain("tolerances must be positive"));
    }
    let jobs = cli.jobs.or(jobs).unwrap_or(1);
    if jobs < 1 {
        return Err(Error::domain("jobs must be >= 1"));
    }
    let format = cli.format.or(format).unwrap_or(OutputFormat::Json);
    Ok(RunConfig { format, jobs, tols, checkpoint })
}

/// `%.12g`-style formatting: 12 significant digits, trailing zeros trimmed.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&mag) {
        let s = format!("{:.11e}", x);
        // Trim zeros in the mantissa: "2.30000000000e15" -> "2.3e15".
        if let Some(epos) = s.find('e') {
            let (mant, exp) = s.split_at(epos);
            let mant = mant.trim_end_matches('0').trim_end_matches('.');
            return format!("{mant}{exp}");
        }
        return s;
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn read_input_graphs(input: &Option<PathBuf>) -> Result<Vec<(usize, SignedGraph)>> {
    match input {
        Some(p) if p.as_os_str() != "-" => {
            let file = std::fs::File::open(p)?;
            read_sg6_lines(std::io::BufReader::new(file))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            read_sg6_lines(text.as_bytes())
        }
    }
}

#[derive(Serialize)]
struct SpectrumRecord {
    schema: u32,
    n: usize,
    m: usize,
    eigenvalues: Vec<f64>,
    index: f64,
    spectral_radius: f64,
    balanced: bool,
    negative_edges: usize,
}

fn cmd_spectrum(input: &Option<PathBuf>, config: &RunConfig, out: &mut impl Write) -> Result<()> {
    let graphs = read_input_graphs(input)?;
    if config.format == OutputFormat::Csv {
        writeln!(out, "n,m,index,spectral_radius,balanced,negative_edges,eigenvalues")?;
    }
    for (_, g) in graphs {
        let spec = spectra::spectrum(&g)?;
        let record = SpectrumRecord {
            schema: 1,
            n: g.order(),
            m: g.size(),
            eigenvalues: spec.values().to_vec(),
            index: spec.index(),
            spectral_radius: spec.spectral_radius(),
            balanced: g.is_balanced(),
            negative_edges: g.negative_edge_count(),
        };
        match config.format {
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&record).unwrap())?,
            OutputFormat::Csv => {
                let eigs: Vec<String> =
                    record.eigenvalues.iter().map(|v| fmt_sig12(*v)).collect();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    record.n,
                    record.m,
                    fmt_sig12(record.index),
                    fmt_sig12(record.spectral_radius),
                    record.balanced,
                    record.negative_edges,
                    eigs.join(" ")
                )?;
            }
            OutputFormat::Table => {
                writeln!(out, "n               {}", record.n)?;
                writeln!(out, "m               {}", record.m)?;
                writeln!(out, "index           {}", fmt_sig12(record.index))?;
                writeln!(out, "spectral_radius {}", fmt_sig12(record.spectral_radius))?;
                writeln!(out, "balanced        {}", record.balanced)?;
                writeln!(out, "negative_edges  {}", record.negative_edges)?;
                let eigs: Vec<String> =
                    record.eigenvalues.iter().map(|v| fmt_sig12(*v)).collect();
                writeln!(out, "eigenvalues     {}", eigs.join(" "))?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckRecord {
    schema: u32,
    family: String,
    param: Option<u64>,
    free: bool,
    count_unbalanced_k4: Option<u64>,
    balanced: bool,
    warning: Option<String>,
}

fn cmd_check(
    input: &Option<PathBuf>,
    family: Family,
    config: &RunConfig,
    out: &mut impl Write,
) -> Result<()> {
    let graphs = read_input_graphs(input)?;
    if config.format == OutputFormat::Csv {
        writeln!(out, "family,param,free,count_unbalanced_k4,balanced")?;
    }
    for (_, g) in graphs {
        let free = family.contains(&g)?;
        let count = match family {
            Family::Tk4Free(_) => Some(forbidden::count_unbalanced_k4(&g)),
            _ => None,
        };
        let balanced = g.is_balanced();
        let record = CheckRecord {
            schema: 1,
            family: family.name().to_string(),
            param: family.param(),
            free,
            count_unbalanced_k4: count,
            balanced,
            warning: balanced.then(|| "input is balanced".to_string()),
        };
        match config.format {
            OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&record).unwrap())?,
            OutputFormat::Csv => writeln!(
                out,
                "{},{},{},{},{}",
                record.family,
                record.param.map_or(String::new(), |p| p.to_string()),
                record.free,
                record.count_unbalanced_k4.map_or(String::new(), |c| c.to_string()),
                record.balanced
            )?,
            OutputFormat::Table => {
                let param = record.param.map_or(String::new(), |p| format!("({p})"));
                writeln!(
                    out,
                    "{}{}: free={} count_unbalanced_k4={} balanced={}{}",
                    record.family,
                    param,
                    record.free,
                    record.count_unbalanced_k4.map_or("-".to_string(), |c| c.to_string()),
                    record.balanced,
                    record.warning.as_deref().map_or(String::new(), |w| format!(" ({w})"))
                )?;
            }
        }
    }
    Ok(())
}

fn resolve_family(family: Option<FamilyArg>, t: Option<u64>, r: Option<usize>) -> Result<Family> {
    match (family, t, r) {
        (Some(FamilyArg::AllUnbalanced), None, None) => Ok(Family::AllUnbalanced),
        (Some(FamilyArg::Tk4Free), Some(t), None) => Ok(Family::Tk4Free(t)),
        (Some(FamilyArg::KrFree), None, Some(r)) => Ok(Family::KrFree(r)),
        (Some(FamilyArg::C3Free), None, None) => Ok(Family::C3Free),
        (None, Some(t), None) => Ok(Family::Tk4Free(t)),
        (None, None, Some(r)) => Ok(Family::KrFree(r)),
        (None, None, None) => Ok(Family::AllUnbalanced),
        _ => Err(Error::domain(
            "inconsistent family flags: pass --family with its matching parameter (--t for tk4-free, --r for kr-free)",
        )),
    }
}

fn cmd_search(
    spec: SearchSpec,
    certificate_path: Option<PathBuf>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> Result<()> {
    let cert = extremal_search(&spec)?;
    let json = serde_json::to_string_pretty(&cert).unwrap();
    match &certificate_path {
        Some(path) => std::fs::write(path, json + "\n")?,
        None => writeln!(out, "{json}")?,
    }
    writeln!(err, "best_value  {}", fmt_sig12(cert.best_value))?;
    writeln!(err, "witness     {}", cert.witness)?;
    match &cert.matches_construction {
        Some(mc) => writeln!(
            err,
            "matches_construction  {}{:?} switching_isomorphic={}",
            mc.name, mc.params, mc.switching_isomorphic
        )?,
        None => writeln!(err, "matches_construction  none recorded for this family")?,
    }
    if let Family::Tk4Free(t) = spec.family {
        let witness = decode_sg6(&cert.witness)?;
        let report = verify_extremal_structure(&witness, t)?;
        writeln!(err, "structure   {}", serde_json::to_string(&report).unwrap())?;
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::domain(format!("expected a range like 30..60, got {text:?}")))?;
    let lo = a.trim().parse().map_err(|_| Error::domain("bad range start"))?;
    let hi = b.trim().parse().map_err(|_| Error::domain("bad range end"))?;
    if lo > hi {
        return Err(Error::domain("empty range"));
    }
    Ok((lo, hi))
}

fn cmd_verify(
    suite: &str,
    n_range: Option<(usize, usize)>,
    n_max: Option<usize>,
    config: &RunConfig,
    out: &mut impl Write,
) -> Result<()> {
    let params = lemmas::SuiteParams {
        n_min: n_range.map(|(lo, _)| lo),
        n_max: n_range.map(|(_, hi)| hi).or(n_max),
        jobs: Some(config.jobs),
        tols: Some(config.tols),
    };
    let report = lemmas::lemma_suite(suite, &params)?;
    match config.format {
        OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&report).unwrap())?,
        OutputFormat::Csv => {
            writeln!(out, "suite,params,margin,pass,skipped")?;
            for row in &report.rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    report.suite,
                    row.params.replace(' ', ";"),
                    if row.skipped { String::new() } else { fmt_sig12(row.margin) },
                    row.pass,
                    row.skipped
                )?;
            }
        }
        OutputFormat::Table => {
            for row in &report.rows {
                let status =
                    if row.skipped { "SKIP" } else if row.pass { "pass" } else { "FAIL" };
                let margin = if row.skipped { "-".to_string() } else { fmt_sig12(row.margin) };
                writeln!(out, "{status}  {:20} margin={margin:16}  {}", row.params, row.detail)?;
            }
            writeln!(
                out,
                "suite {}: {} ({} rows, worst margin {})",
                report.suite,
                if report.pass { "pass" } else { "FAIL" },
                report.rows.len(),
                fmt_sig12(report.worst_margin)
            )?;
        }
    }
    if !report.pass {
        return Err(Error::Verification(format!("suite {} failed", report.suite)));
    }
    Ok(())
}

fn cmd_canon(input: &Option<PathBuf>, out: &mut impl Write) -> Result<()> {
    for (_, g) in read_input_graphs(input)? {
        writeln!(out, "{}", encode_sg6(&g.canonical_signature()))?;
    }
    Ok(())
}

fn cmd_switch(input: &Option<PathBuf>, set: &str, out: &mut impl Write) -> Result<()> {
    let mut verts = VertexSet::EMPTY;
    if !set.trim().is_empty() {
        for part in set.split(',') {
            let v: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("bad vertex {part:?} in --set")))?;
            if v >= crate::MAX_N {
                return Err(Error::domain(format!("vertex {v} out of range")));
            }
            verts.insert(v);
        }
    }
    for (lineno, g) in read_input_graphs(input)? {
        if !verts.is_subset_of(VertexSet::full(g.order())) {
            return Err(Error::domain(format!(
                "line {lineno}: --set contains vertices outside 0..{}",
                g.order()
            )));
        }
        writeln!(out, "{}", encode_sg6(&g.switch(verts)))?;
    }
    Ok(())
}

fn cmd_verify_cert(path: &Path, out: &mut impl Write) -> Result<()> {
    let text = std::fs::read_to_string(path)?;
    let cert: SearchCertificate = serde_json::from_str(&text)
        .map_err(|e| Error::domain(format!("certificate parse: {e}")))?;
    verify_certificate(&cert)?;
    writeln!(out, "certificate ok: best_value={} witness={}", cert.best_value, cert.witness)?;
    Ok(())
}

fn run_command(cli: Cli) -> Result<()> {
    let config = build_config(&cli)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let stderr = std::io::stderr();
    let mut err = stderr.lock();
    match cli.cmd {
        Cmd::Construct { kind } => {
            let g = match kind {
                ConstructKind::Gamma { s, n } => constructions::gamma(s, n)?,
                ConstructKind::Sigma { k, r, n } => constructions::sigma(k, r, n)?,
                ConstructKind::CompleteNeg { n } => constructions::complete_one_negative(n)?,
                ConstructKind::CompletePos { n } => constructions::complete_positive(n)?,
            };
            writeln!(out, "{}", encode_sg6(&g))?;
            Ok(())
        }
        Cmd::Spectrum { input } => cmd_spectrum(&input, &config, &mut out),
        Cmd::Check { input, tk4_free, kr_free, c3_free } => {
            let family = match (tk4_free, kr_free, c3_free) {
                (Some(t), None, false) => Family::Tk4Free(t),
                (None, Some(r), false) => Family::KrFree(r),
                (None, None, true) => Family::C3Free,
                _ => return Err(Error::domain("pass exactly one family flag")),
            };
            cmd_check(&input, family, &config, &mut out)
        }
        Cmd::Search {
            n,
            family,
            t,
            r,
            objective,
            connected_only,
            exhaustive,
            certificate,
            checkpoint,
        } => {
            let family = resolve_family(family, t, r)?;
            let objective = match objective {
                ObjectiveArg::Index => Objective::Index,
                ObjectiveArg::SpectralRadius => Objective::SpectralRadius,
            };
            let spec = SearchSpec {
                n,
                objective,
                family,
                connected_only,
                prune: !exhaustive,
                jobs: config.jobs,
                checkpoint_path: checkpoint.or(config.checkpoint.clone()),
            };
            cmd_search(spec, certificate, &mut out, &mut err)
        }
        Cmd::Verify { suite, n, n_max } => {
            let n_range = n.as_deref().map(parse_range).transpose()?;
            cmd_verify(&suite, n_range, n_max, &config, &mut out)
        }
        Cmd::Canon { input } => cmd_canon(&input, &mut out),
        Cmd::Switch { input, set } => cmd_switch(&input, &set, &mut out),
        Cmd::VerifyCert { path } => cmd_verify_cert(&path, &mut out),
    }
}

/// Entry point for the `sgx` binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("sgx: {e}");
            e.exit_code()
        }
    }
}
