use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use jetseries::jetquot::{JetOptions, DEFAULT_MONOMIAL_CAP};
use jetseries::models::{self, formulas, registry_file, Model, VerificationReport};

#[derive(Parser)]
#[command(name = "jetseries", version, about = "Jet algebra Hilbert series versus q-series characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare jet Hilbert series with registered characters.
    Verify(VerifyArgs),
    /// Print the coefficients of a named q-series.
    Expand(ExpandArgs),
    /// List registered models and formula keys.
    List(ListArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Model key; may be repeated.
    #[arg(long = "model", short = 'm')]
    models: Vec<String>,
    /// Verify every registered model.
    #[arg(long, conflicts_with = "models")]
    all: bool,
    /// Truncation in doubled degree; defaults to each model's own.
    #[arg(long)]
    maxdeg2: Option<u32>,
    /// Largest number of monomials allowed in one degree.
    #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP)]
    cap: usize,
    /// Extra models in the plain-text registry format.
    #[arg(long)]
    registry: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct ExpandArgs {
    /// Formula key such as theta:3 or jm:A4.
    formula: String,
    #[arg(long, default_value_t = 20)]
    maxdeg2: u32,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Args)]
struct ListArgs {
    /// Keep models whose key or topic contains this text; formulas are omitted.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    registry: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut out = out.lock();
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(&a, &mut out),
        Command::Expand(a) => cmd_expand(&a, &mut out).map(|_| true),
        Command::List(a) => cmd_list(&a, &mut out).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_catalog(registry: Option<&PathBuf>) -> Result<BTreeMap<String, Model>> {
    let mut catalog: BTreeMap<String, Model> = models::registry().into_iter().map(|m| (m.key.clone(), m)).collect();
    if let Some(path) = registry {
        let src = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let extra = registry_file::parse_registry(&src).with_context(|| format!("parsing {}", path.display()))?;
        for m in extra {
            catalog.insert(m.key.clone(), m);
        }
    }
    Ok(catalog)
}

fn select(args: &VerifyArgs) -> Result<Vec<Model>> {
    let catalog = load_catalog(args.registry.as_ref())?;
    if args.all {
        return Ok(catalog.into_values().collect());
    }
    if args.models.is_empty() {
        bail!("nothing to verify; pass --model <key> or --all");
    }
    let mut chosen = Vec::with_capacity(args.models.len());
    for key in &args.models {
        let m = match catalog.get(key) {
            Some(m) => m.clone(),
            None => models::lookup(key)?,
        };
        chosen.push(m);
    }
    Ok(chosen)
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<bool> {
    let chosen = select(args)?;
    let opts = JetOptions { monomial_cap: args.cap, ..JetOptions::default() };
    let mut reports = Vec::with_capacity(chosen.len());
    for m in &chosen {
        let maxdeg2 = args.maxdeg2.unwrap_or(m.default_maxdeg2);
        let r = models::verify(m, maxdeg2, &opts).with_context(|| format!("verifying {}", m.key))?;
        if let Format::Human = args.format {
            write_human(out, &r)?;
        }
        reports.push(r);
    }
    match args.format {
        Format::Human => write_summary(out, &reports)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &reports)?;
            writeln!(out)?;
        }
        Format::Csv => write_csv(out, &reports)?,
    }
    Ok(reports.iter().all(|r| r.matches_expectation))
}

fn q_exponent(d: u32) -> String {
    if d % 2 == 0 {
        format!("q^{}", d / 2)
    } else {
        format!("q^{{{d}/2}}")
    }
}

fn write_human(out: &mut impl Write, r: &VerificationReport) -> Result<()> {
    writeln!(out, "{}  (maxdeg2 {}, expected {})", r.model, r.maxdeg2, screaming(&r.expected)?)?;
    writeln!(out, "  {:<10} {:>10} {:>10} {:>10}", "degree", "spanning", "jet", "character")?;
    for row in &r.rows {
        let dash = || "-".to_string();
        let flag = match &row.character {
            Some(c) if *c != row.jet_dim => "  *",
            _ => "",
        };
        writeln!(
            out,
            "  {:<10} {:>10} {:>10} {:>10}{flag}",
            q_exponent(row.degree2),
            row.spanning.clone().unwrap_or_else(dash),
            row.jet_dim,
            row.character.clone().unwrap_or_else(dash),
        )?;
    }
    let at = r.mismatch_degree2.map(|d| format!(" at {}", q_exponent(d))).unwrap_or_default();
    let ok = if r.matches_expectation { "as expected" } else { "DEVIATES from expectation" };
    writeln!(out, "  verdict {}{at}, {ok}", screaming(&r.verdict)?)?;
    for n in &r.notes {
        writeln!(out, "  note: {n}")?;
    }
    writeln!(out)?;
    Ok(())
}

fn write_summary(out: &mut impl Write, reports: &[VerificationReport]) -> Result<()> {
    let bad: Vec<&str> = reports.iter().filter(|r| !r.matches_expectation).map(|r| r.model.as_str()).collect();
    writeln!(out, "{} model(s) verified, {} as expected", reports.len(), reports.len() - bad.len())?;
    if !bad.is_empty() {
        writeln!(out, "deviating: {}", bad.join(", "))?;
    }
    Ok(())
}

fn write_csv(out: &mut impl Write, reports: &[VerificationReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["model", "maxdeg2", "degree2", "spanning", "jet_dim", "character", "verdict", "mismatch_degree2"])?;
    for r in reports {
        let verdict = screaming(&r.verdict)?;
        let mm = r.mismatch_degree2.map(|d| d.to_string()).unwrap_or_default();
        for row in &r.rows {
            w.write_record([
                r.model.as_str(),
                &r.maxdeg2.to_string(),
                &row.degree2.to_string(),
                row.spanning.as_deref().unwrap_or(""),
                &row.jet_dim,
                row.character.as_deref().unwrap_or(""),
                &verdict,
                &mm,
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

fn screaming<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_value(v)?.as_str().unwrap_or_default().to_string())
}

fn cmd_expand(args: &ExpandArgs, out: &mut impl Write) -> Result<()> {
    let s = formulas::expand(&args.formula, args.maxdeg2)?;
    let coeffs: Vec<String> = s.coefficients().iter().map(|c| c.to_string()).collect();
    match args.format {
        Format::Human => {
            for (d, c) in coeffs.iter().enumerate() {
                writeln!(out, "{d:>4}  {:<10} {c}", q_exponent(d as u32))?;
            }
        }
        Format::Json => {
            let v = serde_json::json!({ "formula": args.formula, "maxdeg2": args.maxdeg2, "coefficients": coeffs });
            serde_json::to_writer_pretty(&mut *out, &v)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["degree2", "coefficient"])?;
            for (d, c) in coeffs.iter().enumerate() {
                w.write_record([d.to_string().as_str(), c])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn cmd_list(args: &ListArgs, out: &mut impl Write) -> Result<()> {
    let catalog = load_catalog(args.registry.as_ref())?;
    let keep = |key: &str, topic: &str| match &args.filter {
        Some(f) => key.contains(f.as_str()) || topic.contains(f.as_str()),
        None => true,
    };
    for m in catalog.values().filter(|m| keep(&m.key, &m.topic)) {
        writeln!(
            out,
            "{:<18} {:<17} {:<15} {}",
            m.key,
            m.topic,
            screaming(&m.expected)?,
            m.summary
        )?;
    }
    if args.filter.is_none() {
        let mut fs: Vec<_> = formulas::FORMULA_KEYS.to_vec();
        fs.sort();
        writeln!(out)?;
        for (k, d) in fs {
            writeln!(out, "{:<18} {:<17} {}", k, "formula", d)?;
        }
    }
    Ok(())
}
