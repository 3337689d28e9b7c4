//! Command-line front end: single-cell contributions, Euler numbers,
//! polynomiality classification, global assembly, grid tables, and
//! cross-route verification.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use ade_stringy::stringy::StringyError;
use ade_stringy::{
    assemble_global, contribution_closed, contribution_from_strata,
    contribution_strata, duality_holds, evaluate_cell, hodge_numbers, is_polynomial_case,
    render_rational, stringy_euler, sweep, CheckStatus, Family, Polynomial, RationalFunction,
    RawResolution, SingularitySpec, StratifiedResolution, StringyReport, TableChoice,
};

#[derive(Parser)]
#[command(name = "ade-stringy", version, about = "Exact stringy E-function contributions of A-D-E singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Strata,
    Closed,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Latex,
    Csv,
}

#[derive(Args)]
struct SpecArgs {
    /// Singularity family
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Family index n (forced to 6/7/8 for E types)
    #[arg(long)]
    n: Option<i64>,
    /// Number of ambient variables (dimension of the singularity plus one)
    #[arg(long)]
    m: Option<i64>,
    /// Stratified resolution JSON file used for the strata route instead of
    /// the built-in catalog
    #[arg(long)]
    resolution_file: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Contribution of one singularity to the stringy E-function
    Contribution {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Stringy Euler number of one contribution
    Euler {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Polynomiality of one contribution
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Global stringy E-function from a smooth part plus singular points
    Assemble {
        /// Hodge-Deligne polynomial of the smooth part: JSON array of
        /// decimal coefficient strings, ascending powers
        #[arg(long)]
        smooth_part: PathBuf,
        /// Singularity token "FAMILY:n:m=M", repeatable
        #[arg(long)]
        sing: Vec<String>,
        /// JSON array of {"family","n","m"} objects
        #[arg(long)]
        sing_file: Option<PathBuf>,
        /// Treat the variety as projective: check duality and Hodge numbers
        #[arg(long, requires = "dim")]
        projective: bool,
        /// Dimension of the variety
        #[arg(long)]
        dim: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Grid table of contributions; --n and --m accept LO..HI ranges
    Table {
        /// Family, repeatable; defaults to all five
        #[arg(long, value_parser = parse_family)]
        family: Vec<Family>,
        /// Index range for A/D families, e.g. 4 or 4..20
        #[arg(long, default_value = "1..12", value_parser = parse_range)]
        n: (i64, i64),
        /// Ambient-variable range, e.g. 4 or 3..10
        #[arg(long, default_value = "3..6", value_parser = parse_range)]
        m: (i64, i64),
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check that the strata and closed-form routes agree on a grid
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Vec<Family>,
        #[arg(long, default_value = "1..20", value_parser = parse_range)]
        n: (i64, i64),
        #[arg(long, default_value = "3..10", value_parser = parse_range)]
        m: (i64, i64),
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family {s:?} (expected A, D, E6, E7 or E8)"))
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| t.parse::<i64>().map_err(|e| format!("bad integer {t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (parse(lo)?, parse(hi)?);
            if hi < lo {
                return Err(format!("empty range {s:?}"));
            }
            Ok((lo, hi))
        }
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

fn parse_sing_token(tok: &str) -> Result<SingularitySpec, String> {
    let err = || format!("bad singularity token {tok:?} (expected FAMILY:n:m=M)");
    let mut parts = tok.split(':');
    let family = parse_family(parts.next().ok_or_else(err)?)?;
    let n: i64 = parts.next().ok_or_else(err)?.parse().map_err(|_| err())?;
    let m_part = parts.next().ok_or_else(err)?;
    if parts.next().is_some() {
        return Err(err());
    }
    let m: i64 = m_part.strip_prefix("m=").ok_or_else(err)?.parse().map_err(|_| err())?;
    SingularitySpec::new(family, n, m).map_err(|e| e.to_string())
}

struct Failure {
    message: String,
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure { message }
    }
}

macro_rules! impl_failure_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure { message: e.to_string() }
            }
        }
    )*};
}
impl_failure_from!(
    std::io::Error,
    serde_json::Error,
    StringyError,
    ade_stringy::catalog::CatalogError,
    ade_stringy::closedform::ClosedFormError,
    ade_stringy::exactalg::ExactError,
    ade_stringy::grid::GridError
);

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Contribution { spec, method, output } => contribution_cmd(spec, method, output),
        Command::Euler { spec, output } => euler_cmd(spec, output),
        Command::Classify { spec, output } => classify_cmd(spec, output),
        Command::Assemble { smooth_part, sing, sing_file, projective, dim, output } => {
            assemble_cmd(smooth_part, sing, sing_file, projective, dim, output)
        }
        Command::Table { family, n, m, output } => table_cmd(family, n, m, output),
        Command::Verify { family, n, m } => verify_cmd(family, n, m),
    }
}

/// The singularity named on the command line, if all of family/n/m given.
fn catalog_spec(args: &SpecArgs) -> Result<Option<SingularitySpec>, Failure> {
    match (args.family, args.m) {
        (Some(family), Some(m)) => {
            let n = match family {
                Family::A | Family::D => args
                    .n
                    .ok_or_else(|| Failure::from("--n is required for families A and D".to_string()))?,
                Family::E6 => 6,
                Family::E7 => 7,
                Family::E8 => 8,
            };
            Ok(Some(SingularitySpec::new(family, n, m)?))
        }
        (None, None) if args.resolution_file.is_some() => Ok(None),
        _ => Err("specify --family and --m (and --n for A/D), or --resolution-file".to_string().into()),
    }
}

fn load_resolution(path: &PathBuf) -> Result<StratifiedResolution, Failure> {
    let text = fs::read_to_string(path)?;
    let raw: RawResolution = serde_json::from_str(&text)?;
    StratifiedResolution::from_raw(&raw).map_err(|diags| {
        let lines: Vec<String> =
            diags.iter().map(|d| format!("{}: {}", d.path, d.message)).collect();
        Failure::from(format!("invalid resolution file:\n{}", lines.join("\n")))
    })
}

/// Resolves the strata route: an explicit file wins over the catalog.
fn strata_contribution(args: &SpecArgs, spec: Option<&SingularitySpec>) -> Result<RationalFunction, Failure> {
    if let Some(path) = &args.resolution_file {
        Ok(contribution_from_strata(&load_resolution(path)?)?)
    } else {
        let spec = spec.ok_or_else(|| Failure::from("no resolution source given".to_string()))?;
        Ok(contribution_strata(spec)?)
    }
}

fn contribution_cmd(args: SpecArgs, method: Method, output: OutputArgs) -> Result<(), Failure> {
    let spec = catalog_spec(&args)?;
    let source = spec.map_or_else(
        || args.resolution_file.as_ref().unwrap().display().to_string(),
        |s| s.label(),
    );
    let (contribution, routes) = match method {
        Method::Strata => (strata_contribution(&args, spec.as_ref())?, CheckStatus::NotApplicable),
        Method::Closed => {
            let spec = spec.ok_or_else(|| {
                Failure::from("--method closed needs --family/--n/--m".to_string())
            })?;
            (contribution_closed(&spec, TableChoice::General)?, CheckStatus::NotApplicable)
        }
        Method::Both => {
            let strata = strata_contribution(&args, spec.as_ref())?;
            let spec = spec.ok_or_else(|| {
                Failure::from("--method both needs --family/--n/--m".to_string())
            })?;
            let closed = contribution_closed(&spec, TableChoice::General)?;
            if strata != closed {
                return Err(format!(
                    "routes disagree for {source}:\n  strata: {}\n  closed: {}",
                    strata.render(),
                    closed.render()
                )
                .into());
            }
            (strata, CheckStatus::Pass)
        }
    };
    let mut report = StringyReport::new(source, contribution)?.with_check("routes-agree", routes);
    if let Some(s) = spec {
        let expected = s.m == 3 || is_polynomial_case(&s);
        let status = CheckStatus::from_bool(report.is_polynomial == expected);
        report = report.with_check("classification", status);
    }
    emit_report(&report, &output)?;
    exit_on_failed_checks(&report)
}

fn euler_cmd(args: SpecArgs, output: OutputArgs) -> Result<(), Failure> {
    let spec = catalog_spec(&args)?;
    let contribution = strata_contribution(&args, spec.as_ref())?;
    let euler = stringy_euler(&contribution)?;
    match output.format {
        Format::Json => {
            let mut map = BTreeMap::new();
            map.insert("euler", render_rational(&euler));
            write_out(&output, &format!("{}\n", serde_json::to_string(&map)?))
        }
        _ => write_out(&output, &format!("{}\n", render_rational(&euler))),
    }
}

fn classify_cmd(args: SpecArgs, output: OutputArgs) -> Result<(), Failure> {
    let spec = catalog_spec(&args)?;
    let contribution = strata_contribution(&args, spec.as_ref())?;
    let is_poly = contribution.as_polynomial().is_some();
    let verdict = if is_poly { "polynomial" } else { "not-polynomial" };
    // Cross-check the direct computation against the classification rule
    // (m >= 4: polynomial exactly for odd-n A and even-n D at m = 4).
    if let Some(s) = spec {
        let expected = s.m == 3 || is_polynomial_case(&s);
        if expected != is_poly {
            return Err(format!(
                "classification mismatch for {}: computed {verdict}, rule says {}",
                s.label(),
                if expected { "polynomial" } else { "not-polynomial" }
            )
            .into());
        }
    }
    match output.format {
        Format::Json => {
            let mut map = BTreeMap::new();
            map.insert("classification", verdict);
            write_out(&output, &format!("{}\n", serde_json::to_string(&map)?))
        }
        _ => write_out(&output, &format!("{verdict}\n")),
    }
}

fn assemble_cmd(
    smooth_part: PathBuf,
    sing: Vec<String>,
    sing_file: Option<PathBuf>,
    projective: bool,
    dim: Option<usize>,
    output: OutputArgs,
) -> Result<(), Failure> {
    let text = fs::read_to_string(&smooth_part)?;
    let smooth: Polynomial = serde_json::from_str(&text)?;
    let mut specs: Vec<SingularitySpec> = Vec::new();
    for tok in &sing {
        specs.push(parse_sing_token(tok)?);
    }
    if let Some(path) = sing_file {
        let listed: Vec<SingularitySpec> = serde_json::from_str(&fs::read_to_string(&path)?)?;
        for s in listed {
            // Deserialization bypasses the constructor; re-validate.
            specs.push(SingularitySpec::new(s.family, s.n, s.m)?);
        }
    }
    let mut contributions = Vec::new();
    for s in &specs {
        contributions.push(contribution_strata(s)?);
    }
    let e = assemble_global(&smooth, &contributions);
    if let Some(d) = dim {
        if let Some(p) = e.as_polynomial() {
            if p.degree().map_or(false, |deg| deg > d) {
                return Err(format!(
                    "stringy E-function has degree {} above the variety dimension {d}",
                    p.degree().unwrap()
                )
                .into());
            }
        }
    }
    let source = format!(
        "assembly of {} singular point{}",
        specs.len(),
        if specs.len() == 1 { "" } else { "s" }
    );
    let mut report = StringyReport::new(source, e.clone())?;
    if projective {
        let d = dim.expect("clap enforces --dim with --projective");
        report = report.with_check("duality", CheckStatus::from_bool(duality_holds(&e, d)));
        match hodge_numbers(&e, d) {
            Some(h) => {
                let mut rendered = Vec::with_capacity(h.len());
                let mut fits = true;
                for v in &h {
                    match u64::try_from(v) {
                        Ok(x) => rendered.push(x),
                        Err(_) => fits = false,
                    }
                }
                if fits {
                    report.hodge_numbers = Some(rendered);
                }
                report =
                    report.with_check("hodge-nonnegative", CheckStatus::from_bool(!h.iter().any(Signed::is_negative)));
            }
            None => {
                report = report.with_check("hodge-nonnegative", CheckStatus::Fail);
            }
        }
    }
    emit_report(&report, &output)?;
    exit_on_failed_checks(&report)
}

fn grid_specs(families: Vec<Family>, n: (i64, i64), m: (i64, i64)) -> Vec<SingularitySpec> {
    let families = if families.is_empty() {
        vec![Family::A, Family::D, Family::E6, Family::E7, Family::E8]
    } else {
        families
    };
    let mut specs = Vec::new();
    for family in families {
        for nn in n.0..=n.1 {
            for mm in m.0..=m.1 {
                if let Ok(s) = SingularitySpec::new(family, nn, mm) {
                    specs.push(s);
                }
            }
        }
    }
    specs.sort();
    specs.dedup();
    specs
}

fn table_cmd(
    families: Vec<Family>,
    n: (i64, i64),
    m: (i64, i64),
    output: OutputArgs,
) -> Result<(), Failure> {
    let specs = grid_specs(families, n, m);
    if specs.is_empty() {
        return Err("the requested ranges select no singularities".to_string().into());
    }
    let rows = sweep(&specs)?;
    let mut text = String::new();
    match output.format {
        Format::Csv => {
            text.push_str("family,n,m,contribution,euler,polynomial,routes_agree\n");
            for r in &rows {
                text.push_str(&format!(
                    "{},{},{},\"{}\",{},{},{}\n",
                    r.spec.family.as_str(),
                    r.spec.n,
                    r.spec.m,
                    r.strata.render(),
                    render_rational(&r.euler),
                    r.is_polynomial,
                    r.routes_agree
                ));
            }
        }
        Format::Json => {
            let objs: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "family": r.spec.family.as_str(),
                        "n": r.spec.n,
                        "m": r.spec.m,
                        "contribution": r.strata,
                        "euler": render_rational(&r.euler),
                        "is_polynomial": r.is_polynomial,
                        "routes_agree": r.routes_agree,
                    })
                })
                .collect();
            text = format!("{}\n", serde_json::to_string_pretty(&objs)?);
        }
        Format::Text => {
            for r in &rows {
                text.push_str(&format!(
                    "{:<8} euler={:<10} {} {}\n",
                    r.spec.label(),
                    render_rational(&r.euler),
                    if r.routes_agree { "ok" } else { "MISMATCH" },
                    r.strata.render()
                ));
            }
        }
        Format::Latex => {
            text.push_str("\\begin{tabular}{llll}\n");
            for r in &rows {
                text.push_str(&format!(
                    "{} & {} & {} & {} \\\\\n",
                    r.spec.label(),
                    r.spec.m,
                    r.strata.render_latex(),
                    render_rational(&r.euler)
                ));
            }
            text.push_str("\\end{tabular}\n");
        }
    }
    write_out(&output, &text)?;
    if rows.iter().any(|r| !r.routes_agree) {
        return Err("some table rows have disagreeing routes".to_string().into());
    }
    Ok(())
}

fn verify_cmd(families: Vec<Family>, n: (i64, i64), m: (i64, i64)) -> Result<(), Failure> {
    let specs = grid_specs(families, n, m);
    if specs.is_empty() {
        return Err("the requested ranges select no singularities".to_string().into());
    }
    let total = specs.len();
    let mut bad = Vec::new();
    for s in &specs {
        let row = evaluate_cell(s)?;
        if !row.routes_agree {
            bad.push(format!(
                "{} m={}:\n  strata: {}\n  closed: {}",
                s.label(),
                s.m,
                row.strata.render(),
                row.closed.render()
            ));
        }
    }
    if bad.is_empty() {
        println!("verified {total} cells: strata sum and closed form agree everywhere");
        Ok(())
    } else {
        println!("{} of {total} cells disagree", bad.len());
        Err(bad.join("\n").into())
    }
}

fn render_text_report(report: &StringyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("source:        {}\n", report.source));
    out.push_str(&format!("contribution:  {}\n", report.contribution.render()));
    out.push_str(&format!("euler:         {}\n", report.euler));
    out.push_str(&format!("polynomial:    {}\n", report.is_polynomial));
    if let Some(h) = &report.hodge_numbers {
        let rendered: Vec<String> = h.iter().map(u64::to_string).collect();
        out.push_str(&format!("hodge numbers: [{}]\n", rendered.join(", ")));
    }
    for (name, status) in &report.checks {
        let s = match status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "n/a",
        };
        out.push_str(&format!("check {name}: {s}\n"));
    }
    out
}

fn emit_report(report: &StringyReport, output: &OutputArgs) -> Result<(), Failure> {
    let text = match output.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(report)?),
        Format::Text => render_text_report(report),
        Format::Latex => format!("{}\n", report.contribution.render_latex()),
        Format::Csv => format!(
            "source,contribution,euler,polynomial\n\"{}\",\"{}\",{},{}\n",
            report.source,
            report.contribution.render(),
            report.euler,
            report.is_polynomial
        ),
    };
    write_out(output, &text)
}

fn write_out(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn exit_on_failed_checks(report: &StringyReport) -> Result<(), Failure> {
    if report.all_checks_pass() {
        Ok(())
    } else {
        Err("one or more checks failed".to_string().into())
    }
}
