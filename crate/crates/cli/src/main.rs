//! Command-line surface for the exact strip/line verdict engine.
//!
//! Every subcommand prints machine-readable JSON on stdout (one document,
//! or one per line for streams) unless `--pretty` asks for tables. Exit
//! codes: 0 verdict computed, 1 assertion or suite failure, 2 usage
//! error, 3 I/O error.

mod docs;
mod svg;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use canstrip::ehrhart::{self, LatticePolytope};
use canstrip::embedded::{restricted_hilbert, verify_canonical_line, SuiteConfig};
use canstrip::hilbert::{self, ChernData, GrassmannianSpec, ScanFamily};
use canstrip::ratpoly::{Rational, RationalPolynomial};
use canstrip::rootloc::{approx_roots, classify_strip, ApproxRoot, StripVerdict};

use docs::{
    ehrhart_document, lemma_document, poly_json, rational_compact, rational_str, report_json,
    roots_json, timestamp, verdict_json, EmbeddedDocument, GrassmannianDocument, InputEcho,
    ScanSummaryDocument, SectionJson, StripDocument, TOOL, VERSION,
};

#[derive(Parser)]
#[command(
    name = "canstrip",
    version,
    about = "Exact canonical-strip, narrowed-strip and central-line verdicts for Hilbert and Ehrhart polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Human-readable tables instead of JSON documents.
    #[arg(long, global = true)]
    pretty: bool,
    /// Omit the timestamp field so identical invocations are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the zeros of a Hilbert polynomial against the strips.
    Strip(StripArgs),
    /// Hirzebruch series of G(k,N), optionally restricted to a section.
    Grassmannian(GrassmannianArgs),
    /// Restricted series H(z) - H(z-s) with its exact on-line verdict.
    Embedded(EmbeddedArgs),
    /// Ehrhart polynomials and fan-polytope verdicts.
    Ehrhart(EhrhartArgs),
    /// Sweep a Chern-number family and write a results file.
    Scan(ScanArgs),
    /// Randomized exact check that restriction zeros stay on their line.
    LemmaTest(LemmaArgs),
}

#[derive(clap::Args)]
#[command(group = ArgGroup::new("source").required(true).multiple(false))]
struct StripArgs {
    /// Exact coefficients "c0,c1,..." in ascending degree, e.g. "1/2,1,1/2".
    #[arg(long, group = "source", allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// Curve genus (dimension 1).
    #[arg(long, group = "source")]
    curve: Option<u32>,
    /// Surface Chern numbers: c1^2 c2.
    #[arg(long, group = "source", num_args = 2, value_names = ["C1SQ", "C2"], allow_hyphen_values = true)]
    surface: Option<Vec<String>>,
    /// Threefold Chern numbers: c1^3 c1c2.
    #[arg(long, group = "source", num_args = 2, value_names = ["C1CUBE", "C1C2"], allow_hyphen_values = true)]
    threefold: Option<Vec<String>>,
    /// Projective space dimension.
    #[arg(long, group = "source")]
    projective: Option<u32>,
    /// Dimension for the narrowed strip; defaults to the constructor's
    /// own dimension and is required with --coeffs.
    #[arg(long)]
    dim: Option<u32>,
    /// Write a root-scatter SVG to this path.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(clap::Args)]
struct GrassmannianArgs {
    k: u32,
    n: u32,
    /// Check the section of the m-th anticanonical multiple instead.
    #[arg(long)]
    section: Option<i64>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(clap::Args)]
struct EmbeddedArgs {
    /// Ambient series: projective:N, grassmannian:K,N, surface:C1SQ,C2,
    /// threefold:C1CUBE,C1C2, curve:G, or coeffs:c0,c1,...
    #[arg(long)]
    ambient: String,
    /// Section multiple s >= 1 (rational, e.g. 1 or 3/2).
    #[arg(long)]
    s: String,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(clap::Args)]
#[command(group = ArgGroup::new("src").required(true).multiple(false))]
struct EhrhartArgs {
    /// Single polytope JSON file {"dim": d, "vertices": [[...], ...]}.
    #[arg(long, group = "src")]
    file: Option<PathBuf>,
    /// Built-in catalog: smooth-dim1, smooth-dim2 or smooth-dim3.
    #[arg(long, group = "src")]
    catalog: Option<String>,
    /// User catalog file: JSON list of {"name", "dim", "vertices"}.
    #[arg(long, group = "src")]
    catalog_file: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// del Pezzo surfaces: c1^2 = 1..9, c2 = 12 - c1^2.
    Dp,
    /// Fano threefolds: c1c2 = 24, c1^3 over --c1cube (default 2..64).
    Fano3,
    /// Free surface sweep over --c1sq and --c2.
    Surface,
    /// Free threefold sweep over --c1cube and --c1c2.
    Threefold,
}

#[derive(clap::Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Range LO..HI (or a single value) for c1^2.
    #[arg(long, allow_hyphen_values = true)]
    c1sq: Option<String>,
    /// Range LO..HI (or a single value) for c2.
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Range LO..HI (or a single value) for c1^3.
    #[arg(long, allow_hyphen_values = true)]
    c1cube: Option<String>,
    /// Range LO..HI (or a single value) for c1c2.
    #[arg(long, allow_hyphen_values = true)]
    c1c2: Option<String>,
    /// Results file; a .json extension selects JSON, anything else CSV.
    #[arg(long)]
    out: PathBuf,
}

#[derive(clap::Args)]
struct LemmaArgs {
    #[arg(long)]
    cases: usize,
    #[arg(long)]
    max_degree: usize,
    /// Comma-separated rational multiples, e.g. "1,3/2,2,3,4".
    #[arg(long)]
    s_list: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl From<canstrip::Error> for Failure {
    fn from(err: canstrip::Error) -> Self {
        use canstrip::Error as E;
        let code = match &err {
            E::Io { .. } => 3,
            E::EhrhartVerification { .. } | E::NoConvergence { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Strip(args) => run_strip(cli, args),
        Command::Grassmannian(args) => run_grassmannian(cli, args),
        Command::Embedded(args) => run_embedded(cli, args),
        Command::Ehrhart(args) => run_ehrhart(cli, args),
        Command::Scan(args) => run_scan(cli, args),
        Command::LemmaTest(args) => run_lemma(cli, args),
    }
}

// ---------------------------------------------------------------------------
// input parsing

fn parse_rational(text: &str) -> Result<Rational, Failure> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: num_bigint::BigInt = numer
        .parse()
        .map_err(|_| usage(format!("invalid rational {text:?}")))?;
    let denom: num_bigint::BigInt = denom
        .parse()
        .map_err(|_| usage(format!("invalid rational {text:?}")))?;
    if denom.is_zero() {
        return Err(usage(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(numer, denom))
}

fn parse_coeff_list(text: &str) -> Result<RationalPolynomial, Failure> {
    let coeffs = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RationalPolynomial::new(coeffs))
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<i64>, Failure> {
    let bad = || usage(format!("invalid range {text:?}; expected LO..HI or a value"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        Ok(lo..=hi)
    } else {
        let v: i64 = text.trim().parse().map_err(|_| bad())?;
        Ok(v..=v)
    }
}

fn parse_ambient(spec: &str) -> Result<(InputEcho, RationalPolynomial), Failure> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("invalid ambient {spec:?}; expected kind:params")))?;
    let params: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
    let polynomial = match kind {
        "projective" => {
            let n: u32 = params[0]
                .parse()
                .map_err(|_| usage("projective:N needs an integer dimension"))?;
            hilbert::projective(n)?
        }
        "curve" => {
            let genus: u32 = params[0]
                .parse()
                .map_err(|_| usage("curve:G needs an integer genus"))?;
            hilbert::curve(genus)?
        }
        "surface" => {
            if params.len() != 2 {
                return Err(usage("surface:C1SQ,C2 needs two values"));
            }
            hilbert::surface(&parse_rational(&params[0])?, &parse_rational(&params[1])?)?
        }
        "threefold" => {
            if params.len() != 2 {
                return Err(usage("threefold:C1CUBE,C1C2 needs two values"));
            }
            hilbert::threefold(&parse_rational(&params[0])?, &parse_rational(&params[1])?)?
        }
        "grassmannian" => {
            if params.len() != 2 {
                return Err(usage("grassmannian:K,N needs two integers"));
            }
            let k: u32 = params[0]
                .parse()
                .map_err(|_| usage("grassmannian:K,N needs integers"))?;
            let n: u32 = params[1]
                .parse()
                .map_err(|_| usage("grassmannian:K,N needs integers"))?;
            hilbert::grassmannian(&GrassmannianSpec::new(k, n)?)
        }
        "coeffs" => parse_coeff_list(rest)?,
        other => {
            return Err(usage(format!(
                "unknown ambient kind {other:?}; use projective, curve, surface, threefold, grassmannian or coeffs"
            )))
        }
    };
    Ok((
        InputEcho {
            kind: kind.to_string(),
            params,
        },
        polynomial,
    ))
}

// ---------------------------------------------------------------------------
// output helpers

/// Write a stdout line, exiting quietly if the consumer closed the pipe.
fn print_line(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn emit<T: Serialize>(doc: &T) {
    print_line(&serde_json::to_string(doc).expect("document serializes"));
}

fn display_roots(p: &RationalPolynomial) -> Vec<ApproxRoot> {
    let tol = Rational::new(1.into(), 10_000_000_000i64.into());
    approx_roots(p, &tol).unwrap_or_default()
}

fn write_svg(path: &Path, panels: &[svg::Panel]) -> Result<(), Failure> {
    std::fs::write(path, svg::render(panels)).map_err(|e| Failure {
        code: 3,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn verdict_panel(title: String, verdict: &StripVerdict, line: f64) -> svg::Panel {
    svg::Panel {
        title,
        roots: verdict
            .approx_roots
            .iter()
            .map(|r| (r.value.re, r.value.im))
            .collect(),
        dim: verdict.dim,
        line,
    }
}

// ---------------------------------------------------------------------------
// subcommands

fn run_strip(cli: &Cli, args: &StripArgs) -> Result<(), Failure> {
    let (kind, params, polynomial, implied_dim): (&str, Vec<String>, RationalPolynomial, Option<u32>) =
        if let Some(text) = &args.coeffs {
            ("coeffs", vec![text.clone()], parse_coeff_list(text)?, None)
        } else if let Some(genus) = args.curve {
            ("curve", vec![genus.to_string()], hilbert::curve(genus)?, Some(1))
        } else if let Some(values) = &args.surface {
            let c1_sq = parse_rational(&values[0])?;
            let c2 = parse_rational(&values[1])?;
            (
                "surface",
                values.clone(),
                hilbert::surface(&c1_sq, &c2)?,
                Some(2),
            )
        } else if let Some(values) = &args.threefold {
            let c1_cube = parse_rational(&values[0])?;
            let c1_c2 = parse_rational(&values[1])?;
            (
                "threefold",
                values.clone(),
                hilbert::threefold(&c1_cube, &c1_c2)?,
                Some(3),
            )
        } else if let Some(n) = args.projective {
            (
                "projective",
                vec![n.to_string()],
                hilbert::projective(n)?,
                Some(n),
            )
        } else {
            unreachable!("clap enforces exactly one source")
        };

    let dim = args
        .dim
        .or(implied_dim)
        .ok_or_else(|| usage("--dim is required with --coeffs"))?;
    let verdict = classify_strip(&polynomial, dim)?;
    let doc = StripDocument {
        tool: TOOL,
        version: VERSION,
        timestamp: timestamp(cli.no_timestamp),
        input: InputEcho {
            kind: kind.to_string(),
            params,
        },
        dim,
        polynomial: poly_json(&polynomial),
        verdict: verdict_json(&verdict),
    };
    if cli.pretty {
        print_line(&docs::pretty_strip(&doc, &polynomial));
    } else {
        emit(&doc);
    }
    if let Some(path) = &args.svg {
        let title = format!("{} {}", doc.input.kind, doc.input.params.join(" "));
        write_svg(path, &[verdict_panel(title, &verdict, -0.5)])?;
    }
    Ok(())
}

fn run_grassmannian(cli: &Cli, args: &GrassmannianArgs) -> Result<(), Failure> {
    let spec = GrassmannianSpec::new(args.k, args.n)?;
    let polynomial = hilbert::grassmannian(&spec);
    let value_at_one = rational_compact(&polynomial.evaluate(&Rational::from_integer(1.into())));
    let mut doc = GrassmannianDocument {
        tool: TOOL,
        version: VERSION,
        timestamp: timestamp(cli.no_timestamp),
        k: args.k,
        n: args.n,
        dim: spec.dim(),
        polynomial: poly_json(&polynomial),
        value_at_one,
        verdict: None,
        section: None,
    };
    let mut panels = Vec::new();
    match args.section {
        None => {
            let verdict = classify_strip(&polynomial, spec.dim())?;
            panels.push(verdict_panel(
                format!("G({},{})", args.k, args.n),
                &verdict,
                -0.5,
            ));
            doc.verdict = Some(verdict_json(&verdict));
        }
        Some(m) => {
            let s = Rational::from_integer(m.into());
            let section = restricted_hilbert(&polynomial, &s)?;
            let (on_line, report) = verify_canonical_line(&section);
            let approx = display_roots(section.restricted());
            let line = section.expected_line();
            panels.push(svg::Panel {
                title: format!("G({},{}) section m={m}", args.k, args.n),
                roots: approx.iter().map(|r| (r.value.re, r.value.im)).collect(),
                dim: spec.dim(),
                line: (m - 1) as f64 / 2.0,
            });
            doc.section = Some(SectionJson {
                multiple: rational_str(&s),
                restricted: poly_json(section.restricted()),
                line: rational_str(&line),
                on_line,
                report: report_json(&report),
                approx_roots: roots_json(&approx),
            });
        }
    }
    if cli.pretty {
        print_line(&docs::pretty_grassmannian(&doc, &polynomial));
        if let Some(section) = &doc.section {
            let restricted = parse_coeff_list(&section.restricted.coeffs.join(","))
                .expect("round-trip of own output");
            print_line(&docs::pretty_section(section, &restricted));
        }
    } else {
        emit(&doc);
    }
    if let Some(path) = &args.svg {
        write_svg(path, &panels)?;
    }
    Ok(())
}

fn run_embedded(cli: &Cli, args: &EmbeddedArgs) -> Result<(), Failure> {
    let (mut input, ambient) = parse_ambient(&args.ambient)?;
    let s = parse_rational(&args.s)?;
    input.params.push(format!("s={}", args.s));
    let section = restricted_hilbert(&ambient, &s)?;
    let (on_line, report) = verify_canonical_line(&section);
    let approx = display_roots(section.restricted());
    let line = section.expected_line();
    let section_json = SectionJson {
        multiple: rational_str(&s),
        restricted: poly_json(section.restricted()),
        line: rational_str(&line),
        on_line,
        report: report_json(&report),
        approx_roots: roots_json(&approx),
    };
    let doc = EmbeddedDocument {
        tool: TOOL,
        version: VERSION,
        timestamp: timestamp(cli.no_timestamp),
        input,
        ambient: poly_json(&ambient),
        section: section_json,
    };
    if cli.pretty {
        print_line(&format!("ambient: {ambient}"));
        print_line(&docs::pretty_section(&doc.section, section.restricted()));
    } else {
        emit(&doc);
    }
    if let Some(path) = &args.svg {
        use num_traits::ToPrimitive;
        let panel = svg::Panel {
            title: format!("{} s={}", args.ambient, args.s),
            roots: approx.iter().map(|r| (r.value.re, r.value.im)).collect(),
            dim: ambient.degree().unwrap_or(1) as u32,
            line: line.to_f64().unwrap_or(0.0),
        };
        write_svg(path, &[panel])?;
    }
    Ok(())
}

fn run_ehrhart(cli: &Cli, args: &EhrhartArgs) -> Result<(), Failure> {
    let entries: Vec<(String, LatticePolytope)> = if let Some(path) = &args.file {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "polytope".to_string());
        vec![(name, ehrhart::load_polytope(path)?)]
    } else if let Some(name) = &args.catalog {
        ehrhart::load_catalog(name)?
            .into_iter()
            .map(|e| (e.name, e.polytope))
            .collect()
    } else if let Some(path) = &args.catalog_file {
        ehrhart::load_catalog_file(path)?
            .into_iter()
            .map(|e| (e.name, e.polytope))
            .collect()
    } else {
        unreachable!("clap enforces exactly one source")
    };

    let stamp = timestamp(cli.no_timestamp);
    let mut panels = Vec::new();
    for (name, polytope) in &entries {
        let report = polytope.conjecture_verdict()?;
        let approx = display_roots(&report.ehrhart.polynomial);
        let doc = ehrhart_document(
            name,
            polytope.vertices().to_vec(),
            polytope.dim(),
            &report,
            &approx,
            stamp,
        );
        if cli.pretty {
            print_line(&docs::pretty_ehrhart(&doc, &report.ehrhart.polynomial));
        } else {
            emit(&doc);
        }
        panels.push(svg::Panel {
            title: name.clone(),
            roots: approx.iter().map(|r| (r.value.re, r.value.im)).collect(),
            dim: polytope.dim() as u32,
            line: -0.5,
        });
    }
    if let Some(path) = &args.svg {
        write_svg(path, &panels)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ScanRowJson {
    family: String,
    p1: String,
    p2: String,
    cs: bool,
    ncs: bool,
    cl: bool,
    center_left: usize,
    center_on: usize,
    center_right: usize,
}

fn run_scan(cli: &Cli, args: &ScanArgs) -> Result<(), Failure> {
    let (family, family_name) = match args.family {
        FamilyArg::Dp => (ScanFamily::DelPezzo, "dp"),
        FamilyArg::Fano3 => {
            let range = match &args.c1cube {
                Some(text) => parse_range(text)?,
                None => 2..=64,
            };
            (ScanFamily::FanoThreefold { c1_cube: range }, "fano3")
        }
        FamilyArg::Surface => {
            let c1_sq = parse_range(
                args.c1sq
                    .as_deref()
                    .ok_or_else(|| usage("--family surface needs --c1sq"))?,
            )?;
            let c2 = parse_range(
                args.c2
                    .as_deref()
                    .ok_or_else(|| usage("--family surface needs --c2"))?,
            )?;
            (ScanFamily::Surface { c1_sq, c2 }, "surface")
        }
        FamilyArg::Threefold => {
            let c1_cube = parse_range(
                args.c1cube
                    .as_deref()
                    .ok_or_else(|| usage("--family threefold needs --c1cube"))?,
            )?;
            let c1_c2 = parse_range(
                args.c1c2
                    .as_deref()
                    .ok_or_else(|| usage("--family threefold needs --c1c2"))?,
            )?;
            (ScanFamily::Threefold { c1_cube, c1_c2 }, "threefold")
        }
    };
    let outcome = hilbert::scan(&family)?;

    let rows: Vec<ScanRowJson> = outcome
        .records
        .iter()
        .map(|record| {
            let (p1, p2) = match &record.data {
                ChernData::Curve { genus } => (genus.to_string(), String::new()),
                ChernData::Surface { c1_sq, c2 } => {
                    (rational_compact(c1_sq), rational_compact(c2))
                }
                ChernData::Threefold { c1_cube, c1_c2 } => {
                    (rational_compact(c1_cube), rational_compact(c1_c2))
                }
            };
            // reports[4] is the central abscissa -1/2
            let center = &record.verdict.reports[4];
            ScanRowJson {
                family: family_name.to_string(),
                p1,
                p2,
                cs: record.verdict.cs,
                ncs: record.verdict.ncs,
                cl: record.verdict.cl,
                center_left: center.left,
                center_on: center.on,
                center_right: center.right,
            }
        })
        .collect();

    let is_json = args
        .out
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
    let contents = if is_json {
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    } else {
        let mut csv = String::from("family,p1,p2,cs,ncs,cl,center_left,center_on,center_right\n");
        for row in &rows {
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                row.family,
                row.p1,
                row.p2,
                row.cs,
                row.ncs,
                row.cl,
                row.center_left,
                row.center_on,
                row.center_right
            ));
        }
        csv
    };
    std::fs::write(&args.out, contents).map_err(|e| Failure {
        code: 3,
        message: format!("cannot write {}: {e}", args.out.display()),
    })?;

    let summary = ScanSummaryDocument {
        tool: TOOL,
        version: VERSION,
        timestamp: timestamp(cli.no_timestamp),
        family: family_name.to_string(),
        total: outcome.summary.total,
        cs: outcome.summary.cs,
        ncs: outcome.summary.ncs,
        cl: outcome.summary.cl,
        out: args.out.display().to_string(),
    };
    if cli.pretty {
        print_line(&format!(
            "family {}: {} rows -> {} (cs {}, ncs {}, cl {})",
            summary.family, summary.total, summary.out, summary.cs, summary.ncs, summary.cl
        ));
    } else {
        emit(&summary);
    }
    Ok(())
}

fn run_lemma(cli: &Cli, args: &LemmaArgs) -> Result<(), Failure> {
    let s_values = args
        .s_list
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()?;
    let config = SuiteConfig {
        cases: args.cases,
        max_degree: args.max_degree,
        s_values: s_values.clone(),
        seed: args.seed,
    };
    let summary = canstrip::embedded::lemma_property_suite(&config)?;
    let doc = lemma_document(
        args.cases,
        args.max_degree,
        &s_values,
        args.seed,
        &summary,
        timestamp(cli.no_timestamp),
    );
    if cli.pretty {
        print_line(&docs::pretty_lemma(&doc));
    } else {
        emit(&doc);
    }
    if !summary.all_passed() {
        return Err(Failure {
            code: 1,
            message: format!("{} of {} checks failed", summary.failures.len(), summary.checks),
        });
    }
    Ok(())
}
