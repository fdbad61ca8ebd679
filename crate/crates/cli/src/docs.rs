//! JSON document shapes for every subcommand, plus the pretty renderers.
//!
//! Polynomials serialize as `{"coeffs": ["num/den", ...]}` in ascending
//! degree, always in lowest terms with the denominator spelled out, so
//! documents round-trip exactly.

use canstrip::ehrhart::{ConjectureReport, ConjectureTarget};
use canstrip::embedded::{SuiteFailure, SuiteSummary};
use canstrip::ratpoly::{Rational, RationalPolynomial};
use canstrip::rootloc::{ApproxRoot, RootReport, StripVerdict};
use serde::Serialize;

pub fn rational_str(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact display for tables and CSV: whole numbers drop the "/1".
pub fn rational_compact(r: &Rational) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn timestamp(suppress: bool) -> Option<u64> {
    if suppress {
        return None;
    }
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .ok()
        .map(|d| d.as_secs())
}

#[derive(Serialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

pub fn poly_json(p: &RationalPolynomial) -> PolynomialJson {
    PolynomialJson {
        coeffs: p.coeffs().iter().map(rational_str).collect(),
    }
}

#[derive(Serialize)]
pub struct ReportJson {
    pub line: String,
    pub left: usize,
    pub on: usize,
    pub right: usize,
}

pub fn report_json(r: &RootReport) -> ReportJson {
    ReportJson {
        line: rational_str(&r.line),
        left: r.left,
        on: r.on,
        right: r.right,
    }
}

#[derive(Serialize)]
pub struct RootJson {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

pub fn roots_json(roots: &[ApproxRoot]) -> Vec<RootJson> {
    roots
        .iter()
        .map(|r| RootJson {
            re: r.value.re,
            im: r.value.im,
            residual: r.residual,
        })
        .collect()
}

#[derive(Serialize)]
pub struct InputEcho {
    pub kind: String,
    pub params: Vec<String>,
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub cs: bool,
    pub ncs: bool,
    pub cl: bool,
    pub reports: Vec<ReportJson>,
    pub approx_roots: Vec<RootJson>,
}

pub fn verdict_json(v: &StripVerdict) -> VerdictJson {
    VerdictJson {
        cs: v.cs,
        ncs: v.ncs,
        cl: v.cl,
        reports: v.reports.iter().map(report_json).collect(),
        approx_roots: roots_json(&v.approx_roots),
    }
}

#[derive(Serialize)]
pub struct StripDocument {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub input: InputEcho,
    pub dim: u32,
    pub polynomial: PolynomialJson,
    pub verdict: VerdictJson,
}

#[derive(Serialize)]
pub struct SectionJson {
    pub multiple: String,
    pub restricted: PolynomialJson,
    pub line: String,
    pub on_line: bool,
    pub report: ReportJson,
    pub approx_roots: Vec<RootJson>,
}

#[derive(Serialize)]
pub struct GrassmannianDocument {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub k: u32,
    pub n: u32,
    pub dim: u32,
    pub polynomial: PolynomialJson,
    pub value_at_one: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<SectionJson>,
}

#[derive(Serialize)]
pub struct EmbeddedDocument {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub input: InputEcho,
    pub ambient: PolynomialJson,
    pub section: SectionJson,
}

#[derive(Serialize)]
pub struct EhrhartDocument {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub name: String,
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub polynomial: PolynomialJson,
    pub reflexive: bool,
    pub smooth: bool,
    pub boundary_is_vertices: bool,
    pub probes: Vec<String>,
    pub cl: bool,
    pub report: ReportJson,
    pub counts: Vec<(u64, u64)>,
    pub approx_roots: Vec<RootJson>,
}

pub fn ehrhart_document(
    name: &str,
    vertices: Vec<Vec<i64>>,
    dim: usize,
    report: &ConjectureReport,
    approx: &[ApproxRoot],
    timestamp: Option<u64>,
) -> EhrhartDocument {
    EhrhartDocument {
        tool: TOOL,
        version: VERSION,
        timestamp,
        name: name.to_string(),
        dim,
        vertices,
        polynomial: poly_json(&report.ehrhart.polynomial),
        reflexive: report.reflexive,
        smooth: report.smooth,
        boundary_is_vertices: report.boundary_is_vertices,
        probes: report
            .probes
            .iter()
            .map(|p| match p {
                ConjectureTarget::SmoothToricFano { dim } => {
                    format!("smooth-toric-fano-dim{dim}")
                }
                ConjectureTarget::TerminalGorensteinThreefold => {
                    "terminal-gorenstein-threefold".to_string()
                }
            })
            .collect(),
        cl: report.ehrhart.central_line,
        report: report_json(&report.ehrhart.central_report),
        counts: report.ehrhart.counts.clone(),
        approx_roots: roots_json(approx),
    }
}

#[derive(Serialize)]
pub struct FailureJson {
    pub case_index: usize,
    pub case_seed: u64,
    pub degree: usize,
    pub s: String,
    pub polynomial: PolynomialJson,
    pub report: ReportJson,
}

#[derive(Serialize)]
pub struct LemmaDocument {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub cases: usize,
    pub max_degree: usize,
    pub s_values: Vec<String>,
    pub seed: u64,
    pub checks: usize,
    pub passes: usize,
    pub failures: Vec<FailureJson>,
}

pub fn lemma_document(
    cases: usize,
    max_degree: usize,
    s_values: &[Rational],
    seed: u64,
    summary: &SuiteSummary,
    timestamp: Option<u64>,
) -> LemmaDocument {
    let failure_json = |f: &SuiteFailure| FailureJson {
        case_index: f.case_index,
        case_seed: f.case_seed,
        degree: f.degree,
        s: rational_str(&f.s),
        polynomial: poly_json(&f.polynomial),
        report: report_json(&f.report),
    };
    LemmaDocument {
        tool: TOOL,
        version: VERSION,
        timestamp,
        cases,
        max_degree,
        s_values: s_values.iter().map(rational_str).collect(),
        seed,
        checks: summary.checks,
        passes: summary.passes,
        failures: summary.failures.iter().map(failure_json).collect(),
    }
}

#[derive(Serialize)]
pub struct ScanSummaryDocument {
    pub tool: &'static str,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub family: String,
    pub total: usize,
    pub cs: usize,
    pub ncs: usize,
    pub cl: usize,
    pub out: String,
}

pub const TOOL: &str = "canstrip";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

// --------------------------------------------------------------------------
// pretty rendering

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pretty_reports(reports: &[ReportJson]) -> String {
    reports
        .iter()
        .map(|r| {
            format!(
                "  Re z = {:>6}: left {} / on {} / right {}",
                r.line, r.left, r.on, r.right
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn pretty_roots(roots: &[RootJson]) -> String {
    if roots.is_empty() {
        return "  (none)".to_string();
    }
    roots
        .iter()
        .map(|r| format!("  {:+.6} {:+.6}i  (residual {:.2e})", r.re, r.im, r.residual))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn pretty_strip(doc: &StripDocument, polynomial: &RationalPolynomial) -> String {
    format!(
        "input: {} {}\npolynomial: {}\ndim: {}\ncs: {}   ncs: {}   cl: {}\nexact counts:\n{}\napprox roots:\n{}",
        doc.input.kind,
        doc.input.params.join(" "),
        polynomial,
        doc.dim,
        flag(doc.verdict.cs),
        flag(doc.verdict.ncs),
        flag(doc.verdict.cl),
        pretty_reports(&doc.verdict.reports),
        pretty_roots(&doc.verdict.approx_roots),
    )
}

pub fn pretty_section(section: &SectionJson, restricted: &RationalPolynomial) -> String {
    format!(
        "restricted: {}\nline Re z = {}: on-line {}\nexact counts:\n{}\napprox roots:\n{}",
        restricted,
        section.line,
        flag(section.on_line),
        pretty_reports(std::slice::from_ref(&section.report)),
        pretty_roots(&section.approx_roots),
    )
}

pub fn pretty_grassmannian(doc: &GrassmannianDocument, polynomial: &RationalPolynomial) -> String {
    let mut out = format!(
        "G({}, {})  dim {}\npolynomial: {}\nH(1) = {}",
        doc.k, doc.n, doc.dim, polynomial, doc.value_at_one
    );
    if let Some(v) = &doc.verdict {
        out.push_str(&format!(
            "\ncs: {}   ncs: {}   cl: {}\nexact counts:\n{}\napprox roots:\n{}",
            flag(v.cs),
            flag(v.ncs),
            flag(v.cl),
            pretty_reports(&v.reports),
            pretty_roots(&v.approx_roots)
        ));
    }
    out
}

pub fn pretty_ehrhart(doc: &EhrhartDocument, polynomial: &RationalPolynomial) -> String {
    format!(
        "{} (dim {}): L(t) = {}\nreflexive: {}  smooth: {}  central line: {}\nprobes: {}\nexact counts at -1/2: left {} / on {} / right {}",
        doc.name,
        doc.dim,
        polynomial,
        flag(doc.reflexive),
        flag(doc.smooth),
        flag(doc.cl),
        if doc.probes.is_empty() {
            "(none)".to_string()
        } else {
            doc.probes.join(", ")
        },
        doc.report.left,
        doc.report.on,
        doc.report.right,
    )
}

pub fn pretty_lemma(doc: &LemmaDocument) -> String {
    let mut out = format!(
        "cases: {}  max degree: {}  s: {}  seed: {}\nchecks: {}  passes: {}  failures: {}",
        doc.cases,
        doc.max_degree,
        doc.s_values.join(","),
        doc.seed,
        doc.checks,
        doc.passes,
        doc.failures.len()
    );
    for f in &doc.failures {
        out.push_str(&format!(
            "\n  FAIL case {} seed {} degree {} s {}",
            f.case_index, f.case_seed, f.degree, f.s
        ));
    }
    out
}
