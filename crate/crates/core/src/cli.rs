//! Command implementations behind the `kitespec` binary: graph descriptors,
//! run configuration, and JSON / CSV / text report emission.
//!
//! Every command returns a typed report. JSON output is parsed back into the
//! same type and compared before it is printed.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly;
use crate::das::{
    conjecture43_evidence, verify_theorem31, verify_theorem42, CensusReport, SearchOptions,
    SearchReport,
};
use crate::enumeration::{canonical_form, enumerate_cached, EnumConstraints};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, make_kite, Family, Graph, KiteParams};
use crate::poly::IntPolynomial;
use crate::spectral::{
    clique_lower_bound_spectral, eigenvalues, kite_clique_bound, kite_radius_bounds,
    spectral_radius, verify_lemma41_inequality, Lemma41Report, RadiusBounds, DEFAULT_TOL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
/// A verification found something the theorem rules out.
pub const EXIT_CONTRADICTED: i32 = 2;

/// Environment variable consulted for the default cache directory.
pub const CACHE_DIR_ENV: &str = "KITESPEC_CACHE_DIR";

/// A graph descriptor such as `kite:4,2` or `g6:Bw`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub raw: String,
    family: Family,
}

impl GraphSpec {
    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn build(&self) -> Result<Graph> {
        self.family.build()
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GraphSpec { raw: s.to_string(), family: s.parse()? })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::InvalidParams(format!("unknown format {s:?}; expected json, csv or text"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub cache_dir: Option<PathBuf>,
    pub tol: f64,
    pub workers: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { cache_dir: None, tol: DEFAULT_TOL, workers: 1, format: OutputFormat::Json }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParams(format!("tol must be positive, got {}", self.tol)));
        }
        if self.workers == 0 {
            return Err(Error::InvalidParams("workers must be at least 1".into()));
        }
        Ok(())
    }

    fn search_options(&self) -> SearchOptions {
        SearchOptions { workers: self.workers, cache_dir: self.cache_dir.clone(), ..Default::default() }
    }
}

/// A report that can be rendered in every output format.
pub trait Report: Serialize + DeserializeOwned + PartialEq {
    fn text(&self) -> String;
    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>);
}

/// Rendered output and the process exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Emitted {
    pub body: String,
    pub exit: i32,
}

pub fn to_json_checked<R: Report>(report: &R) -> Result<String> {
    let json = serde_json::to_string_pretty(report)?;
    let back: R = serde_json::from_str(&json)?;
    if back != *report {
        return Err(Error::InvalidParams("JSON output does not round-trip through its schema".into()));
    }
    Ok(json)
}

pub fn render<R: Report>(report: &R, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => to_json_checked(report),
        OutputFormat::Text => Ok(report.text()),
        OutputFormat::Csv => {
            let (header, rows) = report.csv_rows();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).map_err(csv_err)?;
            for row in rows {
                w.write_record(&row).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::InvalidParams(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidParams(format!("csv: {e}"))
}

fn emit<R: Report>(report: &R, cfg: &RunConfig, exit: i32) -> Result<Emitted> {
    Ok(Emitted { body: render(report, cfg.format)?, exit })
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

// charpoly

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyReport {
    pub spec: String,
    pub n: usize,
    /// Lowest power first.
    pub coefficients: IntPolynomial,
    pub human: String,
}

impl Report for CharpolyReport {
    fn text(&self) -> String {
        format!("{}: {}\n", self.spec, self.human)
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .coefficients
            .to_decimal_strings()
            .into_iter()
            .enumerate()
            .map(|(k, c)| vec![k.to_string(), c])
            .collect();
        (vec!["power", "coefficient"], rows)
    }
}

pub fn charpoly_report(spec: &GraphSpec) -> Result<CharpolyReport> {
    let g = spec.build()?;
    let p = charpoly(&g);
    Ok(CharpolyReport { spec: spec.raw.clone(), n: g.order(), human: p.to_string(), coefficients: p })
}

pub fn cmd_charpoly(spec: &GraphSpec, cfg: &RunConfig) -> Result<Emitted> {
    emit(&charpoly_report(spec)?, cfg, EXIT_OK)
}

// spectrum

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub spec: String,
    pub n: usize,
    pub tol: f64,
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub spectral_radius: f64,
}

impl Report for SpectrumReport {
    fn text(&self) -> String {
        let values: Vec<String> = self.eigenvalues.iter().map(|x| format!("{x:.10}")).collect();
        format!("{}: rho = {:.12}\n  {}\n", self.spec, self.spectral_radius, values.join("\n  "))
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self.eigenvalues.iter().enumerate().map(|(i, x)| vec![i.to_string(), x.to_string()]).collect();
        (vec!["index", "eigenvalue"], rows)
    }
}

pub fn spectrum_report(spec: &GraphSpec, tol: f64) -> Result<SpectrumReport> {
    let g = spec.build()?;
    let s = eigenvalues(&g, tol)?;
    Ok(SpectrumReport {
        spec: spec.raw.clone(),
        n: g.order(),
        tol,
        spectral_radius: spectral_radius(&g),
        eigenvalues: s.values,
    })
}

pub fn cmd_spectrum(spec: &GraphSpec, cfg: &RunConfig) -> Result<Emitted> {
    emit(&spectrum_report(spec, cfg.tol)?, cfg, EXIT_OK)
}

// cospectral

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CospectralReport {
    pub a: String,
    pub b: String,
    pub cospectral: bool,
    pub isomorphic: bool,
    pub charpoly_a: IntPolynomial,
    pub charpoly_b: IntPolynomial,
}

impl Report for CospectralReport {
    fn text(&self) -> String {
        format!(
            "{} : {}\n{} : {}\ncospectral: {}, isomorphic: {}\n",
            self.a, self.charpoly_a, self.b, self.charpoly_b, self.cospectral, self.isomorphic
        )
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![self.a.clone(), self.b.clone(), self.cospectral.to_string(), self.isomorphic.to_string()];
        (vec!["a", "b", "cospectral", "isomorphic"], vec![row])
    }
}

pub fn cospectral_report(a: &GraphSpec, b: &GraphSpec) -> Result<CospectralReport> {
    let (ga, gb) = (a.build()?, b.build()?);
    let (pa, pb) = (charpoly(&ga), charpoly(&gb));
    Ok(CospectralReport {
        a: a.raw.clone(),
        b: b.raw.clone(),
        cospectral: ga.order() == gb.order() && pa == pb,
        isomorphic: canonical_form(&ga) == canonical_form(&gb),
        charpoly_a: pa,
        charpoly_b: pb,
    })
}

pub fn cmd_cospectral(a: &GraphSpec, b: &GraphSpec, cfg: &RunConfig) -> Result<Emitted> {
    emit(&cospectral_report(a, b)?, cfg, EXIT_OK)
}

// invariants

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub spec: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub w: usize,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub spectral_radius: f64,
    pub spectral_clique_bound: usize,
    /// Radius sandwich, for kites with `p ≥ 3`.
    pub radius_bounds: Option<RadiusBounds>,
    /// `p − 2q + 1`, for kites with `p − 2q ≥ 3`.
    pub kite_clique_bound: Option<i64>,
}

impl Report for InvariantsReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{} ({})\n  n = {}, m = {}, t = {}, w = {}\n  degrees: {}\n  connected: {}\n  rho = {:.12}\n  spectral clique bound: {}\n",
            self.spec,
            self.graph6,
            self.n,
            self.m,
            self.t,
            self.w,
            joined(&self.degree_sequence),
            self.connected,
            self.spectral_radius,
            self.spectral_clique_bound
        );
        if let Some(b) = &self.radius_bounds {
            s += &format!("  radius bounds: {:.12} < rho < {:.12}\n", b.lower, b.upper);
        }
        if let Some(b) = self.kite_clique_bound {
            s += &format!("  kite clique bound: w >= {b}\n");
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let opt = |x: Option<String>| x.unwrap_or_default();
        let row = vec![
            self.spec.clone(),
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.t.to_string(),
            self.w.to_string(),
            joined(&self.degree_sequence),
            self.connected.to_string(),
            self.spectral_radius.to_string(),
            self.spectral_clique_bound.to_string(),
            opt(self.radius_bounds.map(|b| b.lower.to_string())),
            opt(self.radius_bounds.map(|b| b.upper.to_string())),
            opt(self.kite_clique_bound.map(|b| b.to_string())),
        ];
        let header = vec![
            "spec", "graph6", "n", "m", "t", "w", "degree_sequence", "connected", "spectral_radius",
            "spectral_clique_bound", "radius_lower", "radius_upper", "kite_clique_bound",
        ];
        (header, vec![row])
    }
}

pub fn invariants_report(spec: &GraphSpec) -> Result<InvariantsReport> {
    let g = spec.build()?;
    let kite = spec.family().kite_params();
    let radius_bounds = match kite {
        Some(k) if k.p >= 3 => Some(kite_radius_bounds(k.p)?),
        _ => None,
    };
    let kite_clique_bound = match kite {
        Some(k) if k.q >= 1 && k.p >= 2 * k.q + 3 => Some(kite_clique_bound(k.p, k.q)?),
        _ => None,
    };
    let stats = g.clique_stats();
    Ok(InvariantsReport {
        spec: spec.raw.clone(),
        graph6: encode_graph6(&g),
        n: g.order(),
        m: stats.edge_count,
        t: stats.triangle_count,
        w: stats.clique_number,
        degree_sequence: g.degree_sequence(),
        connected: g.is_connected(),
        spectral_radius: spectral_radius(&g),
        spectral_clique_bound: clique_lower_bound_spectral(&g),
        radius_bounds,
        kite_clique_bound,
    })
}

pub fn cmd_invariants(spec: &GraphSpec, cfg: &RunConfig) -> Result<Emitted> {
    emit(&invariants_report(spec)?, cfg, EXIT_OK)
}

// das-verify

impl Report for SearchReport {
    fn text(&self) -> String {
        let mut s = format!(
            "target {}{} ({:?})\n  n = {}, m = {}, t = {}, connected only: {}\n  classes scanned: {}, prefilter survivors: {}\n  verdict: {}\n",
            self.target,
            self.target_params.map(|k| format!(" = Kite_{{{},{}}}", k.p, k.q)).unwrap_or_default(),
            self.mode,
            self.n,
            self.m,
            self.t,
            self.space_description.connected_only,
            self.classes_scanned,
            self.prefilter_survivors,
            self.verdict.as_str()
        );
        for mate in &self.mate_invariants {
            s += &format!(
                "  mate {}: degrees {}, connected {}, w = {}\n",
                mate.graph6,
                joined(&mate.degree_sequence),
                mate.connected,
                mate.clique_number
            );
        }
        for note in &self.notes {
            s += &format!("  note: {note}\n");
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let row = vec![
            self.target.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.t.to_string(),
            self.classes_scanned.to_string(),
            self.prefilter_survivors.to_string(),
            self.mates.join(" "),
            self.verdict.as_str().to_string(),
        ];
        (vec!["target", "n", "m", "t", "classes_scanned", "prefilter_survivors", "mates", "verdict"], vec![row])
    }
}

/// `q = 2` runs the exhaustive theorem check, `q > 2` the evidence search.
pub fn das_verify_report(p: usize, q: usize, cfg: &RunConfig) -> Result<SearchReport> {
    let opts = cfg.search_options();
    match q {
        2 => verify_theorem42(p, &opts),
        q if q > 2 => conjecture43_evidence(p, q, &opts),
        _ => Err(Error::OutOfRange(format!("das-verify needs q >= 2, got {q}"))),
    }
}

pub fn cmd_das_verify(p: usize, q: usize, cfg: &RunConfig) -> Result<Emitted> {
    let report = das_verify_report(p, q, cfg)?;
    let exit = if report.mates_found() { EXIT_CONTRADICTED } else { EXIT_OK };
    emit(&report, cfg, exit)
}

// kite-census

impl Report for CensusReport {
    fn text(&self) -> String {
        let mut s = format!("{:>4} {:>6}  distinct\n", "n", "kites");
        for r in &self.rows {
            s += &format!("{:>4} {:>6}  {}\n", r.n, r.kite_count, r.all_distinct);
        }
        s + &format!("collisions: {}\n", self.collisions)
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .rows
            .iter()
            .map(|r| vec![r.n.to_string(), r.kite_count.to_string(), r.all_distinct.to_string()])
            .collect();
        (vec!["n", "kite_count", "all_distinct"], rows)
    }
}

pub fn cmd_kite_census(n_max: usize, cfg: &RunConfig) -> Result<Emitted> {
    let report = verify_theorem31(n_max)?;
    let exit = if report.collisions > 0 { EXIT_CONTRADICTED } else { EXIT_OK };
    emit(&report, cfg, exit)
}

// bounds

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub p: usize,
    pub q: Option<usize>,
    pub lower: f64,
    pub upper: f64,
    pub spectral_radius: Option<f64>,
    pub within: Option<bool>,
    pub kite_clique_bound: Option<i64>,
}

impl Report for BoundsReport {
    fn text(&self) -> String {
        let mut s = format!("p = {}: {:.12} < rho < {:.12}\n", self.p, self.lower, self.upper);
        if let (Some(q), Some(rho), Some(within)) = (self.q, self.spectral_radius, self.within) {
            s += &format!("rho(Kite_{{{},{q}}}) = {rho:.12}, within: {within}\n", self.p);
        }
        if let Some(b) = self.kite_clique_bound {
            s += &format!("clique bound p - 2q + 1 = {b}\n");
        }
        s
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let opt = |x: Option<String>| x.unwrap_or_default();
        let row = vec![
            self.p.to_string(),
            opt(self.q.map(|q| q.to_string())),
            self.lower.to_string(),
            self.upper.to_string(),
            opt(self.spectral_radius.map(|r| r.to_string())),
            opt(self.within.map(|w| w.to_string())),
            opt(self.kite_clique_bound.map(|b| b.to_string())),
        ];
        (vec!["p", "q", "lower", "upper", "spectral_radius", "within", "kite_clique_bound"], vec![row])
    }
}

pub fn bounds_report(p: usize, q: Option<usize>) -> Result<BoundsReport> {
    let RadiusBounds { lower, upper, .. } = kite_radius_bounds(p)?;
    let mut report =
        BoundsReport { p, q, lower, upper, spectral_radius: None, within: None, kite_clique_bound: None };
    if let Some(q) = q {
        let rho = spectral_radius(&make_kite(KiteParams::new(p, q)?)?);
        report.spectral_radius = Some(rho);
        report.within = Some(lower < rho && rho < upper);
        report.kite_clique_bound = Some(kite_clique_bound(p, q)?);
    }
    Ok(report)
}

pub fn cmd_bounds(p: usize, q: Option<usize>, cfg: &RunConfig) -> Result<Emitted> {
    let report = bounds_report(p, q)?;
    let exit = if report.within == Some(false) { EXIT_CONTRADICTED } else { EXIT_OK };
    emit(&report, cfg, exit)
}

// enumerate

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub constraints: EnumConstraints,
    pub count: usize,
    pub graphs: Vec<String>,
}

impl Report for EnumerateReport {
    fn text(&self) -> String {
        self.graphs.iter().map(|g| format!("{g}\n")).collect()
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        (vec!["graph6"], self.graphs.iter().map(|g| vec![g.clone()]).collect())
    }
}

pub fn enumerate_report(constraints: &EnumConstraints, cfg: &RunConfig) -> Result<EnumerateReport> {
    let graphs = enumerate_cached(constraints, cfg.cache_dir.as_deref(), cfg.workers)?;
    Ok(EnumerateReport {
        constraints: constraints.clone(),
        count: graphs.len(),
        graphs: graphs.iter().map(encode_graph6).collect(),
    })
}

pub fn cmd_enumerate(constraints: &EnumConstraints, cfg: &RunConfig) -> Result<Emitted> {
    emit(&enumerate_report(constraints, cfg)?, cfg, EXIT_OK)
}

// lemma41-check

impl Report for Lemma41Report {
    fn text(&self) -> String {
        format!(
            "p <= {}: {} instances of 2m(r-1)/r < (p - 1 + 1/p^2 + 1/p^3)^2, {} violations\n",
            self.p_max,
            self.checks.len(),
            self.violations
        )
    }

    fn csv_rows(&self) -> (Vec<&'static str>, Vec<Vec<String>>) {
        let rows = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.p.to_string(),
                    c.q.to_string(),
                    c.r.to_string(),
                    c.lhs_squared.clone(),
                    c.rhs_squared.clone(),
                    c.holds.to_string(),
                ]
            })
            .collect();
        (vec!["p", "q", "r", "lhs_squared", "rhs_squared", "holds"], rows)
    }
}

pub fn cmd_lemma41_check(max_p: usize, cfg: &RunConfig) -> Result<Emitted> {
    let report = verify_lemma41_inequality(max_p)?;
    let exit = if report.violations > 0 { EXIT_CONTRADICTED } else { EXIT_OK };
    emit(&report, cfg, exit)
}
