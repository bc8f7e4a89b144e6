//! Searches for cospectral mates and the kite-level checks built on them:
//! pairwise-distinct kite polynomials, exhaustive "determined by adjacency
//! spectrum" (DAS) verification for `Kite_{p,2}`, evidence gathering for
//! `q > 2`, and the three-candidate polynomial comparison.

use std::path::PathBuf;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::charpoly::{charpoly, walk_counts};
use crate::enumeration::{canonical_form, enumerate_cached, EnumConstraints, MAX_UNCONSTRAINED_N};
use crate::error::{Error, Result};
use crate::graph::{binomial, clique_number, encode_graph6, make_family, make_kite, Family, Graph, KiteParams};
use crate::poly::IntPolynomial;
use crate::spectral::{clique_lower_bound_spectral, kite_clique_bound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "DAS-confirmed-at-scale")]
    DasConfirmedAtScale,
    #[serde(rename = "mates-found")]
    MatesFound,
    #[serde(rename = "not-run")]
    NotRun,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::DasConfirmedAtScale => "DAS-confirmed-at-scale",
            Verdict::MatesFound => "mates-found",
            Verdict::NotRun => "not-run",
        }
    }
}

/// What a report claims: a plain search, a theorem check, or evidence only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    Search,
    Theorem,
    Evidence,
}

/// Invariant panel for one graph, enough to re-verify a reported mate by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MateInvariants {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub triangles: usize,
    pub clique_number: usize,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub charpoly: IntPolynomial,
}

impl MateInvariants {
    pub fn of(g: &Graph) -> Self {
        MateInvariants {
            graph6: encode_graph6(g),
            n: g.order(),
            m: g.edge_count(),
            triangles: g.triangle_count(),
            clique_number: clique_number(g),
            degree_sequence: g.degree_sequence(),
            connected: g.is_connected(),
            charpoly: charpoly(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub target: String,
    pub target_params: Option<KiteParams>,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub space_description: EnumConstraints,
    pub classes_scanned: usize,
    pub prefilter_survivors: usize,
    /// graph6 strings, one per isomorphism class, target's class excluded.
    pub mates: Vec<String>,
    pub verdict: Verdict,
    pub mode: SearchMode,
    pub mate_invariants: Vec<MateInvariants>,
    pub notes: Vec<String>,
}

impl SearchReport {
    pub fn mates_found(&self) -> bool {
        !self.mates.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub connected_only: bool,
    /// Skip classes whose triangle count differs before comparing polynomials.
    pub prefilter: bool,
    pub workers: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { connected_only: false, prefilter: true, workers: 1, cache_dir: None }
    }
}

/// All isomorphism classes on `n(target)` vertices with `m(target)` edges whose
/// characteristic polynomial equals the target's, other than the target's own.
pub fn find_cospectral_mates(target: &Graph, opts: &SearchOptions) -> Result<SearchReport> {
    let n = target.order();
    if n > MAX_UNCONSTRAINED_N {
        return Err(Error::SpaceTooLarge(format!(
            "mate search is limited to n <= {MAX_UNCONSTRAINED_N}, got {n}"
        )));
    }
    let (m, t) = (target.edge_count(), target.triangle_count());
    let space = EnumConstraints { n, edges: Some(m), connected_only: opts.connected_only, triangle_count: None };
    let classes = enumerate_cached(&space, opts.cache_dir.as_deref(), opts.workers)?;
    let target_key = canonical_form(target);
    let target_poly = charpoly(target);
    let survivors: Vec<&Graph> = classes
        .iter()
        .filter(|g| !opts.prefilter || g.triangle_count() == t)
        .collect();
    let mut mates = Vec::new();
    let mut mate_invariants = Vec::new();
    for g in &survivors {
        if charpoly(g) != target_poly || canonical_form(g) == target_key {
            continue;
        }
        assert_mate_invariants(target, g);
        mates.push(encode_graph6(g));
        mate_invariants.push(MateInvariants::of(g));
    }
    log::info!(
        "n={n} m={m}: {} classes, {} survive the triangle prefilter, {} mates",
        classes.len(),
        survivors.len(),
        mates.len()
    );
    let verdict = if mates.is_empty() { Verdict::DasConfirmedAtScale } else { Verdict::MatesFound };
    Ok(SearchReport {
        target: encode_graph6(target),
        target_params: None,
        n,
        m,
        t,
        space_description: space,
        classes_scanned: classes.len(),
        prefilter_survivors: survivors.len(),
        mates,
        verdict,
        mode: SearchMode::Search,
        mate_invariants,
        notes: Vec::new(),
    })
}

/// Spectrum-determined parameters every mate must share with the target.
fn assert_mate_invariants(target: &Graph, mate: &Graph) {
    let n = target.order();
    assert_eq!(mate.order(), n);
    assert_eq!(mate.edge_count(), target.edge_count());
    assert_eq!(mate.triangle_count(), target.triangle_count());
    assert_eq!(walk_counts(mate, n), walk_counts(target, n));
    assert_ne!(canonical_form(mate), canonical_form(target));
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    pub kites: Vec<KiteParams>,
    pub kite_count: usize,
    pub all_distinct: bool,
    pub collisions: Vec<(KiteParams, KiteParams)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n_max: usize,
    pub rows: Vec<CensusRow>,
    pub collisions: usize,
}

pub const CENSUS_MAX_N: usize = 30;

/// For each `n ≤ n_max`, compares the polynomials of every `Kite_{p,q}` with
/// `p ≥ 3`, `q ≥ 1`, `p + q = n`.
pub fn verify_theorem31(n_max: usize) -> Result<CensusReport> {
    if n_max > CENSUS_MAX_N {
        return Err(Error::OutOfRange(format!("census needs n_max <= {CENSUS_MAX_N}, got {n_max}")));
    }
    let mut rows = Vec::new();
    for n in 4..=n_max {
        let kites: Vec<KiteParams> = (3..n).map(|p| KiteParams { p, q: n - p }).collect();
        let polys: Vec<IntPolynomial> =
            kites.iter().map(|&k| make_kite(k).map(|g| charpoly(&g))).collect::<Result<_>>()?;
        let mut collisions = Vec::new();
        for i in 0..kites.len() {
            for j in i + 1..kites.len() {
                if polys[i] == polys[j] {
                    collisions.push((kites[i], kites[j]));
                }
            }
        }
        rows.push(CensusRow {
            n,
            kite_count: kites.len(),
            all_distinct: collisions.is_empty(),
            kites,
            collisions,
        });
    }
    let collisions = rows.iter().map(|r| r.collisions.len()).sum();
    Ok(CensusReport { n_max, rows, collisions })
}

fn kite_search(p: usize, q: usize, mode: SearchMode, opts: &SearchOptions) -> Result<SearchReport> {
    let params = KiteParams::new(p, q)?;
    let target = make_kite(params)?;
    let opts = SearchOptions { connected_only: false, ..opts.clone() };
    let mut report = find_cospectral_mates(&target, &opts)?;
    report.target_params = Some(params);
    report.mode = mode;
    assert_eq!(report.m, binomial(p, 2) + q);
    assert_eq!(report.t, binomial(p, 3));
    Ok(report)
}

/// Exhaustive DAS check of `Kite_{p,2}` over every graph (connected or not)
/// on `p + 2` vertices with `(p² − p + 4)/2` edges, for `3 ≤ p ≤ 7`.
pub fn verify_theorem42(p: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if !(3..=7).contains(&p) {
        return Err(Error::OutOfRange(format!("Kite_{{p,2}} search needs 3 <= p <= 7, got {p}")));
    }
    let mut report = kite_search(p, 2, SearchMode::Theorem, opts)?;
    assert_eq!(2 * report.m, p * p - p + 4);
    report.notes.push(clique_consistency_note(p, &report)?);
    let constant = charpoly(&make_kite(KiteParams { p, q: 2 })?).coeff(0);
    let zero = if constant.is_zero() { "is" } else { "is not" };
    report.notes.push(format!("charpoly constant term {constant}: zero {zero} an eigenvalue"));
    Ok(report)
}

/// Cross-checks the spectral clique bound against the combinatorial one for
/// the target. Informational only: the certification margin can keep the
/// spectral bound below `p − 3` without anything being wrong.
fn clique_consistency_note(p: usize, report: &SearchReport) -> Result<String> {
    let target = make_kite(KiteParams { p, q: 2 })?;
    let combinatorial = kite_clique_bound(p, 2)?;
    let spectral = clique_lower_bound_spectral(&target);
    let note = if combinatorial >= 2 {
        format!(
            "clique bound p-2q+1 = {combinatorial}; spectral bound on the target = {spectral} ({})",
            if spectral as i64 >= combinatorial { "consistent" } else { "below, margin-limited" }
        )
    } else {
        format!("clique bound p-2q+1 = {combinatorial} carries no information")
    };
    log::info!("{note}; {} prefilter survivors", report.prefilter_survivors);
    Ok(note)
}

/// Same search for `q > 2` and `p + q ≤ 9`. The result is evidence, not proof.
pub fn conjecture43_evidence(p: usize, q: usize, opts: &SearchOptions) -> Result<SearchReport> {
    if q <= 2 || p < 3 || p + q > MAX_UNCONSTRAINED_N {
        return Err(Error::OutOfRange(format!(
            "evidence search needs q > 2, p >= 3, p + q <= {MAX_UNCONSTRAINED_N}; got p = {p}, q = {q}"
        )));
    }
    let mut report = kite_search(p, q, SearchMode::Evidence, opts)?;
    report.notes.push("evidence only: an exhaustive search at one size proves nothing beyond it".into());
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub p: usize,
    pub ga: IntPolynomial,
    pub gb: IntPolynomial,
    pub gc: IntPolynomial,
    pub ga_ne_gb: bool,
    pub ga_ne_gc: bool,
    pub gb_ne_gc: bool,
    pub pairwise_distinct: bool,
}

/// Polynomials of `Kite_{p,2}`, `knm(p+2, 2)` and `gc(p)`.
pub fn candidate_triple_check(p: usize) -> Result<TripleReport> {
    if p < 3 {
        return Err(Error::OutOfRange(format!("candidate triple needs p >= 3, got {p}")));
    }
    let ga = charpoly(&make_kite(KiteParams { p, q: 2 })?);
    let gb = charpoly(&make_family(&Family::Gb(p))?);
    let gc = charpoly(&make_family(&Family::Gc(p))?);
    let (ga_ne_gb, ga_ne_gc, gb_ne_gc) = (ga != gb, ga != gc, gb != gc);
    Ok(TripleReport {
        p,
        ga,
        gb,
        gc,
        ga_ne_gb,
        ga_ne_gc,
        gb_ne_gc,
        pairwise_distinct: ga_ne_gb && ga_ne_gc && gb_ne_gc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::decode_graph6;

    #[test]
    fn star_has_the_classic_mate() {
        let star = make_family(&Family::Knm { n: 5, m: 4 }).unwrap();
        let report = find_cospectral_mates(&star, &SearchOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::MatesFound);
        assert_eq!(report.mates.len(), 1);
        let c4_k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mate = decode_graph6(report.mates[0].as_bytes()).unwrap();
        assert_eq!(canonical_form(&mate), canonical_form(&c4_k1));
        assert!(!report.mate_invariants[0].connected);
        let connected = SearchOptions { connected_only: true, ..Default::default() };
        assert!(find_cospectral_mates(&star, &connected).unwrap().mates.is_empty());
    }

    #[test]
    fn prefilter_is_lossless() {
        let unfiltered = SearchOptions { prefilter: false, ..Default::default() };
        for g in [
            make_family(&Family::Knm { n: 5, m: 4 }).unwrap(),
            make_kite(KiteParams { p: 4, q: 2 }).unwrap(),
            make_family(&Family::Path(6)).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap(),
            make_kite(KiteParams { p: 3, q: 4 }).unwrap(),
        ] {
            let a = find_cospectral_mates(&g, &SearchOptions::default()).unwrap();
            let b = find_cospectral_mates(&g, &unfiltered).unwrap();
            assert_eq!(a.mates, b.mates, "{g}");
            assert!(a.prefilter_survivors <= b.prefilter_survivors);
            assert_eq!(b.prefilter_survivors, b.classes_scanned);
        }
    }

    #[test]
    fn complete_graph_has_no_mates() {
        let k4 = make_family(&Family::Complete(4)).unwrap();
        let report = find_cospectral_mates(&k4, &SearchOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::DasConfirmedAtScale);
        assert_eq!(report.classes_scanned, 1);
    }

    #[test]
    fn small_kite_searches() {
        for p in [3, 4] {
            let report = verify_theorem42(p, &SearchOptions::default()).unwrap();
            assert_eq!(report.verdict, Verdict::DasConfirmedAtScale, "p={p}");
            assert_eq!(report.mode, SearchMode::Theorem);
        }
        assert!(verify_theorem42(8, &SearchOptions::default()).is_err());
        assert!(verify_theorem42(2, &SearchOptions::default()).is_err());
        let ev = conjecture43_evidence(3, 3, &SearchOptions::default()).unwrap();
        assert_eq!(ev.mode, SearchMode::Evidence);
        assert_eq!((ev.n, ev.m), (6, 6));
        assert!(conjecture43_evidence(3, 2, &SearchOptions::default()).is_err());
        assert!(conjecture43_evidence(6, 4, &SearchOptions::default()).is_err());
    }

    #[test]
    fn census() {
        let report = verify_theorem31(14).unwrap();
        assert_eq!(report.collisions, 0);
        assert_eq!(report.rows.len(), 11);
        let row6 = &report.rows[2];
        assert_eq!(row6.n, 6);
        assert_eq!(row6.kites.iter().map(|k| (k.p, k.q)).collect::<Vec<_>>(), [(3, 3), (4, 2), (5, 1)]);
        assert!(row6.all_distinct);
        let four = verify_theorem31(4).unwrap();
        assert_eq!(four.rows.len(), 1);
        assert_eq!(four.rows[0].kite_count, 1);
        assert!(verify_theorem31(31).is_err());
    }

    #[test]
    fn candidate_triples() {
        for p in 3..=10 {
            let r = candidate_triple_check(p).unwrap();
            assert!(r.ga_ne_gb && r.ga_ne_gc, "p={p}");
        }
        assert!(candidate_triple_check(4).unwrap().pairwise_distinct);
        assert!(candidate_triple_check(2).is_err());
    }

    #[test]
    fn report_json_round_trip() {
        let star = make_family(&Family::Knm { n: 5, m: 4 }).unwrap();
        let report = find_cospectral_mates(&star, &SearchOptions::default()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"verdict\":\"mates-found\""));
        let back: SearchReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
