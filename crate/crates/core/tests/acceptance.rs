//! Acceptance checks, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the output.

mod common;

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kitespec::charpoly::{
    charpoly, charpoly_by_interpolation, charpoly_pendant_recursive, closed_form_complete,
    closed_form_gc, closed_form_kite1, closed_form_kite2, kite_u_identity_certify, walk_count,
    walk_counts,
};
use kitespec::das::{candidate_triple_check, find_cospectral_mates, verify_theorem31, verify_theorem42, SearchOptions, Verdict};
use kitespec::enumeration::{canonical_form, enumerate, enumerate_brute_force, EnumConstraints};
use kitespec::graph::{decode_graph6, make_family, make_kite, Family};
use kitespec::spectral::{kite_radius_bounds_exact, spectral_radius_estimate, verify_lemma41_inequality};
use kitespec::{Graph, IntPolynomial, KiteParams};

type Outcome = Result<String, String>;

fn check(cond: bool, detail: impl Into<String>) -> Outcome {
    if cond {
        Ok(detail.into())
    } else {
        Err(detail.into())
    }
}

fn c1_route_equivalence() -> Outcome {
    let mut kites = 0;
    for n in 2..=12 {
        for p in 1..=n {
            let g = make_kite(KiteParams { p, q: n - p }).unwrap();
            let a = charpoly(&g);
            if charpoly_pendant_recursive(&g) != a || charpoly_by_interpolation(&g) != a {
                return Err(format!("routes disagree on Kite_{{{p},{}}}", n - p));
            }
            kites += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..500 {
        let n = rng.gen_range(1..=9);
        let g = common::random_connected_graph(&mut rng, n);
        let a = charpoly(&g);
        if charpoly_pendant_recursive(&g) != a || charpoly_by_interpolation(&g) != a {
            return Err(format!("routes disagree on random graph #{i} {g}"));
        }
    }
    Ok(format!("{kites} kites with p+q <= 12 and 500 random connected graphs, three routes identical"))
}

fn c2_closed_forms() -> Outcome {
    for p in 2..=12 {
        let k = charpoly(&make_family(&Family::Complete(p)).unwrap());
        let k1 = charpoly(&make_kite(KiteParams { p, q: 1 }).unwrap());
        let k2 = charpoly(&make_kite(KiteParams { p, q: 2 }).unwrap());
        if closed_form_complete(p).unwrap() != k
            || closed_form_kite1(p).unwrap() != k1
            || closed_form_kite2(p).unwrap() != k2
        {
            return Err(format!("closed form mismatch at p = {p}"));
        }
    }
    for p in 4..=12 {
        if closed_form_gc(p).unwrap() != charpoly(&make_family(&Family::Gc(p)).unwrap()) {
            return Err(format!("gc closed form mismatch at p = {p}"));
        }
    }
    let gc3 = closed_form_gc(3).unwrap() == charpoly(&make_family(&Family::Gc(3)).unwrap());
    Ok(format!(
        "complete/kite1/kite2 for 2 <= p <= 12, gc for 4 <= p <= 12 (corrected quintic); gc(3) {}",
        if gc3 { "also matches" } else { "differs" }
    ))
}

fn c3_u_identity() -> Outcome {
    let mut points = 0;
    for p in 3..=8 {
        for q in 1..=5 {
            let cert = kite_u_identity_certify(p, q, None).map_err(|e| e.to_string())?;
            if !cert.certified {
                return Err(format!("p={p} q={q}: failures at {:?}", cert.failures));
            }
            if cert.points_checked != 2 * (p + q) + 10 {
                return Err(format!("p={p} q={q}: wrong point count"));
            }
            points += cert.points_checked;
        }
    }
    Ok(format!("30 (p, q) pairs certified, {points} exact evaluations, each above the degree bound 2n+2"))
}

fn c4_census() -> Outcome {
    let r = verify_theorem31(14).map_err(|e| e.to_string())?;
    let kites: usize = r.rows.iter().map(|row| row.kite_count).sum();
    check(
        r.collisions == 0 && r.rows.iter().all(|row| row.all_distinct) && r.rows.len() == 11,
        format!("{kites} kites over 4 <= n <= 14, {} collisions", r.collisions),
    )
}

fn c5_kite_p2_searches() -> Outcome {
    let mut parts = Vec::new();
    for p in 3..=7 {
        let start = Instant::now();
        let r = verify_theorem42(p, &SearchOptions::default()).map_err(|e| e.to_string())?;
        if r.verdict != Verdict::DasConfirmedAtScale || !r.mates.is_empty() {
            return Err(format!("p = {p}: mates {:?}", r.mates));
        }
        if r.space_description.connected_only || 2 * r.m != p * p - p + 4 {
            return Err(format!("p = {p}: wrong search space {:?}", r.space_description));
        }
        parts.push(format!("p={p}: {} classes ({:.1?})", r.classes_scanned, start.elapsed()));
    }
    Ok(format!("no mates; {}", parts.join(", ")))
}

fn c6_radius_sandwich() -> Outcome {
    let margin = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000));
    let width = BigRational::new(BigInt::from(1), BigInt::from(10_000_000_000u64));
    let mut tightest: Option<(f64, usize, usize)> = None;
    for p in 3..=12 {
        let (lower, upper) = kite_radius_bounds_exact(p).unwrap();
        for q in 1..=10 {
            let est = spectral_radius_estimate(&make_kite(KiteParams { p, q }).unwrap())
                .map_err(|e| e.to_string())?;
            let (lo, hi) = (est.lower(), est.upper());
            if hi - lo > width {
                return Err(format!("bracket too wide at p={p} q={q}"));
            }
            if !(&lower + &margin < *lo && hi + &margin < upper) {
                return Err(format!("p={p} q={q}: rho = {} outside the sandwich", est.value()));
            }
            let gap = (lo - &lower).min(&upper - hi);
            let gap = num_traits::ToPrimitive::to_f64(&gap).unwrap();
            if tightest.map_or(true, |(g, _, _)| gap < g) {
                tightest = Some((gap, p, q));
            }
        }
    }
    let (gap, p, q) = tightest.unwrap();
    Ok(format!("100 kites inside the sandwich; tightest gap {gap:.3e} at p={p} q={q}"))
}

fn c7_lemma41() -> Outcome {
    let r = verify_lemma41_inequality(50).map_err(|e| e.to_string())?;
    check(r.violations == 0, format!("{} exact instances, {} violations", r.checks.len(), r.violations))
}

/// Pairs of non-isomorphic cospectral graphs among all classes on 6 and 7 vertices.
fn cospectral_pool() -> Vec<(Graph, Graph)> {
    let mut pool = Vec::new();
    for n in [6, 7] {
        let mut by_poly: HashMap<IntPolynomial, Vec<Graph>> = HashMap::new();
        for g in enumerate(&EnumConstraints::all(n)).unwrap() {
            by_poly.entry(charpoly(&g)).or_default().push(g);
        }
        for group in by_poly.into_values().filter(|g| g.len() > 1) {
            pool.push((group[0], group[1]));
        }
    }
    pool.sort_by_key(|(a, b)| (canonical_form(a), canonical_form(b)));
    pool
}

fn c8_walk_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pool = cospectral_pool();
    let mut cospectral_pairs = 0;
    for i in 0..200 {
        let (g, h) = match i % 4 {
            0 | 1 => {
                let n = rng.gen_range(1..=8);
                let d = rng.gen_range(0.1..0.9);
                (common::random_graph(&mut rng, n, d), common::random_graph(&mut rng, n, d))
            }
            2 => {
                let n = rng.gen_range(1..=8);
                let g = common::random_graph(&mut rng, n, 0.5);
                (g, common::relabelled(&mut rng, &g))
            }
            _ => {
                let (a, b) = pool[rng.gen_range(0..pool.len())];
                (common::relabelled(&mut rng, &a), b)
            }
        };
        let n = g.order();
        let same_poly = charpoly(&g) == charpoly(&h);
        let same_walks = walk_counts(&g, n) == walk_counts(&h, n);
        if same_poly != same_walks {
            return Err(format!("pair #{i}: cospectral {same_poly}, equal traces {same_walks}"));
        }
        cospectral_pairs += same_poly as usize;
    }
    for i in 0..500 {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.0..1.0);
        let g = common::random_graph(&mut rng, n, density);
        if walk_count(&g, 2) != BigInt::from(2 * g.edge_count())
            || walk_count(&g, 3) != BigInt::from(6 * g.triangle_count())
        {
            return Err(format!("trace identity fails on graph #{i} {g}"));
        }
    }
    Ok(format!(
        "200 pairs ({cospectral_pairs} cospectral, pool of {} non-isomorphic cospectral pairs); 500 trace identities",
        pool.len()
    ))
}

fn c9_star_mate() -> Outcome {
    let star = make_family(&Family::Knm { n: 5, m: 4 }).unwrap();
    let r = find_cospectral_mates(&star, &SearchOptions::default()).map_err(|e| e.to_string())?;
    let c4_k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let keys: Vec<_> = r.mates.iter().map(|m| canonical_form(&decode_graph6(m.as_bytes()).unwrap())).collect();
    check(
        r.verdict == Verdict::MatesFound && keys == [canonical_form(&c4_k1)],
        format!("K_1,4 mates: {:?} over {} classes", r.mates, r.classes_scanned),
    )
}

fn c10_enumeration_oracle() -> Outcome {
    let mut rows = Vec::new();
    for (n, all, connected) in [(4, 11, 6), (5, 34, 21), (6, 156, 112)] {
        for (c, expected) in [(EnumConstraints::all(n), all), (EnumConstraints::connected(n), connected)] {
            let oracle = enumerate_brute_force(&c).map_err(|e| e.to_string())?;
            let mut got: Vec<_> = enumerate(&c).unwrap().map(|g| canonical_form(&g)).collect();
            got.sort();
            if oracle.len() != expected || got != oracle {
                return Err(format!("n={n}: oracle {}, augmentation {}, expected {expected}", oracle.len(), got.len()));
            }
        }
        rows.push(format!("{all}/{connected}"));
    }
    Ok(format!("n=4,5,6 all/connected = {} (augmentation == brute-force oracle)", rows.join(", ")))
}

fn c11_candidate_triples() -> Outcome {
    for p in 4..=10 {
        let r = candidate_triple_check(p).map_err(|e| e.to_string())?;
        if !r.pairwise_distinct {
            return Err(format!("p = {p}: {r:?}"));
        }
    }
    Ok("G_a, G_b, G_c pairwise distinct for 4 <= p <= 10".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("route equivalence", c1_route_equivalence),
        ("closed forms", c2_closed_forms),
        ("u-substitution identity", c3_u_identity),
        ("kite polynomials pairwise distinct", c4_census),
        ("Kite_{p,2} exhaustive mate search", c5_kite_p2_searches),
        ("spectral radius sandwich", c6_radius_sandwich),
        ("clique-bound inequality", c7_lemma41),
        ("walk-count properties", c8_walk_properties),
        ("known cospectral pair", c9_star_mate),
        ("enumeration oracle", c10_enumeration_oracle),
        ("candidate triple", c11_candidate_triples),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
