//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

use std::process::Command;
use std::time::{Duration, Instant};

use proxrem::report::ScanDocument;
use proxrem_core::bounds::{check_graph, evaluate, select};
use proxrem_core::constructions::{
    chain, layered_extremal, layered_extremal_padded, make_field, polarity_graph, puncture,
};
use proxrem_core::forbidden::{check_epp_lemma, find_c4, find_triangle};
use proxrem_core::graph6::{from_graph6, to_graph6};
use proxrem_core::metrics::{bfs_distances, invariant_report};
use proxrem_core::search::{canonical_form, enumerate_connected, oracle_apsp, Filter};
use proxrem_core::{Graph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_proxrem"))
}

fn scan_json(args: &[&str]) -> Result<(ScanDocument, i32), String> {
    let out = bin().arg("scan").args(args).arg("--json").output().map_err(|e| e.to_string())?;
    let doc: ScanDocument = serde_json::from_slice(&out.stdout).map_err(|e| format!("scan {args:?}: {e}"))?;
    Ok((doc, out.status.code().unwrap_or(-1)))
}

fn c1_soundness_sweep() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 2..=8 {
        let n_arg = n.to_string();
        let (doc, code) = scan_json(&["--n", &n_arg])?;
        let violations: usize = doc.bounds.iter().map(|b| b.violations).sum();
        ensure!(violations == 0 && code == 0, "n = {n}: {violations} violation(s), exit {code}");
        ensure!(doc.bounds.len() == select(None).unwrap().len(), "n = {n}: partial catalog");
        total += doc.scanned;
    }
    ensure!(total == 1 + 2 + 6 + 21 + 112 + 853 + 11117, "scanned {total} graphs");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!("{total} graphs, {} bounds, 0 violations, {:.1?}", select(None).unwrap().len(), elapsed))
}

fn c2_diameter_equality() -> Outcome {
    for n in 5..=7 {
        let (doc, _) = scan_json(&["--n", &n.to_string(), "--bounds", "AH-diam-pi"])?;
        let tight = &doc.bounds[0].tight;
        let path = canonical_form(&Graph::path(n).unwrap()).unwrap();
        ensure!(tight.len() == 1, "n = {n}: {} tight cases", tight.len());
        let g = from_graph6(&tight[0]).map_err(|e| e.to_string())?;
        ensure!(canonical_form(&g).unwrap() == path, "n = {n}: tight case {} is not P{n}", tight[0]);
        let r = &check_graph(&g, Some(&["AH-diam-pi"])).unwrap()[0];
        ensure!(r.slack == Some(Rational::from(0)), "n = {n}: re-evaluated slack {:?}", r.slack);
    }
    Ok("tight set is exactly {P_n} for n = 5, 6, 7".into())
}

/// A path `p1 … pm` with `p1` a leaf, `p2 … p(m−1)` of degree 2 and `pm` a
/// cut vertex.
fn has_pendant_path(g: &Graph, m: usize) -> bool {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) == 1).any(|leaf| {
        let mut path = vec![leaf];
        while path.len() < m {
            let last = *path.last().unwrap();
            if path.len() > 1 && g.degree(last) != 2 {
                return false;
            }
            let next = g.neighbors(last).iter().map(|&x| x as usize).find(|x| !path.contains(x));
            match next {
                Some(x) => path.push(x),
                None => return false,
            }
        }
        let cut = *path.last().unwrap();
        let rest: Vec<usize> = (0..n).filter(|&v| v != cut).collect();
        !g.induced(&rest).unwrap().is_connected()
    })
}

fn c3_remoteness_equality() -> Outcome {
    let mut counts = Vec::new();
    for n in [5usize, 7] {
        let (doc, _) = scan_json(&["--n", &n.to_string(), "--bounds", "AH-rho-pi"])?;
        let tight = &doc.bounds[0].tight;
        ensure!(!tight.is_empty(), "n = {n}: no tight cases");
        let bound = select(Some(&["AH-rho-pi"])).unwrap().remove(0);
        for s in tight {
            let g = from_graph6(s).map_err(|e| e.to_string())?;
            ensure!(has_pendant_path(&g, n.div_ceil(2)), "n = {n}: {s} has no pendant path");
            let rep = invariant_report(&g).unwrap().with_classes(&g);
            ensure!(evaluate(&bound, &rep).unwrap().tight, "n = {n}: {s} not tight on re-evaluation");
        }
        counts.push(format!("n={n}: {}", tight.len()));
    }
    Ok(format!("every tight case has a pendant ⌈n/2⌉-path ({})", counts.join(", ")))
}

const GRID: [(usize, usize); 6] = [(3, 2), (4, 2), (5, 2), (3, 4), (4, 4), (5, 4)];

fn c4_layered_invariants() -> Outcome {
    for (delta, k) in GRID {
        let fam = layered_extremal(delta, k).map_err(|e| e.to_string())?;
        let g = &fam.graph;
        let rep = invariant_report(g).unwrap();
        ensure!(g.order() == 2 * k * delta + 2, "({delta},{k}) order {}", g.order());
        ensure!(g.min_degree() == delta, "({delta},{k}) min degree {}", g.min_degree());
        ensure!(find_triangle(g).is_none(), "({delta},{k}) has a triangle");
        ensure!(rep.diameter as usize == 4 * k - 1, "({delta},{k}) diameter {}", rep.diameter);
        ensure!(rep.radius as usize == 2 * k, "({delta},{k}) radius {}", rep.radius);
    }
    Ok("order, δ, triangle-free, diameter, radius exact on the 3×2 grid".into())
}

fn c5_sharpness_gap() -> Outcome {
    let mut worst = Rational::from(0);
    for (delta, k) in GRID {
        let fam = layered_extremal(delta, k).map_err(|e| e.to_string())?;
        let r = &check_graph(&fam.graph, Some(&["TF-rho-pi"])).unwrap()[0];
        ensure!(r.applicable, "({delta},{k}) TF-rho-pi not applicable");
        let gap = r.slack.unwrap();
        ensure!(gap > Rational::from(0) && gap < Rational::new(31, 6), "({delta},{k}) gap {gap}");
        worst = worst.max(gap);
    }
    Ok(format!("0 < gap < 31/6 everywhere (largest {worst})"))
}

fn c6_closed_forms() -> Outcome {
    let one = Rational::from(1);
    let mut diffs = Vec::new();
    for (delta, k) in GRID {
        let fam = layered_extremal(delta, k).map_err(|e| e.to_string())?;
        let (m, g) = (fam.median_total.difference(), fam.margin_total.difference());
        ensure!(-one <= m && m <= one && -one <= g && g <= one, "({delta},{k}) differences {m}, {g}");
        ensure!(
            fam.notes.iter().filter(|n| n.value.contains("difference")).count() == 2,
            "({delta},{k}) discrepancy not recorded"
        );
        diffs.push(format!("{m}/{g}"));
    }
    Ok(format!("median/margin differences {}", diffs.join(" ")))
}

fn c7_polarity_invariants() -> Outcome {
    for q in [3usize, 4, 5, 7, 8, 9] {
        let field = make_field(q).map_err(|e| e.to_string())?;
        let h = polarity_graph(&field).map_err(|e| e.to_string())?;
        let g = &h.graph;
        ensure!(g.order() == q * q + q + 1, "H_{q} order {}", g.order());
        let iso = (0..g.order()).filter(|&v| h.points[v].is_isotropic(&field)).count();
        for v in 0..g.order() {
            let want = if h.points[v].is_isotropic(&field) { q } else { q + 1 };
            ensure!(g.degree(v) == want, "H_{q}: vertex {v} has degree {}", g.degree(v));
        }
        ensure!(iso == q + 1, "H_{q}: {iso} isotropic points");
        ensure!(find_c4(g).is_none(), "H_{q} contains a 4-cycle");

        let p = puncture(&field).map_err(|e| e.to_string())?;
        let rep = invariant_report(&p.graph).map_err(|e| e.to_string())?;
        ensure!(p.graph.order() == q * q + q, "H_{q}' order {}", p.graph.order());
        ensure!(p.graph.min_degree() == q - 1, "H_{q}' min degree {}", p.graph.min_degree());
        ensure!(rep.diameter == 4, "H_{q}' diameter {}", rep.diameter);
    }
    for q in [4usize, 5] {
        for k in [2usize, 4] {
            let c = chain(&make_field(q).unwrap(), k).map_err(|e| e.to_string())?;
            let rep = invariant_report(&c.graph).unwrap();
            ensure!(c.graph.order() == k * (q * q + q), "H_{{{q},{k}}} order");
            ensure!(rep.diameter as usize == 5 * k - 1, "H_{{{q},{k}}} diameter {}", rep.diameter);
            ensure!(rep.radius as usize == 5 * k / 2, "H_{{{q},{k}}} radius {}", rep.radius);
            ensure!(find_c4(&c.graph).is_none(), "H_{{{q},{k}}} contains a 4-cycle");
        }
    }
    Ok("H_q, H_q' for q ∈ {3,4,5,7,8,9}; H_{q,k} for q ∈ {4,5}, k ∈ {2,4}".into())
}

fn epp_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for q in [3usize, 4, 5, 7, 8, 9] {
        let field = make_field(q).unwrap();
        out.push((format!("H_{q}"), polarity_graph(&field).unwrap().graph));
        out.push((format!("H_{q}'"), puncture(&field).unwrap().graph));
    }
    for q in [4usize, 5] {
        for k in [2usize, 4] {
            out.push((format!("H_{{{q},{k}}}"), chain(&make_field(q).unwrap(), k).unwrap().graph));
        }
    }
    out
}

fn c8_epp_lemma() -> Outcome {
    for (name, g) in epp_graphs() {
        let r = check_epp_lemma(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure!(r.holds(), "{name}: min ball {} < {}", r.min_ball, r.bound);
    }
    let p = check_epp_lemma(&Graph::petersen()).map_err(|e| e.to_string())?;
    ensure!(p.min_ball == 10 && p.bound == 8, "Petersen: {} vs {}", p.min_ball, p.bound);
    Ok("all polarity graphs pass; Petersen 10 ≥ 8".into())
}

fn c9_asymptotics() -> Outcome {
    let k = 8;
    let c = chain(&make_field(4).unwrap(), k).map_err(|e| e.to_string())?;
    let rep = invariant_report(&c.graph).unwrap();
    let kk = Rational::from(k as i128);
    let (pi, rho) = (rep.proximity / kk, rep.remoteness / kk);
    ensure!(pi >= Rational::from(1) && pi <= Rational::new(3, 2), "π/k = {pi}");
    ensure!(rho >= Rational::new(11, 5) && rho <= Rational::new(14, 5), "ρ/k = {rho}");
    let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
    Ok(format!("π/k = {:.4}, ρ/k = {:.4}", f(pi), f(rho)))
}

fn c10_oracle() -> Outcome {
    let mut graphs: Vec<Graph> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let n = rng.gen_range(2..=64);
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        let extra = rng.gen_range(0..=2 * n);
        for _ in 0..extra {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a != b {
                edges.push((a, b));
            }
        }
        graphs.push(Graph::from_edges(n, edges).unwrap());
    }
    let random = graphs.len();
    for (delta, k) in GRID {
        graphs.push(layered_extremal(delta, k).unwrap().graph);
    }
    graphs.push(layered_extremal_padded(3, 2, 30).unwrap().graph);
    graphs.push(chain(&make_field(3).unwrap(), 2).unwrap().graph);
    graphs.push(chain(&make_field(4).unwrap(), 2).unwrap().graph);
    graphs.extend(epp_graphs().into_iter().map(|(_, g)| g).filter(|g| g.order() <= 64));
    graphs.extend([Graph::petersen(), Graph::path(64).unwrap(), Graph::cycle(64).unwrap(), Graph::complete(64).unwrap()]);
    for g in &graphs {
        ensure!(g.order() <= 64, "graph of order {} in the corpus", g.order());
        let apsp = oracle_apsp(g).map_err(|e| e.to_string())?;
        for v in 0..g.order() {
            ensure!(bfs_distances(g, v).unwrap() == apsp[v], "row {v} differs on {}", to_graph6(g));
        }
    }
    Ok(format!("{random} random + {} constructed graphs agree entrywise", graphs.len() - random))
}

fn timed_measure(extra: &[&str]) -> Result<Duration, String> {
    let start = Instant::now();
    let out = bin()
        .args(["measure", "--family", "layered", "--delta", "5", "--k", "2000", "--json"])
        .args(extra)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "measure {extra:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    let doc: proxrem::report::ReportDocument = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(doc.order == 20_002 && doc.diameter == 7999, "unexpected report (order {})", doc.order);
    Ok(elapsed)
}

fn c11_performance() -> Outcome {
    let single = timed_measure(&[])?;
    ensure!(single < Duration::from_secs(60), "single-threaded took {single:?}");
    let parallel = timed_measure(&["--threads", "8"])?;
    ensure!(parallel < Duration::from_secs(15), "8 threads took {parallel:?}");
    let cpus = std::thread::available_parallelism().map_or(1, |n| n.get());
    Ok(format!("{single:.1?} single-threaded, {parallel:.1?} with 8 threads on {cpus} CPU(s)"))
}

fn c12_graph6() -> Outcome {
    for (s, g) in [("A_", Graph::complete(2)), ("Bw", Graph::complete(3)), ("Bg", Graph::path(3))] {
        let g = g.unwrap();
        ensure!(from_graph6(s).as_ref() == Ok(&g), "{s} does not parse to the expected graph");
        ensure!(to_graph6(&g) == s, "emit gives {}", to_graph6(&g));
    }
    let mut count = 0;
    for n in 2..=7 {
        for g in enumerate_connected(n, Filter::All).unwrap() {
            let s = to_graph6(&g);
            let back = from_graph6(&s).map_err(|e| e.to_string())?;
            ensure!(back == g && to_graph6(&back) == s, "round trip failed for {s}");
            count += 1;
        }
    }
    Ok(format!("worked examples exact; {count} enumerated graphs round-trip"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("soundness sweep n = 2..8", c1_soundness_sweep),
        ("diameter-proximity equality only for paths", c2_diameter_equality),
        ("remoteness-proximity equality structure", c3_remoteness_equality),
        ("layered family invariants", c4_layered_invariants),
        ("layered sharpness gap below 31/6", c5_sharpness_gap),
        ("layered closed-form reconciliation", c6_closed_forms),
        ("polarity family invariants", c7_polarity_invariants),
        ("second-neighbourhood ball lemma", c8_epp_lemma),
        ("chain asymptotics at q = 4, k = 8", c9_asymptotics),
        ("BFS agrees with Floyd-Warshall", c10_oracle),
        ("performance at n = 20002", c11_performance),
        ("graph6 fidelity", c12_graph6),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
