//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use annulus_core::budget::ExtNuFloor;
use annulus_core::export::to_sorted_json;
use annulus_core::lattice::{excess, rough_m_number, zariski_by_support_growth, zariski_fujita};
use annulus_core::oracle::check_genus_formula;
use annulus_core::profile::TypeTag;
use annulus_core::rational::{format, int, ratio};
use annulus_core::resolution::{multiplicity_sequence, resolve_branch};
use annulus_core::topology::excess_floor;
use annulus_core::verifier::{
    enumerate_profiles, enumerate_with, max_hidden_capacity, run_census, symbolic_case_bound, CensusOptions,
    CensusReport, NormalForm, OptimizerOptions, Verdict,
};
use annulus_core::{AnnulusProfile, BranchTopology, Error};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn topology(pairs: &[(u32, u32)]) -> BranchTopology {
    BranchTopology::new(pairs.to_vec()).unwrap()
}

fn prof(p: i64, q: i64, r: i64, s: i64) -> AnnulusProfile {
    AnnulusProfile::new(p, q, r, s).unwrap()
}

fn codimension_equality() -> Outcome {
    let start = Instant::now();
    let corpus = common::corpus();
    for t in &corpus {
        let ext = t.external_codimension().map_err(|e| e.to_string())?;
        let graph = resolve_branch(t).map_err(|e| e.to_string())?;
        let km = rough_m_number(&graph).map_err(|e| e.to_string())?;
        ensure(km == int(ext as i64), || format!("{t}: extnu {ext} but K(K+D) = {}", format(&km)))?;
    }
    within(start.elapsed(), Duration::from_secs(10), "equality suite")?;
    Ok(format!("{} topologies, extnu = K(K+D)", corpus.len()))
}

fn stratum_values() -> Outcome {
    for nu in 1..=10u32 {
        let got = topology(&[(2, 2 * nu + 1)]).y_codimension().unwrap();
        ensure(got == nu as u64, || format!("(2,{}) has nu {got}", 2 * nu + 1))?;
    }
    let strata: [(&[(u32, u32)], u64); 3] = [(&[(4, 5)], 3), (&[(2, 3), (2, 11)], 6), (&[(2, 5), (2, 11)], 7)];
    for (pairs, expected) in strata {
        let got = topology(pairs).y_codimension().unwrap();
        ensure(got == expected, || format!("{pairs:?} has nu {got}, expected {expected}"))?;
    }
    Ok("nu(2,2k+1) = k for k <= 10; m = 4 strata 3, 6, 7".into())
}

fn excess_suite() -> Outcome {
    let cusp = resolve_branch(&topology(&[(2, 3)])).unwrap();
    let eta = excess(&cusp).unwrap();
    ensure(eta == ratio(5, 6), || format!("eta(2,3) = {}", format(&eta)))?;
    let corpus = common::corpus();
    for t in &corpus {
        let g = resolve_branch(t).unwrap();
        let eta = excess(&g).unwrap();
        let (m, n) = t.pairs()[0];
        let floor = excess_floor(m, n).unwrap();
        ensure(eta >= floor, || format!("{t}: eta {} below floor {}", format(&eta), format(&floor)))?;
        ensure(eta > ratio(1, 2), || format!("{t}: eta {} not above 1/2", format(&eta)))?;
        if t.multiplicity() == 2 {
            ensure(eta >= ratio(5, 6), || format!("{t}: eta {} below 5/6", format(&eta)))?;
        }
        let bark = zariski_fujita(&g).unwrap();
        let grown = zariski_by_support_growth(&g).unwrap();
        ensure(bark == grown, || format!("{t}: bark and support growth disagree"))?;
    }
    Ok(format!("eta(2,3) = 5/6; floors hold on {} topologies", corpus.len()))
}

fn delta_suite() -> Outcome {
    for k in 1..=10u32 {
        let d = topology(&[(2, 2 * k + 1)]).delta_invariant();
        ensure(d == k as u64, || format!("delta(2,{}) = {d}", 2 * k + 1))?;
    }
    let corpus = common::corpus();
    for t in &corpus {
        let delta = t.delta_invariant();
        if let [(m, n)] = t.pairs() {
            let gaps = common::semigroup_gaps(*m as u64, *n as u64);
            ensure(delta == gaps, || format!("{t}: delta {delta}, gaps {gaps}"))?;
            let from_blowups: u64 = multiplicity_sequence(t).iter().map(|mu| mu * (mu - 1) / 2).sum();
            ensure(from_blowups == gaps, || format!("{t}: blow-up delta {from_blowups}, gaps {gaps}"))?;
        }
        let m = t.multiplicity();
        let ext = t.external_codimension().unwrap();
        ensure(2 * delta <= m * (ext + 2 - m), || format!("{t}: 2delta {} > m(extnu-m+2)", 2 * delta))?;
    }
    Ok(format!("delta(2,2k+1) = k; gap oracle and 2delta <= m(extnu-m+2) on {} topologies", corpus.len()))
}

fn genus_formula() -> Outcome {
    let start = Instant::now();
    let value = prof(2, 3, 2, 3).two_delta_max();
    ensure(value == 14, || format!("two_delta_max(2,3,2,3) = {value}"))?;
    let mut summary = Vec::new();
    for x in [prof(1, 2, 1, 2), prof(1, 2, 1, 3), prof(2, 3, 2, 3), prof(1, 3, 1, 2), prof(2, 3, 1, 4)] {
        let report = check_genus_formula(&x, 3, 1).map_err(|e| format!("{x}: {e}"))?;
        ensure(report.non_degenerate >= 3, || format!("{x}: only {} usable trials", report.non_degenerate))?;
        ensure(report.all_agree(), || format!("{x}: agreement {}", report.agreement))?;
        summary.push(format!("{x} {}", report.agreement));
    }
    within(start.elapsed(), Duration::from_secs(120), "oracle runs")?;
    Ok(summary.join(", "))
}

fn det_prime_suite() -> Outcome {
    let profiles = enumerate_with(20, 4, NormalForm::Literal).profiles;
    let mut checked = 0;
    for x in &profiles {
        let d = match x.det_prime() {
            Ok(d) => d,
            Err(Error::ProportionalExponents) => continue,
            Err(e) => return Err(format!("{x}: {e}")),
        };
        checked += 1;
        ensure(d >= 0, || format!("{x}: det' = {d}"))?;
        if x.classify() == Ok(TypeTag::Crossed) {
            let floor = x.p_gcd() * x.r_gcd() + 1;
            ensure(d >= floor, || format!("{x}: det' = {d} < p'r'+1 = {floor}"))?;
        }
    }
    Ok(format!("{checked} non-proportional profiles"))
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(4, |n| n.get()).max(2)
}

fn main_census(report: &CensusReport, elapsed: Duration) -> Outcome {
    let s = &report.summary;
    let counterexamples = s.verdicts.get(&Verdict::Counterexample).copied().unwrap_or(0);
    ensure(counterexamples == 0, || format!("{counterexamples} counterexamples"))?;
    ensure(s.boundary_profiles == vec![prof(2, 3, 2, 3)], || {
        format!("boundary profiles {:?}", s.boundary_profiles)
    })?;
    let cert = report
        .certificates
        .iter()
        .find(|c| c.verdict == Verdict::BoundaryExcluded)
        .unwrap();
    let audit = cert.audit.as_ref().ok_or("boundary certificate has no audit")?;
    ensure(audit.infinity_intersection_index == Some(5), || {
        format!("intersection index {:?}", audit.infinity_intersection_index)
    })?;
    ensure(audit.forced_tangency == Some(2), || format!("nu_tan {:?}", audit.forced_tangency))?;
    ensure(audit.genus_count == 10, || format!("genus count {}", audit.genus_count))?;
    ensure(!audit.witnesses.is_empty() && audit.witnesses.iter().all(|w| w.total_delta == 9), || {
        "a witness does not total 9 double points".into()
    })?;
    within(elapsed, Duration::from_secs(600), "census")?;
    Ok(format!(
        "{} profiles, verdicts {:?}, audit 9 < 10 with index 5 and nu_tan 2, {elapsed:.1?}",
        s.profiles, s.verdicts
    ))
}

fn soundness() -> Outcome {
    let start = Instant::now();
    let options = OptimizerOptions::default();
    let profiles = enumerate_profiles(12, 4).profiles;
    let mut compared = 0;
    for x in &profiles {
        let Ok((capacity, _)) = max_hidden_capacity(x, options) else { continue };
        let reserve = x.two_delta_max() - capacity;
        let bound = symbolic_case_bound(x).map_err(|e| format!("{x}: {e}"))?;
        ensure(bound.bound <= int(reserve), || {
            format!("{x}: symbolic bound {} exceeds reserve {reserve}", format(&bound.bound))
        })?;
        compared += 1;
    }
    let small = enumerate_with(8, 4, NormalForm::Literal).profiles;
    for x in &small {
        let greedy = max_hidden_capacity(x, options).ok();
        let exhaustive = common::exhaustive_max_capacity(x, 4, ExtNuFloor::Standard);
        match (&greedy, &exhaustive) {
            (None, None) => {}
            (Some((g, _)), Some((e, b))) => {
                ensure(g == e, || format!("{x}: greedy {g}, exhaustive {e}"))?;
                ensure(common::library_agrees(x, b, *e, ExtNuFloor::Standard), || {
                    format!("{x}: exhaustive budget {b:?} rejected by the library")
                })?;
            }
            _ => return Err(format!("{x}: feasibility differs, greedy {greedy:?}, exhaustive {exhaustive:?}")),
        }
    }
    within(start.elapsed(), Duration::from_secs(300), "cross-check")?;
    Ok(format!(
        "symbolic <= reserve on {compared} profiles (maxExp 12); greedy = exhaustive on {} profiles (maxExp 8)",
        small.len()
    ))
}

fn determinism(parallel: &CensusReport) -> Outcome {
    let serial = run_census(&CensusOptions::new(20)).map_err(|e| e.to_string())?;
    let a = to_sorted_json(parallel).map_err(|e| e.to_string())?;
    let b = to_sorted_json(&serial).map_err(|e| e.to_string())?;
    ensure(a == b, || "reports differ between worker counts".into())?;
    Ok(format!("workers 1 and {}: {} identical bytes", workers(), a.len()))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: u32, name: &str, outcome: Outcome| {
        match outcome {
            Ok(detail) => println!("criterion {n} PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {detail}");
            }
        }
    };
    report(1, "codimension equality", codimension_equality());
    report(2, "stratum values", stratum_values());
    report(3, "excess suite", excess_suite());
    report(4, "delta suite", delta_suite());
    report(5, "genus formula", genus_formula());
    report(6, "det' bounds", det_prime_suite());

    let start = Instant::now();
    let census = run_census(&CensusOptions {
        workers: workers(),
        ..CensusOptions::new(20)
    });
    let elapsed = start.elapsed();
    match census {
        Ok(census) => {
            report(7, "main census", main_census(&census, elapsed));
            report(8, "soundness cross-check", soundness());
            report(9, "determinism", determinism(&census));
        }
        Err(e) => {
            report(7, "main census", Err(e.to_string()));
            report(8, "soundness cross-check", soundness());
            report(9, "determinism", Err("census failed".into()));
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
