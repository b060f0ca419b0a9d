//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits non-zero if any failed.

use std::process::Command;
use std::time::{Duration, Instant};

use idbb_core::adversary::{adversary_bounds, classify, sigma_gamma, sigma_gamma_h, Polarity, DEFAULT_LIMIT};
use idbb_core::algorithms::{ddh_decide_level1, secret_from_cdh, secret_from_dlog, CdhOracle, DHInstance, DlogOracle, HonestCdh, HonestDlog};
use idbb_core::blackbox::{is_dh_quadruple, Escrow, GroupElement, IdOracle, IdentityOracle};
use idbb_core::grover::{closed_form_success, curve_point, iteration_bound, success_profile, PhaseOracle};
use idbb_core::modmath::{is_prime, PrimeModulus};
use idbb_lab::experiments::{
    run_embedding, run_level2_solution_counts, run_lift, run_reduction_success, run_scaling,
};

const SEED: u64 = 20_240_917;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn m(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    check(elapsed.as_secs_f64() < limit_secs as f64, || format!("took {:.2} s, limit {limit_secs} s", elapsed.as_secs_f64()))
}

fn exhaustive_ddh() -> Outcome {
    let start = Instant::now();
    let esc = Escrow::unseal();
    let mut instances = 0u64;
    let mut max_queries = 0;
    for p in [3u64, 5, 7] {
        let f = m(p);
        let e = |i: u64| GroupElement::new(f, &[i / p, i % p]).unwrap();
        let g = e(p);
        let elems: Vec<GroupElement> = (0..p * p).map(e).collect();
        for s in f.elements() {
            let mut o = IdentityOracle::with_secret(s);
            let n = o.reveal(&esc).clone();
            for h in &elems {
                for k in &elems {
                    for l in &elems {
                        let inst = DHInstance::ddh(g.clone(), h.clone(), k.clone(), l.clone()).unwrap();
                        let d = ddh_decide_level1(&mut o, &inst, None).map_err(|e| e.to_string())?;
                        let truth = is_dh_quadruple(&esc, &n, &g, h, k, l).unwrap();
                        check(d.is_dh_quadruple == truth, || format!("mismatch at p={p}, s={s:?}, h={h:?}, k={k:?}, l={l:?}"))?;
                        check(d.queries <= 2, || format!("{} queries at p={p}", d.queries))?;
                        max_queries = max_queries.max(d.queries);
                        instances += 1;
                    }
                }
            }
        }
    }
    within(start.elapsed(), 10)?;
    Ok(format!("{instances} instances, 0 mismatches, max {max_queries} queries, {:.2} s", start.elapsed().as_secs_f64()))
}

fn secret_recovery() -> Outcome {
    let start = Instant::now();
    let esc = Escrow::unseal();
    let mut runs = 0;
    for p in (3..=200u64).filter(|&n| is_prime(n)) {
        let f = m(p);
        for s in f.elements() {
            let mut o = IdentityOracle::with_secret(s);
            let n = o.reveal(&esc).clone();
            let mut cdh = HonestCdh::new(&esc, n.clone());
            let got = secret_from_cdh(&mut cdh, &mut o, None).map_err(|e| e.to_string())?;
            check(got == s && cdh.calls() == 1 && o.queries() <= 2, || {
                format!("cdh p={p} s={s:?}: got {got:?}, {} calls, {} queries", cdh.calls(), o.queries())
            })?;
            let mut dl = HonestDlog::new(&esc, n);
            let got = secret_from_dlog(&mut dl, f).map_err(|e| e.to_string())?;
            check(got == s && dl.calls() == 1, || format!("dlog p={p} s={s:?}: got {got:?}, {} calls", dl.calls()))?;
            runs += 1;
        }
    }
    within(start.elapsed(), 30)?;
    Ok(format!("{runs} secrets over primes up to 200, {:.2} s", start.elapsed().as_secs_f64()))
}

fn adversary_counts() -> Outcome {
    let mut timing = 0.0;
    for p in [3u64, 5, 7, 11, 13] {
        let f = m(p);
        let cls = classify(f);
        let pos = cls.iter().filter(|c| c.polarity == Polarity::Positive).count() as u64;
        check(pos == p - 1, || format!("p={p}: {pos} positive vectors"))?;
        check(sigma_gamma(f, Polarity::Positive) == p * p - p + 1 && sigma_gamma(f, Polarity::Negative) == p - 1, || {
            format!("p={p}: σ(Γ) values wrong")
        })?;
        let start = Instant::now();
        let rep = adversary_bounds(f, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
        timing = start.elapsed().as_secs_f64();
        if p == 13 {
            within(start.elapsed(), 60)?;
        }
        check(rep.max_case1_count <= 2 && rep.max_case2_count <= p, || {
            format!("p={p}: case counts {} and {}", rep.max_case1_count, rep.max_case2_count)
        })?;
    }
    // independent direct enumeration of σ(Γ_h, ·) for the smallest fields
    for p in [3u64, 5] {
        let f = m(p);
        let cls = classify(f);
        for hi in 0..p * p * p {
            let coords = [hi / (p * p), hi / p % p, hi % p];
            if coords[1] == 0 && coords[2] == 0 {
                continue;
            }
            let h = GroupElement::new(f, &coords).unwrap();
            let on = |c: &idbb_core::adversary::HiddenVectorClass| {
                f.add(coords[0], f.add(f.mul(coords[1], c.n1.value()), f.mul(coords[2], c.n2.value()))) == 0
            };
            for c in &cls {
                let sg = sigma_gamma_h(f, c, &h).unwrap();
                match (c.polarity, on(c)) {
                    (Polarity::Negative, false) => check(sg <= 2, || format!("case 1 count {sg} at p={p}, h={coords:?}"))?,
                    (Polarity::Positive, false) => check(sg <= p, || format!("case 2 count {sg} at p={p}, h={coords:?}"))?,
                    _ => {}
                }
            }
        }
    }
    Ok(format!("p in 3..13 verified, p=13 in {timing:.2} s"))
}

fn adversary_scaling() -> Outcome {
    let mut ratios = Vec::new();
    for p in [3u64, 5, 7, 11, 13, 17, 23, 31] {
        let rep = idbb_lab::experiments::adversary_report_parallel(m(p), DEFAULT_LIMIT).map_err(|e| e.to_string())?;
        ratios.push((p, rep.worst_ratio_randomized.to_f64() / p as f64));
    }
    let min = ratios.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    check(min >= 0.25, || format!("ratio/p dropped to {min}"))?;
    check(ratios.windows(2).all(|w| w[1].1 >= w[0].1), || format!("ratio/p not monotone: {ratios:?}"))?;
    let list: Vec<String> = ratios.iter().map(|(p, r)| format!("{p}:{r:.3}")).collect();
    Ok(format!("ratio/p >= {min:.3} ({})", list.join(" ")))
}

fn grover() -> Outcome {
    let start = Instant::now();
    let esc = Escrow::unseal();
    let mut worst: f64 = 0.0;
    let mut ks = Vec::new();
    for p in [11u64, 101, 1009] {
        let o = IdentityOracle::with_secret(m(p).residue(p / 3));
        let mut phase = PhaseOracle::from_identity(&esc, &o).map_err(|e| e.to_string())?;
        let bound = iteration_bound(p);
        let prof = success_profile(&mut phase, bound).map_err(|e| e.to_string())?;
        for (k, prob) in prof.iter().enumerate() {
            let err = (prob - closed_form_success(p, k as u64)).abs();
            worst = worst.max(err);
            check(err <= 1e-9, || format!("p={p}, k={k}: error {err:e}"))?;
        }
        let pt = curve_point(m(p)).map_err(|e| e.to_string())?;
        check(pt.k <= bound, || format!("p={p}: k={} above {bound}", pt.k))?;
        ks.push(format!("{p}:{}<={bound}", pt.k));
    }
    within(start.elapsed(), 30)?;
    Ok(format!("max error {worst:.1e}, k* {}", ks.join(" ")))
}

fn classical_scaling() -> Outcome {
    let rows = run_scaling(&[101, 211, 401], 10_000, SEED).map_err(|e| e.to_string())?;
    for r in &rows {
        check(r.relative_error <= 0.05, || format!("p={}: mean {} vs {}", r.p, r.mean_queries, r.expected_mean))?;
    }
    for w in rows.windows(2) {
        let ratio = (w[1].mean_queries / w[0].mean_queries) / (w[1].p as f64 / w[0].p as f64);
        check((ratio - 1.0).abs() <= 0.10, || format!("p {} -> {}: scaling ratio {ratio:.3}", w[0].p, w[1].p))?;
    }
    let means: Vec<String> = rows.iter().map(|r| format!("{}:{:.2}", r.p, r.mean_queries)).collect();
    Ok(format!("means {}", means.join(" ")))
}

fn reduction_rates() -> Outcome {
    let rows = run_reduction_success(101, 10_000, SEED).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for r in &rows {
        check(r.bound_value <= r.wilson_high, || format!("{}: bound {} above {}", r.algorithm, r.bound_value, r.wilson_high))?;
        parts.push(format!("{} {:.4} [{:.4}, {:.4}] vs {}", r.algorithm, r.rate, r.wilson_low, r.wilson_high, r.bound));
    }
    Ok(parts.join("; "))
}

fn level2() -> Outcome {
    let r = run_level2_solution_counts(31, 1000, SEED, false).map_err(|e| e.to_string())?;
    check(r.bad_fraction <= r.threshold, || format!("bad fraction {} above {}", r.bad_fraction, r.threshold))?;
    Ok(format!("bad fraction {:.4} <= {:.4}", r.bad_fraction, r.threshold))
}

fn lift() -> Outcome {
    let r = run_lift(7, 1000, SEED).map_err(|e| e.to_string())?;
    check(r.answers_preserved == 1000 && r.round_trips == 1000, || format!("{r:?}"))?;
    Ok(format!("1000 instances ({} DH), all preserved", r.dh_quadruples))
}

fn embedding() -> Outcome {
    let start = Instant::now();
    let r = run_embedding(11, false).map_err(|e| e.to_string())?;
    check(r.q == 23 && r.triples == 1331 && r.agreements == 1331, || format!("{r:?}"))?;
    within(start.elapsed(), 5)?;
    Ok(format!("1331/1331 agree, {:.2} s", start.elapsed().as_secs_f64()))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs: &[&[&str]] = &[
        &["scaling", "--p", "101,211", "--trials", "2000"],
        &["reductions", "--p", "101", "--trials", "2000"],
        &["level2-counts", "--p", "13", "--trials", "200"],
        &["lift", "--p", "7", "--trials", "200"],
        &["embed", "--p", "5"],
        &["adversary", "--p", "5,7"],
        &["grover", "--p", "11,101"],
        &["secret", "--p", "101", "--algo", "brute"],
    ];
    let mut checked = 0;
    for args in runs {
        for format in ["csv", "json"] {
            let mut outputs = Vec::new();
            for round in 0..2 {
                let path = dir.path().join(format!("{}-{format}-{round}", args[0]));
                let status = Command::new(env!("CARGO_BIN_EXE_idbb"))
                    .args(*args)
                    .args(["--seed", "99", "--format", format, "--out"])
                    .arg(&path)
                    .output()
                    .map_err(|e| e.to_string())?;
                check(status.status.success(), || format!("{args:?} exited with {:?}", status.status.code()))?;
                outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
            }
            check(outputs[0] == outputs[1], || format!("{args:?} {format} differs between runs"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} command/format pairs byte-identical"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("exhaustive DDH correctness", exhaustive_ddh),
        ("secret recovery", secret_recovery),
        ("adversary counts", adversary_counts),
        ("adversary scaling", adversary_scaling),
        ("Grover simulation", grover),
        ("classical scaling", classical_scaling),
        ("reduction success rates", reduction_rates),
        ("level-2 random-instance property", level2),
        ("lift/project round trip", lift),
        ("embedding", embedding),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
