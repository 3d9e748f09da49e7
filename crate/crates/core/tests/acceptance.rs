//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::time::Instant;

use mzvlab::catalog::{run_suite, VerificationReport};
use mzvlab::index_algebra::{c_partitions, hoffman_dual, indices_of_weight, star_expand};
use mzvlab::series::{
    bell_complete_explicit, bell_complete_recurrence, gf_binomial_h_partial, gf_binomial_partial, mpl, mzbsv,
    mzbsv_hweighted, mzv_direct,
};
use mzvlab::word::mzv_holder;
use mzvlab::{BoundKind, HpReal, Index, PrecisionConfig, Rational, ValueWithError};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn cfg() -> PrecisionConfig {
    PrecisionConfig::default()
}

/// All reports for `filter` (optionally restricted by `keep`) within `tol`.
fn suite_within(
    filter: &str,
    cfg: &PrecisionConfig,
    tol: f64,
    expected: usize,
    keep: impl Fn(&VerificationReport) -> bool,
) -> (Vec<VerificationReport>, Outcome) {
    let reports: Vec<_> = run_suite(Some(filter), cfg).into_iter().filter(|r| keep(r)).collect();
    let worst = reports.iter().map(|r| r.abs_diff_f64).fold(0.0, f64::max);
    let errors: Vec<_> = reports.iter().filter_map(|r| r.error.clone()).collect();
    let ok = reports.len() == expected && errors.is_empty() && reports.iter().all(|r| r.abs_diff_f64 <= tol);
    let mut detail = format!("{} instances, max |diff| {:.2e} (tol {:.0e})", reports.len(), worst, tol);
    if let Some(e) = errors.first() {
        detail += &format!(", error: {e}");
    }
    (reports, outcome(ok, detail))
}

fn c1() -> Outcome {
    let cfg = cfg();
    let t = Instant::now();
    let z2 = mzv_holder(&Index::from([2]), &cfg).unwrap().value;
    let pi = HpReal::pi(cfg.bits());
    let d1 = (&z2 - &(&pi * &pi / 6)).abs().to_f64();
    let z21 = mzv_holder(&Index::from([2, 1]), &cfg).unwrap().value;
    let z3 = mzv_holder(&Index::from([3]), &cfg).unwrap().value;
    let d2 = (&z21 - &z3).abs().to_f64();
    let secs = t.elapsed().as_secs_f64();
    outcome(
        d1 <= 1e-30 && d2 <= 1e-30 && secs < 1.0,
        format!("|ζ(2)-π²/6| {d1:.1e}, |ζ(2,1)-ζ(3)| {d2:.1e}, {secs:.3}s"),
    )
}

fn c2() -> Outcome {
    let t = Instant::now();
    let (_, mut o) = suite_within("DUALITY", &cfg(), 1e-25, 127, |_| true);
    let secs = t.elapsed().as_secs_f64();
    o.ok &= secs < 60.0;
    o.detail += &format!(", {secs:.1}s");
    o
}

fn c7() -> Outcome {
    let cfg = cfg().with_max_terms(100_000);
    let reports: Vec<_> = ["EQ3.4", "EC2"].iter().flat_map(|f| run_suite(Some(f), &cfg)).collect();
    let worst = reports.iter().map(|r| r.abs_diff_f64).fold(0.0, f64::max);
    let slowest = reports.iter().map(|r| r.seconds).fold(0.0, f64::max);
    let ok = !reports.is_empty()
        && reports.iter().all(|r| r.error.is_none() && r.abs_diff_f64 <= 1e-6 && r.seconds < 30.0);
    outcome(
        ok,
        format!("{} instances, max |diff| {worst:.2e} (tol 1e-6), slowest {slowest:.2}s", reports.len()),
    )
}

fn c8() -> Outcome {
    let cfg = cfg();
    let (a, _) = suite_within("COR3.2-X", &cfg, 1e-5, 4, |_| true);
    let (b, _) = suite_within("EC1-X", &cfg, 1e-5, 4, |_| true);
    let all: Vec<_> = a.iter().chain(&b).collect();
    let worst = all.iter().map(|r| r.abs_diff_f64).fold(0.0, f64::max);
    let ok = all.len() == 8 && all.iter().all(|r| r.error.is_none() && r.abs_diff_f64 <= 1e-5);
    outcome(ok, format!("{} instances, max |diff| {worst:.2e} (tol 1e-5)", all.len()))
}

fn c10() -> Outcome {
    let cfg = cfg();
    let all: Vec<_> = ["RC2", "RC3", "EC5"].iter().flat_map(|f| run_suite(Some(f), &cfg)).collect();
    let worst = all.iter().map(|r| r.abs_diff_f64).fold(0.0, f64::max);
    let ok = !all.is_empty() && all.iter().all(|r| r.error.is_none() && r.abs_diff_f64 <= 1e-8);
    outcome(ok, format!("{} instances, max |diff| {worst:.2e} (tol 1e-8)", all.len()))
}

fn c11() -> Outcome {
    let (r, mut o) = suite_within("GOLD-ZB221", &cfg(), 1e-8, 1, |_| true);
    o.ok &= r.iter().all(|r| r.terms_used <= 1_000_000);
    o.detail += &format!(", terms {}", r.first().map_or(0, |r| r.terms_used));
    o
}

fn c13() -> Outcome {
    let cfg = cfg();
    let is_m1 = |r: &VerificationReport, rr: i64| {
        r.params.get("m").map(|v| v.to_string()) == Some("(1)".into())
            && r.params.get("r").map(|v| v.to_string()) == Some(rr.to_string())
    };
    let (a, _) = suite_within("THM4.3", &cfg, 1e-7, 1, |r| is_m1(r, 0));
    let (b, _) = suite_within("THM4.4", &cfg, 1e-7, 1, |r| is_m1(r, 1));
    let all: Vec<_> = a.iter().chain(&b).collect();
    let ok = all.len() == 2 && all.iter().all(|r| r.error.is_none() && r.abs_diff_f64 <= 1e-7);
    let diffs: Vec<_> = all.iter().map(|r| format!("{} {:.2e}", r.id, r.abs_diff_f64)).collect();
    outcome(ok, diffs.join(", "))
}

fn c14() -> Outcome {
    let cfg = cfg();
    let (a, _) = suite_within("GF-1", &cfg, 1e-10, 3, |_| true);
    let (b, _) = suite_within("GF-2", &cfg, 1e-10, 3, |_| true);
    let all: Vec<_> = a.iter().chain(&b).collect();
    let worst = all.iter().map(|r| r.abs_diff_f64).fold(0.0, f64::max);
    let ok = all.len() == 6 && all.iter().all(|r| r.terms_used == 10_000 && r.abs_diff_f64 <= 1e-10);
    outcome(ok, format!("{} instances, max |diff| {worst:.2e} (tol 1e-10)", all.len()))
}

fn c15() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let one = Rational::from_integer(BigInt::from(1));
    let mut checked = 0;
    for p in 0..=8usize {
        for _ in 0..5 {
            let xs: Vec<Rational> = (0..p)
                .map(|_| {
                    Rational::new(BigInt::from(rng.gen_range(-20..=20)), BigInt::from(rng.gen_range(1..=9)))
                })
                .collect();
            if bell_complete_recurrence(&xs, &one) != bell_complete_explicit(&xs, &one) {
                return outcome(false, format!("mismatch at p = {p}"));
            }
            checked += 1;
        }
    }
    let partitions_ok = c_partitions(8).count() == 22;
    outcome(partitions_ok, format!("{checked} random rational inputs, p = 0..8, exact equality"))
}

fn c16() -> Outcome {
    let mut duals = 0;
    for w in 1..=10 {
        for k in indices_of_weight(w) {
            let k = Index::new(k).unwrap();
            let d = hoffman_dual(&k).unwrap();
            if hoffman_dual(&d).unwrap() != k || d.weight() != w {
                return outcome(false, format!("dual involution fails at {k}"));
            }
            duals += 1;
        }
    }
    let mut expansions = 0;
    for depth in 1..=8usize {
        // every index of this depth with parts in 1..=3
        for code in 0..3usize.pow(depth as u32) {
            let parts: Vec<u32> = (0..depth).map(|i| (code / 3usize.pow(i as u32) % 3) as u32 + 1).collect();
            let k = Index::new(parts).unwrap();
            let e = star_expand(&k);
            let good = e.len() == 1 << (depth - 1)
                && e.iter().all(|(t, c)| {
                    c.is_integer() && *c == Rational::from_integer(1.into()) && t.weight() == k.weight()
                });
            if !good {
                return outcome(false, format!("star expansion of {k} has wrong shape"));
            }
            expansions += 1;
        }
    }
    outcome(true, format!("{duals} duals to weight 10, {expansions} star expansions to depth 8"))
}

/// `|v(N) - v(2N)| < bound(N)` for one rigorous evaluator.
fn honest(
    label: String,
    n: u64,
    eval: impl Fn(&PrecisionConfig) -> ValueWithError,
    failures: &mut Vec<String>,
) -> usize {
    let a = eval(&cfg().with_max_terms(n));
    let b = eval(&cfg().with_max_terms(2 * n));
    assert_eq!(a.kind, BoundKind::Rigorous, "{label}");
    let gap = (&a.value - &b.value).abs();
    if gap >= a.bound {
        failures.push(format!("{label}: gap {} >= bound {}", gap.to_sci(3), a.bound.to_sci(3)));
    }
    1
}

fn c17() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let idx = |v: &[u32]| Index::new(v.to_vec()).unwrap();
    for w in 2..=5 {
        for k in indices_of_weight(w).into_iter().filter(|k| k[0] >= 2) {
            let k = idx(&k);
            count += honest(format!("mzv_direct({k})"), 2_000, |c| mzv_direct(&k, c).unwrap(), &mut failures);
        }
    }
    for k in [&[1u32][..], &[2], &[3], &[4], &[2, 1], &[2, 2, 1], &[3, 1], &[3, 1, 1], &[1, 1]] {
        let k = idx(k);
        count += honest(format!("mzbsv({k})"), 20_000, |c| mzbsv(&k, c).unwrap(), &mut failures);
    }
    for (m, r) in [(&[1u32][..], 1), (&[1], 0), (&[2], 1), (&[1, 1], 1)] {
        let m = idx(m);
        count += honest(
            format!("mzbsv_h({m}; {r})"),
            20_000,
            |c| mzbsv_hweighted(&m, r, c).unwrap(),
            &mut failures,
        );
    }
    for k in [&[1u32][..], &[2], &[2, 1], &[1, 1, 1], &[3, 1, 1]] {
        let k = idx(k);
        for (p, q) in [(1, 4), (1, 2), (3, 4)] {
            // a small cutoff so the bound is not vacuous
            count += honest(
                format!("mpl({k}; {p}/{q})"),
                40,
                |c| mpl(&k, &c.ratio(p, q), c, |_| unreachable!()).unwrap(),
                &mut failures,
            );
        }
    }
    for (p, q) in [(1, 4), (1, 2), (3, 4)] {
        let c = cfg();
        let t = c.ratio(p, q);
        for n in [200u64, 10_000] {
            let n1 = (n + 1) as i64;
            let t_next = t.powi(n as i32 + 1);
            let b1 = &t_next / n1 / (c.one() - &t);
            let b2 = &t_next * n1 / (c.one() - &t).powi(2);
            let g1 = (gf_binomial_partial(&t, n) - gf_binomial_partial(&t, 2 * n)).abs();
            let g2 = (gf_binomial_h_partial(&t, n) - gf_binomial_h_partial(&t, 2 * n)).abs();
            for (name, g, b) in [("GF-1", g1, b1), ("GF-2", g2, b2)] {
                if g >= b {
                    failures.push(format!(
                        "{name}({p}/{q}, {n}): gap {} >= bound {}",
                        g.to_sci(3),
                        b.to_sci(3)
                    ));
                }
                count += 1;
            }
        }
    }
    let ok = failures.is_empty();
    let mut detail = format!("{count} rigorous evaluations at N vs 2N");
    if let Some(f) = failures.first() {
        detail += &format!(", {} violations, first: {f}", failures.len());
    }
    outcome(ok, detail)
}

fn main() {
    let plain =
        |filter: &'static str, tol: f64, n: usize| move || suite_within(filter, &cfg(), tol, n, |_| true).1;
    let criteria: Vec<Criterion> = vec![
        ("backend sanity", Box::new(c1)),
        ("duality suite", Box::new(c2)),
        ("quasi-shuffle suite", Box::new(plain("STUFFLE", 1e-25, 50))),
        ("STAR-2-ONES", Box::new(plain("STAR-2-ONES", 1e-25, 6))),
        ("STAR-22-ONES", Box::new(plain("STAR-22-ONES", 1e-20, 4))),
        ("EQ3.5 grid", Box::new(plain("EQ3.5", 1e-20, 12))),
        ("EQ3.4 / EC2 grids", Box::new(c7)),
        ("COR3.2-X / EC1-X at x = 1/2", Box::new(c8)),
        ("E3-E5 cross-checks", Box::new(plain("E3-E5", 1e-8, 36))),
        ("RC2 / RC3 / EC5", Box::new(c10)),
        ("GOLD-ZB221", Box::new(c11)),
        ("GOLD-HN2", Box::new(plain("GOLD-HN2", 1e-8, 1))),
        ("THM4.3 / THM4.4 instances", Box::new(c13)),
        ("GF-1 / GF-2 partial sums", Box::new(c14)),
        ("Bell polynomial equivalence", Box::new(c15)),
        ("dual involution and star term counts", Box::new(c16)),
        ("tail honesty", Box::new(c17)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.ok);
        println!("{} {:>2} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, o.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
