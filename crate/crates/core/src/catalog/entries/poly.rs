//! One-variable polylogarithm identities at interior points.

use super::super::ctx::{binom, cat, factorial, ones, sign, Ctx, Lin};
use super::super::params::{int, params, ratio, Params, ParamsExt};
use super::super::{Identity, ParamSpec, Sides, Status};
use crate::error::Result;
use crate::index_algebra::compositions;
use crate::precision::{HpReal, PrecisionConfig};

const X: ParamSpec = ParamSpec::ratio("x", 0.0, 1.0, false);

fn logs(x: &HpReal) -> (HpReal, HpReal) {
    let one = HpReal::one(x.prec());
    (x.ln(), (one - x).ln())
}

fn point(p: &Params, cfg: &PrecisionConfig) -> (HpReal, HpReal) {
    let x = cfg.rational(&p.ratio("x"));
    let y = cfg.one() - &x;
    (x, y)
}

fn li_ones(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let r = p.uint("r");
    let (x, _) = point(p, cfg);
    let (_, ly) = logs(&x);
    let lhs = c.li(&ones(r as usize), &x)?;
    let rhs = c.exact(ly.powi(r as i32) * sign(r) / factorial(r));
    Ok(Sides { lhs, rhs })
}

fn eq25(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (k, r) = (p.uint("k"), p.uint("r"));
    let (x, y) = point(p, cfg);
    let (lx, ly) = logs(&x);
    let lhs = c.li(&cat(&[&[k], &ones(r as usize - 1)]), &x)?;
    let mut rhs = Lin::new(cfg);
    for j in 1..k {
        let w = lx.powi((k - 1 - j) as i32) / factorial(k - 1 - j);
        let mut inner = Lin::new(cfg);
        inner.push(&c.z(&cat(&[&[r + 1], &ones(j as usize - 1)]))?);
        for i in 0..r {
            let coeff = ly.powi(i as i32) * (-sign(i)) / factorial(i);
            let li = c.li(&cat(&[&[r + 1 - i], &ones(j as usize - 1)]), &y)?;
            inner.add(&coeff, &li);
        }
        rhs.add(&w, &inner.finish());
    }
    let last = lx.powi(k as i32 - 1) * ly.powi(r as i32) * sign(r) / (factorial(k - 1) * factorial(r));
    rhs.push(&c.exact(last));
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn eq29(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (k, r) = (p.uint("k"), p.uint("r"));
    let (x, y) = point(p, cfg);
    let lhs = c.li(&cat(&[&[k], &ones(r as usize - 1)]), &x)?;
    let mut rhs = Lin::new(cfg);
    // compositions of r + k into k positive parts, shifted from r into k non-negative ones
    for js in compositions(r, k as usize) {
        let js: Vec<u32> = js.iter().map(|j| j + 1).collect();
        let jk = js[k as usize - 1];
        let a = c.li(&ones(jk as usize - 1), &x)?;
        let b = c.li(&js[..k as usize - 1], &y)?;
        rhs.add_int(sign(k - 1), &(&a * &b));
    }
    for j in 0..k.saturating_sub(1) {
        let z = c.z(&cat(&[&[k - j], &ones(r as usize - 1)]))?;
        let l = c.li(&ones(j as usize), &y)?;
        rhs.add_int(sign(j), &(&z * &l));
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn eq210(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (k, r) = (p.uint("k"), p.uint("r"));
    let (x, y) = point(p, cfg);
    let (lx, _) = logs(&x);
    let mut lhs = Lin::new(cfg);
    for js in compositions(r + 1, k as usize - 1) {
        let js: Vec<u32> = js.iter().map(|j| j + 1).collect();
        lhs.add_int(sign(k), &c.li(&js, &y)?);
    }
    let mut rhs = Lin::new(cfg);
    for j in 1..k {
        let w = lx.powi((k - 1 - j) as i32) / factorial(k - 1 - j);
        rhs.add(&w, &c.li(&cat(&[&[r + 2], &ones(j as usize - 1)]), &y)?);
    }
    Ok(Sides { lhs: lhs.finish(), rhs: rhs.finish() })
}

fn eb1(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (a, b) = (p.uint("a"), p.uint("b"));
    let (x, y) = point(p, cfg);
    let lhs = c.li(&cat(&[&ones(a as usize), &[2], &ones(b as usize)]), &y)?;
    let mut rhs = Lin::new(cfg);
    for j in 0..=a {
        let z = c.z(&[j + b + 2])?;
        let l = c.li(&ones((a - j) as usize), &y)?;
        rhs.add_int(sign(j) * binom(j + b + 1, j), &(&z * &l));
    }
    for j in 0..=b + 1 {
        let l1 = c.li(&ones((b + 1 - j) as usize), &y)?;
        let l2 = c.li(&[a + 1 + j], &x)?;
        rhs.add_int(-sign(a) * binom(j + a, j), &(&l1 * &l2));
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn grid_li_ones() -> Vec<Params> {
    let mut g = Vec::new();
    for x in [ratio(1, 4), ratio(1, 2)] {
        for r in 1..=5 {
            g.push(params([("r", int(r)), ("x", x.clone())]));
        }
    }
    g
}

fn grid_kr(ks: std::ops::RangeInclusive<i64>, rs: std::ops::RangeInclusive<i64>) -> Vec<Params> {
    let mut g = Vec::new();
    for k in ks {
        for r in rs.clone() {
            g.push(params([("k", int(k)), ("r", int(r)), ("x", ratio(1, 2))]));
        }
    }
    g
}

fn grid_eb1() -> Vec<Params> {
    let mut g = Vec::new();
    for a in 0..=2 {
        for b in 0..=2 {
            g.push(params([("a", int(a)), ("b", int(b)), ("x", ratio(1, 2))]));
        }
    }
    g
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "LI-ONES",
            anchor: "Li_{{1}_r}(x) = (-1)^r log^r(1-x) / r!",
            status: Status::Theorem,
            params: vec![ParamSpec::int("r", 1, 10), X],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: grid_li_ones,
            sides: li_ones,
        },
        Identity {
            id: "EQ2.5",
            anchor: "Li_{k,{1}_{r-1}}(x) = sum_{j=1}^{k-1} log^{k-1-j}(x)/(k-1-j)! [zeta(r+1,{1}_{j-1}) - sum_{i<r} (-1)^i log^i(1-x)/i! Li_{r+1-i,{1}_{j-1}}(1-x)] + (-1)^r log^{k-1}(x) log^r(1-x)/((k-1)! r!)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("k", 1, 6), ParamSpec::int("r", 1, 5), X],
            default_tolerance: 1e-5,
            series_terms: None,
            grid: || grid_kr(1..=4, 1..=3),
            sides: eq25,
        },
        Identity {
            id: "EQ2.9",
            anchor: "Li_{k,{1}_{r-1}}(x) = (-1)^{k-1} sum_{j_1+...+j_k=r+k} Li_{{1}_{j_k-1}}(x) Li_{j_1,...,j_{k-1}}(1-x) + sum_{j=0}^{k-2} (-1)^j zeta(k-j,{1}_{r-1}) Li_{{1}_j}(1-x)",
            status: Status::Cited,
            params: vec![ParamSpec::int("k", 1, 6), ParamSpec::int("r", 1, 5), X],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: || grid_kr(1..=4, 1..=3),
            sides: eq29,
        },
        Identity {
            id: "EQ2.10",
            anchor: "(-1)^k sum_{j_1+...+j_{k-1}=r+k} Li_{j_1,...,j_{k-1}}(1-x) = sum_{j=1}^{k-1} log^{k-1-j}(x) Li_{r+2,{1}_{j-1}}(1-x)/(k-1-j)!",
            status: Status::Theorem,
            params: vec![ParamSpec::int("k", 2, 6), ParamSpec::int("r", 0, 5), X],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: || grid_kr(2..=4, 0..=2),
            sides: eq210,
        },
        Identity {
            id: "EB1",
            anchor: "Li_{{1}_a,2,{1}_b}(1-x) = sum_{j<=a} (-1)^j C(j+b+1,j) zeta(j+b+2) Li_{{1}_{a-j}}(1-x) - (-1)^a sum_{j<=b+1} C(j+a,j) Li_{{1}_{b+1-j}}(1-x) Li_{a+1+j}(x)",
            status: Status::Cited,
            params: vec![ParamSpec::int("a", 0, 4), ParamSpec::int("b", 0, 4), X],
            default_tolerance: 1e-5,
            series_terms: None,
            grid: grid_eb1,
            sides: eb1,
        },
    ]
}
