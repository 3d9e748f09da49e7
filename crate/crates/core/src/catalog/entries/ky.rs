//! Relations between Kaneko-Yamamoto values, MZVs and polylogarithms.

use super::super::ctx::{binom, cat, dual_mj, factorial, ones, rev_plus, sign, Ctx, Lin, Vwe};
use super::super::params::{int, list, params, ratio, Params, ParamsExt};
use super::super::{Identity, ParamSpec, Sides, Status};
use crate::error::{Error, Result};
use crate::index_algebra::{compositions, Index};
use crate::precision::{HpReal, PrecisionConfig};
use crate::series::ky_param_series;

const X: ParamSpec = ParamSpec::ratio("x", 0.0, 1.0, false);
const M: ParamSpec = ParamSpec::list("m", 1, 4, 0, 4);
const P: ParamSpec = ParamSpec::int("p", 1, 4).optional();

fn check_m(p: &Params, last_positive: bool) -> Result<Vec<u32>> {
    let m = p.list("m");
    let bad = |detail: &str| Error::ParamRange { name: "m".into(), detail: detail.into() };
    if m[0] == 0 {
        return Err(bad("m_1 must be at least 1"));
    }
    if last_positive && m[m.len() - 1] == 0 {
        return Err(bad("m_p must be at least 1"));
    }
    if let Some(crate::catalog::ParamValue::Int(pp)) = p.get("p") {
        if *pp as usize != m.len() {
            return Err(Error::ParamRange {
                name: "p".into(),
                detail: format!("p = {pp} but m has {} entries", m.len()),
            });
        }
    }
    Ok(m)
}

/// `Σ_{i_0 + i_1 + ... + i_p = total} (-1)^{i_0}/i_0! L^{i_0} Π C(m_l + i_l, i_l) f(←(m+i+1))`.
/// Without `log`, `i_0` is absent.
fn comp_sum(
    cfg: &PrecisionConfig,
    m: &[u32],
    total: u32,
    log: Option<&HpReal>,
    mut f: impl FnMut(&[u32]) -> Result<Vwe>,
) -> Result<Vwe> {
    let p = m.len();
    let mut acc = Lin::new(cfg);
    let slots = if log.is_some() { p + 1 } else { p };
    for comp in compositions(total, slots) {
        let (i0, is) = if log.is_some() { (comp[0], &comp[1..]) } else { (0, &comp[..]) };
        let coeff: i64 = m.iter().zip(is).map(|(&ml, &il)| binom(ml + il, il)).product();
        let mut w = cfg.int(coeff);
        if let Some(l) = log {
            w = w * l.powi(i0 as i32) * sign(i0) / factorial(i0);
        }
        acc.add(&w, &f(&rev_plus(m, 1, p, is))?);
    }
    Ok(acc.finish())
}

fn weight1(p: usize, j: usize) -> Vec<u32> {
    let mut v = vec![0; p];
    v[j - 1] = 1;
    v
}

fn cor32(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, false)?;
    let (k, r) = (p.uint("k"), p.uint("r"));
    let pp = m.len();
    let x = cfg.rational(&p.ratio("x"));
    let y = cfg.one() - &x;
    let ly = y.ln();
    let lhs = ky_param_series(k + 1, &Index::new(ones(r as usize - 1))?, &dual_mj(&m, pp)?, &x, cfg)?;
    let mut rhs = Lin::new(cfg);
    for js in compositions(r, k as usize) {
        let tail: Vec<u32> = js[..k as usize - 1].iter().map(|j| j + 1).collect();
        let jk = js[k as usize - 1];
        let v = comp_sum(cfg, &m, jk, Some(&ly), |head| c.li(&cat(&[head, &tail]), &y))?;
        rhs.add_int(sign(pp as u32 + k - 1), &v);
    }
    let head = rev_plus(&m, 1, pp, &vec![0; pp]);
    for j in 0..k.saturating_sub(1) {
        let z = c.z(&cat(&[&[k - j], &ones(r as usize - 1)]))?;
        let l = c.li(&cat(&[&head, &ones(j as usize)]), &y)?;
        rhs.add_int(sign(pp as u32 + j), &(&z * &l));
    }
    let kk = cat(&[&[k], &ones(r as usize - 1)]);
    for j in 1..=pp {
        let ky = c.ky(&kk, &cat(&[&[1], dual_mj(&m, j)?.parts()]))?;
        let l = c.li(&rev_plus(&m, j + 1, pp, &vec![0; pp - j]), &y)?;
        rhs.add_int(sign((pp - j) as u32), &(&ky * &l));
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn ec1(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, false)?;
    let (a, b) = (p.uint("a"), p.uint("b"));
    let pp = m.len();
    let x = cfg.rational(&p.ratio("x"));
    let y = cfg.one() - &x;
    let ly = y.ln();
    let strict = cat(&[&ones(a as usize - 1), &[2], &ones(b as usize)]);
    let lhs = ky_param_series(2, &Index::new(strict)?, &dual_mj(&m, pp)?, &x, cfg)?;
    let mut rhs = Lin::new(cfg);
    for j in 0..=a {
        let z = c.z(&[j + b + 2])?;
        let v = comp_sum(cfg, &m, a - j, Some(&ly), |head| c.li(head, &y))?;
        rhs.add_int(sign(pp as u32 + j) * binom(j + b + 1, j), &(&z * &v));
    }
    for j in 0..=b + 1 {
        let v = comp_sum(cfg, &m, b + 1 - j, Some(&ly), |head| c.li(&cat(&[head, &[a + 1 + j]]), &y))?;
        rhs.add_int(-sign(a + pp as u32) * binom(j + a, j), &v);
    }
    let kk = cat(&[&ones(a as usize), &[2], &ones(b as usize)]);
    for j in 1..=pp {
        let ky = c.ky(&kk, &cat(&[&[1], dual_mj(&m, j)?.parts()]))?;
        let l = c.li(&rev_plus(&m, j + 1, pp, &vec![0; pp - j]), &y)?;
        rhs.add_int(sign((pp - j) as u32), &(&ky * &l));
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

/// `Σ_j (-1)^{j+1} ζ(kk ⊛ (1, m_j^∨)★) ζ(←(m+1)_{j+1,p})`, series route.
fn ky_side(c: &Ctx, m: &[u32], kk: &[u32]) -> Result<Vwe> {
    let pp = m.len();
    let mut acc = Lin::new(c.cfg);
    for j in 1..=pp {
        let ky = c.ky_series(kk, &cat(&[&[1], dual_mj(m, j)?.parts()]))?;
        let z = c.z(&rev_plus(m, j + 1, pp, &vec![0; pp - j]))?;
        acc.add_int(sign(j as u32 + 1), &(&ky * &z));
    }
    Ok(acc.finish())
}

fn eq34(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, true)?;
    let (k, r) = (p.uint("k"), p.uint("r"));
    let pp = m.len();
    let mut lhs = Lin::new(cfg);
    for js in compositions(r, k as usize) {
        let tail: Vec<u32> = js[..k as usize - 1].iter().map(|j| j + 1).collect();
        let v = comp_sum(cfg, &m, js[k as usize - 1], None, |head| c.z(&cat(&[head, &tail])))?;
        lhs.add_int(sign(k - 1), &v);
    }
    let head = rev_plus(&m, 1, pp, &vec![0; pp]);
    for j in 0..k.saturating_sub(1) {
        let z1 = c.z(&cat(&[&[k - j], &ones(r as usize - 1)]))?;
        let z2 = c.z(&cat(&[&head, &ones(j as usize)]))?;
        lhs.add_int(sign(j), &(&z1 * &z2));
    }
    let rhs = ky_side(&c, &m, &cat(&[&[k], &ones(r as usize - 1)]))?;
    Ok(Sides { lhs: lhs.finish(), rhs })
}

fn ec2(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, true)?;
    let (a, b) = (p.uint("a"), p.uint("b"));
    let lhs = ky_side(&c, &m, &cat(&[&ones(a as usize), &[2], &ones(b as usize)]))?;
    let mut rhs = Lin::new(cfg);
    for j in 0..=a {
        let z = c.z(&[j + b + 2])?;
        let v = comp_sum(cfg, &m, a - j, None, |head| c.z(head))?;
        rhs.add_int(sign(j) * binom(j + b + 1, j), &(&z * &v));
    }
    for j in 0..=b + 1 {
        let v = comp_sum(cfg, &m, b + 1 - j, None, |head| c.z(&cat(&[head, &[a + 1 + j]])))?;
        rhs.add_int(-sign(a) * binom(j + a, j), &v);
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

/// `Σ_j (-1)^{j+1} ζ(m_p+1, ..., m_{j+1}+1) f(m_j^∨)`.
fn alternating_dual_sum(c: &Ctx, m: &[u32], mut f: impl FnMut(&[u32]) -> Result<Vwe>) -> Result<Vwe> {
    let pp = m.len();
    let mut acc = Lin::new(c.cfg);
    for j in 1..=pp {
        let z = c.z(&rev_plus(m, j + 1, pp, &vec![0; pp - j]))?;
        let v = f(dual_mj(m, j)?.parts())?;
        acc.add_int(sign(j as u32 + 1), &(&z * &v));
    }
    Ok(acc.finish())
}

/// `Σ_j (m_j + 1) ζ(m_p+1, ..., m_j+2, ..., m_1+1, tail)`.
fn bumped_sum(c: &Ctx, m: &[u32], tail: &[u32]) -> Result<Vwe> {
    let pp = m.len();
    let mut acc = Lin::new(c.cfg);
    for j in 1..=pp {
        let idx = cat(&[&rev_plus(m, 1, pp, &weight1(pp, j)), tail]);
        acc.add_int(m[j - 1] as i64 + 1, &c.z(&idx)?);
    }
    Ok(acc.finish())
}

fn eq35(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, true)?;
    let lhs = alternating_dual_sum(&c, &m, |d| c.zs(&cat(&[&[2], d])))?;
    let rhs = bumped_sum(&c, &m, &[])?;
    Ok(Sides { lhs, rhs })
}

/// `2ζ(3)ζ(←(m+1)) - 2ζ(←(m+1), 3)`.
fn three_terms(c: &Ctx, m: &[u32]) -> Result<Vwe> {
    let head = rev_plus(m, 1, m.len(), &vec![0; m.len()]);
    let a = &c.z(&[3])? * &c.z(&head)?;
    let b = c.z(&cat(&[&head, &[3]]))?;
    Ok(&a.scale_int(2) - &b.scale_int(2))
}

fn ec3(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, true)?;
    let z2 = c.z(&[2])?;
    let lhs = alternating_dual_sum(&c, &m, |d| {
        let a = &z2 * &c.zs(&cat(&[&[2], d]))?;
        Ok(&a - &c.zs(&cat(&[&[2, 2], d]))?)
    })?;
    let rhs = &(&(&z2 * &bumped_sum(&c, &m, &[])?) + &bumped_sum(&c, &m, &[2])?) - &three_terms(&c, &m)?;
    Ok(Sides { lhs, rhs })
}

fn ecd1(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p, true)?;
    let lhs = alternating_dual_sum(&c, &m, |d| c.zs(&cat(&[&[2, 2], d])))?;
    let rhs = &three_terms(&c, &m)? - &bumped_sum(&c, &m, &[2])?;
    Ok(Sides { lhs, rhs })
}

fn ky_special(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let idx = p.list("k");
    let bumped = cat(&[&[idx[0] + 1], &idx[1..]]);
    if p.int("star") == 0 {
        Ok(Sides { lhs: c.ky_series(&idx, &[1])?, rhs: c.z(&bumped)? })
    } else {
        Ok(Sides { lhs: c.ky_series(&[1], &idx)?, rhs: c.zs(&bumped)? })
    }
}

fn m_list<'a>(ms: &'a [&'a [i64]]) -> impl Iterator<Item = crate::catalog::ParamValue> + 'a {
    ms.iter().map(|m| list(m))
}

fn grid_cor32() -> Vec<Params> {
    [(1, 1, &[1][..]), (2, 1, &[1, 1]), (3, 2, &[2]), (1, 2, &[1, 2])]
        .into_iter()
        .map(|(k, r, m)| params([("k", int(k)), ("m", list(m)), ("r", int(r)), ("x", ratio(1, 2))]))
        .collect()
}

fn grid_ec1() -> Vec<Params> {
    [(1, 0, &[1][..]), (2, 0, &[1, 1]), (1, 1, &[2]), (2, 1, &[1, 2])]
        .into_iter()
        .map(|(a, b, m)| params([("a", int(a)), ("b", int(b)), ("m", list(m)), ("x", ratio(1, 2))]))
        .collect()
}

fn grid_eq34() -> Vec<Params> {
    let ms: &[&[i64]] = &[&[1], &[2], &[1, 1], &[1, 2], &[2, 1], &[2, 2]];
    let mut g = Vec::new();
    for k in 1..=2 {
        for r in 1..=2 {
            for m in m_list(ms) {
                g.push(params([("k", int(k)), ("m", m), ("r", int(r))]));
            }
        }
    }
    g
}

fn grid_ec2() -> Vec<Params> {
    let ms: &[&[i64]] = &[&[1], &[2], &[1, 2]];
    let mut g = Vec::new();
    for a in 1..=2 {
        for b in 0..=1 {
            for m in m_list(ms) {
                g.push(params([("a", int(a)), ("b", int(b)), ("m", m)]));
            }
        }
    }
    g
}

fn grid_eq35() -> Vec<Params> {
    let mut g = Vec::new();
    for p in 2..=3usize {
        for code in 0..(1 << p) {
            let m: Vec<i64> = (0..p).map(|i| 1 + ((code >> (p - 1 - i)) & 1) as i64).collect();
            g.push(params([("m", list(&m)), ("p", int(p as i64))]));
        }
    }
    g
}

fn grid_small_m() -> Vec<Params> {
    let ms: &[&[i64]] = &[&[1], &[2], &[3], &[1, 1], &[1, 2], &[2, 1], &[2, 2]];
    m_list(ms).map(|m| params([("m", m)])).collect()
}

fn grid_ky_special() -> Vec<Params> {
    let mut g = Vec::new();
    for star in 0..=1 {
        for w in 1..=4 {
            for k in crate::index_algebra::indices_of_weight(w) {
                let k: Vec<i64> = k.into_iter().map(i64::from).collect();
                g.push(params([("k", list(&k)), ("star", int(star))]));
            }
        }
    }
    g
}

const KY_TERMS: u64 = 100_000;

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "COR3.2-X",
            anchor: "sum_n zeta_{n-1}({1}_{r-1}) zeta*_n(m_p^dual; x)/n^{k+1} = (-1)^{p+k-1} sum_{j,i} (-1)^{i_0}/i_0! prod C(m_l+i_l,i_l) log^{i_0}(1-x) Li_{<-(m+i+1),->(j+1)}(1-x) + (-1)^p sum_{j<=k-2} (-1)^j zeta(k-j,{1}_{r-1}) Li_{<-(m+1),{1}_j}(1-x) + sum_j (-1)^{p-j} zeta((k,{1}_{r-1}) (*) (1,m_j^dual)*) Li_{<-(m+1)_{j+1,p}}(1-x)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("k", 1, 4), M, ParamSpec::int("r", 1, 3), X],
            default_tolerance: 1e-5,
            series_terms: Some(KY_TERMS),
            grid: grid_cor32,
            sides: cor32,
        },
        Identity {
            id: "EC1-X",
            anchor: "sum_n zeta_{n-1}({1}_{a-1},2,{1}_b) zeta*_n(m_p^dual; x)/n^2 = (-1)^p sum_{j<=a} (-1)^j C(j+b+1,j) zeta(j+b+2) S_{a-j} - (-1)^{a+p} sum_{j<=b+1} C(j+a,j) S'_{b+1-j,a+1+j} + sum_j (-1)^{p-j} zeta(({1}_a,2,{1}_b) (*) (1,m_j^dual)*) Li_{<-(m+1)_{j+1,p}}(1-x)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("a", 1, 3), ParamSpec::int("b", 0, 2), M, X],
            default_tolerance: 1e-5,
            series_terms: Some(KY_TERMS),
            grid: grid_ec1,
            sides: ec1,
        },
        Identity {
            id: "EQ3.4",
            anchor: "(-1)^{k-1} sum_{j,i} prod C(m_l+i_l,i_l) zeta(<-(m+i+1), ->(j+1)) + sum_{j<=k-2} (-1)^j zeta(k-j,{1}_{r-1}) zeta(<-(m+1),{1}_j) = sum_j (-1)^{j+1} zeta((k,{1}_{r-1}) (*) (1,m_j^dual)*) zeta(<-(m+1)_{j+1,p})",
            status: Status::Theorem,
            params: vec![ParamSpec::int("k", 1, 3), M, ParamSpec::int("r", 1, 3)],
            default_tolerance: 1e-8,
            series_terms: Some(KY_TERMS),
            grid: grid_eq34,
            sides: eq34,
        },
        Identity {
            id: "EC2",
            anchor: "sum_j (-1)^{j+1} zeta(({1}_a,2,{1}_b) (*) (1,m_j^dual)*) zeta(<-(m+1)_{j+1,p}) = sum_{j<=a} (-1)^j C(j+b+1,j) zeta(j+b+2) sum_i prod C zeta(<-(m+i+1)) - (-1)^a sum_{j<=b+1} C(j+a,j) sum_i prod C zeta(<-(m+i+1), a+1+j)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("a", 1, 3), ParamSpec::int("b", 0, 2), M],
            default_tolerance: 1e-8,
            series_terms: Some(KY_TERMS),
            grid: grid_ec2,
            sides: ec2,
        },
        Identity {
            id: "EQ3.5",
            anchor: "sum_j (-1)^{j+1} zeta(m_p+1,...,m_{j+1}+1) zeta*(2,m_j^dual) = sum_j (m_j+1) zeta(m_p+1,...,m_j+2,...,m_1+1)",
            status: Status::Theorem,
            params: vec![M, P],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: grid_eq35,
            sides: eq35,
        },
        Identity {
            id: "EC3",
            anchor: "sum_j (-1)^{j+1} zeta(m_p+1,...,m_{j+1}+1) [zeta(2) zeta*(2,m_j^dual) - zeta*(2,2,m_j^dual)] = zeta(2) B() + B(2) - 2 zeta(3) zeta(m_p+1,...,m_1+1) + 2 zeta(m_p+1,...,m_1+1,3), B(t) = sum_j (m_j+1) zeta(m_p+1,...,m_j+2,...,m_1+1,t)",
            status: Status::Theorem,
            params: vec![M, P],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: grid_small_m,
            sides: ec3,
        },
        Identity {
            id: "ECD1",
            anchor: "sum_j (-1)^{j+1} zeta(m_p+1,...,m_{j+1}+1) zeta*(2,2,m_j^dual) = 2 zeta(3) zeta(m_p+1,...,m_1+1) - 2 zeta(m_p+1,...,m_1+1,3) - sum_j (m_j+1) zeta(m_p+1,...,m_j+2,...,m_1+1,2)",
            status: Status::Theorem,
            params: vec![M, P],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: grid_small_m,
            sides: ecd1,
        },
        Identity {
            id: "KY-SPECIAL",
            anchor: "zeta(k (*) (1)*) = zeta(k_1+1,k_2,...) and zeta((1) (*) k*) = zeta*(k_1+1,k_2,...)",
            status: Status::Theorem,
            params: vec![ParamSpec::list("k", 1, 6, 1, 6), ParamSpec::int("star", 0, 1)],
            default_tolerance: 1e-8,
            series_terms: Some(KY_TERMS),
            grid: grid_ky_special,
            sides: ky_special,
        },
    ]
}
