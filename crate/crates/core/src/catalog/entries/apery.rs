//! Sums weighted by `C(2n, n)/4^n` and their alternating-MZV evaluations.

use super::super::ctx::{cat, dual_mj, ones, rev_plus, sign, Ctx, Lin, Vwe};
use super::super::params::{int, list, params, ratio, Params, ParamsExt};
use super::super::{Identity, ParamSpec, Sides, Status};
use crate::error::{Error, Result};
use crate::index_algebra::compositions;
use crate::precision::{BoundKind, PrecisionConfig, ValueWithError};
use crate::series::{gf_binomial, gf_binomial_h, gf_binomial_h_partial, gf_binomial_partial};

const GF_TERMS: u64 = 10_000;
const BINOMIAL_TERMS: u64 = 131_072;

fn check_m(p: &Params) -> Result<Vec<u32>> {
    let m = p.list("m");
    if m[0] == 0 || m[m.len() - 1] == 0 {
        return Err(Error::ParamRange { name: "m".into(), detail: "m_1 and m_p must be at least 1".into() });
    }
    Ok(m)
}

/// Signs `(σ_{q}, σ_q σ_{q-1}, ..., σ_2 σ_1)` for `σ` encoded in the bits of `code`,
/// with `σ_i = -1` when bit `i - 1` is set. Returns the argument list and `σ_1`.
fn arguments(q: usize, code: u32) -> (Vec<i32>, i32) {
    let s = |i: usize| if code >> (i - 1) & 1 == 1 { -1 } else { 1 };
    let mut args = vec![s(q)];
    for i in 1..q {
        args.push(s(q + 1 - i) * s(q - i));
    }
    (args, s(1))
}

/// `Li_idx(args)` with unit-modulus arguments, as a signed MZV.
fn li_signed(c: &Ctx, idx: &[u32], args: &[i32]) -> Result<Vwe> {
    assert_eq!(idx.len(), args.len());
    assert!(idx[0] >= 2, "leading exponent must be at least 2");
    let parts: Vec<i32> = idx.iter().zip(args).map(|(&k, &x)| k as i32 * x).collect();
    c.az(&parts)
}

/// `Σ_σ w(σ_1) Li_idx(args(σ) [, -σ_1])` over `σ ∈ {±1}^q`.
fn sign_sum(c: &Ctx, idx: &[u32], q: usize, extra: bool, weighted: bool) -> Result<Vwe> {
    let mut acc = Lin::new(c.cfg);
    for code in 0..(1u32 << q) {
        let (mut args, s1) = arguments(q, code);
        if extra {
            args.push(-s1);
        }
        let v = li_signed(c, idx, &args)?;
        acc.add_int(if weighted { s1 as i64 } else { 1 }, &v);
    }
    Ok(acc.finish())
}

fn head(m: &[u32]) -> Vec<u32> {
    rev_plus(m, 1, m.len(), &vec![0; m.len()])
}

/// `Σ_j (-1)^{j-1} ζ(←(m+1)_{j+1,p}) f(m_j^∨)`.
fn dual_side(c: &Ctx, m: &[u32], mut f: impl FnMut(&[u32]) -> Result<Vwe>) -> Result<Vwe> {
    let p = m.len();
    let mut acc = Lin::new(c.cfg);
    for j in 1..=p {
        let z = c.z(&rev_plus(m, j + 1, p, &vec![0; p - j]))?;
        acc.add_int(sign(j as u32 - 1), &(&z * &f(dual_mj(m, j)?.parts())?));
    }
    Ok(acc.finish())
}

fn thm43(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p)?;
    let r = p.uint("r");
    let q = m.len() + r as usize;
    let pow2 = 1i64 << (m.iter().sum::<u32>() + 1);
    let h = head(&m);
    let lhs = dual_side(&c, &m, |d| c.zb(&cat(&[&[r + 2], d])))?;
    let mut rhs = Lin::new(cfg);
    for j in 1..=r {
        let t = &c.z(&cat(&[&h, &ones((r - j) as usize)]))? * &c.zb(&[j + 1])?;
        rhs.add_int(sign(r - j), &t);
    }
    let s2 = sign_sum(&c, &cat(&[&h, &ones(r as usize)]), q, false, false)?;
    rhs.add_int(sign(r) * pow2, &(&c.log2() * &s2));
    let s3 = sign_sum(&c, &cat(&[&h, &ones(r as usize + 1)]), q, true, false)?;
    rhs.add_int(sign(r) * pow2, &s3);
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn thm44(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = check_m(p)?;
    let r = p.uint("r");
    let pp = m.len();
    let q = pp + r as usize;
    let pow2 = 1i64 << (m.iter().sum::<u32>() + 1);
    let h = head(&m);
    let lhs = dual_side(&c, &m, |d| c.zb_h(d, r))?;
    let mut rhs = Lin::new(cfg);
    for j in 1..=r {
        let t = &c.z(&cat(&[&h, &ones((r - j) as usize)]))? * &c.zb(&[j, 1])?;
        rhs.add_int(sign(r - j), &t);
    }
    // exactly one of i_1..i_r, j_1..j_p equals 1
    for slot in compositions(1, q) {
        let (js, is) = slot.split_at(pp);
        let coeff: i64 = m.iter().zip(js).map(|(&ml, &jl)| if jl == 1 { ml as i64 + 1 } else { 1 }).product();
        let tail: Vec<u32> = is.iter().rev().map(|i| i + 1).collect();
        let idx = cat(&[&rev_plus(&m, 1, pp, js), &tail]);
        rhs.add_int(sign(r) * pow2 * coeff, &sign_sum(&c, &idx, q, false, true)?);
    }
    let s3 = sign_sum(&c, &cat(&[&h, &ones(r as usize)]), q, false, true)?;
    rhs.add_int(-sign(r) * pow2, &(&c.log2() * &s3));
    let s4 = sign_sum(&c, &cat(&[&h, &ones(r as usize + 1)]), q, true, true)?;
    rhs.add_int(-sign(r) * pow2, &s4);
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn gold_zb221(_: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let lhs = c.zb(&[2, 2, 1])?;
    let l2 = c.log2();
    let mut rhs = Lin::new(cfg);
    rhs.add(&c.q(75, 8), &c.z(&[5])?);
    rhs.add_int(-4, &(&c.z(&[4])? * &l2));
    rhs.add_int(-3, &(&c.z(&[2])? * &c.z(&[3])?));
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn gold_hn2(_: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let lhs = c.zb_h(&[1], 1)?;
    let l2 = c.log2();
    let li4 = crate::word::li_half(&crate::Index::from([4]), cfg)?;
    let mut rhs = Lin::new(cfg);
    rhs.add_int(32, &c.exact(li4));
    rhs.add_int(-14, &c.z(&[4])?);
    rhs.add_int(7, &(&c.z(&[3])? * &l2));
    rhs.add_int(-8, &(&c.z(&[2])? * &l2.powi(2)));
    rhs.add(&c.q(4, 3), &l2.powi(4));
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn gf(p: &Params, cfg: &PrecisionConfig, harmonic: bool) -> Result<Sides> {
    let t = cfg.rational(&p.ratio("t"));
    let n = GF_TERMS;
    let one = cfg.one();
    let t_next = t.powi(n as i32 + 1);
    // b_n <= 1 and H_n <= n bound the tails geometrically
    let (partial, closed, tail) = if harmonic {
        let tail = t_next * (n as i64 + 1) / (&one - &t).powi(2);
        (gf_binomial_h_partial(&t, n), gf_binomial_h(&t)?, tail)
    } else {
        let tail = t_next / (n as i64 + 1) / (&one - &t);
        (gf_binomial_partial(&t, n), gf_binomial(&t)?, tail)
    };
    let lhs = ValueWithError::new(partial, tail, BoundKind::Rigorous, n);
    Ok(Sides { lhs, rhs: ValueWithError::exact(closed) })
}

fn con_zb(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let l2 = c.log2();
    let z = |k: u32| c.z(&[k]);
    let mut rhs = Lin::new(cfg);
    let lhs = match p.int("case") {
        0 => {
            rhs.add_int(2, &l2);
            c.zb(&[1])?
        }
        1 => {
            rhs.push(&z(2)?);
            rhs.add_int(-2, &l2.powi(2));
            c.zb(&[2])?
        }
        2 => {
            rhs.add_int(2, &z(3)?);
            rhs.add_int(-2, &(&z(2)? * &l2));
            rhs.add(&c.q(4, 3), &l2.powi(3));
            c.zb(&[3])?
        }
        3 => {
            rhs.add(&c.q(9, 4), &z(4)?);
            rhs.add_int(-4, &(&z(3)? * &l2));
            rhs.add_int(2, &(&z(2)? * &l2.powi(2)));
            rhs.add(&c.q(-2, 3), &l2.powi(4));
            c.zb(&[4])?
        }
        _ => {
            rhs.add_int(2, &(&z(2)? * &l2));
            rhs.add_int(4, &c.az(&[2, -1])?);
            rhs.add_int(4, &c.az(&[-2, 1])?);
            c.zb(&[2, 1])?
        }
    };
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn grid_thm(ms: &'static [&'static [i64]]) -> Vec<Params> {
    let mut g = Vec::new();
    for m in ms {
        for r in 0..=1 {
            g.push(params([("m", list(m)), ("r", int(r))]));
        }
    }
    g
}

fn grid_t() -> Vec<Params> {
    [ratio(1, 4), ratio(1, 2), ratio(3, 4)].into_iter().map(|t| params([("t", t)])).collect()
}

const M: ParamSpec = ParamSpec::list("m", 1, 3, 0, 3);
const R: ParamSpec = ParamSpec::int("r", 0, 2);
const T: ParamSpec = ParamSpec::ratio("t", 0.0, 1.0, false);

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "THM4.3",
            anchor: "sum_j (-1)^{j-1} zeta(<-(m+1)_{j+1,p}) zeta*_B(r+2,m_j^dual) = sum_{j<=r} (-1)^{r-j} zeta(<-(m+1),{1}_{r-j}) zeta*_B(j+1) + (-1)^r 2^{|m|+1} log 2 sum_sigma Li_{<-(m+1),{1}_r}(sigma) + (-1)^r 2^{|m|+1} sum_sigma Li_{<-(m+1),{1}_{r+1}}(sigma, -sigma_1)",
            status: Status::Theorem,
            params: vec![M, R],
            default_tolerance: 1e-8,
            series_terms: Some(BINOMIAL_TERMS),
            grid: || grid_thm(&[&[1], &[1, 1]]),
            sides: thm43,
        },
        Identity {
            id: "THM4.4",
            anchor: "sum_j (-1)^{j-1} zeta(<-(m+1)_{j+1,p}) sum_n zeta*_n(m_j^dual) H_n C(2n,n)/(n^{r+1} 4^n) = sum_{j<=r} (-1)^{r-j} zeta(<-(m+1),{1}_{r-j}) zeta*_B(j,1) + (-1)^r 2^{|m|+1} [sum_{|i|+|j|=1} prod C(m_l+j_l,j_l) sum_sigma sigma_1 Li_{<-(m+j+1),<-(i+1)}(sigma) - log 2 sum_sigma sigma_1 Li_{<-(m+1),{1}_r}(sigma) - sum_sigma sigma_1 Li_{<-(m+1),{1}_{r+1}}(sigma, -sigma_1)]",
            status: Status::Theorem,
            params: vec![M, R],
            default_tolerance: 1e-8,
            series_terms: Some(BINOMIAL_TERMS),
            grid: || grid_thm(&[&[1], &[2], &[1, 1]]),
            sides: thm44,
        },
        Identity {
            id: "GOLD-HN2",
            anchor: "sum_n H_n^2 C(2n,n)/(n^2 4^n) = 32 Li_4(1/2) - 14 zeta(4) + 7 zeta(3) log 2 - 8 zeta(2) log^2 2 + (4/3) log^4 2",
            status: Status::Theorem,
            params: vec![],
            default_tolerance: 1e-8,
            series_terms: Some(BINOMIAL_TERMS),
            grid: || vec![Params::new()],
            sides: gold_hn2,
        },
        Identity {
            id: "GOLD-ZB221",
            anchor: "zeta*_B(2,2,1) = (75/8) zeta(5) - 4 zeta(4) log 2 - 3 zeta(2) zeta(3)",
            status: Status::Theorem,
            params: vec![],
            default_tolerance: 1e-8,
            series_terms: Some(BINOMIAL_TERMS),
            grid: || vec![Params::new()],
            sides: gold_zb221,
        },
        Identity {
            id: "GF-1",
            anchor: "sum_n C(2n,n) t^n/(n 4^n) = 2 log(2/(1+sqrt(1-t)))",
            status: Status::Theorem,
            params: vec![T],
            default_tolerance: 1e-10,
            series_terms: None,
            grid: grid_t,
            sides: |p, cfg| gf(p, cfg, false),
        },
        Identity {
            id: "GF-2",
            anchor: "sum_n H_n C(2n,n) t^n/4^n = (2/sqrt(1-t)) log((1+sqrt(1-t))/(2 sqrt(1-t)))",
            status: Status::Cited,
            params: vec![T],
            default_tolerance: 1e-10,
            series_terms: None,
            grid: grid_t,
            sides: |p, cfg| gf(p, cfg, true),
        },
        Identity {
            id: "CON-ZB",
            anchor: "zeta*_B(k) as alternating MZVs: case 0..3 is k=(1)..(4) against polynomials in zeta values and log 2; case 4 is k=(2,1) against 2 zeta(2) log 2 + 4 zeta(2,-1) + 4 zeta(-2,1)",
            status: Status::Conjecture,
            params: vec![ParamSpec::int("case", 0, 4)],
            default_tolerance: 1e-8,
            series_terms: Some(BINOMIAL_TERMS),
            grid: || (0..=4).map(|k| params([("case", int(k))])).collect(),
            sides: con_zb,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_pattern() {
        // σ = (σ_1, σ_2) = (-1, +1): args (σ_2, σ_2 σ_1) = (1, -1)
        assert_eq!(arguments(2, 0b01), (vec![1, -1], -1));
        assert_eq!(arguments(1, 0), (vec![1], 1));
    }
}
