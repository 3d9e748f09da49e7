//! Shifted sums, derivative formulas and Kaneko-Yamamoto reductions to
//! Riemann zeta values.

use num_bigint::BigInt;

use super::super::ctx::{binom, cat, ones, sign, Ctx, Lin, Vwe};
use super::super::params::{int, params, ratio, Params, ParamsExt};
use super::super::{Identity, ParamSpec, Sides, Status};
use crate::error::Result;
use crate::index_algebra::{c_partitions, compositions, Rational};
use crate::precision::{HpReal, PrecisionConfig};
use crate::series::composition_mzv_sum;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `Σ_c Π_j (-1)^{(j-1)c_j}/(c_j! j^{c_j}) Σ_{k_s >= min_part, Σ k_s = k}
/// Π_s C(i m + i - 1 + k_s, k_s) ζ(i m + i + k_s)` where slot `s` has size `i`.
fn bell_side(c: &Ctx, m: u32, p: u32, k: u32, min_part: u32) -> Result<Vwe> {
    let mut total = Lin::new(c.cfg);
    for cs in c_partitions(p) {
        let mut coeff = Rational::from_integer(BigInt::from(1));
        let mut sizes = Vec::new();
        for (j0, &cj) in cs.iter().enumerate() {
            let j = j0 as u32 + 1;
            let fact: i64 = (1..=cj as i64).product();
            let jpow = (j as i64).pow(cj);
            coeff *= q(sign((j - 1) * cj), fact * jpow);
            sizes.extend(std::iter::repeat_n(j, cj as usize));
        }
        let slots = sizes.len();
        let need = min_part * slots as u32;
        if k < need {
            continue;
        }
        let mut inner = Lin::new(c.cfg);
        for ks in compositions(k - need, slots) {
            let mut term = c.exact(c.cfg.one());
            let mut b = 1i64;
            for (&i, &ks0) in sizes.iter().zip(&ks) {
                let kk = ks0 + min_part;
                b *= binom(i * m + i - 1 + kk, kk);
                term = &term * &c.z(&[i * m + i + kk])?;
            }
            inner.add_int(b, &term);
        }
        total.add(&c.cfg.rational(&coeff), &inner.finish());
    }
    Ok(total.finish())
}

/// The three displayed cases `p = 1, 2, 3` at shift zero.
fn explicit_side(c: &Ctx, m: u32, p: u32, k: u32) -> Result<Vwe> {
    let z = |s: u32| c.z(&[s]);
    let mut acc = Lin::new(c.cfg);
    match p {
        1 => acc.add_int(binom(m + k, k), &z(m + k + 1)?),
        2 => {
            for ks in compositions(k, 2) {
                let t = &z(m + ks[0] + 1)? * &z(m + ks[1] + 1)?;
                acc.add(&c.q(binom(m + ks[0], ks[0]) * binom(m + ks[1], ks[1]), 2), &t);
            }
            acc.add(&c.q(-binom(2 * m + k + 1, k), 2), &z(2 * m + k + 2)?);
        }
        3 => {
            for ks in compositions(k, 3) {
                let t = &(&z(m + ks[0] + 1)? * &z(m + ks[1] + 1)?) * &z(m + ks[2] + 1)?;
                let b: i64 = ks.iter().map(|&x| binom(m + x, x)).product();
                acc.add(&c.q(b, 6), &t);
            }
            for ks in compositions(k, 2) {
                let t = &z(m + ks[0] + 1)? * &z(2 * m + ks[1] + 2)?;
                acc.add(&c.q(-binom(m + ks[0], ks[0]) * binom(2 * m + ks[1] + 1, ks[1]), 2), &t);
            }
            acc.add(&c.q(binom(3 * m + k + 2, k), 3), &z(3 * m + k + 3)?);
        }
        _ => unreachable!("validated p <= 3"),
    }
    Ok(acc.finish())
}

fn e3_e5(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (m, pp, k) = (p.uint("m"), p.uint("p"), p.uint("k"));
    let lhs = composition_mzv_sum(&vec![m; pp as usize], k, |idx| c.z(idx.parts()), cfg)?;
    let rhs = if p.int("form") == 0 { bell_side(&c, m, pp, k, 0)? } else { explicit_side(&c, m, pp, k)? };
    Ok(Sides { lhs, rhs })
}

fn e6_rec(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (m, pp) = (p.uint("m"), p.uint("p"));
    let a: HpReal = cfg.rational(&p.ratio("a"));
    let lhs = c.hz(&vec![m + 1; pp as usize], &a)?;
    let mut rhs = Lin::new(cfg);
    for i in 0..pp {
        let t = &c.hz(&[(pp - i) * (m + 1)], &a)? * &c.hz(&vec![m + 1; i as usize], &a)?;
        rhs.add(&c.q(sign(pp - 1 + i), pp as i64), &t);
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn pair_sum(c: &Ctx, r: u32, a: u32, b: u32, a_shift: u32, b_shift: u32) -> Result<Vwe> {
    // Σ_{k1+k2=r, k >= 1} C(a+k1, k1) C(b+k2, k2) ζ(a+k1+a_shift) ζ(b+k2+b_shift)
    let mut acc = Lin::new(c.cfg);
    if r < 2 {
        return Ok(acc.finish());
    }
    for ks in compositions(r - 2, 2) {
        let (k1, k2) = (ks[0] + 1, ks[1] + 1);
        let t = &c.z(&[a + k1 + a_shift])? * &c.z(&[b + k2 + b_shift])?;
        acc.add_int(binom(a + k1, k1) * binom(b + k2, k2), &t);
    }
    Ok(acc.finish())
}

fn rc2(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (r, m) = (p.uint("r"), p.uint("m"));
    let l = cat(&[&ones(m as usize), &[2], &ones(m as usize)]);
    let lhs = c.ky(&ones(r as usize), &l)?;
    let mut rhs = Lin::new(cfg);
    rhs.add(&c.q(binom(2 * m + r + 1, r), 2), &c.z(&[2 * m + r + 2])?);
    rhs.add(&c.q(-1, 2), &pair_sum(&c, r, m, m, 1, 1)?);
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn rc3(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (r, m) = (p.uint("r"), p.uint("m"));
    let mu = m as usize;
    let l = cat(&[&ones(mu), &[2], &ones(mu - 1), &[2], &ones(mu)]);
    let lhs = c.ky(&ones(r as usize), &l)?;
    let mut rhs = Lin::new(cfg);
    rhs.add(&c.q(binom(3 * m + r + 2, r), 3), &c.z(&[3 * m + r + 3])?);
    // C(2m + k2 + 1, k2) ζ(2m + k2 + 2) is the pair term with b = 2m + 1
    rhs.add(&c.q(-1, 2), &pair_sum(&c, r, m, 2 * m + 1, 1, 1)?);
    if r >= 3 {
        let mut triple = Lin::new(cfg);
        for ks in compositions(r - 3, 3) {
            let ks: Vec<u32> = ks.iter().map(|x| x + 1).collect();
            let mut t = c.exact(cfg.one());
            for &kk in &ks {
                t = &t * &c.z(&[m + kk + 1])?;
            }
            let b: i64 = ks.iter().map(|&kk| binom(m + kk, kk)).product();
            triple.add_int(b, &t);
        }
        rhs.add(&c.q(1, 6), &triple.finish());
    }
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn ec5(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (m, b) = (p.uint("m"), p.uint("b"));
    let k = cat(&[&ones(m as usize), &[2], &ones(b as usize)]);
    let lhs = c.ky(&k, &ones(m as usize + 1))?;
    let mut rhs = Lin::new(cfg);
    for j in 0..m {
        let t = &c.z(&[j + b + 2])? * &c.z(&[2 * m + 1 - j])?;
        rhs.add_int(sign(j) * binom(j + b + 1, j) * binom(2 * m - j, m), &t);
    }
    // C(m + k, m) = C(m + k, k)
    rhs.add(&c.q(-sign(m), 2), &pair_sum(&c, b + 1, m, m, 1, 1)?);
    rhs.add(&c.q(sign(m) * binom(2 * m + b + 2, b + 1), 2), &c.z(&[2 * m + b + 3])?);
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn con_rc4(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (r, m, pp) = (p.uint("r"), p.uint("m"), p.uint("p"));
    let block = cat(&[&ones(m as usize - 1), &[2]]);
    let mut l = vec![1];
    for _ in 1..pp {
        l.extend_from_slice(&block);
    }
    l.extend(ones(m as usize));
    let lhs = c.ky(&ones(r as usize), &l)?;
    let rhs = bell_side(&c, m, pp, r, 1)?.scale_int(sign(pp + 1));
    Ok(Sides { lhs, rhs })
}

fn grid_e3_e5() -> Vec<Params> {
    let mut g = Vec::new();
    for form in 0..=1 {
        for m in 1..=2 {
            for p in 1..=3 {
                for k in 1..=3 {
                    g.push(params([("form", int(form)), ("k", int(k)), ("m", int(m)), ("p", int(p))]));
                }
            }
        }
    }
    g
}

fn grid_e6() -> Vec<Params> {
    let mut g = Vec::new();
    for a in [ratio(0, 1), ratio(1, 2)] {
        for m in 1..=2 {
            for p in 2..=3 {
                g.push(params([("a", a.clone()), ("m", int(m)), ("p", int(p))]));
            }
        }
    }
    g
}

fn grid_rm() -> Vec<Params> {
    let mut g = Vec::new();
    for m in 1..=2 {
        for r in 1..=3 {
            g.push(params([("m", int(m)), ("r", int(r))]));
        }
    }
    g
}

fn grid_ec5() -> Vec<Params> {
    let mut g = Vec::new();
    for m in 1..=2 {
        for b in 0..=2 {
            g.push(params([("b", int(b)), ("m", int(m))]));
        }
    }
    g
}

fn grid_rc4() -> Vec<Params> {
    let mut g = Vec::new();
    for p in 1..=3 {
        for m in 1..=2 {
            for r in 1..=3 {
                g.push(params([("m", int(m)), ("p", int(p)), ("r", int(r))]));
            }
        }
    }
    g
}

const R: ParamSpec = ParamSpec::int("r", 1, 5);
const MM: ParamSpec = ParamSpec::int("m", 1, 3);

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "E3-E5",
            anchor: "sum_{i_1+...+i_p=k} prod C(m+i_j,i_j) zeta(m+i_p+1,...,m+i_1+1) = sum_c prod_j (-1)^{(j-1)c_j}/(c_j! j^{c_j}) sum_{k_s} prod C(im+i-1+k_s,k_s) zeta(im+i+k_s); form=1 uses the expanded p=1,2,3 cases",
            status: Status::Theorem,
            params: vec![
                ParamSpec::int("form", 0, 1),
                ParamSpec::int("k", 0, 5),
                ParamSpec::int("m", 1, 3),
                ParamSpec::int("p", 1, 3),
            ],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: grid_e3_e5,
            sides: e3_e5,
        },
        Identity {
            id: "E6-REC",
            anchor: "zeta_HZ({m+1}_p; a+1) = (-1)^{p-1}/p sum_{i<p} (-1)^i zeta_HZ((p-i)(m+1); a+1) zeta_HZ({m+1}_i; a+1)",
            status: Status::Cited,
            params: vec![ParamSpec::ratio("a", 0.0, 4.0, true), MM, ParamSpec::int("p", 1, 4)],
            default_tolerance: 1e-8,
            series_terms: Some(100_000),
            grid: grid_e6,
            sides: e6_rec,
        },
        Identity {
            id: "RC2",
            anchor: "zeta({1}_r (*) ({1}_m,2,{1}_m)*) = C(2m+r+1,r)/2 zeta(2m+r+2) - 1/2 sum_{k1+k2=r, k>=1} C(m+k1,k1) C(m+k2,k2) zeta(m+k1+1) zeta(m+k2+1)",
            status: Status::Theorem,
            params: vec![MM, R],
            default_tolerance: 1e-8,
            series_terms: Some(100_000),
            grid: grid_rm,
            sides: rc2,
        },
        Identity {
            id: "RC3",
            anchor: "zeta({1}_r (*) ({1}_m,2,{1}_{m-1},2,{1}_m)*) = C(3m+r+2,r)/3 zeta(3m+r+3) - 1/2 sum C(m+k1,k1) C(2m+k2+1,k2) zeta(m+k1+1) zeta(2m+k2+2) + 1/6 sum prod C(m+k_i,k_i) zeta(m+k_i+1)",
            status: Status::Theorem,
            params: vec![MM, R],
            default_tolerance: 1e-8,
            series_terms: Some(100_000),
            grid: grid_rm,
            sides: rc3,
        },
        Identity {
            id: "EC5",
            anchor: "zeta(({1}_m,2,{1}_b) (*) ({1}_{m+1})*) = sum_{j<m} (-1)^j C(j+b+1,j) C(2m-j,m) zeta(j+b+2) zeta(2m+1-j) - (-1)^m/2 sum_{k1+k2=b+1, k>=1} C(m+k1,m) C(m+k2,m) zeta(m+k1+1) zeta(m+k2+1) + (-1)^m/2 C(2m+b+2,b+1) zeta(2m+b+3)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("b", 0, 4), MM],
            default_tolerance: 1e-8,
            series_terms: Some(100_000),
            grid: grid_ec5,
            sides: ec5,
        },
        Identity {
            id: "CON-RC4",
            anchor: "zeta({1}_r (*) (1,{{1}_{m-1},2}_{p-1},{1}_m)*) = (-1)^{p+1} sum_c prod_j (-1)^{(j-1)c_j}/(c_j! j^{c_j}) sum_{k_s>=1, sum=r} prod C(im+i-1+k_s,k_s) zeta(im+i+k_s)",
            status: Status::Conjecture,
            params: vec![MM, ParamSpec::int("p", 1, 4), R],
            default_tolerance: 1e-8,
            series_terms: Some(100_000),
            grid: grid_rc4,
            sides: con_rc4,
        },
    ]
}
