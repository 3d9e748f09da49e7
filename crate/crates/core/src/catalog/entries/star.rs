//! Closed forms for star sums plus the two structural checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::super::ctx::{cat, ones, Ctx, Lin};
use super::super::params::{int, list, params, Params, ParamsExt};
use super::super::{Identity, ParamSpec, Sides, Status};
use crate::error::{Error, Result};
use crate::index_algebra::{admissible, compositions, stuffle};
use crate::precision::PrecisionConfig;
use crate::values;
use crate::word::{index_to_word, tau, word_to_index};

/// Seed for the fixed stuffle sample.
const STUFFLE_SEED: u64 = 0x5eed_0001;
const STUFFLE_PAIRS: usize = 50;

fn star_2_ones(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = p.uint("m");
    let lhs = c.zs(&cat(&[&[2], &ones(m as usize)]))?;
    let rhs = c.z(&[m + 2])?.scale_int(m as i64 + 1);
    Ok(Sides { lhs, rhs })
}

fn star_22_ones(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let m = p.uint("m");
    let lhs = c.zs(&cat(&[&[2, 2], &ones(m as usize)]))?;
    let mut rhs = Lin::new(cfg);
    rhs.add_int(2, &c.z(&[3, m + 1])?);
    rhs.add_int(2, &c.z(&[m + 4])?);
    rhs.add_int(-(m as i64 + 1), &c.z(&[m + 2, 2])?);
    Ok(Sides { lhs, rhs: rhs.finish() })
}

fn cited_21_1(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (m, n) = (p.uint("m"), p.uint("n"));
    if (m + 1) * n > 8 {
        return Err(Error::ParamRange { name: "n".into(), detail: "(m + 1) n must not exceed 8".into() });
    }
    let block = cat(&[&[2], &ones(m as usize - 1)]);
    let idx: Vec<u32> = std::iter::repeat_n(block, n as usize).flatten().chain([1]).collect();
    let lhs = c.zs(&idx)?;
    let rhs = c.z(&[(m + 1) * n + 1])?.scale_int(m as i64 + 1);
    Ok(Sides { lhs, rhs })
}

fn cited_oz(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let c = Ctx::new(cfg);
    let (m1, m2) = (p.uint("m1"), p.uint("m2"));
    let idx = cat(&[&vec![2; m1 as usize], &[1], &vec![2; m2 as usize], &[1]]);
    let lhs = c.zs(&idx)?;
    let a = c.zs(&[2 * m1 + 1, 2 * m2 + 1])?.scale_int(4);
    let b = c.z(&[2 * m1 + 2 * m2 + 2])?.scale_int(2);
    Ok(Sides { lhs, rhs: &a - &b })
}

fn duality(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let k = p.index("k");
    let dual = word_to_index(&tau(&index_to_word(&k)?))?;
    Ok(Sides { lhs: values::zeta(&k, cfg)?, rhs: values::zeta(&dual, cfg)? })
}

fn stuffle_check(p: &Params, cfg: &PrecisionConfig) -> Result<Sides> {
    let (a, b) = (p.index("a"), p.index("b"));
    for (name, k) in [("a", &a), ("b", &b)] {
        if !admissible(k) {
            return Err(Error::ParamRange { name: name.into(), detail: "must be admissible".into() });
        }
    }
    let lhs = &values::zeta(&a, cfg)? * &values::zeta(&b, cfg)?;
    let rhs = values::zeta_combination(&stuffle(&a, &b), cfg)?;
    Ok(Sides { lhs, rhs })
}

fn to_i64(v: &[u32]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// All admissible indices of weight `2..=max_weight`.
fn admissible_up_to(max_weight: u32) -> Vec<Vec<u32>> {
    (2..=max_weight)
        .flat_map(|w| crate::index_algebra::indices_of_weight(w).into_iter())
        .filter(|k| k[0] >= 2)
        .collect()
}

fn random_admissible(rng: &mut ChaCha8Rng) -> Vec<u32> {
    let w = rng.gen_range(2..=5u32);
    let depth = rng.gen_range(1..=(w - 1) as usize);
    let choices: Vec<Vec<u32>> = compositions(w - depth as u32 - 1, depth).collect();
    let mut k: Vec<u32> = choices[rng.gen_range(0..choices.len())].iter().map(|x| x + 1).collect();
    k[0] += 1;
    k
}

fn grid_stuffle() -> Vec<Params> {
    let mut rng = ChaCha8Rng::seed_from_u64(STUFFLE_SEED);
    (0..STUFFLE_PAIRS)
        .map(|_| {
            let a = random_admissible(&mut rng);
            let b = random_admissible(&mut rng);
            params([("a", list(&to_i64(&a))), ("b", list(&to_i64(&b)))])
        })
        .collect()
}

pub(super) fn entries() -> Vec<Identity> {
    vec![
        Identity {
            id: "STAR-2-ONES",
            anchor: "zeta*(2,{1}_m) = (m+1) zeta(m+2)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("m", 0, 12)],
            default_tolerance: 1e-25,
            series_terms: None,
            grid: || (0..=5).map(|m| params([("m", int(m))])).collect(),
            sides: star_2_ones,
        },
        Identity {
            id: "STAR-22-ONES",
            anchor: "zeta*(2,2,{1}_m) = 2 zeta(3,m+1) + 2 zeta(m+4) - (m+1) zeta(m+2,2)",
            status: Status::Theorem,
            params: vec![ParamSpec::int("m", 0, 10)],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: || (0..=3).map(|m| params([("m", int(m))])).collect(),
            sides: star_22_ones,
        },
        Identity {
            id: "CITED-21-1",
            anchor: "zeta*({2,{1}_{m-1}}_n, 1) = (m+1) zeta((m+1)n+1)",
            status: Status::Cited,
            params: vec![ParamSpec::int("m", 1, 7), ParamSpec::int("n", 1, 4)],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: || {
                let mut g = Vec::new();
                for m in 1..=7 {
                    for n in 1..=4 {
                        if (m + 1) * n <= 8 {
                            g.push(params([("m", int(m)), ("n", int(n))]));
                        }
                    }
                }
                g
            },
            sides: cited_21_1,
        },
        Identity {
            id: "CITED-OZ",
            anchor: "zeta*({2}_{m1},1,{2}_{m2},1) = 4 zeta*(2m1+1,2m2+1) - 2 zeta(2m1+2m2+2)",
            status: Status::Cited,
            params: vec![ParamSpec::int("m1", 1, 3), ParamSpec::int("m2", 1, 3)],
            default_tolerance: 1e-20,
            series_terms: None,
            grid: || {
                let mut g = Vec::new();
                for m1 in 1..=2 {
                    for m2 in 1..=2 {
                        g.push(params([("m1", int(m1)), ("m2", int(m2))]));
                    }
                }
                g
            },
            sides: cited_oz,
        },
        Identity {
            id: "DUALITY",
            anchor: "zeta(k) = zeta(k^dual), the dual read off the reversed and complemented word",
            status: Status::Theorem,
            params: vec![ParamSpec::list("k", 1, 10, 1, 12)],
            default_tolerance: 1e-25,
            series_terms: None,
            grid: || admissible_up_to(8).iter().map(|k| params([("k", list(&to_i64(k)))])).collect(),
            sides: duality,
        },
        Identity {
            id: "STUFFLE",
            anchor: "zeta(a) zeta(b) = sum over the quasi-shuffle a * b",
            status: Status::Theorem,
            params: vec![ParamSpec::list("a", 1, 8, 1, 12), ParamSpec::list("b", 1, 8, 1, 12)],
            default_tolerance: 1e-25,
            series_terms: None,
            grid: grid_stuffle,
            sides: stuffle_check,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_grids_have_expected_sizes() {
        assert_eq!(admissible_up_to(8).len(), 127);
        let g = grid_stuffle();
        assert_eq!(g.len(), STUFFLE_PAIRS);
        for p in &g {
            for name in ["a", "b"] {
                let k = p.index(name);
                assert!(admissible(&k) && k.weight() <= 5, "{k}");
            }
        }
    }
}
