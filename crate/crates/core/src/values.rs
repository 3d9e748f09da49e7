//! Backend dispatch for the named values.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::Result;
use crate::index_algebra::{ky_expand, star_expand, FormalIndexSum, Index, SignedIndex};
use crate::precision::{Backend, HpReal, PrecisionConfig, ValueWithError};
use crate::{series, word};

type Memo = RwLock<HashMap<String, ValueWithError>>;

/// Series results keyed by request and configuration. The stored value is
/// exactly what a fresh evaluation returns, so hits never change output.
fn memoized(
    key: String,
    cfg: &PrecisionConfig,
    eval: impl FnOnce() -> Result<ValueWithError>,
) -> Result<ValueWithError> {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    let key = format!("{key}@{}:{}", cfg.digits, cfg.max_terms);
    if let Some(v) = memo.read().expect("memo lock").get(&key) {
        return Ok(v.clone());
    }
    let v = eval()?;
    memo.write().expect("memo lock").entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

/// `ζ(k)`: the Hölder backend unless `direct` is requested.
pub fn zeta(k: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    match cfg.backend {
        Backend::Auto | Backend::Holder => word::mzv_holder(k, cfg),
        Backend::Direct => series::mzv_direct(k, cfg),
    }
}

/// Evaluates a rational combination of MZVs.
pub fn zeta_combination(sum: &FormalIndexSum, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let mut total = ValueWithError::exact(cfg.zero());
    for (k, c) in sum.iter() {
        total = &total + &zeta(k, cfg)?.scale(&cfg.rational(c));
    }
    Ok(total)
}

/// `ζ*(k)` through the star expansion.
pub fn zeta_star(k: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if k.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    zeta_combination(&star_expand(k), cfg)
}

/// Alternating MZV; unbarred indices go to [`zeta`].
pub fn azeta(s: &SignedIndex, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if !s.has_bars() {
        if !s.convergent() {
            return Err(crate::Divergence::SignedCondition(s.to_string()).into());
        }
        return zeta(&s.magnitudes(), cfg);
    }
    memoized(format!("amzv({s})"), cfg, || series::amzv(s, cfg))
}

/// Alternating star value.
pub fn azeta_star(s: &SignedIndex, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if !s.has_bars() {
        if !s.convergent() {
            return Err(crate::Divergence::SignedCondition(s.to_string()).into());
        }
        return zeta_star(&s.magnitudes(), cfg);
    }
    series::amzsv(s, cfg)
}

/// `Li_k(x)`, with `x = 1` routed to [`zeta`].
pub fn li(k: &Index, x: &HpReal, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    series::mpl(k, x, cfg, |k| zeta(k, cfg))
}

/// `ζ(k ⊛ l★)`: exact reduction to MZVs, or the defining series when
/// `direct` is requested.
pub fn ky(k: &Index, l: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    match cfg.backend {
        Backend::Auto | Backend::Holder => zeta_combination(&ky_expand(k, l)?, cfg),
        Backend::Direct => ky_series(k, l, cfg),
    }
}

/// `ζ(k ⊛ l★)` from its defining series, whatever the backend.
pub fn ky_series(k: &Index, l: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    memoized(format!("ky({k}|{l})"), cfg, || series::kyzv(k, l, cfg))
}

/// `ζ*_B(k)`.
pub fn zeta_binomial_star(k: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    memoized(format!("zb({k})"), cfg, || series::mzbsv(k, cfg))
}

/// `Σ_n ζ*_n(m) H_n C(2n, n) / (n^{r+1} 4^n)`.
pub fn zeta_binomial_star_h(m: &Index, r: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    memoized(format!("zbh({m};{r})"), cfg, || series::mzbsv_hweighted(m, r, cfg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn backends_agree_on_zeta2() {
        let cfg = PrecisionConfig::default().with_max_terms(10_000);
        let h = zeta(&Index::from([2]), &cfg).unwrap();
        let d = zeta(&Index::from([2]), &cfg.clone().with_backend(Backend::Direct)).unwrap();
        assert!((&h.value - &d.value).abs() <= &h.bound + &d.bound);
    }

    #[test]
    fn li_at_one_is_zeta() {
        let cfg = PrecisionConfig::default();
        let v = li(&Index::from([2]), &cfg.one(), &cfg).unwrap();
        let z = zeta(&Index::from([2]), &cfg).unwrap();
        assert_eq!(v.value, z.value);
    }

    #[test]
    fn ky_routes_agree() {
        let cfg = PrecisionConfig::default().with_max_terms(50_000);
        let k = Index::from([1, 1]);
        let l = Index::from([1, 2]);
        let a = ky(&k, &l, &cfg).unwrap();
        let b = ky(&k, &l, &cfg.clone().with_backend(Backend::Direct)).unwrap();
        let d = (&a.value - &b.value).abs().to_f64();
        assert!(d < 1e-10, "{d}");
    }
}
