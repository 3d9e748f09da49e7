use crate::error::{domain, Divergence, Result};
use crate::index_algebra::{admissible, star_expand_signed, Index, SignedIndex};
use crate::precision::{BoundKind, HpReal, PrecisionConfig, ValueWithError};

use super::accel::{euler_transform, extrapolate, node_schedule, partial_sums_at, tail_integral};
use super::harmonic::{HarmonicStream, StreamKind};

fn signed_parts(k: &Index) -> Vec<i32> {
    k.parts().iter().map(|&p| p as i32).collect()
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Partial sum of an infinite series plus its extrapolated limit.
pub(crate) struct Accelerated {
    pub value: HpReal,
    pub estimate: HpReal,
    pub raw: HpReal,
    pub terms: u64,
}

/// Sums `term` up to `cfg.max_terms` (rounded to an even cutoff) and
/// extrapolates in `N^{-(alpha0 + i)} log^p N`, `p <= log_degree`.
pub(crate) fn accelerate(
    cfg: &PrecisionConfig,
    alpha0: f64,
    log_degree: usize,
    term: impl FnMut(u64) -> HpReal,
) -> Accelerated {
    let nodes = node_schedule(cfg.max_terms);
    let partials = partial_sums_at(&nodes, cfg.zero(), term);
    let e = extrapolate(&partials, alpha0, log_degree);
    let (terms, raw) = partials.last().cloned().expect("nonempty schedule");
    Accelerated { value: e.value, estimate: e.estimate + cfg.epsilon(), raw, terms }
}

/// `ζ(k)` as a raw partial sum with the rigorous integral tail bound.
pub fn mzv_direct(k: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if k.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    if !admissible(k) {
        return Err(Divergence::NotAdmissible(k.to_string()).into());
    }
    let n_max = cfg.max_terms;
    let k1 = k.first().expect("nonempty") as i32;
    let mut inner = HarmonicStream::new(&signed_parts(&k.tail()), StreamKind::Strict, &cfg.one());
    let mut s = cfg.zero();
    for n in 1..=n_max {
        let nn = cfg.int(n as i64);
        s += inner.value() / nn.powi(k1);
        inner.advance();
    }
    let a = (k.depth() - 1) as u32;
    let bound = tail_integral(n_max, &cfg.int(k1 as i64), a) / factorial(a);
    Ok(ValueWithError::new(s, bound, BoundKind::Rigorous, n_max))
}

/// Accelerated alternating MZV. An alternating outer sum over unbarred
/// inner slots uses iterated averaging; everything else is extrapolated
/// from even cutoffs.
pub fn amzv(s: &SignedIndex, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if s.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    if !s.convergent() {
        return Err(Divergence::SignedCondition(s.to_string()).into());
    }
    let parts = s.parts();
    let k1 = parts[0];
    let inner_parts = &parts[1..];
    let mag = k1.unsigned_abs() as i32;
    let term = |n: u64, inner: &HpReal| -> HpReal {
        let t = inner / cfg.int(n as i64).powi(mag);
        if k1 < 0 && n % 2 == 1 {
            -t
        } else {
            t
        }
    };
    let mut inner = HarmonicStream::new(inner_parts, StreamKind::Strict, &cfg.one());
    if k1 < 0 && inner_parts.iter().all(|&p| p > 0) {
        let count = 4 * cfg.digits as u64;
        let passes = (1.7 * cfg.digits as f64).ceil() as usize;
        let mut acc = cfg.zero();
        let mut partials = Vec::with_capacity(count as usize);
        for n in 1..=count {
            acc += term(n, inner.value());
            inner.advance();
            partials.push(acc.clone());
        }
        let (value, estimate) = euler_transform(&partials, passes);
        return Ok(ValueWithError::new(value, estimate + cfg.epsilon(), BoundKind::Heuristic, count));
    }
    let alpha0 = if k1 < 0 { mag as f64 } else { (mag - 1) as f64 };
    let log_degree = inner_parts.iter().filter(|p| p.abs() == 1).count() + 1;
    let acc = accelerate(cfg, alpha0, log_degree, |n| {
        let t = term(n, inner.value());
        inner.advance();
        t
    });
    Ok(ValueWithError::new(acc.value, acc.estimate, BoundKind::Heuristic, acc.terms))
}

/// Alternating star value via signed star expansion.
pub fn amzsv(s: &SignedIndex, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if s.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    let mut total = ValueWithError::exact(cfg.zero());
    for (t, c) in star_expand_signed(s).iter() {
        let v = amzv(t, cfg)?;
        total = &total + &v.scale(&cfg.rational(c));
    }
    Ok(total)
}

/// `Li_k(x)` for `|x| < 1` by its power series with a geometric tail bound.
/// The endpoints `x = ±1` are delegated to `at_one` / [`amzv`].
pub fn mpl(
    k: &Index,
    x: &HpReal,
    cfg: &PrecisionConfig,
    at_one: impl FnOnce(&Index) -> Result<ValueWithError>,
) -> Result<ValueWithError> {
    if k.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    let ax = x.abs();
    if ax > 1 {
        return Err(domain(format!("|x| = {} exceeds 1", ax.to_decimal(10))));
    }
    if ax == 1 {
        let k1 = k.first().expect("nonempty");
        if !x.is_sign_negative() {
            if k1 == 1 {
                return Err(Divergence::LeadingOneAtUnity.into());
            }
            return at_one(k);
        }
        let mut parts = signed_parts(k);
        parts[0] = -parts[0];
        return amzv(&SignedIndex::new(parts)?, cfg);
    }
    if x.is_zero() {
        return Ok(ValueWithError::exact(cfg.zero()));
    }
    let k1 = k.first().expect("nonempty") as i32;
    let r = k.depth() as f64;
    let axf = ax.to_f64();
    let ln_ax = ax.ln().to_f64();
    let target = -(cfg.digits as f64 + 2.0) * std::f64::consts::LN_10;
    // ζ_{n-1}(k') <= n^{r-1}, so the tail after N is at most
    // (N+1)^{r-1} |x|^{N+1} / (1 - q) with q the term ratio bound.
    let log_tail = |n: u64| -> Option<f64> {
        let n1 = (n + 1) as f64;
        let q = ((n1 + 1.0) / n1).powf(r - 1.0) * axf;
        (q < 1.0).then(|| (r - 1.0) * n1.ln() + n1 * ln_ax - (1.0 - q).ln())
    };
    let mut inner = HarmonicStream::new(&signed_parts(&k.tail()), StreamKind::Strict, &cfg.one());
    let mut s = cfg.zero();
    let mut xp = cfg.one();
    let mut n = 0u64;
    loop {
        n += 1;
        xp = &xp * x;
        s += &xp * inner.value() / cfg.int(n as i64).powi(k1);
        inner.advance();
        let lt = log_tail(n);
        if lt.is_some_and(|v| v < target) || n >= cfg.max_terms {
            let bound = match lt {
                Some(v) => HpReal::from_f64(v, cfg.bits()).exp() * cfg.ratio(101, 100),
                None => HpReal::from_f64(f64::INFINITY, cfg.bits()),
            };
            return Ok(ValueWithError::new(s, bound, BoundKind::Rigorous, n));
        }
    }
}

/// Kaneko-Yamamoto value `ζ(k ⊛ l★)` from its defining series
/// `Σ_n ζ_{n-1}(k_2, ...) ζ*_n(l_2, ...) / n^{k_1 + l_1}`, extrapolated.
pub fn kyzv(k: &Index, l: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let (Some(k1), Some(l1)) = (k.first(), l.first()) else {
        return Err(domain("Kaneko-Yamamoto values need nonempty k and l"));
    };
    let s = (k1 + l1) as i32;
    let kt = k.tail();
    let lt = l.tail();
    let mut strict = HarmonicStream::new(&signed_parts(&kt), StreamKind::Strict, &cfg.one());
    let mut star = HarmonicStream::new(&signed_parts(&lt), StreamKind::Star, &cfg.one());
    let log_degree = kt.count_ones() + lt.count_ones();
    let acc = accelerate(cfg, (s - 1) as f64, log_degree, |n| {
        star.advance();
        let t = strict.value() * star.value() / cfg.int(n as i64).powi(s);
        strict.advance();
        t
    });
    Ok(ValueWithError::new(acc.value, acc.estimate, BoundKind::Heuristic, acc.terms))
}

/// `Σ_n ζ_{n-1}(strict) ζ*_n(star; x) / n^s`, where the star sum carries
/// `x^{n_last}` on its innermost variable. `x = 1` gives the plain star sum.
pub fn ky_param_series(
    s: u32,
    strict: &Index,
    star: &Index,
    x: &HpReal,
    cfg: &PrecisionConfig,
) -> Result<ValueWithError> {
    if s < 2 {
        return Err(domain("the outer exponent must be at least 2"));
    }
    if x.abs() > 1 {
        return Err(domain(format!("|x| = {} exceeds 1", x.abs().to_decimal(10))));
    }
    let kind = if *x == 1 { StreamKind::Star } else { StreamKind::StarParam(x.clone()) };
    let mut strict_s = HarmonicStream::new(&signed_parts(strict), StreamKind::Strict, &cfg.one());
    let mut star_s = HarmonicStream::new(&signed_parts(star), kind, &cfg.one());
    let log_degree = strict.count_ones() + star.count_ones();
    let acc = accelerate(cfg, (s - 1) as f64, log_degree, |n| {
        star_s.advance();
        let t = strict_s.value() * star_s.value() / cfg.int(n as i64).powi(s as i32);
        strict_s.advance();
        t
    });
    Ok(ValueWithError::new(acc.value, acc.estimate, BoundKind::Heuristic, acc.terms))
}
