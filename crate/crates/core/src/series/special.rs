use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{domain, Divergence, Result};
use crate::index_algebra::{admissible, c_partitions, compositions, rev_slice_plus, Index, Rational};
use crate::precision::{BoundKind, HpReal, PrecisionConfig, ValueWithError};

use super::accel::{tail_integral, CentralBinomial};
use super::harmonic::{HarmonicStream, Scalar, StreamKind};
use super::zeta::accelerate;

fn signed_parts(k: &Index) -> Vec<i32> {
    k.parts().iter().map(|&p| p as i32).collect()
}

/// `Π_{l_i >= 2} l_i / (l_i - 1)`, the constant in `ζ*_n(l) <= C (1 + ln n)^{#ones}`.
fn star_constant(l: &Index, cfg: &PrecisionConfig) -> HpReal {
    l.parts().iter().filter(|&&p| p >= 2).fold(cfg.one(), |acc, &p| acc * cfg.ratio(p as i64, p as i64 - 1))
}

/// `Σ_n ζ*_n(k_2, ...) C(2n, n) / (n^{k_1} 4^n)`.
///
/// The value is extrapolated; the bound adds the proved tail majorant
/// (`C(2n, n)/4^n <= 1/√(πn)`) to the distance from the raw partial sum.
pub fn mzbsv(k: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    let Some(k1) = k.first() else {
        return Err(domain("ζ*_B needs a nonempty index"));
    };
    let inner = k.tail();
    binomial_weighted(k1, &inner, false, cfg)
}

/// `Σ_n ζ*_n(m) H_n C(2n, n) / (n^{r+1} 4^n)`; `m` may be empty.
pub fn mzbsv_hweighted(m: &Index, r: u32, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    binomial_weighted(r + 1, m, true, cfg)
}

fn binomial_weighted(
    k1: u32,
    star_index: &Index,
    with_harmonic: bool,
    cfg: &PrecisionConfig,
) -> Result<ValueWithError> {
    let mut star = HarmonicStream::new(&signed_parts(star_index), StreamKind::Star, &cfg.one());
    let mut harmonic = HarmonicStream::new(&[1], StreamKind::Strict, &cfg.one());
    let mut b = CentralBinomial::new(cfg.bits());
    let ones = star_index.count_ones() + usize::from(with_harmonic);
    let acc = accelerate(cfg, k1 as f64 - 0.5, ones, |n| {
        star.advance();
        harmonic.advance();
        let mut t = b.advance() * star.value() / cfg.int(n as i64).powi(k1 as i32);
        if with_harmonic {
            t *= harmonic.value();
        }
        t
    });
    let s = cfg.int(k1 as i64) + cfg.ratio(1, 2);
    let tail = tail_integral(acc.terms, &s, ones as u32) * star_constant(star_index, cfg)
        / HpReal::pi(cfg.bits()).sqrt();
    let bound = tail + (&acc.value - &acc.raw).abs();
    Ok(ValueWithError::new(acc.value, bound, BoundKind::Rigorous, acc.terms))
}

/// Bernoulli numbers `B_0, ..., B_n` (with `B_1 = -1/2`).
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::zero(); n + 1];
    b[0] = Rational::one();
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate().take(m) {
            let c: BigInt = binomial(BigInt::from(m + 1), BigInt::from(j));
            acc += Rational::from_integer(c) * bj;
        }
        b[m] = -acc / Rational::from_integer(BigInt::from(m + 1));
    }
    b
}

/// Single Hurwitz zeta `Σ_{n>=1} (n + a)^{-s}` by Euler-Maclaurin with the
/// remainder bounded by the first omitted correction term.
fn hurwitz_single(s: u32, a: &HpReal, cfg: &PrecisionConfig) -> ValueWithError {
    let q = a + 1i64;
    let n_head = (cfg.digits as u64 + 10).max(20);
    let mut sum = cfg.zero();
    for n in 0..n_head {
        sum += (&q + n as i64).powi(-(s as i32));
    }
    let big = &q + n_head as i64;
    let sf = cfg.int(s as i64);
    sum += big.powi(1 - s as i32) / cfg.int(s as i64 - 1);
    sum += big.powi(-(s as i32)) / 2;
    let max_j = 2 * cfg.digits as usize + 10;
    let bern = bernoulli_numbers(2 * max_j + 2);
    let eps = cfg.epsilon() / 1000;
    // rising factorial (s)_{2j-1} / (2j)!
    let mut rising = sf.clone();
    let mut fact = cfg.int(2);
    let mut bound = HpReal::from_f64(f64::INFINITY, cfg.bits());
    for j in 1..=max_j {
        let term = cfg.rational(&bern[2 * j]) / &fact * &rising * big.powi(-(s as i32) - 2 * j as i32 + 1);
        if term.abs() < eps {
            bound = term.abs();
            break;
        }
        sum += term;
        let two_j = 2 * j as i64;
        rising = rising * (&sf + (two_j - 1)) * (&sf + two_j);
        fact *= (two_j + 1) * (two_j + 2);
    }
    ValueWithError::new(sum, bound, BoundKind::Rigorous, n_head)
}

/// `ζ_HZ(m; a + 1) = Σ_{n_1 > ... > n_p > 0} Π (n_j + a)^{-m_j}`.
pub fn hurwitz_mzv(m: &Index, a: &HpReal, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if m.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    if !admissible(m) {
        return Err(Divergence::NotAdmissible(m.to_string()).into());
    }
    if *a <= -1 {
        return Err(domain(format!("shift a = {} must exceed -1", a.to_decimal(10))));
    }
    let m1 = m.first().expect("nonempty");
    if m.depth() == 1 {
        return Ok(hurwitz_single(m1, a, cfg));
    }
    let inner = m.tail();
    let mut stream =
        HarmonicStream::new(&signed_parts(&inner), StreamKind::Strict, &cfg.one()).with_shift(a.clone());
    let acc = accelerate(cfg, (m1 - 1) as f64, inner.count_ones(), |n| {
        let t = stream.value() * (a + n as i64).powi(-(m1 as i32));
        stream.advance();
        t
    });
    Ok(ValueWithError::new(acc.value, acc.estimate, BoundKind::Heuristic, acc.terms))
}

/// Complete Bell polynomial `Y_p(x_1, ..., x_p)` by the binomial recurrence.
pub fn bell_complete_recurrence<S: Scalar>(xs: &[S], one: &S) -> S {
    let p = xs.len();
    let mut y: Vec<S> = vec![one.one_like()];
    for n in 1..=p {
        let mut acc = one.zero_like();
        for j in 0..n {
            let c = Rational::from_integer(binomial(BigInt::from(n - 1), BigInt::from(j)));
            let t = one.rational_like(&c).mul_ref(&xs[n - j - 1]).mul_ref(&y[j]);
            acc.add_ref(&t);
        }
        y.push(acc);
    }
    y.pop().expect("nonempty")
}

/// Complete Bell polynomial by the explicit sum over `c_1 + 2c_2 + ... = p`.
pub fn bell_complete_explicit<S: Scalar>(xs: &[S], one: &S) -> S {
    let p = xs.len();
    let fact = |n: usize| -> BigInt { (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i)) };
    let mut total = one.zero_like();
    for c in c_partitions(p as u32) {
        let mut denom = BigInt::one();
        for (j, &cj) in c.iter().enumerate() {
            denom *= fact(cj as usize) * num_traits::pow(fact(j + 1), cj as usize);
        }
        let coeff = Rational::new(fact(p), denom);
        let mut term = one.rational_like(&coeff);
        for (j, &cj) in c.iter().enumerate() {
            for _ in 0..cj {
                term = term.mul_ref(&xs[j]);
            }
        }
        total.add_ref(&term);
    }
    total
}

fn check_t(t: &HpReal, allow_one: bool) -> Result<()> {
    let ok = *t >= 0 && (*t < 1 || (allow_one && *t == 1));
    if ok {
        Ok(())
    } else {
        Err(domain(format!("t = {} outside the allowed range", t.to_decimal(10))))
    }
}

/// `Σ_{n>=1} C(2n, n) t^n / (4^n n) = 2 log(2 / (1 + √(1 - t)))`.
pub fn gf_binomial(t: &HpReal) -> Result<HpReal> {
    check_t(t, true)?;
    let root = (HpReal::one(t.prec()) - t).sqrt();
    Ok((HpReal::from_i64(2, t.prec()) / (root + 1i64)).ln() * 2i64)
}

/// `Σ_{n>=1} H_n C(2n, n) t^n / 4^n = (2/√(1-t)) log((1 + √(1-t)) / (2√(1-t)))`.
pub fn gf_binomial_h(t: &HpReal) -> Result<HpReal> {
    check_t(t, false)?;
    let root = (HpReal::one(t.prec()) - t).sqrt();
    let inner = (&root + 1i64) / (&root * 2i64);
    Ok(inner.ln() * 2i64 / root)
}

/// First `n` terms of the series in [`gf_binomial`].
pub fn gf_binomial_partial(t: &HpReal, n: u64) -> HpReal {
    let mut b = CentralBinomial::new(t.prec());
    let mut tp = HpReal::one(t.prec());
    let mut s = HpReal::zero(t.prec());
    for k in 1..=n {
        tp = &tp * t;
        s += b.advance() * &tp / k as i64;
    }
    s
}

/// First `n` terms of the series in [`gf_binomial_h`].
pub fn gf_binomial_h_partial(t: &HpReal, n: u64) -> HpReal {
    let mut b = CentralBinomial::new(t.prec());
    let mut tp = HpReal::one(t.prec());
    let mut h = HpReal::zero(t.prec());
    let mut s = HpReal::zero(t.prec());
    for k in 1..=n {
        tp = &tp * t;
        h += HpReal::one(t.prec()) / k as i64;
        s += b.advance() * &tp * &h;
    }
    s
}

/// `Σ_{i_1 + ... + i_p = k} Π C(m_j + i_j, i_j) ζ(m_p + i_p + 1, ..., m_1 + i_1 + 1)`
/// with each MZV supplied by `zeta`.
pub fn composition_mzv_sum(
    m: &[u32],
    k: u32,
    mut zeta: impl FnMut(&Index) -> Result<ValueWithError>,
    cfg: &PrecisionConfig,
) -> Result<ValueWithError> {
    let p = m.len();
    if p == 0 || m[0] == 0 || m[p - 1] == 0 {
        return Err(domain("composition sums need m_1 >= 1 and m_p >= 1"));
    }
    let mut total = ValueWithError::exact(cfg.zero());
    for i in compositions(k, p) {
        let coeff: BigInt =
            m.iter().zip(&i).map(|(&mj, &ij)| binomial(BigInt::from(mj + ij), BigInt::from(ij))).product();
        let delta: Vec<u32> = i.iter().map(|x| x + 1).collect();
        let idx = rev_slice_plus(m, 1, p, &delta)?;
        let z = zeta(&idx)?;
        total = &total + &z.scale(&cfg.rational(&Rational::from_integer(coeff)));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_numbers(8);
        assert_eq!(b[1], q(-1, 2));
        assert_eq!(b[2], q(1, 6));
        assert_eq!(b[4], q(-1, 30));
        assert_eq!(b[6], q(1, 42));
        assert_eq!(b[8], q(-1, 30));
    }

    #[test]
    fn bell_small_cases() {
        let one = Rational::one();
        assert_eq!(bell_complete_recurrence(&[], &one), one);
        let xs = [q(2, 1), q(3, 1), q(5, 1)];
        assert_eq!(bell_complete_recurrence(&xs[..2], &one), q(7, 1));
        assert_eq!(bell_complete_recurrence(&xs, &one), q(8 + 18 + 5, 1));
        assert_eq!(bell_complete_explicit(&xs, &one), q(31, 1));
    }

    #[test]
    fn hurwitz_single_shift() {
        let c = PrecisionConfig::default();
        // ζ_HZ(2; 3/2) = Σ (n + 1/2)^{-2} = π²/2 - 4
        let v = hurwitz_mzv(&Index::from([2]), &c.ratio(1, 2), &c).unwrap();
        let exact = HpReal::pi(c.bits()).powi(2) / 2 - 4i64;
        assert!((v.value - exact).abs().to_f64() < 1e-38);
        let v = hurwitz_mzv(&Index::from([3]), &c.zero(), &c).unwrap();
        assert!(v.value.to_decimal(30).starts_with("1.20205690315959428539973816151"));
    }

    #[test]
    fn generating_functions() {
        let c = PrecisionConfig::default();
        let one = c.one();
        let v = gf_binomial(&one).unwrap();
        assert!((v - HpReal::ln2(c.bits()) * 2i64).abs().to_f64() < 1e-40);
        assert!(gf_binomial(&c.zero()).unwrap().is_zero());
        let t = c.ratio(3, 4);
        let d = (gf_binomial(&t).unwrap() - gf_binomial_partial(&t, 10_000)).abs();
        assert!(d.to_f64() < 1e-12);
        let d = (gf_binomial_h(&t).unwrap() - gf_binomial_h_partial(&t, 10_000)).abs();
        assert!(d.to_f64() < 1e-12);
        assert!(gf_binomial_h(&one).is_err());
        assert!(gf_binomial(&c.int(2)).is_err());
    }

    #[test]
    fn central_binomial_star_one() {
        let c = PrecisionConfig::default().with_max_terms(100_000);
        let v = mzbsv(&Index::from([1]), &c).unwrap();
        let exact = HpReal::ln2(c.bits()) * 2i64;
        let err = (&v.value - &exact).abs();
        assert!(err.to_f64() < 1e-15, "{}", err.to_sci(3));
        assert!(err <= v.bound);
    }
}
