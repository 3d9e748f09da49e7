//! Iterated-integral words and the Hölder-convolution MZV backend.
//!
//! Letter `0` is `dt/t` and letter `1` is `dt/(1-t)`, listed from the
//! outermost integration variable inward, so `ζ(2)` is the word `01`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use crate::error::{domain, Divergence, Error, Result};
use crate::index_algebra::{admissible, Index};
use crate::precision::{BoundKind, HpReal, PrecisionConfig, ValueWithError};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&l| l > 1) {
            return Err(domain("word letters must be 0 or 1"));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Syntax { offset: i, message: format!("'{c}' is not a letter") }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word(letters))
    }
}

/// Each `k_j` contributes `k_j - 1` zeros followed by a one.
fn raw_word(k: &Index) -> Word {
    let mut letters = Vec::with_capacity(k.weight() as usize);
    for &p in k.parts() {
        letters.extend(std::iter::repeat_n(0, p as usize - 1));
        letters.push(1);
    }
    Word(letters)
}

pub fn index_to_word(k: &Index) -> Result<Word> {
    if !admissible(k) {
        return Err(domain(format!("index ({k}) is not admissible")));
    }
    Ok(raw_word(k))
}

pub fn word_to_index(w: &Word) -> Result<Index> {
    if w.is_empty() {
        return Ok(Index::empty());
    }
    if w.0[0] != 0 || *w.0.last().expect("nonempty") != 1 {
        return Err(domain(format!("word {w} must start with 0 and end with 1")));
    }
    let mut parts = Vec::new();
    let mut run = 0;
    for &l in &w.0 {
        run += 1;
        if l == 1 {
            parts.push(run);
            run = 0;
        }
    }
    Index::new(parts)
}

/// Reverse the word and swap `0 <-> 1`.
pub fn tau(w: &Word) -> Word {
    Word(w.0.iter().rev().map(|l| 1 - l).collect())
}

type MemoKey = (Vec<u8>, u32);

fn memo() -> &'static RwLock<HashMap<MemoKey, HpReal>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, HpReal>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Number of power-series terms kept at `digits` digits.
pub fn half_terms(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 10
}

/// `∫_0^{1/2}` of the word. Coefficients stay in `[0, 1]`, so truncating
/// after `T` terms leaves an error of at most `2^{-T}`.
pub fn z_half(w: &Word, cfg: &PrecisionConfig) -> Result<HpReal> {
    if w.0.last() == Some(&0) {
        return Err(Divergence::TrailingZeroLetter(w.to_string()).into());
    }
    if w.is_empty() {
        return Ok(cfg.one());
    }
    let key = (w.0.clone(), cfg.digits);
    if let Some(v) = memo().read().expect("memo lock").get(&key) {
        return Ok(v.clone());
    }
    let v = z_half_uncached(w, cfg);
    memo().write().expect("memo lock").entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

fn z_half_uncached(w: &Word, cfg: &PrecisionConfig) -> HpReal {
    let t = half_terms(cfg.digits);
    let mut c = vec![cfg.zero(); t + 1];
    c[0] = cfg.one();
    for &letter in w.0.iter().rev() {
        if letter == 1 {
            // c'_n = (1/n) Σ_{m<n} c_m
            let mut prefix = cfg.zero();
            let mut next = vec![cfg.zero(); t + 1];
            for n in 1..=t {
                prefix += &c[n - 1];
                next[n] = &prefix / n as i64;
            }
            c = next;
        } else {
            c[0] = cfg.zero();
            for (n, cn) in c.iter_mut().enumerate().skip(1) {
                *cn /= n as i64;
            }
        }
    }
    let half = cfg.ratio(1, 2);
    let mut acc = cfg.zero();
    for cn in c.iter().rev() {
        acc = acc * &half + cn;
    }
    acc
}

/// `ζ(k) = Σ_j z_half(τ(w_{1..j})) · z_half(w_{j+1..})` for the word `w` of `k`.
pub fn mzv_holder(k: &Index, cfg: &PrecisionConfig) -> Result<ValueWithError> {
    if k.is_empty() {
        return Ok(ValueWithError::exact(cfg.one()));
    }
    if !admissible(k) {
        return Err(Divergence::NotAdmissible(k.to_string()).into());
    }
    let w = raw_word(k);
    let len = w.len();
    let mut total = cfg.zero();
    for j in 0..=len {
        let prefix = tau(&w.slice(0..j));
        let suffix = w.slice(j..len);
        assert!(
            prefix.0.last() != Some(&0) && suffix.0.last() != Some(&0),
            "convolution factor with trailing 0 for word {w}"
        );
        total += z_half(&prefix, cfg)? * z_half(&suffix, cfg)?;
    }
    let t = half_terms(cfg.digits) as i32;
    let bound = cfg.int(2).powi(-t) * (3 * (len as i64 + 1));
    Ok(ValueWithError::new(total, bound, BoundKind::Rigorous, half_terms(cfg.digits) as u64))
}

/// `Li_k(1/2)` for any nonempty index.
pub fn li_half(k: &Index, cfg: &PrecisionConfig) -> Result<HpReal> {
    if k.is_empty() {
        return Err(domain("li_half needs a nonempty index"));
    }
    z_half(&raw_word(k), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn encoding_round_trip() {
        assert_eq!(index_to_word(&Index::from([2])).unwrap(), w("01"));
        assert_eq!(index_to_word(&Index::from([2, 1])).unwrap(), w("011"));
        assert_eq!(word_to_index(&w("001")).unwrap(), Index::from([3]));
        assert!(index_to_word(&Index::from([1, 2])).is_err());
        assert!(word_to_index(&w("10")).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w("01")), w("01"));
        assert_eq!(tau(&w("011")), w("001"));
        assert_eq!(tau(&tau(&w("0010111"))), w("0010111"));
    }

    #[test]
    fn half_integrals() {
        let cfg = PrecisionConfig::default();
        let l2 = HpReal::ln2(cfg.bits());
        assert!((z_half(&w("1"), &cfg).unwrap() - &l2).abs().to_f64() < 1e-40);
        let li2 = HpReal::pi(cfg.bits()).powi(2) / 12 - &l2 * &l2 / 2;
        assert!((z_half(&w("01"), &cfg).unwrap() - li2).abs().to_f64() < 1e-40);
        assert_eq!(z_half(&Word::default(), &cfg).unwrap(), 1);
        assert!(matches!(z_half(&w("10"), &cfg), Err(Error::Divergent(Divergence::TrailingZeroLetter(_)))));
    }

    #[test]
    fn convolution_reproduces_zeta2() {
        let cfg = PrecisionConfig::default();
        let v = mzv_holder(&Index::from([2]), &cfg).unwrap();
        let exact = HpReal::pi(cfg.bits()).powi(2) / 6;
        assert!((v.value - exact).abs().to_f64() < 1e-40);
        let l2 = HpReal::ln2(cfg.bits());
        let expanded = li_half(&Index::from([2]), &cfg).unwrap() * 2i64 + &l2 * &l2;
        let v = mzv_holder(&Index::from([2]), &cfg).unwrap();
        assert!((v.value - expanded).abs().to_f64() < 1e-42);
    }
}
