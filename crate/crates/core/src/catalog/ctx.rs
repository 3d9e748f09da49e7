//! Shorthand evaluators shared by the identity builders.

use crate::error::Result;
use crate::index_algebra::{hoffman_dual, index_transform_mj, Index, SignedIndex};
use crate::precision::{HpReal, PrecisionConfig, ValueWithError};
use crate::{series, values};

pub(crate) type Vwe = ValueWithError;

pub(crate) fn binom(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128) as i64
}

pub(crate) fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

pub(crate) fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(m_j)^∨`, the dual of `(m_1, m_2 + 1, ..., m_j + 1)`.
pub(crate) fn dual_mj(m: &[u32], j: usize) -> Result<Index> {
    hoffman_dual(&index_transform_mj(m, j)?)
}

/// `(m_j + 1, ..., m_i + 1)` for 1-based `i..=j`, plus an extra increment `add`.
pub(crate) fn rev_plus(m: &[u32], i: usize, j: usize, add: &[u32]) -> Vec<u32> {
    if i > j {
        return Vec::new();
    }
    (i..=j).rev().map(|t| m[t - 1] + 1 + add[t - i]).collect()
}

pub(crate) fn ones(n: usize) -> Vec<u32> {
    vec![1; n]
}

pub(crate) fn cat(parts: &[&[u32]]) -> Vec<u32> {
    parts.concat()
}

pub(crate) struct Ctx<'a> {
    pub cfg: &'a PrecisionConfig,
}

impl<'a> Ctx<'a> {
    pub fn new(cfg: &'a PrecisionConfig) -> Self {
        Ctx { cfg }
    }

    pub fn exact(&self, v: HpReal) -> Vwe {
        Vwe::exact(v)
    }

    pub fn q(&self, n: i64, d: i64) -> HpReal {
        self.cfg.ratio(n, d)
    }

    pub fn log2(&self) -> Vwe {
        Vwe::exact(HpReal::ln2(self.cfg.bits()))
    }

    pub fn z(&self, parts: &[u32]) -> Result<Vwe> {
        values::zeta(&Index::new(parts.to_vec())?, self.cfg)
    }

    pub fn zs(&self, parts: &[u32]) -> Result<Vwe> {
        values::zeta_star(&Index::new(parts.to_vec())?, self.cfg)
    }

    pub fn az(&self, parts: &[i32]) -> Result<Vwe> {
        values::azeta(&SignedIndex::new(parts.to_vec())?, self.cfg)
    }

    pub fn li(&self, parts: &[u32], x: &HpReal) -> Result<Vwe> {
        values::li(&Index::new(parts.to_vec())?, x, self.cfg)
    }

    /// `ζ(k ⊛ l★)` by the configured backend.
    pub fn ky(&self, k: &[u32], l: &[u32]) -> Result<Vwe> {
        values::ky(&Index::new(k.to_vec())?, &Index::new(l.to_vec())?, self.cfg)
    }

    /// `ζ(k ⊛ l★)` from its defining series regardless of backend.
    pub fn ky_series(&self, k: &[u32], l: &[u32]) -> Result<Vwe> {
        values::ky_series(&Index::new(k.to_vec())?, &Index::new(l.to_vec())?, self.cfg)
    }

    pub fn zb(&self, k: &[u32]) -> Result<Vwe> {
        values::zeta_binomial_star(&Index::new(k.to_vec())?, self.cfg)
    }

    pub fn zb_h(&self, m: &[u32], r: u32) -> Result<Vwe> {
        values::zeta_binomial_star_h(&Index::new(m.to_vec())?, r, self.cfg)
    }

    pub fn hz(&self, m: &[u32], a: &HpReal) -> Result<Vwe> {
        series::hurwitz_mzv(&Index::new(m.to_vec())?, a, self.cfg)
    }
}

/// Linear combination accumulator.
pub(crate) struct Lin {
    acc: Vwe,
}

impl Lin {
    pub fn new(cfg: &PrecisionConfig) -> Self {
        Lin { acc: Vwe::exact(cfg.zero()) }
    }

    pub fn add(&mut self, c: &HpReal, v: &Vwe) {
        self.acc = &self.acc + &v.scale(c);
    }

    pub fn add_int(&mut self, c: i64, v: &Vwe) {
        self.acc = &self.acc + &v.scale_int(c);
    }

    pub fn push(&mut self, v: &Vwe) {
        self.acc = &self.acc + v;
    }

    pub fn finish(self) -> Vwe {
        self.acc
    }
}
