//! Arbitrary-precision reals, error-tracked values, and evaluation settings.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Decimal guard digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 5;

/// Binary precision for `digits` decimal digits plus the guard.
pub fn bits_for_digits(digits: u32) -> u32 {
    ((digits + GUARD_DIGITS) as f64 * std::f64::consts::LOG2_10).ceil() as u32
}

/// A real number at a fixed binary working precision.
///
/// Binary operations run at the larger precision of their operands.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct HpReal(Float);

impl HpReal {
    pub fn from_float(f: Float) -> Self {
        HpReal(f)
    }

    pub fn zero(prec: u32) -> Self {
        HpReal(Float::with_val(prec, 0))
    }

    pub fn one(prec: u32) -> Self {
        HpReal(Float::with_val(prec, 1))
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        HpReal(Float::with_val(prec, v))
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        HpReal(Float::with_val(prec, v))
    }

    pub fn ratio(num: i64, den: i64, prec: u32) -> Self {
        assert!(den != 0, "zero denominator");
        HpReal(Float::with_val(prec, num) / den)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let num = to_rug_integer(q.numer());
        let den = to_rug_integer(q.denom());
        HpReal(Float::with_val(prec, num) / Float::with_val(prec, den))
    }

    /// Parses a decimal literal or an `a/b` fraction.
    pub fn parse(text: &str, prec: u32) -> Result<Self> {
        let text = text.trim();
        if let Some((a, b)) = text.split_once('/') {
            let a = Self::parse(a, prec)?;
            let b = Self::parse(b, prec)?;
            if b.is_zero() {
                return Err(Error::Domain(format!("zero denominator in '{text}'")));
            }
            return Ok(a / b);
        }
        let parsed =
            Float::parse(text).map_err(|e| Error::Domain(format!("cannot parse '{text}' as a real: {e}")))?;
        Ok(HpReal(Float::with_val(prec, parsed)))
    }

    pub fn pi(prec: u32) -> Self {
        HpReal(Float::with_val(prec, Constant::Pi))
    }

    pub fn ln2(prec: u32) -> Self {
        HpReal(Float::with_val(prec, Constant::Log2))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn abs(&self) -> Self {
        HpReal(self.0.clone().abs())
    }

    pub fn ln(&self) -> Self {
        HpReal(self.0.clone().ln())
    }

    pub fn exp(&self) -> Self {
        HpReal(self.0.clone().exp())
    }

    pub fn sqrt(&self) -> Self {
        HpReal(self.0.clone().sqrt())
    }

    pub fn powi(&self, e: i32) -> Self {
        HpReal(self.0.clone().pow(e))
    }

    pub fn powf(&self, e: &HpReal) -> Self {
        HpReal(self.0.clone().pow(&e.0))
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Same value rounded to a different binary precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        HpReal(Float::with_val(prec, &self.0))
    }

    /// Decimal rendering with `digits` significant digits. Moderate
    /// magnitudes print positionally, others in scientific notation.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        if !self.0.is_finite() {
            return self.0.to_string();
        }
        let (neg, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits.max(1)));
        let exp = exp.unwrap_or(0);
        let sign = if neg { "-" } else { "" };
        let body = if exp > 0 && (exp as usize) < mantissa.len() {
            let (int, frac) = mantissa.split_at(exp as usize);
            format!("{int}.{frac}")
        } else if exp > 0 && (exp as usize) <= 21 {
            let pad = "0".repeat(exp as usize - mantissa.len());
            format!("{mantissa}{pad}")
        } else if exp <= 0 && exp > -6 {
            format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
        } else {
            let (lead, rest) = mantissa.split_at(1);
            if rest.is_empty() {
                format!("{lead}e{}", exp - 1)
            } else {
                format!("{lead}.{rest}e{}", exp - 1)
            }
        };
        format!("{sign}{body}")
    }

    /// Short scientific rendering, for bounds and differences.
    pub fn to_sci(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        let (neg, mantissa, exp) = self.0.to_sign_string_exp(10, Some(digits.max(1)));
        let exp = exp.unwrap_or(0);
        let (lead, rest) = mantissa.split_at(1);
        let sign = if neg { "-" } else { "" };
        if rest.is_empty() {
            format!("{sign}{lead}e{}", exp - 1)
        } else {
            format!("{sign}{lead}.{rest}e{}", exp - 1)
        }
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&self.to_decimal(digits))
    }
}

pub(crate) fn to_rug_integer(n: &num_bigint::BigInt) -> Integer {
    Integer::from_str_radix(&n.to_str_radix(16), 16).expect("valid hex digits")
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<&HpReal> for &HpReal {
            type Output = HpReal;
            fn $m(self, rhs: &HpReal) -> HpReal {
                let prec = self.prec().max(rhs.prec());
                HpReal(Float::with_val(prec, (&self.0).$m(&rhs.0)))
            }
        }
        impl $tr<HpReal> for HpReal {
            type Output = HpReal;
            fn $m(self, rhs: HpReal) -> HpReal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&HpReal> for HpReal {
            type Output = HpReal;
            fn $m(self, rhs: &HpReal) -> HpReal {
                (&self).$m(rhs)
            }
        }
        impl $tr<HpReal> for &HpReal {
            type Output = HpReal;
            fn $m(self, rhs: HpReal) -> HpReal {
                self.$m(&rhs)
            }
        }
        impl $atr<&HpReal> for HpReal {
            fn $am(&mut self, rhs: &HpReal) {
                if rhs.prec() > self.prec() {
                    self.0.set_prec(rhs.prec());
                }
                self.0.$am(&rhs.0);
            }
        }
        impl $atr<HpReal> for HpReal {
            fn $am(&mut self, rhs: HpReal) {
                self.$am(&rhs);
            }
        }
        impl $tr<i64> for &HpReal {
            type Output = HpReal;
            fn $m(self, rhs: i64) -> HpReal {
                HpReal(Float::with_val(self.prec(), (&self.0).$m(rhs)))
            }
        }
        impl $tr<i64> for HpReal {
            type Output = HpReal;
            fn $m(mut self, rhs: i64) -> HpReal {
                self.0.$am(rhs);
                self
            }
        }
        impl $atr<i64> for HpReal {
            fn $am(&mut self, rhs: i64) {
                self.0.$am(rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal(-self.0)
    }
}

impl Neg for &HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal(-self.0.clone())
    }
}

impl PartialEq<i64> for HpReal {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i64> for HpReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl std::iter::Sum for HpReal {
    fn sum<I: Iterator<Item = HpReal>>(mut iter: I) -> HpReal {
        let first = iter.next().expect("sum of an empty HpReal iterator has no precision");
        iter.fold(first, |acc, x| acc + x)
    }
}

/// Whether an error bound was proved or estimated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Rigorous,
    Heuristic,
}

impl BoundKind {
    pub fn and(self, other: BoundKind) -> BoundKind {
        if self == BoundKind::Rigorous && other == BoundKind::Rigorous {
            BoundKind::Rigorous
        } else {
            BoundKind::Heuristic
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Rigorous => "rigorous",
            BoundKind::Heuristic => "heuristic",
        })
    }
}

/// A value with an absolute error bound and the number of series terms used.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueWithError {
    pub value: HpReal,
    pub bound: HpReal,
    pub kind: BoundKind,
    pub terms: u64,
}

impl ValueWithError {
    pub fn new(value: HpReal, bound: HpReal, kind: BoundKind, terms: u64) -> Self {
        debug_assert!(!bound.is_sign_negative());
        ValueWithError { value, bound, kind, terms }
    }

    /// A value known to working precision (bound zero, rigorous).
    pub fn exact(value: HpReal) -> Self {
        let bound = HpReal::zero(value.prec());
        ValueWithError { value, bound, kind: BoundKind::Rigorous, terms: 0 }
    }

    pub fn scale(&self, c: &HpReal) -> Self {
        ValueWithError {
            value: &self.value * c,
            bound: &self.bound * &c.abs(),
            kind: self.kind,
            terms: self.terms,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        ValueWithError {
            value: &self.value * c,
            bound: &self.bound * c.abs(),
            kind: self.kind,
            terms: self.terms,
        }
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = ValueWithError::exact(HpReal::one(self.value.prec()));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&ValueWithError> for &ValueWithError {
    type Output = ValueWithError;
    fn add(self, rhs: &ValueWithError) -> ValueWithError {
        ValueWithError {
            value: &self.value + &rhs.value,
            bound: &self.bound + &rhs.bound,
            kind: self.kind.and(rhs.kind),
            terms: self.terms.max(rhs.terms),
        }
    }
}

impl Sub<&ValueWithError> for &ValueWithError {
    type Output = ValueWithError;
    fn sub(self, rhs: &ValueWithError) -> ValueWithError {
        ValueWithError {
            value: &self.value - &rhs.value,
            bound: &self.bound + &rhs.bound,
            kind: self.kind.and(rhs.kind),
            terms: self.terms.max(rhs.terms),
        }
    }
}

impl Mul<&ValueWithError> for &ValueWithError {
    type Output = ValueWithError;
    fn mul(self, rhs: &ValueWithError) -> ValueWithError {
        let bound =
            &self.value.abs() * &rhs.bound + &rhs.value.abs() * &self.bound + &self.bound * &rhs.bound;
        ValueWithError {
            value: &self.value * &rhs.value,
            bound,
            kind: self.kind.and(rhs.kind),
            terms: self.terms.max(rhs.terms),
        }
    }
}

macro_rules! owned_vwe {
    ($tr:ident, $m:ident) => {
        impl $tr<ValueWithError> for ValueWithError {
            type Output = ValueWithError;
            fn $m(self, rhs: ValueWithError) -> ValueWithError {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ValueWithError> for ValueWithError {
            type Output = ValueWithError;
            fn $m(self, rhs: &ValueWithError) -> ValueWithError {
                (&self).$m(rhs)
            }
        }
    };
}

owned_vwe!(Add, add);
owned_vwe!(Sub, sub);
owned_vwe!(Mul, mul);

impl Neg for ValueWithError {
    type Output = ValueWithError;
    fn neg(self) -> ValueWithError {
        ValueWithError { value: -self.value, ..self }
    }
}

/// Which MZV evaluator to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Auto,
    Direct,
    Holder,
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Backend::Auto),
            "direct" => Ok(Backend::Direct),
            "holder" => Ok(Backend::Holder),
            other => Err(Error::Config(format!("unknown backend '{other}'"))),
        }
    }
}

/// Evaluation settings shared by every numeric routine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrecisionConfig {
    pub digits: u32,
    pub max_terms: u64,
    pub backend: Backend,
    pub tolerance: Option<f64>,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig { digits: 40, max_terms: 1_000_000, backend: Backend::Auto, tolerance: None }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.digits < 10 {
            return Err(Error::Config(format!("digits must be at least 10, got {}", self.digits)));
        }
        if self.max_terms < 1000 {
            return Err(Error::Config(format!("max_terms must be at least 1000, got {}", self.max_terms)));
        }
        if let Some(t) = self.tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::Config(format!("tolerance must be positive, got {t}")));
            }
        }
        Ok(())
    }

    pub fn with_digits(mut self, digits: u32) -> Self {
        self.digits = digits;
        self
    }

    pub fn with_max_terms(mut self, n: u64) -> Self {
        self.max_terms = n;
        self
    }

    pub fn with_backend(mut self, backend: Backend) -> Self {
        self.backend = backend;
        self
    }

    pub fn bits(&self) -> u32 {
        bits_for_digits(self.digits)
    }

    pub fn zero(&self) -> HpReal {
        HpReal::zero(self.bits())
    }

    pub fn one(&self) -> HpReal {
        HpReal::one(self.bits())
    }

    pub fn int(&self, v: i64) -> HpReal {
        HpReal::from_i64(v, self.bits())
    }

    pub fn ratio(&self, num: i64, den: i64) -> HpReal {
        HpReal::ratio(num, den, self.bits())
    }

    pub fn rational(&self, q: &BigRational) -> HpReal {
        HpReal::from_rational(q, self.bits())
    }

    /// `10^{-digits}`.
    pub fn epsilon(&self) -> HpReal {
        self.int(10).powi(-(self.digits as i32))
    }
}

/// Constants used throughout the identity checks.
#[derive(Clone, Debug)]
pub struct Constants {
    pub pi: HpReal,
    pub log2: HpReal,
}

pub fn fundamental_constants(cfg: &PrecisionConfig) -> Constants {
    Constants { pi: HpReal::pi(cfg.bits()), log2: HpReal::ln2(cfg.bits()) }
}

/// `|a - b| <= tol`.
pub fn approx_equal(a: &HpReal, b: &HpReal, tol: &HpReal) -> bool {
    (a - b).abs() <= *tol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_published_digits() {
        let cfg = PrecisionConfig::default();
        let c = fundamental_constants(&cfg);
        assert!(c.pi.to_decimal(40).starts_with("3.141592653589793238462643383279502884197"));
        assert!(c.log2.to_decimal(40).starts_with("0.6931471805599453094172321214581765680755"));
    }

    #[test]
    fn approx_equal_examples() {
        let cfg = PrecisionConfig::default().with_digits(50);
        let one = cfg.one();
        assert!(approx_equal(&one, &one, &HpReal::from_f64(1e-30, cfg.bits())));
        assert!(!approx_equal(&one, &cfg.ratio(11, 10), &HpReal::from_f64(1e-3, cfg.bits())));
        let tiny = HpReal::parse("1e-41", cfg.bits()).unwrap();
        let tol = HpReal::parse("1e-40", cfg.bits()).unwrap();
        assert!(approx_equal(&one, &(&one + &tiny), &tol));
    }

    #[test]
    fn decimal_rendering() {
        let p = bits_for_digits(30);
        assert_eq!(HpReal::ratio(1, 8, p).to_decimal(5), "0.12500");
        assert_eq!(HpReal::from_i64(-42, p).to_decimal(4), "-42.00");
        assert_eq!(HpReal::from_i64(0, p).to_decimal(4), "0");
        assert_eq!(HpReal::parse("1.5e-12", p).unwrap().to_decimal(3), "1.50e-12");
        assert_eq!(HpReal::parse("2.5e-12", p).unwrap().to_sci(2), "2.5e-12");
        assert_eq!(HpReal::parse("3/4", p).unwrap().to_decimal(2), "0.75");
    }

    #[test]
    fn precision_is_max_of_operands() {
        let a = HpReal::one(64);
        let b = HpReal::one(256);
        assert_eq!((&a + &b).prec(), 256);
        let mut c = a.clone();
        c += &b;
        assert_eq!(c.prec(), 256);
    }

    #[test]
    fn config_validation() {
        assert!(PrecisionConfig::default().validate().is_ok());
        assert!(PrecisionConfig::default().with_digits(9).validate().is_err());
        assert!(PrecisionConfig::default().with_max_terms(999).validate().is_err());
    }

    #[test]
    fn error_propagation() {
        let cfg = PrecisionConfig::default();
        let a = ValueWithError::new(cfg.int(2), cfg.ratio(1, 100), BoundKind::Rigorous, 10);
        let b = ValueWithError::new(cfg.int(3), cfg.ratio(1, 10), BoundKind::Heuristic, 20);
        let p = &a * &b;
        assert_eq!(p.value, 6);
        assert!((p.bound.to_f64() - (0.2 + 0.03 + 0.001)).abs() < 1e-12);
        assert_eq!(p.kind, BoundKind::Heuristic);
        assert_eq!(p.terms, 20);
    }
}
