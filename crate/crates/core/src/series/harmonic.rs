use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::index_algebra::{Index, Rational};
use crate::precision::HpReal;

/// Minimal field interface shared by exact and floating accumulators.
pub trait Scalar: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, n: u64) -> Self;
    fn add_ref(&mut self, other: &Self);
    fn sub_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn recip(&self) -> Self;
    fn rational_like(&self, q: &Rational) -> Self;
}

impl Scalar for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn int_like(&self, n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn recip(&self) -> Self {
        num_traits::Inv::inv(self.clone())
    }
    fn rational_like(&self, q: &Rational) -> Self {
        q.clone()
    }
}

impl Scalar for HpReal {
    fn zero_like(&self) -> Self {
        HpReal::zero(self.prec())
    }
    fn one_like(&self) -> Self {
        HpReal::one(self.prec())
    }
    fn int_like(&self, n: u64) -> Self {
        HpReal::from_i64(n as i64, self.prec())
    }
    fn add_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn recip(&self) -> Self {
        self.one_like() / self
    }
    fn rational_like(&self, q: &Rational) -> Self {
        HpReal::from_rational(q, self.prec())
    }
}

/// Which nested sum a [`HarmonicStream`] tracks.
#[derive(Clone, Debug)]
pub enum StreamKind<S> {
    /// `n >= n_1 > n_2 > ... > n_r >= 1`.
    Strict,
    /// `n >= n_1 >= n_2 >= ... >= n_r >= 1`.
    Star,
    /// Star sum with the innermost factor replaced by `x^{n_r}`.
    StarParam(S),
}

/// Incremental evaluation of nested harmonic sums as `n` advances.
///
/// Slot `j` of the accumulator holds the sum over the suffix starting at
/// entry `j`; the last slot holds the empty-suffix value. Negative entries
/// carry the sign `(-1)^{n_j}`. An optional shift replaces each `n_j` by
/// `n_j + a` in the denominators.
#[derive(Clone, Debug)]
pub struct HarmonicStream<S: Scalar> {
    parts: Vec<i32>,
    kind: StreamKind<S>,
    shift: Option<S>,
    acc: Vec<S>,
    powers: Vec<S>,
    xpow: S,
    n: u64,
}

impl<S: Scalar> HarmonicStream<S> {
    /// `proto` fixes the scalar context (precision for floats).
    pub fn new(parts: &[i32], kind: StreamKind<S>, proto: &S) -> Self {
        assert!(parts.iter().all(|&p| p != 0), "stream entries must be nonzero");
        let mut acc = vec![proto.zero_like(); parts.len()];
        acc.push(proto.one_like());
        let max_pow = parts.iter().map(|p| p.unsigned_abs()).max().unwrap_or(0) as usize;
        HarmonicStream {
            parts: parts.to_vec(),
            kind,
            shift: None,
            acc,
            powers: vec![proto.zero_like(); max_pow + 1],
            xpow: proto.one_like(),
            n: 0,
        }
    }

    pub fn for_index(k: &Index, kind: StreamKind<S>, proto: &S) -> Self {
        let parts: Vec<i32> = k.parts().iter().map(|&p| p as i32).collect();
        Self::new(&parts, kind, proto)
    }

    /// Denominators become `(n_j + a)^{k_j}`.
    pub fn with_shift(mut self, a: S) -> Self {
        self.shift = Some(a);
        self
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Current full value (suffix starting at entry 0).
    pub fn value(&self) -> &S {
        &self.acc[0]
    }

    /// Current value of the suffix starting at 0-based entry `j`.
    pub fn suffix(&self, j: usize) -> &S {
        &self.acc[j]
    }

    /// Advances from `n - 1` to `n` and returns the new value.
    pub fn advance(&mut self) -> &S {
        self.n += 1;
        let n = self.n;
        let proto = &self.acc[0];
        let mut base = proto.int_like(n);
        if let Some(a) = &self.shift {
            base.add_ref(a);
        }
        if self.powers.len() > 1 {
            self.powers[1] = base.recip();
            for e in 2..self.powers.len() {
                self.powers[e] = self.powers[e - 1].mul_ref(&self.powers[1]);
            }
        }
        let r = self.parts.len();
        let odd = n % 2 == 1;
        let term = |parts: &[i32], powers: &[S], j: usize, inner: &S| -> (S, bool) {
            let p = parts[j];
            let t = powers[p.unsigned_abs() as usize].mul_ref(inner);
            (t, p < 0 && odd)
        };
        match &self.kind {
            StreamKind::Strict => {
                for j in 0..r {
                    let (t, negate) = term(&self.parts, &self.powers, j, &self.acc[j + 1]);
                    if negate {
                        self.acc[j].sub_ref(&t);
                    } else {
                        self.acc[j].add_ref(&t);
                    }
                }
            }
            StreamKind::Star | StreamKind::StarParam(_) => {
                if let StreamKind::StarParam(x) = &self.kind {
                    self.xpow = self.xpow.mul_ref(x);
                    self.acc[r] = self.xpow.clone();
                }
                for j in (0..r).rev() {
                    let (t, negate) = term(&self.parts, &self.powers, j, &self.acc[j + 1]);
                    if negate {
                        self.acc[j].sub_ref(&t);
                    } else {
                        self.acc[j].add_ref(&t);
                    }
                }
            }
        }
        &self.acc[0]
    }
}

impl<S: Scalar> Iterator for HarmonicStream<S> {
    type Item = S;
    fn next(&mut self) -> Option<S> {
        Some(self.advance().clone())
    }
}

fn exact_stream(k: &Index, kind: StreamKind<Rational>, n: u64) -> Rational {
    let mut s = HarmonicStream::for_index(k, kind, &Rational::one());
    let mut v = s.value().clone();
    for _ in 0..n {
        v = s.advance().clone();
    }
    v
}

/// `ζ_n(k)` exactly; zero when `n < depth(k)`, one for the empty index.
pub fn mhs(n: u64, k: &Index) -> Rational {
    exact_stream(k, StreamKind::Strict, n)
}

/// `ζ*_n(k)` exactly; one for the empty index.
pub fn mhss(n: u64, k: &Index) -> Rational {
    if k.is_empty() {
        return Rational::one();
    }
    exact_stream(k, StreamKind::Star, n)
}

/// `ζ*_n(k; x)` at an exact rational point; `x^n` for the empty index.
pub fn pmhss_exact(n: u64, k: &Index, x: &Rational) -> Rational {
    if k.is_empty() {
        return num_traits::pow(x.clone(), n as usize);
    }
    exact_stream(k, StreamKind::StarParam(x.clone()), n)
}

/// `ζ*_n(k; x)` in floating point.
pub fn pmhss(n: u64, k: &Index, x: &HpReal) -> HpReal {
    if k.is_empty() {
        return x.powi(n as i32);
    }
    let mut s = HarmonicStream::for_index(k, StreamKind::StarParam(x.clone()), x);
    let mut v = s.value().clone();
    for _ in 0..n {
        v = s.advance().clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index_algebra::star_expand;
    use crate::precision::bits_for_digits;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn mhs_examples() {
        assert_eq!(mhs(2, &Index::from([2, 1])), q(1, 4));
        assert_eq!(mhs(1, &Index::from([2, 1])), q(0, 1));
        assert_eq!(mhs(3, &Index::from([1])), q(11, 6));
        assert_eq!(mhs(0, &Index::empty()), q(1, 1));
    }

    #[test]
    fn mhss_examples() {
        assert_eq!(mhss(2, &Index::from([2, 1])), q(11, 8));
        assert_eq!(mhss(1, &Index::from([3, 1, 2])), q(1, 1));
        assert_eq!(mhss(5, &Index::empty()), q(1, 1));
    }

    #[test]
    fn star_equals_expanded_strict() {
        for k in [vec![2, 1], vec![1, 1, 1], vec![3, 1, 2], vec![1, 2]] {
            let k = Index::new(k).unwrap();
            for n in 0..=20 {
                let expanded: Rational =
                    star_expand(&k).iter().map(|(t, c)| c * mhs(n, t)).fold(Rational::zero(), |a, b| a + b);
                assert_eq!(mhss(n, &k), expanded, "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn parametric_examples() {
        let x = q(1, 3);
        assert_eq!(pmhss_exact(4, &Index::empty(), &x), q(1, 81));
        assert_eq!(pmhss_exact(1, &Index::from([2]), &x), x);
        for n in 0..=20 {
            let k = Index::from([2, 1, 1]);
            assert_eq!(pmhss_exact(n, &k, &Rational::one()), mhss(n, &k));
        }
        let prec = bits_for_digits(30);
        let half = HpReal::ratio(1, 2, prec);
        let v = pmhss(6, &Index::from([1, 2]), &half);
        let exact = HpReal::from_rational(&pmhss_exact(6, &Index::from([1, 2]), &q(1, 2)), prec);
        assert!((v - exact).abs().to_f64() < 1e-30);
    }

    #[test]
    fn stream_emissions() {
        let one = Rational::one();
        let mut s = HarmonicStream::for_index(&Index::from([1]), StreamKind::Strict, &one);
        let first: Vec<Rational> = (&mut s).take(3).collect();
        assert_eq!(first, vec![q(1, 1), q(3, 2), q(11, 6)]);
        let mut s = HarmonicStream::for_index(&Index::from([2, 1]), StreamKind::Star, &one);
        assert_eq!(s.nth(2).unwrap(), mhss(3, &Index::from([2, 1])));
        let mut s = HarmonicStream::for_index(&Index::from([1]), StreamKind::StarParam(q(1, 2)), &one);
        assert_eq!(s.next().unwrap(), q(1, 2));
    }

    #[test]
    fn signed_and_shifted_streams() {
        let one = Rational::one();
        // ζ_3(-1) = -1 + 1/2 - 1/3
        let mut s = HarmonicStream::new(&[-1], StreamKind::Strict, &one);
        assert_eq!(s.nth(2).unwrap(), q(-5, 6));
        // shift 1/2: 1/(1.5)^2 + 1/(2.5)^2
        let mut s = HarmonicStream::new(&[2], StreamKind::Strict, &one).with_shift(q(1, 2));
        assert_eq!(s.nth(1).unwrap(), q(4, 9) + q(4, 25));
    }
}
