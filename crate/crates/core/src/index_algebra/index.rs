use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};

/// A finite sequence of positive integers, the argument of an MZV.
///
/// The empty index is a valid value with weight and depth zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain(format!("index entries must be positive, got ({})", join(&parts))));
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// `({value}_count)`.
    pub fn repeat(value: u32, count: usize) -> Self {
        assert!(value > 0, "index entries must be positive");
        Index(vec![value; count])
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Index(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// Everything after the first entry; empty for the empty index.
    pub fn tail(&self) -> Index {
        Index(self.0.iter().skip(1).copied().collect())
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Index(parts)
    }

    pub fn prepend(&self, head: u32) -> Index {
        assert!(head > 0);
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(head);
        parts.extend_from_slice(&self.0);
        Index(parts)
    }

    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&p| p == 1).count()
    }

    pub fn to_signed(&self) -> SignedIndex {
        SignedIndex(self.0.iter().map(|&p| p as i32).collect())
    }
}

impl From<&[u32]> for Index {
    fn from(parts: &[u32]) -> Self {
        Index::new(parts.to_vec()).expect("index entries must be positive")
    }
}

impl<const N: usize> From<[u32; N]> for Index {
    fn from(parts: [u32; N]) -> Self {
        Index::new(parts.to_vec()).expect("index entries must be positive")
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<u32>(s)?;
        if let Some(pos) = parts.iter().position(|&(_, v)| v == 0) {
            return Err(Error::Syntax {
                offset: parts[pos].0,
                message: "index entries must be positive".into(),
            });
        }
        Ok(Index(parts.into_iter().map(|(_, v)| v).collect()))
    }
}

/// A finite sequence of nonzero integers; a negative entry is a barred slot
/// carrying the sign `(-1)^n` in the alternating sums.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedIndex(Vec<i32>);

impl SignedIndex {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain("signed index entries must be nonzero"));
        }
        Ok(SignedIndex(parts))
    }

    /// Builds a signed index from magnitudes and per-slot signs (`+1`/`-1`).
    pub fn from_signs(magnitudes: &Index, signs: &[i8]) -> Result<Self> {
        if magnitudes.depth() != signs.len() {
            return Err(domain(format!("{} magnitudes but {} signs", magnitudes.depth(), signs.len())));
        }
        let parts = magnitudes
            .parts()
            .iter()
            .zip(signs)
            .map(|(&m, &s)| match s {
                1 => Ok(m as i32),
                -1 => Ok(-(m as i32)),
                _ => Err(domain(format!("sign must be +1 or -1, got {s}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SignedIndex(parts))
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|p| p.unsigned_abs()).sum()
    }

    pub fn magnitudes(&self) -> Index {
        Index(self.0.iter().map(|p| p.unsigned_abs()).collect())
    }

    pub fn is_barred(&self, slot: usize) -> bool {
        self.0[slot] < 0
    }

    pub fn has_bars(&self) -> bool {
        self.0.iter().any(|&p| p < 0)
    }

    /// `|k_1| + ... + |k_j| > j` for every `j`, where a leading `-1` is allowed.
    pub fn convergent(&self) -> bool {
        let mut partial = 0u32;
        for (j, &p) in self.0.iter().enumerate() {
            partial += p.unsigned_abs();
            if j == 0 && p == -1 {
                continue;
            }
            if partial <= j as u32 + 1 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.0))
    }
}

impl FromStr for SignedIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<i32>(s)?;
        if let Some(pos) = parts.iter().position(|&(_, v)| v == 0) {
            return Err(Error::Syntax {
                offset: parts[pos].0,
                message: "signed index entries must be nonzero".into(),
            });
        }
        Ok(SignedIndex(parts.into_iter().map(|(_, v)| v).collect()))
    }
}

/// A rational linear combination of keys with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, BigRational>,
}

pub type FormalIndexSum = FormalSum<Index>;
pub type FormalSignedSum = FormalSum<SignedIndex>;

impl<K: Ord + Clone> FormalSum<K> {
    pub fn new() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }

    pub fn single(key: K) -> Self {
        let mut s = Self::new();
        s.add_term(key, BigRational::one());
        s
    }

    pub fn add_term(&mut self, key: K, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &FormalSum<K>, scale: &BigRational) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn map_keys(&self, mut f: impl FnMut(&K) -> K) -> Self {
        let mut out = Self::new();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn coefficient(&self, key: &K) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (lexicographic) key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRational)> {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Default for FormalSum<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigRational)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigRational)>>(iter: I) -> Self {
        let mut s = Self::new();
        for (k, c) in iter {
            s.add_term(k, c);
        }
        s
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "({k})")?;
            } else {
                write!(f, "{c}*({k})")?;
            }
        }
        Ok(())
    }
}

fn join<T: fmt::Display>(parts: &[T]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses `"a,b,c"` into integers paired with their byte offsets. The empty
/// (or all-whitespace) string is the empty list.
pub(crate) fn parse_list<T: FromStr>(s: &str) -> Result<Vec<(usize, T)>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for field in s.split(',') {
        let lead = field.len() - field.trim_start().len();
        let tok = field.trim();
        if tok.is_empty() {
            return Err(Error::Syntax { offset: offset + lead, message: "expected an integer".into() });
        }
        let value = tok.parse::<T>().map_err(|_| Error::Syntax {
            offset: offset + lead,
            message: format!("'{tok}' is not a valid integer"),
        })?;
        out.push((offset + lead, value));
        offset += field.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_depth() {
        let k = Index::from([2, 1, 3]);
        assert_eq!(k.weight(), 6);
        assert_eq!(k.depth(), 3);
        assert_eq!(Index::empty().weight(), 0);
        assert_eq!(Index::empty().depth(), 0);
    }

    #[test]
    fn zero_entries_rejected() {
        assert!(Index::new(vec![2, 0]).is_err());
        assert!(SignedIndex::new(vec![0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let k: Index = "2, 1,1".parse().unwrap();
        assert_eq!(k, Index::from([2, 1, 1]));
        assert_eq!(k.to_string(), "2,1,1");
        let s: SignedIndex = "-2,3,-1,4".parse().unwrap();
        assert_eq!(s.parts(), &[-2, 3, -1, 4]);
        assert_eq!(s.to_string(), "-2,3,-1,4");
        assert_eq!("".parse::<Index>().unwrap(), Index::empty());
    }

    #[test]
    fn parse_reports_offsets() {
        match "2,,1".parse::<Index>() {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match "2,x".parse::<Index>() {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn signed_convergence() {
        let ok = |v: Vec<i32>| SignedIndex::new(v).unwrap().convergent();
        assert!(ok(vec![-1]));
        assert!(ok(vec![2, -1]));
        assert!(ok(vec![-2, 3, -1, 4]));
        assert!(ok(vec![-1, -2]));
        assert!(!ok(vec![1]));
        assert!(!ok(vec![1, 2]));
        assert!(!ok(vec![-1, 1]));
        assert!(ok(vec![2, -1, 1, 1, 1, 1]));
        assert!(!ok(vec![1, -2]));
    }

    #[test]
    fn formal_sum_drops_zeros() {
        let mut s = FormalIndexSum::new();
        s.add_term(Index::from([2]), BigRational::one());
        s.add_term(Index::from([2]), -BigRational::one());
        assert!(s.is_empty());
        assert_eq!(s, FormalIndexSum::new());
    }
}
