use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use super::index::{FormalIndexSum, FormalSignedSum, Index, SignedIndex};
use crate::error::{domain, Result};

pub fn admissible(k: &Index) -> bool {
    k.first().is_none_or(|k1| k1 > 1)
}

/// Hoffman dual: the index whose partial-sum cut set is the complement of
/// the cut set of `k` inside `{1, ..., |k| - 1}`.
pub fn hoffman_dual(k: &Index) -> Result<Index> {
    if k.is_empty() {
        return Err(domain("the Hoffman dual of the empty index is undefined"));
    }
    let w = k.weight();
    let mut cuts = vec![false; w as usize];
    let mut acc = 0;
    for &p in &k.parts()[..k.depth() - 1] {
        acc += p;
        cuts[acc as usize] = true;
    }
    let mut parts = Vec::new();
    let mut run = 1;
    for &cut in &cuts[1..] {
        if cut {
            run += 1;
        } else {
            parts.push(run);
            run = 1;
        }
    }
    parts.push(run);
    Ok(Index::from_parts_unchecked(parts))
}

/// Generic star expansion: every separator becomes either a comma or a merge.
fn star_expand_with<T: Copy>(parts: &[T], merge: impl Fn(T, T) -> T) -> Vec<Vec<T>> {
    let Some((&first, rest)) = parts.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = vec![vec![first]];
    for &p in rest {
        let mut next = Vec::with_capacity(out.len() * 2);
        for v in out {
            let mut split = v.clone();
            split.push(p);
            next.push(split);
            let mut merged = v;
            let last = merged.last_mut().expect("nonempty");
            *last = merge(*last, p);
            next.push(merged);
        }
        out = next;
    }
    out
}

/// `k★` as a formal sum of `2^(depth-1)` strict indices.
pub fn star_expand(k: &Index) -> FormalIndexSum {
    star_expand_with(k.parts(), |a, b| a + b)
        .into_iter()
        .map(|v| (Index::from_parts_unchecked(v), BigRational::one()))
        .collect()
}

/// Star expansion on signed indices: magnitudes add, signs multiply.
pub fn star_expand_signed(s: &SignedIndex) -> FormalSignedSum {
    let merge = |a: i32, b: i32| {
        let mag = a.abs() + b.abs();
        if (a < 0) != (b < 0) {
            -mag
        } else {
            mag
        }
    };
    star_expand_with(s.parts(), merge)
        .into_iter()
        .map(|v| (SignedIndex::new(v).expect("nonzero"), BigRational::one()))
        .collect()
}

/// Harmonic (stuffle) product by the three-term recursion, memoized on the
/// pair of suffix offsets.
pub fn stuffle(a: &Index, b: &Index) -> FormalIndexSum {
    let mut memo = HashMap::new();
    stuffle_rec(a.parts(), b.parts(), 0, 0, &mut memo)
}

type Memo = HashMap<(usize, usize), FormalIndexSum>;

fn stuffle_rec(a: &[u32], b: &[u32], i: usize, j: usize, memo: &mut Memo) -> FormalIndexSum {
    if i == a.len() {
        return FormalIndexSum::single(Index::from_parts_unchecked(b[j..].to_vec()));
    }
    if j == b.len() {
        return FormalIndexSum::single(Index::from_parts_unchecked(a[i..].to_vec()));
    }
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let mut out = FormalIndexSum::new();
    let one = BigRational::one();
    let left = stuffle_rec(a, b, i + 1, j, memo);
    out.add_scaled(&left.map_keys(|t| t.prepend(a[i])), &one);
    let right = stuffle_rec(a, b, i, j + 1, memo);
    out.add_scaled(&right.map_keys(|t| t.prepend(b[j])), &one);
    let both = stuffle_rec(a, b, i + 1, j + 1, memo);
    out.add_scaled(&both.map_keys(|t| t.prepend(a[i] + b[j])), &one);
    memo.insert((i, j), out.clone());
    out
}

/// Stuffle extended bilinearly to formal sums.
pub fn stuffle_sums(a: &FormalIndexSum, b: &FormalIndexSum) -> FormalIndexSum {
    let mut out = FormalIndexSum::new();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            out.add_scaled(&stuffle(ka, kb), &(ca * cb));
        }
    }
    out
}

/// `a ⊛ b`: first entries added, tails stuffled.
pub fn circled_product(a: &Index, b: &Index) -> Result<FormalIndexSum> {
    let (Some(a1), Some(b1)) = (a.first(), b.first()) else {
        return Err(domain("circled product needs two nonempty indices"));
    };
    Ok(stuffle(&a.tail(), &b.tail()).map_keys(|t| t.prepend(a1 + b1)))
}

/// `m_j = (m_1, m_2 + 1, ..., m_j + 1)` for a vector that may hold zeros
/// after its first slot.
pub fn index_transform_mj(m: &[u32], j: usize) -> Result<Index> {
    if j == 0 || j > m.len() {
        return Err(domain(format!("j = {j} outside 1..={}", m.len())));
    }
    if m[0] == 0 {
        return Err(domain("m_1 must be positive"));
    }
    let mut parts = vec![m[0]];
    parts.extend(m[1..j].iter().map(|&x| x + 1));
    Ok(Index::from_parts_unchecked(parts))
}

/// `(m_j + d_j, ..., m_i + d_i)` with 1-based `i, j`; empty when `i > j`.
/// `delta[t]` is added to `m[i - 1 + t]`.
pub fn rev_slice_plus(m: &[u32], i: usize, j: usize, delta: &[u32]) -> Result<Index> {
    if i > j {
        return Ok(Index::empty());
    }
    if i == 0 || j > m.len() {
        return Err(domain(format!("slice {i}..={j} outside 1..={}", m.len())));
    }
    if delta.len() != j - i + 1 {
        return Err(domain(format!("delta has length {}, expected {}", delta.len(), j - i + 1)));
    }
    let parts: Vec<u32> = (i..=j).rev().map(|t| m[t - 1] + delta[t - i]).collect();
    Index::new(parts)
}

/// Rewrites the Kaneko-Yamamoto value `ζ(k ⊛ l★)` as a rational combination
/// of ordinary MZVs, using `ζ_n(t) = ζ_{n-1}(t) + n^{-t_1} ζ_{n-1}(t_tail)`
/// and the stuffle product at level `n - 1`.
pub fn ky_expand(k: &Index, l: &Index) -> Result<FormalIndexSum> {
    let (Some(k1), Some(l1)) = (k.first(), l.first()) else {
        return Err(domain("Kaneko-Yamamoto values need nonempty k and l"));
    };
    let s = k1 + l1;
    let kt = k.tail();
    let lt = l.tail();
    let one = BigRational::one();
    let mut out = FormalIndexSum::new();
    if lt.is_empty() {
        out.add_term(kt.prepend(s), one);
        return Ok(out);
    }
    for (t, c) in star_expand(&lt).iter() {
        out.add_scaled(&stuffle(&kt, t).map_keys(|x| x.prepend(s)), c);
        let t1 = t.first().expect("nonempty");
        out.add_scaled(&stuffle(&kt, &t.tail()).map_keys(|x| x.prepend(s + t1)), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sum(pairs: &[(&[u32], i64)]) -> FormalIndexSum {
        pairs.iter().map(|(k, c)| (Index::from(*k), q(*c))).collect()
    }

    #[test]
    fn admissibility() {
        assert!(admissible(&Index::from([2, 1])));
        assert!(!admissible(&Index::from([1, 2])));
        assert!(admissible(&Index::empty()));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(hoffman_dual(&Index::from([1, 1, 2, 1])).unwrap(), Index::from([3, 2]));
        assert_eq!(hoffman_dual(&Index::from([1, 2, 1, 1])).unwrap(), Index::from([2, 3]));
        assert_eq!(hoffman_dual(&Index::from([4])).unwrap(), Index::repeat(1, 4));
        assert!(hoffman_dual(&Index::empty()).is_err());
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_expand(&Index::from([2, 1])), sum(&[(&[2, 1], 1), (&[3], 1)]));
        assert_eq!(star_expand(&Index::from([1])), sum(&[(&[1], 1)]));
        assert_eq!(
            star_expand(&Index::from([2, 1, 1])),
            sum(&[(&[2, 1, 1], 1), (&[3, 1], 1), (&[2, 2], 1), (&[4], 1)])
        );
    }

    #[test]
    fn signed_star_examples() {
        let s = |v: Vec<i32>| SignedIndex::new(v).unwrap();
        let e = star_expand_signed(&s(vec![-1, -1]));
        assert_eq!(e.len(), 2);
        assert!(e.coefficient(&s(vec![2])).is_one());
        let e = star_expand_signed(&s(vec![2, -1]));
        assert!(e.coefficient(&s(vec![-3])).is_one());
        assert!(e.coefficient(&s(vec![2, -1])).is_one());
    }

    #[test]
    fn stuffle_examples() {
        let k = Index::from([2, 3]);
        assert_eq!(stuffle(&Index::empty(), &k), sum(&[(&[2, 3], 1)]));
        assert_eq!(stuffle(&Index::from([1]), &Index::from([1])), sum(&[(&[1, 1], 2), (&[2], 1)]));
        assert_eq!(
            stuffle(&Index::from([2]), &Index::from([1])),
            sum(&[(&[2, 1], 1), (&[1, 2], 1), (&[3], 1)])
        );
    }

    #[test]
    fn circled_examples() {
        assert_eq!(circled_product(&Index::from([2]), &Index::from([1])).unwrap(), sum(&[(&[3], 1)]));
        assert_eq!(circled_product(&Index::from([1]), &Index::from([1])).unwrap(), sum(&[(&[2], 1)]));
        assert_eq!(
            circled_product(&Index::from([2, 1]), &Index::from([1, 1])).unwrap(),
            sum(&[(&[3, 1, 1], 2), (&[3, 2], 1)])
        );
        assert!(circled_product(&Index::empty(), &Index::from([1])).is_err());
    }

    #[test]
    fn transforms() {
        assert_eq!(index_transform_mj(&[1, 1, 1], 3).unwrap(), Index::from([1, 2, 2]));
        assert_eq!(index_transform_mj(&[1, 1, 1], 1).unwrap(), Index::from([1]));
        assert_eq!(index_transform_mj(&[2, 0], 2).unwrap(), Index::from([2, 1]));
        assert!(index_transform_mj(&[2, 0], 3).is_err());
        assert_eq!(rev_slice_plus(&[1, 2, 3], 1, 3, &[1, 1, 1]).unwrap(), Index::from([4, 3, 2]));
        assert_eq!(rev_slice_plus(&[1, 2, 3], 3, 2, &[]).unwrap(), Index::empty());
        assert_eq!(rev_slice_plus(&[1, 1], 1, 2, &[0, 2]).unwrap(), Index::from([3, 1]));
        assert!(rev_slice_plus(&[1, 1], 1, 2, &[0]).is_err());
    }

    #[test]
    fn ky_specializations() {
        // k = (1): ζ*(l_1 + 1, l_2, ...)
        let e = ky_expand(&Index::from([1]), &Index::from([1, 1])).unwrap();
        assert_eq!(e, star_expand(&Index::from([2, 1])));
        // l = (1): ζ(k_1 + 1, k_2, ...)
        let e = ky_expand(&Index::from([2, 1]), &Index::from([1])).unwrap();
        assert_eq!(e, sum(&[(&[3, 1], 1)]));
    }
}
