/// All `(i_1, ..., i_parts)` with nonnegative entries summing to `total`,
/// in descending lexicographic order.
pub fn compositions(total: u32, parts: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
    } else {
        let mut cur = Vec::with_capacity(parts);
        fill_compositions(total, parts, &mut cur, &mut out);
    }
    out.into_iter()
}

fn fill_compositions(rem: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slots == 1 {
        cur.push(rem);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for v in (0..=rem).rev() {
        cur.push(v);
        fill_compositions(rem - v, slots - 1, cur, out);
        cur.pop();
    }
}

/// All `(c_1, ..., c_p)` with `c_1 + 2 c_2 + ... + p c_p = p`, in descending
/// lexicographic order. `p = 0` yields the single empty tuple.
pub fn c_partitions(p: u32) -> impl Iterator<Item = Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p as usize);
    fill_partitions(p, 1, p, &mut cur, &mut out);
    out.into_iter()
}

fn fill_partitions(rem: u32, j: u32, p: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if j > p {
        if rem == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for c in (0..=rem / j).rev() {
        cur.push(c);
        fill_partitions(rem - c * j, j + 1, p, cur, out);
        cur.pop();
    }
}

/// Every index (as raw parts) of the given weight, in descending lexicographic order.
pub fn indices_of_weight(weight: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for first in (1..=rem).rev() {
            cur.push(first);
            rec(rem - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weight > 0 {
        rec(weight, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_examples() {
        assert_eq!(compositions(1, 2).collect::<Vec<_>>(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(compositions(2, 2).collect::<Vec<_>>(), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(3, 3).count(), 10);
        assert_eq!(compositions(0, 3).collect::<Vec<_>>(), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(0, 0).count(), 1);
        assert_eq!(compositions(2, 0).count(), 0);
    }

    #[test]
    fn composition_counts_match_binomials() {
        for total in 0..6u32 {
            for parts in 1..5usize {
                let n = (total as usize + parts - 1) as u64;
                let k = (parts - 1) as u64;
                let binom = (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(compositions(total, parts).count() as u64, binom);
            }
        }
    }

    #[test]
    fn partition_examples() {
        assert_eq!(c_partitions(2).collect::<Vec<_>>(), vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(c_partitions(3).collect::<Vec<_>>(), vec![vec![3, 0, 0], vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(c_partitions(5).count(), 7);
        let counts: Vec<usize> = (1..=10).map(|p| c_partitions(p).count()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn weight_enumeration() {
        assert_eq!(indices_of_weight(3), vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(indices_of_weight(7).len(), 64);
    }
}
