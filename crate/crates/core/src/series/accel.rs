//! Tail acceleration and tail bounds.

use crate::precision::HpReal;

/// Smallest cutoff used as an extrapolation node.
pub const MIN_NODE: u64 = 64;

/// Node spacing ratio for extrapolation (`2^{1/4}`).
const NODE_RATIO: f64 = 1.189_207_115_002_721;

/// Largest number of asymptotic orders fitted.
const MAX_ORDERS: usize = 6;

/// Even cutoffs `n_max, n_max / r, n_max / r^2, ...` down to [`MIN_NODE`],
/// ascending. Even nodes keep alternating partial sums on one branch.
pub fn node_schedule(n_max: u64) -> Vec<u64> {
    let mut nodes = Vec::new();
    let mut x = n_max as f64;
    while x >= MIN_NODE as f64 {
        let n = (x as u64) & !1;
        if nodes.last() != Some(&n) {
            nodes.push(n);
        }
        x /= NODE_RATIO;
    }
    nodes.reverse();
    nodes
}

/// Sums `term(1..=n_max)` and records the partial sum at each node.
pub fn partial_sums_at(
    nodes: &[u64],
    zero: HpReal,
    mut term: impl FnMut(u64) -> HpReal,
) -> Vec<(u64, HpReal)> {
    let n_max = nodes.last().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(nodes.len());
    let mut s = zero;
    let mut next = 0;
    for n in 1..=n_max {
        s += term(n);
        if nodes.get(next) == Some(&n) {
            out.push((n, s.clone()));
            next += 1;
        }
    }
    out
}

/// Result of fitting the partial-sum asymptotics.
#[derive(Clone, Debug)]
pub struct Extrapolated {
    pub value: HpReal,
    /// `|E_K - E_{K-1}|` for the two highest fitted orders.
    pub estimate: HpReal,
    pub orders: usize,
}

/// Fits `S(N) = E + Σ_{i<K} Σ_{p<=d} c_{ip} N^{-(α0+i)} log^p N` to the
/// largest nodes and returns `E` for the highest `K` the nodes allow.
pub fn extrapolate(partials: &[(u64, HpReal)], alpha0: f64, log_degree: usize) -> Extrapolated {
    let last = partials.last().expect("at least one partial sum");
    let raw = last.1.clone();
    let mut prev = raw.clone();
    let mut best = Extrapolated { value: raw.clone(), estimate: HpReal::zero(raw.prec()), orders: 0 };
    let per_order = log_degree + 1;
    for k in 1..=MAX_ORDERS {
        let m = 1 + k * per_order;
        if m > partials.len() {
            break;
        }
        let Some(e) = fit(&partials[partials.len() - m..], alpha0, k, log_degree, last.0) else {
            break;
        };
        best = Extrapolated { estimate: (&e - &prev).abs(), value: e.clone(), orders: k };
        prev = e;
    }
    if best.orders == 0 {
        best.estimate = HpReal::from_f64(f64::INFINITY, raw.prec());
    }
    best
}

fn fit(pts: &[(u64, HpReal)], alpha0: f64, k: usize, d: usize, n_ref: u64) -> Option<HpReal> {
    let m = pts.len();
    let prec = pts[0].1.prec();
    let nref = HpReal::from_i64(n_ref as i64, prec);
    let mut a: Vec<Vec<HpReal>> = Vec::with_capacity(m);
    for (n, s) in pts {
        let x = HpReal::from_i64(*n as i64, prec) / &nref;
        let l = x.ln();
        let mut row = Vec::with_capacity(m + 1);
        row.push(HpReal::one(prec));
        for i in 0..k {
            let e = HpReal::from_f64(-(alpha0 + i as f64), prec);
            let base = x.powf(&e);
            let mut lp = HpReal::one(prec);
            for _ in 0..=d {
                row.push(&base * &lp);
                lp = &lp * &l;
            }
        }
        row.push(s.clone());
        a.push(row);
    }
    let sol = gauss_solve(a)?;
    Some(sol[0].clone())
}

/// Solves the augmented square system by elimination with partial pivoting.
pub(crate) fn gauss_solve(mut a: Vec<Vec<HpReal>>) -> Option<Vec<HpReal>> {
    let m = a.len();
    for col in 0..m {
        let pivot = (col..m).max_by(|&i, &j| {
            a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].is_zero() {
            return None;
        }
        a.swap(col, pivot);
        for row in col + 1..m {
            let f = &a[row][col] / &a[col][col];
            if f.is_zero() {
                continue;
            }
            let (upper, lower) = a.split_at_mut(row);
            for (dst, src) in lower[0][col..=m].iter_mut().zip(&upper[col][col..=m]) {
                *dst -= &f * src;
            }
        }
    }
    let mut x = vec![HpReal::zero(a[0][0].prec()); m];
    for row in (0..m).rev() {
        let mut acc = a[row][m].clone();
        for c in row + 1..m {
            acc -= &a[row][c] * &x[c];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

/// Repeated pairwise averaging of partial sums of an alternating series.
/// Returns the final average and the spread of the last two entries.
pub fn euler_transform(partials: &[HpReal], passes: usize) -> (HpReal, HpReal) {
    assert!(partials.len() > passes + 1, "not enough partial sums for {passes} passes");
    let mut row = partials.to_vec();
    for _ in 0..passes {
        row = row.windows(2).map(|w| (&w[0] + &w[1]) / 2).collect();
    }
    let n = row.len();
    let estimate = (&row[n - 1] - &row[n - 2]).abs();
    (row[n - 1].clone(), estimate)
}

/// Rigorous bound for `Σ_{n>N} (1 + ln n)^a n^{-s}` with `s > 1`:
/// the integral from `N` plus the largest term on `[N, ∞)`.
pub fn tail_integral(n: u64, s: &HpReal, a: u32) -> HpReal {
    let prec = s.prec();
    let one = HpReal::one(prec);
    let sm1 = s - &one;
    assert!(sm1 > 0, "tail integral needs s > 1");
    let nn = HpReal::from_i64(n as i64, prec);
    let l1 = nn.ln() + &one;
    // ∫_N^∞ (1 + ln t)^a t^{-s} dt = N^{1-s} Σ_j a!/(a-j)! (1 + ln N)^{a-j} / (s-1)^{j+1}
    let mut sum = HpReal::zero(prec);
    let mut falling = HpReal::one(prec);
    let mut sm1_pow = sm1.clone();
    for j in 0..=a {
        let term = &falling * &l1.powi((a - j) as i32) / &sm1_pow;
        sum += term;
        falling *= (a - j) as i64;
        sm1_pow = &sm1_pow * &sm1;
    }
    let integral = nn.powf(&(-&sm1)) * sum;
    // The integrand peaks at 1 + ln t = a / s.
    let peak = HpReal::from_i64(a as i64, prec) / s;
    let t0 = if l1 >= peak { nn } else { (peak - &one).exp() };
    let fmax = (t0.ln() + &one).powi(a as i32) * t0.powf(&(-s));
    integral + fmax
}

/// `b_n = C(2n, n) / 4^n` via `b_n = b_{n-1} (2n - 1) / (2n)`.
#[derive(Clone, Debug)]
pub struct CentralBinomial {
    b: HpReal,
    n: u64,
}

impl CentralBinomial {
    pub fn new(prec: u32) -> Self {
        CentralBinomial { b: HpReal::one(prec), n: 0 }
    }

    pub fn advance(&mut self) -> &HpReal {
        self.n += 1;
        self.b = &self.b * (2 * self.n - 1) as i64 / (2 * self.n) as i64;
        &self.b
    }

    pub fn value(&self) -> &HpReal {
        &self.b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::bits_for_digits;

    #[test]
    fn schedule_is_even_and_ascending() {
        let nodes = node_schedule(100_000);
        assert_eq!(*nodes.last().unwrap(), 100_000);
        assert!(nodes.iter().all(|n| n % 2 == 0 && *n >= MIN_NODE));
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(nodes.len() > 30);
    }

    #[test]
    fn extrapolates_basel_sum() {
        let prec = bits_for_digits(40);
        let nodes = node_schedule(20_000);
        let parts = partial_sums_at(&nodes, HpReal::zero(prec), |n| {
            HpReal::one(prec) / HpReal::from_i64((n * n) as i64, prec)
        });
        let e = extrapolate(&parts, 1.0, 0);
        let exact = HpReal::pi(prec).powi(2) / 6;
        let err = (e.value - exact).abs().to_f64();
        assert!(err < 1e-25, "error {err}");
    }

    #[test]
    fn euler_transform_alternating_harmonic() {
        let prec = bits_for_digits(40);
        let mut s = HpReal::zero(prec);
        let mut partials = Vec::new();
        for n in 1..=160i64 {
            let t = HpReal::one(prec) / HpReal::from_i64(n, prec);
            if n % 2 == 1 {
                s += t;
            } else {
                s -= t;
            }
            partials.push(s.clone());
        }
        let (v, est) = euler_transform(&partials, 68);
        let err = (v - HpReal::ln2(prec)).abs().to_f64();
        assert!(err < 1e-30, "error {err}");
        assert!(est.to_f64() < 1e-25);
    }

    #[test]
    fn tail_integral_dominates_tail() {
        let prec = bits_for_digits(30);
        for (s, a) in [(2i64, 0u32), (2, 2), (3, 1)] {
            let n0 = 1000u64;
            let mut tail = HpReal::zero(prec);
            for n in n0 + 1..=200_000 {
                let nn = HpReal::from_i64(n as i64, prec);
                tail += (nn.ln() + 1i64).powi(a as i32) / nn.powi(s as i32);
            }
            let bound = tail_integral(n0, &HpReal::from_i64(s, prec), a);
            assert!(bound > tail);
            assert!(bound.to_f64() < 3.0 * tail.to_f64() + 1e-6);
        }
    }

    #[test]
    fn central_binomial_recurrence() {
        let mut b = CentralBinomial::new(bits_for_digits(20));
        assert_eq!(b.advance().to_f64(), 0.5);
        assert_eq!(b.advance().to_f64(), 0.375);
        assert_eq!(b.advance().to_f64(), 0.3125);
    }
}
