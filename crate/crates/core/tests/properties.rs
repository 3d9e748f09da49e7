use mzvlab::index_algebra::{
    admissible, circled_product, hoffman_dual, star_expand, star_expand_signed, stuffle, stuffle_sums,
    FormalIndexSum,
};
use mzvlab::series::{amzsv, amzv, kyzv, mhs, mhss, mzv_direct};
use mzvlab::values::zeta;
use mzvlab::word::mzv_holder;
use mzvlab::{HpReal, Index, PrecisionConfig, Rational, SignedIndex};
use proptest::prelude::*;

fn index(max_depth: usize, max_part: u32) -> impl Strategy<Value = Index> {
    prop::collection::vec(1..=max_part, 1..=max_depth).prop_map(|v| Index::new(v).unwrap())
}

fn small_index(max_weight: u32) -> impl Strategy<Value = Index> {
    index(max_weight as usize, max_weight).prop_filter("weight", move |k| k.weight() <= max_weight)
}

fn as_sum(k: &Index) -> FormalIndexSum {
    FormalIndexSum::single(k.clone())
}

proptest! {
    #[test]
    fn dual_is_weight_preserving_involution(k in index(12, 4)) {
        let d = hoffman_dual(&k).unwrap();
        prop_assert_eq!(d.weight(), k.weight());
        prop_assert_eq!(hoffman_dual(&d).unwrap(), k);
    }

    #[test]
    fn stuffle_commutes(a in small_index(6), b in small_index(6)) {
        prop_assert_eq!(stuffle(&a, &b), stuffle(&b, &a));
    }

    #[test]
    fn stuffle_associates(a in small_index(4), b in small_index(4), c in small_index(4)) {
        let left = stuffle_sums(&stuffle(&a, &b), &as_sum(&c));
        let right = stuffle_sums(&as_sum(&a), &stuffle(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_expansion_shape(k in index(9, 5)) {
        let e = star_expand(&k);
        prop_assert_eq!(e.len(), 1usize << (k.depth() - 1));
        for (t, c) in e.iter() {
            prop_assert_eq!(t.weight(), k.weight());
            prop_assert_eq!(c.clone(), Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn circled_product_prepends_summed_heads(a in small_index(5), b in small_index(5)) {
        let got = circled_product(&a, &b).unwrap();
        let head = a.first().unwrap() + b.first().unwrap();
        let want = stuffle(&a.tail(), &b.tail()).map_keys(|t| t.prepend(head));
        prop_assert_eq!(got, want);
    }
}

#[test]
fn star_sums_match_expansion_exactly() {
    for w in 1..=6 {
        for parts in mzvlab::index_algebra::indices_of_weight(w) {
            let k = Index::new(parts).unwrap();
            let e = star_expand(&k);
            for n in 0..=30 {
                let want: Rational = e.iter().map(|(t, c)| c * mhs(n, t)).sum();
                assert_eq!(mhss(n, &k), want, "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn stuffle_holds_numerically() {
    let cfg = PrecisionConfig::default();
    let pairs = [([2u32].as_slice(), [2u32].as_slice()), (&[3, 1], &[2]), (&[2, 1], &[2, 1])];
    for (a, b) in pairs {
        let (a, b) = (Index::from(a), Index::from(b));
        let lhs = &zeta(&a, &cfg).unwrap() * &zeta(&b, &cfg).unwrap();
        let rhs = mzvlab::values::zeta_combination(&stuffle(&a, &b), &cfg).unwrap();
        assert!((&lhs.value - &rhs.value).abs().to_f64() < 1e-30, "{a} * {b}");
    }
}

#[test]
fn signed_star_expansion_matches_numerically() {
    let cfg = PrecisionConfig::default().with_max_terms(20_000);
    for parts in [vec![-2], vec![2, -1], vec![-2, 1], vec![-1, 2], vec![3, -1, 1], vec![-2, -1, -1]] {
        let s = SignedIndex::new(parts).unwrap();
        let star = amzsv(&s, &cfg).unwrap();
        let mut acc = cfg.zero();
        let mut bound = star.bound.clone();
        for (t, c) in star_expand_signed(&s).iter() {
            let v = amzv(t, &cfg).unwrap();
            acc += v.value * cfg.rational(c);
            bound += v.bound;
        }
        let diff = (&star.value - &acc).abs();
        assert!(diff <= bound.max(HpReal::from_f64(1e-30, cfg.bits())), "{s}: {}", diff.to_sci(3));
    }
}

#[test]
fn ky_specializations() {
    let cfg = PrecisionConfig::default().with_max_terms(100_000);
    for w in 1..=4 {
        for parts in mzvlab::index_algebra::indices_of_weight(w) {
            let k = Index::new(parts).unwrap();
            let one = Index::from([1]);
            let z = zeta(&k.tail().prepend(k.first().unwrap() + 1), &cfg).unwrap();
            let a = kyzv(&k, &one, &cfg).unwrap();
            assert!((&a.value - &z.value).abs().to_f64() < 1e-8, "ζ({k} ⊛ (1)★)");
            let zs = mzvlab::values::zeta_star(&k.tail().prepend(k.first().unwrap() + 1), &cfg).unwrap();
            let b = kyzv(&one, &k, &cfg).unwrap();
            assert!((&b.value - &zs.value).abs().to_f64() < 1e-8, "ζ((1) ⊛ {k}★)");
        }
    }
}

#[test]
fn backends_agree_to_weight_five() {
    let cfg = PrecisionConfig::default().with_max_terms(20_000);
    for w in 2..=5 {
        for parts in mzvlab::index_algebra::indices_of_weight(w) {
            let k = Index::new(parts).unwrap();
            if !admissible(&k) {
                continue;
            }
            let h = mzv_holder(&k, &cfg).unwrap();
            let d = mzv_direct(&k, &cfg).unwrap();
            assert!((&h.value - &d.value).abs() <= d.bound, "{k}");
        }
    }
}
