use artinian::gorenstein::{
    ci_check, enumerate_gorenstein3, si_max_growth, stanley_check, unbounded_caps, Caps,
};
use artinian::hvec::{
    compare, first_difference, is_differentiable, is_o_sequence, maximal_elements, Dominance,
};
use artinian::HVector;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn hv(v: &[u64]) -> HVector {
    HVector::from_u64s(v).unwrap()
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Macaulay growth from a `u64` greedy expansion.
fn growth(h: u64, d: u64) -> u64 {
    let (mut rest, mut k, mut total) = (h, d, 0);
    while rest > 0 && k > 0 {
        let mut top = k;
        while choose(top + 1, k) <= rest {
            top += 1;
        }
        rest -= choose(top, k);
        total += choose(top + 1, k + 1);
        k -= 1;
    }
    total
}

fn o_seq(h: &[u64]) -> bool {
    (1..h.len().saturating_sub(1)).all(|d| h[d + 1] <= growth(h[d], d as u64))
}

fn vectors(len: usize, max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![1u64]];
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn o_sequence_matches_u64_oracle() {
    for v in vectors(5, 10) {
        assert_eq!(is_o_sequence(&hv(&v)), o_seq(&v), "{v:?}");
    }
}

#[test]
fn differentiable_implies_o_sequence() {
    for len in 1..=6 {
        for v in vectors(len, 12) {
            let h = hv(&v);
            if is_differentiable(&h) {
                assert!(is_o_sequence(&h), "{v:?}");
            }
        }
    }
}

#[test]
fn worked_non_differentiable_half() {
    let half = hv(&[1, 4, 10, 16, 25]);
    assert!(!is_differentiable(&half));
    let diff: Vec<i64> = first_difference(&half)
        .iter()
        .map(|x| i64::try_from(x).unwrap())
        .collect();
    assert_eq!(diff, vec![1, 3, 6, 6, 9]);
    assert!(!is_o_sequence(&hv(&[1, 3, 6, 6, 9])));
}

/// Brute force: symmetric vectors with `h_1 <= 3` within the caps whose
/// first half is differentiable.
fn brute_gorenstein(e: usize, caps: &[Option<u64>]) -> Vec<HVector> {
    let half = e / 2;
    let cap = |i: usize| {
        let c = [caps[i], caps[e - i]].into_iter().flatten().min();
        c.unwrap_or(15).min(15)
    };
    let mut halves = vec![vec![1u64]];
    for i in 1..=half {
        let top = if i == 1 { cap(1).min(3) } else { cap(i) };
        halves = halves
            .into_iter()
            .flat_map(|v| {
                (1..=top).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    let mut out: Vec<HVector> = halves
        .into_iter()
        .filter(|v| {
            let d: Vec<i64> = std::iter::once(1)
                .chain(v.windows(2).map(|w| w[1] as i64 - w[0] as i64))
                .collect();
            d.iter().all(|&x| x >= 0) && o_seq(&d.iter().map(|&x| x as u64).collect::<Vec<_>>())
        })
        .map(|v| hv(&(0..=e).map(|i| v[i.min(e - i)]).collect::<Vec<_>>()))
        .collect();
    out.sort();
    out
}

#[test]
fn enumerator_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for e in 0..=8usize {
        for trial in 0..6 {
            let caps: Vec<Option<u64>> = (0..=e)
                .map(|_| {
                    if trial == 0 {
                        Some(15)
                    } else {
                        rng.gen_bool(0.4).then(|| rng.gen_range(1..=15))
                    }
                })
                .collect();
            let mut big: Caps = caps.iter().map(|c| c.map(BigUint::from)).collect();
            // the brute force stops at 15; so does the enumerator
            for c in big.iter_mut() {
                if c.is_none() {
                    *c = Some(BigUint::from(15u32));
                }
            }
            let got = enumerate_gorenstein3(e, &big).unwrap();
            assert_eq!(got, brute_gorenstein(e, &caps), "e={e} caps={caps:?}");
            for h in &got {
                assert!(stanley_check(h).unwrap());
                let v = h.entries();
                let peak = v.iter().position(|x| x == v.iter().max().unwrap()).unwrap();
                assert!(
                    v[..=peak].windows(2).all(|w| w[0] <= w[1]),
                    "not unimodal: {h}"
                );
                assert!(
                    v[peak..].windows(2).all(|w| w[0] >= w[1]),
                    "not unimodal: {h}"
                );
            }
        }
    }
    assert_eq!(
        enumerate_gorenstein3(6, &unbounded_caps(6)).unwrap().len(),
        brute_gorenstein(6, &[None; 7]).len()
    );
}

#[test]
fn max_growth_matches_downward_scan() {
    for len in 2..=5 {
        for v in vectors(len, 9) {
            let h = hv(&v);
            if !is_differentiable(&h) {
                continue;
            }
            let mut x = 200u64;
            loop {
                let mut w = v.clone();
                w.push(x);
                if is_differentiable(&hv(&w)) {
                    break;
                }
                x -= 1;
            }
            assert_eq!(si_max_growth(&h).unwrap(), BigUint::from(x), "{v:?}");
        }
    }
    assert_eq!(
        si_max_growth(&hv(&[1, 3, 6, 7])).unwrap(),
        BigUint::from(8u32)
    );
}

#[test]
fn ci_agrees_with_stanley_in_three_variables() {
    for e in 0..=7 {
        for h in enumerate_gorenstein3(e, &unbounded_caps(e)).unwrap() {
            assert!(ci_check(&h));
        }
    }
}

fn hvec_strategy(len: usize) -> impl Strategy<Value = HVector> {
    proptest::collection::vec(1u64..6, len).prop_map(|mut v| {
        v[0] = 1;
        HVector::from_u64s(&v).unwrap()
    })
}

proptest! {
    #[test]
    fn order_is_antisymmetric(a in hvec_strategy(5), b in hvec_strategy(5)) {
        let ab = compare(&a, &b).unwrap();
        let ba = compare(&b, &a).unwrap();
        let flipped = match ab {
            Dominance::Dominates => Dominance::DominatedBy,
            Dominance::DominatedBy => Dominance::Dominates,
            other => other,
        };
        prop_assert_eq!(ba, flipped);
        prop_assert_eq!(ab == Dominance::Equal, a == b);
    }

    #[test]
    fn order_is_transitive(a in hvec_strategy(4), b in hvec_strategy(4), c in hvec_strategy(4)) {
        let ge = |x: &HVector, y: &HVector| matches!(compare(x, y).unwrap(), Dominance::Equal | Dominance::Dominates);
        if ge(&a, &b) && ge(&b, &c) {
            prop_assert!(ge(&a, &c));
        }
    }

    #[test]
    fn frontier_matches_filter(set in proptest::collection::vec(hvec_strategy(4), 0..25)) {
        let got = maximal_elements(&set).unwrap();
        let mut want: Vec<HVector> = set
            .iter()
            .filter(|h| !set.iter().any(|g| compare(g, h).unwrap() == Dominance::Dominates))
            .cloned()
            .collect();
        want.sort();
        want.dedup();
        prop_assert_eq!(&got, &want);
        for h in &set {
            prop_assert!(got.iter().any(|g| matches!(compare(g, h).unwrap(), Dominance::Equal | Dominance::Dominates)));
        }
    }
}

#[test]
fn mixed_lengths_are_rejected() {
    assert!(compare(&hv(&[1, 2]), &hv(&[1, 2, 1])).is_err());
    assert!(maximal_elements(&[hv(&[1, 2]), hv(&[1])]).is_err());
}
