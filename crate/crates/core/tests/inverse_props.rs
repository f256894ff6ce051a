use artinian::bounds::{fl_bound, refined_bound};
use artinian::hvec::{compare, is_o_sequence, is_symmetric, Dominance};
use artinian::inverse::rank::rank;
use artinian::inverse::{
    compressed_system, format_forms, generalized_compressed_system, parse_forms, random_form,
    random_forms, ExactRational, Form, InverseSystem, Monomial,
};
use artinian::{PairRS, SocleVector};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Textbook Gauss-Jordan over the rationals.
#[allow(clippy::needless_range_loop)]
fn naive_rank(mut m: Vec<Vec<ExactRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for j in 0..cols {
            m[rank][j] = &m[rank][j] / &pivot;
        }
        for i in 0..rows {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = &m[rank][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}

/// Random `rows x cols` matrix of rank at most `k`, as a product of two
/// random factors with small rational entries.
fn low_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, k: usize) -> Vec<Vec<ExactRational>> {
    let mut entry = || q(rng.gen_range(-4..=4), rng.gen_range(1..=3));
    let a: Vec<Vec<_>> = (0..rows)
        .map(|_| (0..k).map(|_| entry()).collect())
        .collect();
    let b: Vec<Vec<_>> = (0..k)
        .map(|_| (0..cols).map(|_| entry()).collect())
        .collect();
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..k).fold(ExactRational::zero(), |acc, t| acc + &a[i][t] * &b[t][j]))
                .collect()
        })
        .collect()
}

#[test]
fn rank_matches_naive_elimination() {
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    for trial in 0..40 {
        let rows = rng.gen_range(1..=60);
        let cols = rng.gen_range(1..=60);
        let k = rng.gen_range(0..=rows.min(cols));
        let mut m = if trial % 4 == 0 {
            (0..rows)
                .map(|_| (0..cols).map(|_| q(rng.gen_range(-1..=1), 1)).collect())
                .collect()
        } else {
            low_rank(&mut rng, rows, cols, k)
        };
        if trial % 5 == 0 {
            // a few zero columns force the pivot search to skip
            for row in m.iter_mut() {
                row[0] = ExactRational::zero();
            }
        }
        assert_eq!(
            rank(&m),
            naive_rank(m.clone()),
            "trial {trial}: {rows}x{cols}"
        );
    }
    let full = low_rank(&mut rng, 60, 60, 60);
    assert_eq!(rank(&full), naive_rank(full.clone()));
}

#[test]
fn gorenstein_duality_on_seeded_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for seed in 0..50u64 {
        let r = rng.gen_range(1..=4);
        let e = rng.gen_range(0..=8);
        let bound = *[1i64, 3, 99].get(seed as usize % 3).unwrap();
        let f = random_form(r, e, seed, bound);
        if f.is_zero() {
            continue;
        }
        let m = InverseSystem::new(vec![f]).unwrap();
        for d in 0..=e {
            assert_eq!(
                m.graded_piece_dim(d),
                m.graded_piece_dim(e - d),
                "seed {seed} d={d}"
            );
        }
        let h = m.hvector();
        assert!(is_symmetric(&h));
        assert!(is_o_sequence(&h), "{h}");
    }
}

#[test]
fn sparse_forms_give_o_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..30 {
        let r = rng.gen_range(2..=4);
        let mut gens = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let d = rng.gen_range(1..=6);
            let terms: Vec<_> = (0..3)
                .map(|_| {
                    let mut e = vec![0u32; r];
                    for _ in 0..d {
                        e[rng.gen_range(0..r)] += 1;
                    }
                    (Monomial::new(e), q(rng.gen_range(1..=5), 1))
                })
                .collect();
            gens.push(Form::new(r, d, terms).unwrap());
        }
        let m = InverseSystem::new(gens).unwrap();
        let h = m.hvector();
        assert!(is_o_sequence(&h), "{h}");
        if let Ok(s) = m.socle() {
            let e = h.socle_degree();
            assert!(!s.entries()[e].is_zero());
            assert_eq!(e, m.top_degree());
        }
    }
}

#[test]
fn added_generators_change_only_degree_p() {
    let base = compressed_system(3, 7, 4);
    let before = base.hvector();
    for p in 1..7usize {
        let extra = random_forms(3, p, 2, p as u64, 99);
        let after = base.add_generators(&extra).unwrap().hvector();
        for i in p + 1..=7 {
            assert_eq!(after[i], before[i]);
        }
        // forms outside the current span, by a direct rank count
        let basis = artinian::inverse::monomials(3, p);
        let mut rows: Vec<Vec<ExactRational>> = Vec::new();
        for alpha in artinian::inverse::monomials(3, 7 - p) {
            let d = base.generators()[0].derivative(&alpha).unwrap();
            rows.push(basis.iter().map(|m| d.coefficient(m)).collect());
        }
        let old = rank(&rows);
        rows.extend(
            extra
                .iter()
                .map(|f| basis.iter().map(|m| f.coefficient(m)).collect()),
        );
        let new_dims = rank(&rows) - old;
        assert_eq!(&after[p] - &before[p], (new_dims as u64).into(), "p={p}");
    }
}

#[test]
fn witnesses_stay_below_both_bounds() {
    for r in [3usize, 4] {
        for e in 2..=7 {
            for p in 1..e {
                for s in 1..r {
                    let m = generalized_compressed_system(r, p, s, e, 0).unwrap();
                    let h = m.hvector();
                    let pair = PairRS::new(r, m.socle().unwrap()).unwrap();
                    for bound in [fl_bound(&pair), refined_bound(&pair).unwrap()] {
                        let dom = compare(&bound, &h).unwrap();
                        assert!(
                            matches!(dom, Dominance::Equal | Dominance::Dominates),
                            "{h} vs {bound}"
                        );
                    }
                }
            }
        }
    }
}

/// A generic top form fills degree `p` by itself when `2p <= e`, so extra
/// degree-`p` generators are redundant and the socle collapses.
#[test]
fn plain_generic_top_form_misses_the_socle() {
    for (r, p, s, e) in [(3usize, 1usize, 1usize, 2usize), (3, 2, 1, 6), (4, 3, 2, 8)] {
        let mut gens = vec![random_form(r, e, 1, 99)];
        gens.extend(random_forms(r, p, s, 2, 99));
        let m = InverseSystem::new(gens).unwrap();
        let mut gorenstein = vec![0u64; e + 1];
        gorenstein[e] = 1;
        assert_eq!(
            m.socle().unwrap(),
            SocleVector::from_u64s(&gorenstein).unwrap(),
            "r={r} p={p} e={e}"
        );
        assert_ne!(
            m.socle().unwrap(),
            SocleVector::two_entry(p, s as u64, e).unwrap()
        );
    }
}

fn form_strategy() -> impl Strategy<Value = Form> {
    (1usize..=4, 0usize..=5).prop_flat_map(|(r, d)| {
        let n = artinian::inverse::monomials(r, d).len();
        proptest::collection::vec((-20i64..=20, 1i64..=9), n).prop_map(move |cs| {
            let basis = artinian::inverse::monomials(r, d);
            let terms = basis.into_iter().zip(cs).map(|(m, (a, b))| (m, q(a, b)));
            Form::new(r, d, terms).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_round_trip(f in form_strategy()) {
        prop_assume!(!f.is_zero());
        let text = f.to_string();
        let back: Form = text.parse().unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
        let file = format_forms(&[f.clone(), f.clone()]);
        prop_assert_eq!(parse_forms(&file).unwrap(), vec![f.clone(), f]);
    }

    #[test]
    fn partials_commute(f in form_strategy(), i in 0usize..4, j in 0usize..4) {
        let r = f.num_vars();
        prop_assume!(i < r && j < r);
        let a = f.differentiate(i).unwrap().differentiate(j).unwrap();
        let b = f.differentiate(j).unwrap().differentiate(i).unwrap();
        prop_assert_eq!(&a, &b);
        if f.degree() >= 2 {
            let mut e = vec![0u32; r];
            e[i] += 1;
            e[j] += 1;
            prop_assert_eq!(f.derivative(&Monomial::new(e)).unwrap(), a);
        }
    }

    #[test]
    fn euler_identity(f in form_strategy()) {
        // sum y_i dF/dy_i = deg(F) F
        let r = f.num_vars();
        let mut acc = Form::zero(r, f.degree());
        for i in 0..r {
            let yi = Form::variable(r, i).unwrap();
            let term = yi.mul(&f.differentiate(i).unwrap()).unwrap();
            if f.degree() > 0 {
                acc = acc.add(&term).unwrap();
            }
        }
        let want = f.scale(&ExactRational::from_integer((f.degree() as i64).into()));
        prop_assert_eq!(acc, want);
    }
}
