//! Seeded constructions of inverse systems with prescribed shapes.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::form::{monomials, ExactRational, Form, Monomial};
use super::InverseSystem;
use crate::{Error, Result};

const COEFFICIENT_BOUND: i64 = 99;

fn random_on<R: Rng>(rng: &mut R, r: usize, d: usize, bound: i64, support: &[Monomial]) -> Form {
    let terms: Vec<_> = support
        .iter()
        .map(|m| {
            let c: i64 = rng.gen_range(-bound..=bound);
            (m.clone(), ExactRational::from_integer(c.into()))
        })
        .collect();
    Form::new(r, d, terms).expect("support has the right shape")
}

/// Dense form of degree `d` with integer coefficients drawn uniformly from
/// `[-bound, bound]`.
pub fn random_form_with<R: Rng>(rng: &mut R, r: usize, d: usize, bound: i64) -> Form {
    random_on(rng, r, d, bound, &monomials(r, d))
}

/// [`random_form_with`] on a ChaCha stream seeded with `seed`.
pub fn random_form(r: usize, d: usize, seed: u64, bound: i64) -> Form {
    random_form_with(&mut ChaCha8Rng::seed_from_u64(seed), r, d, bound)
}

/// `count` forms drawn one after another from a single seeded stream.
pub fn random_forms(r: usize, d: usize, count: usize, seed: u64, bound: i64) -> Vec<Form> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_form_with(&mut rng, r, d, bound))
        .collect()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `sum L^d` over the given linear forms, expanded with multinomial
/// coefficients.
pub fn power_sum(linear: &[Form], d: usize) -> Result<Form> {
    let first = linear
        .first()
        .ok_or_else(|| Error::invalid("power_sum needs at least one linear form"))?;
    let r = first.num_vars();
    if linear.iter().any(|l| l.degree() != 1 || l.num_vars() != r) {
        return Err(Error::invalid(
            "power_sum takes linear forms in a common ring",
        ));
    }
    let basis = monomials(r, d);
    let top = factorial(d as u32);
    let mut out = Form::zero(r, d);
    for l in linear {
        let a: Vec<ExactRational> = (0..r)
            .map(|j| {
                let mut e = vec![0; r];
                e[j] = 1;
                l.coefficient(&Monomial::new(e))
            })
            .collect();
        let terms = basis.iter().filter_map(|m| {
            let mut c = ExactRational::from_integer(top.clone());
            for (aj, &bj) in a.iter().zip(m.exponents()) {
                if bj > 0 {
                    if aj.is_zero() {
                        return None;
                    }
                    c = c * aj.clone().pow(bj) / factorial(bj);
                }
            }
            Some((m.clone(), c))
        });
        out = out.add(&Form::new(r, d, terms)?)?;
    }
    Ok(out)
}

/// `sum (P . y)^d` for points `P` in projective `r-1`-space.
pub fn point_power_sum(points: &[Vec<ExactRational>], d: usize) -> Result<Form> {
    let r = points
        .first()
        .ok_or_else(|| Error::invalid("need at least one point"))?
        .len();
    let linear = points
        .iter()
        .map(|p| {
            if p.len() != r {
                return Err(Error::invalid("points of different dimension"));
            }
            let terms = p.iter().enumerate().map(|(j, c)| {
                let mut e = vec![0; r];
                e[j] = 1;
                (Monomial::new(e), c.clone())
            });
            Form::new(r, 1, terms)
        })
        .collect::<Result<Vec<_>>>()?;
    power_sum(&linear, d)
}

/// `sum (y1 + t y2 + t^2 y3)^d` over the parameters `ts`: points on a conic.
pub fn conic_power_sum(ts: &[ExactRational], d: usize) -> Result<Form> {
    let points: Vec<_> = ts
        .iter()
        .map(|t| vec![ExactRational::one(), t.clone(), t * t])
        .collect();
    point_power_sum(&points, d)
}

/// Random form of degree `e` annihilated by the `s_p` largest degree-`p`
/// monomials in lex order, i.e. supported on monomials none of them divide.
pub fn lex_apolar_form<R: Rng>(
    rng: &mut R,
    r: usize,
    p: usize,
    s_p: usize,
    e: usize,
    bound: i64,
) -> Result<Form> {
    let gens = monomials(r, p);
    if s_p > gens.len() || p > e {
        return Err(Error::invalid("lex segment does not fit"));
    }
    let gens = &gens[..s_p];
    let support: Vec<Monomial> = monomials(r, e)
        .into_iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .collect();
    if support.is_empty() {
        return Err(Error::invalid("the lex segment kills every monomial"));
    }
    Ok(random_on(rng, r, e, bound, &support))
}

/// A single random form of degree `e`; generically its algebra is
/// compressed Gorenstein.
pub fn compressed_system(r: usize, e: usize, seed: u64) -> InverseSystem {
    InverseSystem::new(vec![random_form(r, e, seed, COEFFICIENT_BOUND)])
        .expect("a dense form with bounded coefficients is nonzero with overwhelming odds")
}

/// A form of degree `e` plus `s_p` random forms of degree `p`.
///
/// When `2p <= e` a generic form would already fill degree `p` with its own
/// derivatives, so the top form is drawn from the forms killed by a lex
/// segment of length `s_p` in degree `p`, leaving exactly `s_p` dimensions
/// for the extra generators.
pub fn generalized_compressed_system(
    r: usize,
    p: usize,
    s_p: usize,
    e: usize,
    seed: u64,
) -> Result<InverseSystem> {
    if p == 0 || p >= e || s_p == 0 {
        return Err(Error::invalid("need 1 <= p < e and s_p >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = if 2 * p <= e {
        lex_apolar_form(&mut rng, r, p, s_p, e, COEFFICIENT_BOUND)?
    } else {
        random_form_with(&mut rng, r, e, COEFFICIENT_BOUND)
    };
    let mut gens = vec![top];
    for _ in 0..s_p {
        gens.push(random_form_with(&mut rng, r, p, COEFFICIENT_BOUND));
    }
    InverseSystem::new(gens.into_iter().filter(|f| !f.is_zero()).collect())
}
