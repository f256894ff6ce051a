//! Binomial calculus on arbitrary-precision integers.
//!
//! The central object is the i-binomial expansion of a positive integer `n`,
//!
//! ```text
//! n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j),   n_i > n_{i-1} > ... > n_j >= j >= 1
//! ```
//!
//! together with the shift operator that adds the same integer `a` to every
//! top and bottom. Shifting by `+1` gives Macaulay's bound on the growth of a
//! Hilbert function; shifting by `-1` gives its inverse.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: &BigUint, k: usize) -> BigUint {
    let kk = BigUint::from(k);
    if &kk > n {
        return BigUint::zero();
    }
    // use the smaller of k and n - k when n is small enough to tell
    let k = match (n - &kk).to_usize() {
        Some(rest) if rest < k => rest,
        _ => k,
    };
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - BigUint::from(j);
        acc /= BigUint::from(j + 1);
    }
    acc
}

/// `C(n, k)` for machine-sized arguments.
pub fn binomial_u(n: usize, k: usize) -> BigUint {
    binomial(&BigUint::from(n), k)
}

/// `N(r, d) = C(r - 1 + d, d)`, the number of monomials of degree `d` in `r`
/// variables.
///
/// # Panics
///
/// Panics if `r == 0`.
pub fn dim_poly(r: usize, d: usize) -> BigUint {
    assert!(r >= 1, "dim_poly needs at least one variable");
    binomial_u(r - 1 + d, d)
}

/// One term `C(top, bottom)` of an i-binomial expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinTerm {
    pub top: BigUint,
    pub bottom: usize,
}

/// The unique i-binomial expansion of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinExpansion {
    degree: usize,
    terms: Vec<BinTerm>,
}

impl BinExpansion {
    /// Builds an expansion from explicit terms, checking every invariant.
    pub fn from_terms(degree: usize, terms: Vec<BinTerm>) -> Result<Self> {
        if degree == 0 || terms.is_empty() {
            return Err(Error::invalid(
                "expansion needs degree >= 1 and at least one term",
            ));
        }
        for (idx, term) in terms.iter().enumerate() {
            if term.bottom + idx != degree || term.bottom == 0 {
                return Err(Error::invalid("bottoms must run i, i-1, ..., j >= 1"));
            }
            if term.top < BigUint::from(term.bottom) {
                return Err(Error::invalid("every top must be at least its bottom"));
            }
            if idx > 0 && term.top >= terms[idx - 1].top {
                return Err(Error::invalid("tops must be strictly decreasing"));
            }
        }
        Ok(BinExpansion { degree, terms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[BinTerm] {
        &self.terms
    }

    /// Sum of the terms, i.e. the expanded integer.
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|t| binomial(&t.top, t.bottom)).sum()
    }

    /// `sum C(top + a, bottom + a)`, with `C(m, 0) = 1` for `m >= 0`.
    pub fn shift(&self, a: i64) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for term in &self.terms {
            let bottom = term.bottom as i64 + a;
            if bottom < 0 {
                return Err(Error::invalid(format!(
                    "shift by {a} makes bottom {} negative",
                    term.bottom
                )));
            }
            let top = BigInt::from(term.top.clone()) + a;
            if top.is_negative() {
                continue;
            }
            let top = top.magnitude();
            total += binomial(top, bottom as usize);
        }
        Ok(total)
    }
}

impl fmt::Display for BinExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, term) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str("+")?;
            }
            write!(f, "C({},{})", term.top, term.bottom)?;
        }
        Ok(())
    }
}

/// Largest `top >= bottom` with `C(top, bottom) <= n`. Requires `n >= 1`.
fn largest_top(n: &BigUint, bottom: usize) -> BigUint {
    let mut lo = BigUint::from(bottom);
    if bottom == 1 {
        return n.clone();
    }
    // gallop to an upper end that overshoots
    let mut step = BigUint::one();
    let mut hi = &lo + &step;
    while binomial(&hi, bottom) <= *n {
        lo = hi.clone();
        step <<= 1;
        hi = &lo + &step;
    }
    // invariant: C(lo) <= n < C(hi)
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if binomial(&mid, bottom) <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The i-binomial expansion of `n`, computed greedily.
pub fn expand(n: &BigUint, i: usize) -> Result<BinExpansion> {
    if n.is_zero() {
        return Err(Error::invalid(
            "the binomial expansion is defined only for n >= 1",
        ));
    }
    if i == 0 {
        return Err(Error::invalid("the expansion degree must be at least 1"));
    }
    let mut rest = n.clone();
    let mut terms = Vec::new();
    let mut bottom = i;
    while !rest.is_zero() {
        debug_assert!(bottom >= 1);
        let top = largest_top(&rest, bottom);
        rest -= binomial(&top, bottom);
        terms.push(BinTerm { top, bottom });
        bottom -= 1;
    }
    Ok(BinExpansion { degree: i, terms })
}

/// `((h)_(d))^{+1}_{+1}`: the largest value allowed in degree `d + 1` for a
/// Hilbert function with value `h` in degree `d`.
///
/// Returns 0 for `h == 0`.
///
/// # Panics
///
/// Panics if `d == 0`; growth out of degree 0 is unconstrained.
pub fn macaulay_growth(h: &BigUint, d: usize) -> BigUint {
    assert!(d >= 1, "Macaulay growth is defined from degree 1 on");
    if h.is_zero() {
        return BigUint::zero();
    }
    expand(h, d)
        .and_then(|e| e.shift(1))
        .expect("expansion of a positive integer with d >= 1")
}

/// `((a)_(b))^{-1}_{-1}`: the smallest `s` whose growth out of degree
/// `b - 1` reaches `a`.
pub fn macaulay_lower(a: &BigUint, b: usize) -> Result<BigUint> {
    if b < 2 {
        return Err(Error::invalid("the lower bound needs b >= 2"));
    }
    expand(a, b)?.shift(-1)
}
