//! Gorenstein h-vectors.
//!
//! In three variables a vector is a Gorenstein h-vector exactly when it is
//! symmetric and its first half `(h_0, ..., h_{e/2})` is differentiable (an
//! SI-sequence). In more variables the same shape is sufficient but not
//! necessary.

use num_bigint::BigUint;
use num_traits::One;

use crate::binom::macaulay_growth;
use crate::hvec::{is_differentiable, is_symmetric, HVector};
use crate::{Error, Result};

fn is_si_sequence(h: &HVector) -> bool {
    is_symmetric(h) && is_differentiable(&h.prefix(h.socle_degree() / 2))
}

/// Exact Gorenstein test for `h_1 <= 3`.
pub fn stanley_check(h: &HVector) -> Result<bool> {
    if h.len() > 1 && h[1] > BigUint::from(3u32) {
        return Err(Error::invalid(
            "the exact characterization needs h_1 <= 3; use ci_check instead",
        ));
    }
    Ok(is_si_sequence(h))
}

/// Sufficient Gorenstein test in any number of variables. A `false` answer
/// is conclusive only when `h_1 <= 3`.
pub fn ci_check(h: &HVector) -> bool {
    is_si_sequence(h)
}

/// Largest value that can be appended to a differentiable prefix while
/// keeping it differentiable: `h_k + ((h_k - h_{k-1})_(k))^{+1}_{+1}`.
pub fn si_max_growth(prefix: &HVector) -> Result<BigUint> {
    if prefix.len() < 2 {
        return Err(Error::invalid("need a prefix of length at least 2"));
    }
    if !is_differentiable(prefix) {
        return Err(Error::invalid(format!("{prefix} is not differentiable")));
    }
    let k = prefix.socle_degree();
    let delta = &prefix[k] - &prefix[k - 1];
    Ok(&prefix[k] + macaulay_growth(&delta, k))
}

/// Per-degree upper bounds for [`enumerate_gorenstein3`]; `None` means
/// unbounded.
pub type Caps = Vec<Option<BigUint>>;

pub fn unbounded_caps(e: usize) -> Caps {
    vec![None; e + 1]
}

struct Search<'a> {
    e: usize,
    caps: &'a [Option<BigUint>],
    half: Vec<BigUint>,
    out: Vec<HVector>,
}

impl Search<'_> {
    /// Effective bound at degree `i <= e/2`, combining `i` and `e - i`.
    fn cap(&self, i: usize) -> Option<&BigUint> {
        match (&self.caps[i], &self.caps[self.e - i]) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        }
    }

    fn emit(&mut self) {
        let full = (0..=self.e)
            .map(|i| self.half[i.min(self.e - i)].clone())
            .collect();
        self.out
            .push(HVector::new(full).expect("non-decreasing from 1"));
    }

    fn extend(&mut self) {
        let k = self.half.len() - 1;
        if k == self.e / 2 {
            self.emit();
            return;
        }
        let last = self.half[k].clone();
        let mut upper = if k == 0 {
            BigUint::from(3u32)
        } else {
            &last + macaulay_growth(&(&last - &self.half[k - 1]), k)
        };
        if let Some(cap) = self.cap(k + 1) {
            upper = upper.min(cap.clone());
        }
        let mut v = last;
        while v <= upper {
            self.half.push(v.clone());
            self.extend();
            self.half.pop();
            v += 1u32;
        }
    }
}

/// All Gorenstein h-vectors with `h_1 <= 3`, socle degree `e` and
/// `h_i <= caps[i]`, sorted lexicographically.
///
/// The search walks differentiable first halves; each step can grow by at
/// most the Macaulay growth of the last difference, which prunes the tree.
pub fn enumerate_gorenstein3(e: usize, caps: &[Option<BigUint>]) -> Result<Vec<HVector>> {
    if caps.len() != e + 1 {
        return Err(Error::LengthMismatch {
            left: e + 1,
            right: caps.len(),
        });
    }
    if caps.iter().flatten().any(|c| c < &BigUint::one()) {
        return Err(Error::invalid("caps must be at least 1"));
    }
    let mut search = Search {
        e,
        caps,
        half: vec![BigUint::one()],
        out: Vec::new(),
    };
    search.extend();
    let mut out = search.out;
    out.sort();
    Ok(out)
}
