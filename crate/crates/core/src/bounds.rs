//! Upper bounds and admissibility predicates for a pair `(r, s)`.
//!
//! For a socle-vector `s = (0, s_1, ..., s_e)` the numbers
//!
//! ```text
//! r_d = N(r, d) - sum_{i = d..e} N(r, i - d) * s_i
//! ```
//!
//! measure how much room the socle leaves in degree `d`. They feed two upper
//! bounds on admissible h-vectors: the Fröberg–Laksov bound
//! `min(N(r,i) - r_i, N(r,i))` ([`fl_bound`]) and the sharper recursive bound
//! ([`refined_bound`]) that also caps each entry by Macaulay growth of the
//! previous entry minus its socle.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::binom::{dim_poly, expand, macaulay_growth};
use crate::hvec::{HVector, PairRS, SocleVector};
use crate::json::{IntSeq, Nat};
use crate::{Error, Result};

fn int(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

/// `r_0, ..., r_e`.
pub fn r_numbers(pair: &PairRS) -> Vec<BigInt> {
    let r = pair.r();
    let s = pair.socle().entries();
    let e = pair.socle_degree();
    (0..=e)
        .map(|d| {
            let used: BigUint = (d..=e).map(|i| dim_poly(r, i - d) * &s[i]).sum();
            int(&dim_poly(r, d)) - int(&used)
        })
        .collect()
}

/// The unique `b` in `1..=e` with `r_b >= 0 > r_{b-1}`.
///
/// Fails with [`Error::Infeasible`] when `r_e < 0`, which happens only if
/// `s_e > N(r, e)`.
pub fn b_index(pair: &PairRS) -> Result<usize> {
    b_from_r(&r_numbers(pair))
}

fn b_from_r(rs: &[BigInt]) -> Result<usize> {
    rs.iter()
        .position(|x| !x.is_negative())
        .ok_or(Error::Infeasible {
            degree: rs.len() - 1,
        })
}

/// `N(r, d) - r_d`, the number of derivatives the generators can reach in degree `d`.
fn reach(pair: &PairRS, rs: &[BigInt], d: usize) -> BigUint {
    (int(&dim_poly(pair.r(), d)) - &rs[d])
        .to_biguint()
        .expect("N(r,d) - r_d is a sum of non-negative terms")
}

/// Fröberg–Laksov upper bound: `h_i = min(N(r,i) - r_i, N(r,i))`.
pub fn fl_bound(pair: &PairRS) -> HVector {
    let rs = r_numbers(pair);
    let entries = (0..rs.len())
        .map(|i| reach(pair, &rs, i).min(dim_poly(pair.r(), i)))
        .collect();
    HVector::new(entries).expect("every entry is at least 1 since s_e > 0")
}

/// The recursive bound together with the two competing terms at each degree.
#[derive(Debug, Clone)]
struct RefinedTrace {
    h: Vec<BigUint>,
    /// growth term, with the conventions `R_0 = 1`, `R_1 = r`
    growth: Vec<BigUint>,
    /// `N(r,i) - r_i`
    cap: Vec<BigUint>,
}

fn refined_trace(pair: &PairRS) -> Result<RefinedTrace> {
    let rs = r_numbers(pair);
    let s = pair.socle().entries();
    let e = pair.socle_degree();
    let cap: Vec<BigUint> = (0..=e).map(|i| reach(pair, &rs, i)).collect();
    let mut h = vec![BigUint::one(), BigUint::from(pair.r())];
    let mut growth = h.clone();
    for i in 2..=e {
        let prev = &h[i - 1];
        if prev <= &s[i - 1] {
            return Err(Error::Infeasible { degree: i });
        }
        let g = macaulay_growth(&(prev - &s[i - 1]), i - 1);
        h.push(g.clone().min(cap[i].clone()));
        growth.push(g);
    }
    Ok(RefinedTrace { h, growth, cap })
}

/// The recursive upper bound: `h_0 = 1`, `h_1 = r` and for `2 <= i <= e`
///
/// ```text
/// h_i = min( ((h_{i-1} - s_{i-1})_(i-1))^{+1}_{+1},  N(r,i) - r_i )
/// ```
///
/// Reports [`Error::Infeasible`] at the first degree `i` where
/// `h_{i-1} - s_{i-1} <= 0`.
pub fn refined_bound(pair: &PairRS) -> Result<HVector> {
    let trace = refined_trace(pair)?;
    HVector::new(trace.h)
}

/// Criterion for [`fl_bound`] and [`refined_bound`] to coincide:
/// `s_0 = ... = s_{b-2} = 0` and
/// `s_{b-1} <= N(r,b-1) - ((N(r,b) - r_b)_(b))^{-1}_{-1}`.
pub fn bounds_coincide(pair: &PairRS) -> Result<bool> {
    let rs = r_numbers(pair);
    let b = b_from_r(&rs)?;
    let s = pair.socle().entries();
    if s[..b - 1].iter().any(|x| !x.is_zero()) {
        return Ok(false);
    }
    let lowered = expand(&reach(pair, &rs, b), b)?.shift(-1)?;
    let limit = int(&dim_poly(pair.r(), b - 1)) - int(&lowered);
    Ok(int(&s[b - 1]) <= limit)
}

/// The fl bound is admissible when `s_0 = ... = s_{b-2} = 0` and
/// `s_{b-1} <= max(N(r,b-1) - (N(r,b) - r_b), 0)`.
pub fn fl_bound_admissible(pair: &PairRS) -> Result<bool> {
    let rs = r_numbers(pair);
    let b = b_from_r(&rs)?;
    let s = pair.socle().entries();
    if s[..b - 1].iter().any(|x| !x.is_zero()) {
        return Ok(false);
    }
    let limit = (int(&dim_poly(pair.r(), b - 1)) - int(&reach(pair, &rs, b))).max(BigInt::zero());
    Ok(int(&s[b - 1]) <= limit)
}

/// `c`: last degree where the refined bound is generic.
/// `t`: last degree where the growth term is strictly below `N(r,t) - r_t`.
pub fn c_t_indices(pair: &PairRS) -> Result<(usize, usize)> {
    let trace = refined_trace(pair)?;
    Ok(c_t_from_trace(pair.r(), &trace))
}

fn c_t_from_trace(r: usize, trace: &RefinedTrace) -> (usize, usize) {
    let c = (0..trace.h.len())
        .rev()
        .find(|&i| trace.h[i] == dim_poly(r, i))
        .expect("h_0 = N(r,0)");
    let t = (0..trace.h.len())
        .rev()
        .find(|&i| trace.growth[i] < trace.cap[i])
        .expect("R_0 = 1 < N(r,0) - r_0");
    (c, t)
}

/// Which sufficient condition (if any) certifies that the refined bound is
/// admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdmissibilityCase {
    /// `c = t + 1`
    CaseI,
    /// `c = t` and `s_c <= max(N(r,c) - h_{c+1}, 0)`
    CaseII,
    /// `c <= t - 1` and `s_c >= N(r,c) - c`
    CaseIII,
    None,
}

impl fmt::Display for AdmissibilityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdmissibilityCase::CaseI => "case-i",
            AdmissibilityCase::CaseII => "case-ii",
            AdmissibilityCase::CaseIII => "case-iii",
            AdmissibilityCase::None => "none",
        })
    }
}

pub fn admissibility_case(pair: &PairRS) -> Result<AdmissibilityCase> {
    let trace = refined_trace(pair)?;
    let (c, t) = c_t_from_trace(pair.r(), &trace);
    let s = pair.socle().entries();
    let n_c = int(&dim_poly(pair.r(), c));
    if c == t + 1 {
        return Ok(AdmissibilityCase::CaseI);
    }
    if c == t && c < pair.socle_degree() {
        let room = (&n_c - int(&trace.h[c + 1])).max(BigInt::zero());
        if int(&s[c]) <= room {
            return Ok(AdmissibilityCase::CaseII);
        }
    }
    if c < t && int(&s[c]) >= n_c - BigInt::from(c) {
        return Ok(AdmissibilityCase::CaseIII);
    }
    Ok(AdmissibilityCase::None)
}

fn check_two_entry_args(r: usize, p: usize, e: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::invalid("embedding dimension must be at least 2"));
    }
    if p == 0 || p >= e {
        return Err(Error::invalid(format!(
            "need 1 <= p < e, got p = {p}, e = {e}"
        )));
    }
    Ok(())
}

/// The symmetric shape forced by a Gorenstein tail when `2p < e`: generic
/// through `p`, Macaulay growth of `N(r,p) - s_p` up to the middle, mirrored
/// afterwards, and `h_{e-p} = N(r,p) - s_p`.
fn symmetric_shape(r: usize, p: usize, s_p: &BigUint, e: usize) -> Result<HVector> {
    let n_p = dim_poly(r, p);
    if &n_p <= s_p {
        return Err(Error::Infeasible { degree: e - p });
    }
    let x = n_p - s_p;
    let half = e / 2;
    let mut h = vec![BigUint::zero(); e + 1];
    for (i, slot) in h.iter_mut().enumerate().take(p + 1) {
        *slot = dim_poly(r, i);
    }
    let exp = expand(&x, p)?;
    for a in 1..=half - p {
        h[p + a] = exp.shift(a as i64)?;
    }
    for i in half + 1..=e {
        h[i] = h[e - i].clone();
    }
    h[e - p] = x;
    HVector::new(h)
}

/// The h-vector of the generalized compressed algebra for the socle
/// `s_p` in degree `p`, `s_e = 1`, when `1 <= s_p <= r - 1`.
///
/// For `2p >= e` this is the [`fl_bound`]; for `2p < e` it is the
/// symmetric shape of [`symmetric_upper_bound`].
pub fn generalized_compressed(r: usize, p: usize, s_p: u64, e: usize) -> Result<HVector> {
    check_two_entry_args(r, p, e)?;
    if s_p == 0 || s_p as usize >= r {
        return Err(Error::invalid(format!(
            "need 1 <= s_p <= r - 1 = {}, got {s_p}",
            r - 1
        )));
    }
    if 2 * p >= e {
        let pair = PairRS::new(r, SocleVector::two_entry(p, s_p, e)?)?;
        Ok(fl_bound(&pair))
    } else {
        symmetric_shape(r, p, &BigUint::from(s_p), e)
    }
}

/// Result of [`symmetric_upper_bound`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricBound {
    pub hvector: HVector,
    /// `true` when `s_p <= r - 1`, in which case the bound is attained.
    pub admissible: bool,
}

/// Upper bound for two-entry socles with `2p < e` and any `s_p`.
///
/// Only for `s_p <= r - 1` is it known to be admissible.
pub fn symmetric_upper_bound(r: usize, p: usize, s_p: u64, e: usize) -> Result<SymmetricBound> {
    check_two_entry_args(r, p, e)?;
    if 2 * p >= e {
        return Err(Error::invalid("the symmetric bound needs 2p < e"));
    }
    if s_p == 0 {
        return Err(Error::invalid("s_p must be positive"));
    }
    let hvector = symmetric_shape(r, p, &BigUint::from(s_p), e)?;
    Ok(SymmetricBound {
        hvector,
        admissible: (s_p as usize) < r,
    })
}

/// Why a maximum is known to exist for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KnownMaximum {
    /// `s_1 = ... = s_{b-1} = 0`: the fl bound is attained.
    ZeroSocleBelowB,
    /// [`fl_bound_admissible`] holds.
    FlBoundAdmissible,
    /// [`admissibility_case`] returned one of its three cases.
    Refined(AdmissibilityCase),
    /// Two-entry socle with `s_p <= r - 1`.
    TwoEntrySmallSocle,
}

/// The maximal admissible h-vector when one of the known sufficient
/// conditions applies. Two-entry socles with `s_p <= r - 1` are always
/// covered, so every type-2 socle and every `(s_p = 2, s_e = 1)` socle with
/// `r >= 3` gets an answer.
pub fn known_maximum(pair: &PairRS) -> Result<Option<(HVector, KnownMaximum)>> {
    let rs = r_numbers(pair);
    let b = b_from_r(&rs)?;
    let s = pair.socle();
    if s.entries()[1..b].iter().all(Zero::is_zero) {
        return Ok(Some((fl_bound(pair), KnownMaximum::ZeroSocleBelowB)));
    }
    if fl_bound_admissible(pair)? {
        return Ok(Some((fl_bound(pair), KnownMaximum::FlBoundAdmissible)));
    }
    if let Some((p, s_p)) = s.as_two_entry() {
        if s_p < BigUint::from(pair.r()) {
            let s_p = u64::try_from(&s_p).expect("s_p < r fits");
            let h = generalized_compressed(pair.r(), p, s_p, pair.socle_degree())?;
            return Ok(Some((h, KnownMaximum::TwoEntrySmallSocle)));
        }
    }
    match admissibility_case(pair)? {
        AdmissibilityCase::None => Ok(None),
        case => Ok(Some((refined_bound(pair)?, KnownMaximum::Refined(case)))),
    }
}

/// Existence of a maximum follows directly when `type(s) = 2`, or when
/// `type(s) = 3` with `s_e = 1` and a single other entry equal to 2.
pub fn existence_by_socle_type(socle: &SocleVector) -> bool {
    let two = BigUint::from(2u32);
    let ty = socle.socle_type();
    if ty == two {
        return true;
    }
    ty == BigUint::from(3u32) && matches!(socle.as_two_entry(), Some((_, sp)) if sp == two)
}

/// Everything the crate computes for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundProfile {
    pub pair: PairRS,
    pub r_values: Vec<BigInt>,
    pub b: usize,
    pub fl: HVector,
    pub refined: HVector,
    pub c: usize,
    pub t: usize,
    pub coincide: bool,
}

impl BoundProfile {
    pub fn compute(pair: &PairRS) -> Result<Self> {
        let r_values = r_numbers(pair);
        let b = b_from_r(&r_values)?;
        let trace = refined_trace(pair)?;
        let (c, t) = c_t_from_trace(pair.r(), &trace);
        Ok(BoundProfile {
            pair: pair.clone(),
            b,
            fl: fl_bound(pair),
            refined: HVector::new(trace.h)?,
            c,
            t,
            coincide: bounds_coincide(pair)?,
            r_values,
        })
    }
}

impl Serialize for BoundProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BoundProfile", 9)?;
        st.serialize_field("r", &Nat(&BigUint::from(self.pair.r())))?;
        st.serialize_field("socle", self.pair.socle())?;
        st.serialize_field("r_values", &IntSeq(&self.r_values))?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("c", &self.c)?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("fl", &self.fl)?;
        st.serialize_field("refined", &self.refined)?;
        st.serialize_field("coincide", &self.coincide)?;
        st.end()
    }
}
