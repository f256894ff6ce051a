//! h-vectors, socle-vectors and the predicates on them.
//!
//! Vectors have a canonical text form, a parenthesised comma-separated list
//! such as `(1,3,6,10,8,7,6,3,1)`. Parsing tolerates whitespace.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::binom::macaulay_growth;
use crate::json::NatSeq;
use crate::{Error, Result};

/// Hilbert function of a standard graded artinian algebra: `h_0 = 1` and
/// every entry positive. The last index is the socle degree `e`.
///
/// The derived `Ord` is lexicographic and only used for deterministic
/// output; the algebraic order is [`compare`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVector(Vec<BigUint>);

impl HVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.first() != Some(&BigUint::one()) {
            return Err(Error::invalid("an h-vector starts with 1"));
        }
        if entries.iter().any(Zero::is_zero) {
            return Err(Error::invalid("h-vector entries must be positive"));
        }
        Ok(HVector(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().copied().map(BigUint::from).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Index of the last entry.
    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn get(&self, i: usize) -> Option<&BigUint> {
        self.0.get(i)
    }

    /// `(h_0, ..., h_k)`.
    pub fn prefix(&self, k: usize) -> HVector {
        HVector(self.0[..=k.min(self.socle_degree())].to_vec())
    }
}

impl std::ops::Index<usize> for HVector {
    type Output = BigUint;

    fn index(&self, i: usize) -> &BigUint {
        &self.0[i]
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, v) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// Parses `(a, b, c)` into unsigned integers.
fn parse_tuple(s: &str) -> Result<Vec<BigUint>> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::invalid(format!("expected a parenthesised list, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Err(Error::invalid("empty vector"));
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            BigUint::from_str(tok)
                .map_err(|_| Error::invalid(format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

/// Formats any integer list in the canonical parenthesised form.
pub fn format_tuple<T: fmt::Display>(items: &[T]) -> String {
    struct Tuple<'a, T>(&'a [T]);
    impl<T: fmt::Display> fmt::Display for Tuple<'_, T> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_tuple(f, self.0)
        }
    }
    Tuple(items).to_string()
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for HVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HVector::new(parse_tuple(s)?)
    }
}

impl Serialize for HVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        NatSeq(&self.0).serialize(serializer)
    }
}

/// Socle dimensions by degree: `s_0 = 0`, last entry positive, `e >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SocleVector(Vec<BigUint>);

impl SocleVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::invalid("a socle-vector needs socle degree e >= 2"));
        }
        if !entries[0].is_zero() {
            return Err(Error::invalid("a socle-vector starts with 0"));
        }
        if entries.last().is_some_and(Zero::is_zero) {
            return Err(Error::invalid("the last socle entry must be positive"));
        }
        Ok(SocleVector(entries))
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().copied().map(BigUint::from).collect())
    }

    /// `s_p` in degree `p`, `s_e = 1`, zero elsewhere.
    pub fn two_entry(p: usize, s_p: u64, e: usize) -> Result<Self> {
        if p == 0 || p >= e {
            return Err(Error::invalid("need 1 <= p < e"));
        }
        let mut v = vec![0u64; e + 1];
        v[p] = s_p;
        v[e] = 1;
        Self::from_u64s(&v)
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    /// Sum of all entries.
    pub fn socle_type(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// `(p, s_p)` when the socle is `s_p` in one degree `p < e` plus `s_e = 1`.
    pub fn as_two_entry(&self) -> Option<(usize, BigUint)> {
        let e = self.socle_degree();
        if !self.0[e].is_one() {
            return None;
        }
        let mut nonzero = (1..e).filter(|&i| !self.0[i].is_zero());
        let p = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        Some((p, self.0[p].clone()))
    }
}

impl std::ops::Index<usize> for SocleVector {
    type Output = BigUint;

    fn index(&self, i: usize) -> &BigUint {
        &self.0[i]
    }
}

impl fmt::Display for SocleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for SocleVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SocleVector::new(parse_tuple(s)?)
    }
}

impl Serialize for SocleVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        NatSeq(&self.0).serialize(serializer)
    }
}

/// Embedding dimension together with a socle-vector.
///
/// Only `r >= 2` is validated. Whether `r` reaches the minimum embedding
/// dimension of `s` is not decidable here; the bounds built on a pair assume
/// it and report [`Error::Infeasible`] when the assumption visibly fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairRS {
    r: usize,
    socle: SocleVector,
}

impl PairRS {
    pub fn new(r: usize, socle: SocleVector) -> Result<Self> {
        if r < 2 {
            return Err(Error::invalid("embedding dimension must be at least 2"));
        }
        Ok(PairRS { r, socle })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn socle(&self) -> &SocleVector {
        &self.socle
    }

    pub fn socle_degree(&self) -> usize {
        self.socle.socle_degree()
    }
}

/// Checks Macaulay's condition `h_{d+1} <= ((h_d)_(d))^{+1}_{+1}` for
/// `1 <= d < len - 1`. A zero entry forces all later entries to vanish.
pub fn is_o_sequence_slice(h: &[BigUint]) -> bool {
    h.windows(2)
        .enumerate()
        .skip(1)
        .all(|(d, w)| w[1] <= macaulay_growth(&w[0], d))
}

pub fn is_o_sequence(h: &HVector) -> bool {
    is_o_sequence_slice(h.entries())
}

/// `(1, v_1 - v_0, ..., v_e - v_{e-1})`.
pub fn first_difference(v: &HVector) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(v.len());
    out.push(BigInt::one());
    for w in v.entries().windows(2) {
        out.push(BigInt::from(w[1].clone()) - BigInt::from(w[0].clone()));
    }
    out
}

/// Non-negative first difference that is itself an O-sequence.
pub fn is_differentiable(v: &HVector) -> bool {
    let diff = first_difference(v);
    if diff.iter().any(Signed::is_negative) {
        return false;
    }
    let diff: Vec<BigUint> = diff.into_iter().map(|d| d.magnitude().clone()).collect();
    is_o_sequence_slice(&diff)
}

/// `h_i = h_{e-i}` for all `i`.
pub fn is_symmetric(h: &HVector) -> bool {
    let e = h.entries();
    e.iter().eq(e.iter().rev())
}

/// Outcome of comparing two h-vectors entrywise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dominance {
    Equal,
    /// Left is `>=` right in every entry and they differ.
    Dominates,
    /// Left is `<=` right in every entry and they differ.
    DominatedBy,
    Incomparable,
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominance::Equal => "equal",
            Dominance::Dominates => "greater-or-equal",
            Dominance::DominatedBy => "less-or-equal",
            Dominance::Incomparable => "incomparable",
        })
    }
}

fn dominance(a: &[BigUint], b: &[BigUint]) -> Dominance {
    let mut ge = true;
    let mut le = true;
    for (x, y) in a.iter().zip(b) {
        if x < y {
            ge = false;
        } else if x > y {
            le = false;
        }
        if !ge && !le {
            return Dominance::Incomparable;
        }
    }
    match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::DominatedBy,
        (false, false) => Dominance::Incomparable,
    }
}

/// Entrywise comparison. Vectors of different length are rejected.
pub fn compare(h: &HVector, g: &HVector) -> Result<Dominance> {
    if h.len() != g.len() {
        return Err(Error::LengthMismatch {
            left: h.len(),
            right: g.len(),
        });
    }
    Ok(dominance(h.entries(), g.entries()))
}

/// The Pareto frontier of `set`, deduplicated and sorted lexicographically.
pub fn maximal_elements(set: &[HVector]) -> Result<Vec<HVector>> {
    if let Some(first) = set.first() {
        if let Some(bad) = set.iter().find(|v| v.len() != first.len()) {
            return Err(Error::LengthMismatch {
                left: first.len(),
                right: bad.len(),
            });
        }
    }
    let mut items: Vec<&HVector> = set.iter().collect();
    items.sort();
    items.dedup();
    // scanning in decreasing lex order: a dominator is always lex-larger, so
    // it is already among the kept frontier when its victim comes up
    let mut frontier: Vec<&HVector> = Vec::new();
    for v in items.into_iter().rev() {
        let dominated = frontier
            .iter()
            .any(|w| dominance(w.entries(), v.entries()) == Dominance::Dominates);
        if !dominated {
            frontier.push(v);
        }
    }
    frontier.reverse();
    Ok(frontier.into_iter().cloned().collect())
}
