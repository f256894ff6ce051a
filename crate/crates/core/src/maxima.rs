//! Relative maxima for socle-vectors with two nonzero entries in three
//! variables.
//!
//! Fix `r = 3` and a socle `s_p > 0` in one degree `p < e` plus `s_e = 1`.
//! In the inverse system such an algebra is a form `F` of degree `e`
//! together with `s_p` extra generators of degree `p`. Above degree `p` the
//! h-vector is that of the Gorenstein algebra of `F`; at degree `p` it is
//! `g_p + s_p`; below `p` both kinds of generators contribute.
//!
//! [`relative_maxima`] enumerates every admissible Gorenstein tail, lifts it
//! through [`candidate_from_tail`] and keeps the Pareto frontier.
//! [`classify_existence`] answers the same uniqueness question in closed
//! form, so the two can be checked against each other.

use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::binom::dim_poly;
use crate::gorenstein::{enumerate_gorenstein3, stanley_check, unbounded_caps};
use crate::hvec::{compare, maximal_elements, Dominance, HVector, PairRS, SocleVector};
use crate::{Error, Result};

const R: usize = 3;

fn n3(d: usize) -> BigUint {
    dim_poly(R, d)
}

/// `s_p` in degree `p`, `s_e = 1`, zero elsewhere. No cap on `s_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoEntrySocle {
    p: usize,
    s_p: u64,
    e: usize,
}

impl TwoEntrySocle {
    pub fn new(p: usize, s_p: u64, e: usize) -> Result<Self> {
        if p == 0 || p >= e {
            return Err(Error::invalid(format!(
                "need 1 <= p < e, got p = {p}, e = {e}"
            )));
        }
        if s_p == 0 {
            return Err(Error::invalid("s_p must be positive"));
        }
        Ok(TwoEntrySocle { p, s_p, e })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn s_p(&self) -> u64 {
        self.s_p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn socle(&self) -> SocleVector {
        SocleVector::two_entry(self.p, self.s_p, self.e).expect("validated in new")
    }

    pub fn pair(&self) -> PairRS {
        PairRS::new(R, self.socle()).expect("r = 3")
    }

    /// `N(3,p) - s_p` when positive: the room left for a Gorenstein tail
    /// in degree `p`.
    fn room(&self) -> Option<BigUint> {
        let n = n3(self.p);
        let s = BigUint::from(self.s_p);
        (n > s).then(|| n - s)
    }
}

impl fmt::Display for TwoEntrySocle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(p={}, s_p={}, e={})", self.p, self.s_p, self.e)
    }
}

impl Serialize for TwoEntrySocle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TwoEntrySocle", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("s_p", &self.s_p)?;
        st.serialize_field("e", &self.e)?;
        st.end()
    }
}

/// Closed-form answer to "does a generalized compressed algebra exist?".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Existence {
    /// `p >= floor(e/2)`
    SocleInUpperHalf,
    /// `p < floor(e/2)` and `s_p <= 2`
    SmallSocle,
    /// `p < floor(e/2)` and `s_p >= N(3,p) - p`
    LargeSocle,
    /// `p < floor(e/2)` and `3 <= s_p < N(3,p) - p`
    DoesNotExist,
    /// `s_p >= N(3,p)`: no algebra with this socle has three variables, so
    /// the question is void.
    OutsideHypothesis,
}

impl Existence {
    pub fn exists(&self) -> bool {
        matches!(
            self,
            Existence::SocleInUpperHalf | Existence::SmallSocle | Existence::LargeSocle
        )
    }
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Existence::SocleInUpperHalf => "exists (p >= floor(e/2))",
            Existence::SmallSocle => "exists (s_p <= 2)",
            Existence::LargeSocle => "exists (s_p >= N(3,p)-p)",
            Existence::DoesNotExist => "does-not-exist (3 ≤ s_p < N(3,p)-p)",
            Existence::OutsideHypothesis => "outside-hypothesis (s_p >= N(3,p))",
        })
    }
}

pub fn classify_existence(ts: &TwoEntrySocle) -> Existence {
    let n_p = n3(ts.p);
    let s_p = BigUint::from(ts.s_p);
    if s_p >= n_p {
        Existence::OutsideHypothesis
    } else if ts.p >= ts.e / 2 {
        Existence::SocleInUpperHalf
    } else if ts.s_p <= 2 {
        Existence::SmallSocle
    } else if s_p + BigUint::from(ts.p) >= n_p {
        Existence::LargeSocle
    } else {
        Existence::DoesNotExist
    }
}

/// Lifts a Gorenstein tail `g` to a candidate h-vector for `ts`: `g` above
/// degree `p`, `g_p + s_p` at `p`, and `min(N(3,i), g_i + s_p N(3,p-i))`
/// below `p`.
///
/// The fill below `p` assumes the extra generators are generic; it is an
/// estimate, not a proven value.
pub fn candidate_from_tail(g: &HVector, ts: &TwoEntrySocle) -> Result<HVector> {
    if g.socle_degree() != ts.e {
        return Err(Error::LengthMismatch {
            left: ts.e + 1,
            right: g.len(),
        });
    }
    if !stanley_check(g)? {
        return Err(Error::invalid(format!("{g} is not a Gorenstein h-vector")));
    }
    let room = ts.room().ok_or(Error::Infeasible { degree: ts.p })?;
    if g[ts.p] > room {
        return Err(Error::invalid(format!(
            "g_p = {} exceeds N(3,p) - s_p = {room}",
            g[ts.p]
        )));
    }
    let s_p = BigUint::from(ts.s_p);
    let mut h = g.entries().to_vec();
    h[ts.p] += &s_p;
    for (i, slot) in h.iter_mut().enumerate().take(ts.p) {
        let reach = &*slot + &s_p * n3(ts.p - i);
        *slot = reach.min(n3(i));
    }
    HVector::new(h)
}

/// Limits on the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_socle_degree: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_socle_degree: 14,
        }
    }
}

impl Budget {
    fn check(&self, e: usize) -> Result<()> {
        if e > self.max_socle_degree {
            return Err(Error::BudgetExceeded {
                requested: e,
                limit: self.max_socle_degree,
            });
        }
        Ok(())
    }
}

/// Relative maxima within the tail-candidate family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximaReport {
    pub pair: TwoEntrySocle,
    /// Number of Gorenstein tails lifted.
    pub candidates_examined: usize,
    pub maxima: Vec<HVector>,
    pub unique: bool,
}

impl Serialize for MaximaReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("MaximaReport", 6)?;
        st.serialize_field("pair", &self.pair)?;
        st.serialize_field("maxima", &self.maxima)?;
        st.serialize_field("unique", &self.unique)?;
        st.serialize_field("candidates_examined", &self.candidates_examined)?;
        st.serialize_field("family", "tail-candidate")?;
        st.serialize_field("prefix_fill", "heuristic")?;
        st.end()
    }
}

pub fn relative_maxima(ts: &TwoEntrySocle, budget: &Budget) -> Result<MaximaReport> {
    budget.check(ts.e)?;
    let room = ts.room().ok_or(Error::Infeasible { degree: ts.p })?;
    let mut caps = unbounded_caps(ts.e);
    caps[ts.p] = Some(room);
    let tails = enumerate_gorenstein3(ts.e, &caps)?;
    let three = BigUint::from(R);
    let mut candidates = Vec::with_capacity(tails.len());
    for g in &tails {
        let h = candidate_from_tail(g, ts)?;
        // the lifted vector must keep embedding dimension 3
        if h[1] == three {
            candidates.push(h);
        }
    }
    let maxima = maximal_elements(&candidates)?;
    Ok(MaximaReport {
        pair: *ts,
        candidates_examined: tails.len(),
        unique: maxima.len() == 1,
        maxima,
    })
}

/// The socle `(p = 2n-1, s_p = 2n+1, e = 4n)` and the `n` vectors predicted
/// to be relative maxima: generic through degree `2n-1`, then
/// `(N + k - 2, N - 1, N - k)` in degrees `2n, 2n+1, 2n+2` for `k = 1..n`
/// with `N = N(3, 2n-2)`, then `N(3, 4n-i)`.
pub fn many_maxima_family(n: usize) -> Result<(TwoEntrySocle, Vec<HVector>)> {
    if n < 2 {
        return Err(Error::invalid("the family starts at n = 2"));
    }
    let e = 4 * n;
    let ts = TwoEntrySocle::new(2 * n - 1, 2 * n as u64 + 1, e)?;
    let big_n = n3(2 * n - 2);
    let predicted = (1..=n)
        .map(|k| {
            let mut h: Vec<BigUint> = (0..=e).map(|i| n3(i.min(e - i))).collect();
            h[2 * n] = &big_n + BigUint::from(k) - 2u32;
            h[2 * n + 1] = &big_n - 1u32;
            h[2 * n + 2] = &big_n - BigUint::from(k);
            HVector::new(h)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((ts, predicted))
}

/// Outcome of [`verify_many_maxima`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub n: usize,
    pub predicted: Vec<HVector>,
    pub report: MaximaReport,
    pub missing: Vec<HVector>,
}

impl FamilyCheck {
    /// All predicted vectors are maxima and there are at least `n` maxima.
    pub fn holds(&self) -> bool {
        self.missing.is_empty() && self.report.maxima.len() >= self.n
    }
}

pub fn verify_many_maxima(n: usize, budget: &Budget) -> Result<FamilyCheck> {
    let (ts, predicted) = many_maxima_family(n)?;
    let report = relative_maxima(&ts, budget)?;
    let missing = predicted
        .iter()
        .filter(|h| !report.maxima.contains(h))
        .cloned()
        .collect();
    Ok(FamilyCheck {
        n,
        predicted,
        report,
        missing,
    })
}

/// Which construction produced a pair of non-existence witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessShape {
    /// `a = p + 1 - s_p >= 0`: tails of constant slope `a` and `a + 1`.
    Slope { a: usize },
    /// `s_p > p + 1`: flat cap against a staircase; `q` is the smallest
    /// integer with `N(3,p) - s_p - q >= N(3,p-q)`.
    Staircase { q: usize },
}

/// Two admissible, mutually incomparable h-vectors for a socle in the
/// non-existence regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witnesses {
    pub h: HVector,
    pub h_prime: HVector,
    pub shape: WitnessShape,
}

/// The Gorenstein vector whose tail agrees with `h` above degree `p`.
pub fn gorenstein_tail(h: &HVector, p: usize) -> Result<HVector> {
    let e = h.socle_degree();
    if 2 * p >= e {
        return Err(Error::invalid("the tail must contain the middle degree"));
    }
    let g = (0..=e)
        .map(|i| {
            if i <= p {
                h[e - i].clone()
            } else {
                h[i].clone()
            }
        })
        .collect();
    HVector::new(g)
}

fn slope_vector(ts: &TwoEntrySocle, slope: usize, dent: bool) -> Result<HVector> {
    let (p, e) = (ts.p, ts.e);
    let half = e / 2;
    let x = ts.room().expect("checked by caller");
    let mut h = vec![BigUint::from(0u32); e + 1];
    for (i, slot) in h.iter_mut().enumerate().take(p + 1) {
        *slot = n3(i);
    }
    for (i, slot) in h.iter_mut().enumerate().skip(e - p + 1) {
        *slot = n3(e - i);
    }
    if dent {
        h[e - p + 1] = n3(p - 1) - 1u32;
    }
    for j in 0..=half - p {
        h[e - p - j] = &x + BigUint::from(slope * j);
    }
    for i in p + 1..=half {
        h[i] = h[e - i].clone();
    }
    HVector::new(h)
}

fn staircase_vectors(ts: &TwoEntrySocle) -> Result<(HVector, HVector, usize)> {
    let (p, e) = (ts.p, ts.e);
    let half = e / 2;
    let x = ts.room().expect("checked by caller");
    let flat = (0..=e)
        .map(|i| {
            if i <= p {
                n3(i)
            } else {
                x.clone().min(n3(e - i))
            }
        })
        .collect();

    let mut h = vec![BigUint::from(0u32); e + 1];
    for (i, slot) in h.iter_mut().enumerate().take(p + 1) {
        *slot = n3(i);
    }
    for j in 0..=p {
        h[e - p + j] = (&x - BigUint::from(j)).min(n3(p - j));
    }
    for j in 0..=half - p {
        h[e - p - j] = &x + BigUint::from(j);
    }
    for i in p + 1..=half {
        h[i] = h[e - i].clone();
    }

    let q = (0..=p)
        .find(|&q| x.clone() >= n3(p - q) + BigUint::from(q))
        .ok_or_else(|| Error::invalid("no staircase index"))?;
    Ok((HVector::new(flat)?, HVector::new(h)?, q))
}

/// Builds the pair `(H, H')` showing that no maximum exists when
/// `p < floor(e/2)` and `3 <= s_p < N(3,p) - p`.
pub fn non_existence_witnesses(ts: &TwoEntrySocle) -> Result<Witnesses> {
    if classify_existence(ts) != Existence::DoesNotExist {
        return Err(Error::invalid(format!(
            "{ts} is not in the non-existence regime"
        )));
    }
    let (p, s_p) = (ts.p, ts.s_p as usize);
    let w = if s_p <= p + 1 {
        let a = p + 1 - s_p;
        Witnesses {
            h: slope_vector(ts, a, false)?,
            h_prime: slope_vector(ts, a + 1, true)?,
            shape: WitnessShape::Slope { a },
        }
    } else {
        let (h, h_prime, q) = staircase_vectors(ts)?;
        Witnesses {
            h,
            h_prime,
            shape: WitnessShape::Staircase { q },
        }
    };
    debug_assert_eq!(compare(&w.h, &w.h_prime)?, Dominance::Incomparable);
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(v: &[u64]) -> HVector {
        HVector::from_u64s(v).unwrap()
    }

    fn ts(p: usize, s_p: u64, e: usize) -> TwoEntrySocle {
        TwoEntrySocle::new(p, s_p, e).unwrap()
    }

    #[test]
    fn socle_validation() {
        assert!(TwoEntrySocle::new(0, 1, 4).is_err());
        assert!(TwoEntrySocle::new(4, 1, 4).is_err());
        assert!(TwoEntrySocle::new(2, 0, 4).is_err());
        assert_eq!(ts(3, 3, 8).socle().to_string(), "(0,0,0,3,0,0,0,0,1)");
    }

    #[test]
    fn classifier() {
        assert_eq!(classify_existence(&ts(3, 3, 8)), Existence::DoesNotExist);
        assert_eq!(classify_existence(&ts(2, 4, 6)), Existence::LargeSocle);
        assert_eq!(
            classify_existence(&ts(4, 14, 8)),
            Existence::SocleInUpperHalf
        );
        assert_eq!(classify_existence(&ts(2, 2, 6)), Existence::SmallSocle);
        assert_eq!(
            classify_existence(&ts(4, 50, 8)),
            Existence::OutsideHypothesis
        );
        assert_eq!(
            classify_existence(&ts(3, 10, 8)),
            Existence::OutsideHypothesis
        );
        assert!(!Existence::OutsideHypothesis.exists());
    }

    #[test]
    fn tails_lift() {
        let t = ts(3, 3, 8);
        let lift = |g: &[u64]| candidate_from_tail(&hv(g), &t).unwrap();
        assert_eq!(
            lift(&[1, 3, 6, 7, 8, 7, 6, 3, 1]),
            hv(&[1, 3, 6, 10, 8, 7, 6, 3, 1])
        );
        assert_eq!(
            lift(&[1, 3, 5, 7, 9, 7, 5, 3, 1]),
            hv(&[1, 3, 6, 10, 9, 7, 5, 3, 1])
        );
        let sat = ts(3, 9, 8);
        assert_eq!(
            candidate_from_tail(&hv(&[1; 9]), &sat).unwrap()[3],
            BigUint::from(10u32)
        );
        // g_3 = 10 leaves no room for three more generators
        assert!(candidate_from_tail(&hv(&[1, 3, 6, 10, 15, 10, 6, 3, 1]), &t).is_err());
        assert!(candidate_from_tail(&hv(&[1, 3, 6, 10, 8, 7, 6, 3, 1]), &t).is_err());
    }

    #[test]
    fn two_maxima() {
        let rep = relative_maxima(&ts(3, 3, 8), &Budget::default()).unwrap();
        assert_eq!(
            rep.maxima,
            vec![
                hv(&[1, 3, 6, 10, 8, 7, 6, 3, 1]),
                hv(&[1, 3, 6, 10, 9, 7, 5, 3, 1])
            ]
        );
        assert!(!rep.unique);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["family"], "tail-candidate");
        assert_eq!(json["pair"]["s_p"], 3);
    }

    #[test]
    fn unique_maximum_small_socle() {
        let rep = relative_maxima(&ts(2, 2, 6), &Budget::default()).unwrap();
        assert_eq!(rep.maxima, vec![hv(&[1, 3, 6, 5, 4, 3, 1])]);
        assert!(rep.unique);
    }

    #[test]
    fn budget_and_infeasible_are_distinct() {
        let small = Budget {
            max_socle_degree: 6,
        };
        assert_eq!(
            relative_maxima(&ts(3, 3, 8), &small),
            Err(Error::BudgetExceeded {
                requested: 8,
                limit: 6
            })
        );
        assert_eq!(
            relative_maxima(&ts(2, 6, 6), &Budget::default()),
            Err(Error::Infeasible { degree: 2 })
        );
    }

    #[test]
    fn family_instances() {
        let (t, pred) = many_maxima_family(2).unwrap();
        assert_eq!(t, ts(3, 5, 8));
        assert_eq!(
            pred,
            vec![
                hv(&[1, 3, 6, 10, 5, 5, 5, 3, 1]),
                hv(&[1, 3, 6, 10, 6, 5, 4, 3, 1])
            ]
        );
        // midpoint identity h_{2n+1} + s_{2n-1} = N(3, 2n-1)
        assert_eq!(&pred[0][5] + BigUint::from(t.s_p()), n3(3));

        let (t, pred) = many_maxima_family(3).unwrap();
        assert_eq!(t, ts(5, 7, 12));
        let tuples: Vec<Vec<u64>> = pred
            .iter()
            .map(|h| (6..=8).map(|i| u64::try_from(&h[i]).unwrap()).collect())
            .collect();
        assert_eq!(
            tuples,
            vec![vec![14, 14, 14], vec![15, 14, 13], vec![16, 14, 12]]
        );
        assert!(many_maxima_family(1).is_err());
    }

    #[test]
    fn family_verified_for_two() {
        let check = verify_many_maxima(2, &Budget::default()).unwrap();
        assert!(check.holds());
    }

    #[test]
    fn witnesses_slope_regime() {
        let w = non_existence_witnesses(&ts(3, 3, 8)).unwrap();
        assert_eq!(w.shape, WitnessShape::Slope { a: 1 });
        assert_eq!(w.h, hv(&[1, 3, 6, 10, 8, 7, 6, 3, 1]));
        assert_eq!(w.h_prime, hv(&[1, 3, 6, 10, 9, 7, 5, 3, 1]));
        assert_eq!(w.h_prime[6], n3(2) - 1u32);
        assert_eq!(compare(&w.h, &w.h_prime).unwrap(), Dominance::Incomparable);
        for v in [&w.h, &w.h_prime] {
            assert!(stanley_check(&gorenstein_tail(v, 3).unwrap()).unwrap());
        }
    }

    #[test]
    fn witnesses_staircase_regime() {
        let w = non_existence_witnesses(&ts(3, 5, 8)).unwrap();
        assert_eq!(w.shape, WitnessShape::Staircase { q: 2 });
        assert_eq!(w.h, hv(&[1, 3, 6, 10, 5, 5, 5, 3, 1]));
        assert_eq!(w.h_prime, hv(&[1, 3, 6, 10, 6, 5, 4, 3, 1]));
        assert!(non_existence_witnesses(&ts(3, 2, 8)).is_err());
        assert!(non_existence_witnesses(&ts(4, 3, 8)).is_err());
    }
}
