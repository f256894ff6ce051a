use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational coefficient; always reduced with a positive denominator.
pub type ExactRational = BigRational;

/// Exponent vector of a monomial `y1^a1 ... yr^ar`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// All monomials of degree `d` in `r` variables, in descending lex order
/// (`y1^d` first).
pub fn monomials(r: usize, d: usize) -> Vec<Monomial> {
    fn fill(slot: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for a in (0..=left).rev() {
            cur[slot] = a;
            fill(slot + 1, left - a, cur, out);
        }
    }
    assert!(r >= 1, "need at least one variable");
    let mut out = Vec::new();
    fill(0, d as u32, &mut vec![0; r], &mut out);
    out
}

/// `a (a-1) ... (a-k+1)`
fn falling(a: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(a - j))
}

/// Homogeneous polynomial in `y1, ..., yr` with exact rational coefficients.
///
/// Every stored monomial has degree `degree` and a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Form {
    r: usize,
    degree: usize,
    terms: BTreeMap<Monomial, ExactRational>,
}

impl Form {
    /// Sums the given terms, dropping zero coefficients.
    pub fn new(
        r: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, ExactRational)>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::invalid("a form needs at least one variable"));
        }
        let mut f = Form::zero(r, degree);
        for (m, c) in terms {
            if m.num_vars() != r {
                return Err(Error::invalid(format!(
                    "monomial has {} exponents, expected {r}",
                    m.num_vars()
                )));
            }
            if m.degree() != degree {
                return Err(Error::invalid(format!(
                    "monomial of degree {} in a form of degree {degree}",
                    m.degree()
                )));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub fn zero(r: usize, degree: usize) -> Self {
        Form {
            r,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `y_var` as a linear form.
    pub fn variable(r: usize, var: usize) -> Result<Self> {
        if var >= r {
            return Err(Error::invalid(format!("variable index {var} out of range")));
        }
        let mut e = vec![0; r];
        e[var] = 1;
        Form::new(r, 1, [(Monomial(e), ExactRational::one())])
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(ExactRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn num_vars(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ExactRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// `self + other`; both must live in the same graded piece.
    pub fn add(&self, other: &Form) -> Result<Form> {
        if (self.r, self.degree) != (other.r, other.degree) {
            return Err(Error::invalid("forms of different shape"));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactRational) -> Form {
        let mut out = Form::zero(self.r, self.degree);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Form) -> Result<Form> {
        if self.r != other.r {
            return Err(Error::invalid("forms in different rings"));
        }
        let mut out = Form::zero(self.r, self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let m = a.0.iter().zip(&b.0).map(|(i, j)| i + j).collect();
                out.add_term(Monomial(m), x * y);
            }
        }
        Ok(out)
    }

    /// `d/dy_var`. A constant differentiates to the zero form of degree 0.
    pub fn differentiate(&self, var: usize) -> Result<Form> {
        if var >= self.r {
            return Err(Error::invalid(format!(
                "variable index {var} out of range for {} variables",
                self.r
            )));
        }
        let mut out = Form::zero(self.r, self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let a = m.0[var];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            out.add_term(Monomial(e), c * BigInt::from(a));
        }
        Ok(out)
    }

    /// `d^alpha/dy^alpha`, the derivative by a multi-index of order
    /// `|alpha| <= degree`.
    pub fn derivative(&self, alpha: &Monomial) -> Result<Form> {
        if alpha.num_vars() != self.r || alpha.degree() > self.degree {
            return Err(Error::invalid("multi-index does not fit the form"));
        }
        let mut out = Form::zero(self.r, self.degree - alpha.degree());
        for (m, c) in &self.terms {
            if !alpha.divides(m) {
                continue;
            }
            let mut factor = BigInt::one();
            let mut e = Vec::with_capacity(self.r);
            for (&b, &a) in m.0.iter().zip(&alpha.0) {
                factor *= falling(b, a);
                e.push(b - a);
            }
            out.add_term(Monomial(e), c * factor);
        }
        Ok(out)
    }

    /// Coefficients along [`monomials`]`(r, degree)`.
    pub(crate) fn coordinates(&self, basis: &[Monomial]) -> Vec<ExactRational> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }
}

impl fmt::Display for Form {
    /// Terms in descending lex order, every coefficient and every variable
    /// exponent written out: `1*y1^2*y2^0 - 3/2*y1^0*y2^2`. The zero form
    /// prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}", c.abs())?;
            for (i, a) in m.0.iter().enumerate() {
                write!(f, "*y{}^{a}", i + 1)?;
            }
        }
        Ok(())
    }
}

fn parse_term(
    text: &str,
    negative: bool,
) -> std::result::Result<(Vec<u32>, ExactRational), String> {
    let mut coef = ExactRational::one();
    let mut powers: Vec<u32> = Vec::new();
    for (idx, factor) in text.split('*').enumerate() {
        if factor.is_empty() {
            return Err(format!("empty factor in term {text:?}"));
        }
        if factor.starts_with(|c: char| c.is_ascii_digit()) {
            if idx != 0 {
                return Err(format!("coefficient must come first in {text:?}"));
            }
            coef = ExactRational::from_str(factor)
                .map_err(|_| format!("bad coefficient {factor:?}"))?;
            continue;
        }
        let rest = factor
            .strip_prefix('y')
            .ok_or_else(|| format!("expected a variable y<k>, got {factor:?}"))?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, a)) => (v, a),
            None => (rest, "1"),
        };
        let var: usize = var
            .parse()
            .map_err(|_| format!("bad variable index in {factor:?}"))?;
        if var == 0 {
            return Err("variables are numbered from y1".into());
        }
        let exp: u32 = exp
            .parse()
            .map_err(|_| format!("bad exponent in {factor:?}"))?;
        if powers.len() < var {
            powers.resize(var, 0);
        }
        powers[var - 1] += exp;
    }
    if negative {
        coef = -coef;
    }
    Ok((powers, coef))
}

impl FromStr for Form {
    type Err = Error;

    /// Accepts the canonical output of `Display` and looser input: omitted
    /// coefficients, `y2` for `y2^1`, arbitrary whitespace. The number of
    /// variables is the largest index that appears.
    fn from_str(s: &str) -> Result<Self> {
        let err = |message: String| Error::Parse { line: 1, message };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty form".into()));
        }
        if compact == "0" {
            return Err(err("the zero form carries no variable count".into()));
        }
        let mut raw = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                let piece = &compact[start..i];
                let (negative, body) = match piece.as_bytes()[0] {
                    b'-' => (true, &piece[1..]),
                    b'+' => (false, &piece[1..]),
                    _ => (false, piece),
                };
                raw.push(parse_term(body, negative).map_err(err)?);
                start = i;
            }
        }
        let r = raw.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
        if r == 0 {
            return Err(err("a form needs at least one variable".into()));
        }
        let degree = raw[0].0.iter().map(|&a| a as usize).sum();
        let terms = raw.into_iter().map(|(mut p, c)| {
            p.resize(r, 0);
            (Monomial(p), c)
        });
        Form::new(r, degree, terms).map_err(|e| err(e.to_string()))
    }
}

/// One form per line; blank lines and text after `#` are ignored. Parse
/// errors report the 1-based line; every form must have the same number of
/// variables.
pub fn parse_forms(text: &str) -> Result<Vec<Form>> {
    let mut out: Vec<Form> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let form = body.parse::<Form>().map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse { line, message },
            other => Error::Parse {
                line,
                message: other.to_string(),
            },
        })?;
        if let Some(first) = out.first() {
            if first.num_vars() != form.num_vars() {
                return Err(Error::InconsistentVariables {
                    expected: first.num_vars(),
                    found: form.num_vars(),
                    line,
                });
            }
        }
        out.push(form);
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "no forms found".into(),
        });
    }
    Ok(out)
}

/// Inverse of [`parse_forms`] for a list of forms.
pub fn format_forms(forms: &[Form]) -> String {
    forms.iter().map(|f| format!("{f}\n")).collect()
}
