//! Inverse systems: h-vectors and socle-vectors computed from derivatives.
//!
//! A finite set of forms `M` in `k[y1, ..., yr]` determines the artinian
//! algebra `R/Ann(M)`. Its h-vector in degree `d` is the dimension of the
//! space of all derivatives of the generators that land in degree `d`, and
//! its socle in degree `d` counts the minimal generators of that degree.
//! Everything here is exact rank computation over the rationals, and shares
//! no code with the combinatorial modules it is used to check.

mod form;
pub mod rank;
mod witness;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

pub use form::{format_forms, monomials, parse_forms, ExactRational, Form, Monomial};
pub use witness::{
    compressed_system, conic_power_sum, generalized_compressed_system, lex_apolar_form,
    point_power_sum, power_sum, random_form, random_form_with, random_forms,
};

use crate::hvec::{HVector, SocleVector};
use crate::{Error, Result};

/// A finitely generated submodule of the divided-power ring, given by
/// nonzero generators in a common number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseSystem {
    r: usize,
    generators: Vec<Form>,
}

/// Dimensions of one graded piece: the whole piece and the part reached by
/// differentiating the piece above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PieceDims {
    total: usize,
    derived: usize,
}

impl InverseSystem {
    pub fn new(generators: Vec<Form>) -> Result<Self> {
        let r = generators
            .first()
            .ok_or_else(|| Error::invalid("an inverse system needs a generator"))?
            .num_vars();
        for (idx, g) in generators.iter().enumerate() {
            if g.num_vars() != r {
                return Err(Error::InconsistentVariables {
                    expected: r,
                    found: g.num_vars(),
                    line: idx + 1,
                });
            }
            if g.is_zero() {
                return Err(Error::invalid("generators must be nonzero"));
            }
        }
        Ok(InverseSystem { r, generators })
    }

    pub fn num_vars(&self) -> usize {
        self.r
    }

    pub fn generators(&self) -> &[Form] {
        &self.generators
    }

    /// Largest generator degree: the socle degree of `R/Ann(M)`.
    pub fn top_degree(&self) -> usize {
        self.generators.iter().map(Form::degree).max().unwrap_or(0)
    }

    /// `M` together with `forms`, which must share one degree and the
    /// variable count.
    pub fn add_generators(&self, forms: &[Form]) -> Result<InverseSystem> {
        if let Some(first) = forms.first() {
            if forms.iter().any(|f| f.degree() != first.degree()) {
                return Err(Error::invalid("added forms must share one degree"));
            }
        }
        let mut generators = self.generators.clone();
        generators.extend(forms.iter().cloned());
        InverseSystem::new(generators)
    }

    /// Dimension of `M_d`, computed directly: the span of every derivative
    /// of order `deg F - d` of every generator `F` with `deg F >= d`.
    pub fn graded_piece_dim(&self, d: usize) -> usize {
        let basis = monomials(self.r, d);
        let mut rows = Vec::new();
        for g in self.generators.iter().filter(|g| g.degree() >= d) {
            for alpha in monomials(self.r, g.degree() - d) {
                let der = g.derivative(&alpha).expect("order within degree");
                if !der.is_zero() {
                    rows.push(rank::integer_row(&der.coordinates(&basis)));
                }
            }
        }
        rank::integer_rank(rows)
    }

    /// Walks down from the top degree, keeping an integer basis of `M_d`
    /// and differentiating it once to reach degree `d - 1`.
    fn pieces(&self) -> Vec<PieceDims> {
        let e = self.top_degree();
        let mut dims = vec![
            PieceDims {
                total: 0,
                derived: 0
            };
            e + 1
        ];
        let mut above: Vec<Form> = Vec::new();
        for d in (0..=e).rev() {
            let basis = monomials(self.r, d);
            let mut rows: Vec<Vec<BigInt>> = Vec::new();
            for f in &above {
                for var in 0..self.r {
                    let der = f.differentiate(var).expect("variable in range");
                    if !der.is_zero() {
                        rows.push(rank::integer_row(&der.coordinates(&basis)));
                    }
                }
            }
            let derived = rank::echelon(rows);
            let mut all = derived.clone();
            for g in self.generators.iter().filter(|g| g.degree() == d) {
                all.push(rank::integer_row(&g.coordinates(&basis)));
            }
            let piece = rank::echelon(all);
            dims[d] = PieceDims {
                total: piece.len(),
                derived: derived.len(),
            };
            above = piece
                .into_iter()
                .map(|row| {
                    let terms = basis
                        .iter()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| (m.clone(), ExactRational::from_integer(c)));
                    Form::new(self.r, d, terms).expect("basis monomials")
                })
                .collect();
        }
        dims
    }

    /// `(dim M_0, ..., dim M_e)`.
    pub fn hvector(&self) -> HVector {
        let h = self
            .pieces()
            .iter()
            .map(|p| BigUint::from(p.total))
            .collect();
        HVector::new(h).expect("M_0 is spanned by a nonzero constant")
    }

    /// Minimal generator counts `s_d = dim M_d - dim (R_1 o M_{d+1})`.
    ///
    /// Fails for systems whose top degree is below 2, which have no
    /// socle-vector in the sense of [`SocleVector`].
    pub fn socle(&self) -> Result<SocleVector> {
        let s: Vec<BigUint> = self
            .pieces()
            .iter()
            .map(|p| BigUint::from(p.total - p.derived))
            .collect();
        SocleVector::new(s)
    }
}

pub fn graded_piece_dim(m: &InverseSystem, d: usize) -> usize {
    m.graded_piece_dim(d)
}

pub fn hvector_of(m: &InverseSystem) -> HVector {
    m.hvector()
}

pub fn socle_of(m: &InverseSystem) -> Result<SocleVector> {
    m.socle()
}

pub fn add_generators(m: &InverseSystem, forms: &[Form]) -> Result<InverseSystem> {
    m.add_generators(forms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(lines: &str) -> InverseSystem {
        InverseSystem::new(parse_forms(lines).unwrap()).unwrap()
    }

    fn hv(v: &[u64]) -> HVector {
        HVector::from_u64s(v).unwrap()
    }

    #[test]
    fn monomial_systems() {
        let pure = sys("y1^8");
        assert_eq!(pure.hvector(), hv(&[1; 9]));
        assert_eq!(
            pure.socle().unwrap(),
            SocleVector::from_u64s(&[0, 0, 0, 0, 0, 0, 0, 0, 1]).unwrap()
        );
        for d in 0..=8 {
            assert_eq!(pure.graded_piece_dim(d), 1);
        }
        let m = sys("y1^4*y2^3*y3");
        assert_eq!(m.graded_piece_dim(2), 5);
        assert_eq!(m.hvector(), hv(&[1, 3, 5, 7, 8, 7, 5, 3, 1]));
        let two = sys("y1^2*y2^0\ny1^0*y2^2");
        assert_eq!(two.hvector(), hv(&[1, 2, 2]));
        assert_eq!(
            two.socle().unwrap(),
            SocleVector::from_u64s(&[0, 0, 2]).unwrap()
        );
    }

    #[test]
    fn direct_and_iterated_dims_agree() {
        let m = sys("y1^3*y2^2*y3^0 + 2*y1^0*y2^1*y3^4\ny1^2*y2*y3 - y3^4 + 3*y1^4");
        let h = m.hvector();
        for d in 0..=m.top_degree() {
            assert_eq!(BigUint::from(m.graded_piece_dim(d)), h[d]);
        }
    }

    #[test]
    fn redundant_generator() {
        let m = sys("y1^6*y2^0");
        let same = m.add_generators(&["y1^3*y2^0".parse().unwrap()]).unwrap();
        assert_eq!(same.hvector(), m.hvector());
        assert_eq!(same.socle().unwrap(), m.socle().unwrap());
        let more = m
            .add_generators(&["y2^2".parse::<Form>().unwrap(), "y1*y2".parse().unwrap()])
            .unwrap();
        assert_eq!(more.hvector(), hv(&[1, 2, 3, 1, 1, 1, 1]));
    }

    #[test]
    fn system_validation() {
        assert!(InverseSystem::new(Vec::new()).is_err());
        let a: Form = "y1^2".parse().unwrap();
        let b: Form = "y1*y2".parse().unwrap();
        assert!(matches!(
            InverseSystem::new(vec![a.clone(), b]),
            Err(Error::InconsistentVariables { .. })
        ));
        let m = InverseSystem::new(vec![a]).unwrap();
        assert!(m
            .add_generators(&["y1^2".parse().unwrap(), "y1^3".parse().unwrap()])
            .is_err());
    }
}
