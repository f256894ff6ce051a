//! Exact combinatorics of h-vectors and socle-vectors of standard graded
//! artinian algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`binom`]: arbitrary-precision binomial calculus, i-binomial expansions,
//!   Macaulay growth and its lower-bound inverse.
//! * [`hvec`]: h-vectors, socle-vectors, O-sequences, differentiability and
//!   the entrywise partial order.
//! * [`bounds`]: everything keyed to a pair `(r, s)`: the `r_d` numbers, the
//!   two upper bounds, and the admissibility predicates built on them.
//! * [`gorenstein`]: Gorenstein checks and the embedding-dimension-3
//!   enumerator.
//! * [`maxima`]: relative maxima for two-entry socle-vectors in three
//!   variables, the existence classifier and the explicit witness families.
//! * [`inverse`]: an independent oracle that computes h-vectors and
//!   socle-vectors of inverse systems by exact rank computations.

pub mod binom;
pub mod bounds;
mod error;
pub mod gorenstein;
pub mod hvec;
pub mod inverse;
mod json;
pub mod maxima;

pub use error::{Error, Result};
pub use hvec::{Dominance, HVector, PairRS, SocleVector};
