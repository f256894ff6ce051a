//! Exact row reduction.
//!
//! Rows are scaled to integers first; elimination is then fraction-free
//! (Bareiss), so every intermediate entry is a minor of the input and every
//! division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::form::ExactRational;

/// Multiplies a rational row by the lcm of its denominators.
pub fn integer_row(row: &[ExactRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Divides a row by the gcd of its entries and makes the leading entry
/// positive.
fn primitive(mut row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let lead_negative = row
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    if !g.is_zero() && !g.is_one() {
        for x in &mut row {
            *x /= &g;
        }
    }
    if lead_negative {
        for x in &mut row {
            *x = -&*x;
        }
    }
    row
}

/// Row echelon form of `rows`, keeping only the nonzero rows, each made
/// primitive. All rows must have the same length.
pub fn echelon(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let ncols = rows.first().map_or(0, Vec::len);
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    let n = rows.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == n {
            break;
        }
        let Some(pivot) = (rank..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &p[c] * &row[j] - &lead * &p[j];
                // exact: v is a minor times prev
                row[j] = v / &prev;
            }
        }
        prev = top[rank][c].clone();
        rank += 1;
    }
    rows.truncate(rank);
    rows.into_iter().map(primitive).collect()
}

pub fn integer_rank(rows: Vec<Vec<BigInt>>) -> usize {
    echelon(rows).len()
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<ExactRational>]) -> usize {
    integer_rank(rows.iter().map(|r| integer_row(r)).collect())
}
