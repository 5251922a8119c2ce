//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.
//!
//! Every intermediate entry is a minor of the input, so the divisions are
//! exact. The fast path runs in `i128` with checked arithmetic and restarts in
//! arbitrary precision if an entry ever overflows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

trait Entry: Clone {
    fn is_zero(&self) -> bool;
    fn one() -> Self;
    /// `(a * d - b * c) / e`, or `None` on overflow.
    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self>;
}

impl Entry for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn one() -> Self {
        1
    }

    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        let num = a.checked_mul(*d)?.checked_sub(b.checked_mul(*c)?)?;
        debug_assert_eq!(num % e, 0);
        Some(num / e)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn one() -> Self {
        One::one()
    }

    fn cross_div(a: &Self, d: &Self, b: &Self, c: &Self, e: &Self) -> Option<Self> {
        Some((a * d - b * c) / e)
    }
}

fn bareiss_rank<T: Entry>(mut rows: Vec<Vec<T>>) -> Option<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..ncols {
                row[j] = T::cross_div(&pivot_row[col], &row[j], &lead, &pivot_row[j], &prev)?;
            }
            row[col] = T::cross_div(&pivot_row[col], &row[col], &lead, &pivot_row[col], &prev)?;
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of a dense integer matrix given by rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    if let Some(r) = bareiss_rank(small) {
        return r;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(big).expect("arbitrary precision elimination cannot overflow")
}
