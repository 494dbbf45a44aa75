//! Exact arbitrary-precision arithmetic and combinatorial tables.
//!
//! Everything downstream (line multisets, power sums, counts,
//! quasipolynomial fits) is computed in exact integer or rational
//! arithmetic; no floating point appears anywhere in the crate.

mod partitions;
mod poly;

pub use partitions::{partitions_of, Partition};
pub use poly::{interpolate, rising_factorial_coeffs, IntPoly, Poly, RatPoly};

use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Lazily grown triangular table. Rows are appended, never mutated, so
/// every entry behaves as if computed once and frozen.
struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    fn grow_with(&mut self, n: usize, next_row: impl Fn(usize, &[BigInt]) -> Vec<BigInt>) {
        while self.rows.len() <= n {
            let k = self.rows.len();
            let row = next_row(k, self.rows.last().map_or(&[], |r| r.as_slice()));
            self.rows.push(row);
        }
    }
}

fn binomial_table() -> &'static Mutex<Triangle> {
    static TABLE: OnceLock<Mutex<Triangle>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Mutex::new(Triangle {
            rows: vec![vec![BigInt::one()]],
        })
    })
}

fn stirling_table() -> &'static Mutex<Triangle> {
    static TABLE: OnceLock<Mutex<Triangle>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Mutex::new(Triangle {
            rows: vec![vec![BigInt::one()]],
        })
    })
}

/// Binomial coefficient C(n,k). Zero for k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut table = binomial_table().lock().unwrap();
    table.grow_with(n, |i, prev| {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &prev[j - 1] + &prev[j];
        }
        row
    });
    table.rows[n][k].clone()
}

/// Unsigned Stirling number of the first kind c(n,k): the number of
/// permutations of n elements with exactly k cycles. Zero for k < 0 or
/// k > n. Recurrence: c(n+1,k) = n*c(n,k) + c(n,k-1), c(0,0) = 1.
pub fn stirling_first_unsigned(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let mut table = stirling_table().lock().unwrap();
    table.grow_with(n, |i, prev| {
        // row i has entries c(i,0..=i); c(i,0) = 0 for i >= 1
        let mut row = vec![BigInt::zero(); i + 1];
        row[i] = BigInt::one();
        for j in 1..i {
            row[j] = BigInt::from(i as u64 - 1) * &prev[j] + &prev[j - 1];
        }
        row
    });
    table.rows[n][k].clone()
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
