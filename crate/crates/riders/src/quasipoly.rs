//! Empirical quasipolynomial analysis of n -> u(q;n,n): fit one exact
//! polynomial constituent per residue class of n, verify on a holdback
//! sample, and determine the minimal period.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::board_lines::{line_multiset_closed, orient, Board, Move};
use crate::counting::count_elementary;
use crate::error::{Error, Result};
use crate::exactmath::{interpolate, RatPoly};

/// A periodic family of polynomials: the value at n is constituent
/// n mod period evaluated at n, exact for all n >= valid_from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasipolynomial {
    period: u64,
    degree: u64,
    constituents: Vec<RatPoly>,
    valid_from: u64,
}

impl Quasipolynomial {
    pub fn period(&self) -> u64 {
        self.period
    }

    /// Largest constituent degree.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Constituents indexed by n mod period.
    pub fn constituents(&self) -> &[RatPoly] {
        &self.constituents
    }

    pub fn valid_from(&self) -> u64 {
        self.valid_from
    }
}

/// Default start of the fitting window: (q+1) max(c,d) keeps every
/// line-size bucket populated with slack to spare.
pub fn default_valid_from(mv: &Move, q: u64) -> u64 {
    (q + 1) * mv.c().max(mv.d())
}

/// Fit the quasipolynomial of n -> u(q;n,n) for a one-move rider,
/// sampling with the default window start.
pub fn fit_square_board(mv: &Move, q: u64) -> Result<Quasipolynomial> {
    fit_square_board_from(mv, q, default_valid_from(mv, q))
}

/// Fit with an explicit window start. For each residue class modulo
/// max(c,d), the first 2q+2 samples at or after `valid_from` are taken:
/// 2q+1 interpolate the constituent and the final one verifies it.
pub fn fit_square_board_from(mv: &Move, q: u64, valid_from: u64) -> Result<Quasipolynomial> {
    let period = mv.c().max(mv.d());
    let target_degree = 2 * q;
    let samples_per_class = target_degree + 2;
    let mut constituents = Vec::with_capacity(period as usize);
    for residue in 0..period {
        let first = first_in_class(valid_from.max(1), residue, period);
        let samples: Vec<(u64, BigInt)> = (0..samples_per_class)
            .map(|i| {
                let n = first + i * period;
                (n, u_square(mv, q, n))
            })
            .collect();
        let (holdback, fit_points) = samples.split_last().expect("at least two samples");
        let points: Vec<(BigInt, BigRational)> = fit_points
            .iter()
            .map(|(n, u)| (BigInt::from(*n), BigRational::from(u.clone())))
            .collect();
        let constituent = interpolate(&points)?;
        let predicted = eval_at_integer(&constituent, holdback.0);
        if predicted != holdback.1 {
            return Err(Error::RegimeNotReached {
                residue,
                n: holdback.0,
                predicted,
                actual: holdback.1.clone(),
            });
        }
        constituents.push(constituent);
    }
    let degree = constituents
        .iter()
        .map(|c| c.degree().unwrap_or(0) as u64)
        .max()
        .unwrap_or(0);
    Ok(Quasipolynomial {
        period,
        degree,
        constituents,
        valid_from,
    })
}

/// Evaluate at n >= valid_from; the result is asserted integral.
pub fn evaluate(qp: &Quasipolynomial, n: u64) -> Result<BigInt> {
    if n < qp.valid_from {
        return Err(Error::BelowValidFrom {
            n,
            valid_from: qp.valid_from,
        });
    }
    let constituent = &qp.constituents[(n % qp.period) as usize];
    Ok(eval_at_integer(constituent, n))
}

/// Smallest divisor p of the period such that constituent r equals
/// constituent (r+p) mod period for all r. The function is
/// period-periodic by construction, so its minimal period divides it.
pub fn minimal_period(qp: &Quasipolynomial) -> u64 {
    let period = qp.period;
    (1..=period)
        .filter(|p| period.is_multiple_of(*p))
        .find(|&p| {
            (0..period).all(|r| {
                qp.constituents[r as usize] == qp.constituents[((r + p) % period) as usize]
            })
        })
        .expect("the full period always qualifies")
}

fn first_in_class(from: u64, residue: u64, period: u64) -> u64 {
    let offset = (residue + period - from % period) % period;
    from + offset
}

fn u_square(mv: &Move, q: u64, n: u64) -> BigInt {
    let board = Board::new(n, n).expect("square side is positive");
    count_elementary(q, &line_multiset_closed(&orient(mv, &board)))
}

fn eval_at_integer(p: &RatPoly, n: u64) -> BigInt {
    let value = p.eval(&BigRational::from(BigInt::from(n)));
    assert!(
        value.is_integer() && !value.is_negative(),
        "constituent evaluated to non-integral or negative {value} at n={n}"
    );
    value.to_integer()
}
