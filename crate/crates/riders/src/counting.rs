//! Nonattacking-configuration counts.
//!
//! For a one-move rider the count u(q) is the q-th elementary symmetric
//! function of the line sizes, because a nonattacking placement picks q
//! distinct lines and one cell on each. Three routes compute it:
//!
//! * `count_elementary` reads the coefficient of x^(|L|-q) in the product
//!   of (x + size) over all lines;
//! * `count_partition` expands the same quantity in power sums, as a
//!   signed sum over the integer partitions of q;
//! * `count_stirling` convolves the three closed-form factor families of
//!   the rectangular board's product polynomial, whose small-line block
//!   has unsigned Stirling numbers of the first kind as coefficients.
//!
//! `count_two_pieces` handles q = 2 for an arbitrary moveset, and the
//! semirook/semibishop specializations evaluate their classical closed
//! forms. The two-piece formula here is
//! (m^2 n^2 + (|M|-1)mn - sum of alpha(2)) / 2; the sign of the
//! (|M|-1)mn term is fixed by brute-force agreement (bishop moveset on a
//! 3x3 board must give 26).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::board_lines::{
    line_multiset_closed, orient, Board, LineMultiset, Move, OrientedInstance,
};
use crate::error::{DisagreementReport, Error, Result};
use crate::exactmath::{binomial, factorial, partitions_of, stirling_first_unsigned, IntPoly};
use crate::power_sums::{alpha2_closed, alpha_general};

/// The route that produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Elementary,
    Partition,
    Stirling,
    TwoPiece,
    Semirook,
    Semibishop,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Elementary => "elementary",
            Method::Partition => "partition",
            Method::Stirling => "stirling",
            Method::TwoPiece => "two_piece",
            Method::Semirook => "semirook",
            Method::Semibishop => "semibishop",
            Method::Oracle => "oracle",
        };
        f.write_str(name)
    }
}

/// Method selector for [`count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    /// The elementary route: integer-only arithmetic, simplest failure
    /// surface.
    Auto,
    Elementary,
    Partition,
    Stirling,
    /// Run every route and insist they agree.
    All,
}

/// A count tagged with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigInt,
    pub method: Method,
}

/// A move retaining its slope sign: (1,1) and (1,-1) are distinct slopes
/// even though both reflect to the same canonical move. Normal form puts
/// c > 0, or c = 0 with d > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlopeMove {
    c: i64,
    d: i64,
}

impl SlopeMove {
    pub fn new(c: i64, d: i64) -> Result<SlopeMove> {
        // Validates coprimality and nonzeroness.
        Move::new(c, d)?;
        if c < 0 || (c == 0 && d < 0) {
            Ok(SlopeMove { c: -c, d: -d })
        } else {
            Ok(SlopeMove { c, d })
        }
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// The canonical (reflected) move carrying the same line sizes.
    pub fn reflected(&self) -> Move {
        Move::new(self.c, self.d).expect("slope move components stay coprime")
    }

    /// True when reflection changes the slope, i.e. the normal form has a
    /// negative component.
    pub fn is_reflected(&self) -> bool {
        self.d < 0
    }
}

impl fmt::Display for SlopeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.d)
    }
}

/// A nonempty set of moves with pairwise distinct slopes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Moveset {
    moves: Vec<SlopeMove>,
}

impl Moveset {
    pub fn new(moves: impl IntoIterator<Item = SlopeMove>) -> Result<Moveset> {
        let mut moves: Vec<SlopeMove> = moves.into_iter().collect();
        if moves.is_empty() {
            return Err(Error::EmptyMoveset);
        }
        moves.sort();
        for pair in moves.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateSlope {
                    c: pair[0].c,
                    d: pair[0].d,
                });
            }
        }
        Ok(Moveset { moves })
    }

    pub fn single(mv: SlopeMove) -> Moveset {
        Moveset { moves: vec![mv] }
    }

    pub fn moves(&self) -> &[SlopeMove] {
        &self.moves
    }

    /// Number of moves; always at least 1.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.moves.len()
    }
}

/// u(q) as the coefficient of x^(|L|-q) in the product of (x + size)
/// over all lines. Zero for q > |L|; one for q = 0.
pub fn count_elementary(q: u64, lines: &LineMultiset) -> BigInt {
    let total_lines = lines.num_lines();
    if q > total_lines {
        return BigInt::zero();
    }
    let mut product = IntPoly::one();
    for (size, mult) in lines.entries() {
        let linear = IntPoly::linear(BigInt::from(size), BigInt::one());
        product = product.mul(&linear.pow(mult));
    }
    product.coeff((total_lines - q) as usize)
}

/// u(q) as the signed sum over integer partitions of q of
/// prod_i alpha(lambda_i)^(n_i) / (lambda_i^(n_i) n_i!), with sign
/// (-1)^(q - number of parts). Exact rational arithmetic throughout;
/// the total is asserted to be a nonnegative integer.
pub fn count_partition(q: u64, lines: &LineMultiset) -> BigInt {
    let alphas: Vec<BigInt> = (0..=q)
        .map(|p| {
            if p == 0 {
                BigInt::one()
            } else {
                alpha_general(p, lines)
            }
        })
        .collect();
    let mut total = BigRational::zero();
    for partition in partitions_of(q) {
        let mut numerator = BigInt::one();
        let mut denominator = BigInt::one();
        for &(part, mult) in partition.parts() {
            numerator *= Pow::pow(alphas[part as usize].clone(), mult);
            denominator *= Pow::pow(BigInt::from(part), mult) * factorial(mult);
        }
        let term = BigRational::new(numerator, denominator);
        if (q - partition.num_parts()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    assert!(
        total.is_integer() && !total.is_negative(),
        "partition formula produced non-integral or negative total {total} \
         for q={q}: formula transcription bug"
    );
    total.to_integer()
}

/// Coefficients of (x+a)^e: C(e,j) a^(e-j) at x^j.
fn binomial_expansion(a: u64, e: u64) -> IntPoly {
    let base = BigInt::from(a);
    let coeffs = (0..=e)
        .map(|j| binomial(e, j as i64) * Pow::pow(base.clone(), e - j))
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// u(q) by convolving the closed-form factor families of the board's
/// product polynomial: (x+s)^A, (x+s+1)^B, and the 2cd-th power of the
/// small-line block whose coefficient of x^j is the unsigned Stirling
/// number c(s, j+1).
pub fn count_stirling(q: u64, inst: &OrientedInstance) -> BigInt {
    let (c, d, m) = (inst.c(), inst.d(), inst.m());
    let (s, nbar) = (inst.s(), inst.nbar());
    let size_s_mult = (d - nbar) * (m - c * s) + c * (nbar + d);
    let size_s1_mult = nbar * (m - c * s);

    let mut product = binomial_expansion(s, size_s_mult);
    product = product.mul(&binomial_expansion(s + 1, size_s1_mult));
    let small_copies = 2 * c * d;
    if s >= 1 && small_copies > 0 {
        let small_block = IntPoly::from_coeffs(
            (0..s)
                .map(|j| stirling_first_unsigned(s, j as i64 + 1))
                .collect(),
        );
        product = product.mul(&small_block.pow(small_copies));
    }
    let degree = product.degree().expect("product polynomial is monic") as u64;
    if q > degree {
        return BigInt::zero();
    }
    product.coeff((degree - q) as usize)
}

/// u(2) for an arbitrary moveset M:
/// (m^2 n^2 + (|M|-1)mn - sum over M of alpha(2; oriented)) / 2.
/// Each move is oriented independently.
pub fn count_two_pieces(moves: &Moveset, board: &Board) -> BigInt {
    let mn = BigInt::from(board.cells());
    let alpha_sum: BigInt = moves
        .moves()
        .iter()
        .map(|sm| alpha2_closed(&orient(&sm.reflected(), board)))
        .sum();
    let doubled = &mn * &mn + BigInt::from(moves.len() as u64 - 1) * &mn - alpha_sum;
    let (half, rem) = doubled.div_rem(&BigInt::from(2));
    assert!(
        rem.is_zero() && !half.is_negative(),
        "two-piece count must be a nonnegative integer, got {doubled}/2"
    );
    half
}

/// Semirook count C(m,q) n^q: choose q columns and one cell in each.
pub fn count_semirook(q: u64, m: u64, n: u64) -> BigInt {
    binomial(m, q as i64) * Pow::pow(BigInt::from(n), q)
}

/// Semibishop count on an m x n board with m >= n, by the double sum
/// over l and j of n^(m-n+1-l) C(m-n+1, l) c(n,j) c(n, m+n-q-j-l+1),
/// with j running over the nonzero support of both Stirling factors.
pub fn count_semibishop(q: u64, m: u64, n: u64) -> Result<BigInt> {
    if m < n {
        return Err(Error::TransposeRequired { m, n });
    }
    let mut total = BigInt::zero();
    for l in 0..=(m - n + 1) {
        let mut inner = BigInt::zero();
        for j in 1..=n {
            let second = m as i64 + n as i64 - q as i64 - j as i64 - l as i64 + 1;
            let factor = stirling_first_unsigned(n, second);
            if factor.is_zero() {
                continue;
            }
            inner += stirling_first_unsigned(n, j as i64) * factor;
        }
        if inner.is_zero() {
            continue;
        }
        total += Pow::pow(BigInt::from(n), m - n + 1 - l) * binomial(m - n + 1, l as i64) * inner;
    }
    Ok(total)
}

/// Compute u(q) by each of the three one-move-rider routes.
pub fn count_all_methods(q: u64, mv: &Move, board: &Board) -> Vec<CountResult> {
    let inst = orient(mv, board);
    let lines = line_multiset_closed(&inst);
    vec![
        CountResult {
            value: count_elementary(q, &lines),
            method: Method::Elementary,
        },
        CountResult {
            value: count_partition(q, &lines),
            method: Method::Partition,
        },
        CountResult {
            value: count_stirling(q, &inst),
            method: Method::Stirling,
        },
    ]
}

/// Dispatch a one-move-rider count. `Auto` picks the elementary route;
/// `All` runs every route and errors with a full per-method report on
/// disagreement.
pub fn count(q: u64, mv: &Move, board: &Board, choice: MethodChoice) -> Result<CountResult> {
    let single = |method: Method| {
        let value = match method {
            Method::Elementary => count_elementary(q, &line_multiset_closed(&orient(mv, board))),
            Method::Partition => count_partition(q, &line_multiset_closed(&orient(mv, board))),
            Method::Stirling => count_stirling(q, &orient(mv, board)),
            _ => unreachable!(),
        };
        CountResult { value, method }
    };
    match choice {
        MethodChoice::Auto | MethodChoice::Elementary => Ok(single(Method::Elementary)),
        MethodChoice::Partition => Ok(single(Method::Partition)),
        MethodChoice::Stirling => Ok(single(Method::Stirling)),
        MethodChoice::All => {
            let results = count_all_methods(q, mv, board);
            if results.windows(2).all(|w| w[0].value == w[1].value) {
                Ok(results.into_iter().next().expect("three methods ran"))
            } else {
                Err(Error::MethodDisagreement(DisagreementReport {
                    q,
                    move_c: mv.c(),
                    move_d: mv.d(),
                    board_m: board.m(),
                    board_n: board.n(),
                    results,
                }))
            }
        }
    }
}
