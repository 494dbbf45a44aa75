//! Exact counting of nonattacking rider configurations on rectangular
//! chessboards.
//!
//! A *rider* moves any number of steps along a fixed set of basic
//! direction vectors; a *one-move rider* has a single coprime direction
//! (c,d). Two pieces attack iff they share a maximal board line of that
//! slope, so the number u(q;m,n) of nonattacking q-piece placements is
//! the q-th elementary symmetric function of the line sizes. This crate
//! computes u exactly by three independent closed-form routes, checks
//! them against a brute-force placement oracle, handles q = 2 for
//! arbitrary movesets, and fits the quasipolynomial of n -> u(q;n,n)
//! with exact rational interpolation to measure its period.
//!
//! All arithmetic is arbitrary-precision and exact.

pub mod board_lines;
pub mod counting;
pub mod error;
pub mod exactmath;
pub mod oracle;
pub mod power_sums;
pub mod quasipoly;

pub use board_lines::{
    line_multiset_closed, line_multiset_geometric, orient, Board, LineMultiset, Move,
    OrientedInstance,
};
pub use counting::{
    count, count_all_methods, count_elementary, count_partition, count_semibishop, count_semirook,
    count_stirling, count_two_pieces, CountResult, Method, MethodChoice, Moveset, SlopeMove,
};
pub use error::{DisagreementReport, Error, Result};
pub use exactmath::{
    binomial, factorial, interpolate, partitions_of, rising_factorial_coeffs,
    stirling_first_unsigned, IntPoly, Partition, Poly, RatPoly,
};
pub use oracle::{attacks, brute_force_count, Cell, OracleBudget};
pub use power_sums::{alpha2_closed, alpha3_closed, alpha_general};
pub use quasipoly::{
    default_valid_from, evaluate, fit_square_board, fit_square_board_from, minimal_period,
    Quasipolynomial,
};

// Re-export the exact number types used throughout the public API.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
