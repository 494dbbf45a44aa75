//! Power sums over a line multiset: the defining summation for any
//! exponent, plus closed forms for exponents 2 and 3.
//!
//! The exponent-2 closed form used here carries the denominator 3d^2 in
//! its first term. The variant with denominator d^2, which sometimes
//! appears in transcriptions, is inconsistent with the defining sum:
//! on (c,d,m,n) = (1,1,3,3) it gives 55 where the sum gives 19.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed};

use crate::board_lines::{LineMultiset, OrientedInstance};

/// Sum of size^p over the multiset: the number of ordered p-tuples of
/// collinear cells. This summation is the authoritative definition; the
/// closed forms below are optimizations verified against it.
pub fn alpha_general(p: u64, lines: &LineMultiset) -> BigInt {
    debug_assert!(p >= 1);
    lines
        .entries()
        .map(|(size, mult)| BigInt::from(mult) * Pow::pow(BigInt::from(size), p))
        .sum()
}

fn q(x: u64) -> BigRational {
    BigRational::from(BigInt::from(x))
}

fn expect_integral(total: BigRational, what: &str, inst: &OrientedInstance) -> BigInt {
    assert!(
        total.is_integer() && !total.is_negative(),
        "{what} produced non-integral or negative value {total} on \
         (c,d,m,n)=({},{},{},{}): formula transcription bug",
        inst.c(),
        inst.d(),
        inst.m(),
        inst.n()
    );
    total.to_integer()
}

/// Closed form for the exponent-2 power sum:
/// (3dmn^2 - cn^3)/(3d^2) + (c/3)n
///   + [nbar(d-nbar)/d^2] (dm - cn - c(d-2nbar)/3).
pub fn alpha2_closed(inst: &OrientedInstance) -> BigInt {
    let c = q(inst.c());
    let d = q(inst.d());
    let m = q(inst.m());
    let n = q(inst.n());
    let nb = q(inst.nbar());

    let term1 = (q(3) * &d * &m * &n * &n - &c * &n * &n * &n) / (q(3) * &d * &d);
    let term2 = &c * &n / q(3);
    let bracket = &d * &m - &c * &n - &c * (&d - q(2) * &nb) / q(3);
    let factor = &nb * (&d - &nb) / (&d * &d);
    expect_integral(term1 + term2 + factor * bracket, "alpha2_closed", inst)
}

/// Closed form for the exponent-3 power sum:
/// (2dmn^3 - cn^4)/(2d^3) + (c/2d)n^2
///   + [nbar(d-nbar)/d^3] ((3n+d-2nbar)dm - (3n+2d-4nbar)cn + 3c nbar(d-nbar)/2).
pub fn alpha3_closed(inst: &OrientedInstance) -> BigInt {
    let c = q(inst.c());
    let d = q(inst.d());
    let m = q(inst.m());
    let n = q(inst.n());
    let nb = q(inst.nbar());

    let term1 = (q(2) * &d * &m * &n * &n * &n - &c * &n * &n * &n * &n) / (q(2) * &d * &d * &d);
    let term2 = &c * &n * &n / (q(2) * &d);
    let bracket = (q(3) * &n + &d - q(2) * &nb) * &d * &m
        - (q(3) * &n + q(2) * &d - q(4) * &nb) * &c * &n
        + q(3) * &c * &nb * (&d - &nb) / q(2);
    let factor = &nb * (&d - &nb) / (&d * &d * &d);
    expect_integral(term1 + term2 + factor * bracket, "alpha3_closed", inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board_lines::{line_multiset_closed, orient, Board, Move};

    fn inst(c: u64, d: u64, m: u64, n: u64) -> OrientedInstance {
        OrientedInstance::new(c, d, m, n).unwrap()
    }

    #[test]
    fn alpha_general_spec_cases() {
        let lines = LineMultiset::from_pairs([(1, 2), (2, 2), (3, 1)]);
        assert_eq!(alpha_general(2, &lines), BigInt::from(19));
        assert_eq!(alpha_general(3, &lines), BigInt::from(45));
        assert_eq!(alpha_general(1, &lines), BigInt::from(9));
    }

    #[test]
    fn alpha2_closed_regression_pins() {
        // These two pin the 3d^2 denominator: the d^2 variant gives 55 on
        // the first instance.
        assert_eq!(alpha2_closed(&inst(1, 1, 3, 3)), BigInt::from(19));
        assert_eq!(alpha2_closed(&inst(1, 2, 4, 5)), BigInt::from(42));
    }

    #[test]
    fn alpha3_closed_regression_pins() {
        assert_eq!(alpha3_closed(&inst(1, 1, 3, 3)), BigInt::from(45));
        assert_eq!(alpha3_closed(&inst(1, 2, 4, 5)), BigInt::from(98));
    }

    #[test]
    fn axis_columns_power_sums() {
        for m in 1..=6u64 {
            for n in 1..=6u64 {
                let i = inst(0, 1, m, n);
                assert_eq!(alpha2_closed(&i), BigInt::from(m * n * n));
                assert_eq!(alpha3_closed(&i), BigInt::from(m * n * n * n));
            }
        }
    }

    #[test]
    fn closed_forms_match_definition_on_small_grid() {
        for c in 0..=4i64 {
            for d in 0..=4i64 {
                let Ok(mv) = Move::new(c, d) else { continue };
                for m in 1..=10 {
                    for n in 1..=10 {
                        let b = Board::new(m, n).unwrap();
                        let oriented = orient(&mv, &b);
                        let lines = line_multiset_closed(&oriented);
                        assert_eq!(
                            alpha2_closed(&oriented),
                            alpha_general(2, &lines),
                            "alpha2 {mv} on {b}"
                        );
                        assert_eq!(
                            alpha3_closed(&oriented),
                            alpha_general(3, &lines),
                            "alpha3 {mv} on {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_monotone_in_p_with_a_long_line() {
        let lines = LineMultiset::from_pairs([(1, 4), (2, 5), (3, 2)]);
        let mut prev = alpha_general(1, &lines);
        for p in 2..=8 {
            let next = alpha_general(p, &lines);
            assert!(next > prev, "p={p}");
            prev = next;
        }
        // All-singleton multisets are fixed at m*n for every p.
        let singletons = LineMultiset::from_pairs([(1, 12)]);
        for p in 1..=5 {
            assert_eq!(alpha_general(p, &singletons), BigInt::from(12));
        }
    }
}
