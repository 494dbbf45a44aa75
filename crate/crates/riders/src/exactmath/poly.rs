use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The representation is canonical: the vector is empty for the zero
/// polynomial and the last element is nonzero otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial with exact integer coefficients.
pub type IntPoly = Poly<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RatPoly = Poly<BigRational>;

impl<C> Poly<C>
where
    C: Clone + PartialEq + Zero + One,
{
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![C::one()],
        }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// a + b*x.
    pub fn linear(a: C, b: C) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    /// Construct from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    /// Schoolbook convolution; exact at the scales this crate targets.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                out[i + j] = std::mem::replace(&mut out[i + j], C::zero()) + prod;
            }
        }
        Self::from_coeffs(out)
    }

    /// self^e by repeated squaring; self^0 = 1.
    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

/// The product (x+1)(x+2)...(x+s-1); the empty product 1 for s = 1.
///
/// Its coefficient of x^j is the unsigned Stirling number c(s, j+1),
/// which the test suite cross-checks against the recurrence table.
pub fn rising_factorial_coeffs(s: u64) -> IntPoly {
    let mut p = IntPoly::one();
    for i in 1..s {
        p = p.mul(&IntPoly::linear(BigInt::from(i), BigInt::one()));
    }
    p
}

/// The unique polynomial of degree < points.len() through all points,
/// by Newton divided differences in exact rational arithmetic.
pub fn interpolate(points: &[(BigInt, BigRational)]) -> Result<RatPoly> {
    if points.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    for (i, (x, _)) in points.iter().enumerate() {
        if points[i + 1..].iter().any(|(x2, _)| x2 == x) {
            return Err(Error::DuplicateAbscissa { x: x.clone() });
        }
    }
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from(x.clone()))
        .collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..dd.len() {
        for i in (j..dd.len()).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut result = RatPoly::zero();
    let mut basis = RatPoly::one();
    for (i, coef) in dd.iter().enumerate() {
        result = result.add(&basis.scale(coef));
        basis = basis.mul(&RatPoly::linear(-&xs[i], BigRational::one()));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_expands_products_of_linears() {
        let p = ip(&[1, 1]).mul(&ip(&[2, 1]));
        assert_eq!(p, ip(&[2, 3, 1]));

        // (x+1)^2 (x+2)^2 = x^4 + 6x^3 + 13x^2 + 12x + 4
        let q = ip(&[1, 1]).pow(2).mul(&ip(&[2, 1]).pow(2));
        assert_eq!(q, ip(&[4, 12, 13, 6, 1]));
    }

    #[test]
    fn mul_identity_and_zero() {
        let p = ip(&[3, 0, 7]);
        assert_eq!(p.mul(&IntPoly::one()), p);
        assert!(p.mul(&IntPoly::zero()).is_zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn pow_cases() {
        assert_eq!(ip(&[3, 1]).pow(0), IntPoly::one());
        assert_eq!(ip(&[1, 1]).pow(2), ip(&[1, 2, 1]));
        assert_eq!(ip(&[2, 1]).pow(3), ip(&[8, 12, 6, 1]));
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = ip(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeff(5), BigInt::zero());
    }

    #[test]
    fn eval_matches_direct_expansion() {
        let p = ip(&[2, 3, 1]); // (x+1)(x+2)
        for x in -3i64..=3 {
            assert_eq!(p.eval(&BigInt::from(x)), BigInt::from((x + 1) * (x + 2)));
        }
    }
}
