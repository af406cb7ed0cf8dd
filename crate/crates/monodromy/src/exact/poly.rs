//! Monic integer polynomials.
//!
//! Coefficients are stored in ascending degree order; the leading
//! coefficient is always exactly 1, so the zero polynomial is not
//! representable. This is the natural home for cyclotomic products and
//! characteristic polynomials, both of which are monic by construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use super::matrix::ExactMatrix;
use super::{BigRat, ExactError};

/// Monic polynomial with `BigInt` coefficients, ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients `c0..=cn`; the last
    /// coefficient must be exactly 1.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self, ExactError> {
        match coeffs.last() {
            Some(lead) if lead.is_one() => Ok(IntPoly { coeffs }),
            _ => Err(ExactError::NonMonic),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, ExactError> {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial x^n.
    pub fn x_power(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    /// x^n - 1 for n >= 1.
    pub fn x_power_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients `c0..=cn`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly { coeffs: out }
    }

    /// Exact quotient `self / divisor`; the remainder must vanish.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, ExactError> {
        if divisor.degree() > self.degree() {
            return Err(ExactError::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let quot_deg = self.degree() - divisor.degree();
        let mut quot = vec![BigInt::zero(); quot_deg + 1];
        // divisor is monic, so each step is integral
        for k in (0..=quot_deg).rev() {
            let factor = rem[k + divisor.degree()].clone();
            if factor.is_zero() {
                continue;
            }
            quot[k] = factor.clone();
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &factor * d;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactError::InexactDivision);
        }
        IntPoly::new(quot)
    }

    /// Evaluates at a rational point by Horner's rule.
    pub fn eval_rat(&self, point: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + BigRat::from_integer(c.clone());
        }
        acc
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &ExactMatrix) -> Result<ExactMatrix, ExactError> {
        if !m.is_square() {
            return Err(ExactError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(m)?;
            let term = ExactMatrix::identity(n).scale(&BigRat::from_integer(c.clone()));
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Palindromic coefficients: c_k == c_{n-k} for all k.
    pub fn is_self_reciprocal(&self) -> bool {
        let n = self.degree();
        (0..=n / 2).all(|k| self.coeffs[k] == self.coeffs[n - k])
    }

    /// Ascending coefficients as `f64` (for numeric root finding).
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

impl fmt::Display for IntPoly {
    /// Descending-power notation: `x^6 - x^5 - x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in (0..=self.degree()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_monic() {
        assert_eq!(
            IntPoly::from_i64(&[1, 2]).unwrap_err(),
            ExactError::NonMonic
        );
        assert_eq!(IntPoly::new(vec![]).unwrap_err(), ExactError::NonMonic);
    }

    #[test]
    fn multiplication_and_exact_division_invert() {
        let p = IntPoly::from_i64(&[-1, 1]).unwrap(); // x - 1
        let q = IntPoly::from_i64(&[1, 1, 1]).unwrap(); // x^2 + x + 1
        let prod = p.mul(&q);
        assert_eq!(prod, IntPoly::from_i64(&[-1, 0, 0, 1]).unwrap()); // x^3 - 1
        assert_eq!(prod.exact_div(&q).unwrap(), p);
        assert_eq!(prod.exact_div(&p).unwrap(), q);
    }

    #[test]
    fn inexact_division_is_an_error() {
        let p = IntPoly::from_i64(&[1, 0, 1]).unwrap(); // x^2 + 1
        let q = IntPoly::from_i64(&[-1, 1]).unwrap(); // x - 1
        assert_eq!(p.exact_div(&q).unwrap_err(), ExactError::InexactDivision);
    }

    #[test]
    fn display_matches_descending_notation() {
        let p = IntPoly::from_i64(&[1, -1, 0, 0, 0, -1, 1]).unwrap();
        assert_eq!(p.to_string(), "x^6 - x^5 - x + 1");
        let q = IntPoly::from_i64(&[1, 4, 8, 10, 8, 4, 1]).unwrap();
        assert_eq!(q.to_string(), "x^6 + 4x^5 + 8x^4 + 10x^3 + 8x^2 + 4x + 1");
        assert_eq!(IntPoly::one().to_string(), "1");
        assert_eq!(IntPoly::x_power(1).to_string(), "x");
    }

    #[test]
    fn self_reciprocal_detection() {
        assert!(IntPoly::from_i64(&[1, -1, 0, 0, 0, -1, 1])
            .unwrap()
            .is_self_reciprocal());
        assert!(!IntPoly::from_i64(&[2, 0, 1]).unwrap().is_self_reciprocal());
    }

    #[test]
    fn matrix_evaluation_is_horner_exact() {
        // p(x) = x^2 - 5x + 1 at [[1,2],[3,4]]
        let p = IntPoly::from_i64(&[1, -5, 1]).unwrap();
        let m = ExactMatrix::from_int_rows(&[vec![1, 2], vec![3, 4]]);
        let value = p.eval_matrix(&m).unwrap();
        // m^2 = [[7,10],[15,22]]; p(m) = m^2 - 5m + I = [[3,0],[0,-2]]
        assert_eq!(
            value,
            ExactMatrix::from_int_rows(&[vec![3, 0], vec![0, -2]])
        );
    }
}
