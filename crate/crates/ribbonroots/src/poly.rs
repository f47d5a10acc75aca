//! Dense univariate polynomials over exact big rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing
//! zeros; the zero polynomial is the empty coefficient list.  Just enough
//! arithmetic for the rest of the crate: ring operations, multiplication by
//! monic linear factors, Taylor shift, evaluation, and exact deflation of a
//! known root.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        RationalPolynomial::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coefficient(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coefficient(k) + other.coefficient(k))
            .collect();
        RationalPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::new(coeffs)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        RationalPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiplies by the monic linear factor `x + c`.
    pub fn mul_linear(&self, c: &BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i] += a * c;
            coeffs[i + 1] += a;
        }
        RationalPolynomial::new(coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_integer(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Taylor shift: the polynomial `q` with `q(x) = p(x + c)`.
    pub fn shift(&self, c: &BigRational) -> Self {
        let mut acc = RationalPolynomial::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul_linear(c);
            acc = acc.add(&RationalPolynomial::constant(coeff.clone()));
        }
        acc
    }

    /// Divides by `x - root` exactly; `None` unless `root` is a root.
    pub fn deflate_root(&self, root: &BigRational) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut quotient = vec![BigRational::zero(); self.coeffs.len() - 1];
        let mut carry = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if k == 0 {
                let remainder = carry * root + c;
                return remainder.is_zero().then(|| RationalPolynomial::new(quotient));
            }
            let q = carry * root + c;
            quotient[k - 1] = q.clone();
            carry = q;
        }
        unreachable!()
    }

    /// Renders with `var` as the variable, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign_negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if sign_negative {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_negative { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&rational_string(&abs));
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// Coefficients as exact strings, ascending: `"3"` or `"27/360"` style.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_string).collect()
    }
}

/// `num/den` with the denominator omitted when it is one.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}
