//! Exact rational univariate polynomials and the Jacobsthal family.
//!
//! The central object is the *simplex generating function* of a complex,
//! $f_G(t) = 1 + \sum_{k} f_k t^{k+1}$, whose values encode the simplex
//! count ($f_G(1) - 1$) and the Euler characteristic ($1 - f_G(-1)$), and
//! whose integrals over $[-1,0]$ produce curvatures. For cycle and path
//! complements these polynomials satisfy the Jacobsthal recursion
//! $f_n = f_{n-1} + t\,f_{n-2}$ with seeds $(2, 1)$ (cycle) and $(1, 1)$
//! at indices $-1, 0$ (path).
//!
//! All coefficients are exact rationals over arbitrary-precision integers;
//! nothing in this module touches floating point.

use crate::complex::Complex;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Shorthand for an exact rational from an integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Shorthand for an exact rational `p/q`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^k`; the representation never stores
/// trailing zeros, so the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        RationalPoly::constant(BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigRational) -> Self {
        RationalPoly::from_coeffs(vec![c])
    }

    /// Builds from raw coefficients (index = power), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    /// Builds from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        RationalPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// All coefficients, lowest power first, no trailing zeros.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RationalPoly::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RationalPoly::from_coeffs((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &RationalPoly) -> RationalPoly {
        if self.is_zero() || other.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::from_coeffs(out)
    }

    /// Scales by a rational constant.
    pub fn scale(&self, c: &BigRational) -> RationalPoly {
        RationalPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> RationalPoly {
        if self.is_zero() {
            return RationalPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RationalPoly::from_coeffs(coeffs)
    }

    /// Evaluates via Horner's scheme.
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Evaluates at a floating point argument (for plots and spot checks).
    pub fn evaluate_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + rational_to_f64(c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> RationalPoly {
        if self.coeffs.len() <= 1 {
            return RationalPoly::zero();
        }
        RationalPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with constant term 0.
    pub fn antiderivative(&self) -> RationalPoly {
        let mut out = vec![BigRational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c / rat_int(k as i64 + 1));
        }
        RationalPoly::from_coeffs(out)
    }

    /// Exact definite integral `∫_a^b`.
    pub fn definite_integral(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let f = self.antiderivative();
        f.evaluate(b) - f.evaluate(a)
    }

    /// Serializes as a JSON array of `"p/q"` coefficient strings.
    pub fn to_json(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(rational_string).collect();
        serde_json::to_string(&parts).expect("polynomial serialization cannot fail")
    }
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rational-to-f64 conversion via a 300-bit split (exact rationals here are
/// tame, but BigInt has no lossless f64 path for huge values).
pub fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let int = r.to_integer();
        int.to_f64().unwrap_or(f64::NAN)
    })
}

impl std::fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}

impl std::fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_str = rational_string(&mag);
            match k {
                0 => write!(f, "{coeff_str}")?,
                1 if mag.is_one() => write!(f, "t")?,
                1 => write!(f, "{coeff_str}t")?,
                _ if mag.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "{coeff_str}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Simplex generating function `f_G(t) = 1 + Σ f_k t^{k+1}` of a complex.
pub fn generating_function(c: &Complex) -> RationalPoly {
    let f = c.f_vector();
    let mut coeffs = vec![BigRational::one()];
    for fk in f {
        coeffs.push(BigRational::from(BigInt::from(fk)));
    }
    RationalPoly::from_coeffs(coeffs)
}

/// Jacobsthal polynomial of the cycle family: `f_0 = 2`, `f_1 = 1`,
/// `f_n = f_{n-1} + t f_{n-2}`. For `n ≥ 4` this is the generating function
/// of the cycle-complement complex.
pub fn jacobsthal_cycle(n: usize) -> RationalPoly {
    let mut a = RationalPoly::from_ints(&[2]);
    let mut b = RationalPoly::from_ints(&[1]);
    if n == 0 {
        return a;
    }
    let t = RationalPoly::from_ints(&[0, 1]);
    for _ in 1..n {
        let c = b.add(&t.mul(&a));
        a = b;
        b = c;
    }
    b
}

/// Jacobsthal polynomial of the path family: `f_{-1} = f_0 = 1`, same
/// recursion. Accepts `n ≥ -1`; for `n ≥ 1` this is the generating function
/// of the path-complement complex.
pub fn jacobsthal_path(n: i64) -> RationalPoly {
    assert!(n >= -1, "jacobsthal_path needs n >= -1, got {n}");
    let mut a = RationalPoly::one(); // f_{-1}
    let mut b = RationalPoly::one(); // f_0
    if n == -1 {
        return a;
    }
    let t = RationalPoly::from_ints(&[0, 1]);
    for _ in 0..n {
        let c = b.add(&t.mul(&a));
        a = b;
        b = c;
    }
    b
}

/// Euler characteristic from the generating function: `χ = 1 − f_G(−1)`.
pub fn euler_characteristic_from_generating_function(f: &RationalPoly) -> BigRational {
    BigRational::one() - f.evaluate(&rat_int(-1))
}
