use std::fmt;
use std::ops::{Add, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{exact_divide, CharError, LaurentPoly};

/// A quotient of Laurent polynomials in `q`, kept in canonical form:
/// the denominator's lowest term sits at `q^0` and has a positive
/// coefficient, and the integer content shared by numerator and
/// denominator is divided out. A zero value is stored as `0/1`.
///
/// Canonical form is not fully reduced (no polynomial gcd), so two equal
/// rational functions may differ syntactically; use [`RationalChar::equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalChar {
    numerator: LaurentPoly,
    denominator: LaurentPoly,
}

impl RationalChar {
    pub fn new(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, CharError> {
        if denominator.is_zero() {
            return Err(CharError::ZeroDenominator);
        }
        Ok(Self::canonical(numerator, denominator))
    }

    pub fn zero() -> Self {
        Self {
            numerator: LaurentPoly::zero(),
            denominator: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::canonical(p, LaurentPoly::one())
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let low = den.min_exp().expect("nonzero denominator");
        let (mut num, mut den) = (num.shift(-low), den.shift(-low));
        if den.coeff(0).is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.content().gcd(&den.content());
        if g > BigInt::one() {
            num = num.div_exact_scalar(&g);
            den = den.div_exact_scalar(&g);
        }
        Self {
            numerator: num,
            denominator: den,
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn equivalent(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::canonical(&self.numerator * p, self.denominator.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::canonical(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
    }

    /// The Laurent polynomial this quotient equals, if it is one.
    pub fn to_poly(&self) -> Result<LaurentPoly, CharError> {
        exact_divide(&self.numerator, &self.denominator)
    }
}

impl fmt::Display for RationalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

impl Add<&RationalChar> for &RationalChar {
    type Output = RationalChar;

    fn add(self, rhs: &RationalChar) -> RationalChar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.numerator, &self.denominator);
        let (c, d) = (&rhs.numerator, &rhs.denominator);
        if b == d {
            return RationalChar::canonical(a + c, b.clone());
        }
        // reuse whichever denominator already contains the other
        if let Ok(t) = exact_divide(b, d) {
            return RationalChar::canonical(a + &(c * &t), b.clone());
        }
        if let Ok(t) = exact_divide(d, b) {
            return RationalChar::canonical(&(a * &t) + c, d.clone());
        }
        RationalChar::canonical(&(a * d) + &(c * b), b * d)
    }
}

impl Neg for &RationalChar {
    type Output = RationalChar;
    fn neg(self) -> RationalChar {
        RationalChar {
            numerator: -&self.numerator,
            denominator: self.denominator.clone(),
        }
    }
}

/// Exact sum of rational characters over a common denominator.
/// The empty sum is `0/1`.
pub fn rational_combine(terms: &[RationalChar]) -> RationalChar {
    terms.iter().fold(RationalChar::zero(), |acc, t| &acc + t)
}

impl Add for RationalChar {
    type Output = RationalChar;
    fn add(self, rhs: RationalChar) -> RationalChar {
        &self + &rhs
    }
}
