//! Exact coefficient rings and the structures built over them.
//!
//! Everything here is exact: integers are `BigInt`, rationals are
//! `BigRational`, and there is no floating point anywhere in the crate.

mod poly;
mod series;

pub use poly::{Monomial, PsiPolynomial, PsiSymbol};
pub use series::TruncatedSeries;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic that may or may not contain the
/// rationals.
///
/// Operations take their arguments by reference; series and polynomial
/// algorithms call them in tight loops.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Zero + One
{
    fn from_integer(n: &BigInt) -> Self;

    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Multiplies by a rational scalar, or `None` if the product is not an
    /// element of the ring (e.g. `1/2` acting on the integers).
    fn scale(&self, r: &BigRational) -> Option<Self>;

    /// Multiplicative inverse, if one exists.
    fn try_inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    /// Exact division by a nonzero integer.
    fn div_integer(&self, n: &BigInt) -> Option<Self> {
        self.scale(&BigRational::new(BigInt::one(), n.clone()))
    }
}

impl Coefficient for BigInt {
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Option<Self> {
        let num = self * r.numer();
        let (q, rem) = num.div_rem(r.denom());
        rem.is_zero().then_some(q)
    }
    fn try_inverse(&self) -> Option<Self> {
        (self.abs() == BigInt::one()).then(|| self.clone())
    }
}

impl Coefficient for BigRational {
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &BigRational) -> Option<Self> {
        Some(self * r)
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `binomial(n, k)` for integer `n` (possibly negative) and `k >= 0`.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
    }
    num / factorial(k)
}

/// Parses `"num/den"` or `"num"` into a reduced rational.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("not a rational: {s:?}"));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&d) {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
    };
    Ok(r)
}

/// Formats a rational as `"num/den"`, omitting the denominator when it is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
