use std::fmt;

use num_bigint::BigInt;

use super::Coefficient;
use crate::{Error, Result};

/// A power series in `t` known through `t^precision`.
///
/// Binary operations truncate to the smaller of the two precisions; nothing
/// beyond `t^precision` is ever stored or inferred.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Builds a series from leading coefficients, padding with zeros (or
    /// truncating) to the requested precision.
    pub fn new(mut coeffs: Vec<C>, precision: usize) -> Self {
        coeffs.resize(precision + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(precision: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncatedSeries { coeffs: (0..=precision).map(f).collect() }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(Vec::new(), precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::new(vec![C::one()], precision)
    }

    pub fn constant(c: C, precision: usize) -> Self {
        Self::new(vec![c], precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, precision: usize) -> Self {
        Self::new(self.coeffs[..=precision.min(self.precision())].to_vec(), precision.min(self.precision()))
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        Self::from_fn(n, |i| self.coeffs[i].add_ref(&other.coeffs[i]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        Self::from_fn(n, |i| self.coeffs[i].sub_ref(&other.coeffs[i]))
    }

    pub fn neg(&self) -> Self {
        self.map(C::neg_ref)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.mul_ref(c))
    }

    /// Cauchy product through the minimum precision.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.precision().min(other.precision());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// The substitution `t -> -t`.
    pub fn negate_variable(&self) -> Self {
        Self::from_fn(self.precision(), |i| {
            if i % 2 == 1 {
                self.coeffs[i].neg_ref()
            } else {
                self.coeffs[i].clone()
            }
        })
    }

    /// `t d/dt`: multiplies the coefficient of `t^n` by `n`.
    pub fn t_ddt(&self) -> Self {
        Self::from_fn(self.precision(), |n| self.coeffs[n].mul_ref(&C::from_integer(&BigInt::from(n))))
    }

    /// `exp(a)` for a series with zero constant term.
    ///
    /// Uses `n b_n = sum_{k=1}^{n} k a_k b_{n-k}`, which is `t b' = (t a') b`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.precision();
        let da = self.t_ddt();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(C::one());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !da.coeffs[k].is_zero() {
                    acc = acc.add_ref(&da.coeffs[k].mul_ref(&b[m - k]));
                }
            }
            let bm = acc
                .div_integer(&BigInt::from(m))
                .ok_or_else(|| Error::Indivisible(m.to_string()))?;
            b.push(bm);
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `log(f)` for a series with constant term 1.
    ///
    /// From `t f' = (t a') f`: `n a_n = n f_n - sum_{k=1}^{n-1} k a_k f_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::ConstantNotOne);
        }
        let n = self.precision();
        // da[k] holds k * a_k
        let mut da: Vec<C> = vec![C::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.coeffs[m].mul_ref(&C::from_integer(&BigInt::from(m)));
            for k in 1..m {
                if !da[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc = acc.sub_ref(&da[k].mul_ref(&self.coeffs[m - k]));
                }
            }
            da[m] = acc;
        }
        let mut a = vec![C::zero(); n + 1];
        for m in 1..=n {
            a[m] = da[m]
                .div_integer(&BigInt::from(m))
                .ok_or_else(|| Error::Indivisible(m.to_string()))?;
        }
        Ok(TruncatedSeries { coeffs: a })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NonUnitConstant)?;
        let n = self.precision();
        let mut b: Vec<C> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add_ref(&self.coeffs[k].mul_ref(&b[m - k]));
                }
            }
            b.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Index of the first coefficient where the two series differ, compared
    /// through the minimum precision.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let n = self.precision().min(other.precision());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.precision() + 1)
    }
}
