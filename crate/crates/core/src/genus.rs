//! Internal power operations and the symmetric-power calculus built on them.
//!
//! A [`GenusModel`] says what `ψ_T(x)` is for each transitive orbit `T`.
//! From it we get `ψ_α = ∏ ψ_T^{a_T}` on classes, the symmetric powers
//! `σ_n = Σ_[α] ψ_α / |C(α)|`, the total symmetric power
//! `S_t = Σ σ_n t^n`, and the Hecke operators `T_n = (1/n) Σ_{|T| = n} ψ_T`.
//! The central identity is `S_t = exp(Σ_n T_n t^n)`, where `n` runs over
//! the admissible orbit sizes.
//!
//! All values are [`PsiPolynomial`]s; numeric models produce constants.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Coefficient, PsiPolynomial, PsiSymbol, TruncatedSeries};
use crate::classes::OrbitTypeMultiset;
use crate::classfn::{augmentation, ClassCatalog, ClassFunction};
use crate::lattice::{enumerate_orbits, OrderMode, TransitiveOrbit};
use crate::{Error, Result};

/// A model of the operations `x -> ψ_T(x)`.
#[derive(Clone, Debug, PartialEq)]
pub enum GenusModel {
    /// `ψ_T(x)` is the free symbol `(family, T)`; the trivial orbit gives the
    /// symbol that stands for `x` itself.
    Symbolic(Arc<str>),
    /// `ψ_T(x) = d` for every `T`: an integer fixed by all power operations.
    Integer(BigInt),
    /// Explicit values; the trivial orbit's entry is `x`.
    Table(BTreeMap<TransitiveOrbit, BigRational>),
    /// The sum of several models, `ψ_T(x + y + ...) = ψ_T(x) + ψ_T(y) + ...`.
    Sum(Vec<GenusModel>),
}

impl GenusModel {
    pub fn symbolic(family: &str) -> Self {
        GenusModel::Symbolic(family.into())
    }

    pub fn integer(d: impl Into<BigInt>) -> Self {
        GenusModel::Integer(d.into())
    }

    /// `ψ_T(x)`.
    pub fn psi(&self, t: &TransitiveOrbit) -> Result<PsiPolynomial> {
        match self {
            GenusModel::Symbolic(family) => {
                Ok(PsiPolynomial::symbol(PsiSymbol::new(Arc::clone(family), t.clone())))
            }
            GenusModel::Integer(d) => Ok(PsiPolynomial::from_integer(d)),
            GenusModel::Table(values) => values
                .get(t)
                .map(|v| PsiPolynomial::constant(v.clone()))
                .ok_or_else(|| Error::UncoveredOrbit(t.to_string())),
            GenusModel::Sum(parts) => {
                let mut acc = PsiPolynomial::zero();
                for part in parts {
                    acc += &part.psi(t)?;
                }
                Ok(acc)
            }
        }
    }

    /// The value `x = ψ_{trivial}(x)` itself.
    pub fn value(&self, h: usize) -> Result<PsiPolynomial> {
        self.psi(&TransitiveOrbit::trivial(h))
    }
}

/// `ψ_α(x) = ∏_T ψ_T(x)^{a_T}`; the empty class gives 1.
pub fn psi_alpha(model: &GenusModel, class: &OrbitTypeMultiset) -> Result<PsiPolynomial> {
    let mut acc = PsiPolynomial::one();
    for (t, a) in class.entries() {
        acc = acc.mul_ref(&model.psi(t)?.pow(a));
    }
    Ok(acc)
}

/// `σ_n(x) = (1/n!) Σ_α ψ_α(x)`, regrouped as `Σ_[α] ψ_α(x) / |C(α)|`.
pub fn sigma_n(model: &GenusModel, n: u64, h: usize, mode: OrderMode) -> Result<PsiPolynomial> {
    let catalog = ClassCatalog::get(h, n, mode)?;
    let mut acc = PsiPolynomial::zero();
    for (class, c) in catalog.classes().iter().zip(catalog.centralizers()) {
        let term = psi_alpha(model, class)?;
        acc += &term.scale(&BigRational::new(BigInt::one(), c.clone())).expect("rational scaling");
    }
    Ok(acc)
}

/// `S_t(x) = Σ_{n <= N} σ_n(x) t^n`.
pub fn total_symmetric_power(
    model: &GenusModel,
    precision: usize,
    h: usize,
    mode: OrderMode,
) -> Result<TruncatedSeries<PsiPolynomial>> {
    let coeffs = (0..=precision as u64)
        .map(|n| sigma_n(model, n, h, mode))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs, precision))
}

/// `T_n(x) = (1/n) Σ_{|T| = n} ψ_T(x)`, summing over transitive orbits of
/// size `n`. In `p`-power mode `n` must be a power of `p`.
pub fn hecke_operator(model: &GenusModel, h: usize, mode: OrderMode, n: u64) -> Result<PsiPolynomial> {
    let mut acc = PsiPolynomial::zero();
    for t in enumerate_orbits(h, n, mode)? {
        acc += &model.psi(&t)?;
    }
    Ok(acc.div_integer(&BigInt::from(n)).expect("rational scaling"))
}

/// `Σ T_n t^n` over admissible `n <= N`; other coefficients are zero.
pub fn hecke_series(
    model: &GenusModel,
    precision: usize,
    h: usize,
    mode: OrderMode,
) -> Result<TruncatedSeries<PsiPolynomial>> {
    let mut coeffs = vec![PsiPolynomial::zero(); precision + 1];
    for n in mode.sizes_up_to(precision as u64) {
        coeffs[n as usize] = hecke_operator(model, h, mode, n)?;
    }
    Ok(TruncatedSeries::new(coeffs, precision))
}

/// `exp(Σ T_n t^n)`.
pub fn exponential_side(
    model: &GenusModel,
    precision: usize,
    h: usize,
    mode: OrderMode,
) -> Result<TruncatedSeries<PsiPolynomial>> {
    hecke_series(model, precision, h, mode)?.exp()
}

/// Both sides of `S_t(x) = exp(Σ T_n t^n)` and whether they agree.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusSeriesReport {
    pub h: usize,
    pub mode: OrderMode,
    pub precision: usize,
    pub lhs: TruncatedSeries<PsiPolynomial>,
    pub rhs: TruncatedSeries<PsiPolynomial>,
    pub equal: bool,
    pub first_mismatch: Option<usize>,
}

/// Computes the class-sum side and the exponential side independently and
/// compares them coefficientwise. With a symbolic model this is an identity
/// of polynomials in free variables.
pub fn verify_dmvv(
    model: &GenusModel,
    precision: usize,
    h: usize,
    mode: OrderMode,
) -> Result<GenusSeriesReport> {
    let lhs = total_symmetric_power(model, precision, h, mode)?;
    let rhs = exponential_side(model, precision, h, mode)?;
    let first_mismatch = lhs.first_mismatch(&rhs);
    Ok(GenusSeriesReport {
        h,
        mode,
        precision,
        lhs,
        rhs,
        equal: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// Coefficients of `log S` (index `n` holds `T_n`; index 0 is zero).
pub fn hecke_from_log<C: Coefficient>(s: &TruncatedSeries<C>) -> Result<Vec<C>> {
    Ok(s.log()?.into_coefficients())
}

/// The total exterior power `Λ_t = 1 / S_{-t}`.
pub fn lambda_operations(
    model: &GenusModel,
    precision: usize,
    h: usize,
    mode: OrderMode,
) -> Result<TruncatedSeries<PsiPolynomial>> {
    total_symmetric_power(model, precision, h, mode)?.negate_variable().invert()
}

/// Adams operations `ψ_n = n T_n`, read off as the coefficients of
/// `t d/dt log S_t` (index 0 is zero).
pub fn adams_operations(
    model: &GenusModel,
    precision: usize,
    h: usize,
    mode: OrderMode,
) -> Result<Vec<PsiPolynomial>> {
    let s = total_symmetric_power(model, precision, h, mode)?;
    Ok(s.log()?.t_ddt().into_coefficients())
}

/// The class function `[α] -> ψ_α(x)` on `Σ_n`, the equivariant value of
/// the `n`-th external power.
pub fn equivariant_power_classfunction(
    model: &GenusModel,
    n: u64,
    h: usize,
    mode: OrderMode,
) -> Result<ClassFunction<PsiPolynomial>> {
    ClassFunction::try_from_fn(h, n, mode, |class| psi_alpha(model, class))
}

/// Orbifold genus of an equivariant genus given as a class function: its
/// augmentation.
pub fn orbifold_genus<C: Coefficient>(equivariant: &ClassFunction<C>) -> Result<C> {
    augmentation(equivariant)
}

/// `Σ_n φ_orb(M^n // Σ_n) t^n` for the level-1 Todd genus with
/// `Td(M) = d`, computed by augmenting the equivariant power class functions.
pub fn todd_orbifold_series(d: &BigInt, precision: usize) -> Result<TruncatedSeries<BigRational>> {
    let model = GenusModel::Integer(d.clone());
    let coeffs = (0..=precision as u64)
        .map(|n| {
            let chi = equivariant_power_classfunction(&model, n, 1, OrderMode::AllOrders)?;
            let value = orbifold_genus(&chi)?;
            Ok(value.as_constant().expect("integer model yields constants"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs, precision))
}
