//! Class functions on commuting `h`-tuples in `Σ_l`.
//!
//! A class function is stored densely over the canonical class list of
//! [`enumerate_classes`]; its values live in any [`Coefficient`] ring.
//! Averaging operations (augmentation, inner product) need the ring to
//! contain the rationals and report [`Error::Indivisible`] otherwise.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{factorial, Coefficient};
use crate::classes::{
    all_permutations,     centralizer_order, enumerate_classes, orbit_type_of_tuple, representative_tuple,
    OrbitTypeMultiset,
};
use crate::lattice::OrderMode;
use crate::{Error, Result};

/// The class list of `Hom(Z^h, Σ_l)` (or its `p`-power part) with
/// precomputed centralizer orders.
#[derive(Debug)]
pub struct ClassCatalog {
    h: usize,
    mode: OrderMode,
    l: u64,
    classes: Vec<OrbitTypeMultiset>,
    centralizers: Vec<BigInt>,
    index: HashMap<OrbitTypeMultiset, usize>,
}

type CatalogKey = (usize, u64, OrderMode);

static CATALOGS: OnceLock<Mutex<HashMap<CatalogKey, Arc<ClassCatalog>>>> = OnceLock::new();

impl ClassCatalog {
    /// The (shared, cached) catalog for `(h, l, mode)`.
    pub fn get(h: usize, l: u64, mode: OrderMode) -> Result<Arc<ClassCatalog>> {
        let cache = CATALOGS.get_or_init(Default::default);
        if let Some(c) = cache.lock().expect("catalog cache poisoned").get(&(h, l, mode)) {
            return Ok(Arc::clone(c));
        }
        let built = Arc::new(Self::build(h, l, mode)?);
        let mut guard = cache.lock().expect("catalog cache poisoned");
        Ok(Arc::clone(guard.entry((h, l, mode)).or_insert(built)))
    }

    fn build(h: usize, l: u64, mode: OrderMode) -> Result<ClassCatalog> {
        let classes = enumerate_classes(h, l, mode)?;
        let centralizers = classes.iter().map(centralizer_order).collect();
        let index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(ClassCatalog { h, mode, l, classes, centralizers, index })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn mode(&self) -> OrderMode {
        self.mode
    }

    pub fn degree(&self) -> u64 {
        self.l
    }

    pub fn classes(&self) -> &[OrbitTypeMultiset] {
        &self.classes
    }

    pub fn centralizers(&self) -> &[BigInt] {
        &self.centralizers
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn index_of(&self, class: &OrbitTypeMultiset) -> Result<usize> {
        self.index.get(class).copied().ok_or(Error::UnknownClass(self.l))
    }

    fn same_as(&self, other: &ClassCatalog) -> bool {
        (self.h, self.l, self.mode) == (other.h, other.l, other.mode)
    }

    fn describe(&self) -> String {
        format!("(h={}, {}, l={})", self.h, self.mode, self.l)
    }
}

/// A function on the conjugacy classes of commuting tuples in `Σ_l`.
#[derive(Clone, Debug)]
pub struct ClassFunction<C> {
    catalog: Arc<ClassCatalog>,
    values: Vec<C>,
}

impl<C: Coefficient> PartialEq for ClassFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        self.catalog.same_as(&other.catalog) && self.values == other.values
    }
}

impl<C: Coefficient> ClassFunction<C> {
    pub fn new(catalog: Arc<ClassCatalog>, values: Vec<C>) -> Result<Self> {
        if values.len() != catalog.len() {
            return Err(Error::ParameterMismatch(format!(
                "{} values for {} classes",
                values.len(),
                catalog.len()
            )));
        }
        Ok(ClassFunction { catalog, values })
    }

    pub fn from_fn(
        h: usize,
        l: u64,
        mode: OrderMode,
        mut f: impl FnMut(&OrbitTypeMultiset) -> C,
    ) -> Result<Self> {
        let catalog = ClassCatalog::get(h, l, mode)?;
        let values = catalog.classes().iter().map(&mut f).collect();
        Ok(ClassFunction { catalog, values })
    }

    pub fn try_from_fn(
        h: usize,
        l: u64,
        mode: OrderMode,
        mut f: impl FnMut(&OrbitTypeMultiset) -> Result<C>,
    ) -> Result<Self> {
        let catalog = ClassCatalog::get(h, l, mode)?;
        let values = catalog.classes().iter().map(&mut f).collect::<Result<_>>()?;
        Ok(ClassFunction { catalog, values })
    }

    pub fn constant(h: usize, l: u64, mode: OrderMode, c: C) -> Result<Self> {
        Self::from_fn(h, l, mode, |_| c.clone())
    }

    pub fn one(h: usize, l: u64, mode: OrderMode) -> Result<Self> {
        Self::constant(h, l, mode, C::one())
    }

    pub fn zero(h: usize, l: u64, mode: OrderMode) -> Result<Self> {
        Self::constant(h, l, mode, C::zero())
    }

    /// 1 on `class`, 0 elsewhere.
    pub fn indicator(class: &OrbitTypeMultiset) -> Result<Self> {
        Self::from_fn(class.h(), class.degree(), class.mode(), |c| {
            if c == class {
                C::one()
            } else {
                C::zero()
            }
        })
    }

    pub fn catalog(&self) -> &Arc<ClassCatalog> {
        &self.catalog
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn value(&self, class: &OrbitTypeMultiset) -> Result<&C> {
        Ok(&self.values[self.catalog.index_of(class)?])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OrbitTypeMultiset, &C)> {
        self.catalog.classes().iter().zip(&self.values)
    }

    pub fn map<D: Coefficient>(&self, f: impl FnMut(&C) -> D) -> ClassFunction<D> {
        ClassFunction { catalog: Arc::clone(&self.catalog), values: self.values.iter().map(f).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Result<Self> {
        if !self.catalog.same_as(&other.catalog) {
            return Err(Error::ParameterMismatch(format!(
                "{} vs {}",
                self.catalog.describe(),
                other.catalog.describe()
            )));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction { catalog: Arc::clone(&self.catalog), values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, C::add_ref)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, C::sub_ref)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, C::mul_ref)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|v| v.mul_ref(c))
    }

    pub fn neg(&self) -> Self {
        self.map(C::neg_ref)
    }
}

fn over_centralizer<C: Coefficient>(v: &C, centralizer: &BigInt) -> Result<C> {
    v.div_integer(centralizer).ok_or_else(|| Error::Indivisible(centralizer.to_string()))
}

/// `(1/|Σ_l|) Σ_α χ(α)`, computed classwise as `Σ_[α] χ([α]) / |C(α)|`.
pub fn augmentation<C: Coefficient>(chi: &ClassFunction<C>) -> Result<C> {
    let mut total = C::zero();
    for (v, c) in chi.values.iter().zip(chi.catalog.centralizers()) {
        if !v.is_zero() {
            total = total.add_ref(&over_centralizer(v, c)?);
        }
    }
    Ok(total)
}

/// `b(χ, ξ) = (1/|G|) Σ_α χ(α) ξ(α)`.
pub fn inner_product<C: Coefficient>(chi: &ClassFunction<C>, xi: &ClassFunction<C>) -> Result<C> {
    augmentation(&chi.mul(xi)?)
}

/// Induction from `Σ_j × Σ_k` to `Σ_{j+k}`.
///
/// At a class `m` the value is `Σ_{a ⊎ b = m} |C(m)| / (|C(a)| |C(b)|) ·
/// χ(a) ξ(b)` over splittings with `deg a = j`.
pub fn induce_young<C: Coefficient>(
    chi: &ClassFunction<C>,
    xi: &ClassFunction<C>,
) -> Result<ClassFunction<C>> {
    let (left, right) = (&chi.catalog, &xi.catalog);
    if left.h != right.h || left.mode != right.mode {
        return Err(Error::ParameterMismatch(format!("{} vs {}", left.describe(), right.describe())));
    }
    let (j, k) = (left.l, right.l);
    let target = ClassCatalog::get(left.h, j + k, left.mode)?;
    let mut values = Vec::with_capacity(target.len());
    for (m, cm) in target.classes().iter().zip(target.centralizers()) {
        let mut acc = C::zero();
        for (a, b) in m.splittings(j) {
            let (ia, ib) = (left.index_of(&a)?, right.index_of(&b)?);
            let (x, y) = (&chi.values[ia], &xi.values[ib]);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let ratio = cm / (&left.centralizers[ia] * &right.centralizers[ib]);
            acc = acc.add_ref(&x.mul_ref(y).mul_ref(&C::from_integer(&ratio)));
        }
        values.push(acc);
    }
    Ok(ClassFunction { catalog: target, values })
}

/// A function on pairs of classes, i.e. on classes of `Σ_j × Σ_k`.
#[derive(Clone, Debug)]
pub struct PairFunction<C> {
    left: Arc<ClassCatalog>,
    right: Arc<ClassCatalog>,
    values: Vec<C>,
}

impl<C: Coefficient> PairFunction<C> {
    pub fn value(&self, a: &OrbitTypeMultiset, b: &OrbitTypeMultiset) -> Result<&C> {
        let (ia, ib) = (self.left.index_of(a)?, self.right.index_of(b)?);
        Ok(&self.values[ia * self.right.len() + ib])
    }

    pub fn left(&self) -> &Arc<ClassCatalog> {
        &self.left
    }

    pub fn right(&self) -> &Arc<ClassCatalog> {
        &self.right
    }

    /// The function `(a, b) -> χ(a) ξ(b)`.
    pub fn product(chi: &ClassFunction<C>, xi: &ClassFunction<C>) -> Self {
        let values = chi
            .values
            .iter()
            .flat_map(|x| xi.values.iter().map(move |y| x.mul_ref(y)))
            .collect();
        PairFunction { left: Arc::clone(&chi.catalog), right: Arc::clone(&xi.catalog), values }
    }
}

/// Restriction from `Σ_{j+k}` to `Σ_j × Σ_k`: `(a, b) -> ζ(a ⊎ b)`.
pub fn restrict_young<C: Coefficient>(zeta: &ClassFunction<C>, j: u64) -> Result<PairFunction<C>> {
    let cat = &zeta.catalog;
    if j > cat.l {
        return Err(Error::ParameterMismatch(format!("cannot restrict degree {} to {j}", cat.l)));
    }
    let left = ClassCatalog::get(cat.h, j, cat.mode)?;
    let right = ClassCatalog::get(cat.h, cat.l - j, cat.mode)?;
    let mut values = Vec::with_capacity(left.len() * right.len());
    for a in left.classes() {
        for b in right.classes() {
            values.push(zeta.value(&a.union(b)?)?.clone());
        }
    }
    Ok(PairFunction { left, right, values })
}

/// The inner product on `Σ_j × Σ_k` of the external product `χ × ξ` with a
/// pair function `ρ`: `Σ_{a,b} χ(a) ξ(b) ρ(a,b) / (|C(a)| |C(b)|)`.
pub fn young_inner_product<C: Coefficient>(
    chi: &ClassFunction<C>,
    xi: &ClassFunction<C>,
    rho: &PairFunction<C>,
) -> Result<C> {
    if !chi.catalog.same_as(&rho.left) || !xi.catalog.same_as(&rho.right) {
        return Err(Error::ParameterMismatch("pair function over different factors".into()));
    }
    let mut total = C::zero();
    for (ia, (x, ca)) in chi.values.iter().zip(chi.catalog.centralizers()).enumerate() {
        for (ib, (y, cb)) in xi.values.iter().zip(xi.catalog.centralizers()).enumerate() {
            let r = &rho.values[ia * rho.right.len() + ib];
            if x.is_zero() || y.is_zero() || r.is_zero() {
                continue;
            }
            total = total.add_ref(&over_centralizer(&x.mul_ref(y).mul_ref(r), &(ca * cb))?);
        }
    }
    Ok(total)
}

/// Largest `j + k` accepted by [`thm_d_induction_oracle`] by default.
pub const INDUCTION_ORACLE_GUARD: usize = 6;

/// Induction from `Σ_j × Σ_k` evaluated literally as
/// `(1/|H|) Σ_{g ∈ G, g α g⁻¹ ∈ H} (χ × ξ)(g α g⁻¹)`, summing over all of
/// `Σ_{j+k}` for one representative tuple per class.
pub fn thm_d_induction_oracle<C: Coefficient>(
    chi: &ClassFunction<C>,
    xi: &ClassFunction<C>,
    guard: Option<usize>,
) -> Result<ClassFunction<C>> {
    let (left, right) = (&chi.catalog, &xi.catalog);
    if left.h != right.h || left.mode != right.mode {
        return Err(Error::ParameterMismatch(format!("{} vs {}", left.describe(), right.describe())));
    }
    let (j, k) = (left.l as usize, right.l as usize);
    let n = j + k;
    let guard = guard.unwrap_or(INDUCTION_ORACLE_GUARD);
    if n > guard {
        return Err(Error::GuardExceeded { l: n, guard });
    }
    let mode = left.mode;
    let group = all_permutations(n);
    let subgroup_order = factorial(j as u64) * factorial(k as u64);
    ClassFunction::try_from_fn(left.h, n as u64, mode, |m| {
        let alpha = representative_tuple(m);
        let mut acc = C::zero();
        for g in &group {
            let Some((a, b)) = alpha.conjugate_by(g).split_at(j) else {
                continue;
            };
            let x = chi.value(&orbit_type_of_tuple(&a, mode)?)?;
            let y = xi.value(&orbit_type_of_tuple(&b, mode)?)?;
            acc = acc.add_ref(&x.mul_ref(y));
        }
        acc.scale(&BigRational::new(BigInt::one(), subgroup_order.clone()))
            .ok_or_else(|| Error::Indivisible(subgroup_order.to_string()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::brute_force_classes;
    use num_traits::Zero;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn p(p: u64) -> OrderMode {
        OrderMode::p_power(p).unwrap()
    }

    #[test]
    fn pointwise_ring() {
        let one = ClassFunction::<Q>::one(2, 3, p(3)).unwrap();
        let chi = ClassFunction::from_fn(2, 3, p(3), |c| q(c.orbit_count() as i64, 7)).unwrap();
        assert_eq!(one.mul(&chi).unwrap(), chi);
        let c = ClassFunction::constant(1, 4, OrderMode::AllOrders, q(2, 3)).unwrap();
        let d = ClassFunction::constant(1, 4, OrderMode::AllOrders, q(5, 1)).unwrap();
        assert_eq!(c.mul(&d).unwrap(), ClassFunction::constant(1, 4, OrderMode::AllOrders, q(10, 3)).unwrap());
        let s = chi.add(&chi).unwrap();
        for (cls, v) in s.iter() {
            assert_eq!(v, &(chi.value(cls).unwrap() * q(2, 1)));
        }
        assert!(matches!(chi.add(&c), Err(Error::ParameterMismatch(_))));
    }

    #[test]
    fn augmentation_examples() {
        let one = ClassFunction::<Q>::one(2, 2, p(2)).unwrap();
        assert_eq!(augmentation(&one).unwrap(), q(2, 1));
        let one = ClassFunction::<Q>::one(1, 3, OrderMode::AllOrders).unwrap();
        assert_eq!(augmentation(&one).unwrap(), q(1, 1));
        let e = OrbitTypeMultiset::identity(2, p(3), 3);
        assert_eq!(augmentation(&ClassFunction::<Q>::indicator(&e).unwrap()).unwrap(), q(1, 6));
    }

    #[test]
    fn augmentation_over_integers_can_fail() {
        let one = ClassFunction::<BigInt>::one(1, 3, OrderMode::AllOrders).unwrap();
        assert!(matches!(augmentation(&one), Err(Error::Indivisible(_))));
    }

    #[test]
    fn augmentation_of_one_counts_tuples() {
        for (h, l, mode) in [(2, 4, p(2)), (1, 5, OrderMode::AllOrders), (2, 3, p(3))] {
            let total: BigInt =
                brute_force_classes(h, l, mode, None).unwrap().into_iter().map(|(_, c)| c).sum();
            let one = ClassFunction::<Q>::one(h, l as u64, mode).unwrap();
            assert_eq!(augmentation(&one).unwrap(), Q::new(total, factorial(l as u64)));
        }
    }

    #[test]
    fn inner_product_examples() {
        let one = ClassFunction::<Q>::one(2, 3, p(3)).unwrap();
        assert_eq!(inner_product(&one, &one).unwrap(), q(3, 2));
        let one = ClassFunction::<Q>::one(1, 3, OrderMode::AllOrders).unwrap();
        assert_eq!(inner_product(&one, &one).unwrap(), q(1, 1));
        let zero = ClassFunction::<Q>::zero(1, 3, OrderMode::AllOrders).unwrap();
        assert_eq!(inner_product(&one, &zero).unwrap(), q(0, 1));
    }

    #[test]
    fn induction_examples() {
        let all = OrderMode::AllOrders;
        let xi = ClassFunction::from_fn(1, 3, all, |c| q(c.orbit_count() as i64, 1)).unwrap();
        let unit0 = ClassFunction::<Q>::one(1, 0, all).unwrap();
        assert_eq!(induce_young(&unit0, &xi).unwrap(), xi);

        let one1 = ClassFunction::<Q>::one(1, 1, all).unwrap();
        let ind = induce_young(&one1, &one1).unwrap();
        assert_eq!(ind.values(), &[q(2, 1), q(0, 1)]);

        let one2 = ClassFunction::<Q>::one(1, 2, all).unwrap();
        let ind = induce_young(&one1, &one2).unwrap();
        assert_eq!(ind.values(), &[q(3, 1), q(1, 1), q(0, 1)]);
    }

    #[test]
    fn oracle_matches_small_cases() {
        let all = OrderMode::AllOrders;
        let one1 = ClassFunction::<Q>::one(1, 1, all).unwrap();
        let one2 = ClassFunction::<Q>::one(1, 2, all).unwrap();
        let o = thm_d_induction_oracle(&one1, &one2, None).unwrap();
        assert_eq!(o.values(), &[q(3, 1), q(1, 1), q(0, 1)]);
        let zero = ClassFunction::<Q>::zero(2, 2, p(2)).unwrap();
        let one = ClassFunction::<Q>::one(2, 1, p(2)).unwrap();
        let o = thm_d_induction_oracle(&one, &zero, None).unwrap();
        assert!(o.values().iter().all(|v| v.is_zero()));
        let big = ClassFunction::<Q>::one(1, 4, all).unwrap();
        assert!(thm_d_induction_oracle(&big, &one2, None).is_ok());
        let bigger = ClassFunction::<Q>::one(1, 5, all).unwrap();
        assert!(matches!(
            thm_d_induction_oracle(&bigger, &one2, None),
            Err(Error::GuardExceeded { l: 7, guard: 6 })
        ));
    }

    #[test]
    fn restriction_examples() {
        let one = ClassFunction::<Q>::one(2, 4, p(2)).unwrap();
        let r = restrict_young(&one, 2).unwrap();
        for a in r.left().classes() {
            for b in r.right().classes() {
                assert_eq!(r.value(a, b).unwrap(), &q(1, 1));
            }
        }
        let m = &ClassCatalog::get(2, 4, p(2)).unwrap().classes()[3].clone();
        let ind = restrict_young(&ClassFunction::<Q>::indicator(m).unwrap(), 2).unwrap();
        for a in ind.left().classes() {
            for b in ind.right().classes() {
                let expected = if &a.union(b).unwrap() == m { q(1, 1) } else { q(0, 1) };
                assert_eq!(ind.value(a, b).unwrap(), &expected);
            }
        }
        assert!(restrict_young(&one, 5).is_err());
    }

    #[test]
    fn catalog_is_shared() {
        let a = ClassCatalog::get(2, 3, p(2)).unwrap();
        let b = ClassCatalog::get(2, 3, p(2)).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let one = ClassFunction::<Q>::one(2, 3, p(2)).unwrap();
        assert!(ClassFunction::new(Arc::clone(one.catalog()), vec![q(1, 1)]).is_err());
        assert!(one.value(&OrbitTypeMultiset::identity(2, p(2), 2)).is_err());
    }
}
