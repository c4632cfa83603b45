use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Coefficient};
use crate::lattice::TransitiveOrbit;

/// The formal indeterminate `ψ_T(x)`: a family tag together with a
/// transitive orbit. The trivial orbit stands for `x` itself.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PsiSymbol {
    family: Arc<str>,
    orbit: Arc<TransitiveOrbit>,
}

impl PsiSymbol {
    pub fn new(family: impl Into<Arc<str>>, orbit: TransitiveOrbit) -> Self {
        PsiSymbol { family: family.into(), orbit: Arc::new(orbit) }
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn orbit(&self) -> &TransitiveOrbit {
        &self.orbit
    }
}

impl fmt::Display for PsiSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orbit.is_trivial() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "psi_{}{}", self.family, self.orbit)
        }
    }
}

/// A monomial: symbols in ascending order with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(PsiSymbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from arbitrary `(symbol, exponent)` pairs,
    /// merging repeated symbols and dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (PsiSymbol, u32)>) -> Self {
        let mut map: BTreeMap<PsiSymbol, u32> = BTreeMap::new();
        for (s, e) in factors {
            *map.entry(s).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(PsiSymbol, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in ψ-symbols with rational coefficients.
///
/// Zero coefficients are never stored and monomials are kept in canonical
/// order, so two polynomials are equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PsiPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl PsiPolynomial {
    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        PsiPolynomial { terms }
    }

    pub fn symbol(s: PsiSymbol) -> Self {
        Self::term(Monomial(vec![(s, 1)]), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PsiPolynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The value of a polynomial with no symbols, or `None`.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = PsiPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Evaluates under an assignment of rationals to symbols. Returns `None`
    /// if some symbol is unassigned.
    pub fn eval<F>(&self, mut assign: F) -> Option<BigRational>
    where
        F: FnMut(&PsiSymbol) -> Option<BigRational>,
    {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.factors() {
                let x = assign(s)?;
                v *= num_traits::pow(x, *e as usize);
            }
            total += v;
        }
        Some(total)
    }

    /// All symbols that occur, in canonical order.
    pub fn symbols(&self) -> Vec<PsiSymbol> {
        let mut out: Vec<PsiSymbol> =
            self.terms.keys().flat_map(|m| m.factors().iter().map(|(s, _)| s.clone())).collect();
        out.sort();
        out.dedup();
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl Zero for PsiPolynomial {
    fn zero() -> Self {
        PsiPolynomial::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PsiPolynomial {
    fn one() -> Self {
        PsiPolynomial::constant(BigRational::one())
    }
}

impl Add for PsiPolynomial {
    type Output = PsiPolynomial;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl AddAssign<&PsiPolynomial> for PsiPolynomial {
    fn add_assign(&mut self, rhs: &PsiPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Sub for PsiPolynomial {
    type Output = PsiPolynomial;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for PsiPolynomial {
    type Output = PsiPolynomial;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for PsiPolynomial {
    type Output = PsiPolynomial;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Coefficient for PsiPolynomial {
    fn from_integer(n: &BigInt) -> Self {
        PsiPolynomial::constant(BigRational::from_integer(n.clone()))
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = PsiPolynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        PsiPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn scale(&self, r: &BigRational) -> Option<Self> {
        if r.is_zero() {
            return Some(PsiPolynomial::default());
        }
        Some(PsiPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect() })
    }
    fn try_inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        (!c.is_zero()).then(|| PsiPolynomial::constant(c.recip()))
    }
}

impl From<BigRational> for PsiPolynomial {
    fn from(c: BigRational) -> Self {
        PsiPolynomial::constant(c)
    }
}

impl fmt::Display for PsiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}
