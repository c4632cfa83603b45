//! Conjugacy classes of commuting `h`-tuples in `Σ_l`.
//!
//! A commuting tuple `(g_1, ..., g_h)` makes `{0, ..., l-1}` a `Z^h`-set.
//! Two tuples are conjugate iff the resulting `Z^h`-sets are isomorphic, so
//! a class is an [`OrbitTypeMultiset`] `Σ a_T T` with `Σ a_T |T| = l`. The
//! centralizer of such a tuple is `∏_T Aut(T)^{a_T} ⋊ Σ_{a_T}` and
//! `|Aut(T)| = |T|`.

mod oracle;
mod perm;

pub use oracle::{brute_force_classes, default_guard};
pub(crate) use oracle::all_permutations;
pub use perm::{orbit_type_of_tuple, representative_tuple, CommutingTuple, Permutation};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::factorial;
use crate::lattice::{orbits_up_to, OrderMode, TransitiveOrbit};
use crate::{Error, Result};

/// The class descriptor `Σ a_T T` of a commuting tuple.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrbitTypeMultiset {
    h: usize,
    mode: OrderMode,
    entries: BTreeMap<TransitiveOrbit, u32>,
}

impl OrbitTypeMultiset {
    /// The empty multiset, the unique class of `Σ_0`.
    pub fn empty(h: usize, mode: OrderMode) -> Self {
        OrbitTypeMultiset { h, mode, entries: BTreeMap::new() }
    }

    /// `l` copies of the trivial orbit: the class of the identity tuple.
    pub fn identity(h: usize, mode: OrderMode, l: u32) -> Self {
        let mut m = Self::empty(h, mode);
        if l > 0 {
            m.entries.insert(TransitiveOrbit::trivial(h), l);
        }
        m
    }

    pub fn from_entries(
        h: usize,
        mode: OrderMode,
        entries: impl IntoIterator<Item = (TransitiveOrbit, u32)>,
    ) -> Result<Self> {
        if h < 1 {
            return Err(Error::InvalidLevel);
        }
        let mut m = Self::empty(h, mode);
        for (t, a) in entries {
            if t.h() != h {
                return Err(Error::DimensionMismatch { expected: h, found: t.h() });
            }
            if !mode.admits(t.size_u64()) {
                return Err(Error::InadmissibleSize { size: t.size_u64(), mode: mode.to_string() });
            }
            if a > 0 {
                *m.entries.entry(t).or_insert(0) += a;
            }
        }
        Ok(m)
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn mode(&self) -> OrderMode {
        self.mode
    }

    pub fn entries(&self) -> impl Iterator<Item = (&TransitiveOrbit, u32)> {
        self.entries.iter().map(|(t, &a)| (t, a))
    }

    pub fn multiplicity(&self, t: &TransitiveOrbit) -> u32 {
        self.entries.get(t).copied().unwrap_or(0)
    }

    /// `l = Σ a_T |T|`.
    pub fn degree(&self) -> u64 {
        self.entries.iter().map(|(t, &a)| t.size_u64() * u64::from(a)).sum()
    }

    /// Number of orbits, `Σ a_T`.
    pub fn orbit_count(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Disjoint union `a ⊎ b`.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, &a) in &other.entries {
            *out.entries.entry(t.clone()).or_insert(0) += a;
        }
        Ok(out)
    }

    /// All ways to write `self = a ⊎ b` with `deg a = j`, as `(a, b)`.
    pub fn splittings(&self, j: u64) -> Vec<(Self, Self)> {
        let items: Vec<(&TransitiveOrbit, u32)> = self.entries().collect();
        let mut out = Vec::new();
        let mut chosen = vec![0u32; items.len()];
        self.split_rec(&items, 0, j, &mut chosen, &mut out);
        out
    }

    fn split_rec(
        &self,
        items: &[(&TransitiveOrbit, u32)],
        idx: usize,
        remaining: u64,
        chosen: &mut Vec<u32>,
        out: &mut Vec<(Self, Self)>,
    ) {
        if idx == items.len() {
            if remaining == 0 {
                let mut a = Self::empty(self.h, self.mode);
                let mut b = Self::empty(self.h, self.mode);
                for ((t, m), &c) in items.iter().zip(chosen.iter()) {
                    if c > 0 {
                        a.entries.insert((*t).clone(), c);
                    }
                    if *m > c {
                        b.entries.insert((*t).clone(), m - c);
                    }
                }
                out.push((a, b));
            }
            return;
        }
        let (t, m) = items[idx];
        let size = t.size_u64();
        for c in 0..=m {
            let used = size * u64::from(c);
            if used > remaining {
                break;
            }
            chosen[idx] = c;
            self.split_rec(items, idx + 1, remaining - used, chosen, out);
        }
        chosen[idx] = 0;
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.h != other.h || self.mode != other.mode {
            return Err(Error::ParameterMismatch(format!(
                "(h={}, {}) vs (h={}, {})",
                self.h, self.mode, other.h, other.mode
            )));
        }
        Ok(())
    }

    /// Orbits listed with repetition, ascending.
    fn expanded(&self) -> impl Iterator<Item = &TransitiveOrbit> {
        self.entries.iter().flat_map(|(t, &a)| std::iter::repeat(t).take(a as usize))
    }
}

impl Ord for OrbitTypeMultiset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.h
            .cmp(&other.h)
            .then_with(|| self.mode.cmp(&other.mode))
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.expanded().cmp(other.expanded()))
    }
}

impl PartialOrd for OrbitTypeMultiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrbitTypeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, a)) in self.entries().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if a == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{a}{t}")?;
            }
        }
        Ok(())
    }
}

/// Every class of commuting `h`-tuples (of mode-admissible elements) in
/// `Σ_l`, each once, in canonical order.
pub fn enumerate_classes(h: usize, l: u64, mode: OrderMode) -> Result<Vec<OrbitTypeMultiset>> {
    if h < 1 {
        return Err(Error::InvalidLevel);
    }
    let orbits = orbits_up_to(h, l, mode)?;
    let mut out = Vec::new();
    let mut current = OrbitTypeMultiset::empty(h, mode);
    classes_rec(&orbits, 0, l, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn classes_rec(
    orbits: &[TransitiveOrbit],
    idx: usize,
    remaining: u64,
    current: &mut OrbitTypeMultiset,
    out: &mut Vec<OrbitTypeMultiset>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    if idx == orbits.len() {
        return;
    }
    let t = &orbits[idx];
    let size = t.size_u64();
    let max = remaining / size;
    for a in (0..=max).rev() {
        if a > 0 {
            current.entries.insert(t.clone(), a as u32);
        } else {
            current.entries.remove(t);
        }
        classes_rec(orbits, idx + 1, remaining - a * size, current, out);
    }
    current.entries.remove(t);
}

/// `|C(α)| = ∏_T |T|^{a_T} · a_T!`.
pub fn centralizer_order(class: &OrbitTypeMultiset) -> BigInt {
    class.entries().fold(BigInt::one(), |acc, (t, a)| {
        acc * num_traits::pow(t.size().clone(), a as usize) * factorial(u64::from(a))
    })
}

/// `|[α]| = l! / |C(α)|`.
pub fn class_size(class: &OrbitTypeMultiset) -> BigInt {
    factorial(class.degree()) / centralizer_order(class)
}
