//! Finite transitive `Z^h`-sets as finite-index sublattices of `Z^h`.
//!
//! A transitive `Z^h`-set `T` is determined up to isomorphism by the
//! stabilizer `L` of any of its points, and `T ≅ Z^h / L`. We store `L` by
//! its row-style Hermite normal form: an upper-triangular integer matrix
//! whose rows generate `L`, with positive diagonal and every entry above a
//! pivot reduced into `[0, pivot)`. That form is unique, so isomorphism of
//! orbits is equality of matrices.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Which orbit sizes are admissible: every size (`Z^h`-sets) or only powers
/// of a fixed prime (`Z_p^h`-sets).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum OrderMode {
    AllOrders,
    PPower(u64),
}

impl OrderMode {
    pub fn p_power(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(OrderMode::PPower(p))
        } else {
            Err(Error::InvalidPrime(p))
        }
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            OrderMode::AllOrders => None,
            OrderMode::PPower(p) => Some(*p),
        }
    }

    /// Whether `n` can be the size of an orbit in this mode.
    pub fn admits(&self, n: u64) -> bool {
        match *self {
            OrderMode::AllOrders => n >= 1,
            OrderMode::PPower(p) => is_power_of(n, p),
        }
    }

    /// Admissible sizes in `1..=max`, ascending.
    pub fn sizes_up_to(&self, max: u64) -> Vec<u64> {
        match *self {
            OrderMode::AllOrders => (1..=max).collect(),
            OrderMode::PPower(p) => {
                let mut out = Vec::new();
                let mut q = 1u64;
                while q <= max {
                    out.push(q);
                    match q.checked_mul(p) {
                        Some(next) => q = next,
                        None => break,
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for OrderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderMode::AllOrders => write!(f, "all orders"),
            OrderMode::PPower(p) => write!(f, "{p}-power"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// A canonical finite transitive `Z^h`-set `Z^h / L`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TransitiveOrbit {
    hnf: Vec<Vec<i64>>,
    size: BigInt,
}

impl TransitiveOrbit {
    /// The one-point orbit, `L = Z^h`.
    pub fn trivial(h: usize) -> Self {
        let hnf = (0..h).map(|i| (0..h).map(|j| i64::from(i == j)).collect()).collect();
        TransitiveOrbit { hnf, size: BigInt::one() }
    }

    /// Accepts a matrix only if it is already in canonical form.
    pub fn from_hnf(hnf: Vec<Vec<i64>>) -> Result<Self> {
        let h = hnf.len();
        if h == 0 {
            return Err(Error::InvalidLevel);
        }
        for (i, row) in hnf.iter().enumerate() {
            if row.len() != h {
                return Err(Error::DimensionMismatch { expected: h, found: row.len() });
            }
            if row[i] <= 0 {
                return Err(Error::NotCanonical(format!("pivot {i} is not positive")));
            }
            for j in 0..i {
                if row[j] != 0 {
                    return Err(Error::NotCanonical(format!("entry ({i},{j}) below the diagonal")));
                }
            }
        }
        for i in 0..h {
            for j in i + 1..h {
                if hnf[i][j] < 0 || hnf[i][j] >= hnf[j][j] {
                    return Err(Error::NotCanonical(format!("entry ({i},{j}) not reduced")));
                }
            }
        }
        let size = hnf.iter().enumerate().map(|(i, r)| BigInt::from(r[i])).product();
        Ok(TransitiveOrbit { hnf, size })
    }

    pub fn h(&self) -> usize {
        self.hnf.len()
    }

    pub fn hnf(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// Number of points, `[Z^h : L]`.
    pub fn size(&self) -> &BigInt {
        &self.size
    }

    pub fn size_u64(&self) -> u64 {
        self.size.to_u64().expect("orbit sizes fit in u64")
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.h()).map(|i| self.hnf[i][i]).collect()
    }

    fn off_diagonal(&self) -> Vec<i64> {
        let h = self.h();
        (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j))).map(|(i, j)| self.hnf[i][j]).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.size.is_one()
    }

    /// Reduces a vector of `Z^h` to its coset representative, the unique
    /// vector `v ≡ w (mod L)` with `0 <= v_i < hnf[i][i]`.
    pub fn reduce(&self, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        for (i, row) in self.hnf.iter().enumerate() {
            let q = Integer::div_floor(&v[i], &row[i]);
            if q != 0 {
                for j in i..v.len() {
                    v[j] -= q * row[j];
                }
            }
        }
        v
    }

    /// Coset representatives of `Z^h / L` in lexicographic order; the point
    /// at index 0 is the origin.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let diag = self.diagonal();
        let mut out = vec![Vec::new()];
        for d in diag {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..d).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Index of a reduced point in [`points`](Self::points) order.
    pub fn point_index(&self, v: &[i64]) -> usize {
        let diag = self.diagonal();
        v.iter().zip(&diag).fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    /// Whether `v` lies in the stabilizer lattice.
    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

impl Ord for TransitiveOrbit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.h()
            .cmp(&other.h())
            .then_with(|| self.size.cmp(&other.size))
            .then_with(|| self.diagonal().cmp(&other.diagonal()))
            .then_with(|| self.off_diagonal().cmp(&other.off_diagonal()))
    }
}

impl PartialOrd for TransitiveOrbit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TransitiveOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.hnf.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(","))?;
        }
        write!(f, "]")
    }
}

/// All canonical orbits with exactly `n` points, in canonical order.
pub fn enumerate_orbits(h: usize, n: u64, mode: OrderMode) -> Result<Vec<TransitiveOrbit>> {
    if h < 1 {
        return Err(Error::InvalidLevel);
    }
    if !mode.admits(n) {
        return Err(Error::InadmissibleSize { size: n, mode: mode.to_string() });
    }
    let mut out = Vec::new();
    for diag in ordered_factorizations(n, h) {
        let slots: Vec<(usize, usize)> =
            (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j))).collect();
        let mut entries = vec![0i64; slots.len()];
        loop {
            let mut hnf: Vec<Vec<i64>> = vec![vec![0; h]; h];
            for i in 0..h {
                hnf[i][i] = diag[i] as i64;
            }
            for (&(i, j), &e) in slots.iter().zip(&entries) {
                hnf[i][j] = e;
            }
            out.push(TransitiveOrbit { hnf, size: BigInt::from(n) });
            // odometer, last slot fastest
            let mut k = slots.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                let (_, j) = slots[k];
                entries[k] += 1;
                if entries[k] < diag[j] as i64 {
                    break;
                }
                entries[k] = 0;
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if slots.is_empty() || k == usize::MAX {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// All canonical orbits of every admissible size in `1..=max`.
pub fn orbits_up_to(h: usize, max: u64, mode: OrderMode) -> Result<Vec<TransitiveOrbit>> {
    let mut out = Vec::new();
    for n in mode.sizes_up_to(max) {
        out.extend(enumerate_orbits(h, n, mode)?);
    }
    Ok(out)
}

fn ordered_factorizations(n: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for d in 1..=n {
        if n % d == 0 {
            for mut rest in ordered_factorizations(n / d, parts - 1) {
                rest.insert(0, d);
                out.push(rest);
            }
        }
    }
    out
}

/// The canonical orbit whose stabilizer is generated by `generators`.
pub fn canonicalize(h: usize, generators: &[Vec<i64>]) -> Result<TransitiveOrbit> {
    if h < 1 {
        return Err(Error::InvalidLevel);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(generators.len());
    for g in generators {
        if g.len() != h {
            return Err(Error::DimensionMismatch { expected: h, found: g.len() });
        }
        if g.iter().any(|&x| x != 0) {
            rows.push(g.iter().map(|&x| BigInt::from(x)).collect());
        }
    }
    hnf_rows(h, rows)
}

fn hnf_rows(h: usize, mut rows: Vec<Vec<BigInt>>) -> Result<TransitiveOrbit> {
    for c in 0..h {
        // gcd elimination in column c among rows c..
        loop {
            let pivot = (c..rows.len())
                .filter(|&r| !rows[r][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(pr) = pivot else {
                return Err(Error::RankDeficient);
            };
            rows.swap(c, pr);
            let mut done = true;
            for r in c + 1..rows.len() {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = rows[r][c].div_floor(&rows[c][c]);
                let pivot_row = rows[c].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &q * y;
                }
                if !rows[r][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[c][c].is_negative() {
            for x in rows[c].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = rows[c].clone();
        for r in 0..c {
            let q = rows[r][c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &q * y;
                }
            }
        }
        rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    }
    rows.truncate(h);
    let size: BigInt = (0..h).map(|i| rows[i][i].clone()).product();
    let hnf = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| x.to_i64().ok_or(Error::Overflow("HNF entry exceeds i64")))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TransitiveOrbit { hnf, size })
}

/// `|Aut_{Z^h}(T)|`; translations by `Z^h` act simply transitively, so this
/// is `|T|`.
pub fn aut_order(t: &TransitiveOrbit) -> BigInt {
    t.size().clone()
}
