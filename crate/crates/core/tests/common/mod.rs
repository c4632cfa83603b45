//! Independent oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use orbgenus::lattice::{canonicalize, OrderMode, TransitiveOrbit};
use orbgenus::ClassFunction;
use rand::Rng;

/// The finite group `(Z/n)^h`, elements encoded base `n`.
struct Torus {
    h: usize,
    n: u32,
}

impl Torus {
    fn order(&self) -> u32 {
        self.n.pow(self.h as u32)
    }

    fn decode(&self, mut x: u32) -> Vec<u32> {
        let mut v = vec![0; self.h];
        for c in v.iter_mut().rev() {
            *c = x % self.n;
            x /= self.n;
        }
        v
    }

    fn add(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.decode(x), self.decode(y));
        a.iter().zip(&b).fold(0, |acc, (p, q)| acc * self.n + (p + q) % self.n)
    }

    /// `H + <g>` as a sorted element list.
    fn join(&self, subgroup: &[u32], g: u32) -> Vec<u32> {
        let mut multiples = vec![0u32];
        let mut m = g;
        while subgroup.binary_search(&m).is_err() {
            multiples.push(m);
            m = self.add(m, g);
        }
        let mut out: Vec<u32> =
            subgroup.iter().flat_map(|&x| multiples.iter().map(move |&k| (x, k))).map(|(x, k)| self.add(x, k)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn pairing(&self, x: u32, y: u32) -> u32 {
        let (a, b) = (self.decode(x), self.decode(y));
        a.iter().zip(&b).map(|(p, q)| p * q).sum::<u32>() % self.n
    }
}

/// All subgroups of `(Z/n)^h` of index `n`, found by exhaustive subgroup
/// generation.
///
/// Subgroups of order dividing `n` are grown one generator at a time from
/// the trivial group; those of order exactly `n` are mapped to their
/// annihilators under the standard pairing, which are exactly the index-`n`
/// subgroups. Each is returned as the list of its elements' coordinates.
pub fn index_n_subgroups(h: usize, n: u32) -> Vec<Vec<Vec<u32>>> {
    let g = Torus { h, n };
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut layer = vec![vec![0u32]];
    seen.insert(vec![0]);
    let mut order_n = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for sub in &layer {
            if sub.len() as u32 == n {
                order_n.push(sub.clone());
                continue;
            }
            for x in 0..g.order() {
                if sub.binary_search(&x).is_ok() {
                    continue;
                }
                let j = g.join(sub, x);
                if n % j.len() as u32 == 0 && seen.insert(j.clone()) {
                    next.push(j);
                }
            }
        }
        layer = next;
    }
    if n == 1 {
        order_n = vec![vec![0]];
    }
    let mut annihilators: HashSet<Vec<u32>> = HashSet::new();
    for v in &order_n {
        let u: Vec<u32> = (0..g.order()).filter(|&x| v.iter().all(|&y| g.pairing(x, y) == 0)).collect();
        assert_eq!(u.len() as u32 * n, g.order(), "annihilator has index n");
        annihilators.insert(u);
    }
    let mut out: Vec<Vec<Vec<u32>>> =
        annihilators.into_iter().map(|u| u.into_iter().map(|x| g.decode(x)).collect()).collect();
    out.sort();
    out
}

/// The sublattice `π⁻¹(U) ⊆ Z^h` for a subgroup `U` of `(Z/n)^h`, in canonical form.
pub fn lift_to_lattice(h: usize, n: u32, subgroup: &[Vec<u32>]) -> TransitiveOrbit {
    let mut gens: Vec<Vec<i64>> = subgroup.iter().map(|v| v.iter().map(|&x| x as i64).collect()).collect();
    for i in 0..h {
        let mut e = vec![0i64; h];
        e[i] = n as i64;
        gens.push(e);
    }
    canonicalize(h, &gens).expect("full rank")
}

/// A random rational class function with small numerators and denominators.
pub fn random_class_function(
    rng: &mut impl Rng,
    h: usize,
    l: u64,
    mode: OrderMode,
) -> ClassFunction<BigRational> {
    ClassFunction::from_fn(h, l, mode, |_| {
        BigRational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=5)))
    })
    .expect("valid parameters")
}
