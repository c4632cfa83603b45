use std::collections::VecDeque;

use num_integer::Integer;

use super::OrbitTypeMultiset;
use crate::lattice::{canonicalize, is_power_of, OrderMode};
use crate::{Error, Result};

/// A bijection of `{0, ..., n-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation(pub(crate) Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation of `{0..n-1}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || touched[x] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            out[g.0[x]] = g.0[y];
        }
        Permutation(out)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.0.iter().enumerate().all(|(x, &y)| other.0[y] == self.0[other.0[x]])
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths().into_iter().fold(1u64, |acc, c| acc.lcm(&(c as u64)))
    }

    /// Whether the element's order is admissible in `mode`.
    pub fn has_admissible_order(&self, mode: OrderMode) -> bool {
        match mode {
            OrderMode::AllOrders => true,
            OrderMode::PPower(p) => self.cycle_lengths().iter().all(|&c| is_power_of(c as u64, p)),
        }
    }
}

/// An `h`-tuple of pairwise commuting permutations of a common degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CommutingTuple(Vec<Permutation>);

impl CommutingTuple {
    pub fn new(entries: Vec<Permutation>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidLevel);
        }
        let n = entries[0].degree();
        if let Some(g) = entries.iter().find(|g| g.degree() != n) {
            return Err(Error::InvalidPermutation(format!(
                "degree {} differs from {n}",
                g.degree()
            )));
        }
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if !entries[i].commutes_with(&entries[j]) {
                    return Err(Error::NonCommuting);
                }
            }
        }
        Ok(CommutingTuple(entries))
    }

    pub fn h(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0[0].degree()
    }

    pub fn entries(&self) -> &[Permutation] {
        &self.0
    }

    pub fn conjugate_by(&self, g: &Permutation) -> CommutingTuple {
        CommutingTuple(self.0.iter().map(|x| x.conjugate_by(g)).collect())
    }

    /// Splits a tuple that preserves the blocks `{0..j-1}` and `{j..l-1}`
    /// into its two restrictions, or returns `None`.
    pub fn split_at(&self, j: usize) -> Option<(CommutingTuple, CommutingTuple)> {
        let mut left = Vec::with_capacity(self.h());
        let mut right = Vec::with_capacity(self.h());
        for g in &self.0 {
            let imgs = g.images();
            if imgs[..j].iter().any(|&y| y >= j) {
                return None;
            }
            left.push(Permutation(imgs[..j].to_vec()));
            right.push(Permutation(imgs[j..].iter().map(|&y| y - j).collect()));
        }
        Some((CommutingTuple(left), CommutingTuple(right)))
    }
}

/// The orbit type of the `Z^h`-action defined by a commuting tuple.
///
/// Each orbit is explored breadth-first from its smallest point, recording
/// an exponent vector per point. Every edge `x -> g_i x` then yields the
/// stabilizer element `v(x) + e_i - v(g_i x)`, and these Schreier
/// generators span the stabilizer lattice.
pub fn orbit_type_of_tuple(t: &CommutingTuple, mode: OrderMode) -> Result<OrbitTypeMultiset> {
    let h = t.h();
    for (i, g) in t.entries().iter().enumerate() {
        if !g.has_admissible_order(mode) {
            return Err(Error::OrderViolation { index: i, what: mode.to_string() });
        }
    }
    let l = t.degree();
    let mut vectors: Vec<Option<Vec<i64>>> = vec![None; l];
    let mut entries = Vec::new();
    for base in 0..l {
        if vectors[base].is_some() {
            continue;
        }
        vectors[base] = Some(vec![0; h]);
        let mut queue = VecDeque::from([base]);
        let mut gens: Vec<Vec<i64>> = Vec::new();
        let mut size = 0u64;
        while let Some(x) = queue.pop_front() {
            size += 1;
            let vx = vectors[x].clone().expect("visited");
            for (i, g) in t.entries().iter().enumerate() {
                let y = g.apply(x);
                let mut w = vx.clone();
                w[i] += 1;
                match &vectors[y] {
                    Some(vy) => {
                        let s: Vec<i64> = w.iter().zip(vy).map(|(a, b)| a - b).collect();
                        if s.iter().any(|&c| c != 0) {
                            gens.push(s);
                        }
                    }
                    None => {
                        vectors[y] = Some(w);
                        queue.push_back(y);
                    }
                }
            }
        }
        let orbit = canonicalize(h, &gens)?;
        debug_assert_eq!(orbit.size_u64(), size);
        entries.push((orbit, 1));
    }
    OrbitTypeMultiset::from_entries(h, mode, entries)
}

/// A concrete commuting tuple in the given class: each orbit `Z^h/L` is laid
/// out on consecutive points in coset-representative order.
pub fn representative_tuple(class: &OrbitTypeMultiset) -> CommutingTuple {
    let h = class.h();
    let l = class.degree() as usize;
    let mut images: Vec<Vec<usize>> = vec![Vec::with_capacity(l); h];
    let mut offset = 0;
    for (t, a) in class.entries() {
        let pts = t.points();
        for _ in 0..a {
            for p in &pts {
                for (i, img) in images.iter_mut().enumerate() {
                    let mut v = p.clone();
                    v[i] += 1;
                    img.push(offset + t.point_index(&t.reduce(&v)));
                }
            }
            offset += pts.len();
        }
    }
    if h == 0 {
        return CommutingTuple(Vec::new());
    }
    CommutingTuple(images.into_iter().map(Permutation).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::enumerate_classes;
    use crate::lattice::TransitiveOrbit;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn permutation_basics() {
        let c = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        assert_eq!(c.images(), &[1, 2, 0, 3]);
        assert_eq!(c.order(), 3);
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(4));
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let d = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert!(t.commutes_with(&d));
        assert!(!t.commutes_with(&c));
        assert!(c.has_admissible_order(OrderMode::PPower(3)));
        assert!(!c.has_admissible_order(OrderMode::PPower(2)));
    }

    #[test]
    fn conjugation_matches_composition() {
        let g = Permutation::from_cycles(5, &[&[0, 3], &[1, 4, 2]]).unwrap();
        let x = Permutation::from_cycles(5, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(x.conjugate_by(&g), g.compose(&x).compose(&g.inverse()));
    }

    #[test]
    fn tuple_validation() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(CommutingTuple::new(vec![a.clone(), b]), Err(Error::NonCommuting));
        assert!(CommutingTuple::new(vec![a, Permutation::identity(2)]).is_err());
        assert_eq!(CommutingTuple::new(vec![]), Err(Error::InvalidLevel));
    }

    #[test]
    fn orbit_type_examples() {
        let e = CommutingTuple::new(vec![Permutation::identity(3); 2]).unwrap();
        assert_eq!(
            orbit_type_of_tuple(&e, OrderMode::AllOrders).unwrap(),
            OrbitTypeMultiset::identity(2, OrderMode::AllOrders, 3)
        );

        let c3 = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let ty = orbit_type_of_tuple(&CommutingTuple::new(vec![c3]).unwrap(), OrderMode::AllOrders)
            .unwrap();
        let t3 = TransitiveOrbit::from_hnf(vec![vec![3]]).unwrap();
        assert_eq!(ty.entries().collect::<Vec<_>>(), vec![(&t3, 1)]);

        let s = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let pair = CommutingTuple::new(vec![s.clone(), s]).unwrap();
        let ty = orbit_type_of_tuple(&pair, OrderMode::PPower(2)).unwrap();
        let diag = TransitiveOrbit::from_hnf(vec![vec![1, 1], vec![0, 2]]).unwrap();
        assert_eq!(ty.entries().collect::<Vec<_>>(), vec![(&diag, 1)]);
    }

    #[test]
    fn orbit_type_rejects_inadmissible_orders() {
        let c3 = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let t = CommutingTuple::new(vec![c3]).unwrap();
        assert!(matches!(
            orbit_type_of_tuple(&t, OrderMode::PPower(2)),
            Err(Error::OrderViolation { index: 0, .. })
        ));
    }

    #[test]
    fn representatives_realize_their_class() {
        for (h, l, mode) in [
            (1, 6, OrderMode::AllOrders),
            (2, 4, OrderMode::PPower(2)),
            (2, 5, OrderMode::AllOrders),
            (3, 4, OrderMode::PPower(2)),
            (2, 3, OrderMode::PPower(3)),
        ] {
            for c in enumerate_classes(h, l, mode).unwrap() {
                let t = representative_tuple(&c);
                assert_eq!(t.degree() as u64, l);
                CommutingTuple::new(t.entries().to_vec()).unwrap();
                assert_eq!(orbit_type_of_tuple(&t, mode).unwrap(), c);
            }
        }
    }

    #[test]
    fn orbit_type_is_conjugation_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (h, l, mode) in [(2, 5, OrderMode::AllOrders), (3, 4, OrderMode::PPower(2))] {
            for c in enumerate_classes(h, l, mode).unwrap() {
                let t = representative_tuple(&c);
                for _ in 0..5 {
                    let mut imgs: Vec<usize> = (0..l as usize).collect();
                    imgs.shuffle(&mut rng);
                    let g = Permutation::new(imgs).unwrap();
                    assert_eq!(orbit_type_of_tuple(&t.conjugate_by(&g), mode).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn split_at_respects_blocks() {
        let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let t = CommutingTuple::new(vec![a]).unwrap();
        let (l, r) = t.split_at(2).unwrap();
        assert_eq!(l.entries()[0].images(), &[1, 0]);
        assert_eq!(r.entries()[0].images(), &[1, 0]);
        assert!(t.split_at(1).is_none());
    }
}
