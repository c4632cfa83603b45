//! Exhaustive enumeration of commuting tuples in `Σ_l`, used to check the
//! orbit-type classification independently.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{orbit_type_of_tuple, CommutingTuple, OrbitTypeMultiset, Permutation};
use crate::lattice::OrderMode;
use crate::{Error, Result};

/// Largest `l` the oracle accepts by default.
pub fn default_guard(h: usize) -> usize {
    match h {
        0..=2 => 6,
        3 => 5,
        _ => 4,
    }
}

/// Enumerates every commuting `h`-tuple of mode-admissible permutations of
/// `{0..l-1}`, buckets the tuples by orbit type and returns the counts in
/// canonical class order.
pub fn brute_force_classes(
    h: usize,
    l: usize,
    mode: OrderMode,
    guard: Option<usize>,
) -> Result<Vec<(OrbitTypeMultiset, BigInt)>> {
    if h < 1 {
        return Err(Error::InvalidLevel);
    }
    let guard = guard.unwrap_or_else(|| default_guard(h));
    if l > guard {
        return Err(Error::GuardExceeded { l, guard });
    }
    let elements: Vec<Permutation> =
        all_permutations(l).into_iter().filter(|g| g.has_admissible_order(mode)).collect();
    let mut counts: BTreeMap<OrbitTypeMultiset, u64> = BTreeMap::new();
    let mut chosen: Vec<&Permutation> = Vec::with_capacity(h);
    tuples_rec(h, &elements, &mut chosen, &mut |tuple| {
        let t = CommutingTuple::new(tuple.iter().map(|g| (*g).clone()).collect())
            .expect("oracle only builds commuting tuples");
        let ty = orbit_type_of_tuple(&t, mode)?;
        *counts.entry(ty).or_insert(0) += 1;
        Ok(())
    })?;
    Ok(counts.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect())
}

fn tuples_rec<'a>(
    h: usize,
    elements: &'a [Permutation],
    chosen: &mut Vec<&'a Permutation>,
    visit: &mut dyn FnMut(&[&Permutation]) -> Result<()>,
) -> Result<()> {
    if chosen.len() == h {
        return visit(chosen);
    }
    for g in elements {
        if chosen.iter().all(|c| c.commutes_with(g)) {
            chosen.push(g);
            tuples_rec(h, elements, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// All permutations of `{0..n-1}` in lexicographic order.
pub(crate) fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation(current.clone())];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Permutation(current.clone()));
    }
    out
}
