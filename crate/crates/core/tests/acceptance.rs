//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use orbgenus::algebra::{binomial, factorial, Coefficient};
use orbgenus::classes::{brute_force_classes, centralizer_order, class_size, enumerate_classes};
use orbgenus::classfn::{
    augmentation, induce_young, inner_product, restrict_young, thm_d_induction_oracle,
    young_inner_product,
};
use orbgenus::genus::{
    hecke_from_log, hecke_operator, lambda_operations, sigma_n, todd_orbifold_series,
    total_symmetric_power, verify_dmvv,
};
use orbgenus::lattice::{enumerate_orbits, OrderMode};
use orbgenus::{ClassFunction, GenusModel, PsiPolynomial, TruncatedSeries};

type Q = BigRational;
type Outcome = Result<String, String>;

fn p(p: u64) -> OrderMode {
    OrderMode::p_power(p).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

/// 1. S_t = exp(Σ T_n t^n) as polynomial identities in free ψ-symbols.
fn dmvv_identity() -> Outcome {
    let start = Instant::now();
    let model = GenusModel::symbolic("x");
    let cases = [(1, 2, 12), (2, 2, 8), (2, 3, 9), (3, 2, 8)];
    for (h, prime, n) in cases {
        let r = verify_dmvv(&model, n, h, p(prime)).map_err(|e| e.to_string())?;
        ensure(r.equal, || format!("(h={h}, p={prime}, N={n}) differs at t^{:?}", r.first_mismatch))?;
        // the identity must be non-trivial: top coefficient involves many symbols
        ensure(r.lhs.coeff(n).len() > 1, || format!("(h={h}, p={prime}) degenerate top coefficient"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} cases equal in {:.2?}", cases.len(), start.elapsed()))
}

fn oracle_instances() -> Vec<(usize, usize, OrderMode)> {
    let mut v = Vec::new();
    for l in 0..=6 {
        v.push((1, l, OrderMode::AllOrders));
        v.push((1, l, p(2)));
    }
    for l in 0..=5 {
        v.push((2, l, p(2)));
        v.push((2, l, p(3)));
    }
    for l in 0..=4 {
        v.push((3, l, p(2)));
    }
    v
}

/// 2. Classification, centralizers and class sizes agree with brute force.
fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let instances = oracle_instances();
    for &(h, l, mode) in &instances {
        let oracle = brute_force_classes(h, l, mode, None).map_err(|e| e.to_string())?;
        let classes = enumerate_classes(h, l as u64, mode).map_err(|e| e.to_string())?;
        let oracle_classes: Vec<_> = oracle.iter().map(|(c, _)| c.clone()).collect();
        ensure(classes == oracle_classes, || format!("(h={h}, l={l}, {mode}) class sets differ"))?;
        for (c, count) in &oracle {
            ensure(&class_size(c) == count, || format!("(h={h}, l={l}, {mode}) class {c} size"))?;
            ensure(
                centralizer_order(c) * count == factorial(l as u64),
                || format!("(h={h}, l={l}, {mode}) class {c} centralizer"),
            )?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{} instances match in {:.2?}", instances.len(), start.elapsed()))
}

/// 3. Σ class_size = |Hom| on every instance, with pinned spot values.
fn mass_formula() -> Outcome {
    for (h, l, mode) in oracle_instances() {
        let oracle: BigInt =
            brute_force_classes(h, l, mode, None).map_err(|e| e.to_string())?.into_iter().map(|(_, c)| c).sum();
        let mass: BigInt = enumerate_classes(h, l as u64, mode).map_err(|e| e.to_string())?.iter().map(class_size).sum();
        ensure(mass == oracle, || format!("(h={h}, l={l}, {mode}): {mass} vs {oracle}"))?;
    }
    let spots = [(2, 2, 2u64, 4u64), (2, 3, 3, 9), (2, 2, 4, 88)];
    for (h, prime, l, expected) in spots {
        let mass: BigInt = enumerate_classes(h, l, p(prime)).unwrap().iter().map(class_size).sum();
        ensure(mass == BigInt::from(expected), || format!("(h={h}, p={prime}, l={l}): {mass} != {expected}"))?;
    }
    Ok("all instances; spot values 4, 9, 88".into())
}

/// 4. Σ Td_orb(M^n // Σ_n) t^n = (1 - t)^{-d}.
fn todd_product_formula() -> Outcome {
    let start = Instant::now();
    for d in [0i64, 1, 2, 5] {
        let series = todd_orbifold_series(&BigInt::from(d), 12).map_err(|e| e.to_string())?;
        let one_minus_t = TruncatedSeries::new(vec![Q::one(), -Q::one()], 12);
        let power = (0..d).fold(TruncatedSeries::one(12), |acc, _| acc.mul(&one_minus_t));
        let expected = power.invert().map_err(|e| e.to_string())?;
        ensure(series == expected, || format!("d={d}: {series}"))?;
        for n in 0..=12u64 {
            let b = Q::from_integer(binomial(&BigInt::from(d - 1 + n as i64), n));
            ensure(series.coeff(n as usize) == &b, || format!("d={d}, n={n}"))?;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("d in {{0,1,2,5}} through t^12 in {:.2?}", start.elapsed()))
}

/// 5. Orbit counts against brute-force subgroup enumeration and the
/// product generating function.
fn orbit_counts() -> Outcome {
    let mut checked = 0;
    for h in 1..=3usize {
        for n in 1..=16u32 {
            let orbits = enumerate_orbits(h, n as u64, OrderMode::AllOrders).map_err(|e| e.to_string())?;
            let subgroups = common::index_n_subgroups(h, n);
            ensure(orbits.len() == subgroups.len(), || {
                format!("(h={h}, n={n}): {} orbits vs {} subgroups", orbits.len(), subgroups.len())
            })?;
            let mut lifted: Vec<_> = subgroups.iter().map(|u| common::lift_to_lattice(h, n, u)).collect();
            lifted.sort();
            ensure(lifted == orbits, || format!("(h={h}, n={n}): lattices differ"))?;
            checked += 1;
        }
    }
    for h in 1..=3usize {
        for prime in [2u64, 3] {
            let factors: Vec<TruncatedSeries<Q>> = (0..h)
                .map(|i| TruncatedSeries::new(vec![Q::one(), -Q::from_integer(BigInt::from(prime.pow(i as u32)))], 4))
                .collect();
            let gf = factors.iter().fold(TruncatedSeries::one(4), |acc, f| acc.mul(&f.invert().unwrap()));
            for k in 0..=4u32 {
                let count = enumerate_orbits(h, prime.pow(k), p(prime)).unwrap().len();
                ensure(gf.coeff(k as usize) == &Q::from_integer(BigInt::from(count)), || {
                    format!("(h={h}, p={prime}, k={k}): {count} vs {}", gf.coeff(k as usize))
                })?;
            }
        }
    }
    Ok(format!("{checked} (h, n) pairs and 30 generating-function coefficients"))
}

/// 6. Frobenius reciprocity and multiplicativity of augmentation.
fn frobenius_and_multiplicativity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut configs = Vec::new();
    for (j, k) in [(1u64, 1u64), (1, 2), (2, 2), (2, 3)] {
        for h in [1usize, 2] {
            for mode in [OrderMode::AllOrders, p(2)] {
                configs.push((j, k, h, mode));
            }
        }
    }
    let instances = 100;
    for i in 0..instances {
        let (j, k, h, mode) = configs[i % configs.len()];
        let chi = common::random_class_function(&mut rng, h, j, mode);
        let xi = common::random_class_function(&mut rng, h, k, mode);
        let zeta = common::random_class_function(&mut rng, h, j + k, mode);
        let induced = induce_young(&chi, &xi).unwrap();
        let lhs = inner_product(&induced, &zeta).unwrap();
        let rhs = young_inner_product(&chi, &xi, &restrict_young(&zeta, j).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("instance {i} (j={j}, k={k}, h={h}, {mode}): reciprocity {lhs} vs {rhs}"))?;
        let aug = augmentation(&induced).unwrap();
        let prod = augmentation(&chi).unwrap() * augmentation(&xi).unwrap();
        ensure(aug == prod, || format!("instance {i}: augmentation {aug} vs {prod}"))?;
    }
    Ok(format!("{instances} random instances over {} configurations", configs.len()))
}

/// 7. Centralizer-ratio induction equals the literal induced-character sum.
fn induction_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut count = 0;
    for h in [1usize, 2] {
        for mode in [OrderMode::AllOrders, p(2), p(3)] {
            for n in 0..=5u64 {
                for j in 0..=n {
                    let chi = common::random_class_function(&mut rng, h, j, mode);
                    let xi = common::random_class_function(&mut rng, h, n - j, mode);
                    let fast = induce_young(&chi, &xi).unwrap();
                    let slow = thm_d_induction_oracle(&chi, &xi, None).unwrap();
                    ensure(fast == slow, || format!("(h={h}, {mode}, j={j}, k={})", n - j))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} (h, mode, j, k) instances"))
}

/// 8. σ_n(x + y) = Σ σ_i(x) σ_j(y).
fn exponential_property() -> Outcome {
    let (h, mode) = (2, p(2));
    let x = GenusModel::symbolic("x");
    let y = GenusModel::symbolic("y");
    let sum = GenusModel::Sum(vec![x.clone(), y.clone()]);
    for n in 0..=6u64 {
        let lhs = sigma_n(&sum, n, h, mode).unwrap();
        let mut rhs = PsiPolynomial::zero();
        for i in 0..=n {
            rhs += &sigma_n(&x, i, h, mode).unwrap().mul_ref(&sigma_n(&y, n - i, h, mode).unwrap());
        }
        ensure(lhs == rhs, || format!("n={n}"))?;
    }
    Ok("n = 0..6 at (h=2, p=2)".into())
}

/// 9. λ_n(d) = binomial(d, n) and log S_t recovers the Hecke operators.
fn lambda_and_hecke_round_trip() -> Outcome {
    for d in 0..=6i64 {
        let l = lambda_operations(&GenusModel::integer(d), 10, 1, OrderMode::AllOrders).unwrap();
        for n in 0..=10u64 {
            let expected = PsiPolynomial::from_integer(&binomial(&BigInt::from(d), n));
            ensure(l.coeff(n as usize) == &expected, || format!("λ_{n}({d}) = {}", l.coeff(n as usize)))?;
        }
    }
    let model = GenusModel::symbolic("x");
    let (h, mode, n_max) = (2, p(3), 9usize);
    let s = total_symmetric_power(&model, n_max, h, mode).unwrap();
    let t = hecke_from_log(&s).unwrap();
    for n in 1..=n_max as u64 {
        if mode.admits(n) {
            let expected = hecke_operator(&model, h, mode, n).unwrap();
            ensure(t[n as usize] == expected, || format!("T_{n} not recovered"))?;
        } else {
            ensure(t[n as usize].is_zero(), || format!("T_{n} should vanish"))?;
        }
    }
    Ok("d = 0..6 through λ_10; T_1, T_3, T_9 recovered at (2, 3, 9)".into())
}

/// 10. Inner product spot values.
fn inner_product_values() -> Outcome {
    let cases = [
        (2, 3, p(3), BigRational::new(3.into(), 2.into())),
        (2, 2, p(2), BigRational::from_integer(2.into())),
        (1, 3, OrderMode::AllOrders, BigRational::one()),
    ];
    for (h, l, mode, expected) in cases {
        let one = ClassFunction::<Q>::one(h, l, mode).unwrap();
        let b = inner_product(&one, &one).unwrap();
        ensure(b == expected, || format!("(h={h}, l={l}, {mode}): {b} != {expected}"))?;
    }
    Ok("b(1,1) = 3/2, 2, 1".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 DMVV identity", dmvv_identity),
        ("2 oracle equivalence", oracle_equivalence),
        ("3 mass formula", mass_formula),
        ("4 level-1 Todd product formula", todd_product_formula),
        ("5 transitive-orbit counts", orbit_counts),
        ("6 Frobenius reciprocity / augmentation", frobenius_and_multiplicativity),
        ("7 induced-character formula", induction_formula),
        ("8 exponential property of S_t", exponential_property),
        ("9 lambda-ring and Hecke round trips", lambda_and_hecke_round_trip),
        ("10 inner product values", inner_product_values),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
