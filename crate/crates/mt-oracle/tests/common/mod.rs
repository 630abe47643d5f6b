//! Property suites shared by the acceptance gate and the property tests.
//! Each suite panics on the first violation and returns the number of
//! checks it performed.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mt_oracle::arith::{Int, Rat};
use mt_oracle::lifting::{simple_datum, Preset};
use mt_oracle::matrix::{smith_normal_form, IntMatrix};
use mt_oracle::polarizable::{is_polarizable, is_polarizable_all_roots};
use mt_oracle::real_form::{all_paintings, VoganDiagram};
use mt_oracle::root_datum::{Cocharacter, Family, RootSystem};
use mt_oracle::serre::serre_multiplicities;

/// Random matrices through Smith normal form: diagonal shape, nonnegative
/// entries, divisibility chain, the transform identity U*A*V = S, and
/// unimodular transforms.
pub fn snf_contract_suite(iterations: usize, seed: u64) -> usize {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checks = 0;
    for _ in 0..iterations {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let mut a = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                a.set(i, j, Int::from(rng.gen_range(-9i64..=9)));
            }
        }
        let snf = smith_normal_form(&a);
        for i in 0..rows {
            for j in 0..cols {
                let v = snf.s.get(i, j);
                if i == j {
                    assert!(*v >= Int::zero(), "negative diagonal entry in {a:?}");
                } else {
                    assert!(v.is_zero(), "off-diagonal entry in the normal form of {a:?}");
                }
            }
        }
        for t in 1..rows.min(cols) {
            let prev = snf.s.get(t - 1, t - 1);
            let next = snf.s.get(t, t);
            if prev.is_zero() {
                assert!(next.is_zero(), "zero followed by nonzero on the diagonal");
            } else {
                assert!((next % prev).is_zero(), "diagonal divisibility fails for {a:?}");
            }
        }
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.s, "transform identity fails for {a:?}");
        assert!(snf.u.det().abs().is_one(), "left transform is not unimodular");
        assert!(snf.v.det().abs().is_one(), "right transform is not unimodular");
        checks += 1;
    }
    checks
}

fn random_root_system(rng: &mut StdRng, max_rank: usize) -> RootSystem {
    loop {
        let family = match rng.gen_range(0..4) {
            0 => Family::A,
            1 => Family::B,
            2 => Family::C,
            _ => Family::D,
        };
        if family.min_rank() > max_rank {
            continue;
        }
        let rank = rng.gen_range(family.min_rank()..=max_rank);
        return RootSystem::new(family, rank).unwrap();
    }
}

fn random_cocharacter(rng: &mut StdRng, rs: &RootSystem, bound: i64) -> Cocharacter {
    let mut mu = rs.zero_cocharacter();
    for b in rs.coweight_lattice().basis {
        let c = rng.gen_range(-bound..=bound);
        mu = mu.add(&b.scale(c));
    }
    mu
}

pub fn applicable_presets(family: Family) -> &'static [Preset] {
    match family {
        Family::A => &[Preset::Adjoint, Preset::SimplyConnected, Preset::Similitude],
        Family::C => &[Preset::Adjoint, Preset::SimplyConnected, Preset::Similitude],
        Family::B | Family::D => {
            &[Preset::Adjoint, Preset::SimplyConnected, Preset::So, Preset::GSpin]
        }
    }
}

fn box_search(gens: &[Vec<Rat>], target: &[Rat], bound: i64) -> bool {
    fn add_scaled(acc: &mut [Rat], g: &[Rat], k: i64) {
        let k = Rat::from_integer(Int::from(k));
        for (a, x) in acc.iter_mut().zip(g) {
            *a += &k * x;
        }
    }
    fn dfs(gens: &[Vec<Rat>], target: &[Rat], j: usize, acc: &mut [Rat], bound: i64) -> bool {
        if j == gens.len() {
            return acc == target;
        }
        add_scaled(acc, &gens[j], -bound);
        let mut c = -bound;
        loop {
            if dfs(gens, target, j + 1, acc, bound) {
                return true;
            }
            if c == bound {
                break;
            }
            add_scaled(acc, &gens[j], 1);
            c += 1;
        }
        add_scaled(acc, &gens[j], -bound);
        false
    }
    let mut acc = vec![Rat::zero(); target.len()];
    dfs(gens, target, 0, &mut acc, bound)
}

/// Membership in the generated lattice versus a brute-force coefficient box,
/// sound in both directions: a box hit must be accepted, and an accepted
/// vector must come with coefficients that reproduce it exactly.
pub fn lift_box_oracle_suite(iterations: usize, seed: u64) -> usize {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checks = 0;
    for _ in 0..iterations {
        let rs = random_root_system(&mut rng, 3);
        let presets = applicable_presets(rs.family());
        let preset = presets[rng.gen_range(0..presets.len())];
        let datum = simple_datum(preset, rs.clone()).unwrap();
        let mu = random_cocharacter(&mut rng, &rs, 2);

        let coefficients = datum.lift_coefficients(&mu);
        assert_eq!(coefficients.is_some(), datum.lifts_to(&mu));
        let proj = datum.projected_gens();
        if let Some(coeffs) = &coefficients {
            let mut acc = vec![Rat::zero(); rs.chi_dim()];
            for (c, g) in coeffs.iter().zip(&proj) {
                let c = Rat::from_integer(c.clone());
                for (a, x) in acc.iter_mut().zip(g) {
                    *a += &c * x;
                }
            }
            assert_eq!(acc, mu.coords(), "witness coefficients do not reproduce the vector");
        }
        if box_search(&proj, mu.coords(), 2) {
            assert!(
                coefficients.is_some(),
                "box search found a combination that lifts_to rejects ({} {preset:?})",
                rs
            );
        }
        checks += 1;
    }
    checks
}

/// The simple-root parity route against full root enumeration.
pub fn polarizable_routes_suite(iterations: usize, seed: u64) -> usize {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checks = 0;
    for _ in 0..iterations {
        let rs = random_root_system(&mut rng, 5);
        let rank = rs.rank();
        let painted: Vec<usize> = (1..=rank).filter(|_| rng.gen_bool(0.5)).collect();
        let diagram = VoganDiagram::inner(rs.clone(), &painted).unwrap();
        let mu = random_cocharacter(&mut rng, &rs, 3);
        assert_eq!(
            is_polarizable(&diagram, &mu).unwrap(),
            is_polarizable_all_roots(&diagram, &mu).unwrap(),
            "routes disagree on {rs} painted {painted:?}"
        );
        checks += 1;
    }
    checks
}

/// Compactness is additive: whenever the sum of two roots is a root, it is
/// compact iff the two agree. Exhaustive over every classical system of
/// rank at most six and every painting.
pub fn compactness_additivity_exhaustive() -> usize {
    let mut checks = 0;
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in family.min_rank()..=6 {
            let rs = RootSystem::new(family, rank).unwrap();
            let index: HashMap<Vec<i64>, usize> =
                rs.roots().iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
            for painted in all_paintings(rank) {
                let diagram = VoganDiagram::inner(rs.clone(), &painted).unwrap();
                let noncompact = diagram.noncompact_flags().unwrap();
                for (i, a) in rs.roots().iter().enumerate() {
                    for (j, b) in rs.roots().iter().enumerate() {
                        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        if let Some(&k) = index.get(&sum) {
                            assert_eq!(
                                noncompact[k],
                                noncompact[i] ^ noncompact[j],
                                "additivity fails on {rs} painted {painted:?}"
                            );
                            checks += 1;
                        }
                    }
                }
            }
        }
    }
    checks
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn elements(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &n in orders {
        let mut next = Vec::new();
        for prefix in &out {
            for d in 0..n {
                let mut e = prefix.clone();
                e.push(d);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

fn abelian_groups_up_to(max_order: u64) -> Vec<Vec<u64>> {
    fn extend(acc: &mut Vec<Vec<u64>>, prefix: Vec<u64>, product: u64, min_next: u64, max: u64) {
        if !prefix.is_empty() {
            acc.push(prefix.clone());
        }
        let mut n = min_next;
        while product * n <= max {
            let mut next = prefix.clone();
            next.push(n);
            extend(acc, next, product * n, n, max);
            n += 1;
        }
    }
    let mut acc = Vec::new();
    extend(&mut acc, Vec::new(), 1, 2, max_order);
    acc
}

/// The dimension of the reference module equals one (trivial orbit) plus the
/// number of characters taking the value -1 on the conjugation, counted by
/// direct enumeration rather than through orbits.
pub fn serre_dimension_identity_suite(max_order: u64) -> usize {
    let mut checks = 0;
    for orders in abelian_groups_up_to(max_order) {
        let n_exp = orders.iter().copied().fold(1, lcm);
        for conj in elements(&orders) {
            if conj.iter().all(|&c| c == 0) {
                continue;
            }
            if conj.iter().zip(&orders).any(|(&c, &n)| (2 * c) % n != 0) {
                continue;
            }
            let mv = serre_multiplicities(&orders, &conj).unwrap();
            let minus_one_count = elements(&orders)
                .iter()
                .filter(|a| {
                    let mut acc = 0u64;
                    for ((&ai, &ci), &ni) in a.iter().zip(&conj).zip(&orders) {
                        acc = (acc + ai * ci % ni * (n_exp / ni)) % n_exp;
                    }
                    n_exp % 2 == 0 && acc == n_exp / 2
                })
                .count() as u64;
            assert_eq!(
                mv.dimension(),
                1 + minus_one_count,
                "dimension identity fails for orders {orders:?} conj {conj:?}"
            );
            checks += 1;
        }
    }
    checks
}
