//! The center condition.
//!
//! The character group of the center, as a module over the Galois group of a
//! finite abelian extension, must embed into the character group of the
//! reference torus attached to that group together with its distinguished
//! complex conjugation. Both sides decompose over the rationals into
//! irreducibles indexed by Galois orbits of complex characters, so the test
//! is pointwise domination of multiplicity vectors. Multiplicities of an
//! integer representation are computed exactly with Ramanujan sums — no
//! floating point and no cyclotomic arithmetic.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{rat_kernel, solve_columns, IntMatrix};

/// Euler's totient by trial division.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "phi of zero");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Möbius function by trial division; 0 on non-squarefree input.
pub fn moebius(n: u64) -> i64 {
    assert!(n > 0, "moebius of zero");
    let mut n = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ramanujan sum c_d(k): the sum of the k-th powers of the primitive d-th
/// roots of unity, which is an integer.
pub fn ramanujan_sum(d: u64, k: u64) -> i64 {
    let g = if k % d == 0 { d } else { gcd(d, k % d) };
    let m = d / g;
    let mu = moebius(m);
    if mu == 0 {
        0
    } else {
        mu * (euler_phi(d) / euler_phi(m)) as i64
    }
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

/// A finite abelian group with a marked element of order at most two, acting
/// by integer matrices on a lattice.
#[derive(Debug, Clone)]
pub struct GaloisModule {
    orders: Vec<u64>,
    conj: Vec<u64>,
    action: Vec<IntMatrix>,
    rank: usize,
}

impl GaloisModule {
    pub fn new(orders: Vec<u64>, conj: Vec<u64>, action: Vec<IntMatrix>) -> Result<GaloisModule> {
        if orders.is_empty() {
            return Err(Error::InvalidGaloisModule("at least one cyclic factor is required".into()));
        }
        if let Some(&n) = orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGaloisModule(format!("cyclic factor of order {n}; orders must be at least 2")));
        }
        if conj.len() != orders.len() {
            return Err(Error::InvalidGaloisModule(format!(
                "conjugation has {} components for {} cyclic factors",
                conj.len(),
                orders.len()
            )));
        }
        for (i, (&c, &n)) in conj.iter().zip(&orders).enumerate() {
            if c >= n {
                return Err(Error::InvalidGaloisModule(format!(
                    "conjugation component {i} is {c}, out of range for order {n}"
                )));
            }
            if (2 * c) % n != 0 {
                return Err(Error::InvalidGaloisModule(format!(
                    "conjugation component {i} does not have order dividing two"
                )));
            }
        }
        if action.len() != orders.len() {
            return Err(Error::InvalidGaloisModule(format!(
                "{} action matrices for {} cyclic factors",
                action.len(),
                orders.len()
            )));
        }
        let rank = action[0].n_rows();
        if rank == 0 {
            return Err(Error::InvalidGaloisModule("the module must have positive rank".into()));
        }
        for (i, m) in action.iter().enumerate() {
            if m.n_rows() != rank || m.n_cols() != rank {
                return Err(Error::InvalidGaloisModule(format!(
                    "action matrix {i} is {}x{}, expected {rank}x{rank}",
                    m.n_rows(),
                    m.n_cols()
                )));
            }
        }
        let id = IntMatrix::identity(rank);
        for (i, (m, &n)) in action.iter().zip(&orders).enumerate() {
            if matrix_pow(m, n) != id {
                return Err(Error::InvalidGaloisModule(format!(
                    "action matrix {i} does not have order dividing {n}"
                )));
            }
        }
        for i in 0..action.len() {
            for j in i + 1..action.len() {
                if action[i].mul(&action[j]) != action[j].mul(&action[i]) {
                    return Err(Error::InvalidGaloisModule(format!(
                        "action matrices {i} and {j} do not commute"
                    )));
                }
            }
        }
        Ok(GaloisModule { orders, conj, action, rank })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn conj(&self) -> &[u64] {
        &self.conj
    }

    pub fn action(&self) -> &[IntMatrix] {
        &self.action
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group_order(&self) -> u64 {
        self.orders.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().copied().fold(1, lcm)
    }

    pub fn conj_is_trivial(&self) -> bool {
        self.conj.iter().all(|&c| c == 0)
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        mixed_radix(&self.orders)
    }

    /// The matrix by which a group element acts.
    pub fn act(&self, g: &[u64]) -> IntMatrix {
        assert_eq!(g.len(), self.orders.len(), "element length mismatch");
        let mut m = IntMatrix::identity(self.rank);
        for (mat, &e) in self.action.iter().zip(g) {
            m = m.mul(&matrix_pow(mat, e));
        }
        m
    }

    pub fn trace(&self, g: &[u64]) -> Int {
        let m = self.act(g);
        (0..self.rank).map(|i| m.get(i, i).clone()).sum()
    }

    pub fn conj_matrix(&self) -> IntMatrix {
        self.act(&self.conj)
    }
}

fn matrix_pow(m: &IntMatrix, e: u64) -> IntMatrix {
    let mut acc = IntMatrix::identity(m.n_rows());
    for _ in 0..e {
        acc = acc.mul(m);
    }
    acc
}

fn mixed_radix(orders: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for &n in orders {
        let mut next = Vec::with_capacity(out.len() * n as usize);
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

/// A Galois orbit of complex characters of the abelian group, i.e. one
/// irreducible rational representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterOrbit {
    /// lexicographically least exponent vector in the orbit
    pub label: Vec<u64>,
    pub members: Vec<Vec<u64>>,
    /// order of the characters in the orbit (they all agree)
    pub order: u64,
}

impl CharacterOrbit {
    /// Dimension of the attached rational irreducible.
    pub fn dimension(&self) -> u64 {
        self.members.len() as u64
    }
}

/// All character orbits, sorted by label.
pub fn character_orbits(orders: &[u64]) -> Vec<CharacterOrbit> {
    let n_exp = orders.iter().copied().fold(1, lcm);
    let mut seen: BTreeMap<Vec<u64>, ()> = BTreeMap::new();
    let mut orbits = Vec::new();
    for a in mixed_radix(orders) {
        if seen.contains_key(&a) {
            continue;
        }
        let mut members = Vec::new();
        for t in (1..=n_exp).filter(|t| gcd(*t, n_exp) == 1) {
            let ta: Vec<u64> = a.iter().zip(orders).map(|(&ai, &ni)| (ai * t) % ni).collect();
            if !seen.contains_key(&ta) {
                seen.insert(ta.clone(), ());
                members.push(ta);
            }
        }
        members.sort();
        let label = members[0].clone();
        let order = a
            .iter()
            .zip(orders)
            .map(|(&ai, &ni)| ni / gcd(ni, if ai == 0 { ni } else { ai }))
            .fold(1, lcm);
        debug_assert_eq!(members.len() as u64, euler_phi(order));
        orbits.push(CharacterOrbit { label, members, order });
    }
    orbits.sort_by(|x, y| x.label.cmp(&y.label));
    orbits
}

/// Value of the pairing between an exponent vector and a group element,
/// expressed in Z/N for N the group exponent.
fn pairing_mod_exponent(orders: &[u64], n_exp: u64, a: &[u64], g: &[u64]) -> u64 {
    let mut acc: u64 = 0;
    for ((&ai, &gi), &ni) in a.iter().zip(g).zip(orders) {
        acc = (acc + ai * gi % ni * (n_exp / ni)) % n_exp;
    }
    acc
}

/// Multiplicity of each character orbit, keyed by orbit label. Orbits with
/// multiplicity zero are present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    mults: BTreeMap<Vec<u64>, u64>,
    dimension: u64,
}

impl MultiplicityVector {
    fn new(entries: Vec<(CharacterOrbit, u64)>) -> MultiplicityVector {
        let mut mults = BTreeMap::new();
        let mut dimension = 0;
        for (orbit, m) in entries {
            dimension += m * orbit.dimension();
            mults.insert(orbit.label, m);
        }
        MultiplicityVector { mults, dimension }
    }

    pub fn get(&self, label: &[u64]) -> u64 {
        self.mults.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u64>, u64)> {
        self.mults.iter().map(|(k, &v)| (k, v))
    }

    /// Total dimension, i.e. the rank of a module with these multiplicities.
    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    /// Pointwise comparison; both vectors must be over the same group.
    pub fn dominated_by(&self, other: &MultiplicityVector) -> bool {
        debug_assert_eq!(
            self.mults.keys().collect::<Vec<_>>(),
            other.mults.keys().collect::<Vec<_>>()
        );
        self.mults.iter().all(|(label, &m)| m <= other.get(label))
    }
}

/// Multiplicities of the reference torus character module for the group with
/// the given cyclic orders and marked conjugation: one copy of the trivial
/// orbit, one copy of every orbit on which the conjugation acts by -1,
/// nothing else. The conjugation must be nontrivial, otherwise no
/// polarizable structure exists and the module is meaningless.
pub fn serre_multiplicities(orders: &[u64], conj: &[u64]) -> Result<MultiplicityVector> {
    if conj.iter().all(|&c| c == 0) {
        return Err(Error::TrivialConjugation);
    }
    let n_exp = orders.iter().copied().fold(1, lcm);
    let mut entries = Vec::new();
    for orbit in character_orbits(orders) {
        let m = if orbit.label.iter().all(|&x| x == 0) {
            1
        } else {
            // the orbit takes the value -1 on the conjugation iff the
            // pairing lands on the half turn; this is orbit-invariant
            let k = pairing_mod_exponent(orders, n_exp, &orbit.label, conj);
            u64::from(n_exp % 2 == 0 && k == n_exp / 2)
        };
        entries.push((orbit, m));
    }
    Ok(MultiplicityVector::new(entries))
}

/// Exact multiplicities of the rational representation carried by the
/// module, computed orbit by orbit with Ramanujan sums.
pub fn module_multiplicities(module: &GaloisModule) -> MultiplicityVector {
    let orders = module.orders();
    let n_exp = module.exponent();
    let elements = module.elements();
    let traces: Vec<Int> = elements.iter().map(|g| module.trace(g)).collect();
    let group_order = Int::from(module.group_order());

    let mut entries = Vec::new();
    for orbit in character_orbits(orders) {
        let d = orbit.order;
        let mut acc = Int::zero();
        for (g, tr) in elements.iter().zip(&traces) {
            let k_exp = pairing_mod_exponent(orders, n_exp, &orbit.label, g);
            // the character has order d, so its value is a d-th root of unity
            debug_assert_eq!(k_exp * d % n_exp, 0);
            let k_d = k_exp * d / n_exp;
            acc += Int::from(ramanujan_sum(d, k_d)) * tr;
        }
        let denom = &group_order * Int::from(orbit.dimension());
        let (q, r) = acc.div_rem(&denom);
        assert!(r.is_zero(), "orbit multiplicity is not an integer");
        assert!(q >= Int::zero(), "negative orbit multiplicity");
        let m = u64::try_from(q).expect("multiplicity fits in u64");
        entries.push((orbit, m));
    }
    let mv = MultiplicityVector::new(entries);
    assert_eq!(mv.dimension(), module.rank() as u64, "multiplicities must add up to the rank");
    mv
}

/// Does the module embed into the reference module — equivalently, is the
/// torus it describes a quotient of the reference torus at this level?
pub fn is_quotient_of_serre(module: &GaloisModule) -> Result<bool> {
    let reference = serre_multiplicities(module.orders(), module.conj())?;
    Ok(module_multiplicities(module).dominated_by(&reference))
}

/// Basis of the subspace fixed by the conjugation, over the rationals.
pub fn fixed_space_basis(module: &GaloisModule) -> Vec<Vec<Rat>> {
    let c = module.conj_matrix();
    let n = module.rank();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut x = Rat::from_integer(c.get(i, j).clone());
            if i == j {
                x -= Rat::one();
            }
            row.push(x);
        }
        rows.push(row);
    }
    rat_kernel(&rows)
}

pub fn fixed_space_dim(module: &GaloisModule) -> usize {
    fixed_space_basis(module).len()
}

/// Is the real torus described by the module anisotropic, allowing a split
/// part inside the span of the given weight vectors (if any)?
pub fn is_r_anisotropic(module: &GaloisModule, weight: Option<&[Vec<Rat>]>) -> Result<bool> {
    let fixed = fixed_space_basis(module);
    match weight {
        None => Ok(fixed.is_empty()),
        Some(w) => {
            for v in w {
                if v.len() != module.rank() {
                    return Err(Error::DimensionMismatch(format!(
                        "weight vector has {} coordinates, module rank is {}",
                        v.len(),
                        module.rank()
                    )));
                }
            }
            Ok(fixed.iter().all(|v| solve_columns(w, v).is_some()))
        }
    }
}
