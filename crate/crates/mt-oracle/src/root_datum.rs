//! Classical root systems in standard coordinates and exact cocharacters.
//!
//! Roots live in the character space with integer coordinates: type A_n uses
//! the ambient space of dimension n+1 (roots x_i - x_j), types B/C/D use
//! dimension n. Cocharacters live in the dual space and pair with roots by
//! the dot product. For type A the cocharacter space is the quotient by the
//! diagonal line; cocharacters are kept in canonical form (last coordinate of
//! each A-block zero), which makes every lattice computation an honest one.

use num_traits::{Signed, Zero};

use crate::arith::{dot_rat_int, rat, rat_frac, rat_to_int, Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{solve_columns, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::InvalidRootSystem(format!(
                "unknown family `{other}` (expected A, B, C or D)"
            ))),
        }
    }

    pub fn letter(&self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    pub fn min_rank(&self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple root system of classical type with a fixed root enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    chi_dim: usize,
    roots: Vec<Vec<i64>>,
    n_positive: usize,
    simple: Vec<Vec<i64>>,
    /// coefficients of each root in the simple basis, aligned with `roots`
    simple_coords: Vec<Vec<i64>>,
}

fn unit(dim: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = sign;
    v
}

fn two_index(dim: usize, i: usize, j: usize, si: i64, sj: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = si;
    v[j] = sj;
    v
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRootSystem(format!(
                "{family}{rank}: family {family} needs rank >= {}",
                family.min_rank()
            )));
        }
        let chi_dim = match family {
            Family::A => rank + 1,
            _ => rank,
        };
        let mut positive: Vec<Vec<i64>> = Vec::new();
        match family {
            Family::A => {
                for i in 0..chi_dim {
                    for j in i + 1..chi_dim {
                        positive.push(two_index(chi_dim, i, j, 1, -1));
                    }
                }
            }
            Family::B | Family::C | Family::D => {
                for i in 0..rank {
                    for j in i + 1..rank {
                        positive.push(two_index(chi_dim, i, j, 1, -1));
                    }
                }
                for i in 0..rank {
                    for j in i + 1..rank {
                        positive.push(two_index(chi_dim, i, j, 1, 1));
                    }
                }
                if family == Family::B {
                    (0..rank).for_each(|i| positive.push(unit(chi_dim, i, 1)));
                } else if family == Family::C {
                    (0..rank).for_each(|i| positive.push(unit(chi_dim, i, 2)));
                }
            }
        }
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));

        let mut simple: Vec<Vec<i64>> = (0..rank.saturating_sub(1))
            .map(|i| two_index(chi_dim, i, i + 1, 1, -1))
            .collect();
        match family {
            Family::A => simple.push(two_index(chi_dim, rank - 1, rank, 1, -1)),
            Family::B => simple.push(unit(chi_dim, rank - 1, 1)),
            Family::C => simple.push(unit(chi_dim, rank - 1, 2)),
            Family::D => simple.push(two_index(chi_dim, rank - 2, rank - 1, 1, 1)),
        }

        let simple_cols: Vec<Vec<Rat>> = simple
            .iter()
            .map(|s| s.iter().map(|&x| rat(x)).collect())
            .collect();
        let mut simple_coords = Vec::with_capacity(roots.len());
        for r in &roots {
            let target: Vec<Rat> = r.iter().map(|&x| rat(x)).collect();
            let coeffs = solve_columns(&simple_cols, &target).ok_or_else(|| {
                Error::InvalidRootSystem("root outside the span of the simple roots".into())
            })?;
            let mut ints = Vec::with_capacity(rank);
            for c in &coeffs {
                if !c.is_integer() {
                    return Err(Error::InvalidRootSystem(
                        "non-integral simple-root coefficients".into(),
                    ));
                }
                let v = c.to_integer();
                ints.push(i64::try_from(&v).expect("small coefficient"));
            }
            simple_coords.push(ints);
        }

        Ok(RootSystem { family, rank, chi_dim, roots, n_positive: positive.len(), simple, simple_coords })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient character/cocharacter coordinate space.
    pub fn chi_dim(&self) -> usize {
        self.chi_dim
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.n_positive]
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple
    }

    /// Coefficients of `roots()[idx]` in the simple basis.
    pub fn simple_coords(&self, idx: usize) -> &[i64] {
        &self.simple_coords[idx]
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    /// Coefficients of an arbitrary root vector in the simple basis.
    pub fn expand_in_simple(&self, root: &[i64]) -> Result<Vec<i64>> {
        let idx = self.root_index(root).ok_or_else(|| {
            Error::InvalidRootSystem(format!("{root:?} is not a root of {self}"))
        })?;
        Ok(self.simple_coords[idx].clone())
    }

    /// The coroot 2a/(a,a) of a root, again with integer coordinates.
    pub fn coroot(&self, root: &[i64]) -> Vec<i64> {
        let norm: i64 = root.iter().map(|x| x * x).sum();
        match norm {
            2 => root.to_vec(),
            1 => root.iter().map(|x| 2 * x).collect(),
            4 => root.iter().map(|x| x / 2).collect(),
            _ => unreachable!("classical roots have squared length 1, 2 or 4"),
        }
    }

    pub fn simple_coroots(&self) -> Vec<Vec<i64>> {
        self.simple.iter().map(|s| self.coroot(s)).collect()
    }

    /// Canonical representative of a cocharacter coordinate vector: for type
    /// A the diagonal line acts trivially on all pairings, so the last
    /// coordinate is normalised to zero. Other families are untouched.
    pub fn canon(&self, coords: &[Rat]) -> Vec<Rat> {
        let mut v = coords.to_vec();
        if self.family == Family::A {
            let t = v[self.chi_dim - 1].clone();
            if !t.is_zero() {
                for x in v.iter_mut() {
                    *x -= t.clone();
                }
            }
        }
        v
    }

    /// Pairing of a cocharacter coordinate vector with a root (dot product).
    pub fn pairing(&self, mu: &[Rat], root: &[i64]) -> Rat {
        dot_rat_int(mu, root)
    }

    pub fn pairing_int(&self, mu: &[Rat], root: &[i64]) -> Result<Int> {
        rat_to_int(&self.pairing(mu, root))
    }

    /// Validated element of the adjoint cocharacter lattice.
    pub fn cocharacter(&self, coords: Vec<Rat>) -> Result<Cocharacter> {
        if coords.len() != self.chi_dim {
            return Err(Error::DimensionMismatch(format!(
                "cocharacter for {self} needs {} coordinates, got {}",
                self.chi_dim,
                coords.len()
            )));
        }
        let v = self.canon(&coords);
        for s in &self.simple {
            let p = self.pairing(&v, s);
            if !p.is_integer() {
                return Err(Error::NotInLattice(format!(
                    "pairing with simple root {s:?} is {p}, not an integer"
                )));
            }
        }
        Ok(Cocharacter { coords: v })
    }

    pub fn zero_cocharacter(&self) -> Cocharacter {
        Cocharacter { coords: vec![Rat::zero(); self.chi_dim] }
    }

    /// Basis of the adjoint cocharacter lattice in canonical coordinates.
    pub fn coweight_basis(&self) -> Vec<Vec<Rat>> {
        let n = self.rank;
        match self.family {
            // Z^{n+1} modulo the diagonal: unit vectors with last coordinate 0
            Family::A => (0..n).map(|i| (0..self.chi_dim).map(|j| rat((j == i) as i64)).collect()).collect(),
            // dual of the root lattice Z^n is Z^n
            Family::B => (0..n).map(|i| (0..n).map(|j| rat((j == i) as i64)).collect()).collect(),
            // Z^n plus the all-halves vector
            Family::C | Family::D => {
                let mut basis: Vec<Vec<Rat>> = (0..n - 1)
                    .map(|i| (0..n).map(|j| rat((j == i) as i64)).collect())
                    .collect();
                basis.push(vec![rat_frac(1, 2); n]);
                basis
            }
        }
    }

    /// The full coweight-lattice package: basis, dual basis against the
    /// simple roots, and the index of the coroot lattice (the order of the
    /// fundamental group of the adjoint form).
    pub fn coweight_lattice(&self) -> CoweightLattice {
        let basis = self.coweight_basis();
        let n = self.rank;

        // pairing matrix of the basis against the simple roots
        let p = IntMatrix::from_rows(
            (0..n)
                .map(|i| {
                    basis
                        .iter()
                        .map(|b| self.pairing_int(b, &self.simple[i]).expect("lattice basis"))
                        .collect()
                })
                .collect(),
        )
        .expect("square pairing matrix");
        debug_assert_eq!(p.det().abs(), Int::from(1), "coweight basis must be dual-unimodular");
        let p_inv = p.int_inverse().expect("unimodular pairing matrix");

        // dual basis d_j: <d_j, alpha_i> = delta_ij; columns of basis * p_inv
        let dual: Vec<Cocharacter> = (0..n)
            .map(|j| {
                let mut v = vec![Rat::zero(); self.chi_dim];
                for (k, b) in basis.iter().enumerate() {
                    let c = p_inv.get(k, j);
                    if !c.is_zero() {
                        let c = Rat::from_integer(c.clone());
                        for (vi, bi) in v.iter_mut().zip(b) {
                            *vi += &c * bi;
                        }
                    }
                }
                Cocharacter { coords: v }
            })
            .collect();

        // index of the coroot lattice: |det| of coroot coordinates in the basis
        let coroot_coords: Vec<Vec<Int>> = self
            .simple_coroots()
            .iter()
            .map(|c| {
                let target: Vec<Rat> = self.canon(&c.iter().map(|&x| rat(x)).collect::<Vec<_>>());
                let coeffs = solve_columns(&basis, &target).expect("coroots lie in the coweight span");
                coeffs
                    .iter()
                    .map(|x| {
                        debug_assert!(x.is_integer());
                        x.to_integer()
                    })
                    .collect()
            })
            .collect();
        let index = IntMatrix::from_rows(coroot_coords).expect("square").det().abs();

        CoweightLattice {
            basis: basis.into_iter().map(|coords| Cocharacter { coords }).collect(),
            dual_basis: dual,
            index_over_coroots: index,
        }
    }
}

impl std::fmt::Display for RootSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Element of the adjoint cocharacter lattice, stored by exact rational
/// coordinates in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocharacter {
    coords: Vec<Rat>,
}

impl Cocharacter {
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    /// Raw constructor for internal use; callers must guarantee canonical,
    /// in-lattice coordinates.
    pub(crate) fn from_canonical(coords: Vec<Rat>) -> Cocharacter {
        Cocharacter { coords }
    }

    pub fn add(&self, other: &Cocharacter) -> Cocharacter {
        Cocharacter {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Cocharacter {
        Cocharacter { coords: self.coords.iter().map(|x| x * rat(k)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone)]
pub struct CoweightLattice {
    pub basis: Vec<Cocharacter>,
    /// dual basis to the simple roots: <dual_basis[i], alpha_j> = delta_ij
    pub dual_basis: Vec<Cocharacter>,
    /// index of the coroot lattice, i.e. the fundamental group order
    pub index_over_coroots: Int,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for n in 1..=8 {
            assert_eq!(rs(Family::A, n).roots().len(), n * (n + 1));
        }
        for n in 2..=8 {
            assert_eq!(rs(Family::B, n).roots().len(), 2 * n * n);
            assert_eq!(rs(Family::C, n).roots().len(), 2 * n * n);
        }
        for n in 3..=8 {
            assert_eq!(rs(Family::D, n).roots().len(), 2 * n * (n - 1));
        }
        assert_eq!(rs(Family::A, 2).positive_roots().len(), 3);
        assert_eq!(rs(Family::D, 4).roots().len(), 24);
    }

    #[test]
    fn rank_gates() {
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
        assert!(RootSystem::new(Family::C, 1).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!(RootSystem::new(Family::A, 1).is_ok());
    }

    #[test]
    fn d4_simple_roots_are_the_standard_ones() {
        let d4 = rs(Family::D, 4);
        assert_eq!(
            d4.simple_roots(),
            &[
                vec![1, -1, 0, 0],
                vec![0, 1, -1, 0],
                vec![0, 0, 1, -1],
                vec![0, 0, 1, 1],
            ]
        );
    }

    #[test]
    fn every_root_has_uniform_sign_simple_coefficients() {
        for (f, lo, hi) in [(Family::A, 1, 6), (Family::B, 2, 6), (Family::C, 2, 6), (Family::D, 3, 6)] {
            for n in lo..=hi {
                let r = rs(f, n);
                for (i, _root) in r.roots().iter().enumerate() {
                    let c = r.simple_coords(i);
                    let pos = c.iter().any(|&x| x > 0);
                    let neg = c.iter().any(|&x| x < 0);
                    assert!(!(pos && neg), "{f}{n} root {i} mixes signs: {c:?}");
                    assert!(pos || neg, "zero coefficient vector for a root");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let d11 = rs(Family::D, 11);
        let mut lam1 = vec![rat(0); 11];
        lam1[0] = rat(1);
        let gamma = {
            let mut g = vec![0i64; 11];
            g[0] = 1;
            g[1] = -1;
            g
        };
        assert_eq!(d11.pairing(&lam1, &gamma), rat(1));

        let d4 = rs(Family::D, 4);
        let half = vec![rat_frac(1, 2); 4];
        assert_eq!(d4.pairing(&half, &[0, 0, 1, 1]), rat(1));
    }

    #[test]
    fn coweight_lattice_dual_basis_and_index() {
        for (f, n, idx) in [
            (Family::A, 2, 3),
            (Family::A, 5, 6),
            (Family::B, 3, 2),
            (Family::C, 3, 2),
            (Family::D, 4, 4),
            (Family::D, 11, 4),
        ] {
            let r = rs(f, n);
            let cw = r.coweight_lattice();
            assert_eq!(cw.index_over_coroots, int(idx), "{f}{n}");
            for (i, d) in cw.dual_basis.iter().enumerate() {
                for (j, a) in r.simple_roots().iter().enumerate() {
                    let expect = rat((i == j) as i64);
                    assert_eq!(r.pairing(d.coords(), a), expect, "{f}{n} dual basis");
                }
            }
        }
    }

    #[test]
    fn dual_basis_vectors_for_d11() {
        let d11 = rs(Family::D, 11);
        let cw = d11.coweight_lattice();
        // first dual vector is e_1, last is the all-halves vector
        let mut e1 = vec![rat(0); 11];
        e1[0] = rat(1);
        assert_eq!(cw.dual_basis[0].coords(), &e1[..]);
        assert_eq!(cw.dual_basis[10].coords(), &vec![rat_frac(1, 2); 11][..]);
    }

    #[test]
    fn cocharacter_membership() {
        let d4 = rs(Family::D, 4);
        assert!(d4.cocharacter(vec![rat_frac(1, 2); 4]).is_ok());
        assert!(d4.cocharacter(vec![rat(1), rat(0), rat(0), rat(0)]).is_ok());
        assert!(d4.cocharacter(vec![rat_frac(1, 2), rat(0), rat(0), rat(0)]).is_err());

        let a2 = rs(Family::A, 2);
        // equals (1,0,0) modulo the diagonal
        let mu = a2.cocharacter(vec![rat_frac(2, 3), rat_frac(-1, 3), rat_frac(-1, 3)]).unwrap();
        assert_eq!(mu.coords(), &[rat(1), rat(0), rat(0)]);
        // not integral modulo the diagonal
        assert!(a2.cocharacter(vec![rat_frac(1, 2), rat(0), rat(0)]).is_err());
        // zero modulo the diagonal
        let zero = a2.cocharacter(vec![rat_frac(1, 3); 3]).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn coroots_have_integer_coordinates() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let r = rs(f, n);
            for root in r.roots() {
                let c = r.coroot(root);
                let norm: i64 = root.iter().map(|x| x * x).sum();
                let dot: i64 = root.iter().zip(&c).map(|(a, b)| a * b).sum();
                assert_eq!(dot, 2, "<a, a^vee> = 2 for {f}{n} {root:?} (norm {norm})");
            }
        }
    }
}
