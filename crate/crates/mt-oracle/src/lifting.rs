//! Lifting cocharacters of the adjoint torus through an isogeny.
//!
//! A `RootDatum` fixes the cocharacter lattice of a maximal torus of a cover
//! of the adjoint group: rational generator vectors over the product of the
//! factor coordinate spaces, optionally extended by central coordinates that
//! pair trivially with every root. Whether a given adjoint cocharacter lifts
//! is a linear Diophantine question; the failure is measured exactly by a
//! class in the (finite) cokernel of the projected lattice inside the
//! adjoint one, computed by Smith normal form. Whether *some member of the
//! polarizable class* lifts is the same question against the lattice
//! augmented by twice the adjoint lattice; an independent route through the
//! 2-torsion of the cokernel is provided and cross-checked in tests.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{rat, rat_frac, Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{
    integer_combination, lattice_basis, rat_rank, smith_normal_form, solve_columns, IntMatrix,
};
use crate::polarizable::polarizable_class_rep;
use crate::real_form::VoganDiagram;
use crate::root_datum::{Cocharacter, Family, RootSystem};

/// Product of simple factors plus a number of central coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    factors: Vec<RootSystem>,
    central_rank: usize,
}

impl Ambient {
    pub fn new(factors: Vec<RootSystem>, central_rank: usize) -> Ambient {
        Ambient { factors, central_rank }
    }

    pub fn simple(rs: RootSystem) -> Ambient {
        Ambient { factors: vec![rs], central_rank: 0 }
    }

    pub fn factors(&self) -> &[RootSystem] {
        &self.factors
    }

    pub fn central_coords(&self) -> usize {
        self.central_rank
    }

    /// Total dimension of the character-side coordinate space.
    pub fn chi_dim(&self) -> usize {
        self.factors.iter().map(RootSystem::chi_dim).sum()
    }

    /// Full coordinate dimension including the central block.
    pub fn dim(&self) -> usize {
        self.chi_dim() + self.central_rank
    }

    /// Sum of the factor ranks (the semisimple rank).
    pub fn total_rank(&self) -> usize {
        self.factors.iter().map(RootSystem::rank).sum()
    }

    pub fn factor_offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.factors.len());
        let mut acc = 0;
        for f in &self.factors {
            offs.push(acc);
            acc += f.chi_dim();
        }
        offs
    }

    fn embed_root(&self, factor: usize, root: &[i64]) -> Vec<i64> {
        let offs = self.factor_offsets();
        let mut v = vec![0i64; self.chi_dim()];
        v[offs[factor]..offs[factor] + root.len()].copy_from_slice(root);
        v
    }

    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (fi, f) in self.factors.iter().enumerate() {
            for r in f.roots() {
                out.push(self.embed_root(fi, r));
            }
        }
        out
    }

    pub fn simple_roots_embedded(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (fi, f) in self.factors.iter().enumerate() {
            for r in f.simple_roots() {
                out.push(self.embed_root(fi, r));
            }
        }
        out
    }

    pub fn simple_coroots_embedded(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (fi, f) in self.factors.iter().enumerate() {
            for c in f.simple_coroots() {
                out.push(self.embed_root(fi, &c));
            }
        }
        out
    }

    /// Canonical form of a character-side coordinate vector (normalises the
    /// dead diagonal direction of each type-A block).
    pub fn canon(&self, chi_vec: &[Rat]) -> Vec<Rat> {
        let mut v = chi_vec.to_vec();
        for (off, f) in self.factor_offsets().into_iter().zip(&self.factors) {
            let block = f.canon(&v[off..off + f.chi_dim()]);
            v[off..off + f.chi_dim()].clone_from_slice(&block);
        }
        v
    }

    /// Projection to the adjoint side: drop central coordinates, canonicalise.
    pub fn project(&self, full: &[Rat]) -> Vec<Rat> {
        self.canon(&full[..self.chi_dim()])
    }

    /// Basis of the adjoint cocharacter lattice of the product, embedded.
    pub fn adjoint_basis(&self) -> Vec<Vec<Rat>> {
        let offs = self.factor_offsets();
        let mut out = Vec::new();
        for (fi, f) in self.factors.iter().enumerate() {
            for b in f.coweight_basis() {
                let mut v = vec![Rat::zero(); self.chi_dim()];
                v[offs[fi]..offs[fi] + f.chi_dim()].clone_from_slice(&b);
                out.push(v);
            }
        }
        out
    }

    /// Validated adjoint cocharacter of the product.
    pub fn cocharacter(&self, coords: Vec<Rat>) -> Result<Cocharacter> {
        if coords.len() != self.chi_dim() {
            return Err(Error::DimensionMismatch(format!(
                "product cocharacter needs {} coordinates, got {}",
                self.chi_dim(),
                coords.len()
            )));
        }
        let offs = self.factor_offsets();
        let mut canon = Vec::with_capacity(self.chi_dim());
        for (fi, f) in self.factors.iter().enumerate() {
            let block = coords[offs[fi]..offs[fi] + f.chi_dim()].to_vec();
            canon.extend(f.cocharacter(block)?.into_coords());
        }
        Ok(Cocharacter::from_canonical(canon))
    }

    pub fn concat_cochars(&self, parts: &[Cocharacter]) -> Result<Cocharacter> {
        if parts.len() != self.factors.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} factor cocharacters, got {}",
                self.factors.len(),
                parts.len()
            )));
        }
        let mut coords = Vec::with_capacity(self.chi_dim());
        for (f, p) in self.factors.iter().zip(parts) {
            if p.coords().len() != f.chi_dim() {
                return Err(Error::DimensionMismatch("factor cocharacter length mismatch".into()));
            }
            coords.extend_from_slice(p.coords());
        }
        Ok(Cocharacter::from_canonical(coords))
    }
}

/// Cocharacter lattice of a torus covering the adjoint torus of `ambient`.
#[derive(Debug, Clone)]
pub struct RootDatum {
    ambient: Ambient,
    gens: Vec<Vec<Rat>>,
}

impl RootDatum {
    pub fn new(ambient: Ambient, gens: Vec<Vec<Rat>>) -> Result<RootDatum> {
        let dim = ambient.dim();
        for (i, g) in gens.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::InvalidDatum(format!(
                    "generator {i} has {} coordinates, expected {dim}",
                    g.len()
                )));
            }
        }
        // generators must pair integrally with every root
        for root in ambient.simple_roots_embedded() {
            for (i, g) in gens.iter().enumerate() {
                let p = crate::arith::dot_rat_int(&g[..ambient.chi_dim()], &root);
                if !p.is_integer() {
                    return Err(Error::InvalidDatum(format!(
                        "generator {i} pairs with a simple root to {p}, not an integer"
                    )));
                }
            }
        }
        let datum = RootDatum { ambient, gens };
        // the coroot lattice must be contained in the generated lattice
        let proj = datum.projected_gens();
        for coroot in datum.ambient.simple_coroots_embedded() {
            let target = datum
                .ambient
                .canon(&coroot.iter().map(|&x| rat(x)).collect::<Vec<_>>());
            if integer_combination(&proj, &target).is_none() {
                return Err(Error::InvalidDatum(format!(
                    "coroot {coroot:?} is not in the generated lattice"
                )));
            }
        }
        Ok(datum)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.gens
    }

    /// Images of the generators in the adjoint coordinate space.
    pub fn projected_gens(&self) -> Vec<Vec<Rat>> {
        self.gens.iter().map(|g| self.ambient.project(g)).collect()
    }

    /// Rank of the central torus (kernel of the projection to the adjoint).
    pub fn central_torus_rank(&self) -> usize {
        let lattice_rank = rat_rank(&self.gens);
        lattice_rank - self.ambient.total_rank()
    }

    /// Does the cocharacter lift to this cover?
    pub fn lifts_to(&self, mu: &Cocharacter) -> bool {
        integer_combination(&self.projected_gens(), mu.coords()).is_some()
    }

    /// Coefficients of one lift in terms of the generators, if any.
    pub fn lift_coefficients(&self, mu: &Cocharacter) -> Option<Vec<Int>> {
        integer_combination(&self.projected_gens(), mu.coords())
    }

    /// The class of `mu` in the cokernel of the projected lattice inside the
    /// adjoint lattice, written against the invariant factors > 1.
    pub fn obstruction_class(&self, mu: &Cocharacter) -> Result<ObstructionClass> {
        let basis = self.ambient.adjoint_basis();
        let m = basis.len();

        let mu_coords = coords_in(&basis, mu.coords())?;
        let mut cols = Vec::with_capacity(self.gens.len());
        for g in self.projected_gens() {
            cols.push(coords_in(&basis, &g)?);
        }
        let mut a = IntMatrix::zero(m, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..m {
                a.set(i, j, c[i].clone());
            }
        }
        let snf = smith_normal_form(&a);
        if snf.rank() != m {
            return Err(Error::InvalidDatum(
                "projected lattice does not have full rank in the adjoint lattice".into(),
            ));
        }
        let y = snf.u.mul_vec(&mu_coords);
        let mut factors = Vec::new();
        let mut coords = Vec::new();
        for i in 0..m {
            let d = snf.s.get(i, i).clone();
            if d > Int::one() {
                coords.push(y[i].mod_floor(&d));
                factors.push(d);
            }
        }
        Ok(ObstructionClass { factors, coords })
    }

    /// Invariant factors > 1 of the torsion of the center's character group,
    /// i.e. of the quotient of the dual of this lattice by the root lattice.
    pub fn center_torsion(&self) -> Result<Vec<Int>> {
        let basis = lattice_basis(&self.gens)?;
        let roots = self.ambient.simple_roots_embedded();
        let chi = self.ambient.chi_dim();
        let mut r = IntMatrix::zero(roots.len(), basis.len());
        for (i, root) in roots.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let p = crate::arith::dot_rat_int(&b[..chi], root);
                if !p.is_integer() {
                    return Err(Error::InvalidDatum("non-integral root pairing on a basis vector".into()));
                }
                r.set(i, j, p.to_integer());
            }
        }
        let snf = smith_normal_form(&r);
        Ok(snf
            .invariant_factors()
            .into_iter()
            .filter(|d| d > &Int::one())
            .collect())
    }
}

fn coords_in(basis: &[Vec<Rat>], v: &[Rat]) -> Result<Vec<Int>> {
    if basis.is_empty() {
        return if v.iter().all(Zero::is_zero) {
            Ok(Vec::new())
        } else {
            Err(Error::NotInLattice("nonzero vector against an empty basis".into()))
        };
    }
    let coeffs = solve_columns(basis, v)
        .ok_or_else(|| Error::NotInLattice("vector outside the lattice span".into()))?;
    coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NotInLattice(format!("non-integral coordinate {c}")))
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionClass {
    /// invariant factors > 1 of the cokernel, in divisibility order
    pub factors: Vec<Int>,
    /// coordinates of the class, reduced mod the matching factor
    pub coords: Vec<Int>,
}

impl ObstructionClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Result of the class-level lifting question.
#[derive(Debug, Clone)]
pub struct LiftReport {
    pub class_rep: Cocharacter,
    pub exists: bool,
    pub all_members: bool,
    pub witness: Option<Cocharacter>,
}

/// Assemble the product polarizable-class representative for matching
/// diagrams; errors if any factor lacks a compact maximal torus.
pub fn product_class_rep(ambient: &Ambient, diagrams: &[VoganDiagram]) -> Result<Cocharacter> {
    if diagrams.len() != ambient.factors().len() {
        return Err(Error::DimensionMismatch(format!(
            "{} diagrams for {} factors",
            diagrams.len(),
            ambient.factors().len()
        )));
    }
    for (d, f) in diagrams.iter().zip(ambient.factors()) {
        if d.root_system() != f {
            return Err(Error::InvalidDiagram(format!(
                "diagram over {} does not match factor {}",
                d.root_system(),
                f
            )));
        }
    }
    let reps = diagrams
        .iter()
        .map(polarizable_class_rep)
        .collect::<Result<Vec<_>>>()?;
    ambient.concat_cochars(&reps)
}

/// Does some member of the polarizable class lift, and do all of them?
/// Existence is the membership of the class representative in the lattice
/// generated by the projected generators together with twice the adjoint
/// lattice; a witness in the class is returned when one exists.
pub fn exists_polarizable_lift(datum: &RootDatum, diagrams: &[VoganDiagram]) -> Result<LiftReport> {
    let ambient = datum.ambient();
    let mu0 = product_class_rep(ambient, diagrams)?;
    let proj = datum.projected_gens();
    let basis = ambient.adjoint_basis();
    let doubled: Vec<Vec<Rat>> = basis
        .iter()
        .map(|b| b.iter().map(|x| x * rat(2)).collect())
        .collect();

    let mut augmented = proj.clone();
    augmented.extend(doubled.iter().cloned());

    let witness = integer_combination(&augmented, mu0.coords()).map(|coeffs| {
        // subtract the doubled-lattice part to land on a class member that
        // is in the image of the cover
        let mut w = mu0.coords().to_vec();
        for (k, b) in doubled.iter().enumerate() {
            let c = &coeffs[proj.len() + k];
            if !c.is_zero() {
                let c = Rat::from_integer(c.clone());
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= &c * bi;
                }
            }
        }
        Cocharacter::from_canonical(ambient.canon(&w))
    });
    let exists = witness.is_some();
    if let Some(w) = &witness {
        debug_assert!(integer_combination(&proj, w.coords()).is_some());
    }

    let all_members = exists
        && doubled
            .iter()
            .all(|b| integer_combination(&proj, b).is_some());

    Ok(LiftReport { class_rep: mu0, exists, all_members, witness })
}

/// Independent route to the existence question through the cokernel: some
/// class member lifts iff the obstruction class of the representative dies
/// in the cokernel mod 2. Cross-checked against `exists_polarizable_lift`.
pub fn class_lifts_via_torsion(datum: &RootDatum, diagrams: &[VoganDiagram]) -> Result<bool> {
    let mu0 = product_class_rep(datum.ambient(), diagrams)?;
    let obs = datum.obstruction_class(&mu0)?;
    Ok(obs
        .factors
        .iter()
        .zip(&obs.coords)
        .all(|(d, c)| d.is_odd() || c.is_even()))
}

// ---------------------------------------------------------------------------
// preset lattices
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Adjoint,
    SimplyConnected,
    So,
    HalfSpinPlus,
    HalfSpinMinus,
    GSpin,
    Similitude,
}

impl Preset {
    pub fn parse(s: &str) -> Result<Preset> {
        match s.trim().to_ascii_lowercase().as_str() {
            "adjoint" => Ok(Preset::Adjoint),
            "sc" | "simply-connected" | "simply_connected" | "spin" => Ok(Preset::SimplyConnected),
            "so" => Ok(Preset::So),
            "half-spin-plus" | "half_spin_plus" => Ok(Preset::HalfSpinPlus),
            "half-spin-minus" | "half_spin_minus" => Ok(Preset::HalfSpinMinus),
            "gspin" => Ok(Preset::GSpin),
            "similitude" | "gl" | "gsp" => Ok(Preset::Similitude),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Adjoint => "adjoint",
            Preset::SimplyConnected => "sc",
            Preset::So => "so",
            Preset::HalfSpinPlus => "half-spin-plus",
            Preset::HalfSpinMinus => "half-spin-minus",
            Preset::GSpin => "gspin",
            Preset::Similitude => "similitude",
        }
    }
}

fn unit_rat(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

/// Generators for a named lattice over a single factor. Returns the vectors
/// (factor chi coordinates followed by `central` extra coordinates) and the
/// number of central coordinates used.
pub fn preset_generators(preset: Preset, rs: &RootSystem) -> Result<(Vec<Vec<Rat>>, usize)> {
    let n = rs.rank();
    let chi = rs.chi_dim();
    let family = rs.family();
    let fail = |reason: &str| {
        Err(Error::PresetNotApplicable {
            name: preset.name().to_string(),
            family: family.to_string(),
            rank: n,
            reason: reason.to_string(),
        })
    };
    let coroots = || -> Vec<Vec<Rat>> {
        rs.simple_coroots()
            .iter()
            .map(|c| c.iter().map(|&x| rat(x)).collect())
            .collect()
    };
    match preset {
        Preset::Adjoint => Ok((rs.coweight_basis(), 0)),
        Preset::SimplyConnected => Ok((coroots(), 0)),
        Preset::So => match family {
            // odd orthogonal groups are adjoint; even ones sit between
            Family::B => Ok((rs.coweight_basis(), 0)),
            Family::D => Ok(((0..n).map(|i| unit_rat(chi, i)).collect(), 0)),
            _ => fail("only defined for orthogonal families"),
        },
        Preset::HalfSpinPlus | Preset::HalfSpinMinus => {
            if family != Family::D {
                return fail("half-spin lattices exist only in type D");
            }
            if n % 2 != 0 {
                return fail("half-spin lattices exist only for even rank");
            }
            let mut gens = coroots();
            let mut half = vec![rat_frac(1, 2); n];
            if preset == Preset::HalfSpinMinus {
                half[n - 1] = rat_frac(-1, 2);
            }
            gens.push(half);
            Ok((gens, 0))
        }
        Preset::GSpin => {
            if family != Family::B && family != Family::D {
                return fail("gspin is defined for the orthogonal families");
            }
            let dim = chi + 1;
            let mut gens: Vec<Vec<Rat>> = coroots()
                .into_iter()
                .map(|mut c| {
                    c.push(Rat::zero());
                    c
                })
                .collect();
            gens.push(unit_rat(dim, dim - 1)); // the central scalar line
            let mut glue = unit_rat(dim, 0); // a rotation cocharacter ...
            glue[dim - 1] = rat_frac(1, 2); // ... lifts with half a scalar
            gens.push(glue);
            Ok((gens, 1))
        }
        Preset::Similitude => match family {
            Family::A => Ok(((0..chi).map(|i| unit_rat(chi, i)).collect(), 0)),
            Family::C => {
                let dim = chi + 1;
                let mut gens: Vec<Vec<Rat>> = coroots()
                    .into_iter()
                    .map(|mut c| {
                        c.push(Rat::zero());
                        c
                    })
                    .collect();
                gens.push(unit_rat(dim, dim - 1));
                let mut glue = vec![rat_frac(1, 2); dim];
                glue[dim - 1] = rat_frac(1, 2);
                gens.push(glue);
                Ok((gens, 1))
            }
            Family::B | Family::D => fail("use gspin for orthogonal similitudes"),
        },
    }
}

/// Block-diagonal product datum from one preset per factor.
pub fn product_datum(presets: &[Preset], factors: Vec<RootSystem>) -> Result<RootDatum> {
    if presets.len() != factors.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} presets for {} factors",
            presets.len(),
            factors.len()
        )));
    }
    let per_factor: Vec<(Vec<Vec<Rat>>, usize)> = presets
        .iter()
        .zip(&factors)
        .map(|(p, f)| preset_generators(*p, f))
        .collect::<Result<Vec<_>>>()?;
    assemble_product(factors, per_factor)
}

/// Block-diagonal product datum from explicit per-factor generator sets.
/// Each part holds generator vectors over its own factor (factor chi
/// coordinates followed by that factor's central coordinates) and the count
/// of central coordinates.
pub fn assemble_product(
    factors: Vec<RootSystem>,
    per_factor: Vec<(Vec<Vec<Rat>>, usize)>,
) -> Result<RootDatum> {
    if per_factor.len() != factors.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} generator sets for {} factors",
            per_factor.len(),
            factors.len()
        )));
    }
    for ((gens, central), f) in per_factor.iter().zip(&factors) {
        let want = f.chi_dim() + central;
        if let Some(g) = gens.iter().find(|g| g.len() != want) {
            return Err(Error::DimensionMismatch(format!(
                "a generator over {f} has {} coordinates, expected {want}",
                g.len()
            )));
        }
    }
    let ambient = Ambient::new(factors, per_factor.iter().map(|(_, c)| c).sum());
    let chi_total = ambient.chi_dim();
    let offs = ambient.factor_offsets();

    let mut gens = Vec::new();
    let mut central_off = 0usize;
    for (fi, (factor_gens, central)) in per_factor.iter().enumerate() {
        let f_chi = ambient.factors()[fi].chi_dim();
        for g in factor_gens {
            let mut v = vec![Rat::zero(); ambient.dim()];
            v[offs[fi]..offs[fi] + f_chi].clone_from_slice(&g[..f_chi]);
            for (k, extra) in g[f_chi..].iter().enumerate() {
                v[chi_total + central_off + k] = extra.clone();
            }
            gens.push(v);
        }
        central_off += central;
    }
    RootDatum::new(ambient, gens)
}

/// Single-factor convenience.
pub fn simple_datum(preset: Preset, rs: RootSystem) -> Result<RootDatum> {
    product_datum(&[preset], vec![rs])
}
