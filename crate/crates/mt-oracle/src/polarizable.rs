//! Polarizable congruence classes of cocharacters.
//!
//! For an inner real form, a cocharacter mu of the adjoint torus belongs to
//! the polarizable class when <mu, a> is even for every compact root a and
//! odd for every noncompact root. Compactness is additive along root sums,
//! so checking the simple roots suffices; the all-roots scan is kept as an
//! independent oracle. Because the dual basis of the simple roots is a basis
//! of the adjoint cocharacter lattice, reduction mod 2 identifies residues
//! with parity patterns, and exactly one residue class is polarizable.

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::int;
use crate::error::Result;
use crate::real_form::VoganDiagram;
use crate::root_datum::Cocharacter;

/// Fast membership test for the polarizable class: parity of the pairing
/// with each simple root must match its painting.
pub fn is_polarizable(diagram: &VoganDiagram, mu: &Cocharacter) -> Result<bool> {
    diagram.noncompact_flags()?; // inner-form gate
    let rs = diagram.root_system();
    for (alpha, &painted) in rs.simple_roots().iter().zip(diagram.painted()) {
        let p = rs.pairing_int(mu.coords(), alpha)?;
        let odd = !(&p % int(2)).is_zero();
        if odd != painted {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Oracle variant scanning every root; agrees with `is_polarizable` (the
/// compactness rule is additive), and is exercised against it in tests.
pub fn is_polarizable_all_roots(diagram: &VoganDiagram, mu: &Cocharacter) -> Result<bool> {
    let flags = diagram.noncompact_flags()?;
    let rs = diagram.root_system();
    for (root, &noncompact) in rs.roots().iter().zip(&flags) {
        let p = rs.pairing_int(mu.coords(), root)?;
        let odd = !(&p % int(2)).is_zero();
        if odd != noncompact {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical representative of the polarizable class: the sum of the dual
/// basis vectors at the painted nodes (coordinates in {0,1} against the dual
/// basis of the adjoint lattice).
pub fn polarizable_class_rep(diagram: &VoganDiagram) -> Result<Cocharacter> {
    diagram.noncompact_flags()?;
    let rs = diagram.root_system();
    let dual = rs.coweight_lattice().dual_basis;
    let mut rep = rs.zero_cocharacter();
    for (d, &painted) in dual.iter().zip(diagram.painted()) {
        if painted {
            rep = rep.add(d);
        }
    }
    debug_assert!(is_polarizable(diagram, &rep)?);
    Ok(rep)
}

/// All polarizable residues mod twice the adjoint lattice. For the adjoint
/// lattice the parity map is a bijection onto painting patterns, so the
/// result is always a single class; the list shape keeps the report stable.
pub fn polarizable_classes_mod2(diagram: &VoganDiagram) -> Result<Vec<Cocharacter>> {
    Ok(vec![polarizable_class_rep(diagram)?])
}

/// The doubled convention: l is accepted when <l, a> is 0 mod 4 on compact
/// roots and 2 mod 4 on noncompact roots. Equivalent to `is_polarizable`
/// at l/2 whenever l/2 lies in the lattice; kept separate so both
/// conventions stay testable against each other.
pub fn is_ggk_polarizable(diagram: &VoganDiagram, ell: &Cocharacter) -> Result<bool> {
    let flags = diagram.noncompact_flags()?;
    let rs = diagram.root_system();
    for (root, &noncompact) in rs.roots().iter().zip(&flags) {
        let p = rs.pairing_int(ell.coords(), root)?;
        let m = p.mod_floor(&int(4));
        let want = if noncompact { int(2) } else { int(0) };
        if m != want {
            return Ok(false);
        }
    }
    Ok(true)
}
