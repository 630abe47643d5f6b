//! The end-to-end decision.
//!
//! A group is specified by a real form of each simple factor, a cocharacter
//! lattice over the product, and optionally the Galois module of its
//! connected center. Four checks run in order:
//!
//! 1. every factor has a compact maximal torus (the real form is inner);
//! 2. the connected center is compact, allowing a split line inside the
//!    declared weight subspace;
//! 3. some member of the distinguished congruence class of cocharacters
//!    lifts to the given lattice;
//! 4. the center module embeds into the reference module of its group.
//!
//! The verdict is positive when no check fails; checks that cannot run
//! (missing center data, or a class that is undefined without a compact
//! maximal torus) are reported as skipped.

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::lifting::{exists_polarizable_lift, RootDatum};
use crate::real_form::VoganDiagram;
use crate::root_datum::Cocharacter;
use crate::serre::{fixed_space_basis, is_quotient_of_serre, is_r_anisotropic, GaloisModule};

pub const CHECK_COMPACT_TORUS: &str = "compact-maximal-torus";
pub const CHECK_CENTER_COMPACT: &str = "center-compact-mod-weight";
pub const CHECK_POLARIZABLE_LIFT: &str = "polarizable-lift";
pub const CHECK_SERRE_CENTER: &str = "serre-center";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Passed => "passed",
            CheckStatus::Failed => "failed",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub checks: Vec<CheckResult>,
    pub is_mt: bool,
    pub witness: Option<Cocharacter>,
}

impl Verdict {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// A full problem instance: real form, isogeny type, center.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    diagrams: Vec<VoganDiagram>,
    datum: RootDatum,
    center: Option<GaloisModule>,
    weight_gm: bool,
    weight_sublattice: Option<Vec<Vec<Rat>>>,
}

impl GroupSpec {
    pub fn new(
        diagrams: Vec<VoganDiagram>,
        datum: RootDatum,
        center: Option<GaloisModule>,
        weight_gm: bool,
        weight_sublattice: Option<Vec<Vec<Rat>>>,
    ) -> Result<GroupSpec> {
        let factors = datum.ambient().factors();
        if diagrams.len() != factors.len() {
            return Err(Error::spec(
                "factors",
                format!("{} diagrams for {} root-system factors", diagrams.len(), factors.len()),
            ));
        }
        for (i, (d, f)) in diagrams.iter().zip(factors).enumerate() {
            if d.root_system() != f {
                return Err(Error::spec(
                    "factors",
                    format!(
                        "diagram {i} is over {} but the lattice factor is {}",
                        d.root_system(),
                        f
                    ),
                ));
            }
        }
        if let Some(c) = &center {
            let central = datum.central_torus_rank();
            if c.rank() != central {
                return Err(Error::spec(
                    "center",
                    format!(
                        "center module has rank {} but the lattice has central torus rank {central}",
                        c.rank()
                    ),
                ));
            }
        }
        if let Some(w) = &weight_sublattice {
            let c = center.as_ref().ok_or_else(|| {
                Error::spec("weight", "a weight sublattice requires center data")
            })?;
            for v in w {
                if v.len() != c.rank() {
                    return Err(Error::spec(
                        "weight",
                        format!(
                            "weight vector has {} coordinates, center rank is {}",
                            v.len(),
                            c.rank()
                        ),
                    ));
                }
            }
        }
        Ok(GroupSpec { diagrams, datum, center, weight_gm, weight_sublattice })
    }

    pub fn diagrams(&self) -> &[VoganDiagram] {
        &self.diagrams
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn center(&self) -> Option<&GaloisModule> {
        self.center.as_ref()
    }

    pub fn weight_gm(&self) -> bool {
        self.weight_gm
    }

    pub fn weight_sublattice(&self) -> Option<&[Vec<Rat>]> {
        self.weight_sublattice.as_deref()
    }
}

fn compact_torus_check(spec: &GroupSpec) -> CheckResult {
    let bad: Vec<String> = spec
        .diagrams
        .iter()
        .filter(|d| !d.is_inner())
        .map(|d| d.root_system().to_string())
        .collect();
    if bad.is_empty() {
        CheckResult {
            name: CHECK_COMPACT_TORUS,
            status: CheckStatus::Passed,
            detail: "every factor is an inner form".into(),
        }
    } else {
        CheckResult {
            name: CHECK_COMPACT_TORUS,
            status: CheckStatus::Failed,
            detail: format!("no compact maximal torus in the {} factor(s)", bad.join(", ")),
        }
    }
}

fn center_compact_check(spec: &GroupSpec) -> Result<CheckResult> {
    let name = CHECK_CENTER_COMPACT;
    let Some(center) = &spec.center else {
        return Ok(CheckResult {
            name,
            status: CheckStatus::Skipped,
            detail: "no center data; nothing to constrain".into(),
        });
    };
    let fixed_dim = fixed_space_basis(center).len();
    let (ok, detail) = if let Some(w) = spec.weight_sublattice() {
        let ok = is_r_anisotropic(center, Some(w))?;
        (ok, format!("fixed subspace of dimension {fixed_dim} against an explicit weight subspace"))
    } else if spec.weight_gm {
        (fixed_dim <= 1, format!("fixed subspace has dimension {fixed_dim}, at most a weight line is allowed"))
    } else {
        (fixed_dim == 0, format!("fixed subspace has dimension {fixed_dim}, none is allowed"))
    };
    Ok(CheckResult {
        name,
        status: if ok { CheckStatus::Passed } else { CheckStatus::Failed },
        detail,
    })
}

fn polarizable_lift_check(spec: &GroupSpec, torus_ok: bool) -> Result<(CheckResult, Option<Cocharacter>)> {
    let name = CHECK_POLARIZABLE_LIFT;
    if !torus_ok {
        return Ok((
            CheckResult {
                name,
                status: CheckStatus::Skipped,
                detail: "undefined without a compact maximal torus".into(),
            },
            None,
        ));
    }
    let report = exists_polarizable_lift(&spec.datum, &spec.diagrams)?;
    if report.exists {
        let detail = if report.all_members {
            "every member of the distinguished class lifts".to_string()
        } else {
            "some member of the distinguished class lifts".to_string()
        };
        Ok((CheckResult { name, status: CheckStatus::Passed, detail }, report.witness))
    } else {
        Ok((
            CheckResult {
                name,
                status: CheckStatus::Failed,
                detail: "no member of the distinguished class lifts to the lattice".into(),
            },
            None,
        ))
    }
}

fn serre_center_check(spec: &GroupSpec) -> Result<CheckResult> {
    let name = CHECK_SERRE_CENTER;
    let Some(center) = &spec.center else {
        return Ok(CheckResult {
            name,
            status: CheckStatus::Skipped,
            detail: "no center data; nothing to constrain".into(),
        });
    };
    match is_quotient_of_serre(center) {
        Ok(true) => Ok(CheckResult {
            name,
            status: CheckStatus::Passed,
            detail: "center multiplicities are dominated by the reference module".into(),
        }),
        Ok(false) => Ok(CheckResult {
            name,
            status: CheckStatus::Failed,
            detail: "center multiplicities exceed the reference module".into(),
        }),
        Err(Error::TrivialConjugation) => Ok(CheckResult {
            name,
            status: CheckStatus::Failed,
            detail: "conjugation acts trivially on a nontrivial center".into(),
        }),
        Err(e) => Err(e),
    }
}

/// Run all checks in order and combine them.
pub fn mt_verdict(spec: &GroupSpec) -> Result<Verdict> {
    let torus = compact_torus_check(spec);
    let torus_ok = torus.status == CheckStatus::Passed;
    let center = center_compact_check(spec)?;
    let (lift, witness) = polarizable_lift_check(spec, torus_ok)?;
    let serre = serre_center_check(spec)?;
    let checks = vec![torus, center, lift, serre];
    let is_mt = checks.iter().all(|c| c.status != CheckStatus::Failed);
    Ok(Verdict { checks, is_mt, witness: if is_mt { witness } else { None } })
}

/// Verdict for a single simple factor with its adjoint lattice and no
/// center.
pub fn simple_adjoint_verdict(diagram: &VoganDiagram) -> Result<Verdict> {
    let rs = diagram.root_system().clone();
    let datum = crate::lifting::simple_datum(crate::lifting::Preset::Adjoint, rs)?;
    let spec = GroupSpec::new(vec![diagram.clone()], datum, None, false, None)?;
    mt_verdict(&spec)
}
