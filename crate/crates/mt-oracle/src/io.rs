//! JSON input and output.
//!
//! A group spec file describes the factors (family, rank, painting, optional
//! diagram automorphism), the cocharacter lattice (a named preset, one
//! preset per factor, or explicit generators), and optionally the center's
//! Galois module. Exact rational values travel as strings ("3/4", "-2") so
//! output is byte-deterministic and free of floating point. All maps are
//! ordered, so serializing the same report twice gives identical bytes.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::arith::{parse_rat, rat_string, Int, Rat};
use crate::error::{Error, Result};
use crate::hodge::HodgeNumbers;
use crate::lifting::{
    assemble_product, preset_generators, Ambient, LiftReport, ObstructionClass, Preset, RootDatum,
};
use crate::matrix::IntMatrix;
use crate::real_form::VoganDiagram;
use crate::root_datum::{Cocharacter, Family, RootSystem};
use crate::serre::{GaloisModule, MultiplicityVector};
use crate::verdict::{GroupSpec, Verdict};

/// Exact rational that serializes as a string and deserializes from either
/// an integer or a string like "a/b".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatStr(pub Rat);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_string(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct RatVisitor;
        impl<'de> Visitor<'de> for RatVisitor {
            type Value = RatStr;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a rational string like \"3/4\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatStr, E> {
                Ok(RatStr(Rat::from_integer(Int::from(v))))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatStr, E> {
                Ok(RatStr(Rat::from_integer(Int::from(v))))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatStr, E> {
                parse_rat(v).map(RatStr).map_err(E::custom)
            }
        }
        d.deserialize_any(RatVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    pub family: String,
    pub rank: usize,
    /// 1-based indices of painted simple roots
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub painted: Vec<usize>,
    /// 1-based permutation of the simple roots, identity if absent
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automorphism: Option<Vec<usize>>,
}

/// Exactly one of `preset`, `presets`, `generators` must be given;
/// `central_rank` only accompanies explicit generators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presets: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<RatStr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_rank: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterSpec {
    /// orders of the cyclic factors of the Galois group
    pub orders: Vec<u64>,
    /// the complex conjugation, as an exponent vector
    pub c: Vec<u64>,
    /// one integer matrix per cyclic generator
    pub action: Vec<Vec<Vec<i64>>>,
    /// optional generators of the weight subspace in center coordinates
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<Vec<RatStr>>>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub factors: Vec<FactorSpec>,
    pub lattice: LatticeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterSpec>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub weight_gm: bool,
}

pub fn parse_spec_str(text: &str) -> Result<GroupSpecFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("group spec: {e}")))
}

pub fn read_spec_file(path: &Path) -> Result<GroupSpecFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_spec_str(&text)
}

/// One entry of a preset overlay file: generators for a specific root
/// system, written over that factor's coordinates plus `central_rank`
/// central ones.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresetEntry {
    generators: Vec<Vec<RatStr>>,
    #[serde(default)]
    central_rank: usize,
}

fn rat_rows(rows: &[Vec<RatStr>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect()
}

/// Find generators for a named preset over one factor. When a preset
/// directory is given and holds `<name>.json` with a key for this root
/// system, that entry wins; otherwise the built-in preset is used.
pub fn resolve_preset(
    name: &str,
    rs: &RootSystem,
    preset_dir: Option<&Path>,
) -> Result<(Vec<Vec<Rat>>, usize)> {
    if let Some(dir) = preset_dir {
        if !name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
        {
            return Err(Error::UnknownPreset(name.to_string()));
        }
        let path = dir.join(format!("{name}.json"));
        if path.exists() {
            let text = fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let file: BTreeMap<String, PresetEntry> = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            if let Some(entry) = file.get(&rs.to_string()) {
                return Ok((rat_rows(&entry.generators), entry.central_rank));
            }
        }
    }
    preset_generators(Preset::parse(name)?, rs)
}

fn build_datum(
    lattice: &LatticeSpec,
    factors: Vec<RootSystem>,
    preset_dir: Option<&Path>,
) -> Result<RootDatum> {
    let given = [
        lattice.preset.is_some(),
        lattice.presets.is_some(),
        lattice.generators.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        return Err(Error::spec(
            "lattice",
            "give exactly one of `preset`, `presets`, `generators`",
        ));
    }
    if lattice.central_rank.is_some() && lattice.generators.is_none() {
        return Err(Error::spec(
            "lattice",
            "`central_rank` is only meaningful with explicit `generators`",
        ));
    }
    if let Some(name) = &lattice.preset {
        let per_factor = factors
            .iter()
            .map(|f| resolve_preset(name, f, preset_dir))
            .collect::<Result<Vec<_>>>()?;
        return assemble_product(factors, per_factor);
    }
    if let Some(names) = &lattice.presets {
        if names.len() != factors.len() {
            return Err(Error::spec(
                "lattice",
                format!("{} presets for {} factors", names.len(), factors.len()),
            ));
        }
        let per_factor = names
            .iter()
            .zip(&factors)
            .map(|(n, f)| resolve_preset(n, f, preset_dir))
            .collect::<Result<Vec<_>>>()?;
        return assemble_product(factors, per_factor);
    }
    let gens = rat_rows(lattice.generators.as_ref().expect("validated above"));
    let ambient = Ambient::new(factors, lattice.central_rank.unwrap_or(0));
    RootDatum::new(ambient, gens)
}

/// Build the validated problem instance from a parsed spec file.
pub fn build_group_spec(file: &GroupSpecFile, preset_dir: Option<&Path>) -> Result<GroupSpec> {
    let mut factors = Vec::new();
    let mut diagrams = Vec::new();
    for f in &file.factors {
        let family = Family::parse(&f.family)?;
        let rs = RootSystem::new(family, f.rank)?;
        diagrams.push(VoganDiagram::new(rs.clone(), &f.painted, f.automorphism.as_deref())?);
        factors.push(rs);
    }
    let datum = build_datum(&file.lattice, factors, preset_dir)?;
    let (center, weight) = match &file.center {
        None => (None, None),
        Some(c) => {
            let action = c
                .action
                .iter()
                .map(|m| IntMatrix::from_i64_rows(m))
                .collect::<Result<Vec<_>>>()?;
            let module = GaloisModule::new(c.orders.clone(), c.c.clone(), action)?;
            (Some(module), c.weight.as_ref().map(|w| rat_rows(w)))
        }
    };
    GroupSpec::new(diagrams, datum, center, file.weight_gm, weight)
}

// ---------------------------------------------------------------------------
// report values
// ---------------------------------------------------------------------------

pub fn spec_echo(file: &GroupSpecFile) -> Value {
    serde_json::to_value(file).expect("spec file serializes")
}

pub fn rat_values(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(rat_string(x))).collect())
}

fn int_values(v: &[Int]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn cochar_value(mu: &Cocharacter) -> Value {
    rat_values(mu.coords())
}

pub fn classes_report(file: &GroupSpecFile, reps: &[Cocharacter]) -> Value {
    json!({
        "command": "classes",
        "classes": reps.iter().map(|r| json!({ "representative": cochar_value(r) })).collect::<Vec<_>>(),
        "spec": spec_echo(file),
    })
}

pub fn lift_report_value(
    file: &GroupSpecFile,
    mu: &Cocharacter,
    coefficients: Option<&[Int]>,
    obstruction: &ObstructionClass,
    class: &LiftReport,
) -> Value {
    json!({
        "command": "lift",
        "mu": cochar_value(mu),
        "lifts": coefficients.is_some(),
        "coefficients": coefficients.map(int_values),
        "obstruction": {
            "factors": int_values(&obstruction.factors),
            "coords": int_values(&obstruction.coords),
        },
        "class": {
            "representative": cochar_value(&class.class_rep),
            "exists": class.exists,
            "all_members": class.all_members,
            "witness": class.witness.as_ref().map(cochar_value),
        },
        "spec": spec_echo(file),
    })
}

pub fn verdict_report(file: &GroupSpecFile, verdict: &Verdict) -> Value {
    json!({
        "command": "verdict",
        "checks": verdict.checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.as_str(),
            "detail": c.detail,
        })).collect::<Vec<_>>(),
        "is_mt": verdict.is_mt,
        "witness": verdict.witness.as_ref().map(cochar_value),
        "spec": spec_echo(file),
    })
}

pub fn hodge_report(file: &GroupSpecFile, mu: &Cocharacter, h: &HodgeNumbers) -> Value {
    json!({
        "command": "hodge",
        "mu": cochar_value(mu),
        "levels": h.levels().into_iter().map(|(p, c)| json!({
            "p": p.to_string(),
            "q": (-p).to_string(),
            "h": c,
        })).collect::<Vec<_>>(),
        "dimension": h.dimension(),
        "spec": spec_echo(file),
    })
}

pub fn serre_report(
    file: &GroupSpecFile,
    module: &GaloisModule,
    mults: &MultiplicityVector,
    reference: Option<&MultiplicityVector>,
    is_quotient: Option<bool>,
    anisotropic: bool,
    fixed_dimension: usize,
) -> Value {
    let orbits: Vec<Value> = mults
        .iter()
        .map(|(label, m)| {
            json!({
                "label": label,
                "multiplicity": m,
                "reference": reference.map(|r| r.get(label)),
            })
        })
        .collect();
    json!({
        "command": "serre-check",
        "group_orders": module.orders(),
        "orbits": orbits,
        "is_quotient": is_quotient,
        "anisotropic": anisotropic,
        "fixed_dimension": fixed_dimension,
        "spec": spec_echo(file),
    })
}
