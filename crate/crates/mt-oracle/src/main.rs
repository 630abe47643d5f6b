//! Command-line front end.
//!
//! Every subcommand reads a JSON group spec (see the crate docs and README)
//! and prints either human-readable lines or, with `--json`, a single
//! deterministic JSON report. Exit codes: 0 on success (including a negative
//! verdict), 1 for malformed input, 2 when an operation needs a compact
//! maximal torus and the real form has none.

use std::env;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mt_oracle::arith::{parse_rat_vector, rat_vec_strings};
use mt_oracle::error::{Error, Result};
use mt_oracle::hodge::product_adjoint_hodge_numbers;
use mt_oracle::io::{
    build_group_spec, classes_report, hodge_report, lift_report_value, read_spec_file,
    serre_report, verdict_report, GroupSpecFile,
};
use mt_oracle::lifting::{exists_polarizable_lift, product_class_rep};
use mt_oracle::root_datum::Cocharacter;
use mt_oracle::serre::{
    fixed_space_dim, is_r_anisotropic, module_multiplicities, serre_multiplicities,
};
use mt_oracle::verdict::{mt_verdict, GroupSpec};

#[derive(Parser)]
#[command(
    name = "mt-oracle",
    version,
    about = "decides whether a reductive group is a Mumford-Tate group",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// path to the JSON group spec
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<PathBuf>,

    /// print a single JSON report instead of human-readable lines
    #[arg(long, global = true)]
    json: bool,

    /// suppress human-readable output
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// print the distinguished congruence class of cocharacters
    Classes,
    /// test whether a cocharacter lifts to the lattice, with obstruction
    Lift {
        /// comma-separated adjoint cocharacter coordinates; defaults to the
        /// class representative
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// run every check and print the decision
    Verdict,
    /// Hodge numbers of the adjoint representation at a cocharacter
    Hodge {
        /// comma-separated adjoint cocharacter coordinates; defaults to the
        /// class representative
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        mu: Option<String>,
    },
    /// compare the center module against the reference module
    SerreCheck,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn line(&self, text: &str) {
        if !self.json && !self.quiet {
            println!("{text}");
        }
    }

    fn report(&self, value: &serde_json::Value) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
        }
    }
}

fn coords_text(mu: &Cocharacter) -> String {
    format!("[{}]", rat_vec_strings(mu.coords()).join(", "))
}

fn parse_mu(arg: Option<&str>, spec: &GroupSpec) -> Result<Cocharacter> {
    let ambient = spec.datum().ambient();
    match arg {
        Some(text) => {
            let coords = parse_rat_vector(text)?;
            ambient.cocharacter(coords)
        }
        None => product_class_rep(ambient, spec.diagrams()),
    }
}

fn run(cli: Cli) -> Result<()> {
    let spec_path = cli
        .spec
        .as_ref()
        .ok_or_else(|| Error::spec("spec", "--spec <FILE> is required"))?;
    let file: GroupSpecFile = read_spec_file(spec_path)?;
    let preset_dir = env::var_os("MT_ORACLE_PRESET_DIR").map(PathBuf::from);
    let spec = build_group_spec(&file, preset_dir.as_deref())?;
    let out = Output { json: cli.json, quiet: cli.quiet };

    match &cli.command {
        Command::Classes => {
            let rep = product_class_rep(spec.datum().ambient(), spec.diagrams())?;
            out.line(&format!("class representative: {}", coords_text(&rep)));
            out.report(&classes_report(&file, &[rep]));
        }
        Command::Lift { mu } => {
            let mu = parse_mu(mu.as_deref(), &spec)?;
            let coefficients = spec.datum().lift_coefficients(&mu);
            let obstruction = spec.datum().obstruction_class(&mu)?;
            let class = exists_polarizable_lift(spec.datum(), spec.diagrams())?;
            out.line(&format!("mu: {}", coords_text(&mu)));
            out.line(&format!("lifts: {}", if coefficients.is_some() { "yes" } else { "no" }));
            if obstruction.factors.is_empty() {
                out.line("obstruction group: trivial");
            } else {
                let groups: Vec<String> =
                    obstruction.factors.iter().map(|d| format!("Z/{d}")).collect();
                let coords: Vec<String> =
                    obstruction.coords.iter().map(|c| c.to_string()).collect();
                out.line(&format!(
                    "obstruction: ({}) in {}",
                    coords.join(", "),
                    groups.join(" x ")
                ));
            }
            out.line(&format!(
                "class member lifts: {}",
                if class.exists { "yes" } else { "no" }
            ));
            if let Some(w) = &class.witness {
                out.line(&format!("class witness: {}", coords_text(w)));
            }
            out.line(&format!(
                "all class members lift: {}",
                if class.all_members { "yes" } else { "no" }
            ));
            out.report(&lift_report_value(&file, &mu, coefficients.as_deref(), &obstruction, &class));
        }
        Command::Verdict => {
            if !spec.weight_gm() && spec.weight_sublattice().is_none() {
                if let Some(center) = spec.center() {
                    let d = fixed_space_dim(center);
                    if d > 0 {
                        eprintln!(
                            "warning: the center has a {d}-dimensional subspace fixed by conjugation; set \"weight_gm\": true if it is the weight line"
                        );
                    }
                }
            }
            let verdict = mt_verdict(&spec)?;
            for check in &verdict.checks {
                out.line(&format!(
                    "check {}: {} ({})",
                    check.name,
                    check.status.as_str(),
                    check.detail
                ));
            }
            out.line(&format!("mumford-tate: {}", if verdict.is_mt { "yes" } else { "no" }));
            if let Some(w) = &verdict.witness {
                out.line(&format!("witness: {}", coords_text(w)));
            }
            out.report(&verdict_report(&file, &verdict));
        }
        Command::Hodge { mu } => {
            let mu = parse_mu(mu.as_deref(), &spec)?;
            let h = product_adjoint_hodge_numbers(spec.datum().ambient(), &mu)?;
            out.line(&format!("mu: {}", coords_text(&mu)));
            out.line(&h.to_string());
            out.line(&format!("dimension: {}", h.dimension()));
            out.report(&hodge_report(&file, &mu, &h));
        }
        Command::SerreCheck => {
            let center = spec
                .center()
                .ok_or_else(|| Error::spec("center", "serre-check needs center data"))?;
            let mults = module_multiplicities(center);
            let reference = match serre_multiplicities(center.orders(), center.conj()) {
                Ok(r) => Some(r),
                Err(Error::TrivialConjugation) => None,
                Err(e) => return Err(e),
            };
            let is_quotient = reference.as_ref().map(|r| mults.dominated_by(r));
            let anisotropic = is_r_anisotropic(center, spec.weight_sublattice())?;
            let fixed = fixed_space_dim(center);
            for (label, m) in mults.iter() {
                let r = reference
                    .as_ref()
                    .map_or("-".to_string(), |r| r.get(label).to_string());
                out.line(&format!("orbit {label:?}: multiplicity {m}, reference {r}"));
            }
            out.line(&format!(
                "quotient of the reference module: {}",
                match is_quotient {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "undefined (conjugation is trivial)",
                }
            ));
            out.line(&format!(
                "anisotropic: {} (fixed subspace dimension {fixed})",
                if anisotropic { "yes" } else { "no" }
            ));
            out.report(&serre_report(
                &file,
                center,
                &mults,
                reference.as_ref(),
                is_quotient,
                anisotropic,
                fixed,
            ));
        }
    }
    Ok(())
}
