//! Decide whether a connected reductive group over the rationals, given by
//! a root datum with a real form and a description of its center, is the
//! Mumford–Tate group of a polarizable rational Hodge structure.
//!
//! The decision runs entirely in exact integer and rational arithmetic:
//!
//! * [`root_datum`] — classical root systems, cocharacters, coweight bases;
//! * [`real_form`] — Vogan diagrams, inner forms, root compactness;
//! * [`polarizable`] — the distinguished congruence class of cocharacters
//!   attached to a painting;
//! * [`lifting`] — cocharacter lattices of covers, the lifting question and
//!   its obstruction class, preset lattices for the familiar groups;
//! * [`serre`] — Galois modules of centers and the reference-module
//!   comparison;
//! * [`hodge`] — Hodge numbers of the adjoint representation;
//! * [`verdict`] — the combined decision;
//! * [`io`] — the JSON spec format and deterministic reports.
//!
//! ```
//! use mt_oracle::{simple_adjoint_verdict, VoganDiagram};
//!
//! let diagram = VoganDiagram::from_label("so(2,20)").unwrap();
//! let verdict = simple_adjoint_verdict(&diagram).unwrap();
//! assert!(verdict.is_mt);
//! ```

pub mod arith;
pub mod error;
pub mod hodge;
pub mod io;
pub mod lifting;
pub mod matrix;
pub mod polarizable;
pub mod real_form;
pub mod root_datum;
pub mod serre;
pub mod verdict;

pub use error::{Error, Result};
pub use hodge::HodgeNumbers;
pub use lifting::{Ambient, LiftReport, ObstructionClass, Preset, RootDatum};
pub use real_form::VoganDiagram;
pub use root_datum::{Cocharacter, Family, RootSystem};
pub use serre::GaloisModule;
pub use verdict::{mt_verdict, simple_adjoint_verdict, CheckStatus, GroupSpec, Verdict};
