//! Propositional language, model semantics and classical entailment.
//!
//! Entailment is model-set inclusion, optionally restricted to a background
//! [`Context`]. Compactness holds trivially at this scale, so no
//! approximation is involved.

mod dnf;
mod env;
mod formula;
mod models;
mod parse;
mod space;

pub use dnf::{minimal_dnf, render_models};
pub use env::{AtomEnv, DEFAULT_ATOM_CAP};
pub use formula::{DisplayFormula, Formula};
pub use models::{entails, models_of, Context, ModelSet, SemClass, Theory};
pub use parse::{parse_formula, scan_atoms};
pub use space::{enumerate_classes, ClassId, ClassSpace, MAX_EXHAUSTIVE_ATOMS};
