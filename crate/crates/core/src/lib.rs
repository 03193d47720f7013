//! Rational inference relations over finite propositional languages.
//!
//! Three interchangeable presentations are provided and cross-checked:
//!
//! * [`orderings`]: total preorders on formulas (levels over semantic
//!   classes) and the translations to and from inference relations in
//!   [`correspondence`];
//! * [`ranked`]: consequence operators induced by chains of theories;
//! * [`defaults`]: prioritized default bases with strict and liberal
//!   extensions.
//!
//! [`oracle`] holds random generators and brute-force checkers used to
//! validate the equivalences on small languages.

pub mod correspondence;
pub mod defaults;
pub mod error;
pub mod logic;
pub mod oracle;
pub mod orderings;
pub mod ranked;

pub use error::{Error, Result};
