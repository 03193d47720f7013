//! Inference relations, the rule checkers, and the translations between
//! relations and orderings.
//!
//! A relation is always paired with the context it is judged against.
//! Consistency Preservation depends on that context, and
//! [`shift_context`] computes the context under which a rational relation
//! becomes an expectation relation.

mod relation;
mod rules;
mod translate;

pub use relation::{ClassMask, InferenceRelation};
pub use rules::{
    check_derived_rules, check_postulate, check_rules, classify_relation, instance_violated, Classification,
    Counterexample, RuleCheck, RuleId,
};
pub use translate::{ordering_from_relation, relation_from_ordering, shift_context, Variant};
