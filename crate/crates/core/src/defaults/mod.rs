//! Prioritized default bases and their strict and liberal extensions.
//!
//! Both extension modes are ranked consequence operators: the strict mode
//! over the cumulative levels, the liberal mode over the `A_K` theories
//! taken in the lexicographic subset order.

mod extension;
mod file;
mod subset;

pub use extension::{
    a_k, chain_for, cumulate_strict, extension, flatten_liberal, liberal_extension, ordering_from_base, query,
    strict_extension, DefaultBase, Extension, Mode, MAX_LIBERAL_LEVELS,
};
pub use file::{parse_base, render_base};
pub use subset::{all_keys, lex_subset_order, SubsetKey, SubsetOrder};
