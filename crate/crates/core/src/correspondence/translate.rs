use super::relation::{up_sets, ClassMask, InferenceRelation};
use crate::error::{Error, Result};
use crate::logic::{ClassId, Context, ModelSet};
use crate::orderings::RationalOrdering;

/// Which pair of translations to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    /// Hard constraints sit on the top level of the ordering.
    #[default]
    Bold,
    /// The older translations, which consult the underlying entailment
    /// directly.
    Gm,
}

/// `w[l]` = models of the theory `{β : l < level(β)}`; `w[max]` is the
/// full set (the empty theory).
fn strict_upper_models(ord: &RationalOrdering) -> Vec<ClassId> {
    let space = ord.space();
    (0..=ord.max_level())
        .map(|l| {
            space
                .ids()
                .filter(|&id| ord.level(id) > l)
                .fold(space.top(), |acc, id| acc & id)
        })
        .collect()
}

/// The (C) translation.
///
/// The existential "some β with α∧β ⊢ γ and ¬α < β" is decided by testing
/// the weakest such β, which is the conjunction of everything strictly
/// above `¬α`.
pub fn relation_from_ordering(ord: &RationalOrdering, ctx: &Context, variant: Variant) -> Result<InferenceRelation> {
    ord.require_rational()?;
    let space = ord.space();
    let c = space.context_id(ctx)?;
    let up = up_sets(space);
    let upper = strict_upper_models(ord);
    let max = ord.max_level();
    let rows = space
        .ids()
        .map(|a| {
            let neg = ord.level(space.not(a));
            let first = match variant {
                Variant::Bold if neg == max => return ClassMask::full(space),
                Variant::Bold => ClassMask::EMPTY,
                Variant::Gm => up[(a & c) as usize],
            };
            let second = up[(a & c & upper[neg as usize]) as usize];
            ClassMask(std::array::from_fn(|i| first.0[i] | second.0[i]))
        })
        .collect();
    Ok(InferenceRelation::from_rows(ord.env(), space, c, rows))
}

/// The (O) translation, returned as a normalized level map.
///
/// Fails with the first non-comparable or intransitive pair when the
/// induced relation is not a total preorder, which happens only for
/// non-rational input.
pub fn ordering_from_relation(rel: &InferenceRelation, variant: Variant) -> Result<RationalOrdering> {
    let space = rel.space();
    let bot = space.bot();
    let le = |a: ClassId, b: ClassId| {
        let n = space.not(a & b);
        let first = match variant {
            Variant::Bold => rel.holds(n, bot),
            Variant::Gm => rel.entails(space.top(), a & b),
        };
        first || !rel.holds(n, a)
    };
    let mut matrix = vec![ClassMask::EMPTY; space.class_count()];
    for a in space.ids() {
        for b in space.ids() {
            if le(a, b) {
                matrix[a as usize].insert(b);
            }
        }
    }
    // down[b] = #{a : a ≤ b}; a total preorder is exactly the comparison of
    // these counts
    let down: Vec<u32> = space
        .ids()
        .map(|b| space.ids().filter(|&a| matrix[a as usize].contains(b)).count() as u32)
        .collect();
    for a in space.ids() {
        for b in space.ids() {
            if matrix[a as usize].contains(b) != (down[a as usize] <= down[b as usize]) {
                return Err(Error::NotTotalPreorder {
                    left: space.class(a),
                    right: space.class(b),
                });
            }
        }
    }
    RationalOrdering::from_levels(rel.env(), down)
}

/// Context whose entailment adds `Γ = {¬γ : γ |~ ⊥}` to the assumptions.
pub fn shift_context(rel: &InferenceRelation) -> Context {
    let space = rel.space();
    let absurd = space
        .ids()
        .filter(|&g| rel.holds(g, space.bot()))
        .fold(space.bot(), |acc, g| acc | g);
    Context::from_models(ModelSet::from_bits(space.valuations(), space.not(absurd) as u64))
}
