//! Rational and expectation orderings of formulas.
//!
//! An ordering is stored extensionally as a level per semantic class; larger
//! levels are more expected. Dominance forces equivalent formulas onto the
//! same level, so nothing is lost by quotienting, and equality of orderings
//! becomes equality of normalized level maps.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::logic::{models_of, parse_formula, render_models, AtomEnv, ClassId, ClassSpace, Context, Formula, SemClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalOrdering {
    env: AtomEnv,
    space: ClassSpace,
    levels: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingProperty {
    Dominance,
    Conjunctiveness,
}

impl fmt::Display for OrderingProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingProperty::Dominance => "Dominance",
            OrderingProperty::Conjunctiveness => "Conjunctiveness",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingViolation {
    pub property: OrderingProperty,
    pub witnesses: (SemClass, SemClass),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrderingReport {
    pub violations: Vec<OrderingViolation>,
}

impl OrderingReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// True if some violation of `property` has witnesses `{x, y}` in
    /// either order.
    pub fn has(&self, property: OrderingProperty, x: &SemClass, y: &SemClass) -> bool {
        self.violations.iter().any(|v| {
            v.property == property
                && ((&v.witnesses.0, &v.witnesses.1) == (x, y) || (&v.witnesses.0, &v.witnesses.1) == (y, x))
        })
    }
}

/// Compresses arbitrary levels to `0..k` keeping their relative order.
fn normalize(levels: &mut [u32]) {
    let mut distinct: Vec<u32> = levels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for l in levels.iter_mut() {
        *l = distinct.binary_search(l).expect("level present") as u32;
    }
}

impl RationalOrdering {
    /// Builds an ordering from one level per class id. The map is normalized
    /// but not validated; see [`validate_rational`].
    pub fn from_levels(env: &AtomEnv, mut levels: Vec<u32>) -> Result<Self> {
        let space = ClassSpace::new(env)?;
        if levels.len() != space.class_count() {
            return Err(Error::InvalidOrdering(format!(
                "expected {} levels, got {}",
                space.class_count(),
                levels.len()
            )));
        }
        normalize(&mut levels);
        Ok(RationalOrdering {
            env: env.clone(),
            space,
            levels,
        })
    }

    /// Builds an ordering from `(formula, level)` pairs that must mention
    /// every class exactly once up to equivalence.
    pub fn from_formula_levels(env: &AtomEnv, pairs: &[(&str, u32)]) -> Result<Self> {
        let space = ClassSpace::new(env)?;
        let mut levels = vec![None; space.class_count()];
        for (text, level) in pairs {
            let id = space.id_of(&models_of(&parse_formula(text, env)?, env))?;
            if levels[id as usize].replace(*level).is_some() {
                return Err(Error::InvalidOrdering(format!("class of `{text}` given twice")));
            }
        }
        let levels = levels
            .into_iter()
            .enumerate()
            .map(|(id, l)| {
                l.ok_or_else(|| {
                    Error::InvalidOrdering(format!(
                        "no level for class `{}`",
                        render_models(space.class(id as ClassId).models(), env)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_levels(env, levels)
    }

    pub fn env(&self) -> &AtomEnv {
        &self.env
    }

    pub fn space(&self) -> ClassSpace {
        self.space
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    #[inline]
    pub fn level(&self, id: ClassId) -> u32 {
        self.levels[id as usize]
    }

    pub fn level_of(&self, f: &Formula) -> Result<u32> {
        Ok(self.level(self.space.id_of(&models_of(f, &self.env))?))
    }

    pub fn max_level(&self) -> u32 {
        self.levels.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct levels.
    pub fn height(&self) -> usize {
        self.max_level() as usize + 1
    }

    /// Class ids on `level`, ascending.
    pub fn class_ids_at(&self, level: u32) -> Vec<ClassId> {
        self.space.ids().filter(|&id| self.level(id) == level).collect()
    }

    /// `α ≤ β`.
    pub fn le(&self, a: ClassId, b: ClassId) -> bool {
        self.level(a) <= self.level(b)
    }

    pub fn validate(&self) -> OrderingReport {
        validate_rational(self)
    }

    pub fn is_rational(&self) -> bool {
        self.validate().is_empty()
    }

    pub(crate) fn require_rational(&self) -> Result<()> {
        let report = self.validate();
        match report.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidOrdering(format!(
                "{} fails on {} / {} ({} violations)",
                v.property,
                render_models(v.witnesses.0.models(), &self.env),
                render_models(v.witnesses.1.models(), &self.env),
                report.violations.len()
            ))),
        }
    }

    /// Level dump, highest level first: `level k: f1, f2, ...`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for level in (0..=self.max_level()).rev() {
            let reps: Vec<String> = self
                .class_ids_at(level)
                .into_iter()
                .map(|id| render_models(self.space.class(id).models(), &self.env))
                .collect();
            out.push_str(&format!("level {level}: {}\n", reps.join(", ")));
        }
        out
    }
}

/// Checks Dominance (`α ⊢ β ⇒ level(α) ≤ level(β)`) and Conjunctiveness
/// (`level(α∧β) = min(level(α), level(β))`) over all classes.
pub fn validate_rational(ord: &RationalOrdering) -> OrderingReport {
    let space = ord.space;
    let mut violations = Vec::new();
    for a in space.ids() {
        for b in space.ids() {
            if space.subset(a, b) && ord.level(a) > ord.level(b) {
                violations.push(OrderingViolation {
                    property: OrderingProperty::Dominance,
                    witnesses: (space.class(a), space.class(b)),
                });
            }
        }
    }
    for a in space.ids() {
        for b in a..space.class_count() as ClassId {
            if ord.level(a & b) != ord.level(a).min(ord.level(b)) {
                violations.push(OrderingViolation {
                    property: OrderingProperty::Conjunctiveness,
                    witnesses: (space.class(a), space.class(b)),
                });
            }
        }
    }
    OrderingReport { violations }
}

/// Compares `α` and `β` by level; equivalent formulas compare equal.
pub fn compare(ord: &RationalOrdering, a: &Formula, b: &Formula) -> Result<Ordering> {
    Ok(ord.level_of(a)?.cmp(&ord.level_of(b)?))
}

/// True iff every class on the top level is valid under `ctx`.
pub fn is_expectation(ord: &RationalOrdering, ctx: &Context) -> Result<bool> {
    let ctx = ord.space.context_id(ctx)?;
    let top = ord.max_level();
    Ok(ord
        .space
        .ids()
        .filter(|&id| ord.level(id) == top)
        .all(|id| ord.space.subset(ctx, id)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env1() -> AtomEnv {
        AtomEnv::standard(1).unwrap()
    }

    fn ord(levels: [u32; 4]) -> RationalOrdering {
        // ids: 0 = ⊥, 1 = ¬a, 2 = a, 3 = ⊤
        RationalOrdering::from_levels(&env1(), levels.to_vec()).unwrap()
    }

    fn class(text: &str) -> SemClass {
        let env = env1();
        models_of(&parse_formula(text, &env).unwrap(), &env)
    }

    #[test]
    fn validate_examples() {
        assert!(validate_rational(&ord([0, 0, 1, 2])).is_empty());

        let r = validate_rational(&ord([0, 1, 1, 2]));
        assert!(r.has(OrderingProperty::Conjunctiveness, &class("a"), &class("!a")));
        assert!(r
            .violations
            .iter()
            .all(|v| v.property == OrderingProperty::Conjunctiveness));

        let r = validate_rational(&ord([0, 0, 2, 1]));
        assert!(r
            .violations
            .iter()
            .any(|v| v.property == OrderingProperty::Dominance && v.witnesses == (class("a"), class("true"))));
    }

    #[test]
    fn compare_examples() {
        let env = env1();
        let o = ord([0, 0, 1, 2]);
        let p = |s: &str| parse_formula(s, &env).unwrap();
        assert_eq!(compare(&o, &p("!a"), &p("a")).unwrap(), Ordering::Less);
        assert_eq!(compare(&o, &p("a"), &p("a | false")).unwrap(), Ordering::Equal);
        assert_eq!(compare(&o, &p("true"), &p("a")).unwrap(), Ordering::Greater);
    }

    #[test]
    fn expectation_examples() {
        let env = env1();
        let full = Context::full(&env);
        assert!(is_expectation(&ord([0, 0, 1, 2]), &full).unwrap());
        assert!(!is_expectation(&ord([0, 0, 2, 2]), &full).unwrap());
        let ctx_a = Context::from_formula(&parse_formula("a", &env).unwrap(), &env);
        assert!(is_expectation(&ord([0, 0, 2, 2]), &ctx_a).unwrap());
    }

    #[test]
    fn normalization_makes_levels_dense() {
        assert_eq!(ord([0, 0, 5, 9]), ord([0, 0, 1, 2]));
        assert_eq!(ord([3, 3, 7, 7]).levels(), [0, 0, 1, 1]);
    }

    #[test]
    fn from_formula_levels_requires_every_class() {
        let env = env1();
        let o = RationalOrdering::from_formula_levels(&env, &[("false", 0), ("!a", 0), ("a", 1), ("true", 2)]).unwrap();
        assert_eq!(o, ord([0, 0, 1, 2]));
        assert!(RationalOrdering::from_formula_levels(&env, &[("false", 0), ("a", 1)]).is_err());
        assert!(RationalOrdering::from_formula_levels(&env, &[("a", 0), ("a | a", 1)]).is_err());
    }

    #[test]
    fn dump_lists_levels_descending() {
        assert_eq!(
            ord([0, 0, 1, 2]).dump(),
            "level 2: true\nlevel 1: a\nlevel 0: false, !a\n"
        );
    }

    #[test]
    fn disjunction_is_at_least_max_exhaustive_n2() {
        // every level map over the 16 classes would be too many; use all
        // orderings induced by nested model-set chains of length ≤ 2
        let env = AtomEnv::standard(2).unwrap();
        let space = ClassSpace::new(&env).unwrap();
        for w0 in 1u32..16 {
            for w1 in 1u32..16 {
                if w1 & !w0 != 0 {
                    continue;
                }
                let levels: Vec<u32> = space
                    .ids()
                    .map(|id| space.subset(w0, id) as u32 + space.subset(w1, id) as u32)
                    .collect();
                let o = RationalOrdering::from_levels(&env, levels).unwrap();
                assert!(o.is_rational());
                for a in space.ids() {
                    for b in space.ids() {
                        assert!(o.level(a | b) >= o.level(a).max(o.level(b)));
                    }
                }
            }
        }
    }
}
