use super::subset::{all_keys, lex_subset_order, SubsetKey, SubsetOrder};
use crate::error::{Error, Result};
use crate::logic::{minimal_dnf, models_of, AtomEnv, Context, Formula, ModelSet, Theory};
use crate::orderings::RationalOrdering;
use crate::ranked::{ordering_from_chain, RankedChain};

/// Liberal mode enumerates all `2^m - 1` subsets of levels.
pub const MAX_LIBERAL_LEVELS: usize = 6;

/// Levels of defaults in priority order; index 0 is level 1, the most
/// important.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultBase {
    env: AtomEnv,
    levels: Vec<Vec<Formula>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Strict,
    Liberal,
}

/// Result of extending an input with a base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub theory: Theory,
    /// No default level could be added consistently; the theory is the
    /// closure of the input alone.
    pub degenerate: bool,
}

impl DefaultBase {
    pub fn new(env: &AtomEnv, levels: Vec<Vec<Formula>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidBase("a base needs at least one level".into()));
        }
        Ok(DefaultBase {
            env: env.clone(),
            levels,
        })
    }

    pub fn env(&self) -> &AtomEnv {
        &self.env
    }

    pub fn levels(&self) -> &[Vec<Formula>] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Models of level `i` (1-based).
    pub fn level_models(&self, i: usize) -> ModelSet {
        Theory::from_axioms(self.levels[i - 1].clone(), &self.env)
            .models()
            .clone()
    }

    fn require_liberal_cap(&self) -> Result<()> {
        if self.len() > MAX_LIBERAL_LEVELS {
            return Err(Error::LimitExceeded {
                what: "default levels in liberal mode",
                limit: MAX_LIBERAL_LEVELS,
                actual: self.len(),
            });
        }
        Ok(())
    }
}

/// Models of `A_K`: the intersection over `L ≥ K` of `Cn(⋃_{i∈L} Aᵢ)`.
fn a_k_models(base: &DefaultBase, level_models: &[ModelSet], k: SubsetKey, order: SubsetOrder) -> ModelSet {
    let mut out = ModelSet::empty(base.env.valuation_count());
    for l in all_keys(base.len(), order) {
        if lex_subset_order(k, l, order).is_le() {
            let mut inter = ModelSet::full(base.env.valuation_count());
            for i in l.levels() {
                inter = &inter & &level_models[i - 1];
            }
            out = &out | &inter;
        }
    }
    out
}

fn all_level_models(base: &DefaultBase) -> Vec<ModelSet> {
    (1..=base.len()).map(|i| base.level_models(i)).collect()
}

pub fn a_k(base: &DefaultBase, k: SubsetKey, order: SubsetOrder) -> Result<Theory> {
    base.require_liberal_cap()?;
    if k.m() != base.len() {
        return Err(Error::InvalidBase(format!(
            "key {k} is over {} levels, base has {}",
            k.m(),
            base.len()
        )));
    }
    Ok(Theory::from_models(a_k_models(base, &all_level_models(base), k, order)))
}

/// Largest consistent prefix extension. `steps` are the models of the
/// successive increments, which are added cumulatively.
fn extend(input: &ModelSet, steps: &[ModelSet]) -> Extension {
    let mut current = input.clone();
    let mut added = 0;
    for s in steps {
        let next = &current & s;
        // prefixes only shrink, so the consistent ones are downward closed
        if next.is_empty() {
            break;
        }
        current = next;
        added += 1;
    }
    Extension {
        theory: Theory::from_models(current),
        degenerate: added == 0,
    }
}

fn strict_extension_models(base: &DefaultBase, input: &ModelSet) -> Extension {
    extend(input, &all_level_models(base))
}

fn liberal_extension_models(base: &DefaultBase, input: &ModelSet, order: SubsetOrder) -> Result<Extension> {
    base.require_liberal_cap()?;
    let lm = all_level_models(base);
    let steps: Vec<ModelSet> = all_keys(base.len(), order)
        .into_iter()
        .map(|k| a_k_models(base, &lm, k, order))
        .collect();
    Ok(extend(input, &steps))
}

/// `Cn({input} ∪ A₁ ∪ … ∪ Aᵢ)` for the largest `i` keeping it consistent.
pub fn strict_extension(base: &DefaultBase, input: &Formula) -> Extension {
    strict_extension_models(base, models_of(input, &base.env).models())
}

/// `Cn({input} ∪ ⋃_{K≤L} A_K)` for the largest key `L` keeping it
/// consistent.
pub fn liberal_extension(base: &DefaultBase, input: &Formula, order: SubsetOrder) -> Result<Extension> {
    liberal_extension_models(base, models_of(input, &base.env).models(), order)
}

pub fn extension(base: &DefaultBase, mode: Mode, order: SubsetOrder, input: &Formula) -> Result<Extension> {
    match mode {
        Mode::Strict => Ok(strict_extension(base, input)),
        Mode::Liberal => liberal_extension(base, input, order),
    }
}

/// Replaces each level by the union of it and all more important levels.
pub fn cumulate_strict(base: &DefaultBase) -> DefaultBase {
    let mut acc: Vec<Formula> = Vec::new();
    let levels = base
        .levels
        .iter()
        .map(|level| {
            for f in level {
                if !acc.contains(f) {
                    acc.push(f.clone());
                }
            }
            acc.clone()
        })
        .collect();
    DefaultBase {
        env: base.env.clone(),
        levels,
    }
}

/// One level per `A_K`, in ascending key order, each axiomatized by its
/// minimal DNF.
pub fn flatten_liberal(base: &DefaultBase, order: SubsetOrder) -> Result<DefaultBase> {
    base.require_liberal_cap()?;
    let lm = all_level_models(base);
    let levels = all_keys(base.len(), order)
        .into_iter()
        .map(|k| {
            let m = a_k_models(base, &lm, k, order);
            if m.is_full() {
                Vec::new()
            } else {
                vec![minimal_dnf(&m, &base.env)]
            }
        })
        .collect();
    Ok(DefaultBase {
        env: base.env.clone(),
        levels,
    })
}

/// Chain `Cn(∅) ⊆ Cn(A₁) ⊆ Cn(A₁ ∪ A₂) ⊆ …` whose ranked relation is the
/// extension relation of `mode`.
pub fn chain_for(base: &DefaultBase, mode: Mode, order: SubsetOrder) -> Result<RankedChain> {
    let strict = match mode {
        Mode::Strict => base.clone(),
        Mode::Liberal => flatten_liberal(base, order)?,
    };
    let mut theories = vec![Theory::tautologies(&base.env)];
    let mut acc = Vec::new();
    for level in &strict.levels {
        acc.extend(level.iter().cloned());
        theories.push(Theory::from_axioms(acc.clone(), &base.env));
    }
    RankedChain::new(&base.env, theories)
}

/// The ordering induced by the chain of cumulative levels.
pub fn ordering_from_base(base: &DefaultBase, mode: Mode, order: SubsetOrder) -> Result<RationalOrdering> {
    ordering_from_chain(&chain_for(base, mode, order)?)
}

/// Whether `β` is in the extension of `α`, computed through the ranked
/// relation and cross-checked against the extension itself.
pub fn query(base: &DefaultBase, mode: Mode, order: SubsetOrder, a: &Formula, b: &Formula) -> Result<bool> {
    let chain = chain_for(base, mode, order)?;
    let ranked = chain.holds(&Context::full(&base.env), a, b)?;
    let direct = extension(base, mode, order, a)?
        .theory
        .entails(&models_of(b, &base.env));
    if ranked != direct {
        return Err(Error::CrossCheck(format!(
            "ranked relation says {ranked}, extension says {direct}"
        )));
    }
    Ok(ranked)
}
