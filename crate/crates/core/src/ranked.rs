//! Ranked consequence operators induced by chains of theories.
//!
//! A chain `B₀ ⊆ B₁ ⊆ …` is stored by its model sets, which weakly
//! decrease. `α |~ β` holds iff some `Bᵢ` is consistent with `α` and
//! `Bᵢ, α ⊢ β`, or every `Bᵢ` proves `¬α`. Because consistency with `α` is
//! a prefix of the chain and `Bᵢ, α ⊢ β` is upward closed, only the last
//! member consistent with `α` needs to be consulted.

use std::fmt;

use crate::correspondence::{ClassMask, InferenceRelation};
use crate::error::{Error, Result};
use crate::logic::{
    models_of, parse_formula, render_models, AtomEnv, ClassId, ClassSpace, Context, Formula, ModelSet, Theory,
};
use crate::orderings::RationalOrdering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedChain {
    env: AtomEnv,
    theories: Vec<Theory>,
}

impl RankedChain {
    /// Validates that the chain is nonempty, increasing as sets of formulas,
    /// and has at least one consistent member.
    pub fn new(env: &AtomEnv, theories: Vec<Theory>) -> Result<Self> {
        if theories.is_empty() {
            return Err(Error::InvalidChain("a chain needs at least one theory".into()));
        }
        for t in &theories {
            if t.models().universe() != env.valuation_count() {
                return Err(Error::EnvMismatch);
            }
        }
        for (i, pair) in theories.windows(2).enumerate() {
            if !pair[0].is_subtheory_of(&pair[1]) {
                return Err(Error::InvalidChain(format!(
                    "theory {} does not contain theory {}",
                    i + 1,
                    i
                )));
            }
        }
        if !theories[0].is_consistent() {
            return Err(Error::NoConsistentTheory);
        }
        Ok(RankedChain {
            env: env.clone(),
            theories,
        })
    }

    /// One axiom list per theory, lowest first.
    pub fn from_axioms(env: &AtomEnv, levels: Vec<Vec<Formula>>) -> Result<Self> {
        let theories = levels.into_iter().map(|ax| Theory::from_axioms(ax, env)).collect();
        Self::new(env, theories)
    }

    pub fn env(&self) -> &AtomEnv {
        &self.env
    }

    pub fn theories(&self) -> &[Theory] {
        &self.theories
    }

    pub fn len(&self) -> usize {
        self.theories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.theories.is_empty()
    }

    /// Index of the last member consistent with `ctx ∧ α`, with that
    /// member's models restricted to `ctx ∧ α`.
    fn last_consistent(&self, ctx: &ModelSet, a: &ModelSet) -> Option<(usize, ModelSet)> {
        let mut found = None;
        for (i, t) in self.theories.iter().enumerate() {
            let m = &(t.models() & ctx) & a;
            if m.is_empty() {
                break;
            }
            found = Some((i, m));
        }
        found
    }

    fn require_consistent_under(&self, ctx: &ModelSet) -> Result<()> {
        if (self.theories[0].models() & ctx).is_empty() {
            return Err(Error::NoConsistentTheory);
        }
        Ok(())
    }

    pub(crate) fn holds_models(&self, ctx: &ModelSet, a: &ModelSet, b: &ModelSet) -> Result<bool> {
        self.require_consistent_under(ctx)?;
        Ok(match self.last_consistent(ctx, a) {
            Some((_, m)) => m.is_subset(b),
            None => true,
        })
    }

    /// `α |~ β` relative to `ctx`; works for any atom count.
    pub fn holds(&self, ctx: &Context, a: &Formula, b: &Formula) -> Result<bool> {
        self.holds_models(
            ctx.models(),
            models_of(a, &self.env).models(),
            models_of(b, &self.env).models(),
        )
    }

    /// Chain literal: `chain:` then one comma-separated axiom line per
    /// theory in minimal DNF, `true` for the empty theory.
    pub fn render(&self) -> String {
        let mut out = String::from("chain:\n");
        for t in &self.theories {
            out.push_str(&render_models(t.models(), &self.env));
            out.push('\n');
        }
        out
    }
}

/// The relation induced by `chain`, judged against `ctx`.
pub fn relation_from_chain(chain: &RankedChain, ctx: &Context) -> Result<InferenceRelation> {
    let space = ClassSpace::new(&chain.env)?;
    let c = space.context_id(ctx)?;
    chain.require_consistent_under(ctx.models())?;
    let ws: Vec<ClassId> = chain
        .theories
        .iter()
        .map(|t| space.id_of(&crate::logic::SemClass::new(t.models().clone())))
        .collect::<Result<_>>()?;
    let rows = space
        .ids()
        .map(|a| {
            let mut last = None;
            for &w in &ws {
                if w & c & a == 0 {
                    break;
                }
                last = Some(w & c & a);
            }
            match last {
                None => ClassMask::full(space),
                Some(m) => {
                    let mut row = ClassMask::EMPTY;
                    for b in space.ids().filter(|&b| space.subset(m, b)) {
                        row.insert(b);
                    }
                    row
                }
            }
        })
        .collect();
    Ok(InferenceRelation::from_rows(&chain.env, space, c, rows))
}

/// `α ≤ β` iff every member proving `α` proves `β`; as a level map,
/// `level(α)` is the number of members proving `α`.
pub fn ordering_from_chain(chain: &RankedChain) -> Result<RationalOrdering> {
    let space = ClassSpace::new(&chain.env)?;
    let ws: Vec<ClassId> = chain
        .theories
        .iter()
        .map(|t| space.id_of(&crate::logic::SemClass::new(t.models().clone())))
        .collect::<Result<_>>()?;
    let levels = space
        .ids()
        .map(|id| ws.iter().filter(|&&w| space.subset(w, id)).count() as u32)
        .collect();
    RationalOrdering::from_levels(&chain.env, levels)
}

/// Chain of upward closures `{β : level(β) ≥ ℓ}` for `ℓ = max` down to 1.
///
/// The closure of level 0 is the set of all formulas and is left out.
pub fn chain_from_ordering(ord: &RationalOrdering) -> Result<RankedChain> {
    ord.require_rational()?;
    let max = ord.max_level();
    if max == 0 {
        return Err(Error::TrivialOrdering);
    }
    let space = ord.space();
    let theories = (1..=max)
        .rev()
        .map(|l| {
            let w = space
                .ids()
                .filter(|&id| ord.level(id) >= l)
                .fold(space.top(), |acc, id| acc & id);
            Theory::from_models(ModelSet::from_bits(space.valuations(), w as u64))
        })
        .collect();
    RankedChain::new(ord.env(), theories)
}

/// Closure of the chain under unions and intersections.
///
/// Every union or intersection of members of a finite chain is its largest
/// or smallest member, so this is the identity; the closure property is
/// asserted rather than assumed.
pub fn complete_chain(chain: &RankedChain) -> RankedChain {
    let ms: Vec<&ModelSet> = chain.theories.iter().map(|t| t.models()).collect();
    for x in &ms {
        for y in &ms {
            assert!(ms.contains(&&(*x & *y)) && ms.contains(&&(*x | *y)));
        }
    }
    chain.clone()
}

/// Rank and range of a consequence `α |~ β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AssertionRank {
    pub rank: usize,
    pub range: (usize, usize),
    /// Every member proves `¬α`, so the assertion holds at all indices.
    pub degenerate: bool,
}

impl fmt::Display for AssertionRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degenerate {
            f.write_str("degenerate")
        } else {
            write!(f, "rank={} range=[{},{}]", self.rank, self.range.0, self.range.1)
        }
    }
}

/// Indices `i` where `Bᵢ` is consistent with `α` and `Bᵢ, α ⊢ β`; these
/// form an interval.
pub fn assertion_rank(chain: &RankedChain, a: &Formula, b: &Formula) -> Result<AssertionRank> {
    let full = ModelSet::full(chain.env.valuation_count());
    let am = models_of(a, &chain.env).into_models();
    let bm = models_of(b, &chain.env).into_models();
    if !chain.holds_models(&full, &am, &bm)? {
        return Err(Error::NotAConsequence);
    }
    let fired: Vec<usize> = chain
        .theories
        .iter()
        .enumerate()
        .filter(|(_, t)| {
            let m = t.models() & &am;
            !m.is_empty() && m.is_subset(&bm)
        })
        .map(|(i, _)| i)
        .collect();
    Ok(match (fired.first(), fired.last()) {
        (Some(&lo), Some(&hi)) => AssertionRank {
            rank: lo,
            range: (lo, hi),
            degenerate: false,
        },
        _ => AssertionRank {
            rank: 0,
            range: (0, chain.len() - 1),
            degenerate: true,
        },
    })
}

/// Chain of explicit formula sets; membership is literal, not closed under
/// entailment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntacticChain {
    sets: Vec<Vec<Formula>>,
}

impl SyntacticChain {
    pub fn new(sets: Vec<Vec<Formula>>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidChain("a chain needs at least one set".into()));
        }
        for (i, pair) in sets.windows(2).enumerate() {
            if let Some(f) = pair[0].iter().find(|f| !pair[1].contains(f)) {
                return Err(Error::InvalidChain(format!(
                    "set {} is missing a member of set {i} ({f:?})",
                    i + 1
                )));
            }
        }
        Ok(SyntacticChain { sets })
    }

    pub fn sets(&self) -> &[Vec<Formula>] {
        &self.sets
    }

    /// `α |~ β` by literal membership of `¬α` and `α → β`.
    pub fn holds(&self, a: &Formula, b: &Formula) -> bool {
        let neg = Formula::not(a.clone());
        let imp = Formula::imp(a.clone(), b.clone());
        self.sets.iter().any(|s| !s.contains(&neg) && s.contains(&imp)) || self.sets.iter().all(|s| s.contains(&neg))
    }
}

/// Class-level view of a syntactic chain: `(X, Y)` holds iff some `α ∈ X`
/// and `β ∈ Y` satisfy `α |~ β`. Since firing needs a literal member
/// `α → β` or `¬α` in every set, the candidates are read off the members.
pub fn relation_from_syntactic_chain(sch: &SyntacticChain, env: &AtomEnv) -> Result<InferenceRelation> {
    let space = ClassSpace::new(env)?;
    let class = |f: &Formula| space.id_of(&models_of(f, env));
    let mut rows = vec![ClassMask::EMPTY; space.class_count()];
    for set in &sch.sets {
        for f in set {
            if let Formula::Imp(a, b) = f {
                if sch.holds(a, b) {
                    rows[class(a)? as usize].insert(class(b)?);
                }
            }
            if let Formula::Not(a) = f {
                if sch.sets.iter().all(|s| s.contains(f)) {
                    rows[class(a)? as usize] = ClassMask::full(space);
                }
            }
        }
    }
    Ok(InferenceRelation::from_rows(env, space, space.top(), rows))
}

fn parse_levels(text: &str, env: &AtomEnv) -> Result<Vec<Vec<Formula>>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "chain:")) => {}
        Some((line, _)) => {
            return Err(Error::Format {
                line,
                message: "expected `chain:`".into(),
            })
        }
        None => {
            return Err(Error::Format {
                line: 1,
                message: "empty chain literal".into(),
            })
        }
    }
    lines
        .map(|(line, l)| {
            l.split(',')
                .map(|f| {
                    parse_formula(f.trim(), env).map_err(|e| Error::Format {
                        line,
                        message: e.to_string(),
                    })
                })
                .collect()
        })
        .collect()
}

/// Parses a chain literal. Blank lines and `#` comments are ignored.
pub fn parse_chain(text: &str, env: &AtomEnv) -> Result<RankedChain> {
    RankedChain::from_axioms(env, parse_levels(text, env)?)
}

/// Parses a chain literal without closing the sets under entailment.
pub fn parse_syntactic_chain(text: &str, env: &AtomEnv) -> Result<SyntacticChain> {
    SyntacticChain::new(parse_levels(text, env)?)
}
