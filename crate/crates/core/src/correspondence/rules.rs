//! Exhaustive rule checking over semantic classes.
//!
//! Quantifying over classes instead of formulas is sound because a relation
//! stored per class cannot distinguish equivalent formulas. Three-variable
//! rules are evaluated with one bit-parallel pass over the third variable.

use std::fmt;

use rayon::prelude::*;

use super::relation::{up_sets, ClassMask, InferenceRelation};
use crate::logic::{render_models, AtomEnv, ClassId, SemClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Supraclassicality,
    LeftLogicalEquivalence,
    RightWeakening,
    And,
    Cut,
    CautiousMonotonicity,
    Or,
    RationalMonotonicity,
    ConsistencyPreservation,
    Reciprocity,
    S,
    BotAnd,
    AndBot,
    OrBot,
}

impl RuleId {
    pub const INFERENCE: [RuleId; 4] = [
        RuleId::Supraclassicality,
        RuleId::LeftLogicalEquivalence,
        RuleId::RightWeakening,
        RuleId::And,
    ];
    pub const PREFERENTIAL: [RuleId; 3] = [RuleId::Cut, RuleId::CautiousMonotonicity, RuleId::Or];
    /// The eight rules a rational relation satisfies.
    pub const RATIONAL: [RuleId; 8] = [
        RuleId::Supraclassicality,
        RuleId::LeftLogicalEquivalence,
        RuleId::RightWeakening,
        RuleId::And,
        RuleId::Cut,
        RuleId::CautiousMonotonicity,
        RuleId::Or,
        RuleId::RationalMonotonicity,
    ];
    pub const DERIVED: [RuleId; 5] = [
        RuleId::Reciprocity,
        RuleId::S,
        RuleId::BotAnd,
        RuleId::AndBot,
        RuleId::OrBot,
    ];
    pub const ALL: [RuleId; 14] = [
        RuleId::Supraclassicality,
        RuleId::LeftLogicalEquivalence,
        RuleId::RightWeakening,
        RuleId::And,
        RuleId::Cut,
        RuleId::CautiousMonotonicity,
        RuleId::Or,
        RuleId::RationalMonotonicity,
        RuleId::ConsistencyPreservation,
        RuleId::Reciprocity,
        RuleId::S,
        RuleId::BotAnd,
        RuleId::AndBot,
        RuleId::OrBot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Supraclassicality => "Supraclassicality",
            RuleId::LeftLogicalEquivalence => "LeftLogicalEquivalence",
            RuleId::RightWeakening => "RightWeakening",
            RuleId::And => "And",
            RuleId::Cut => "Cut",
            RuleId::CautiousMonotonicity => "CautiousMonotonicity",
            RuleId::Or => "Or",
            RuleId::RationalMonotonicity => "RationalMonotonicity",
            RuleId::ConsistencyPreservation => "ConsistencyPreservation",
            RuleId::Reciprocity => "Reciprocity",
            RuleId::S => "S",
            RuleId::BotAnd => "BotAnd",
            RuleId::AndBot => "AndBot",
            RuleId::OrBot => "OrBot",
        }
    }

    /// Number of class variables the rule quantifies over.
    pub fn arity(self) -> usize {
        match self {
            RuleId::ConsistencyPreservation => 1,
            RuleId::Supraclassicality | RuleId::BotAnd | RuleId::AndBot | RuleId::OrBot => 2,
            _ => 3,
        }
    }

    pub fn is_derived(self) -> bool {
        RuleId::DERIVED.contains(&self)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classes instantiating a rule's premises with a false conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub rule: RuleId,
    pub witnesses: Vec<SemClass>,
}

impl Counterexample {
    /// `rule<TAB>w1<TAB>w2<TAB>w3` with witnesses in minimal DNF.
    pub fn render(&self, env: &AtomEnv) -> String {
        let mut out = self.rule.name().to_string();
        for w in &self.witnesses {
            out.push('\t');
            out.push_str(&render_models(w.models(), env));
        }
        out
    }
}

/// Outcome of checking one rule: the total number of violating tuples and
/// the first one in class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleCheck {
    pub rule: RuleId,
    pub violations: u64,
    pub first: Option<Counterexample>,
}

impl RuleCheck {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

/// Direct evaluation of one rule instance; true iff the premises hold and
/// the conclusion fails. Unused trailing arguments are ignored.
pub fn instance_violated(rel: &InferenceRelation, rule: RuleId, a: ClassId, b: ClassId, c: ClassId) -> bool {
    let s = rel.space();
    let r = |x: ClassId, y: ClassId| rel.holds(x, y);
    let ent = |x: ClassId, y: ClassId| rel.entails(x, y);
    let bot = s.bot();
    match rule {
        RuleId::Supraclassicality => ent(a, b) && !r(a, b),
        RuleId::LeftLogicalEquivalence => ent(a, b) && ent(b, a) && r(a, c) && !r(b, c),
        RuleId::RightWeakening => r(a, b) && ent(s.top(), s.imp(b, c)) && !r(a, c),
        RuleId::And => r(a, b) && r(a, c) && !r(a, b & c),
        RuleId::Cut => r(a, b) && r(a & b, c) && !r(a, c),
        RuleId::CautiousMonotonicity => r(a, b) && r(a, c) && !r(a & b, c),
        RuleId::Or => r(a, c) && r(b, c) && !r(a | b, c),
        RuleId::RationalMonotonicity => !r(a, s.not(b)) && r(a, c) && !r(a & b, c),
        RuleId::ConsistencyPreservation => r(a, bot) && !ent(a, bot),
        RuleId::Reciprocity => r(a, b) && r(b, a) && r(a, c) && !r(b, c),
        RuleId::S => r(a & b, c) && !r(a, s.imp(b, c)),
        RuleId::BotAnd => r(a, bot) && !r(a & b, bot),
        RuleId::AndBot => r(a & b, bot) && !r(a, s.not(b)),
        RuleId::OrBot => r(a | b, bot) && !r(a, bot),
    }
}

#[derive(Default)]
struct Tally {
    count: u64,
    first: Option<[ClassId; 3]>,
}

impl Tally {
    fn add(&mut self, witness: [ClassId; 3], n: u64) {
        if n > 0 {
            self.count += n;
            self.first.get_or_insert(witness);
        }
    }

    fn add_mask(&mut self, a: ClassId, b: ClassId, mask: ClassMask) {
        if let Some(c) = mask.first() {
            self.add([a, b, c], mask.count());
        }
    }
}

/// Violations with first variable `a`, in `(b, c)` order.
fn tally_row(rel: &InferenceRelation, up: &[ClassMask], rule: RuleId, a: ClassId) -> Tally {
    let s = rel.space();
    let ctx = rel.ctx_id();
    let row = |x: ClassId| rel.row(x);
    let bot = s.bot();
    let mut t = Tally::default();
    let ra = row(a);
    match rule {
        RuleId::Supraclassicality => {
            for b in up[(a & ctx) as usize].and_not(ra).iter() {
                t.add([a, b, 0], 1);
            }
        }
        RuleId::LeftLogicalEquivalence => {
            for b in s.ids().filter(|&b| a & ctx == b & ctx) {
                t.add_mask(a, b, ra.and_not(row(b)));
            }
        }
        RuleId::RightWeakening => {
            for b in ra.iter() {
                t.add_mask(a, b, up[(b & ctx) as usize].and_not(ra));
            }
        }
        RuleId::And => {
            for b in ra.iter() {
                for c in ra.iter() {
                    if !ra.contains(b & c) {
                        t.add([a, b, c], 1);
                    }
                }
            }
        }
        RuleId::Cut => {
            for b in ra.iter() {
                t.add_mask(a, b, row(a & b).and_not(ra));
            }
        }
        RuleId::CautiousMonotonicity => {
            for b in ra.iter() {
                t.add_mask(a, b, ra.and_not(row(a & b)));
            }
        }
        RuleId::Or => {
            for b in s.ids() {
                t.add_mask(a, b, ra.and(row(b)).and_not(row(a | b)));
            }
        }
        RuleId::RationalMonotonicity => {
            for b in s.ids().filter(|&b| !ra.contains(s.not(b))) {
                t.add_mask(a, b, ra.and_not(row(a & b)));
            }
        }
        RuleId::ConsistencyPreservation => {
            if ra.contains(bot) && !rel.entails(a, bot) {
                t.add([a, 0, 0], 1);
            }
        }
        RuleId::Reciprocity => {
            for b in ra.iter().filter(|&b| rel.holds(b, a)) {
                t.add_mask(a, b, ra.and_not(row(b)));
            }
        }
        RuleId::S => {
            for b in s.ids() {
                for c in row(a & b).iter() {
                    if !ra.contains(s.imp(b, c)) {
                        t.add([a, b, c], 1);
                    }
                }
            }
        }
        RuleId::BotAnd => {
            if ra.contains(bot) {
                for b in s.ids().filter(|&b| !rel.holds(a & b, bot)) {
                    t.add([a, b, 0], 1);
                }
            }
        }
        RuleId::AndBot => {
            for b in s.ids().filter(|&b| rel.holds(a & b, bot) && !ra.contains(s.not(b))) {
                t.add([a, b, 0], 1);
            }
        }
        RuleId::OrBot => {
            if !ra.contains(bot) {
                for b in s.ids().filter(|&b| rel.holds(a | b, bot)) {
                    t.add([a, b, 0], 1);
                }
            }
        }
    }
    t
}

fn check_with(rel: &InferenceRelation, up: &[ClassMask], rule: RuleId) -> RuleCheck {
    let tallies: Vec<Tally> = rel
        .space()
        .ids()
        .into_par_iter()
        .map(|a| tally_row(rel, up, rule, a))
        .collect();
    let violations = tallies.iter().map(|t| t.count).sum();
    let first = tallies.iter().find_map(|t| t.first).map(|w| Counterexample {
        rule,
        witnesses: w[..rule.arity()].iter().map(|&id| rel.space().class(id)).collect(),
    });
    RuleCheck {
        rule,
        violations,
        first,
    }
}

/// Checks `rule` over every tuple of classes.
pub fn check_postulate(rel: &InferenceRelation, rule: RuleId) -> RuleCheck {
    check_with(rel, &up_sets(rel.space()), rule)
}

/// Checks every rule in `rules`, sharing the precomputed tables.
pub fn check_rules(rel: &InferenceRelation, rules: &[RuleId]) -> Vec<RuleCheck> {
    let up = up_sets(rel.space());
    rules.iter().map(|&r| check_with(rel, &up, r)).collect()
}

/// Checks Reciprocity, S and the three `⊥` rules.
pub fn check_derived_rules(rel: &InferenceRelation) -> Vec<RuleCheck> {
    check_rules(rel, &RuleId::DERIVED)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Classification {
    pub inference: bool,
    pub preferential: bool,
    pub rational: bool,
    pub expectation: bool,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.expectation {
            "expectation"
        } else if self.rational {
            "rational"
        } else if self.preferential {
            "preferential"
        } else if self.inference {
            "inference"
        } else {
            "none"
        };
        f.write_str(name)
    }
}

/// Which of the nested relation classes `rel` belongs to, judged against
/// its own context.
pub fn classify_relation(rel: &InferenceRelation) -> Classification {
    let up = up_sets(rel.space());
    let ok = |rules: &[RuleId]| rules.iter().all(|&r| check_with(rel, &up, r).holds());
    let inference = ok(&RuleId::INFERENCE);
    let preferential = inference && ok(&RuleId::PREFERENTIAL);
    let rational = preferential && ok(&[RuleId::RationalMonotonicity]);
    let expectation = rational && ok(&[RuleId::ConsistencyPreservation]);
    Classification {
        inference,
        preferential,
        rational,
        expectation,
    }
}
