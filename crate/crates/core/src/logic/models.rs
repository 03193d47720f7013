use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use smallvec::SmallVec;

use super::{AtomEnv, Formula};

/// Bit set over the `2^n` valuations of an environment.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelSet {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

impl ModelSet {
    pub fn empty(len: usize) -> Self {
        ModelSet {
            len,
            words: SmallVec::from_elem(0, len.div_ceil(64)),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = ModelSet {
            len,
            words: SmallVec::from_elem(u64::MAX, len.div_ceil(64)),
        };
        s.trim();
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set of at most 64 valuations from the low bits of `bits`.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= 64, "from_bits needs at most 64 valuations");
        let mut s = Self::empty(len);
        if len > 0 {
            s.words[0] = bits;
            s.trim();
        }
        s
    }

    /// The set as an integer whose bit `i` is valuation `i`.
    pub fn bits(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Number of valuations in the universe (not the cardinality).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "valuation {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &ModelSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    fn zip_with(&self, other: &ModelSet, f: impl Fn(u64, u64) -> u64) -> ModelSet {
        assert_eq!(self.len, other.len, "model sets over different universes");
        let mut out = ModelSet {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
        };
        out.trim();
        out
    }
}

impl BitAnd for &ModelSet {
    type Output = ModelSet;
    fn bitand(self, rhs: &ModelSet) -> ModelSet {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl BitOr for &ModelSet {
    type Output = ModelSet;
    fn bitor(self, rhs: &ModelSet) -> ModelSet {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl Sub for &ModelSet {
    type Output = ModelSet;
    fn sub(self, rhs: &ModelSet) -> ModelSet {
        self.zip_with(rhs, |a, b| a & !b)
    }
}

impl Not for &ModelSet {
    type Output = ModelSet;
    fn not(self) -> ModelSet {
        let mut out = ModelSet {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }
}

impl fmt::Debug for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ModelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Set of atom models for each atom, computed word-wise.
fn atom_models(atoms: usize, k: usize) -> ModelSet {
    let len = 1usize << atoms;
    let shift = atoms - 1 - k;
    ModelSet::from_indices(len, (0..len).filter(|v| (v >> shift) & 1 == 1))
}

/// Models of `f` computed by set algebra on the connectives.
pub fn models_of(f: &Formula, env: &AtomEnv) -> SemClass {
    fn go(f: &Formula, n: usize) -> ModelSet {
        let len = 1usize << n;
        match f {
            Formula::Atom(k) => atom_models(n, *k),
            Formula::Top => ModelSet::full(len),
            Formula::Bot => ModelSet::empty(len),
            Formula::Not(g) => !&go(g, n),
            Formula::And(g, h) => &go(g, n) & &go(h, n),
            Formula::Or(g, h) => &go(g, n) | &go(h, n),
            Formula::Imp(g, h) => &!&go(g, n) | &go(h, n),
        }
    }
    debug_assert!(f.max_atom().is_none_or(|k| k < env.len()));
    SemClass(go(f, env.len()))
}

/// Semantic identity of a formula: its set of satisfying valuations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemClass(pub(crate) ModelSet);

impl SemClass {
    pub fn new(models: ModelSet) -> Self {
        SemClass(models)
    }

    pub fn models(&self) -> &ModelSet {
        &self.0
    }

    pub fn into_models(self) -> ModelSet {
        self.0
    }

    /// Class id in ascending bit-pattern order (small environments only).
    pub fn id(&self) -> Option<u32> {
        self.0.bits().and_then(|b| u32::try_from(b).ok())
    }
}

impl fmt::Display for SemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Background assumptions, by their model set. Entailment relative to a
/// context only looks at valuations inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    models: ModelSet,
}

impl Context {
    /// Classical context: every valuation.
    pub fn full(env: &AtomEnv) -> Self {
        Context {
            models: ModelSet::full(env.valuation_count()),
        }
    }

    pub fn from_models(models: ModelSet) -> Self {
        Context { models }
    }

    pub fn from_formula(f: &Formula, env: &AtomEnv) -> Self {
        Context {
            models: models_of(f, env).0,
        }
    }

    pub fn models(&self) -> &ModelSet {
        &self.models
    }

    pub fn is_full(&self) -> bool {
        self.models.is_full()
    }
}

/// Deductively closed set of formulas, represented by its models.
///
/// Compactness is vacuous here: every theory over finitely many atoms is
/// the closure of a single formula.
#[derive(Debug, Clone)]
pub struct Theory {
    models: ModelSet,
    axioms: Option<Vec<Formula>>,
}

impl PartialEq for Theory {
    fn eq(&self, other: &Self) -> bool {
        self.models == other.models
    }
}

impl Eq for Theory {}

impl Theory {
    pub fn from_models(models: ModelSet) -> Self {
        Theory { models, axioms: None }
    }

    /// `Cn(axioms)`.
    pub fn from_axioms(axioms: Vec<Formula>, env: &AtomEnv) -> Self {
        let mut models = ModelSet::full(env.valuation_count());
        for ax in &axioms {
            models = &models & models_of(ax, env).models();
        }
        Theory {
            models,
            axioms: Some(axioms),
        }
    }

    /// `Cn(∅)`.
    pub fn tautologies(env: &AtomEnv) -> Self {
        Theory::from_axioms(Vec::new(), env)
    }

    pub fn models(&self) -> &ModelSet {
        &self.models
    }

    pub fn axioms(&self) -> Option<&[Formula]> {
        self.axioms.as_deref()
    }

    pub fn is_consistent(&self) -> bool {
        !self.models.is_empty()
    }

    /// `Theory ⊢ goal`.
    pub fn entails(&self, goal: &SemClass) -> bool {
        self.models.is_subset(goal.models())
    }

    /// True if `self ⊆ other` as sets of formulas.
    pub fn is_subtheory_of(&self, other: &Theory) -> bool {
        other.models.is_subset(&self.models)
    }
}

/// `ctx, assumptions ⊢ goal`, decided by model-set inclusion.
pub fn entails(ctx: &Context, assumptions: &[Formula], goal: &Formula, env: &AtomEnv) -> bool {
    let mut lhs = ctx.models.clone();
    for a in assumptions {
        lhs = &lhs & models_of(a, env).models();
    }
    lhs.is_subset(models_of(goal, env).models())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn class(text: &str, env: &AtomEnv) -> Vec<usize> {
        models_of(&parse_formula(text, env).unwrap(), env)
            .models()
            .iter()
            .collect()
    }

    #[test]
    fn models_of_examples() {
        let env = AtomEnv::standard(2).unwrap();
        assert_eq!(class("a", &env), [2, 3]);
        assert_eq!(class("a -> b", &env), [0, 1, 3]);
        assert_eq!(class("a & !a", &env), Vec::<usize>::new());
    }

    #[test]
    fn entails_examples() {
        let env = AtomEnv::standard(2).unwrap();
        let p = |s: &str| parse_formula(s, &env).unwrap();
        let full = Context::full(&env);
        assert!(entails(&full, &[p("a"), p("a -> b")], &p("b"), &env));
        let not_b = Context::from_formula(&p("!b"), &env);
        assert!(entails(&not_b, &[p("b")], &p("false"), &env));
        assert!(!entails(&full, &[p("a")], &p("b"), &env));
    }

    #[test]
    fn large_model_sets() {
        let env = AtomEnv::standard(10).unwrap();
        let f = parse_formula("a & j", &env).unwrap();
        let m = models_of(&f, &env);
        assert_eq!(m.models().count(), 256);
        assert!((!m.models()).count() == 1024 - 256);
        assert!(m.models().contains(1023));
        assert_eq!(m.id(), None);
    }

    #[test]
    fn theory_inclusion_reverses_models() {
        let env = AtomEnv::standard(2).unwrap();
        let p = |s: &str| parse_formula(s, &env).unwrap();
        let t0 = Theory::tautologies(&env);
        let t1 = Theory::from_axioms(vec![p("a")], &env);
        assert!(t0.is_subtheory_of(&t1));
        assert!(!t1.is_subtheory_of(&t0));
        assert!(t1.entails(&models_of(&p("a | b"), &env)));
    }
}
