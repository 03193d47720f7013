use std::fmt;

use crate::error::Result;
use crate::logic::{models_of, AtomEnv, ClassId, ClassSpace, Context, Formula, ModelSet};

/// Set of class ids of a space with at most three atoms.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ClassMask(pub(crate) [u64; 4]);

impl ClassMask {
    pub const EMPTY: ClassMask = ClassMask([0; 4]);

    pub fn full(space: ClassSpace) -> Self {
        let mut m = ClassMask::EMPTY;
        for id in space.ids() {
            m.insert(id);
        }
        m
    }

    #[inline]
    pub fn contains(&self, id: ClassId) -> bool {
        self.0[(id >> 6) as usize] >> (id & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, id: ClassId) {
        self.0[(id >> 6) as usize] |= 1 << (id & 63);
    }

    #[inline]
    pub fn remove(&mut self, id: ClassId) {
        self.0[(id >> 6) as usize] &= !(1 << (id & 63));
    }

    #[inline]
    pub fn and(self, o: ClassMask) -> ClassMask {
        ClassMask(std::array::from_fn(|i| self.0[i] & o.0[i]))
    }

    #[inline]
    pub fn and_not(self, o: ClassMask) -> ClassMask {
        ClassMask(std::array::from_fn(|i| self.0[i] & !o.0[i]))
    }

    #[inline]
    pub fn count(self) -> u64 {
        self.0.iter().map(|w| w.count_ones() as u64).sum()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == [0; 4]
    }

    pub fn first(self) -> Option<ClassId> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| (i as u32) * 64 + w.trailing_zeros())
    }

    pub fn iter(self) -> impl Iterator<Item = ClassId> {
        (0..4u32).flat_map(move |i| {
            let mut w = self.0[i as usize];
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    i * 64 + b
                })
            })
        })
    }
}

impl fmt::Debug for ClassMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `up[x]` = the classes entailed by `x`.
pub(crate) fn up_sets(space: ClassSpace) -> Vec<ClassMask> {
    space
        .ids()
        .map(|x| {
            let mut m = ClassMask::EMPTY;
            for y in space.ids() {
                if space.subset(x, y) {
                    m.insert(y);
                }
            }
            m
        })
        .collect()
}

/// `|~` as a boolean matrix over semantic classes, judged against an
/// underlying entailment given by `ctx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InferenceRelation {
    env: AtomEnv,
    space: ClassSpace,
    ctx: ClassId,
    rows: Vec<ClassMask>,
}

impl InferenceRelation {
    pub fn from_fn(env: &AtomEnv, ctx: &Context, holds: impl Fn(ClassId, ClassId) -> bool) -> Result<Self> {
        let space = ClassSpace::new(env)?;
        let ctx = space.context_id(ctx)?;
        let rows = space
            .ids()
            .map(|a| {
                let mut row = ClassMask::EMPTY;
                for b in space.ids() {
                    if holds(a, b) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect();
        Ok(InferenceRelation {
            env: env.clone(),
            space,
            ctx,
            rows,
        })
    }

    pub(crate) fn from_rows(env: &AtomEnv, space: ClassSpace, ctx: ClassId, rows: Vec<ClassMask>) -> Self {
        debug_assert_eq!(rows.len(), space.class_count());
        InferenceRelation {
            env: env.clone(),
            space,
            ctx,
            rows,
        }
    }

    /// `α |~ β` iff `ctx, α ⊢ β`.
    pub fn classical(env: &AtomEnv, ctx: &Context) -> Result<Self> {
        let space = ClassSpace::new(env)?;
        let c = space.context_id(ctx)?;
        let up = up_sets(space);
        let rows = space.ids().map(|a| up[(a & c) as usize]).collect();
        Ok(Self::from_rows(env, space, c, rows))
    }

    pub fn env(&self) -> &AtomEnv {
        &self.env
    }

    pub fn space(&self) -> ClassSpace {
        self.space
    }

    pub fn ctx_id(&self) -> ClassId {
        self.ctx
    }

    pub fn ctx(&self) -> Context {
        Context::from_models(ModelSet::from_bits(self.space.valuations(), self.ctx as u64))
    }

    /// Same matrix judged against another underlying entailment.
    pub fn with_context(&self, ctx: &Context) -> Result<Self> {
        let ctx = self.space.context_id(ctx)?;
        Ok(InferenceRelation { ctx, ..self.clone() })
    }

    #[inline]
    pub fn holds(&self, a: ClassId, b: ClassId) -> bool {
        self.rows[a as usize].contains(b)
    }

    pub fn holds_formula(&self, a: &Formula, b: &Formula) -> Result<bool> {
        let a = self.space.id_of(&models_of(a, &self.env))?;
        let b = self.space.id_of(&models_of(b, &self.env))?;
        Ok(self.holds(a, b))
    }

    #[inline]
    pub fn row(&self, a: ClassId) -> ClassMask {
        self.rows[a as usize]
    }

    pub fn set(&mut self, a: ClassId, b: ClassId, value: bool) {
        let row = &mut self.rows[a as usize];
        if value {
            row.insert(b);
        } else {
            row.remove(b);
        }
    }

    /// `ctx, a ⊢ b`.
    #[inline]
    pub fn entails(&self, a: ClassId, b: ClassId) -> bool {
        self.space.subset(a & self.ctx, b)
    }

    /// Number of `(α, β)` pairs on which the two matrices differ.
    pub fn diff_count(&self, other: &InferenceRelation) -> u64 {
        self.rows
            .iter()
            .zip(&other.rows)
            .map(|(x, y)| ClassMask(std::array::from_fn(|i| x.0[i] ^ y.0[i])).count())
            .sum()
    }

    /// First `(α, β)` pair, in class order, on which the matrices differ.
    pub fn first_diff(&self, other: &InferenceRelation) -> Option<(ClassId, ClassId)> {
        self.space.ids().find_map(|a| {
            let x = self.row(a);
            let y = other.row(a);
            x.and_not(y)
                .first()
                .into_iter()
                .chain(y.and_not(x).first())
                .min()
                .map(|b| (a, b))
        })
    }
}
