use super::{AtomEnv, Context, ModelSet, SemClass};
use crate::error::{Error, Result};

/// Largest atom count for which every semantic class is enumerated.
pub const MAX_EXHAUSTIVE_ATOMS: usize = 3;

/// Class id: the model set as an integer, bit `i` = valuation `i`.
pub type ClassId = u32;

/// The `2^(2^n)` semantic classes of a small environment, with the boolean
/// operations on class ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSpace {
    atoms: usize,
}

impl ClassSpace {
    pub fn new(env: &AtomEnv) -> Result<Self> {
        Self::with_atoms(env.len())
    }

    pub fn with_atoms(atoms: usize) -> Result<Self> {
        if atoms > MAX_EXHAUSTIVE_ATOMS {
            return Err(Error::LimitExceeded {
                what: "atoms for exhaustive class enumeration",
                limit: MAX_EXHAUSTIVE_ATOMS,
                actual: atoms,
            });
        }
        Ok(ClassSpace { atoms })
    }

    pub fn atoms(self) -> usize {
        self.atoms
    }

    pub fn valuations(self) -> usize {
        1 << self.atoms
    }

    pub fn class_count(self) -> usize {
        1 << self.valuations()
    }

    /// Class of `⊤`.
    #[inline]
    pub fn top(self) -> ClassId {
        ((1u64 << self.valuations()) - 1) as ClassId
    }

    /// Class of `⊥`.
    #[inline]
    pub fn bot(self) -> ClassId {
        0
    }

    #[inline]
    pub fn not(self, a: ClassId) -> ClassId {
        !a & self.top()
    }

    #[inline]
    pub fn imp(self, a: ClassId, b: ClassId) -> ClassId {
        (!a | b) & self.top()
    }

    #[inline]
    pub fn subset(self, a: ClassId, b: ClassId) -> bool {
        a & !b == 0
    }

    pub fn ids(self) -> std::ops::Range<ClassId> {
        0..self.class_count() as ClassId
    }

    pub fn class(self, id: ClassId) -> SemClass {
        SemClass::new(ModelSet::from_bits(self.valuations(), id as u64))
    }

    pub fn id_of(self, class: &SemClass) -> Result<ClassId> {
        if class.models().universe() != self.valuations() {
            return Err(Error::EnvMismatch);
        }
        class.id().ok_or(Error::EnvMismatch)
    }

    pub fn context_id(self, ctx: &Context) -> Result<ClassId> {
        self.id_of(&SemClass::new(ctx.models().clone()))
    }
}

/// All classes of `env` in ascending bit-pattern order.
pub fn enumerate_classes(env: &AtomEnv) -> Result<Vec<SemClass>> {
    let space = ClassSpace::new(env)?;
    Ok(space.ids().map(|id| space.class(id)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(&AtomEnv::standard(1).unwrap()).unwrap().len(), 4);
        assert_eq!(enumerate_classes(&AtomEnv::standard(2).unwrap()).unwrap().len(), 16);
        assert_eq!(enumerate_classes(&AtomEnv::standard(3).unwrap()).unwrap().len(), 256);
        assert!(matches!(
            enumerate_classes(&AtomEnv::standard(4).unwrap()),
            Err(Error::LimitExceeded {
                limit: 3,
                actual: 4,
                ..
            })
        ));
    }

    #[test]
    fn ascending_order() {
        let classes = enumerate_classes(&AtomEnv::standard(2).unwrap()).unwrap();
        for (i, c) in classes.iter().enumerate() {
            assert_eq!(c.id(), Some(i as u32));
        }
    }

    #[test]
    fn boolean_ops() {
        let s = ClassSpace::with_atoms(1).unwrap();
        // classes: 0 = ⊥, 1 = ¬a, 2 = a, 3 = ⊤
        assert_eq!(s.not(2), 1);
        assert_eq!(s.imp(2, 0), 1);
        assert_eq!(s.top(), 3);
        assert!(s.subset(1, 3));
        assert!(!s.subset(2, 1));
    }
}
