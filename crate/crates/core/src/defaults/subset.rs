use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Nonempty set of level indices `1..=m`; bit `i - 1` stands for level `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetKey {
    mask: u32,
    m: usize,
}

impl SubsetKey {
    pub fn new(mask: u32, m: usize) -> Result<Self> {
        if mask == 0 {
            return Err(Error::InvalidBase("subset keys must be nonempty".into()));
        }
        if m >= 32 || mask >> m != 0 {
            return Err(Error::InvalidBase(format!("subset key {mask:#b} exceeds {m} levels")));
        }
        Ok(SubsetKey { mask, m })
    }

    /// Key from 1-based level indices.
    pub fn from_levels(levels: &[usize], m: usize) -> Result<Self> {
        let mut mask = 0u32;
        for &i in levels {
            if i == 0 || i > m {
                return Err(Error::InvalidBase(format!("level {i} outside 1..={m}")));
            }
            mask |= 1 << (i - 1);
        }
        Self::new(mask, m)
    }

    pub fn full(m: usize) -> Self {
        SubsetKey {
            mask: (1u32 << m) - 1,
            m,
        }
    }

    pub fn mask(self) -> u32 {
        self.mask
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn contains(self, level: usize) -> bool {
        level >= 1 && level <= self.m && self.mask >> (level - 1) & 1 == 1
    }

    pub fn levels(self) -> impl Iterator<Item = usize> {
        (1..=self.m).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for SubsetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Reading of the lexicographic order on subsets of levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SubsetOrder {
    /// `K < L` iff the first index where they differ belongs to `L`. The
    /// full set is the maximum.
    #[default]
    Mirrored,
    /// `K < L` iff the first index where they differ belongs to `K`. The
    /// full set is the minimum.
    Literal,
}

/// Compares two keys over the same number of levels.
pub fn lex_subset_order(k: SubsetKey, l: SubsetKey, order: SubsetOrder) -> Ordering {
    debug_assert_eq!(k.m, l.m);
    let Some(i) = (1..=k.m.max(l.m)).find(|&i| k.contains(i) != l.contains(i)) else {
        return Ordering::Equal;
    };
    let in_l = l.contains(i);
    match (order, in_l) {
        (SubsetOrder::Mirrored, true) | (SubsetOrder::Literal, false) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

/// All nonempty keys over `m` levels, ascending.
pub fn all_keys(m: usize, order: SubsetOrder) -> Vec<SubsetKey> {
    let mut keys: Vec<SubsetKey> = (1..1u32 << m).map(|mask| SubsetKey { mask, m }).collect();
    keys.sort_by(|&k, &l| lex_subset_order(k, l, order));
    keys
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(levels: &[usize]) -> SubsetKey {
        SubsetKey::from_levels(levels, 3).unwrap()
    }

    #[test]
    fn mirrored_examples() {
        let o = SubsetOrder::Mirrored;
        assert_eq!(lex_subset_order(key(&[3]), key(&[2]), o), Ordering::Less);
        assert_eq!(lex_subset_order(key(&[1, 3]), key(&[1, 2]), o), Ordering::Less);
        assert_eq!(lex_subset_order(key(&[2]), key(&[2]), o), Ordering::Equal);
    }

    #[test]
    fn enumeration_order() {
        let shown: Vec<String> = all_keys(3, SubsetOrder::Mirrored)
            .iter()
            .map(|k| k.to_string())
            .collect();
        assert_eq!(shown, ["{3}", "{2}", "{2,3}", "{1}", "{1,3}", "{1,2}", "{1,2,3}"]);
        let mut literal = all_keys(3, SubsetOrder::Literal);
        literal.reverse();
        assert_eq!(literal, all_keys(3, SubsetOrder::Mirrored));
    }

    #[test]
    fn extremes() {
        for m in 1..=5 {
            let keys = all_keys(m, SubsetOrder::Mirrored);
            assert_eq!(*keys.last().unwrap(), SubsetKey::full(m));
            assert_eq!(*keys.first().unwrap(), SubsetKey::from_levels(&[m], m).unwrap());
        }
    }

    #[test]
    fn rejects_bad_keys() {
        assert!(SubsetKey::new(0, 3).is_err());
        assert!(SubsetKey::new(0b1000, 3).is_err());
        assert!(SubsetKey::from_levels(&[4], 3).is_err());
    }
}
