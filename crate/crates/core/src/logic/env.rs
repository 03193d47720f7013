use crate::error::{Error, Result};

/// Default maximum number of atoms; model sets hold `2^n` bits.
pub const DEFAULT_ATOM_CAP: usize = 16;

/// Ordered list of atom names.
///
/// Valuation `v` assigns atom `k` the truth value of bit `n - 1 - k` of `v`,
/// so atom 0 is the most significant bit. With atoms `a, b` the valuation
/// indices `0..4` read `00, 01, 10, 11`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AtomEnv {
    names: Vec<String>,
}

impl AtomEnv {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(names, DEFAULT_ATOM_CAP)
    }

    pub fn with_cap<I, S>(names: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidEnv("at least one atom is required".into()));
        }
        if names.len() > cap {
            return Err(Error::LimitExceeded {
                what: "atom count",
                limit: cap,
                actual: names.len(),
            });
        }
        for (i, name) in names.iter().enumerate() {
            if !is_atom_name(name) {
                return Err(Error::InvalidEnv(format!("`{name}` is not a valid atom name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidEnv(format!("duplicate atom `{name}`")));
            }
        }
        Ok(AtomEnv { names })
    }

    /// `a, b, c, ...` for `n ≤ 26`, `p0, p1, ...` beyond that.
    pub fn standard(n: usize) -> Result<Self> {
        if n <= 26 {
            Self::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Self::new((0..n).map(|i| format!("p{i}")))
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Number of valuations, `2^n`.
    pub fn valuation_count(&self) -> usize {
        1usize << self.names.len()
    }
}

pub(crate) fn is_atom_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_') && s != "true" && s != "false"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_envs() {
        assert!(AtomEnv::new(Vec::<String>::new()).is_err());
        assert!(AtomEnv::new(["a", "a"]).is_err());
        assert!(AtomEnv::new(["A"]).is_err());
        assert!(AtomEnv::new(["true"]).is_err());
        assert!(matches!(
            AtomEnv::standard(17),
            Err(Error::LimitExceeded {
                limit: 16,
                actual: 17,
                ..
            })
        ));
    }

    #[test]
    fn standard_names() {
        let env = AtomEnv::standard(3).unwrap();
        assert_eq!(env.names(), ["a", "b", "c"]);
        assert_eq!(env.valuation_count(), 8);
        assert_eq!(env.index_of("c"), Some(2));
    }
}
