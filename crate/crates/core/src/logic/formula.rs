use std::fmt;

use super::AtomEnv;

/// Propositional formula over the atoms of an [`AtomEnv`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(usize),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(index: usize) -> Self {
        Formula::Atom(index)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(f: Formula, g: Formula) -> Self {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: Formula, g: Formula) -> Self {
        Formula::Or(Box::new(f), Box::new(g))
    }

    pub fn imp(f: Formula, g: Formula) -> Self {
        Formula::Imp(Box::new(f), Box::new(g))
    }

    /// Conjunction of all formulas; `Top` for an empty list.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Self {
        parts.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Disjunction of all formulas; `Bot` for an empty list.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(parts: I) -> Self {
        parts.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Direct truth-table evaluation under valuation index `valuation` for
    /// an environment with `atoms` atoms.
    pub fn eval(&self, valuation: usize, atoms: usize) -> bool {
        match self {
            Formula::Atom(k) => (valuation >> (atoms - 1 - k)) & 1 == 1,
            Formula::Top => true,
            Formula::Bot => false,
            Formula::Not(f) => !f.eval(valuation, atoms),
            Formula::And(f, g) => f.eval(valuation, atoms) && g.eval(valuation, atoms),
            Formula::Or(f, g) => f.eval(valuation, atoms) || g.eval(valuation, atoms),
            Formula::Imp(f, g) => !f.eval(valuation, atoms) || g.eval(valuation, atoms),
        }
    }

    /// Largest atom index used, if any.
    pub fn max_atom(&self) -> Option<usize> {
        match self {
            Formula::Atom(k) => Some(*k),
            Formula::Top | Formula::Bot => None,
            Formula::Not(f) => f.max_atom(),
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Imp(f, g) => f.max_atom().max(g.max_atom()),
        }
    }

    pub fn display<'a>(&'a self, env: &'a AtomEnv) -> DisplayFormula<'a> {
        DisplayFormula { formula: self, env }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Imp(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }
}

/// Renders a formula in the input syntax with the fewest parentheses that
/// still parse back to the same tree.
pub struct DisplayFormula<'a> {
    formula: &'a Formula,
    env: &'a AtomEnv,
}

impl DisplayFormula<'_> {
    fn write(&self, f: &mut fmt::Formatter<'_>, node: &Formula, parens: bool) -> fmt::Result {
        if parens {
            f.write_str("(")?;
        }
        match node {
            Formula::Atom(k) => f.write_str(self.env.name(*k))?,
            Formula::Top => f.write_str("true")?,
            Formula::Bot => f.write_str("false")?,
            Formula::Not(inner) => {
                f.write_str("!")?;
                self.write(f, inner, inner.precedence() < 4)?;
            }
            Formula::And(l, r) | Formula::Or(l, r) => {
                let p = node.precedence();
                let op = if p == 3 { " & " } else { " | " };
                self.write(f, l, l.precedence() < p)?;
                f.write_str(op)?;
                self.write(f, r, r.precedence() <= p)?;
            }
            Formula::Imp(l, r) => {
                self.write(f, l, l.precedence() <= 1)?;
                f.write_str(" -> ")?;
                self.write(f, r, r.precedence() < 1)?;
            }
        }
        if parens {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for DisplayFormula<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.formula, false)
    }
}
