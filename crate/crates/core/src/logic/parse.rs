//! Recursive-descent parser for the formula grammar.
//!
//! ```text
//! formula := disj ( "->" formula )?        right-associative
//! disj    := conj ( "|" conj )*
//! conj    := unary ( "&" unary )*
//! unary   := "!" unary | primary
//! primary := atom | "true" | "false" | "(" formula ")"
//! atom    := [a-z_][a-z0-9_]*
//! ```

use super::{AtomEnv, Formula};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'s> {
    Ident(&'s str),
    Not,
    And,
    Or,
    Imp,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((i, Tok::Imp));
                i += 2;
                continue;
            }
            b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(&text[start..i])));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    offset: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'s, 'e> {
    toks: Vec<(usize, Tok<'s>)>,
    pos: usize,
    end: usize,
    env: &'e AtomEnv,
}

impl<'s> Parser<'s, '_> {
    fn peek(&self) -> Option<&Tok<'s>> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.offset(),
            message: message.into(),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.disj()?;
        if self.peek() == Some(&Tok::Imp) {
            self.pos += 1;
            let rhs = self.formula()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disj(&mut self) -> Result<Formula> {
        let mut lhs = self.conj()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            lhs = Formula::or(lhs, self.conj()?);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.peek() == Some(&Tok::Not) {
            self.pos += 1;
            return Ok(Formula::not(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Ident("true")) => {
                self.pos += 1;
                Ok(Formula::Top)
            }
            Some(Tok::Ident("false")) => {
                self.pos += 1;
                Ok(Formula::Bot)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.env
                    .index_of(name)
                    .map(Formula::Atom)
                    .ok_or_else(|| Error::UnknownAtom {
                        name: name.to_string(),
                        offset,
                    })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.formula()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a formula")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses `text` over the atoms of `env`.
pub fn parse_formula(text: &str, env: &AtomEnv) -> Result<Formula> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
        env,
    };
    let f = parser.formula()?;
    if parser.pos != parser.toks.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(f)
}

/// Atom names occurring in `text`, in order of first occurrence.
pub fn scan_atoms(text: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for (_, tok) in tokenize(text)? {
        if let Tok::Ident(name) = tok {
            if name != "true" && name != "false" && !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
    }
    Ok(names)
}
