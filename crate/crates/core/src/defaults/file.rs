//! Text format for default bases.
//!
//! ```text
//! atoms: a b c
//! [level 1]
//! a -> b
//! [level 2]
//! !b
//! ```
//!
//! Blank lines and `#` comments are ignored; levels must be numbered
//! `1, 2, …` in order.

use super::extension::DefaultBase;
use crate::error::{Error, Result};
use crate::logic::{parse_formula, AtomEnv};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

pub fn parse_base(text: &str) -> Result<DefaultBase> {
    let mut env: Option<AtomEnv> = None;
    let mut levels: Vec<Vec<_>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(env) = &env else {
            let names = content
                .strip_prefix("atoms:")
                .ok_or_else(|| format_err(line, "expected `atoms:` line"))?;
            env = Some(AtomEnv::new(names.split_whitespace()).map_err(|e| format_err(line, e.to_string()))?);
            continue;
        };
        if let Some(header) = content.strip_prefix('[') {
            let number = header
                .strip_suffix(']')
                .and_then(|h| h.trim().strip_prefix("level"))
                .and_then(|n| n.trim().parse::<usize>().ok())
                .ok_or_else(|| format_err(line, "malformed level header"))?;
            if number != levels.len() + 1 {
                return Err(format_err(
                    line,
                    format!("expected `[level {}]`, found level {number}", levels.len() + 1),
                ));
            }
            levels.push(Vec::new());
            continue;
        }
        let level = levels
            .last_mut()
            .ok_or_else(|| format_err(line, "formula before the first level header"))?;
        level.push(parse_formula(content, env).map_err(|e| format_err(line, e.to_string()))?);
    }
    let env = env.ok_or_else(|| format_err(last_line.max(1), "missing `atoms:` line"))?;
    if levels.is_empty() {
        return Err(format_err(last_line.max(1), "base has no levels"));
    }
    DefaultBase::new(&env, levels)
}

pub fn render_base(base: &DefaultBase) -> String {
    let env = base.env();
    let mut out = format!("atoms: {}\n", env.names().join(" "));
    for (i, level) in base.levels().iter().enumerate() {
        out.push_str(&format!("[level {}]\n", i + 1));
        for f in level {
            out.push_str(&format!("{}\n", f.display(env)));
        }
    }
    out
}
