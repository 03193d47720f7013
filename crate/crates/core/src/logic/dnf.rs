//! Minimal disjunctive normal form for rendering model sets.
//!
//! Prime implicants come from Quine–McCluskey merging; the cover is chosen
//! exactly (fewest terms, then fewest literals) when the residual problem is
//! small and greedily otherwise.

use std::collections::BTreeSet;

use super::{AtomEnv, Formula, ModelSet};

/// Above this many valuations prime implicants are grown greedily instead of
/// by exhaustive merging.
const QM_MAX_VALUATIONS: usize = 1 << 10;
const EXACT_COVER_MAX_PRIMES: usize = 24;

/// A product term: valuation `v` is covered iff `v & care == value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Cube {
    care: u32,
    value: u32,
}

impl Cube {
    fn covers(self, v: u32) -> bool {
        v & self.care == self.value
    }

    fn literals(self) -> u32 {
        self.care.count_ones()
    }

    /// Per-atom sort key: positive literal, negative literal, absent.
    fn sort_key(self, atoms: usize) -> Vec<u8> {
        (0..atoms)
            .map(|k| {
                let bit = 1 << (atoms - 1 - k);
                match (self.care & bit != 0, self.value & bit != 0) {
                    (true, true) => 0,
                    (true, false) => 1,
                    (false, _) => 2,
                }
            })
            .collect()
    }
}

fn prime_implicants_qm(minterms: &[u32], atoms: usize) -> Vec<Cube> {
    let all = (1u32 << atoms) - 1;
    let mut current: BTreeSet<Cube> = minterms.iter().map(|&v| Cube { care: all, value: v }).collect();
    let mut primes = BTreeSet::new();
    while !current.is_empty() {
        let mut next = BTreeSet::new();
        let mut merged = BTreeSet::new();
        let cubes: Vec<Cube> = current.iter().copied().collect();
        for (i, &x) in cubes.iter().enumerate() {
            for &y in &cubes[i + 1..] {
                if x.care != y.care {
                    continue;
                }
                let diff = x.value ^ y.value;
                if diff.count_ones() == 1 {
                    next.insert(Cube {
                        care: x.care & !diff,
                        value: x.value & !diff,
                    });
                    merged.insert(x);
                    merged.insert(y);
                }
            }
        }
        primes.extend(current.difference(&merged).copied());
        current = next;
    }
    primes.into_iter().collect()
}

/// Expands each minterm to some prime by dropping literals while the cube
/// stays inside the set.
fn prime_implicants_greedy(set: &ModelSet, minterms: &[u32], atoms: usize) -> Vec<Cube> {
    let all = (1u32 << atoms) - 1;
    let inside = |c: Cube| {
        let free = all & !c.care;
        // enumerate subsets of the free bits
        let mut sub = free;
        loop {
            if !set.contains((c.value | sub) as usize) {
                return false;
            }
            if sub == 0 {
                return true;
            }
            sub = (sub - 1) & free;
        }
    };
    let mut primes = BTreeSet::new();
    for &v in minterms {
        if primes.iter().any(|p: &Cube| p.covers(v)) {
            continue;
        }
        let mut cube = Cube { care: all, value: v };
        for k in 0..atoms {
            let bit = 1 << (atoms - 1 - k);
            let wider = Cube {
                care: cube.care & !bit,
                value: cube.value & !bit,
            };
            if inside(wider) {
                cube = wider;
            }
        }
        primes.insert(cube);
    }
    primes.into_iter().collect()
}

fn cost(cover: &[Cube]) -> (usize, u32) {
    (cover.len(), cover.iter().map(|c| c.literals()).sum())
}

fn exact_cover(primes: &[Cube], uncovered: &[u32], chosen: &mut Vec<Cube>, best: &mut Option<Vec<Cube>>) {
    if let Some(b) = best {
        if chosen.len() > b.len() || (chosen.len() == b.len() && cost(chosen) >= cost(b)) {
            return;
        }
    }
    let Some(&first) = uncovered.iter().find(|&&v| !chosen.iter().any(|c| c.covers(v))) else {
        *best = Some(chosen.clone());
        return;
    };
    for &p in primes.iter().filter(|p| p.covers(first)) {
        chosen.push(p);
        exact_cover(primes, uncovered, chosen, best);
        chosen.pop();
    }
}

fn select_cover(primes: Vec<Cube>, minterms: &[u32]) -> Vec<Cube> {
    let mut cover: Vec<Cube> = Vec::new();
    for &v in minterms {
        let mut covering = primes.iter().filter(|p| p.covers(v));
        if let (Some(&only), None) = (covering.next(), covering.next()) {
            if !cover.contains(&only) {
                cover.push(only);
            }
        }
    }
    let rest: Vec<u32> = minterms
        .iter()
        .copied()
        .filter(|&v| !cover.iter().any(|c| c.covers(v)))
        .collect();
    if rest.is_empty() {
        return cover;
    }
    let candidates: Vec<Cube> = primes.into_iter().filter(|p| !cover.contains(p)).collect();
    if candidates.len() <= EXACT_COVER_MAX_PRIMES {
        let mut best = None;
        exact_cover(&candidates, &rest, &mut Vec::new(), &mut best);
        cover.extend(best.unwrap_or_default());
    } else {
        let mut left = rest;
        while !left.is_empty() {
            let pick = *candidates
                .iter()
                .max_by_key(|p| {
                    let n = left.iter().filter(|&&v| p.covers(v)).count();
                    (n, std::cmp::Reverse(p.literals()))
                })
                .expect("primes cover every minterm");
            cover.push(pick);
            left.retain(|&v| !pick.covers(v));
        }
    }
    cover
}

fn cube_formula(cube: Cube, atoms: usize) -> Formula {
    Formula::conjunction((0..atoms).filter_map(|k| {
        let bit = 1 << (atoms - 1 - k);
        (cube.care & bit != 0).then(|| {
            if cube.value & bit != 0 {
                Formula::atom(k)
            } else {
                Formula::not(Formula::atom(k))
            }
        })
    }))
}

/// A minimal DNF formula whose models are exactly `set`.
pub fn minimal_dnf(set: &ModelSet, env: &AtomEnv) -> Formula {
    let atoms = env.len();
    debug_assert_eq!(set.universe(), env.valuation_count());
    if set.is_empty() {
        return Formula::Bot;
    }
    if set.is_full() {
        return Formula::Top;
    }
    let minterms: Vec<u32> = set.iter().map(|v| v as u32).collect();
    let primes = if set.universe() <= QM_MAX_VALUATIONS {
        prime_implicants_qm(&minterms, atoms)
    } else {
        prime_implicants_greedy(set, &minterms, atoms)
    };
    let mut cover = select_cover(primes, &minterms);
    cover.sort_by_key(|c| c.sort_key(atoms));
    Formula::disjunction(cover.into_iter().map(|c| cube_formula(c, atoms)))
}

/// [`minimal_dnf`] rendered in the input syntax.
pub fn render_models(set: &ModelSet, env: &AtomEnv) -> String {
    minimal_dnf(set, env).display(env).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{models_of, parse_formula};

    fn roundtrip(text: &str, env: &AtomEnv) -> String {
        let m = models_of(&parse_formula(text, env).unwrap(), env);
        let out = minimal_dnf(m.models(), env);
        assert_eq!(&models_of(&out, env), &m, "{text}");
        out.display(env).to_string()
    }

    #[test]
    fn renders_small_classes() {
        let env = AtomEnv::standard(3).unwrap();
        assert_eq!(roundtrip("a & !a", &env), "false");
        assert_eq!(roundtrip("a | !a", &env), "true");
        assert_eq!(roundtrip("a -> b", &env), "!a | b");
        assert_eq!(roundtrip("a & (b | !b)", &env), "a");
        assert_eq!(roundtrip("(a -> b) & (b -> c) & a", &env), "a & b & c");
        assert_eq!(roundtrip("a & b | a & !b & c", &env), "a & b | a & c");
    }

    #[test]
    fn every_three_atom_class_roundtrips() {
        let env = AtomEnv::standard(3).unwrap();
        for bits in 0..256u64 {
            let m = ModelSet::from_bits(8, bits);
            let f = minimal_dnf(&m, &env);
            assert_eq!(models_of(&f, &env).models(), &m);
        }
    }

    #[test]
    fn xor_needs_all_minterms() {
        let env = AtomEnv::standard(2).unwrap();
        assert_eq!(roundtrip("a & !b | !a & b", &env), "a & !b | !a & b");
    }

    #[test]
    fn greedy_path_on_wide_env() {
        let env = AtomEnv::standard(12).unwrap();
        let f = parse_formula("(a | b) & !l", &env).unwrap();
        let m = models_of(&f, &env);
        let out = minimal_dnf(m.models(), &env);
        assert_eq!(models_of(&out, &env), m);
        assert_eq!(out.display(&env).to_string(), "a & !l | b & !l");
    }
}
