//! Random generators and brute-force reference implementations.
//!
//! Random orderings are only ever produced through random chains, which
//! are rational by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::correspondence::{
    check_rules, ordering_from_relation, relation_from_ordering, InferenceRelation, RuleId, Variant,
};
use crate::defaults::DefaultBase;
use crate::error::{Error, Result};
use crate::logic::{minimal_dnf, render_models, AtomEnv, ClassId, ClassSpace, Context, Formula, ModelSet, Theory};
use crate::orderings::RationalOrdering;
use crate::ranked::{chain_from_ordering, ordering_from_chain, relation_from_chain, RankedChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// `count` independent seeds derived from this one.
    pub fn split(self, count: usize) -> Vec<Seed> {
        let mut rng = self.rng();
        (0..count).map(|_| Seed(rng.gen())).collect()
    }
}

/// Constraint on the bottom theory of a random chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChainShape {
    /// Any consistent bottom theory.
    #[default]
    Any,
    /// Bottom theory `Cn(∅)`.
    TautologicalBottom,
    /// Consistent bottom theory with at least one non-tautology.
    NonTrivialBottom,
}

fn random_subset(rng: &mut ChaCha8Rng, of: &ModelSet, p: f64) -> ModelSet {
    ModelSet::from_indices(of.universe(), of.iter().filter(|_| rng.gen_bool(p)))
}

pub fn random_chain(env: &AtomEnv, k: usize, seed: Seed) -> Result<RankedChain> {
    random_chain_with(env, k, seed, ChainShape::Any)
}

/// Chain of `k` theories whose model sets weakly decrease from a nonempty
/// first set.
pub fn random_chain_with(env: &AtomEnv, k: usize, seed: Seed, shape: ChainShape) -> Result<RankedChain> {
    if k == 0 {
        return Err(Error::InvalidChain("a chain needs at least one theory".into()));
    }
    let vals = env.valuation_count();
    if shape == ChainShape::NonTrivialBottom && vals < 2 {
        return Err(Error::InvalidChain("no non-trivial consistent theory exists".into()));
    }
    let mut rng = seed.rng();
    let full = ModelSet::full(vals);
    let mut w = match shape {
        ChainShape::TautologicalBottom => full.clone(),
        ChainShape::Any | ChainShape::NonTrivialBottom => {
            let mut w = random_subset(&mut rng, &full, 0.6);
            w.insert(rng.gen_range(0..vals));
            if shape == ChainShape::NonTrivialBottom && w.is_full() {
                w.remove(rng.gen_range(0..vals));
            }
            w
        }
    };
    let mut theories = Vec::with_capacity(k);
    for _ in 0..k {
        theories.push(Theory::from_models(w.clone()));
        let p = [0.0, 0.25, 0.5][rng.gen_range(0..3)];
        w = &w - &random_subset(&mut rng, &w, p);
    }
    RankedChain::new(env, theories)
}

/// Random base of `m` levels, each holding up to two formulas.
pub fn random_base(env: &AtomEnv, m: usize, seed: Seed) -> Result<DefaultBase> {
    let mut rng = seed.rng();
    let full = ModelSet::full(env.valuation_count());
    let levels = (0..m)
        .map(|_| {
            (0..rng.gen_range(0..=2))
                .map(|_| minimal_dnf(&random_subset(&mut rng, &full, 0.7), env))
                .collect::<Vec<Formula>>()
        })
        .collect();
    DefaultBase::new(env, levels)
}

/// Bold (C) with the existential over `β` taken literally.
pub fn brute_relation_from_ordering(ord: &RationalOrdering, ctx: &Context) -> Result<InferenceRelation> {
    if ord.env().len() > 2 {
        return Err(Error::LimitExceeded {
            what: "atoms for the brute-force (C) oracle",
            limit: 2,
            actual: ord.env().len(),
        });
    }
    let s = ord.space();
    let c = s.context_id(ctx)?;
    InferenceRelation::from_fn(ord.env(), ctx, |a, g| {
        let neg = ord.level(s.not(a));
        s.ids().all(|b| ord.level(b) <= neg) || s.ids().any(|b| s.subset(c & a & b, g) && neg < ord.level(b))
    })
}

/// The two orderings of the `{{⊤}, {⊤, a}}` versus `{{a}}` example.
pub fn gm_example_fixture(env: &AtomEnv) -> Result<(RationalOrdering, RationalOrdering)> {
    let a = env.index_of("a").ok_or_else(|| Error::MissingAtom("a".into()))?;
    let a = Formula::atom(a);
    let d1 = RankedChain::from_axioms(env, vec![vec![Formula::Top], vec![Formula::Top, a.clone()]])?;
    let d2 = RankedChain::from_axioms(env, vec![vec![a]])?;
    Ok((ordering_from_chain(&d1)?, ordering_from_chain(&d2)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub check: String,
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Trials with no failure.
    pub fn passed(&self) -> usize {
        let mut failed: Vec<usize> = self.failures.iter().map(|f| f.trial).collect();
        failed.sort_unstable();
        failed.dedup();
        self.trials - failed.len().min(self.trials)
    }

    /// One `trial<TAB>seed<TAB>check<TAB>witness` line per failure.
    pub fn render(&self) -> String {
        self.failures
            .iter()
            .map(|f| format!("{}\t{}\t{}\t{}\n", f.trial, f.seed, f.check, f.witness))
            .collect()
    }

    pub fn record(&mut self, trial: usize, seed: Seed, problems: Vec<(String, String)>) {
        self.failures
            .extend(problems.into_iter().map(|(check, witness)| Failure {
                trial,
                seed: seed.0,
                check,
                witness,
            }));
    }
}

fn pair(rel: &InferenceRelation, a: ClassId, b: ClassId) -> String {
    let s = rel.space();
    format!(
        "{} |~ {}",
        render_models(s.class(a).models(), rel.env()),
        render_models(s.class(b).models(), rel.env())
    )
}

fn compare_relations(check: &str, want: &InferenceRelation, got: &InferenceRelation) -> Option<(String, String)> {
    want.first_diff(got).map(|(a, b)| {
        let w = format!(
            "{} (expected {}, {} entries differ)",
            pair(want, a, b),
            want.holds(a, b),
            want.diff_count(got)
        );
        (check.to_string(), w)
    })
}

fn compare_orderings(check: &str, want: &RationalOrdering, got: &RationalOrdering) -> Option<(String, String)> {
    let s = want.space();
    s.ids().find(|&id| want.level(id) != got.level(id)).map(|id| {
        (
            check.to_string(),
            format!(
                "level of {}: expected {}, got {}",
                render_models(s.class(id).models(), want.env()),
                want.level(id),
                got.level(id)
            ),
        )
    })
}

/// Rational and derived rules plus the `C(O(rel)) = rel` round trip.
pub fn check_relation(rel: &InferenceRelation) -> Vec<(String, String)> {
    let mut out = Vec::new();
    let rules: Vec<RuleId> = RuleId::RATIONAL.iter().chain(&RuleId::DERIVED).copied().collect();
    for check in check_rules(rel, &rules) {
        if let Some(cx) = &check.first {
            out.push((
                format!("rule:{}", check.rule),
                format!(
                    "{} ({} violations)",
                    cx.render(rel.env()).replace('\t', " ; "),
                    check.violations
                ),
            ));
        }
    }
    let ctx = rel.ctx();
    match ordering_from_relation(rel, Variant::Bold).and_then(|o| relation_from_ordering(&o, &ctx, Variant::Bold)) {
        Ok(back) => out.extend(compare_relations("C(O(rel))=rel", rel, &back)),
        Err(e) => out.push(("C(O(rel))=rel".into(), e.to_string())),
    }
    out
}

fn round_trips(chain: &RankedChain) -> Result<Vec<(String, String)>> {
    let env = chain.env();
    let full = Context::full(env);
    let rel = relation_from_chain(chain, &full)?;
    let ord = ordering_from_chain(chain)?;
    let mut out = Vec::new();
    let c_ord = relation_from_ordering(&ord, &full, Variant::Bold)?;
    match ordering_from_relation(&c_ord, Variant::Bold) {
        Ok(back) => out.extend(compare_orderings("O(C(ord))=ord", &ord, &back)),
        Err(e) => out.push(("O(C(ord))=ord".into(), e.to_string())),
    }
    match ordering_from_relation(&rel, Variant::Bold).and_then(|o| relation_from_ordering(&o, &full, Variant::Bold)) {
        Ok(back) => out.extend(compare_relations("C(O(rel))=rel", &rel, &back)),
        Err(e) => out.push(("C(O(rel))=rel".into(), e.to_string())),
    }
    match chain_from_ordering(&ord).and_then(|c| ordering_from_chain(&c)) {
        Ok(back) => out.extend(compare_orderings("ord(chain(ord))=ord", &ord, &back)),
        Err(e) => out.push(("ord(chain(ord))=ord".into(), e.to_string())),
    }
    Ok(out)
}

fn full_checks(chain: &RankedChain) -> Result<Vec<(String, String)>> {
    let env = chain.env();
    let full = Context::full(env);
    let rel = relation_from_chain(chain, &full)?;
    let ord = ordering_from_chain(chain)?;
    let mut out = check_relation(&rel);
    out.retain(|(check, _)| check != "C(O(rel))=rel");
    if !ord.is_rational() {
        out.push(("ordering-rational".into(), ord.dump()));
    }
    out.extend(round_trips(chain)?);
    out.extend(compare_relations(
        "C(ord(chain))=rel(chain)",
        &rel,
        &relation_from_ordering(&ord, &full, Variant::Bold)?,
    ));
    if env.len() <= 2 {
        out.extend(compare_relations(
            "brute-C=fast-C",
            &brute_relation_from_ordering(&ord, &full)?,
            &relation_from_ordering(&ord, &full, Variant::Bold)?,
        ));
    }
    Ok(out)
}

fn gm_fixture_check(env: &AtomEnv) -> Result<Vec<(String, String)>> {
    let (o1, o2) = gm_example_fixture(env)?;
    let full = Context::full(env);
    let mut out = Vec::new();
    if o1 == o2 {
        out.push(("gm-fixture-distinct".into(), o1.dump()));
    }
    if !o1.is_rational() || !o2.is_rational() {
        out.push(("gm-fixture-rational".into(), String::new()));
    }
    out.extend(compare_relations(
        "gm-fixture-same-relation",
        &relation_from_ordering(&o1, &full, Variant::Gm)?,
        &relation_from_ordering(&o2, &full, Variant::Gm)?,
    ));
    Ok(out)
}

fn run_trials(
    env: &AtomEnv,
    trials: usize,
    seed: Seed,
    check: impl Fn(&RankedChain) -> Result<Vec<(String, String)>> + Sync,
) -> Result<Report> {
    ClassSpace::new(env)?;
    let seeds = seed.split(trials);
    let results: Vec<Vec<(String, String)>> = seeds
        .par_iter()
        .map(|&s| {
            let k = s.rng().gen_range(1..=4);
            match random_chain(env, k, s) {
                Ok(chain) => check(&chain).unwrap_or_else(|e| vec![("error".into(), e.to_string())]),
                Err(e) => vec![("generator".into(), e.to_string())],
            }
        })
        .collect();
    let mut report = Report {
        trials,
        failures: Vec::new(),
    };
    for (t, (s, problems)) in seeds.into_iter().zip(results).enumerate() {
        report.record(t, s, problems);
    }
    Ok(report)
}

/// Runs every representation check on `trials` random chains.
pub fn verify_theorems(env: &AtomEnv, trials: usize, seed: Seed) -> Result<Report> {
    let mut report = run_trials(env, trials, seed, full_checks)?;
    if trials > 0 && env.index_of("a").is_some() {
        report.record(0, seed, gm_fixture_check(env)?);
    }
    Ok(report)
}

/// Only the three round trips, on `trials` random chains.
pub fn verify_round_trips(env: &AtomEnv, trials: usize, seed: Seed) -> Result<Report> {
    run_trials(env, trials, seed, round_trips)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_are_deterministic_and_valid() {
        let env = AtomEnv::standard(3).unwrap();
        for s in 0..50 {
            for k in 1..=4 {
                let a = random_chain(&env, k, Seed(s)).unwrap();
                assert_eq!(a, random_chain(&env, k, Seed(s)).unwrap());
                assert_eq!(a.len(), k);
                assert!(a.theories()[0].is_consistent());
            }
        }
        assert!(random_chain(&env, 0, Seed(1)).is_err());
    }

    #[test]
    fn shapes() {
        let env = AtomEnv::standard(2).unwrap();
        for s in 0..100 {
            let t = random_chain_with(&env, 3, Seed(s), ChainShape::TautologicalBottom).unwrap();
            assert!(t.theories()[0].models().is_full());
            let n = random_chain_with(&env, 3, Seed(s), ChainShape::NonTrivialBottom).unwrap();
            let bottom = n.theories()[0].models();
            assert!(!bottom.is_empty() && !bottom.is_full());
        }
    }

    #[test]
    fn brute_matches_fast_on_example() {
        let env = AtomEnv::standard(1).unwrap();
        let ord = RationalOrdering::from_levels(&env, vec![0, 0, 1, 2]).unwrap();
        let full = Context::full(&env);
        assert_eq!(
            brute_relation_from_ordering(&ord, &full).unwrap(),
            relation_from_ordering(&ord, &full, Variant::Bold).unwrap()
        );
        let env3 = AtomEnv::standard(3).unwrap();
        let ord3 = ordering_from_chain(&random_chain(&env3, 2, Seed(3)).unwrap()).unwrap();
        assert!(matches!(
            brute_relation_from_ordering(&ord3, &Context::full(&env3)),
            Err(Error::LimitExceeded { limit: 2, .. })
        ));
    }

    #[test]
    fn gm_fixture() {
        let env = AtomEnv::standard(1).unwrap();
        let (o1, o2) = gm_example_fixture(&env).unwrap();
        assert_ne!(o1, o2);
        assert!(o1.is_rational() && o2.is_rational());
        assert_eq!(o1.levels(), [0, 0, 1, 2]);
        assert_eq!(o2.levels(), [0, 0, 1, 1]);
        assert!(gm_fixture_check(&env).unwrap().is_empty());
        assert!(matches!(
            gm_example_fixture(&AtomEnv::new(["p"]).unwrap()),
            Err(Error::MissingAtom(_))
        ));
    }

    #[test]
    fn small_verification_run() {
        let env = AtomEnv::standard(2).unwrap();
        let report = verify_theorems(&env, 40, Seed(11)).unwrap();
        assert!(report.is_ok(), "{}", report.render());
        assert_eq!(report.passed(), 40);
        assert_eq!(verify_theorems(&env, 0, Seed(11)).unwrap(), Report::default());
    }

    #[test]
    fn corrupted_relation_is_reported() {
        let env = AtomEnv::standard(2).unwrap();
        let chain = random_chain(&env, 3, Seed(5)).unwrap();
        let mut rel = relation_from_chain(&chain, &Context::full(&env)).unwrap();
        rel.set(15, 1, !rel.holds(15, 1));
        let problems = check_relation(&rel);
        assert!(!problems.is_empty());
        let mut report = Report {
            trials: 1,
            ..Report::default()
        };
        report.record(0, Seed(5), problems);
        let line = report.render();
        assert!(line.starts_with("0\t5\t"));
        assert_eq!(line.lines().next().unwrap().split('\t').count(), 4);
        assert_eq!(report.passed(), 0);
    }

    #[test]
    fn random_bases_respect_shape() {
        let env = AtomEnv::standard(3).unwrap();
        for s in 0..20 {
            let b = random_base(&env, 4, Seed(s)).unwrap();
            assert_eq!(b.len(), 4);
            assert!(b.levels().iter().all(|l| l.len() <= 2));
        }
    }
}
