use std::cmp::Ordering;

use proptest::prelude::*;

use ratinf::correspondence::{check_rules, relation_from_ordering, RuleId, Variant};
use ratinf::defaults::{parse_base, render_base};
use ratinf::logic::{entails, minimal_dnf, models_of, parse_formula, AtomEnv, Context, Formula, ModelSet};
use ratinf::oracle::{random_base, random_chain, Seed};
use ratinf::orderings::compare;
use ratinf::ranked::{chain_from_ordering, ordering_from_chain, relation_from_chain};

const N: usize = 3;

fn env() -> AtomEnv {
    AtomEnv::standard(N).unwrap()
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![(0..N).prop_map(Formula::atom), Just(Formula::Top), Just(Formula::Bot),];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::and(f, g)),
            (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::or(f, g)),
            (inner.clone(), inner).prop_map(|(f, g)| Formula::imp(f, g)),
        ]
    })
}

fn context() -> impl Strategy<Value = Context> {
    (0u64..256).prop_map(|bits| Context::from_models(ModelSet::from_bits(1 << N, bits)))
}

proptest! {
    #[test]
    fn models_agree_with_eval(f in formula()) {
        let m = models_of(&f, &env());
        for v in 0..1 << N {
            prop_assert_eq!(m.models().contains(v), f.eval(v, N));
        }
    }

    #[test]
    fn display_parses_back_to_same_models(f in formula()) {
        let env = env();
        let text = f.display(&env).to_string();
        let back = parse_formula(&text, &env).unwrap();
        prop_assert_eq!(models_of(&back, &env), models_of(&f, &env));
        prop_assert_eq!(back.display(&env).to_string(), text);
    }

    #[test]
    fn minimal_dnf_preserves_models(f in formula()) {
        let env = env();
        let m = models_of(&f, &env);
        prop_assert_eq!(models_of(&minimal_dnf(m.models(), &env), &env), m);
    }

    #[test]
    fn deduction_theorem(ctx in context(), a in formula(), b in formula()) {
        let env = env();
        prop_assert_eq!(
            entails(&ctx, std::slice::from_ref(&a), &b, &env),
            entails(&ctx, &[], &Formula::imp(a, b), &env)
        );
    }

    #[test]
    fn disjunction_in_premises(ctx in context(), a in formula(), b in formula(), c in formula()) {
        let env = env();
        prop_assert_eq!(
            entails(&ctx, &[Formula::or(a.clone(), b.clone())], &c, &env),
            entails(&ctx, &[a], &c, &env) && entails(&ctx, &[b], &c, &env)
        );
    }

    #[test]
    fn equivalent_formulas_compare_equal(seed in any::<u64>(), k in 1usize..=4, f in formula()) {
        let env = env();
        let ord = ordering_from_chain(&random_chain(&env, k, Seed(seed)).unwrap()).unwrap();
        let g = minimal_dnf(models_of(&f, &env).models(), &env);
        prop_assert_eq!(compare(&ord, &f, &g).unwrap(), Ordering::Equal);
        prop_assert_eq!(compare(&ord, &Formula::and(f.clone(), Formula::Top), &f).unwrap(), Ordering::Equal);
    }

    #[test]
    fn chain_ordering_is_rational_and_round_trips(seed in any::<u64>(), k in 1usize..=4) {
        let env = env();
        let chain = random_chain(&env, k, Seed(seed)).unwrap();
        let ord = ordering_from_chain(&chain).unwrap();
        prop_assert!(ord.is_rational());
        if ord.height() > 1 {
            let back = ordering_from_chain(&chain_from_ordering(&ord).unwrap()).unwrap();
            prop_assert_eq!(back.levels(), ord.levels());
        }
    }

    #[test]
    fn chain_relation_is_rational_at_two_atoms(seed in any::<u64>(), k in 1usize..=4) {
        let env = AtomEnv::standard(2).unwrap();
        let chain = random_chain(&env, k, Seed(seed)).unwrap();
        let full = Context::full(&env);
        let rel = relation_from_chain(&chain, &full).unwrap();
        for check in check_rules(&rel, &RuleId::RATIONAL) {
            prop_assert!(check.holds(), "{} violated", check.rule);
        }
        let via_ord = relation_from_ordering(&ordering_from_chain(&chain).unwrap(), &full, Variant::Bold).unwrap();
        prop_assert_eq!(via_ord, rel);
    }

    #[test]
    fn base_file_round_trip(seed in any::<u64>(), m in 1usize..=4) {
        let env = env();
        let base = random_base(&env, m, Seed(seed)).unwrap();
        let back = parse_base(&render_base(&base)).unwrap();
        prop_assert_eq!(back.len(), base.len());
        for i in 1..=base.len() {
            prop_assert_eq!(back.level_models(i), base.level_models(i));
        }
    }
}
