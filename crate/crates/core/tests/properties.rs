//! Seed-driven property tests of the verification layer.

use curvereg::verify::*;
use curvereg::PrimeField;
use proptest::prelude::*;

fn relation() -> impl Strategy<Value = Relation> {
    prop_oneof![
        Just(Relation::Eq),
        Just(Relation::Ne),
        Just(Relation::Le),
        Just(Relation::Lt),
        Just(Relation::Ge),
        Just(Relation::Gt),
        Just(Relation::Implies),
        Just(Relation::Iff),
    ]
}

fn oracle(rel: Relation, l: i64, r: i64) -> bool {
    match rel {
        Relation::Eq => l == r,
        Relation::Ne => l != r,
        Relation::Le => l <= r,
        Relation::Lt => l < r,
        Relation::Ge => l >= r,
        Relation::Gt => l > r,
        Relation::Implies => !(l != 0) || r != 0,
        Relation::Iff => (l != 0) == (r != 0),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn relations_agree_with_integer_logic(rel in relation(), l in -3i64..4, r in -3i64..4) {
        prop_assert_eq!(rel.holds(l, r), oracle(rel, l, r));
    }

    #[test]
    fn verdict_is_conjunction(asserts in proptest::collection::vec((relation(), 0i64..3, 0i64..3), 0..6), applicable: bool) {
        let assertions: Vec<Assertion> = asserts.iter().enumerate()
            .map(|(k, &(rel, lhs, rhs))| Assertion { name: format!("a{k}"), lhs, rel, rhs })
            .collect();
        let all = assertions.iter().all(|a| oracle(a.rel, a.lhs, a.rhs));
        let r = CheckReport {
            check: "p".into(), instance: "p".into(), seed: None, inputs: Default::default(), quantities: Default::default(),
            assertions, applicable, notes: vec![], verdict: Verdict::Pass,
        };
        let want = if !applicable { Verdict::Inapplicable } else if all { Verdict::Pass } else { Verdict::Fail };
        prop_assert_eq!(r.derive_verdict(), want);
    }

    #[test]
    fn intadd_holds_on_random_pairs(seed: u64) {
        let (x, y) = finite_pair(PrimeField::default(), seed).unwrap();
        let r = check_intadd("prop", &x, &y).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn trees_have_regularity_at_most_two(seed: u64) {
        let c = random_tree(PrimeField::default(), seed).unwrap();
        let r = check_mincur("prop", &c).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Pass);
        prop_assert_eq!(r.int("xi"), Some(2));
    }

    #[test]
    fn regularity_matches_saturation_formula(seed: u64) {
        let i = nonsaturated_ideal(PrimeField::default(), seed).unwrap();
        let r = check_regularity_from_saturation("prop", &i).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn jobs_replay_identically(seed in 0u64..1000) {
        let f = PrimeField::default();
        for job in suite_jobs("intadd", seed).unwrap().iter().take(2) {
            prop_assert_eq!(run_job(&f, job), run_job(&f, job));
        }
    }
}
