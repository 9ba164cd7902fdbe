//! Spec documents survive serialization unchanged.

use curvereg::curves::{Budget, TreeSpec, TreeStep};
use curvereg_cli::spec::*;
use proptest::prelude::*;

fn form() -> impl Strategy<Value = String> {
    (0usize..4, -3i64..4).prop_map(|(i, c)| format!("x{i} + {c}*x{}", (i + 1) % 4))
}

fn component() -> impl Strategy<Value = ComponentSpec> {
    prop_oneof![
        proptest::collection::vec(form(), 2).prop_map(ComponentSpec::Linear),
        (form(), form()).prop_map(|(a, b)| ComponentSpec::PlaneCurve(PlaneCurveSpec { subspace: vec![a], form: format!("({b})^2") })),
        (1usize..4, -5i64..5).prop_map(|(d, c)| ComponentSpec::Rnc(RncSpec {
            degree: d,
            rows: (0..4).map(|i| (0..=d).map(|k| if k == i { 1 } else { c }).collect()).collect(),
        })),
        (1usize..3, any::<u64>()).prop_map(|(d, s)| ComponentSpec::Named(NamedSpec::Tree(TreeSpec {
            steps: vec![TreeStep { degree: d, attach: None }, TreeStep { degree: 1, attach: Some((0, [1, 2])) }],
            seed: Some(s),
        }))),
        (any::<u64>(), 1usize..4).prop_map(|(seed, k)| ComponentSpec::Named(NamedSpec::Random(RandomSpec {
            seed,
            budget: Budget { max_components: k, max_degree: 4, max_ambient: 3 },
        }))),
    ]
}

fn document() -> impl Strategy<Value = CurveSpecDocument> {
    let field = prop_oneof![Just("rational"), Just("101"), Just("32003")].prop_map(|s| s.parse::<FieldSpec>().unwrap());
    (field, proptest::collection::vec(component(), 1..4)).prop_map(|(field, components)| CurveSpecDocument { field, ambient: 3, components })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn documents_round_trip(doc in document()) {
        let text = doc.to_json();
        prop_assert_eq!(parse_spec(&text).unwrap(), doc);
    }
}

#[test]
fn sample_specs_round_trip() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/specs");
    for name in ["no_secant4.json", "twisted.json", "mixed.json"] {
        let doc = parse_spec(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap();
        assert_eq!(parse_spec(&doc.to_json()).unwrap(), doc, "{name}");
    }
}
