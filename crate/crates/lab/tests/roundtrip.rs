//! Parse → serialize → parse is the identity on configuration documents.

use num_bigint::BigInt;
use proptest::prelude::*;

use dioph_lab::config::{GeneralDoc, JsonInt, ManifoldDoc, PointDoc, RationalDoc, VariableDoc};

fn json_int() -> impl Strategy<Value = JsonInt> {
    prop_oneof![
        any::<i64>().prop_map(|v| JsonInt(BigInt::from(v))),
        "[1-9][0-9]{15,40}".prop_map(|s| JsonInt(s.parse().unwrap())),
    ]
}

fn rational_doc() -> impl Strategy<Value = RationalDoc> {
    (json_int(), json_int()).prop_map(|(num, den)| RationalDoc { num, den })
}

fn variable_doc() -> impl Strategy<Value = VariableDoc> {
    (
        "[a-z][a-z0-9]{0,6}",
        proptest::collection::vec(proptest::collection::vec(json_int(), 1..6), 1..4),
    )
        .prop_map(|(name, polys)| VariableDoc { name, polys })
}

fn manifold_doc() -> impl Strategy<Value = ManifoldDoc> {
    prop_oneof![
        proptest::collection::vec(variable_doc(), 1..4)
            .prop_map(|variables| ManifoldDoc::Product { variables }),
        (1u32..5, 1u32..9).prop_map(|(s, d_max)| ManifoldDoc::General {
            general: GeneralDoc { s, d_max }
        }),
    ]
}

fn point_doc() -> impl Strategy<Value = PointDoc> {
    prop_oneof![
        proptest::collection::vec(rational_doc(), 1..4)
            .prop_map(|values| PointDoc::Rational { values }),
        (
            2u32..12,
            rational_doc(),
            proptest::option::of(2usize..8),
            proptest::option::of(proptest::collection::vec(1u32..2, 1..4)),
        )
            .prop_map(|(base, tau, terms, digits)| PointDoc::Liouville {
                base,
                tau,
                terms,
                digits,
            }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn manifold_documents_roundtrip(doc in manifold_doc()) {
        let text = serde_json::to_string(&doc).unwrap();
        let back: ManifoldDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc, back);
    }

    #[test]
    fn point_documents_roundtrip(doc in point_doc()) {
        let text = serde_json::to_string(&doc).unwrap();
        let back: PointDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc, back);
    }
}
