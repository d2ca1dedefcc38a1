use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ultra_lpa_core::dsl::{parse_doc, parse_expr, parse_ultragraph, to_text, ExprAst};
use ultra_lpa_core::model::{EdgeDecl, UltragraphDoc};
use ultra_lpa_core::random::{random_element, random_ultragraph};
use ultra_lpa_core::{fixtures, LeavittAlgebra, Scalar, Ultragraph};

fn ident() -> impl Strategy<Value = String> {
    "[a-z][a-z0-9_]{0,5}"
}

fn doc() -> impl Strategy<Value = UltragraphDoc> {
    (ident(), prop::collection::vec(ident(), 0..6), prop::collection::vec((ident(), ident(), prop::collection::vec(ident(), 1..4)), 0..6))
        .prop_map(|(name, vertices, edges)| UltragraphDoc {
            name,
            vertices,
            edges: edges.into_iter().map(|(name, source, range)| EdgeDecl { name, source, range }).collect(),
        })
}

fn expr(ug: Ultragraph) -> impl Strategy<Value = ExprAst> {
    let n = ug.vertex_count();
    let m = ug.edge_count();
    let leaf = prop_oneof![
        (-5i64..6, 1i64..4).prop_map(|(a, b)| ExprAst::Scalar(Scalar::new(a.into(), b.into()))),
        (1u64..(1 << n)).prop_map(|b| ExprAst::P(ultra_lpa_core::VertexSet::from_bits(b))),
        (0..m).prop_map(|e| ExprAst::S(ultra_lpa_core::EdgeId(e))),
        (0..m).prop_map(|e| ExprAst::SStar(ultra_lpa_core::EdgeId(e))),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprAst::Mul(Box::new(a), Box::new(b))),
            inner.prop_map(|a| ExprAst::Neg(Box::new(a))),
        ]
    })
}

proptest! {
    #[test]
    fn documents_round_trip(d in doc()) {
        prop_assert_eq!(parse_doc(&to_text(&d)).unwrap(), d);
    }

    #[test]
    fn expressions_round_trip_through_their_printed_form(x in expr(fixtures::ug_mix())) {
        let ug = fixtures::ug_mix();
        prop_assert_eq!(parse_expr(&x.display(&ug), &ug).unwrap(), x);
    }

    #[test]
    fn element_printing_reparses_to_an_equal_element(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ug = random_ultragraph(&mut rng, 4, 5);
        let alg = LeavittAlgebra::new(&ug);
        let x = alg.canonicalize(&random_element(&mut rng, &ug, 4, 3));
        let back = parse_expr(&x.display(&ug), &ug).unwrap().eval(&alg);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn random_ultragraphs_round_trip(seed in any::<u64>()) {
        let ug = random_ultragraph(&mut ChaCha8Rng::seed_from_u64(seed), 6, 6);
        let again = parse_ultragraph(&to_text(&ug.to_doc())).unwrap();
        prop_assert_eq!(again.to_doc(), ug.to_doc());
    }
}

#[test]
fn bundled_fixture_sources_parse() {
    for src in [fixtures::UG_LOOP, fixtures::UG_FAN, fixtures::UG_SPLIT, fixtures::UG_POINT] {
        assert!(parse_ultragraph(src).is_ok());
    }
}
