//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ultra_lpa_core::algebra::{CycleCorner, LaurentMatrix, DEFAULT_LAMBDA_CAP};
use ultra_lpa_core::classify::{is_purely_infinite_simple, is_von_neumann_regular, trichotomy, Caps, Classification};
use ultra_lpa_core::gf::{matricial_dimension, matricial_structure, ultragraph_is_acyclic, AcyclicityStrategy, MatricialMethod};
use ultra_lpa_core::ideals::{is_graded_simple, GradedSimplicityStrategy, DEFAULT_HS_CAP};
use ultra_lpa_core::paths::{enumerate_cycles, has_exit};
use ultra_lpa_core::random::{random_element, random_ultragraph};
use ultra_lpa_core::{fixtures, Element, Error, LeavittAlgebra, Ultragraph};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, || format!("{what} took {took:.2?}, limit {limit:?}"))
}

fn random_corpus() -> Vec<Ultragraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    (0..500).map(|_| random_ultragraph(&mut rng, 6, 6)).collect()
}

fn criterion_1() -> Outcome {
    let lambda = |ug: &Ultragraph| match trichotomy(ug, Caps::default()) {
        Ok(Classification::MatrixLaurent { lambda, .. }) => Some(lambda.len()),
        _ => None,
    };
    let class = |ug: &Ultragraph| trichotomy(ug, Caps::default()).map(|c| c.class_name());
    let timed = |name: &str, f: &dyn Fn() -> Result<(), String>| -> Result<(), String> {
        let start = Instant::now();
        f().map_err(|e| format!("{name}: {e}"))?;
        within(start, Duration::from_secs(1), name)
    };

    timed("UG-FAN", &|| {
        let ug = fixtures::ug_fan();
        let blocks = matricial_structure(&ug, MatricialMethod::DirectSinkCount).map_err(|e| e.to_string())?;
        check(blocks == [2, 2], || format!("blocks {blocks:?}"))?;
        check(is_von_neumann_regular(&ug) == Ok(true), || "not regular".into())?;
        check(class(&ug) == Ok("not_graded_simple"), || format!("trichotomy {:?}", class(&ug)))
    })?;
    timed("UG-CHAIN", &|| {
        let ug = fixtures::ug_chain();
        check(
            trichotomy(&ug, Caps::default()) == Ok(Classification::LocallyMatricial { blocks: vec![2] }),
            || format!("{:?}", trichotomy(&ug, Caps::default())),
        )
    })?;
    timed("UG-LOOP", &|| {
        let ug = fixtures::ug_loop();
        check(lambda(&ug) == Some(1), || format!("{:?}", class(&ug)))
    })?;
    timed("UG-TAIL", &|| {
        let ug = fixtures::ug_tail();
        check(lambda(&ug) == Some(2), || format!("{:?}", class(&ug)))
    })?;
    for (name, ug) in [("UG-ROSE2", fixtures::ug_rose2()), ("UG-MIX", fixtures::ug_mix())] {
        timed(name, &|| check(class(&ug) == Ok("purely_infinite_simple"), || format!("{:?}", class(&ug))))?;
    }
    timed("UG-SINKCYCLE", &|| {
        let ug = fixtures::ug_sinkcycle();
        check(class(&ug) == Ok("not_graded_simple"), || format!("{:?}", class(&ug)))
    })?;
    Ok("FAN blocks [2,2] (regular, not graded simple), CHAIN [2], LOOP |Λ|=1, TAIL |Λ|=2, ROSE2/MIX PIS, SINKCYCLE not graded simple".into())
}

fn criterion_2(corpus: &[Ultragraph]) -> Outcome {
    let start = Instant::now();
    let mut acyclic = 0;
    for (i, ug) in corpus.iter().enumerate() {
        let d = ultragraph_is_acyclic(ug, AcyclicityStrategy::Direct).map_err(|e| e.to_string())?;
        let g = ultragraph_is_acyclic(ug, AcyclicityStrategy::ViaGF).map_err(|e| e.to_string())?;
        check(d == g, || format!("instance {i}: acyclic direct={d} via G_F={g}"))?;

        let e = is_graded_simple(ug, GradedSimplicityStrategy::Enumerate, DEFAULT_HS_CAP).map_err(|e| e.to_string())?;
        let c = is_graded_simple(ug, GradedSimplicityStrategy::Criterion, DEFAULT_HS_CAP).map_err(|e| e.to_string())?;
        check(e.is_simple() == c.is_simple(), || format!("instance {i}: graded simple enumerate={} criterion={}", e.is_simple(), c.is_simple()))?;

        if d {
            acyclic += 1;
            let a = matricial_structure(ug, MatricialMethod::DirectSinkCount).map_err(|e| e.to_string())?;
            let b = matricial_structure(ug, MatricialMethod::ViaGF).map_err(|e| e.to_string())?;
            check(a == b, || format!("instance {i}: blocks direct={a:?} via G_F={b:?}"))?;
        }
    }
    within(start, Duration::from_secs(60), "criterion 2")?;
    Ok(format!("{} instances ({acyclic} acyclic), 0 disagreements in {:.2?}", corpus.len(), start.elapsed()))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut graphs: Vec<(String, Ultragraph)> =
        fixtures::all().into_iter().map(|(n, ug)| (n.to_string(), ug)).collect();
    graphs.extend((0..100).map(|i| (format!("random #{i}"), random_ultragraph(&mut rng, 6, 6))));
    let mut checked = 0;
    for (name, ug) in &graphs {
        let report = LeavittAlgebra::new(ug).check_defining_relations();
        checked += report.checked;
        check(report.passed(), || format!("{name}: {:?}", report.failures.first()))?;
    }
    Ok(format!("{} ultragraphs, {checked} relation instances, 0 failures", graphs.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut count = 0;
    for (name, ug) in fixtures::all() {
        let alg = LeavittAlgebra::new(&ug);
        for i in 0..200 {
            let fail = |what: &str| format!("{name} element {i}: {what}");
            let raw_x = random_element(&mut rng, &ug, 3, 2);
            let raw_y = random_element(&mut rng, &ug, 3, 2);
            let z = alg.canonicalize(&random_element(&mut rng, &ug, 2, 2));
            let (x, y) = (alg.canonicalize(&raw_x), alg.canonicalize(&raw_y));

            let xy = alg.mul(&x, &y);
            check(alg.equals(&xy.star(), &alg.mul(&y.star(), &x.star())), || fail("(xy)* ≠ y* x*"))?;
            check(alg.equals(&x.star().star(), &x), || fail("x** ≠ x"))?;

            for (m, xm) in x.degree_components() {
                for (n, yn) in y.degree_components() {
                    let p = alg.mul(&xm, &yn);
                    check(p.terms().all(|(t, _)| t.degree() == m + n), || fail("degree not additive"))?;
                }
            }

            for (m, _) in x.terms() {
                let m = Element::from_monomial(m.clone());
                check(alg.equals(&alg.product([&m, &m.star(), &m]), &m), || fail("m m* m ≠ m"))?;
            }

            check(
                alg.equals(&alg.mul(&x, &alg.mul(&y, &z)), &alg.mul(&xy, &z)),
                || fail("not associative"),
            )?;

            check(alg.canonicalize(&x) == x, || fail("canonicalize not idempotent"))?;
            let raw = alg.mul_raw(&raw_x, &raw_y) + raw_x.clone();
            let reference = alg.canonicalize(&raw);
            for _ in 0..100 {
                let seed: u64 = rng.gen();
                let mut order = ChaCha8Rng::seed_from_u64(seed);
                let other = alg.canonicalize_with(&raw, |n| order.gen_range(0..n));
                check(other == reference, || fail("canonical form depends on reduction order"))?;
            }
            count += 1;
        }
    }
    within(start, Duration::from_secs(120), "criterion 4")?;
    Ok(format!("{count} elements over {} fixtures, 100 orders each, in {:.2?}", fixtures::all().len(), start.elapsed()))
}

fn criterion_5() -> Outcome {
    let mut parts = Vec::new();
    for (name, want) in [("ug-chain", 4), ("ug-fan", 8)] {
        let ug = fixtures::all().into_iter().find(|(n, _)| *n == name).unwrap().1;
        let alg = LeavittAlgebra::new(&ug);
        let basis = alg.canonical_monomials(ug.edge_count(), 100_000).map_err(|e| e.to_string())?;
        let blocks = matricial_structure(&ug, MatricialMethod::ViaGF).map_err(|e| e.to_string())?;
        let dim = matricial_dimension(&blocks);
        check(basis.len() == want && dim == want, || {
            format!("{name}: {} canonical monomials, Σn² = {dim}, expected {want}", basis.len())
        })?;
        parts.push(format!("{name} {want}"));
    }
    for (name, ug) in fixtures::all() {
        if let Ok(blocks) = matricial_structure(&ug, MatricialMethod::ViaGF) {
            let n = LeavittAlgebra::new(&ug).canonical_monomials(ug.edge_count(), 100_000).map_err(|e| e.to_string())?.len();
            check(n == matricial_dimension(&blocks), || format!("{name}: {n} vs {}", matricial_dimension(&blocks)))?;
        }
    }
    Ok(parts.join(", "))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for (name, ug) in [("UG-LOOP", fixtures::ug_loop()), ("UG-TAIL", fixtures::ug_tail())] {
        let alg = LeavittAlgebra::new(&ug);
        let cycles = enumerate_cycles(&ug);
        let corner = CycleCorner::new(&ug, cycles[0].clone(), DEFAULT_LAMBDA_CAP).map_err(|e| e.to_string())?;
        let phi = |x: &Element| corner.to_matrix(&alg, x).map_err(|e| format!("{name}: {e}"));
        let idx = corner.lambda().to_vec();

        for i in 0..100 {
            let x = alg.canonicalize(&random_element(&mut rng, &ug, 3, 3));
            let y = alg.canonicalize(&random_element(&mut rng, &ug, 3, 3));
            let (fx, fy) = (phi(&x)?, phi(&y)?);
            check(phi(&alg.mul(&x, &y))? == fx.mul(&fy), || format!("{name} pair {i}: φ(xy) ≠ φ(x)φ(y)"))?;
            check(phi(&alg.add(&x, &y))? == fx.add(&fy), || format!("{name} pair {i}: φ(x+y) ≠ φ(x)+φ(y)"))?;
        }
        for (i, p) in idx.iter().enumerate() {
            for (j, q) in idx.iter().enumerate() {
                for k in -3..=3 {
                    let b = corner.basis_element(&alg, p, k, q);
                    check(phi(&b)? == LaurentMatrix::unit(idx.clone(), i, j, k), || {
                        format!("{name}: basis element ({i},{j},x^{k}) misses its matrix unit")
                    })?;
                }
            }
        }
        check(phi(&alg.one())? == LaurentMatrix::identity(idx.clone()), || format!("{name}: φ(p_G⁰) ≠ 1"))?;
    }
    Ok("UG-LOOP, UG-TAIL: 100 pairs each, matrix units for k ∈ [-3, 3], φ(1) = 1".into())
}

fn criterion_7(corpus: &[Ultragraph]) -> Outcome {
    let mut graded_simple = 0;
    for (i, ug) in corpus.iter().enumerate() {
        let gs = is_graded_simple(ug, GradedSimplicityStrategy::Enumerate, DEFAULT_HS_CAP).map_err(|e| e.to_string())?;
        if !gs.is_simple() {
            continue;
        }
        graded_simple += 1;
        let class = match trichotomy(ug, Caps::default()) {
            Err(e @ Error::InternalInconsistency(_)) => return Err(format!("instance {i}: {e}")),
            Err(e) => return Err(format!("instance {i}: {e}")),
            Ok(c) => c,
        };
        check(class.verify(ug), || format!("instance {i}: witness does not verify"))?;

        let cycles = enumerate_cycles(ug);
        let one_exitless = cycles.len() == 1 && has_exit(ug, &cycles[0]).is_none();
        let (pis, _) = is_purely_infinite_simple(ug, Caps::default()).map_err(|e| format!("instance {i}: {e}"))?;
        let predicates = [cycles.is_empty(), one_exitless, pis];
        check(predicates.iter().filter(|&&b| b).count() == 1, || {
            format!("instance {i}: class predicates {predicates:?}")
        })?;
        let expected = match predicates {
            [true, _, _] => "locally_matricial",
            [_, true, _] => "matrix_laurent",
            _ => "purely_infinite_simple",
        };
        check(class.class_name() == expected, || format!("instance {i}: {} vs {expected}", class.class_name()))?;

        let regular = is_von_neumann_regular(ug).map_err(|e| format!("instance {i}: {e}"))?;
        check(regular == matches!(class, Classification::LocallyMatricial { .. }), || {
            format!("instance {i}: regular={regular} but class {}", class.class_name())
        })?;
    }
    Ok(format!("{graded_simple} graded-simple instances, 0 violations"))
}

fn main() {
    let corpus = random_corpus();
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "fixture classifications", criterion_1()),
        (2, "oracle equivalence on 500 random ultragraphs", criterion_2(&corpus)),
        (3, "defining relations", criterion_3()),
        (4, "algebra properties", criterion_4()),
        (5, "dimension cross-check", criterion_5()),
        (6, "cycle-corner isomorphism", criterion_6()),
        (7, "trichotomy exclusivity and regularity", criterion_7(&corpus)),
    ];
    let mut failed = 0;
    for (n, title, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {n} PASS  {title}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL  {title}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
