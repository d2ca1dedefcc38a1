//! Von Neumann regularity, purely infinite simplicity, and the trichotomy
//! for graded simple ultragraph Leavitt path algebras.

use serde_json::{json, Value};

use crate::algebra::{lambda_set, DEFAULT_LAMBDA_CAP};
use crate::error::{Error, Result};
use crate::gf::{matricial_dimension, matricial_structure, ultragraph_is_acyclic, AcyclicityStrategy, MatricialMethod};
use crate::ideals::{
    is_graded_simple, GradedSimplicity, GradedSimplicityStrategy, GradedSimplicityWitness, DEFAULT_HS_CAP,
};
use crate::model::{Ultragraph, VertexId, VertexSet};
use crate::paths::{enumerate_cycles, has_exit, path_into, CycleClass, Exit, Path};

/// Enumeration bounds used by the decision procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest `|G⁰|` for which hereditary saturated sets are enumerated;
    /// larger inputs use the connectivity criterion.
    pub hs: usize,
    pub lambda: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { hs: DEFAULT_HS_CAP, lambda: DEFAULT_LAMBDA_CAP }
    }
}

impl Caps {
    fn hs_strategy(&self, ug: &Ultragraph) -> GradedSimplicityStrategy {
        if ug.vertex_count() <= self.hs {
            GradedSimplicityStrategy::Enumerate
        } else {
            GradedSimplicityStrategy::Criterion
        }
    }
}

/// Evidence for the three conditions of purely infinite simplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PisCertificates {
    /// How `ℋ = {∅, G⁰}` was established.
    pub hs_checked_by: GradedSimplicityStrategy,
    /// An exit for every cycle class.
    pub exits: Vec<(CycleClass, Exit)>,
    /// For every vertex, a path from it whose range meets a cycle.
    pub connects: Vec<(VertexId, Path)>,
}

impl PisCertificates {
    /// Re-checks the exit and connection certificates and re-runs graded
    /// simplicity with the recorded strategy.
    pub fn verify(&self, ug: &Ultragraph) -> bool {
        let cycles = enumerate_cycles(ug);
        let on_cycle = cycles.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(c.sources()));
        let exits_ok = cycles.len() == self.exits.len()
            && self.exits.iter().all(|(c, x)| cycles.contains(c) && x.is_valid_for(ug, c));
        let connects_ok = ug.vertices().all(|v| {
            self.connects.iter().any(|(w, p)| {
                *w == v
                    && p.is_valid(ug)
                    && p.source(ug) == VertexSet::singleton(v)
                    && p.range(ug).intersects(on_cycle)
            })
        });
        let hs_ok = matches!(
            is_graded_simple(ug, self.hs_checked_by, ug.vertex_count().max(DEFAULT_HS_CAP)),
            Ok(GradedSimplicity::Simple)
        );
        exits_ok && connects_ok && hs_ok
    }

    pub fn to_json(&self, ug: &Ultragraph) -> Value {
        json!({
            "hs_trivial": {
                "strategy": match self.hs_checked_by {
                    GradedSimplicityStrategy::Enumerate => "enumerate",
                    GradedSimplicityStrategy::Criterion => "criterion",
                },
            },
            "exits": self.exits.iter().map(|(c, x)| json!({
                "cycle": cycle_json(ug, c),
                "exit": exit_json(ug, x),
            })).collect::<Vec<_>>(),
            "connects": self.connects.iter().map(|(v, p)| json!({
                "vertex": ug.vertex_name(*v),
                "path": p.to_json(ug),
            })).collect::<Vec<_>>(),
        })
    }
}

fn cycle_json(ug: &Ultragraph, c: &CycleClass) -> Value {
    json!(c.edges().iter().map(|&e| ug.edge_name(e)).collect::<Vec<_>>())
}

fn exit_json(ug: &Ultragraph, x: &Exit) -> Value {
    match *x {
        Exit::Edge { edge, at_index } => json!({ "kind": "edge", "edge": ug.edge_name(edge), "at_index": at_index }),
        Exit::Sink { vertex, at_index } => {
            json!({ "kind": "sink", "vertex": ug.vertex_name(vertex), "at_index": at_index })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `⊕ M_{n_i}(K)`, block sizes ascending.
    LocallyMatricial { blocks: Vec<usize> },
    /// `M_Λ(K[x, x⁻¹])` for the unique, exitless cycle class.
    MatrixLaurent { cycle: CycleClass, lambda: Vec<Path> },
    PurelyInfiniteSimple(PisCertificates),
    NotGradedSimple(GradedSimplicityWitness),
}

impl Classification {
    pub fn class_name(&self) -> &'static str {
        match self {
            Classification::LocallyMatricial { .. } => "locally_matricial",
            Classification::MatrixLaurent { .. } => "matrix_laurent",
            Classification::PurelyInfiniteSimple(_) => "purely_infinite_simple",
            Classification::NotGradedSimple(_) => "not_graded_simple",
        }
    }

    /// Re-checks the attached witness independently of how it was found.
    pub fn verify(&self, ug: &Ultragraph) -> bool {
        match self {
            Classification::LocallyMatricial { blocks } => {
                enumerate_cycles(ug).is_empty()
                    && matricial_structure(ug, MatricialMethod::ViaGF).as_ref() == Ok(blocks)
            }
            Classification::MatrixLaurent { cycle, lambda } => {
                let cycles = enumerate_cycles(ug);
                cycles.len() == 1
                    && &cycles[0] == cycle
                    && lambda_set(ug, cycle, lambda.len()).as_ref() == Ok(lambda)
            }
            Classification::PurelyInfiniteSimple(certs) => certs.verify(ug),
            Classification::NotGradedSimple(w) => w.verify(ug),
        }
    }

    /// The `result` object of a report.
    pub fn to_json(&self, ug: &Ultragraph) -> Value {
        let mut out = json!({ "class": self.class_name() });
        match self {
            Classification::LocallyMatricial { blocks } => {
                out["blocks"] = json!(blocks);
                out["witness"] = json!({ "acyclic": true, "dimension": matricial_dimension(blocks) });
            }
            Classification::MatrixLaurent { cycle, lambda } => {
                out["lambda_size"] = json!(lambda.len());
                out["witness"] = json!({
                    "cycle": cycle_json(ug, cycle),
                    "base": ug.vertex_name(cycle.base(ug)),
                    "lambda": lambda.iter().map(|p| p.to_json(ug)).collect::<Vec<_>>(),
                });
            }
            Classification::PurelyInfiniteSimple(certs) => out["witness"] = certs.to_json(ug),
            Classification::NotGradedSimple(w) => out["witness"] = w.to_json(ug),
        }
        out
    }
}

/// `L_K(𝒢)` is von Neumann regular iff `𝒢` is acyclic; decided directly
/// and through the graphs `G_F`, which must agree.
pub fn is_von_neumann_regular(ug: &Ultragraph) -> Result<bool> {
    let direct = ultragraph_is_acyclic(ug, AcyclicityStrategy::Direct)?;
    let via_gf = ultragraph_is_acyclic(ug, AcyclicityStrategy::ViaGF)?;
    if direct != via_gf {
        return Err(Error::InternalInconsistency(format!(
            "acyclicity: direct says {direct}, G_F says {via_gf}"
        )));
    }
    Ok(direct)
}

/// Conditions (1) graded simple, (2) every cycle has an exit, (3) every
/// vertex connects to a cycle. Certificates are returned when all hold.
///
/// Under (1) and (2), (3) is equivalent to the existence of a cycle;
/// a disagreement is reported as [`Error::InternalInconsistency`].
pub fn is_purely_infinite_simple(ug: &Ultragraph, caps: Caps) -> Result<(bool, Option<PisCertificates>)> {
    let strategy = caps.hs_strategy(ug);
    let graded_simple = is_graded_simple(ug, strategy, caps.hs)?.is_simple();
    let cycles = enumerate_cycles(ug);
    let exits: Option<Vec<(CycleClass, Exit)>> =
        cycles.iter().map(|c| has_exit(ug, c).map(|x| (c.clone(), x))).collect();
    let on_cycle = cycles.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(c.sources()));
    let connects: Option<Vec<(VertexId, Path)>> =
        ug.vertices().map(|v| path_into(ug, v, on_cycle).map(|(p, _)| (v, p))).collect();

    if graded_simple && exits.is_some() && connects.is_some() != !cycles.is_empty() {
        return Err(Error::InternalInconsistency(format!(
            "graded simple with condition (L): {} cycle classes but every-vertex-connects is {}",
            cycles.len(),
            connects.is_some()
        )));
    }
    match (graded_simple, exits, connects) {
        (true, Some(exits), Some(connects)) => {
            Ok((true, Some(PisCertificates { hs_checked_by: strategy, exits, connects })))
        }
        _ => Ok((false, None)),
    }
}

/// Exactly one of: not graded simple; locally matricial (no cycle);
/// `M_Λ(K[x, x⁻¹])` (one cycle class); purely infinite simple (two or
/// more cycle classes).
pub fn trichotomy(ug: &Ultragraph, caps: Caps) -> Result<Classification> {
    if let GradedSimplicity::NotSimple(w) = is_graded_simple(ug, caps.hs_strategy(ug), caps.hs)? {
        return Ok(Classification::NotGradedSimple(w));
    }
    let cycles = enumerate_cycles(ug);
    match cycles.len() {
        0 => {
            let blocks = matricial_structure(ug, MatricialMethod::DirectSinkCount)?;
            Ok(Classification::LocallyMatricial { blocks })
        }
        1 => {
            let cycle = cycles.into_iter().next().unwrap();
            if let Some(x) = has_exit(ug, &cycle) {
                return Err(Error::InternalInconsistency(format!(
                    "graded simple with a single cycle class {} that has an exit ({})",
                    cycle.display(ug),
                    x.display(ug)
                )));
            }
            let lambda = lambda_set(ug, &cycle, caps.lambda)?;
            Ok(Classification::MatrixLaurent { cycle, lambda })
        }
        n => match is_purely_infinite_simple(ug, caps)? {
            (true, Some(certs)) => Ok(Classification::PurelyInfiniteSimple(certs)),
            _ => Err(Error::InternalInconsistency(format!(
                "graded simple with {n} cycle classes but the purely-infinite conditions fail"
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn classify(ug: &Ultragraph) -> Classification {
        trichotomy(ug, Caps::default()).unwrap()
    }

    #[test]
    fn fixture_classes() {
        let expect = [
            ("loop", "matrix_laurent"),
            ("chain", "locally_matricial"),
            ("fan", "not_graded_simple"),
            ("rose2", "purely_infinite_simple"),
            ("mix", "purely_infinite_simple"),
            ("sinkcycle", "not_graded_simple"),
            ("tail", "matrix_laurent"),
            ("cycle2", "matrix_laurent"),
            ("split", "matrix_laurent"),
            ("point", "locally_matricial"),
        ];
        for (name, ug) in fixtures::all() {
            let c = classify(&ug);
            let want = expect.iter().find(|(n, _)| name == format!("ug-{n}")).unwrap().1;
            assert_eq!(c.class_name(), want, "{name}");
            assert!(c.verify(&ug), "{name}");
        }
    }

    #[test]
    fn witnesses() {
        let ug = fixtures::ug_fan();
        match classify(&ug) {
            Classification::NotGradedSimple(w) => assert_eq!(w.ideal.0, ug.vertex_set(&["w1"]).unwrap()),
            other => panic!("{other:?}"),
        }
        let ug = fixtures::ug_chain();
        assert_eq!(classify(&ug), Classification::LocallyMatricial { blocks: vec![2] });
        let ug = fixtures::ug_tail();
        match classify(&ug) {
            Classification::MatrixLaurent { lambda, .. } => assert_eq!(lambda.len(), 2),
            other => panic!("{other:?}"),
        }
        let json = classify(&ug).to_json(&ug);
        assert_eq!(json["class"], "matrix_laurent");
        assert_eq!(json["lambda_size"], 2);
    }

    #[test]
    fn regularity_and_pis() {
        assert!(is_von_neumann_regular(&fixtures::ug_fan()).unwrap());
        assert!(!is_von_neumann_regular(&fixtures::ug_loop()).unwrap());
        assert!(!is_von_neumann_regular(&fixtures::ug_mix()).unwrap());

        let (pis, certs) = is_purely_infinite_simple(&fixtures::ug_rose2(), Caps::default()).unwrap();
        assert!(pis);
        assert!(certs.unwrap().verify(&fixtures::ug_rose2()));
        assert!(!is_purely_infinite_simple(&fixtures::ug_loop(), Caps::default()).unwrap().0);
        assert!(!is_purely_infinite_simple(&fixtures::ug_fan(), Caps::default()).unwrap().0);
    }

    #[test]
    fn criterion_is_used_above_the_cap() {
        let caps = Caps { hs: 0, ..Caps::default() };
        for (name, ug) in fixtures::all() {
            assert_eq!(
                trichotomy(&ug, caps).unwrap().class_name(),
                trichotomy(&ug, Caps::default()).unwrap().class_name(),
                "{name}"
            );
        }
    }

    #[test]
    fn locally_matricial_json() {
        let ug = fixtures::ug_chain();
        let json = classify(&ug).to_json(&ug);
        assert_eq!(json["blocks"], json!([2]));
        assert_eq!(json["witness"]["dimension"], 4);
    }
}
