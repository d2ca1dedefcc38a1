//! Hereditary and saturated collections, their saturation, and graded
//! simplicity.
//!
//! For a finite ultragraph every element of 𝒢⁰ is a finite vertex set, and
//! a hereditary collection ℋ (closed under unions and subsets) is exactly
//! the power set of its vertex trace `H_V = {v : {v} ∈ ℋ}`. Everything here
//! works with that trace.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Ultragraph, VertexId, VertexSet};
use crate::paths::{edge_reachable, enumerate_cycles, forward_closure, CycleClass};

/// Default upper bound on `|V|` for subset enumeration.
pub const DEFAULT_HS_CAP: usize = 20;

/// The vertex trace of a hereditary collection.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexIdeal(pub VertexSet);

impl VertexIdeal {
    pub fn members(self) -> VertexSet {
        self.0
    }

    /// Membership of a lattice element in the reconstructed ℋ = 𝒫(H_V).
    pub fn contains_set(self, a: VertexSet) -> bool {
        a.is_subset(self.0)
    }
}

/// Every stage `(H_n, S_n)` of the saturation iteration. The last stage is
/// the fixpoint: `S_n ⊆ H_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationTrace {
    pub stages: Vec<(VertexIdeal, VertexSet)>,
}

/// Condition (1): `s(e) ∈ H ⇒ r(e) ⊆ H`. Closure under unions and subsets
/// holds automatically for a power set.
pub fn is_hereditary(ug: &Ultragraph, h: VertexIdeal) -> bool {
    ug.edges().all(|e| !h.0.contains(ug.source(e)) || ug.range(e).is_subset(h.0))
}

/// Regular vertices all of whose edges have range inside `h`.
fn saturating_vertices(ug: &Ultragraph, h: VertexSet) -> VertexSet {
    ug.vertices()
        .filter(|&v| ug.is_regular(v) && ug.emitted(v).iter().all(|&e| ug.range(e).is_subset(h)))
        .collect()
}

pub fn is_saturated(ug: &Ultragraph, h: VertexIdeal) -> bool {
    saturating_vertices(ug, h.0).is_subset(h.0)
}

/// The least hereditary superset of `seed`.
pub fn hereditary_closure(ug: &Ultragraph, seed: VertexSet) -> VertexIdeal {
    let closed = seed
        .iter()
        .fold(seed, |acc, v| acc.union(edge_reachable(ug, v)));
    VertexIdeal(closed)
}

/// Iterates `S_n = {regular w : r(e) ⊆ H_n for all e ∈ s⁻¹(w)}`,
/// `H_{n+1} = H_n ∪ S_n` to a fixpoint.
pub fn saturate(ug: &Ultragraph, h: VertexIdeal) -> Result<(VertexIdeal, SaturationTrace)> {
    if !is_hereditary(ug, h) {
        return Err(Error::NotHereditary);
    }
    let mut stages = Vec::new();
    let mut current = h.0;
    loop {
        let s = saturating_vertices(ug, current);
        stages.push((VertexIdeal(current), s));
        let next = current.union(s);
        if next == current {
            break;
        }
        current = next;
    }
    Ok((VertexIdeal(current), SaturationTrace { stages }))
}

/// ℋ_𝒢 by brute force over all vertex subsets, in increasing bitmask order.
pub fn enumerate_hs(ug: &Ultragraph, cap: usize) -> Result<Vec<VertexIdeal>> {
    let n = ug.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { what: "hereditary saturated enumeration", cap });
    }
    Ok((0..(1u64 << n))
        .map(|bits| VertexIdeal(VertexSet::from_bits(bits)))
        .filter(|&h| is_hereditary(ug, h) && is_saturated(ug, h))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradedSimplicityStrategy {
    Enumerate,
    Criterion,
}

/// Why the connectivity criterion fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityFailure {
    /// `vertex` connects to no source of `cycle`.
    MissesCycle { vertex: VertexId, cycle: CycleClass },
    /// `vertex ≱ sink`.
    MissesSink { vertex: VertexId, sink: VertexId },
}

impl ConnectivityFailure {
    pub fn to_json(&self, ug: &Ultragraph) -> serde_json::Value {
        match self {
            ConnectivityFailure::MissesCycle { vertex, cycle } => serde_json::json!({
                "kind": "misses_cycle",
                "vertex": ug.vertex_name(*vertex),
                "cycle": cycle.edges().iter().map(|&e| ug.edge_name(e)).collect::<Vec<_>>(),
            }),
            ConnectivityFailure::MissesSink { vertex, sink } => serde_json::json!({
                "kind": "misses_sink",
                "vertex": ug.vertex_name(*vertex),
                "sink": ug.vertex_name(*sink),
            }),
        }
    }
}

/// Certificate that `L_K(𝒢)` is not graded simple: a saturated hereditary
/// set other than `∅` and `G⁰`, plus the connectivity failure it came from
/// when the criterion strategy produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSimplicityWitness {
    pub ideal: VertexIdeal,
    pub failure: Option<ConnectivityFailure>,
}

impl GradedSimplicityWitness {
    /// Re-checks the certificate with the hereditary/saturated predicates
    /// and, if present, the connectivity failure with the path relations.
    pub fn verify(&self, ug: &Ultragraph) -> bool {
        let h = self.ideal;
        let nontrivial = !h.0.is_empty() && h.0 != ug.all_vertices();
        let failure_ok = match &self.failure {
            None => true,
            Some(ConnectivityFailure::MissesCycle { vertex, cycle }) => {
                !forward_closure(ug, *vertex).intersects(cycle.sources())
            }
            Some(ConnectivityFailure::MissesSink { vertex, sink }) => {
                ug.is_sink(*sink) && !forward_closure(ug, *vertex).contains(*sink)
            }
        };
        nontrivial && is_hereditary(ug, h) && is_saturated(ug, h) && failure_ok
    }

    pub fn to_json(&self, ug: &Ultragraph) -> serde_json::Value {
        let mut obj = serde_json::json!({ "ideal": ug.set_names(self.ideal.0) });
        if let Some(f) = &self.failure {
            obj["failure"] = f.to_json(ug);
        }
        obj
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedSimplicity {
    Simple,
    NotSimple(GradedSimplicityWitness),
}

impl GradedSimplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, GradedSimplicity::Simple)
    }
}

/// Decides ℋ_𝒢 = {∅, 𝒢⁰}.
///
/// `Enumerate` checks every vertex subset. `Criterion` uses the
/// connectivity characterization: every vertex connects to every cycle
/// class (the finite form of "connects to every infinite path"), and
/// every vertex reaches every sink. The third condition of that
/// characterization concerns infinite ranges and holds vacuously here.
pub fn is_graded_simple(
    ug: &Ultragraph,
    strategy: GradedSimplicityStrategy,
    cap: usize,
) -> Result<GradedSimplicity> {
    match strategy {
        GradedSimplicityStrategy::Enumerate => {
            let full = ug.all_vertices();
            let hs = enumerate_hs(ug, cap)?;
            Ok(match hs.into_iter().find(|h| !h.0.is_empty() && h.0 != full) {
                None => GradedSimplicity::Simple,
                Some(ideal) => {
                    GradedSimplicity::NotSimple(GradedSimplicityWitness { ideal, failure: None })
                }
            })
        }
        GradedSimplicityStrategy::Criterion => Ok(criterion(ug)),
    }
}

fn criterion(ug: &Ultragraph) -> GradedSimplicity {
    let closures: Vec<VertexSet> = ug.vertices().map(|v| forward_closure(ug, v)).collect();

    for cycle in enumerate_cycles(ug) {
        if let Some(vertex) = ug.vertices().find(|v| !closures[v.0].intersects(cycle.sources())) {
            // vertices that never reach the cycle form a saturated hereditary set
            let ideal: VertexSet = ug
                .vertices()
                .filter(|w| !closures[w.0].intersects(cycle.sources()))
                .collect();
            let ideal = VertexIdeal(ideal);
            return GradedSimplicity::NotSimple(GradedSimplicityWitness {
                ideal,
                failure: Some(ConnectivityFailure::MissesCycle { vertex, cycle }),
            });
        }
    }

    let sinks = ug.taxonomy().sinks;
    for sink in sinks.iter() {
        if let Some(vertex) = ug.vertices().find(|v| !closures[v.0].contains(sink)) {
            // the saturation of everything `vertex` reaches never picks up a sink
            let (ideal, _) = saturate(ug, VertexIdeal(closures[vertex.0]))
                .expect("forward closure is hereditary");
            return GradedSimplicity::NotSimple(GradedSimplicityWitness {
                ideal,
                failure: Some(ConnectivityFailure::MissesSink { vertex, sink }),
            });
        }
    }
    GradedSimplicity::Simple
}

/// Serializable summary of a saturation run.
#[derive(Clone, Debug, Serialize)]
pub struct SaturationStage {
    pub h: Vec<String>,
    pub s: Vec<String>,
}

impl SaturationTrace {
    pub fn named(&self, ug: &Ultragraph) -> Vec<SaturationStage> {
        self.stages
            .iter()
            .map(|(h, s)| SaturationStage { h: ug.set_names(h.0), s: ug.set_names(*s) })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(ug: &Ultragraph, names: &[&str]) -> VertexSet {
        ug.vertex_set(names).unwrap()
    }

    fn ideal(ug: &Ultragraph, names: &[&str]) -> VertexIdeal {
        VertexIdeal(set(ug, names))
    }

    #[test]
    fn hereditary_examples() {
        let ug = fixtures::ug_chain();
        assert!(is_hereditary(&ug, ideal(&ug, &["w"])));
        assert!(!is_hereditary(&ug, ideal(&ug, &["u"])));
        let ug = fixtures::ug_mix();
        assert!(!is_hereditary(&ug, ideal(&ug, &["u"])));
    }

    #[test]
    fn saturated_examples() {
        let ug = fixtures::ug_chain();
        assert!(!is_saturated(&ug, ideal(&ug, &["w"])));
        assert!(is_saturated(&ug, ideal(&ug, &["u", "w"])));
        let ug = fixtures::ug_fan();
        assert!(is_saturated(&ug, ideal(&ug, &["w1"])));
    }

    #[test]
    fn closure_examples() {
        let ug = fixtures::ug_fan();
        assert_eq!(hereditary_closure(&ug, set(&ug, &["u"])), ideal(&ug, &["u", "w1", "w2"]));
        assert_eq!(hereditary_closure(&ug, set(&ug, &["w1"])), ideal(&ug, &["w1"]));
        let ug = fixtures::ug_mix();
        assert_eq!(hereditary_closure(&ug, set(&ug, &["w"])), ideal(&ug, &["u", "w"]));
    }

    #[test]
    fn saturation_examples() {
        let ug = fixtures::ug_chain();
        let (h, trace) = saturate(&ug, ideal(&ug, &["w"])).unwrap();
        assert_eq!(h, ideal(&ug, &["u", "w"]));
        assert_eq!(trace.stages[0], (ideal(&ug, &["w"]), set(&ug, &["u"])));
        assert_eq!(trace.stages.len(), 2);

        let full = ideal(&ug, &["u", "w"]);
        let (h, trace) = saturate(&ug, full).unwrap();
        assert_eq!(h, full);
        assert_eq!(trace.stages.len(), 1);
        assert!(trace.stages[0].1.is_subset(full.0));

        let ug = fixtures::ug_fan();
        let (h, _) = saturate(&ug, ideal(&ug, &["w1"])).unwrap();
        assert_eq!(h, ideal(&ug, &["w1"]));

        assert_eq!(saturate(&ug, ideal(&ug, &["u"])), Err(Error::NotHereditary));
    }

    #[test]
    fn enumeration_examples() {
        let ug = fixtures::ug_rose2();
        assert_eq!(enumerate_hs(&ug, DEFAULT_HS_CAP).unwrap(), vec![ideal(&ug, &[]), ideal(&ug, &["v"])]);

        let ug = fixtures::ug_fan();
        let hs = enumerate_hs(&ug, DEFAULT_HS_CAP).unwrap();
        for names in [&[][..], &["w1"], &["w2"], &["u", "w1", "w2"]] {
            assert!(hs.contains(&ideal(&ug, names)), "{names:?}");
        }
        // u's only edge lands inside {w1, w2}, so saturation adds u
        assert!(!hs.contains(&ideal(&ug, &["w1", "w2"])));

        let ug = fixtures::ug_mix();
        assert_eq!(enumerate_hs(&ug, DEFAULT_HS_CAP).unwrap(), vec![ideal(&ug, &[]), ideal(&ug, &["u", "w"])]);

        assert!(matches!(enumerate_hs(&ug, 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn graded_simplicity_examples() {
        use GradedSimplicityStrategy::*;
        for s in [Enumerate, Criterion] {
            assert!(is_graded_simple(&fixtures::ug_rose2(), s, DEFAULT_HS_CAP).unwrap().is_simple());
            assert!(is_graded_simple(&fixtures::ug_tail(), s, DEFAULT_HS_CAP).unwrap().is_simple());
        }
        let ug = fixtures::ug_fan();
        match is_graded_simple(&ug, Enumerate, DEFAULT_HS_CAP).unwrap() {
            GradedSimplicity::NotSimple(w) => {
                assert_eq!(w.ideal, ideal(&ug, &["w1"]));
                assert!(w.verify(&ug));
            }
            GradedSimplicity::Simple => panic!("fan is not graded simple"),
        }
        match is_graded_simple(&ug, Criterion, DEFAULT_HS_CAP).unwrap() {
            GradedSimplicity::NotSimple(w) => {
                assert!(w.failure.is_some());
                assert!(w.verify(&ug));
            }
            GradedSimplicity::Simple => panic!("fan is not graded simple"),
        }
    }

    #[test]
    fn saturation_is_least() {
        for (_, ug) in fixtures::all() {
            let hs = enumerate_hs(&ug, DEFAULT_HS_CAP).unwrap();
            for bits in 0..(1u64 << ug.vertex_count()) {
                let h = VertexIdeal(VertexSet::from_bits(bits));
                if !is_hereditary(&ug, h) {
                    continue;
                }
                let (sat, _) = saturate(&ug, h).unwrap();
                assert!(is_hereditary(&ug, sat) && is_saturated(&ug, sat));
                assert!(h.0.is_subset(sat.0));
                for k in hs.iter().filter(|k| h.0.is_subset(k.0)) {
                    assert!(sat.0.is_subset(k.0));
                }
            }
        }
    }
}
