use std::collections::BTreeSet;

use serde::Serialize;

use super::element::Element;
use super::LeavittAlgebra;
use crate::model::VertexSet;

/// One failed instance of a defining relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    /// `"1"` through `"4"`.
    pub relation: String,
    pub instance: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, relation: &str, ok: bool, instance: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(RelationFailure { relation: relation.to_string(), instance: instance() });
        }
    }
}

impl LeavittAlgebra<'_> {
    /// Vertex sets used for relation (1): every subset when `|G⁰| ≤ 4`,
    /// otherwise `∅`, `G⁰`, singletons, ranges, and pairwise unions of
    /// singletons and ranges.
    fn sample_sets(&self) -> Vec<VertexSet> {
        let ug = self.ultragraph();
        let n = ug.vertex_count();
        if n <= 4 {
            return (0..1u64 << n).map(VertexSet::from_bits).collect();
        }
        let base: BTreeSet<VertexSet> = ug
            .vertices()
            .map(VertexSet::singleton)
            .chain(ug.edges().map(|e| ug.range(e)))
            .collect();
        let mut out: BTreeSet<VertexSet> = [VertexSet::EMPTY, ug.all_vertices()].into();
        for &a in &base {
            for &b in &base {
                out.insert(a.union(b));
            }
        }
        out.into_iter().collect()
    }

    /// Checks relations (1)–(4) under canonical-form equality.
    pub fn check_defining_relations(&self) -> RelationReport {
        let ug = self.ultragraph();
        let mut report = RelationReport::default();
        let sets = self.sample_sets();
        let fmt = |a: VertexSet| ug.format_set(a);

        report.check("1", self.p(VertexSet::EMPTY).is_zero(), || "p_∅ = 0".to_string());
        for &a in &sets {
            for &b in &sets {
                let (pa, pb) = (self.p(a), self.p(b));
                report.check("1", self.equals(&self.mul(&pa, &pb), &self.p(a.intersection(b))), || {
                    format!("p_{} p_{} = p_{}", fmt(a), fmt(b), fmt(a.intersection(b)))
                });
                let rhs = &(&pa + &pb) - &self.p(a.intersection(b));
                report.check("1", self.equals(&self.p(a.union(b)), &rhs), || {
                    format!("p_{} = p_{} + p_{} - p_{}", fmt(a.union(b)), fmt(a), fmt(b), fmt(a.intersection(b)))
                });
            }
        }

        for e in ug.edges() {
            let name = ug.edge_name(e);
            let (s, ss) = (self.s(e), self.s_star(e));
            let src = self.p_vertex(ug.source(e));
            let rng = self.p(ug.range(e));
            report.check("2", self.equals(&self.mul(&src, &s), &s), || format!("p_s({name}) s_{name} = s_{name}"));
            report.check("2", self.equals(&self.mul(&s, &rng), &s), || format!("s_{name} p_r({name}) = s_{name}"));
            report.check("2", self.equals(&self.mul(&rng, &ss), &ss), || format!("p_r({name}) s*_{name} = s*_{name}"));
            report.check("2", self.equals(&self.mul(&ss, &src), &ss), || format!("s*_{name} p_s({name}) = s*_{name}"));
        }

        for e in ug.edges() {
            for f in ug.edges() {
                let lhs = self.mul(&self.s_star(e), &self.s(f));
                let rhs = if e == f { self.p(ug.range(e)) } else { Element::zero() };
                report.check("3", self.equals(&lhs, &rhs), || {
                    format!("s*_{} s_{} = {}", ug.edge_name(e), ug.edge_name(f), if e == f { "p_r(e)" } else { "0" })
                });
            }
        }

        for v in ug.vertices().filter(|&v| ug.is_regular(v)) {
            let sum = ug
                .emitted(v)
                .iter()
                .fold(Element::zero(), |acc, &e| &acc + &self.mul(&self.s(e), &self.s_star(e)));
            report.check("4", self.equals(&self.p_vertex(v), &sum), || {
                format!("p_{} = Σ s_e s*_e", ug.vertex_name(v))
            });
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_satisfy_the_relations() {
        for (name, ug) in fixtures::all() {
            let report = LeavittAlgebra::new(&ug).check_defining_relations();
            assert!(report.passed(), "{name}: {:?}", report.failures);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn disabling_reduction_breaks_ck4() {
        for ug in [fixtures::ug_loop(), fixtures::ug_fan(), fixtures::ug_chain()] {
            let report = LeavittAlgebra::new(&ug).without_reduction().check_defining_relations();
            assert!(!report.passed());
            assert!(report.failures.iter().all(|f| f.relation == "4"));
        }
    }
}
