//! Canonical forms.
//!
//! Two phases. Atomization rewrites `s_α p_A s_β*` as
//! `Σ_{w ∈ A} s_α p_w s_β*`, which turns the lattice relations on `p_A`
//! into identities. Reduction then eliminates every monomial
//! `s_{αe} p_w s_{βe}*` whose last edges agree and whose `(e, w)` is the
//! special pair `(e_v, w_v)` of `v = s(e)`, using
//!
//! ```text
//! s_{αe_v} p_{w_v} s_{βe_v}* = s_α p_v s_β* − Σ_{(f,x) ≠ (e_v,w_v)} s_{αf} p_x s_{βf}*
//! ```
//!
//! where `f` runs over `s⁻¹(v)` and `x` over `r(f)`. This is the relation
//! `p_v = Σ_{s(f)=v} s_f s_f*` sandwiched between `s_α` and `s_β*`. Each
//! step strictly shortens the rewritten monomial and the new terms are
//! irreducible, so reduction terminates; the irreducible atomic monomials
//! are linearly independent, so the result does not depend on the order in
//! which reducible terms are picked.

use super::element::Element;
use super::monomial::{path_range, Monomial};
use super::LeavittAlgebra;
use crate::error::{Error, Result};
use crate::model::{EdgeId, VertexSet};
use crate::paths::{enumerate_paths, Path};

impl LeavittAlgebra<'_> {
    /// Splits every middle set into singletons.
    pub fn atomize(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            for w in m.mid.iter() {
                let atom = Monomial { alpha: m.alpha.clone(), mid: VertexSet::singleton(w), beta: m.beta.clone() };
                out.add_term(atom, c.clone());
            }
        }
        out
    }

    /// Whether an atomic monomial ends in the special pair on both sides.
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        match (m.alpha.last(), m.beta.last()) {
            (Some(&e), Some(&f)) if e == f => {
                let v = self.ultragraph().source(e);
                self.special_pair(v) == Some((e, m.mid.first().expect("nonempty middle")))
                    && m.mid.len() == 1
            }
            _ => false,
        }
    }

    pub fn is_canonical(&self, x: &Element) -> bool {
        x.terms().all(|(m, _)| m.is_atomic() && !self.is_reducible(m))
    }

    /// Canonical form, reducing terms in a fixed order.
    pub fn canonicalize(&self, x: &Element) -> Element {
        self.canonicalize_with(x, |_| 0)
    }

    /// Canonical form, letting `choose(n)` pick which of the `n` currently
    /// reducible terms to rewrite next. The result is the same for every
    /// choice function.
    pub fn canonicalize_with<F: FnMut(usize) -> usize>(&self, x: &Element, mut choose: F) -> Element {
        let ug = self.ultragraph();
        let mut cur = self.atomize(x);
        if !self.reduce {
            return cur;
        }
        loop {
            let reducible: Vec<Monomial> =
                cur.terms().filter(|(m, _)| self.is_reducible(m)).map(|(m, _)| m.clone()).collect();
            if reducible.is_empty() {
                return cur;
            }
            let pick = choose(reducible.len()).min(reducible.len() - 1);
            let m = &reducible[pick];
            let c = cur.remove_term(m).expect("picked term is present");

            let mut alpha = m.alpha.clone();
            let mut beta = m.beta.clone();
            let e = alpha.pop().unwrap();
            beta.pop();
            let v = ug.source(e);
            let w = m.mid.first().unwrap();

            cur.add_term(
                Monomial { alpha: alpha.clone(), mid: VertexSet::singleton(v), beta: beta.clone() },
                c.clone(),
            );
            for &f in ug.emitted(v) {
                for x in ug.range(f).iter() {
                    if (f, x) == (e, w) {
                        continue;
                    }
                    let mut a = alpha.clone();
                    a.push(f);
                    let mut b = beta.clone();
                    b.push(f);
                    cur.add_term(Monomial { alpha: a, mid: VertexSet::singleton(x), beta: b }, -c.clone());
                }
            }
        }
    }

    /// Every canonical atomic monomial `s_α p_w s_β*` with `|α|, |β| ≤
    /// max_len`. For an acyclic ultragraph and `max_len ≥ |E|` this is a
    /// basis of `L_K(𝒢)`.
    pub fn canonical_monomials(&self, max_len: usize, cap: usize) -> Result<Vec<Monomial>> {
        let ug = self.ultragraph();
        let paths: Vec<Vec<EdgeId>> = enumerate_paths(ug, max_len, cap)?
            .into_iter()
            .filter_map(|p| match p {
                Path::Trivial(_) => None,
                Path::Edges(es) => Some(es),
            })
            .chain(std::iter::once(Vec::new()))
            .collect();
        let mut out = Vec::new();
        for a in &paths {
            for b in &paths {
                let mid = path_range(ug, a).intersection(path_range(ug, b));
                for w in mid.iter() {
                    let m = Monomial { alpha: a.clone(), mid: VertexSet::singleton(w), beta: b.clone() };
                    if !self.is_reducible(&m) {
                        out.push(m);
                        if out.len() > cap {
                            return Err(Error::CapExceeded { what: "canonical monomials", cap });
                        }
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ck4_collapses_on_chain() {
        let ug = fixtures::ug_chain();
        let alg = LeavittAlgebra::new(&ug);
        let u = ug.vertex_by_name("u").unwrap();
        let e = ug.edge_by_name("e").unwrap();
        let ss = alg.mul(&alg.s(e), &alg.s_star(e));
        assert!(alg.sub(&alg.p_vertex(u), &ss).is_zero());
    }

    #[test]
    fn fan_block_becomes_projection() {
        let ug = fixtures::ug_fan();
        let alg = LeavittAlgebra::new(&ug);
        let u = ug.vertex_by_name("u").unwrap();
        let e = ug.edge_by_name("e").unwrap();
        assert_eq!(alg.mul(&alg.s(e), &alg.s_star(e)), alg.p_vertex(u));
    }

    #[test]
    fn zero_is_canonical() {
        let ug = fixtures::ug_loop();
        let alg = LeavittAlgebra::new(&ug);
        assert!(alg.canonicalize(&Element::zero()).is_zero());
    }

    #[test]
    fn halves_of_a_fan_block_are_identified() {
        // s_e p_{w2} s_e* = p_u − s_e p_{w1} s_e*; a full-block contraction
        // alone would leave these two sides distinct.
        let ug = fixtures::ug_fan();
        let alg = LeavittAlgebra::new(&ug);
        let e = ug.edge_by_name("e").unwrap();
        let w1 = ug.vertex_set(&["w1"]).unwrap();
        let w2 = ug.vertex_set(&["w2"]).unwrap();
        let u = ug.vertex_set(&["u"]).unwrap();
        let lhs = alg.monomial(&[e], w2, &[e]);
        let rhs = alg.sub(&alg.p(u), &alg.monomial(&[e], w1, &[e]));
        assert!(alg.equals(&lhs, &rhs));
    }

    #[test]
    fn reduction_can_be_disabled() {
        let ug = fixtures::ug_chain();
        let alg = LeavittAlgebra::new(&ug).without_reduction();
        let u = ug.vertex_by_name("u").unwrap();
        let e = ug.edge_by_name("e").unwrap();
        let ss = alg.mul(&alg.s(e), &alg.s_star(e));
        assert!(!alg.equals(&alg.p_vertex(u), &ss));
    }

    #[test]
    fn canonical_monomial_counts() {
        let ug = fixtures::ug_chain();
        let alg = LeavittAlgebra::new(&ug);
        assert_eq!(alg.canonical_monomials(ug.edge_count(), 10_000).unwrap().len(), 4);
        let ug = fixtures::ug_fan();
        let alg = LeavittAlgebra::new(&ug);
        assert_eq!(alg.canonical_monomials(ug.edge_count(), 10_000).unwrap().len(), 8);
    }
}
