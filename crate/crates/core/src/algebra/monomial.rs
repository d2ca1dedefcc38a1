use std::fmt::Write as _;

use crate::model::{EdgeId, Ultragraph, VertexSet};

/// `s_α p_A s_β*`, stored with `A` already intersected with `r(α) ∩ r(β)`
/// (where the range of the empty path is all of G⁰). A monomial with empty
/// middle is zero and is never constructed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub alpha: Vec<EdgeId>,
    pub mid: VertexSet,
    pub beta: Vec<EdgeId>,
}

pub(crate) fn path_range(ug: &Ultragraph, path: &[EdgeId]) -> VertexSet {
    match path.last() {
        Some(&e) => ug.range(e),
        None => ug.all_vertices(),
    }
}

fn chains(ug: &Ultragraph, path: &[EdgeId]) -> bool {
    path.iter().all(|e| e.0 < ug.edge_count())
        && path.windows(2).all(|w| ug.range(w[0]).contains(ug.source(w[1])))
}

impl Monomial {
    /// Normalizes the middle set; `None` if the paths do not chain or the
    /// monomial vanishes.
    pub fn new(ug: &Ultragraph, alpha: Vec<EdgeId>, mid: VertexSet, beta: Vec<EdgeId>) -> Option<Self> {
        if !chains(ug, &alpha) || !chains(ug, &beta) {
            return None;
        }
        let mid = mid
            .intersection(path_range(ug, &alpha))
            .intersection(path_range(ug, &beta))
            .intersection(ug.all_vertices());
        (!mid.is_empty()).then_some(Monomial { alpha, mid, beta })
    }

    /// `|α| − |β|`.
    pub fn degree(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }

    pub fn total_len(&self) -> usize {
        self.alpha.len() + self.beta.len()
    }

    /// `s_β p_A s_α*`.
    pub fn star(&self) -> Self {
        Monomial { alpha: self.beta.clone(), mid: self.mid, beta: self.alpha.clone() }
    }

    pub fn is_atomic(&self) -> bool {
        self.mid.len() == 1
    }

    /// Renders as `s(e1) s(e2) p{w} s*(f2) s*(f1)`.
    pub fn display(&self, ug: &Ultragraph) -> String {
        let mut out = String::new();
        for &e in &self.alpha {
            let _ = write!(out, "s({}) ", ug.edge_name(e));
        }
        let names: Vec<&str> = self.mid.iter().map(|v| ug.vertex_name(v)).collect();
        let _ = write!(out, "p{{{}}}", names.join(","));
        for &e in self.beta.iter().rev() {
            let _ = write!(out, " s*({})", ug.edge_name(e));
        }
        out
    }
}

/// Product of two monomials: zero or a single monomial.
///
/// With `(α, A, β)·(μ, B, ν)`:
/// * `μ = βμ'`, `|μ'| ≥ 1`: `s_{αμ'} p_B s_ν*` when `s(μ') ∈ A`;
/// * `μ = β`: `s_α p_{A∩B} s_ν*`;
/// * `β = μβ'`, `|β'| ≥ 1`: `s_α p_A s_{νβ'}*` when `s(β') ∈ B`;
/// * otherwise zero.
///
/// The conditions use the normalized middles (`A ⊆ r(α) ∩ r(β)`), which
/// is where the `r(β)` and `r(μ)` factors of `s_β* s_μ = p_{r(β)} s_{μ'}`
/// have gone.
pub fn mono_mul(ug: &Ultragraph, x: &Monomial, y: &Monomial) -> Option<Monomial> {
    let (beta, mu) = (&x.beta, &y.alpha);
    if mu.len() > beta.len() {
        if !mu.starts_with(beta) {
            return None;
        }
        let rest = &mu[beta.len()..];
        if !x.mid.contains(ug.source(rest[0])) {
            return None;
        }
        let mut alpha = x.alpha.clone();
        alpha.extend_from_slice(rest);
        Some(Monomial { alpha, mid: y.mid, beta: y.beta.clone() })
    } else if mu.len() == beta.len() {
        if mu != beta {
            return None;
        }
        let mid = x.mid.intersection(y.mid);
        (!mid.is_empty()).then(|| Monomial { alpha: x.alpha.clone(), mid, beta: y.beta.clone() })
    } else {
        if !beta.starts_with(mu) {
            return None;
        }
        let rest = &beta[mu.len()..];
        if !y.mid.contains(ug.source(rest[0])) {
            return None;
        }
        let mut nb = y.beta.clone();
        nb.extend_from_slice(rest);
        Some(Monomial { alpha: x.alpha.clone(), mid: x.mid, beta: nb })
    }
}
