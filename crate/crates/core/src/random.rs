//! Random ultragraphs and algebra elements for property tests and
//! benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Element, Monomial, Scalar};
use crate::model::{EdgeId, Ultragraph, VertexId, VertexSet};

/// An ultragraph with `1..=max_vertices` vertices named `v0, v1, ..` and
/// `0..=max_edges` edges `e0, e1, ..`, each with a uniformly random source
/// and a uniformly random nonempty range.
pub fn random_ultragraph<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Ultragraph {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let m = rng.gen_range(0..=max_edges);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut b = Ultragraph::builder("random").vertices(names.iter());
    for j in 0..m {
        let src = &names[rng.gen_range(0..n)];
        let bits = rng.gen_range(1..1u64 << n);
        let range = VertexSet::from_bits(bits).iter().map(|v| names[v.0].as_str());
        b = b.edge(&format!("e{j}"), src, range);
    }
    b.build().expect("generated ultragraph is valid")
}

/// A random edge path of length at most `max_len` whose range contains
/// `w`, grown backwards; shorter when no edge can be prepended.
pub fn random_path_into<R: Rng + ?Sized>(rng: &mut R, ug: &Ultragraph, w: VertexId, max_len: usize) -> Vec<EdgeId> {
    let len = rng.gen_range(0..=max_len);
    let mut path: Vec<EdgeId> = Vec::with_capacity(len);
    let mut target = VertexSet::singleton(w);
    while path.len() < len {
        let choices: Vec<EdgeId> = ug.edges().filter(|&e| ug.range(e).intersects(target)).collect();
        let Some(&e) = choices.choose(rng) else { break };
        path.push(e);
        target = VertexSet::singleton(ug.source(e));
    }
    path.reverse();
    path
}

/// A nonzero monomial `s_α p_A s_β*` with `|α|, |β| ≤ max_len`.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, ug: &Ultragraph, max_len: usize) -> Monomial {
    let n = ug.vertex_count();
    let w = VertexId(rng.gen_range(0..n));
    let alpha = random_path_into(rng, ug, w, max_len);
    let beta = random_path_into(rng, ug, w, max_len);
    let mut mid = VertexSet::from_bits(rng.gen_range(0..1u64 << n));
    mid.insert(w);
    Monomial::new(ug, alpha, mid, beta).expect("w lies in the normalized middle")
}

/// A small nonzero rational `±a/b` with `a, b ∈ 1..=3`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let num: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Scalar::new(num.into(), rng.gen_range(1i64..=3).into())
}

/// A sum of up to `max_terms` random monomials with random coefficients,
/// not canonicalized.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, ug: &Ultragraph, max_terms: usize, max_len: usize) -> Element {
    let k = rng.gen_range(1..=max_terms.max(1));
    Element::from_terms((0..k).map(|_| (random_monomial(rng, ug, max_len), random_scalar(rng))))
}
