//! Exact arithmetic in the Leavitt path algebra `L_K(𝒢)` of a finite
//! ultragraph over `K = ℚ`.
//!
//! Elements are linear combinations of monomials `s_α p_A s_β*`. Products
//! follow the four-case rule in [`mono_mul`]; equality is decided by
//! reducing both sides to a canonical form (see [`LeavittAlgebra::canonicalize`]).

mod canon;
mod corner;
mod element;
mod laurent;
mod monomial;
mod relations;

pub use corner::{factor_path_mod_cycle, lambda_set, CycleCorner, DEFAULT_LAMBDA_CAP};
pub use element::Element;
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use monomial::{mono_mul, Monomial};
pub use relations::{RelationFailure, RelationReport};

use num_rational::BigRational;
use num_traits::One;

use crate::model::{EdgeId, Ultragraph, VertexId, VertexSet};

/// The coefficient field.
pub type Scalar = BigRational;

/// Arithmetic context for one ultragraph.
#[derive(Clone, Debug)]
pub struct LeavittAlgebra<'a> {
    ug: &'a Ultragraph,
    // (e_v, w_v) for each regular v
    special: Vec<Option<(EdgeId, VertexId)>>,
    reduce: bool,
}

impl<'a> LeavittAlgebra<'a> {
    pub fn new(ug: &'a Ultragraph) -> Self {
        let special = ug
            .vertices()
            .map(|v| {
                ug.emitted(v).first().map(|&e| (e, ug.range(e).first().expect("ranges are nonempty")))
            })
            .collect();
        LeavittAlgebra { ug, special, reduce: true }
    }

    /// A copy whose canonicalization only atomizes and never applies the
    /// `p_v = Σ s_e s_e*` reduction. Used as a negative control.
    pub fn without_reduction(&self) -> Self {
        LeavittAlgebra { reduce: false, ..self.clone() }
    }

    pub fn ultragraph(&self) -> &'a Ultragraph {
        self.ug
    }

    /// The edge and range vertex singled out at a regular vertex for the
    /// reduction rule.
    pub fn special_pair(&self, v: VertexId) -> Option<(EdgeId, VertexId)> {
        self.special[v.0]
    }

    fn mono(&self, alpha: Vec<EdgeId>, mid: VertexSet, beta: Vec<EdgeId>) -> Element {
        Monomial::new(self.ug, alpha, mid, beta)
            .map(|m| self.canonicalize(&Element::from_monomial(m)))
            .unwrap_or_default()
    }

    /// `s_α p_A s_β*` in canonical form; zero if the paths do not chain.
    pub fn monomial(&self, alpha: &[EdgeId], mid: VertexSet, beta: &[EdgeId]) -> Element {
        self.mono(alpha.to_vec(), mid, beta.to_vec())
    }

    /// `p_A`.
    pub fn p(&self, a: VertexSet) -> Element {
        self.mono(vec![], a, vec![])
    }

    pub fn p_vertex(&self, v: VertexId) -> Element {
        self.p(VertexSet::singleton(v))
    }

    /// `s_e`, embedded as `(e, r(e), ∅)`.
    pub fn s(&self, e: EdgeId) -> Element {
        self.mono(vec![e], self.ug.range(e), vec![])
    }

    pub fn s_star(&self, e: EdgeId) -> Element {
        self.mono(vec![], self.ug.range(e), vec![e])
    }

    /// `s_α` for an edge path.
    pub fn s_path(&self, alpha: &[EdgeId]) -> Element {
        if alpha.is_empty() {
            return self.one();
        }
        self.mono(alpha.to_vec(), self.ug.all_vertices(), vec![])
    }

    /// `p_{G⁰}`, the identity of `L_K(𝒢)`.
    pub fn one(&self) -> Element {
        self.p(self.ug.all_vertices())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        self.one().scale(&c)
    }

    pub fn integer(&self, n: i64) -> Element {
        self.scalar(Scalar::from_integer(n.into()))
    }

    /// Bilinear product without canonicalization.
    pub fn mul_raw(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                if let Some(m) = mono_mul(self.ug, a, b) {
                    out.add_term(m, c * d);
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.canonicalize(&self.mul_raw(x, y))
    }

    /// Left-to-right product of several factors.
    pub fn product<'b, I: IntoIterator<Item = &'b Element>>(&self, factors: I) -> Element {
        factors.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &Element, n: u32) -> Element {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.canonicalize(&(x + y))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.canonicalize(&(x - y))
    }

    pub fn equals(&self, x: &Element, y: &Element) -> bool {
        self.canonicalize(&(x - y)).is_zero()
    }

    /// `A` with `p_A x = x = x p_A` for every `x` in `xs`: the sources of
    /// all nonempty `α` and `β`, plus the middle set of each term on every
    /// side where the path is empty.
    pub fn local_unit(&self, xs: &[Element]) -> VertexSet {
        let mut a = VertexSet::EMPTY;
        for x in xs {
            for (m, _) in x.terms() {
                for side in [&m.alpha, &m.beta] {
                    match side.first() {
                        Some(&e) => a.insert(self.ug.source(e)),
                        None => a = a.union(m.mid),
                    }
                }
            }
        }
        a
    }
}

/// `1`, as a scalar.
pub fn one() -> Scalar {
    Scalar::one()
}

/// `n/d`, as a scalar.
pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}
