use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::Scalar;
use crate::model::Ultragraph;

/// A finite `K`-linear combination of monomials. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Element::from_term(m, Scalar::one())
    }

    pub fn from_term(m: Monomial, c: Scalar) -> Self {
        let mut x = Element::zero();
        x.add_term(m, c);
        x
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Self {
        let mut x = Element::zero();
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub(crate) fn remove_term(&mut self, m: &Monomial) -> Option<Scalar> {
        self.terms.remove(m)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// Term-wise `s_α p_A s_β* ↦ s_β p_A s_α*`.
    pub fn star(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.star(), c.clone())).collect() }
    }

    /// Splits into homogeneous components by `|α| − |β|`.
    pub fn degree_components(&self) -> BTreeMap<i64, Element> {
        let mut out: BTreeMap<i64, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_default().terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// `Some(n)` when every term has degree `n` (zero is homogeneous of
    /// every degree and reports `None`).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Renders as a sum like `2 s(e) p{w} - 1/2 p{u}`; re-parses to the
    /// same element.
    pub fn display(&self, ug: &Ultragraph) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push(' ');
            }
            out.push_str(&m.display(ug));
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}
