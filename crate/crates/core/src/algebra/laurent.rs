use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::model::Ultragraph;
use crate::paths::Path;

/// An element of `K[x, x⁻¹]`: exponent ↦ nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// `c·x^k`.
    pub fn monomial(k: i64, c: Scalar) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(k, c);
        p
    }

    /// `x^k`.
    pub fn x_pow(k: i64) -> Self {
        LaurentPoly::monomial(k, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, k: i64) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `x^2 - 1/2 + 3 x^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            match (*k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{abs} x")?,
                (k, true) => write!(f, "x^{k}")?,
                (k, false) => write!(f, "{abs} x^{k}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix over `K[x, x⁻¹]` whose rows and columns are indexed by
/// a fixed list of paths. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    index: Vec<Path>,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(index: Vec<Path>) -> Self {
        LaurentMatrix { index, entries: BTreeMap::new() }
    }

    pub fn identity(index: Vec<Path>) -> Self {
        let n = index.len();
        let mut m = LaurentMatrix::zero(index);
        for i in 0..n {
            m.add_entry(i, i, &LaurentPoly::x_pow(0));
        }
        m
    }

    /// The matrix unit `x^k E_{i,j}`.
    pub fn unit(index: Vec<Path>, i: usize, j: usize, k: i64) -> Self {
        let mut m = LaurentMatrix::zero(index);
        m.add_entry(i, j, &LaurentPoly::x_pow(k));
        m
    }

    pub fn index(&self) -> &[Path] {
        &self.index
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &LaurentPoly)> {
        self.entries.iter().map(|(&ij, p)| (ij, p))
    }

    pub fn add_entry(&mut self, i: usize, j: usize, p: &LaurentPoly) {
        assert!(i < self.dim() && j < self.dim(), "matrix index out of range");
        let sum = self.entry(i, j).add(p);
        if sum.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), sum);
        }
    }

    pub fn add(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.index, other.index, "matrices over different index sets");
        let mut out = self.clone();
        for ((i, j), p) in other.entries() {
            out.add_entry(i, j, p);
        }
        out
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.index, other.index, "matrices over different index sets");
        let mut out = LaurentMatrix::zero(self.index.clone());
        for ((i, k), a) in self.entries() {
            for ((_, j), b) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                out.add_entry(i, *j, &a.mul(b));
            }
        }
        out
    }

    /// One line per nonzero entry: `[p, q] poly`.
    pub fn display(&self, ug: &Ultragraph) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.entries()
            .map(|((i, j), p)| {
                format!("[{}, {}] {}", self.index[i].display(ug), self.index[j].display(ug), p)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self, ug: &Ultragraph) -> serde_json::Value {
        serde_json::json!({
            "index": self.index.iter().map(|p| p.to_json(ug)).collect::<Vec<_>>(),
            "entries": self.entries().map(|((i, j), p)| serde_json::json!({
                "row": i,
                "col": j,
                "value": p.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}
