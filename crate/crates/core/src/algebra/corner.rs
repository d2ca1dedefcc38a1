//! The isomorphism `I(v) ≅ M_Λ(K[x, x⁻¹])` for an ultragraph whose only
//! cycle `c` has no exit, with `v = s(c)`.
//!
//! An exitless cycle has singleton ranges and each of its vertices emits
//! only the next cycle edge, so every path `α` with `v ∈ r(α)` factors
//! uniquely as `α = p·c^m` where `p` does not contain every edge of `c`.
//! `Λ` is the set of such `p`. The elements `s_p p_v s_c^k s_q*`
//! (`p, q ∈ Λ`, `k ∈ ℤ`, negative powers meaning powers of `s_c*`) form a
//! basis of `I(v)` and map to the matrix units `x^k E_{p,q}`.

use std::collections::BTreeMap;

use super::element::Element;
use super::laurent::{LaurentMatrix, LaurentPoly};
use super::monomial::Monomial;
use super::LeavittAlgebra;
use crate::error::{Error, Result};
use crate::model::{EdgeId, Ultragraph, VertexId, VertexSet};
use crate::paths::{has_exit, CycleClass, Path};

/// Default bound on `|Λ|` and on the number of terms produced while
/// pushing an element into the corner.
pub const DEFAULT_LAMBDA_CAP: usize = 10_000;

fn contains_all_edges(path: &[EdgeId], c: &CycleClass) -> bool {
    c.edges().iter().all(|e| path.contains(e))
}

/// `Λ`: the trivial path at `v = s(c)` and every edge path `p` with
/// `v ∈ r(p)` that does not contain all edges of `c`, in path order.
pub fn lambda_set(ug: &Ultragraph, c: &CycleClass, cap: usize) -> Result<Vec<Path>> {
    if has_exit(ug, c).is_some() {
        return Err(Error::NotExitless);
    }
    let v = c.base(ug);
    let mut out = vec![Path::vertex(v)];
    // grow backwards from v; a path containing all of c stays that way
    let mut frontier: Vec<Vec<EdgeId>> = ug
        .edges()
        .filter(|&f| ug.range(f).contains(v))
        .map(|f| vec![f])
        .filter(|p| !contains_all_edges(p, c))
        .collect();
    while let Some(p) = frontier.pop() {
        let head = ug.source(p[0]);
        for g in ug.edges().filter(|&g| ug.range(g).contains(head)) {
            let mut q = Vec::with_capacity(p.len() + 1);
            q.push(g);
            q.extend_from_slice(&p);
            if !contains_all_edges(&q, c) {
                frontier.push(q);
            }
        }
        out.push(Path::Edges(p));
        if out.len() > cap {
            return Err(Error::InfiniteLambda { cap });
        }
    }
    out.sort();
    Ok(out)
}

/// Splits `α = p·c^m` with `p ∈ Λ` by stripping trailing copies of the
/// representative of `c`. A trivial path must be `{s(c)}` and gives
/// `(Trivial{s(c)}, 0)`.
pub fn factor_path_mod_cycle(ug: &Ultragraph, alpha: &Path, c: &CycleClass) -> Result<(Path, usize)> {
    let v = c.base(ug);
    match alpha {
        Path::Trivial(a) if *a == VertexSet::singleton(v) => Ok((Path::vertex(v), 0)),
        Path::Trivial(_) => Err(Error::NotEndingAtBase),
        Path::Edges(es) => {
            if !alpha.range(ug).contains(v) {
                return Err(Error::NotEndingAtBase);
            }
            let (p, m) = strip_cycle(es, c.edges());
            Ok((if p.is_empty() { Path::vertex(v) } else { Path::Edges(p.to_vec()) }, m))
        }
    }
}

fn strip_cycle<'a>(mut es: &'a [EdgeId], rep: &[EdgeId]) -> (&'a [EdgeId], usize) {
    let mut m = 0;
    while es.ends_with(rep) {
        es = &es[..es.len() - rep.len()];
        m += 1;
    }
    (es, m)
}

/// `φ: I(v) → M_Λ(K[x, x⁻¹])` for a fixed exitless cycle.
#[derive(Clone, Debug)]
pub struct CycleCorner {
    cycle: CycleClass,
    base: VertexId,
    lambda: Vec<Path>,
    position: BTreeMap<Path, usize>,
    cap: usize,
}

impl CycleCorner {
    pub fn new(ug: &Ultragraph, cycle: CycleClass, cap: usize) -> Result<Self> {
        let lambda = lambda_set(ug, &cycle, cap)?;
        let position = lambda.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(CycleCorner { base: cycle.base(ug), cycle, lambda, position, cap })
    }

    pub fn cycle(&self) -> &CycleClass {
        &self.cycle
    }

    pub fn base(&self) -> VertexId {
        self.base
    }

    pub fn lambda(&self) -> &[Path] {
        &self.lambda
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.position.get(p).copied()
    }

    /// `s_p p_v s_c^k s_q*` for `p, q ∈ Λ`.
    pub fn basis_element(&self, alg: &LeavittAlgebra<'_>, p: &Path, k: i64, q: &Path) -> Element {
        let reps = self.cycle.edges().repeat(k.unsigned_abs() as usize);
        let mut alpha = p.edges().to_vec();
        let mut beta = q.edges().to_vec();
        if k >= 0 {
            alpha.extend(reps);
        } else {
            beta.extend(reps);
        }
        alg.monomial(&alpha, VertexSet::singleton(self.base), &beta)
    }

    /// `φ(x)`. Each term of `x` is pushed through `p_w = Σ s_f p_y s_f*`
    /// until its middle vertex is `v`, then factored against `c`.
    pub fn to_matrix(&self, alg: &LeavittAlgebra<'_>, x: &Element) -> Result<LaurentMatrix> {
        let ug = alg.ultragraph();
        let v = self.base;
        let mut pending: Vec<(Monomial, _)> =
            alg.atomize(x).terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut out = LaurentMatrix::zero(self.lambda.clone());
        let mut steps = 0usize;
        while let Some((m, coeff)) = pending.pop() {
            steps += 1;
            if steps > self.cap {
                return Err(Error::NotInCorner(format!(
                    "expansion exceeded {} terms",
                    self.cap
                )));
            }
            let w = m.mid.first().expect("atomic middle");
            if w != v {
                if ug.is_sink(w) {
                    return Err(Error::NotInCorner(format!(
                        "term {} sits over the sink {}",
                        m.display(ug),
                        ug.vertex_name(w)
                    )));
                }
                for &f in ug.emitted(w) {
                    for y in ug.range(f).iter() {
                        let mut a = m.alpha.clone();
                        a.push(f);
                        let mut b = m.beta.clone();
                        b.push(f);
                        pending.push((Monomial { alpha: a, mid: VertexSet::singleton(y), beta: b }, coeff.clone()));
                    }
                }
                continue;
            }
            let (p, i) = strip_cycle(&m.alpha, self.cycle.edges());
            let (q, j) = strip_cycle(&m.beta, self.cycle.edges());
            let row = self.index_of(&self.as_path(p)).ok_or_else(|| self.outside(ug, &m))?;
            let col = self.index_of(&self.as_path(q)).ok_or_else(|| self.outside(ug, &m))?;
            out.add_entry(row, col, &LaurentPoly::monomial(i as i64 - j as i64, coeff));
        }
        Ok(out)
    }

    fn as_path(&self, es: &[EdgeId]) -> Path {
        if es.is_empty() {
            Path::vertex(self.base)
        } else {
            Path::Edges(es.to_vec())
        }
    }

    fn outside(&self, ug: &Ultragraph, m: &Monomial) -> Error {
        Error::NotInCorner(format!("term {} does not factor through Λ", m.display(ug)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::paths::enumerate_cycles;

    fn only_cycle(ug: &Ultragraph) -> CycleClass {
        let cs = enumerate_cycles(ug);
        assert_eq!(cs.len(), 1);
        cs[0].clone()
    }

    #[test]
    fn lambda_examples() {
        let ug = fixtures::ug_loop();
        assert_eq!(lambda_set(&ug, &only_cycle(&ug), 100).unwrap().len(), 1);

        let ug = fixtures::ug_tail();
        let e = ug.edge_by_name("e").unwrap();
        let v = ug.vertex_by_name("v").unwrap();
        assert_eq!(
            lambda_set(&ug, &only_cycle(&ug), 100).unwrap(),
            vec![Path::vertex(v), Path::Edges(vec![e])]
        );

        let ug = fixtures::ug_cycle2();
        let v1 = ug.vertex_by_name("v1").unwrap();
        let e2 = ug.edge_by_name("e2").unwrap();
        assert_eq!(
            lambda_set(&ug, &only_cycle(&ug), 100).unwrap(),
            vec![Path::vertex(v1), Path::Edges(vec![e2])]
        );

        let ug = fixtures::ug_split();
        assert_eq!(lambda_set(&ug, &only_cycle(&ug), 100).unwrap().len(), 4);
    }

    #[test]
    fn exits_are_rejected() {
        let ug = fixtures::ug_sinkcycle();
        assert_eq!(lambda_set(&ug, &only_cycle(&ug), 100), Err(Error::NotExitless));
    }

    #[test]
    fn factorization() {
        let ug = fixtures::ug_loop();
        let c = only_cycle(&ug);
        let e = ug.edge_by_name("e").unwrap();
        let v = ug.vertex_by_name("v").unwrap();
        assert_eq!(factor_path_mod_cycle(&ug, &Path::Edges(vec![e, e]), &c).unwrap(), (Path::vertex(v), 2));
        assert_eq!(factor_path_mod_cycle(&ug, &Path::vertex(v), &c).unwrap(), (Path::vertex(v), 0));

        let ug = fixtures::ug_tail();
        let c = only_cycle(&ug);
        let e = ug.edge_by_name("e").unwrap();
        let cc = ug.edge_by_name("c").unwrap();
        let u = ug.vertex_by_name("u").unwrap();
        assert_eq!(
            factor_path_mod_cycle(&ug, &Path::Edges(vec![e, cc, cc]), &c).unwrap(),
            (Path::Edges(vec![e]), 2)
        );
        assert_eq!(factor_path_mod_cycle(&ug, &Path::vertex(u), &c), Err(Error::NotEndingAtBase));
    }

    #[test]
    fn matrix_examples() {
        let ug = fixtures::ug_loop();
        let alg = LeavittAlgebra::new(&ug);
        let corner = CycleCorner::new(&ug, only_cycle(&ug), 100).unwrap();
        let e = ug.edge_by_name("e").unwrap();
        let v = ug.vertex_by_name("v").unwrap();
        let idx = corner.lambda().to_vec();
        assert_eq!(corner.to_matrix(&alg, &alg.s(e)).unwrap(), LaurentMatrix::unit(idx.clone(), 0, 0, 1));
        assert_eq!(corner.to_matrix(&alg, &alg.p_vertex(v)).unwrap(), LaurentMatrix::identity(idx.clone()));
        assert_eq!(corner.to_matrix(&alg, &alg.s_star(e)).unwrap(), LaurentMatrix::unit(idx, 0, 0, -1));

        let ug = fixtures::ug_tail();
        let alg = LeavittAlgebra::new(&ug);
        let corner = CycleCorner::new(&ug, only_cycle(&ug), 100).unwrap();
        let e = ug.edge_by_name("e").unwrap();
        let x = alg.mul(&alg.s(e), &alg.s_star(e));
        let i = corner.index_of(&Path::Edges(vec![e])).unwrap();
        assert_eq!(corner.to_matrix(&alg, &x).unwrap(), LaurentMatrix::unit(corner.lambda().to_vec(), i, i, 0));
        assert_eq!(
            corner.to_matrix(&alg, &alg.one()).unwrap(),
            LaurentMatrix::identity(corner.lambda().to_vec())
        );
    }

    #[test]
    fn basis_elements_hit_matrix_units() {
        for ug in [fixtures::ug_tail(), fixtures::ug_split(), fixtures::ug_cycle2()] {
            let alg = LeavittAlgebra::new(&ug);
            let corner = CycleCorner::new(&ug, only_cycle(&ug), 100).unwrap();
            let idx = corner.lambda().to_vec();
            for (i, p) in idx.iter().enumerate() {
                for (j, q) in idx.iter().enumerate() {
                    for k in -2..=2 {
                        let b = corner.basis_element(&alg, p, k, q);
                        assert_eq!(
                            corner.to_matrix(&alg, &b).unwrap(),
                            LaurentMatrix::unit(idx.clone(), i, j, k)
                        );
                    }
                }
            }
        }
    }
}
