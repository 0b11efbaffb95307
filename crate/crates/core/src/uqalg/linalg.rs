//! Linear algebra over Q(q) on algebra elements.

use std::collections::BTreeMap;

use crate::coeff::{RationalFunction, Scalar};

use super::{Elem, Element, Mono};

/// Reduced row echelon form of a family of elements, used to express
/// targets in their span.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    n: usize,
    /// Echelon rows: pivot monomial, row vector, and the row as a
    /// combination of the input vectors.
    rows: Vec<(Mono, BTreeMap<Mono, RationalFunction>, Vec<RationalFunction>)>,
}

fn axpy(
    dst: &mut BTreeMap<Mono, RationalFunction>,
    f: &RationalFunction,
    src: &BTreeMap<Mono, RationalFunction>,
) {
    for (m, c) in src {
        let t = f * c;
        let slot = dst.entry(m.clone()).or_default();
        *slot = &*slot + &t;
        if slot.is_zero() {
            dst.remove(m);
        }
    }
}

impl SpanSolver {
    pub fn new(vectors: &[Elem]) -> Self {
        let n = vectors.len();
        let mut rows: Vec<(Mono, BTreeMap<Mono, RationalFunction>, Vec<RationalFunction>)> = Vec::new();
        for (idx, v) in vectors.iter().enumerate() {
            let mut vec: BTreeMap<Mono, RationalFunction> = v.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            let mut comb = vec![RationalFunction::zero(); n];
            comb[idx] = RationalFunction::one();
            for (p, row, rc) in &rows {
                if let Some(f) = vec.get(p).cloned() {
                    let nf = -&f;
                    axpy(&mut vec, &nf, row);
                    for (a, b) in comb.iter_mut().zip(rc) {
                        if !b.is_zero() {
                            *a = &*a + &(&nf * b);
                        }
                    }
                }
            }
            let Some((p, pc)) = vec.iter().next().map(|(m, c)| (m.clone(), c.clone())) else {
                continue;
            };
            let inv = pc.inv().expect("nonzero pivot");
            for c in vec.values_mut() {
                *c = &*c * &inv;
            }
            for c in comb.iter_mut() {
                if !c.is_zero() {
                    *c = &*c * &inv;
                }
            }
            // keep the form reduced: clear the new pivot from earlier rows
            for (_, row, rc) in rows.iter_mut() {
                if let Some(f) = row.get(&p).cloned() {
                    let nf = -&f;
                    axpy(row, &nf, &vec);
                    for (a, b) in rc.iter_mut().zip(&comb) {
                        if !b.is_zero() {
                            *a = &*a + &(&nf * b);
                        }
                    }
                }
            }
            rows.push((p, vec, comb));
        }
        SpanSolver { n, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_independent(&self) -> bool {
        self.rows.len() == self.n
    }

    /// Coefficients `c` with `sum c_i v_i = target`, or `None` when the target
    /// is outside the span. For dependent families one solution is returned.
    pub fn solve<C: Scalar>(&self, target: &Element<C>) -> Option<Vec<C>> {
        let mut rest: BTreeMap<Mono, C> = target.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        let mut out = vec![C::zero(); self.n];
        for (p, row, comb) in &self.rows {
            let Some(f) = rest.get(p).cloned() else { continue };
            for (m, c) in row {
                let t = f.scale(c);
                let slot = rest.entry(m.clone()).or_insert_with(C::zero);
                *slot = slot.sub(&t);
                if slot.is_zero() {
                    rest.remove(m);
                }
            }
            for (o, c) in out.iter_mut().zip(comb) {
                if !c.is_zero() {
                    *o = o.add(&f.scale(c));
                }
            }
        }
        rest.is_empty().then_some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::SymbolicScalar;
    use crate::uqalg::UqAlgebra;

    #[test]
    fn solves_and_rejects() {
        let a = UqAlgebra::sl(3).unwrap();
        let v = vec![a.parse("E1 E2").unwrap(), a.parse("E2 E1 + E1 E2").unwrap(), a.parse("F1").unwrap()];
        let s = SpanSolver::new(&v);
        assert!(s.is_independent());
        let t = a.parse("3 E2 E1 + (q) F1").unwrap();
        let c = s.solve(&t).unwrap();
        assert_eq!(c[0], RationalFunction::from_int(-3));
        assert_eq!(c[1], RationalFunction::from_int(3));
        assert_eq!(c[2], RationalFunction::q());
        assert!(s.solve(&a.parse("F2").unwrap()).is_none());
        let ts = a.parse_sym("lam1 E1 E2").unwrap();
        let cs = s.solve(&ts).unwrap();
        assert_eq!(cs[0], SymbolicScalar::lam(1));
    }

    #[test]
    fn detects_dependence() {
        let a = UqAlgebra::sl(2).unwrap();
        let v = vec![a.parse("E1").unwrap(), a.parse("(q) E1").unwrap()];
        assert!(!SpanSolver::new(&v).is_independent());
    }
}
