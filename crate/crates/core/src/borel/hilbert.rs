//! Graded dimensions of modules induced from one-dimensional representations
//! of a non-degenerate Borel subalgebra.

use std::collections::BTreeMap;

use serde::Serialize;

use super::TriangularRcs;
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};
use crate::uqalg::UqAlgebra;

/// `dim` of the part of `(tensor_{beta} C[E_beta]) (x) C[K_a^{+-1} : a in supp]`
/// in each degree. Every polynomial degree pairs with every `K`-exponent, so
/// the Laurent part only records its rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub polynomial_roots: Vec<Root>,
    /// `by_height[h]` for `h = 0..=bound`.
    pub by_height: Vec<u64>,
    /// Root-lattice degree of the polynomial part.
    pub by_degree: BTreeMap<Root, u64>,
    pub laurent_rank: usize,
}

impl HilbertTable {
    /// Dimension in polynomial height `h` and `K`-exponent `k`.
    pub fn dim(&self, h: usize, k: &[i64]) -> Option<u64> {
        if k.len() != self.laurent_rank {
            return None;
        }
        self.by_height.get(h).copied()
    }
}

fn polynomial_roots(alg: &UqAlgebra, rcs: &TriangularRcs) -> Result<Vec<Root>> {
    let rs = alg.root_system();
    if !rcs.is_nondegenerate(alg)? {
        return Err(Error::Precondition("the induced-module formula needs a non-degenerate rcs".into()));
    }
    if rs.element(&rcs.w_plus) != rs.element(&rs.longest_element()) {
        return Err(Error::Precondition(format!("w+ = {} is not the longest element", rcs.w_plus)));
    }
    let supp = rcs.support();
    Ok(rs.positive_roots().iter().filter(|b| !supp.contains(*b)).cloned().collect())
}

/// Product formula `prod_{beta} 1/(1 - x^beta)` expanded up to height `bound`.
pub fn induced_hilbert(alg: &UqAlgebra, rcs: &TriangularRcs, bound: usize) -> Result<HilbertTable> {
    let roots = polynomial_roots(alg, rcs)?;
    let rank = alg.root_system().rank();
    let mut series: BTreeMap<Root, u64> = BTreeMap::from([(Root(vec![0; rank]), 1)]);
    for b in &roots {
        let hb = b.height() as usize;
        let mut next = BTreeMap::new();
        for (d, c) in &series {
            let mut d = d.clone();
            while (d.height() as usize) <= bound {
                *next.entry(d.clone()).or_insert(0) += c;
                d = d.add(b);
                if hb == 0 {
                    break;
                }
            }
        }
        series = next;
    }
    Ok(table(roots, series, bound, rcs.support().len()))
}

/// Direct enumeration of the exponent vectors `(a_beta)` with
/// `sum a_beta ht(beta) <= bound`.
pub fn induced_hilbert_brute(alg: &UqAlgebra, rcs: &TriangularRcs, bound: usize) -> Result<HilbertTable> {
    let roots = polynomial_roots(alg, rcs)?;
    let rs = alg.root_system();
    let mut counts = BTreeMap::new();
    let mut exps = vec![0usize; roots.len()];
    loop {
        let ht: usize = exps.iter().zip(&roots).map(|(a, b)| a * b.height() as usize).sum();
        if ht <= bound {
            *counts.entry(degree(rs, &roots, &exps)).or_insert(0u64) += 1;
        }
        // odometer over 0..=bound in every coordinate
        let mut i = 0;
        while i < exps.len() && exps[i] == bound {
            exps[i] = 0;
            i += 1;
        }
        if i == exps.len() {
            break;
        }
        exps[i] += 1;
    }
    Ok(table(roots, counts, bound, rcs.support().len()))
}

fn degree(rs: &RootSystem, roots: &[Root], exps: &[usize]) -> Root {
    roots
        .iter()
        .zip(exps)
        .fold(Root(vec![0; rs.rank()]), |acc, (b, &a)| acc.add(&b.scale(a as i64)))
}

fn table(roots: Vec<Root>, by_degree: BTreeMap<Root, u64>, bound: usize, laurent_rank: usize) -> HilbertTable {
    let mut by_height = vec![0; bound + 1];
    for (d, c) in &by_degree {
        by_height[d.height() as usize] += c;
    }
    HilbertTable { polynomial_roots: roots, by_height, by_degree, laurent_rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::nondegenerate_borel;

    #[test]
    fn sl2_weyl_algebra_is_one_dimensional_in_each_degree() {
        let a = UqAlgebra::sl(2).unwrap();
        let rcs = nondegenerate_borel(&a, &[0]).unwrap();
        let t = induced_hilbert(&a, &rcs, 5).unwrap();
        assert_eq!(t.by_height, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(t.laurent_rank, 1);
        for k in -3..=3 {
            assert_eq!(t.dim(0, &[k]), Some(1));
        }
    }

    #[test]
    fn standard_direction_counts_kostant_partitions() {
        let a = UqAlgebra::sl(3).unwrap();
        let rcs = nondegenerate_borel(&a, &[]).unwrap();
        let t = induced_hilbert(&a, &rcs, 6).unwrap();
        assert_eq!(t.laurent_rank, 0);
        // partitions of a alpha + b beta into {alpha, beta, alpha+beta}: min(a,b)+1
        for (d, c) in &t.by_degree {
            assert_eq!(*c, d.0[0].min(d.0[1]) as u64 + 1);
        }
        assert_eq!(t, induced_hilbert_brute(&a, &rcs, 6).unwrap());
    }

    #[test]
    fn sl3_nondegenerate_matches_brute_force() {
        let a = UqAlgebra::sl(3).unwrap();
        let rcs = nondegenerate_borel(&a, &[0]).unwrap();
        let t = induced_hilbert(&a, &rcs, 8).unwrap();
        assert_eq!(t.polynomial_roots.len(), 2);
        // generators of height 1 and 2
        assert_eq!(t.by_height, vec![1, 1, 2, 2, 3, 3, 4, 4, 5]);
        assert_eq!(t, induced_hilbert_brute(&a, &rcs, 8).unwrap());
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let a = UqAlgebra::sl(3).unwrap();
        let (rcs, _) = crate::borel::degenerate_palm_rcs(&a, 1, 1, 0).unwrap();
        assert!(induced_hilbert(&a, &rcs, 3).is_err());
    }
}
