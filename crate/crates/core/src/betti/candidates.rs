//! Multidegrees that can carry Betti numbers, read off the initial ideal.
//!
//! `in(I_G)` is `φ`-graded and `β_{i,s}(K[G]) <= β_{i,s}(S/in(I_G))`, where
//! the right side sums the fine Betti numbers of the monomial quotient over
//! all `b` with `φ(b) = s`. Those live on the lcm lattice of the minimal
//! generators, and each one is the homology of an upper Koszul complex.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use crate::binomial::{initial_ideal, toric_ideal_with_order, EdgeMonomial, TermOrder};
use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::homology::{reduced_homology, Face, Field, SimplicialComplex};

#[derive(Clone, Debug, Default)]
pub struct CandidateSet {
    /// `φ(b)` for every `b` with some `β_{i,b}(S/in I) != 0`, `i >= 1`.
    pub degrees: BTreeSet<Vec<u32>>,
    /// Fine Betti numbers `β_{i,b}(S/in I)` for `i >= 1`.
    pub monomial_betti: BTreeMap<(usize, EdgeMonomial), usize>,
}

impl CandidateSet {
    /// Totals `β_i(S/in I)`, starting with `β_0 = 1`.
    pub fn monomial_totals(&self) -> Vec<usize> {
        let mut totals = vec![1];
        for (&(i, _), &b) in &self.monomial_betti {
            if totals.len() <= i {
                totals.resize(i + 1, 0);
            }
            totals[i] += b;
        }
        totals
    }
}

pub fn candidate_degrees(g: &SimpleGraph, ord: &TermOrder) -> Result<CandidateSet> {
    let ideal = toric_ideal_with_order(g, ord)?;
    let gens = initial_ideal(&ideal)?;
    let fine = monomial_betti(&gens, Field::default());
    let degrees = fine.keys().map(|(_, b)| g.degree_of(b.exponents())).collect();
    Ok(CandidateSet { degrees, monomial_betti: fine })
}

/// All lcms of nonempty subsets of `gens`.
pub fn lcm_lattice(gens: &[EdgeMonomial]) -> Vec<EdgeMonomial> {
    let mut lattice: HashSet<EdgeMonomial> = HashSet::new();
    for m in gens {
        let fresh: Vec<EdgeMonomial> = lattice.iter().map(|l| l.lcm(m)).collect();
        lattice.insert(m.clone());
        lattice.extend(fresh);
    }
    let mut out: Vec<EdgeMonomial> = lattice.into_iter().collect();
    out.sort();
    out
}

/// `K^b = {F ⊆ supp b : x^(b - F) ∈ M}`.
pub fn upper_koszul(gens: &[EdgeMonomial], b: &EdgeMonomial) -> SimplicialComplex {
    let in_ideal = |m: &[u32]| gens.iter().any(|g| g.exponents().iter().zip(m).all(|(x, y)| x <= y));
    let mut exps = b.exponents().to_vec();
    if !in_ideal(&exps) {
        return SimplicialComplex::void();
    }
    let support = b.support();
    let mut faces = Vec::new();
    fn go(
        support: &[usize],
        from: usize,
        f: Face,
        exps: &mut Vec<u32>,
        in_ideal: &dyn Fn(&[u32]) -> bool,
        faces: &mut Vec<Face>,
    ) {
        let mut maximal = true;
        for k in from..support.len() {
            let j = support[k];
            exps[j] -= 1;
            if in_ideal(exps) {
                maximal = false;
                go(support, k + 1, f | 1 << j, exps, in_ideal, faces);
            }
            exps[j] += 1;
        }
        if maximal {
            faces.push(f);
        }
    }
    go(&support, 0, 0, &mut exps, &in_ideal, &mut faces);
    // faces found with no larger extension *in index order*; repair to facets
    SimplicialComplex::from_facets(faces)
}

/// `β_{i,b}(S/M)` for `i >= 1`, nonzero entries only.
pub fn monomial_betti(gens: &[EdgeMonomial], field: Field) -> BTreeMap<(usize, EdgeMonomial), usize> {
    lcm_lattice(gens)
        .into_par_iter()
        .flat_map_iter(|b| {
            let h = reduced_homology(&upper_koszul(gens, &b), field);
            h.nonzero()
                .into_iter()
                .map(move |(k, d)| (((k + 2) as usize, b.clone()), d))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::cycle;

    fn mono(e: &[u32]) -> EdgeMonomial {
        EdgeMonomial(e.to_vec())
    }

    #[test]
    fn monomial_resolutions() {
        // (x, y): Koszul, betti 1 2 1
        let gens = [mono(&[1, 0]), mono(&[0, 1])];
        let fine = monomial_betti(&gens, Field::default());
        assert_eq!(fine.len(), 3);
        assert_eq!(fine[&(2, mono(&[1, 1]))], 1);
        // (x^2, xy, y^2): betti 1 3 2
        let gens = [mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])];
        let set = CandidateSet { degrees: BTreeSet::new(), monomial_betti: monomial_betti(&gens, Field::default()) };
        assert_eq!(set.monomial_totals(), vec![1, 3, 2]);
        // (xy, yz, zx): betti 1 3 2 again, no degree-3 lcm xyz in the third step
        let gens = [mono(&[1, 1, 0]), mono(&[0, 1, 1]), mono(&[1, 0, 1])];
        let set = CandidateSet { degrees: BTreeSet::new(), monomial_betti: monomial_betti(&gens, Field::default()) };
        assert_eq!(set.monomial_totals(), vec![1, 3, 2]);
        assert!(monomial_betti(&[], Field::default()).is_empty());
    }

    #[test]
    fn graph_candidates() {
        let c4 = candidate_degrees(&cycle(4), &TermOrder::degrevlex(4)).unwrap();
        assert_eq!(c4.degrees, BTreeSet::from([vec![1, 1, 1, 1]]));
        assert!(candidate_degrees(&cycle(3), &TermOrder::degrevlex(3)).unwrap().degrees.is_empty());
    }
}
