use std::collections::BTreeMap;

use super::{buchberger, saturate_variable, Binomial, BinomialIdeal, EdgeMonomial, TermOrder};
use crate::error::Result;
use crate::graph::SimpleGraph;

/// A lattice basis of `{v ∈ Z^n : M v = 0}` by unimodular column operations.
pub fn integer_kernel(matrix: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i128>> = matrix.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    // u starts as the identity; columns of a and u move together
    let mut u: Vec<Vec<i128>> = (0..ncols).map(|i| (0..ncols).map(|j| (i == j) as i128).collect()).collect();
    let col_op = |m: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in m.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    let swap = |m: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in m.iter_mut() {
            row.swap(x, y);
        }
    };
    let mut pivot = 0;
    for r in 0..a.len() {
        if pivot == ncols {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (pivot..ncols).filter(|&c| a[r][c] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            let &best = nonzero.iter().min_by_key(|&&c| a[r][c].abs()).unwrap();
            swap(&mut a, pivot, best);
            swap(&mut u, pivot, best);
            let mut done = true;
            for c in pivot + 1..ncols {
                if a[r][c] != 0 {
                    let q = a[r][c].div_euclid(a[r][pivot]);
                    col_op(&mut a, c, pivot, q);
                    col_op(&mut u, c, pivot, q);
                    done &= a[r][c] == 0;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    (pivot..ncols)
        .map(|c| u.iter().map(|row| i64::try_from(row[c]).expect("kernel entry fits in i64")).collect())
        .collect()
}

/// `x^{v+} - x^{v-}` for each kernel basis vector of `M_G`.
pub fn lattice_basis_ideal(g: &SimpleGraph, ord: &TermOrder) -> Result<BinomialIdeal> {
    let n = g.edge_count();
    let kernel = integer_kernel(&g.incidence_matrix(), n);
    let pairs = kernel.into_iter().map(|v| {
        let plus = EdgeMonomial(v.iter().map(|&x| x.max(0) as u32).collect());
        let minus = EdgeMonomial(v.iter().map(|&x| (-x).max(0) as u32).collect());
        (plus, minus)
    });
    BinomialIdeal::new(n, ord.clone(), pairs)
}

/// `I_G` as a reduced Gröbner basis in degrevlex `e1 > ... > en`.
pub fn toric_ideal(g: &SimpleGraph) -> Result<BinomialIdeal> {
    toric_ideal_with_order(g, &TermOrder::degrevlex(g.edge_count()))
}

/// `I_G`: the lattice-basis ideal saturated by every variable, returned as a
/// reduced Gröbner basis for `ord`.
pub fn toric_ideal_with_order(g: &SimpleGraph, ord: &TermOrder) -> Result<BinomialIdeal> {
    let n = g.edge_count();
    let mut ideal = lattice_basis_ideal(g, ord)?;
    if ideal.is_zero() {
        return Ok(BinomialIdeal::zero(n, ord.clone()));
    }
    for j in 0..n {
        ideal = saturate_variable(&ideal, j)?;
    }
    Ok(buchberger(&ideal, ord))
}

/// `φ_G` of a monomial: the vertex degree vector.
pub fn multidegree(g: &SimpleGraph, m: &EdgeMonomial) -> Vec<u32> {
    g.degree_of(m.exponents())
}

/// A minimal generating set, chosen greedily by ascending degree.
///
/// In each multidegree the ideal of lower-degree generators joins fibre
/// monomials with equal normal forms; a candidate binomial is kept only
/// when it links two classes not yet joined.
pub fn minimal_generators(ideal: &BinomialIdeal) -> Vec<Binomial> {
    let ord = ideal.order().clone();
    let mut candidates: Vec<Binomial> = ideal.generators().to_vec();
    candidates.sort_by(|a, b| (a.degree(), &a.lead, &a.trail).cmp(&(b.degree(), &b.lead, &b.trail)));

    let mut kept: Vec<Binomial> = Vec::new();
    let mut lower = BinomialIdeal::zero(ideal.nvars(), ord.clone());
    let mut i = 0;
    while i < candidates.len() {
        let d = candidates[i].degree();
        let mut parent: BTreeMap<EdgeMonomial, EdgeMonomial> = BTreeMap::new();
        fn find(parent: &mut BTreeMap<EdgeMonomial, EdgeMonomial>, m: EdgeMonomial) -> EdgeMonomial {
            let p = parent.entry(m.clone()).or_insert_with(|| m.clone()).clone();
            if p == m {
                return m;
            }
            let root = find(parent, p);
            parent.insert(m, root.clone());
            root
        }
        let mut fresh = Vec::new();
        while i < candidates.len() && candidates[i].degree() == d {
            let b = &candidates[i];
            let a = lower.normal_form(&b.lead).expect("groebner");
            let c = lower.normal_form(&b.trail).expect("groebner");
            let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
            if ra != rc {
                parent.insert(ra, rc);
                fresh.push(b.clone());
            }
            i += 1;
        }
        if !fresh.is_empty() {
            kept.extend(fresh);
            let pairs = kept.iter().map(|b| (b.lead.clone(), b.trail.clone()));
            lower = buchberger(&BinomialIdeal::new(ideal.nvars(), ord.clone(), pairs).expect("same variables"), &ord);
        }
    }
    kept
}

/// Minimal monomial generators of `in(I)`.
pub fn initial_ideal(ideal: &BinomialIdeal) -> Result<Vec<EdgeMonomial>> {
    ideal.leading_monomials()
}
