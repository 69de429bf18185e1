//! `Tor_i(K, K[G])_s` from the Koszul complex on the edge variables.
//!
//! The strand in degree `s` has `C_i = ⊕_{|F| = i} K[G]_{s - φ(e_F)}`; each
//! graded piece gets the basis of standard monomials, found by listing the
//! whole fibre `{a : φ(a) = t}` edge by edge and reducing it modulo the
//! Gröbner basis.

use std::collections::{BTreeSet, HashMap};

use crate::binomial::{BinomialIdeal, EdgeMonomial};
use crate::graph::SimpleGraph;
use crate::homology::{labels, rank, Face, Field, SparseColumn};

struct Pieces<'a> {
    g: &'a SimpleGraph,
    gb: &'a BinomialIdeal,
    rows: Vec<(usize, usize)>,
    /// Largest incident edge index per vertex.
    last: Vec<usize>,
    cache: HashMap<Vec<u32>, Vec<EdgeMonomial>>,
}

impl Pieces<'_> {
    /// Standard monomials of `φ`-degree `t`, sorted.
    fn basis(&mut self, t: &[u32]) -> Vec<EdgeMonomial> {
        if let Some(b) = self.cache.get(t) {
            return b.clone();
        }
        let mut fibre = Vec::new();
        let mut a = vec![0u32; self.rows.len()];
        fibre_dfs(&self.rows, &self.last, 0, &mut t.to_vec(), &mut a, &mut fibre);
        let set: BTreeSet<EdgeMonomial> =
            fibre.iter().map(|m| self.gb.normal_form(m).expect("groebner basis")).collect();
        let out: Vec<EdgeMonomial> = set.into_iter().collect();
        debug_assert!(out.iter().all(|m| self.g.degree_of(m.exponents()) == t));
        self.cache.insert(t.to_vec(), out.clone());
        out
    }
}

fn fibre_dfs(
    rows: &[(usize, usize)],
    last: &[usize],
    j: usize,
    residual: &mut Vec<u32>,
    a: &mut Vec<u32>,
    out: &mut Vec<EdgeMonomial>,
) {
    if j == rows.len() {
        if residual.iter().all(|&x| x == 0) {
            out.push(EdgeMonomial(a.clone()));
        }
        return;
    }
    let (x, y) = rows[j];
    for k in 0..=residual[x].min(residual[y]) {
        // after its last edge a vertex must be fully covered
        if (last[x] == j && residual[x] != k) || (last[y] == j && residual[y] != k) {
            continue;
        }
        residual[x] -= k;
        residual[y] -= k;
        a[j] = k;
        fibre_dfs(rows, last, j + 1, residual, a, out);
        residual[x] += k;
        residual[y] += k;
    }
    a[j] = 0;
}

/// `β_{i,s}(K[G])` for `i = 0, 1, ...` (trailing zeros trimmed).
pub fn betti_via_koszul(g: &SimpleGraph, gb: &BinomialIdeal, s: &[u32], field: Field) -> Vec<usize> {
    let n = g.edge_count();
    assert!(n <= 64, "faces are 64-bit masks");
    let rows: Vec<(usize, usize)> = (0..n).map(|j| g.edge_rows(j)).collect();
    let mut last = vec![usize::MAX; g.vertex_count()];
    for (j, &(x, y)) in rows.iter().enumerate() {
        last[x] = j;
        last[y] = j;
    }
    let mut pieces = Pieces { g, gb, rows: rows.clone(), last, cache: HashMap::new() };

    // chains[i]: (F, standard monomial) pairs with |F| = i
    let mut chains: Vec<Vec<(Face, EdgeMonomial)>> = vec![Vec::new(); n + 1];
    let mut stack: Vec<(Face, usize, Vec<u32>)> = vec![(0, 0, s.to_vec())];
    while let Some((f, from, t)) = stack.pop() {
        for m in pieces.basis(&t) {
            chains[f.count_ones() as usize].push((f, m));
        }
        for j in from..n {
            let (x, y) = rows[j];
            if t[x] > 0 && t[y] > 0 {
                let mut t2 = t.clone();
                t2[x] -= 1;
                t2[y] -= 1;
                stack.push((f | 1 << j, j + 1, t2));
            }
        }
    }
    for c in chains.iter_mut() {
        c.sort();
    }
    let index: Vec<HashMap<(Face, EdgeMonomial), usize>> = chains
        .iter()
        .map(|c| c.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect())
        .collect();

    // d(m e_F) = Σ_k (-1)^k e_{j_k} m e_{F \ j_k}, with e_j m reduced
    let mut ranks = vec![0usize; n + 2];
    for i in 1..=n {
        let cols: Vec<SparseColumn> = chains[i]
            .iter()
            .map(|(f, m)| {
                let mut col: SparseColumn = labels(*f)
                    .iter()
                    .enumerate()
                    .map(|(k, &j)| {
                        let prod = gb.normal_form(&m.mul(&EdgeMonomial::variable(n, j))).expect("groebner basis");
                        let row = index[i - 1][&(*f & !(1u64 << j), prod)];
                        (row, if k % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        ranks[i] = rank(&cols, field);
    }
    let mut out: Vec<usize> = (0..=n).map(|i| chains[i].len() - ranks[i] - ranks[i + 1]).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}
